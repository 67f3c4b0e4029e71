#pragma once

// STRIPS subset of PDDL: parsing, rendering, grounding and state
// transitions. Preconditions are conjunctions of positive atoms; effects
// are add/delete lists. :strips, :typing and :equality are the accepted
// requirement flags. All values are immutable once constructed and safe
// to share across threads.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "planmodulo/util/strings.hpp"

namespace planmodulo::pddl {

// ---------------------------------------------------------------------------
// Identifiers

namespace detail {

class Interner {
 public:
  static Interner& instance() {
    static Interner table;
    return table;
  }

  std::uint32_t intern(std::string_view text) {
    std::string lowered = to_lower(text);
    {
      std::shared_lock lock(mutex_);
      auto it = ids_.find(lowered);
      if (it != ids_.end()) return it->second;
    }
    std::unique_lock lock(mutex_);
    auto it = ids_.find(lowered);
    if (it != ids_.end()) return it->second;
    auto id = static_cast<std::uint32_t>(texts_.size());
    texts_.push_back(std::make_unique<std::string>(lowered));
    ids_.emplace(*texts_.back(), id);
    return id;
  }

  const std::string& text(std::uint32_t id) const {
    std::shared_lock lock(mutex_);
    return *texts_[id];
  }

 private:
  mutable std::shared_mutex mutex_;
  std::vector<std::unique_ptr<std::string>> texts_;
  std::unordered_map<std::string_view, std::uint32_t> ids_;
};

}  // namespace detail

// A case-normalized, interned name token. Equality is an integer compare;
// ordering is lexicographic on the text so sorted output is stable across
// runs regardless of interning order.
class Identifier {
 public:
  Identifier() : id_(empty_id()) {}
  static Identifier intern(std::string_view text) {
    return Identifier(detail::Interner::instance().intern(text));
  }

  const std::string& text() const { return detail::Interner::instance().text(id_); }
  std::uint32_t raw() const { return id_; }
  bool empty() const { return text().empty(); }
  bool is_variable() const {
    const std::string& t = text();
    return !t.empty() && t[0] == '?';
  }

  friend bool operator==(Identifier a, Identifier b) { return a.id_ == b.id_; }
  friend bool operator!=(Identifier a, Identifier b) { return a.id_ != b.id_; }
  friend bool operator<(Identifier a, Identifier b) {
    return a.id_ != b.id_ && a.text() < b.text();
  }

 private:
  explicit Identifier(std::uint32_t raw_id) : id_(raw_id) {}
  static std::uint32_t empty_id() {
    static const std::uint32_t eid = detail::Interner::instance().intern("");
    return eid;
  }
  std::uint32_t id_;
};

inline Identifier id(std::string_view text) { return Identifier::intern(text); }

// ---------------------------------------------------------------------------
// Atoms

struct Atom {
  Identifier predicate;
  std::vector<Identifier> args;

  Atom() = default;
  Atom(Identifier p, std::vector<Identifier> a) : predicate(p), args(std::move(a)) {}

  bool ground() const {
    return std::none_of(args.begin(), args.end(),
                        [](Identifier a) { return a.is_variable(); });
  }

  // "(clear c)" / "(handempty)"
  std::string text() const {
    std::string out = "(" + predicate.text();
    for (Identifier a : args) out += " " + a.text();
    out += ")";
    return out;
  }

  friend bool operator==(const Atom& a, const Atom& b) {
    return a.predicate == b.predicate && a.args == b.args;
  }
  friend bool operator!=(const Atom& a, const Atom& b) { return !(a == b); }
  friend bool operator<(const Atom& a, const Atom& b) { return a.text() < b.text(); }
};

struct AtomHash {
  std::size_t operator()(const Atom& a) const {
    std::size_t h = a.predicate.raw() * 1099511628211ULL;
    for (Identifier x : a.args) h = (h ^ x.raw()) * 1099511628211ULL;
    return h;
  }
};

inline Atom atom(std::string_view pred, std::initializer_list<std::string_view> args = {}) {
  std::vector<Identifier> v;
  for (auto a : args) v.push_back(id(a));
  return Atom(id(pred), std::move(v));
}

// ---------------------------------------------------------------------------
// Schemas, domains, problems

struct TypedName {
  Identifier name;
  std::optional<Identifier> type;  // absent when the source carried no annotation

  friend bool operator==(const TypedName& a, const TypedName& b) {
    return a.name == b.name && a.type == b.type;
  }
};

struct PredicateSignature {
  Identifier name;
  std::vector<TypedName> params;

  std::size_t arity() const { return params.size(); }
  friend bool operator==(const PredicateSignature& a, const PredicateSignature& b) {
    return a.name == b.name && a.params == b.params;
  }
};

struct ActionSchema {
  Identifier name;
  std::vector<TypedName> params;
  std::vector<Atom> precondition;  // positive atoms, declaration order
  std::vector<Atom> add_effects;
  std::vector<Atom> del_effects;

  friend bool operator==(const ActionSchema& a, const ActionSchema& b) {
    return a.name == b.name && a.params == b.params && a.precondition == b.precondition &&
           a.add_effects == b.add_effects && a.del_effects == b.del_effects;
  }
};

struct Domain {
  Identifier name;
  std::set<std::string> requirements;            // ":strips", ":typing", ":equality"
  std::vector<TypedName> types;                  // declared types (type - parent)
  std::vector<PredicateSignature> predicates;
  std::vector<ActionSchema> actions;

  const PredicateSignature* find_predicate(Identifier n) const {
    for (const auto& p : predicates)
      if (p.name == n) return &p;
    return nullptr;
  }
  const ActionSchema* find_action(Identifier n) const {
    for (const auto& a : actions)
      if (a.name == n) return &a;
    return nullptr;
  }

  // true when `t` equals `declared` or is a declared descendant of it;
  // the implicit universal type "object" accepts everything.
  bool type_matches(std::optional<Identifier> declared, std::optional<Identifier> t) const {
    static const Identifier object = id("object");
    Identifier want = declared.value_or(object);
    if (want == object) return true;
    Identifier have = t.value_or(object);
    while (true) {
      if (have == want) return true;
      const TypedName* entry = nullptr;
      for (const auto& ty : types)
        if (ty.name == have) entry = &ty;
      if (!entry || !entry->type) return false;
      have = *entry->type;
    }
  }

  friend bool operator==(const Domain& a, const Domain& b) {
    return a.name == b.name && a.requirements == b.requirements && a.types == b.types &&
           a.predicates == b.predicates && a.actions == b.actions;
  }
};

struct Problem {
  Identifier name;
  Identifier domain_name;
  std::vector<TypedName> objects;
  std::vector<Atom> init;  // ground, declaration order
  std::vector<Atom> goal;  // ground conjunction

  const TypedName* find_object(Identifier n) const {
    for (const auto& o : objects)
      if (o.name == n) return &o;
    return nullptr;
  }

  friend bool operator==(const Problem& a, const Problem& b) {
    return a.name == b.name && a.domain_name == b.domain_name && a.objects == b.objects &&
           a.init == b.init && a.goal == b.goal;
  }
};

// Closed-world state: a set of ground atoms, absent means false.
class State {
 public:
  State() = default;
  explicit State(std::vector<Atom> atoms) : atoms_(std::move(atoms)) { normalize(); }

  bool contains(const Atom& a) const {
    return std::binary_search(atoms_.begin(), atoms_.end(), a, less);
  }
  const std::vector<Atom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }

  void insert(const Atom& a) {
    auto it = std::lower_bound(atoms_.begin(), atoms_.end(), a, less);
    if (it == atoms_.end() || *it != a) atoms_.insert(it, a);
  }
  void erase(const Atom& a) {
    auto it = std::lower_bound(atoms_.begin(), atoms_.end(), a, less);
    if (it != atoms_.end() && *it == a) atoms_.erase(it);
  }

  friend bool operator==(const State& a, const State& b) { return a.atoms_ == b.atoms_; }

 private:
  static bool cmp_less(const Atom& a, const Atom& b) {
    if (a.predicate != b.predicate) return a.predicate < b.predicate;
    return std::lexicographical_compare(a.args.begin(), a.args.end(), b.args.begin(),
                                        b.args.end());
  }
  static constexpr auto less = &State::cmp_less;
  void normalize() {
    std::sort(atoms_.begin(), atoms_.end(), less);
    atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
  }
  std::vector<Atom> atoms_;
};

struct GroundAction {
  Identifier schema;
  std::vector<Identifier> args;
  std::vector<Atom> pre, add, del;

  // "stack b c" — the form the feedback templates use
  std::string text() const {
    std::string out = schema.text();
    for (Identifier a : args) out += " " + a.text();
    return out;
  }
  // "(stack b c)" — the answer-format convention
  std::string sexpr() const { return "(" + text() + ")"; }

  friend bool operator==(const GroundAction& a, const GroundAction& b) {
    return a.schema == b.schema && a.args == b.args;
  }
};

struct Plan {
  std::vector<GroundAction> steps;

  bool empty() const { return steps.empty(); }
  std::size_t size() const { return steps.size(); }
  friend bool operator==(const Plan& a, const Plan& b) { return a.steps == b.steps; }
};

// ---------------------------------------------------------------------------
// Errors

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, int line, int col)
      : std::runtime_error(msg + " (line " + std::to_string(line) + ", column " +
                           std::to_string(col) + ")"),
        line(line),
        col(col) {}
  int line, col;
};

struct InapplicableAction : std::runtime_error {
  InapplicableAction(const GroundAction& a, std::vector<Atom> unmet_atoms)
      : std::runtime_error("action not applicable: " + a.text()),
        action(a),
        unmet(std::move(unmet_atoms)) {}
  GroundAction action;
  std::vector<Atom> unmet;
};

// ---------------------------------------------------------------------------
// S-expression reader

namespace detail {

struct Sexpr {
  // leaf token when list is absent
  std::string token;
  std::optional<std::vector<Sexpr>> list;
  int line = 0, col = 0;

  bool is_list() const { return list.has_value(); }
  bool is_token() const { return !list.has_value(); }
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Sexpr read_all_one() {
    Sexpr e = read();
    skip_space();
    if (pos_ < text_.size())
      throw ParseError("trailing content after top-level form", line_, col_);
    return e;
  }

 private:
  Sexpr read() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", line_, col_);
    int l = line_, c = col_;
    if (peek() == '(') {
      advance();
      Sexpr e;
      e.list.emplace();
      e.line = l;
      e.col = c;
      while (true) {
        skip_space();
        if (pos_ >= text_.size()) throw ParseError("unclosed parenthesis", l, c);
        if (peek() == ')') {
          advance();
          return e;
        }
        e.list->push_back(read());
      }
    }
    if (peek() == ')') throw ParseError("unexpected ')'", l, c);
    Sexpr e;
    e.line = l;
    e.col = c;
    std::string tok;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(peek())) &&
           peek() != '(' && peek() != ')' && peek() != ';') {
      tok += static_cast<char>(std::tolower(static_cast<unsigned char>(peek())));
      advance();
    }
    e.token = std::move(tok);
    return e;
  }

  char peek() const { return text_[pos_]; }
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  void skip_space() {
    while (pos_ < text_.size()) {
      char ch = peek();
      if (ch == ';') {
        while (pos_ < text_.size() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        advance();
      } else {
        return;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

inline bool valid_name(std::string_view s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '-' || c == '_';
  });
}

// Parses "name name ... - type name ... - type ..." groups. Names without a
// trailing type keep an empty annotation.
inline std::vector<TypedName> parse_typed_list(const std::vector<Sexpr>& items,
                                               std::size_t begin, std::size_t end,
                                               bool names_are_variables) {
  std::vector<TypedName> out;
  std::vector<std::size_t> pending;
  for (std::size_t i = begin; i < end; ++i) {
    const Sexpr& e = items[i];
    if (!e.is_token()) throw ParseError("expected a name token", e.line, e.col);
    if (e.token == "-") {
      if (i + 1 >= end) throw ParseError("missing type after '-'", e.line, e.col);
      const Sexpr& ty = items[i + 1];
      if (!ty.is_token() || !valid_name(ty.token))
        throw ParseError("invalid type name", ty.line, ty.col);
      for (std::size_t k : pending) out[k].type = id(ty.token);
      pending.clear();
      ++i;
      continue;
    }
    std::string_view name = e.token;
    bool is_var = !name.empty() && name[0] == '?';
    if (names_are_variables != is_var)
      throw ParseError(names_are_variables ? "expected a ?variable" : "unexpected ?variable",
                       e.line, e.col);
    std::string_view bare = is_var ? name.substr(1) : name;
    if (!valid_name(bare)) throw ParseError("invalid name token: " + std::string(name), e.line, e.col);
    out.push_back(TypedName{id(name), std::nullopt});
    pending.push_back(out.size() - 1);
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Domain / problem parsing

namespace detail {

inline Atom parse_atom(const Sexpr& e) {
  if (!e.is_list() || e.list->empty() || !(*e.list)[0].is_token())
    throw ParseError("expected an atom", e.line, e.col);
  const std::string& pred = (*e.list)[0].token;
  if (pred == "=")
    throw ParseError("'=' atoms are not supported", e.line, e.col);
  if (!valid_name(pred)) throw ParseError("invalid predicate name: " + pred, e.line, e.col);
  std::vector<Identifier> args;
  for (std::size_t i = 1; i < e.list->size(); ++i) {
    const Sexpr& a = (*e.list)[i];
    if (!a.is_token()) throw ParseError("expected an argument token", a.line, a.col);
    args.push_back(id(a.token));
  }
  return Atom(id(pred), std::move(args));
}

inline std::vector<Atom> parse_conjunction(const Sexpr& e) {
  std::vector<Atom> out;
  if (e.is_list() && !e.list->empty() && (*e.list)[0].is_token() && (*e.list)[0].token == "and") {
    for (std::size_t i = 1; i < e.list->size(); ++i) out.push_back(parse_atom((*e.list)[i]));
  } else {
    out.push_back(parse_atom(e));
  }
  return out;
}

inline void check_atom_against_domain(const Domain& d, const Atom& a, int line, int col) {
  const PredicateSignature* sig = d.find_predicate(a.predicate);
  if (!sig)
    throw ParseError("undeclared predicate: " + a.predicate.text(), line, col);
  if (sig->arity() != a.args.size())
    throw ParseError("arity mismatch for predicate " + a.predicate.text() + ": expected " +
                         std::to_string(sig->arity()) + ", got " + std::to_string(a.args.size()),
                     line, col);
}

}  // namespace detail

inline Domain parse_domain(std::string_view text) {
  using detail::Sexpr;
  Sexpr root = detail::Lexer(text).read_all_one();
  if (!root.is_list() || root.list->size() < 2 || !(*root.list)[0].is_token() ||
      (*root.list)[0].token != "define")
    throw ParseError("expected (define (domain ...) ...)", root.line, root.col);
  const auto& body = *root.list;
  const Sexpr& head = body[1];
  if (!head.is_list() || head.list->size() != 2 || (*head.list)[0].token != "domain")
    throw ParseError("expected (domain NAME)", head.line, head.col);

  Domain d;
  d.name = id((*head.list)[1].token);

  for (std::size_t i = 2; i < body.size(); ++i) {
    const Sexpr& sect = body[i];
    if (!sect.is_list() || sect.list->empty() || !(*sect.list)[0].is_token())
      throw ParseError("expected a domain section", sect.line, sect.col);
    const std::string& kind = (*sect.list)[0].token;
    const auto& items = *sect.list;

    if (kind == ":requirements") {
      for (std::size_t k = 1; k < items.size(); ++k) {
        const std::string& flag = items[k].token;
        if (flag != ":strips" && flag != ":typing" && flag != ":equality")
          throw ParseError("unsupported requirement flag: " + flag, items[k].line, items[k].col);
        d.requirements.insert(flag);
      }
    } else if (kind == ":types") {
      d.types = detail::parse_typed_list(items, 1, items.size(), false);
    } else if (kind == ":predicates") {
      for (std::size_t k = 1; k < items.size(); ++k) {
        const Sexpr& p = items[k];
        if (!p.is_list() || p.list->empty() || !(*p.list)[0].is_token())
          throw ParseError("expected a predicate declaration", p.line, p.col);
        PredicateSignature sig;
        sig.name = id((*p.list)[0].token);
        if (!detail::valid_name(sig.name.text()))
          throw ParseError("invalid predicate name: " + sig.name.text(), p.line, p.col);
        if (d.find_predicate(sig.name))
          throw ParseError("duplicate predicate: " + sig.name.text(), p.line, p.col);
        sig.params = detail::parse_typed_list(*p.list, 1, p.list->size(), true);
        d.predicates.push_back(std::move(sig));
      }
    } else if (kind == ":action") {
      if (items.size() < 2 || !items[1].is_token())
        throw ParseError("expected an action name", sect.line, sect.col);
      ActionSchema a;
      a.name = id(items[1].token);
      if (!detail::valid_name(a.name.text()))
        throw ParseError("invalid action name: " + a.name.text(), items[1].line, items[1].col);
      if (d.find_action(a.name))
        throw ParseError("duplicate action name: " + a.name.text(), items[1].line, items[1].col);
      for (std::size_t k = 2; k + 1 < items.size(); k += 2) {
        if (!items[k].is_token())
          throw ParseError("expected :parameters/:precondition/:effect", items[k].line,
                           items[k].col);
        const std::string& key = items[k].token;
        const Sexpr& value = items[k + 1];
        if (key == ":parameters") {
          if (!value.is_list()) throw ParseError("expected a parameter list", value.line, value.col);
          a.params = detail::parse_typed_list(*value.list, 0, value.list->size(), true);
        } else if (key == ":precondition") {
          a.precondition = detail::parse_conjunction(value);
        } else if (key == ":effect") {
          std::vector<const Sexpr*> effects;
          if (value.is_list() && !value.list->empty() && (*value.list)[0].is_token() &&
              (*value.list)[0].token == "and") {
            for (std::size_t m = 1; m < value.list->size(); ++m) effects.push_back(&(*value.list)[m]);
          } else {
            effects.push_back(&value);
          }
          for (const Sexpr* eff : effects) {
            if (eff->is_list() && !eff->list->empty() && (*eff->list)[0].is_token() &&
                (*eff->list)[0].token == "not") {
              if (eff->list->size() != 2)
                throw ParseError("expected (not ATOM)", eff->line, eff->col);
              a.del_effects.push_back(detail::parse_atom((*eff->list)[1]));
            } else {
              a.add_effects.push_back(detail::parse_atom(*eff));
            }
          }
        } else {
          throw ParseError("unexpected action section: " + key, items[k].line, items[k].col);
        }
      }
      d.actions.push_back(std::move(a));
    } else {
      throw ParseError("unsupported domain section: " + kind, sect.line, sect.col);
    }
  }

  // Consistency: used predicates declared with matching arity, variables bound,
  // add/del lists syntactically disjoint.
  for (const ActionSchema& a : d.actions) {
    auto check = [&](const Atom& at) {
      detail::check_atom_against_domain(d, at, 0, 0);
      for (Identifier arg : at.args) {
        if (!arg.is_variable()) continue;
        bool bound = std::any_of(a.params.begin(), a.params.end(),
                                 [&](const TypedName& p) { return p.name == arg; });
        if (!bound)
          throw ParseError("unbound variable " + arg.text() + " in action " + a.name.text(), 0, 0);
      }
    };
    for (const Atom& at : a.precondition) check(at);
    for (const Atom& at : a.add_effects) check(at);
    for (const Atom& at : a.del_effects) check(at);
    for (const Atom& at : a.add_effects)
      for (const Atom& dt : a.del_effects)
        if (at == dt)
          throw ParseError("atom both added and deleted in action " + a.name.text(), 0, 0);
  }
  return d;
}

inline Problem parse_problem(std::string_view text, const Domain& domain) {
  using detail::Sexpr;
  Sexpr root = detail::Lexer(text).read_all_one();
  if (!root.is_list() || root.list->size() < 2 || !(*root.list)[0].is_token() ||
      (*root.list)[0].token != "define")
    throw ParseError("expected (define (problem ...) ...)", root.line, root.col);
  const auto& body = *root.list;
  const Sexpr& head = body[1];
  if (!head.is_list() || head.list->size() != 2 || (*head.list)[0].token != "problem")
    throw ParseError("expected (problem NAME)", head.line, head.col);

  Problem p;
  p.name = id((*head.list)[1].token);

  for (std::size_t i = 2; i < body.size(); ++i) {
    const Sexpr& sect = body[i];
    if (!sect.is_list() || sect.list->empty() || !(*sect.list)[0].is_token())
      throw ParseError("expected a problem section", sect.line, sect.col);
    const std::string& kind = (*sect.list)[0].token;
    const auto& items = *sect.list;

    if (kind == ":domain") {
      if (items.size() != 2 || !items[1].is_token())
        throw ParseError("expected (:domain NAME)", sect.line, sect.col);
      p.domain_name = id(items[1].token);
      if (p.domain_name != domain.name)
        throw ParseError("problem references domain '" + p.domain_name.text() +
                             "' but got '" + domain.name.text() + "'",
                         sect.line, sect.col);
    } else if (kind == ":objects") {
      p.objects = detail::parse_typed_list(items, 1, items.size(), false);
    } else if (kind == ":init") {
      for (std::size_t k = 1; k < items.size(); ++k)
        p.init.push_back(detail::parse_atom(items[k]));
    } else if (kind == ":goal") {
      if (items.size() != 2) throw ParseError("expected a single goal form", sect.line, sect.col);
      p.goal = detail::parse_conjunction(items[1]);
    } else {
      throw ParseError("unsupported problem section: " + kind, sect.line, sect.col);
    }
  }

  if (p.domain_name.empty())
    throw ParseError("problem is missing a (:domain ...) section", root.line, root.col);

  auto check_ground_atom = [&](const Atom& a, const char* where) {
    detail::check_atom_against_domain(domain, a, 0, 0);
    for (Identifier arg : a.args) {
      if (arg.is_variable())
        throw ParseError(std::string(where) + " atom is not ground: " + a.text(), 0, 0);
      if (!p.find_object(arg))
        throw ParseError("undeclared object '" + arg.text() + "' in " + where + " atom " +
                             a.text(),
                         0, 0);
    }
  };
  for (const Atom& a : p.init) check_ground_atom(a, "init");
  for (const Atom& a : p.goal) check_ground_atom(a, "goal");
  return p;
}

// ---------------------------------------------------------------------------
// Rendering (canonical formatting; parse . render . parse is a fixed point)

namespace detail {

inline std::string render_typed_list(const std::vector<TypedName>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += " ";
    out += names[i].name.text();
    // group run-length: emit "- type" when the next entry has a different annotation
    bool boundary = (i + 1 == names.size()) || (names[i + 1].type != names[i].type);
    if (names[i].type && boundary) out += " - " + names[i].type->text();
  }
  return out;
}

}  // namespace detail

inline std::string render(const Domain& d) {
  std::string out = "(define (domain " + d.name.text() + ")\n";
  if (!d.requirements.empty()) {
    out += "  (:requirements";
    for (const char* flag : {":strips", ":typing", ":equality"})
      if (d.requirements.count(flag)) out += std::string(" ") + flag;
    out += ")\n";
  }
  if (!d.types.empty()) out += "  (:types " + detail::render_typed_list(d.types) + ")\n";
  if (!d.predicates.empty()) {
    out += "  (:predicates\n";
    for (const auto& p : d.predicates) {
      out += "    (" + p.name.text();
      if (!p.params.empty()) out += " " + detail::render_typed_list(p.params);
      out += ")\n";
    }
    out += "  )\n";
  }
  for (const auto& a : d.actions) {
    out += "  (:action " + a.name.text() + "\n";
    out += "    :parameters (" + detail::render_typed_list(a.params) + ")\n";
    out += "    :precondition (and";
    for (const Atom& at : a.precondition) out += " " + at.text();
    out += ")\n";
    out += "    :effect (and";
    for (const Atom& at : a.add_effects) out += " " + at.text();
    for (const Atom& at : a.del_effects) out += " (not " + at.text() + ")";
    out += ")\n";
    out += "  )\n";
  }
  out += ")\n";
  return out;
}

inline std::string render(const Problem& p) {
  std::string out = "(define (problem " + p.name.text() + ")\n";
  out += "  (:domain " + p.domain_name.text() + ")\n";
  out += "  (:objects " + detail::render_typed_list(p.objects) + ")\n";
  out += "  (:init\n";
  for (const Atom& a : p.init) out += "    " + a.text() + "\n";
  out += "  )\n";
  out += "  (:goal\n    (and\n";
  for (const Atom& a : p.goal) out += "      " + a.text() + "\n";
  out += "    )\n  )\n)\n";
  return out;
}

inline std::string render(const Plan& plan) {
  std::string out;
  for (std::size_t i = 0; i < plan.steps.size(); ++i) {
    if (i) out += "\n";
    out += plan.steps[i].sexpr();
  }
  return out;
}

// Strict plan-file reader: one "(name obj...)" per non-empty line. Steps are
// not resolved against any domain here; the validator decides whether a name
// is a known action.
inline Plan parse_plan(std::string_view text) {
  Plan plan;
  int line_no = 0;
  for (const std::string& raw : split_lines(text)) {
    ++line_no;
    std::string line = trim(raw);
    if (line.empty()) continue;
    if (line.front() != '(' || line.back() != ')')
      throw ParseError("expected (action obj...) on plan line", line_no, 1);
    std::vector<std::string> toks = split_ws(line.substr(1, line.size() - 2));
    if (toks.empty()) throw ParseError("empty plan step", line_no, 1);
    GroundAction ga;
    ga.schema = id(toks[0]);
    for (std::size_t i = 1; i < toks.size(); ++i) ga.args.push_back(id(toks[i]));
    plan.steps.push_back(std::move(ga));
  }
  return plan;
}

// ---------------------------------------------------------------------------
// Grounding and state transitions

inline GroundAction instantiate(const ActionSchema& schema,
                                const std::vector<Identifier>& args) {
  GroundAction ga;
  ga.schema = schema.name;
  ga.args = args;
  std::unordered_map<std::uint32_t, Identifier> binding;
  for (std::size_t i = 0; i < schema.params.size(); ++i)
    binding.emplace(schema.params[i].name.raw(), args[i]);
  auto subst = [&](const Atom& a) {
    Atom out = a;
    for (Identifier& arg : out.args) {
      auto it = binding.find(arg.raw());
      if (it != binding.end()) arg = it->second;
    }
    return out;
  };
  for (const Atom& a : schema.precondition) ga.pre.push_back(subst(a));
  for (const Atom& a : schema.add_effects) ga.add.push_back(subst(a));
  for (const Atom& a : schema.del_effects) ga.del.push_back(subst(a));
  return ga;
}

// Every type-consistent substitution, exactly once, in deterministic order:
// actions in declaration order, argument tuples in object declaration order.
// Distinct-object substitution is not enforced; (stack a a) exists and is
// simply never applicable.
inline std::vector<GroundAction> ground_actions(const Domain& domain, const Problem& problem) {
  std::vector<GroundAction> out;
  for (const ActionSchema& schema : domain.actions) {
    std::vector<std::vector<Identifier>> candidates(schema.params.size());
    for (std::size_t i = 0; i < schema.params.size(); ++i)
      for (const TypedName& obj : problem.objects)
        if (domain.type_matches(schema.params[i].type, obj.type))
          candidates[i].push_back(obj.name);

    std::vector<Identifier> tuple(schema.params.size());
    auto emit = [&](auto&& self, std::size_t depth) -> void {
      if (depth == schema.params.size()) {
        out.push_back(instantiate(schema, tuple));
        return;
      }
      for (Identifier obj : candidates[depth]) {
        tuple[depth] = obj;
        self(self, depth + 1);
      }
    };
    emit(emit, 0);
  }
  return out;
}

inline std::vector<Atom> unmet_preconditions(const State& state, const GroundAction& action) {
  std::vector<Atom> unmet;
  for (const Atom& a : action.pre)
    if (!state.contains(a)) unmet.push_back(a);
  std::sort(unmet.begin(), unmet.end());
  return unmet;
}

inline bool applicable(const State& state, const GroundAction& action) {
  return std::all_of(action.pre.begin(), action.pre.end(),
                     [&](const Atom& a) { return state.contains(a); });
}

inline State apply(const State& state, const GroundAction& action) {
  std::vector<Atom> unmet = unmet_preconditions(state, action);
  if (!unmet.empty()) throw InapplicableAction(action, std::move(unmet));
  State next = state;
  for (const Atom& a : action.del) next.erase(a);
  for (const Atom& a : action.add) next.insert(a);
  return next;
}

inline bool satisfies(const State& state, const std::vector<Atom>& goal) {
  return std::all_of(goal.begin(), goal.end(),
                     [&](const Atom& a) { return state.contains(a); });
}

inline State initial_state(const Problem& p) { return State(p.init); }

}  // namespace planmodulo::pddl
