#include <cstdio>

int main() {
  std::puts("planmodulo: command-line surface not wired up yet");
  return 1;
}
