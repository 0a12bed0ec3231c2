#include <cstdio>

int main() {
  std::puts("mvq: subcommands not wired up yet");
  return 2;
}
