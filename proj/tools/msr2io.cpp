#include <cstdio>

int main(int argc, char** argv) {
  (void)argc;
  (void)argv;
  std::fprintf(stderr, "msr2io: not wired up yet\n");
  return 2;
}
