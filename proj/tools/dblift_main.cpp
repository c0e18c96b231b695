// Command-line front end.  Subcommands land here as the library fills
// out; until then this is a stub that reports usage.

#include <cstdio>

int main(int argc, char** argv) {
  (void)argc;
  (void)argv;
  std::fprintf(stderr, "dblift: no subcommands wired up yet\n");
  return 2;
}
