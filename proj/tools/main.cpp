#include <cstdlib>
#include <iostream>

#include <unistd.h>

#include "cli.hpp"

int main(int argc, char** argv) {
  homspace::cli::Environment env;
  env.stdout_is_tty = ::isatty(STDOUT_FILENO) != 0;
  if (const char* cap = std::getenv("HOMSPACE_MAX_RANK")) env.max_rank_override = cap;

  std::ios::sync_with_stdio(false);
  const std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return homspace::cli::run(args, std::cout, std::cerr, env);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return homspace::cli::kExitFailed;
  }
}
