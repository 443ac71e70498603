#include <cstdlib>
#include <iostream>
#include <unistd.h>

#include "cli.hpp"

int main(int argc, char** argv) {
  hlineq::cli::Environment env;
  env.stdout_is_tty = isatty(STDOUT_FILENO) != 0;
  if (const char* t = std::getenv("HLINEQ_THREADS")) env.threads = t;
  return hlineq::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr, env);
}
