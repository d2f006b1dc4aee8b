#include <iostream>
#include <string>
#include <vector>

#include "dompoly/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dompoly::cli::run(args, std::cout, std::cerr, dompoly::cli::Environment::from_process());
}
