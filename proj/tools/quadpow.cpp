#include <iostream>

#include "quadpow/cli/commands.hpp"

int main(int argc, char** argv) {
  return quadpow::cli::run_cli({argv + 1, argv + argc}, std::cin, std::cout, std::cerr);
}
