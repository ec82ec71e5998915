#include <iostream>
#include <string>
#include <vector>

#include <kissing/cli.hpp>

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return kissing::run_cli(args, std::cout, std::cerr);
}
