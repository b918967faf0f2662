#include <iostream>
#include <string>
#include <vector>

#include "tfed/driver.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tfed::run(args, std::cout, std::cerr);
}
