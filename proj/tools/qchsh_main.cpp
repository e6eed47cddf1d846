#include <iostream>
#include <string>
#include <vector>

#include "qchsh/cli.hpp"

int main(int argc, char** argv) {
  return qchsh::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
