#include <string>
#include <vector>

#include "mekr/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mekr::run_cli(args);
}
