#include <string>
#include <vector>

#include "pwl/cli.hpp"

int main(int argc, char** argv) {
  return pwl::run_cli({argv + 1, argv + argc});
}
