#include "diffest/cli.hpp"

int main(int argc, char** argv) {
  return diffest::cli::main_entry(argc, argv);
}
