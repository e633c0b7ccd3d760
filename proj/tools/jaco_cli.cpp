#include "jaco/cli.hpp"

int main(int argc, char **argv) { return jaco::cli::run(argc, argv); }
