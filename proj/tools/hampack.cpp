#include "hampack/cli.hpp"

int main(int argc, char **argv) { return hampack::cli::main(argc, argv); }
