#include "bol/cli.hpp"

int main(int argc, char **argv) { return bol::cli::run(argc, argv); }
