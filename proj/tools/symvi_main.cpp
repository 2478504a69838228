#include "symvi/cli.hpp"

int main(int argc, char** argv) { return symvi::cli::run(argc, argv); }
