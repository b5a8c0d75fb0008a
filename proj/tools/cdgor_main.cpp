#include "cli.hpp"

int main(int argc, char** argv) { return cdgor::cli::run(argc, argv); }
