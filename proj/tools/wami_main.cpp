#include "wami/cli.hpp"

int main(int argc, char** argv) { return wami::cli::run(argc, argv); }
