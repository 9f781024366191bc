#include "cli.hpp"

int main(int argc, char **argv) { return powerchord::cli::run_cli(argc, argv); }
