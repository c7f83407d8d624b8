#include "chow/cli.hpp"

int main(int argc, char** argv) { return chow::cli_main(argc, argv); }
