#include "polysym/cli.hpp"

int main(int argc, char** argv) { return polysym::cli_main(argc, argv); }
