#include "lenshull/cli.hpp"

int main(int argc, char** argv) { return lenshull::run_cli(argc, argv); }
