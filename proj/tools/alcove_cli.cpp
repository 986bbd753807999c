#include "alcove/cli.hpp"

int main(int argc, char** argv) { return alcove::run_cli(argc, argv); }
