#include "cdlab/cli.hpp"

int main(int argc, char** argv) { return cdlab::run_cli(argc, argv); }
