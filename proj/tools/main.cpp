#include "qkernel/cli.hpp"

int main(int argc, char** argv) { return qkernel::run_cli(argc, argv); }
