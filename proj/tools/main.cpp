#include "kmdecomp/cli.hpp"

int main(int argc, char** argv) { return kmdecomp::run_cli(argc, argv); }
