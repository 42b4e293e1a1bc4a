#include "hedgeprop/cli.hpp"

int main(int argc, char** argv) { return hedgeprop::run_cli(argc, argv); }
