#include "hoctop/cli.hpp"

int main(int argc, char** argv) { return hoctop::cli_main(argc, argv); }
