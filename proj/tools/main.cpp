#include "obsroute/cli.hpp"

int main(int argc, char** argv) { return obsroute::cli_dispatch(argc, argv); }
