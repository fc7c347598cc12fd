#include "cli.hpp"

int main(int argc, char** argv) { return platewave::cli_main(argc, argv); }
