#include "fml/cli.hpp"

int main(int argc, char** argv) { return fml::cli_run(argc, argv); }
