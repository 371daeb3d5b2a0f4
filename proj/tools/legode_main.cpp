#include "legode/cli.hpp"

int main(int argc, char** argv) { return legode::cli_run(argc, argv); }
