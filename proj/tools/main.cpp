#include "cli.hpp"

int main(int argc, char** argv) { return satqubo::run_cli(argc, argv); }
