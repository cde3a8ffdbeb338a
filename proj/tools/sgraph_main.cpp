#include "sgraph/cli_run.hpp"

int main(int argc, char** argv) { return sgraph::run_cli(argc, argv); }
