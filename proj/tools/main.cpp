#include "aitv/cli_ops.hpp"

int main(int argc, char** argv) { return aitv::run_cli(argc, argv); }
