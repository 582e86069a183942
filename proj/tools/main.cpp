#include "summandlab/cli.hpp"

int main(int argc, char** argv) { return summandlab::cli::run_main(argc, argv); }
