#include "eqm/cli.hpp"

int main(int argc, char** argv) { return eqm::cli::run(argc, argv); }
