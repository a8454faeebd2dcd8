#include "qalcove/cli.hpp"

int main(int argc, char** argv) { return qalcove::cli::run(argc, argv); }
