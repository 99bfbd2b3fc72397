#include "cli.hpp"

int main(int argc, char** argv) { return tcyc::cli::run(argc, argv); }
