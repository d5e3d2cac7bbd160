#include "cosets/cli.hpp"

int main(int argc, char** argv) { return cosets::cli::run(argc, argv); }
