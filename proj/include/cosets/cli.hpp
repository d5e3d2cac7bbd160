#pragma once

#include <string>
#include <vector>

namespace cosets::cli {

/// Entry point of the coset-spectra tool. Exit codes:
///   0  report written
///   1  an asserted inequality or identity was violated
///   2  usage or input error
int run(const std::vector<std::string>& args);
int run(int argc, char** argv);

}  // namespace cosets::cli
