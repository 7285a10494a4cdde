#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hampack::cli {

/// Exit codes: 0 success, 1 failed verification, 2 usage, input or I/O error.
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err);

int main(int argc, char **argv);

}  // namespace hampack::cli
