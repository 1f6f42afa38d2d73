#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace prelie {

// Exit codes: 0 pass, 1 law failure (or no search hits), 2 usage/parse/validation error.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

// "ExBialgII" -> "ex_bialg_II"
std::string fixture_file_stem(const std::string &name);

} // namespace prelie
