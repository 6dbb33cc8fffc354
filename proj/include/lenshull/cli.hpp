#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lenshull/group.hpp"

namespace lenshull {

// Exit codes: 0 success, 1 verification mismatch, 2 invalid or
// degenerate input.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv);

// Parses "num/den,num/den;..." into exact torus points.
std::vector<TorusPoint> parse_generators(const std::string& text);

}  // namespace lenshull
