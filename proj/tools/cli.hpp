#ifndef COTZETA_TOOLS_CLI_HPP
#define COTZETA_TOOLS_CLI_HPP

#include <cotzeta/quad.hpp>
#include <cotzeta/modular.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace cotzeta::cli
{

enum ExitCode : int { exit_ok = 0, exit_failed = 1, exit_input = 2 };

// "sqrt:D", "quad:P,Q,R,D" for (P + Q sqrt D)/R, or "golden".
QuadElem parse_alpha(const std::string &text);

// "a,b,c,d"; determinant 1 and c > 0.
UniMat parse_matrix(const std::string &text);

// Comma separated positive integers; the empty string gives no entries.
std::vector<long> parse_grid(const std::string &text);

// args excludes the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace cotzeta::cli

#endif
