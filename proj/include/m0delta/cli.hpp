#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "m0delta/moduli.hpp"

namespace m0delta::cli {

// Entry point behind the m0delta binary. args excludes the program name.
// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Betti table serializations. CSV is long format with header "n,i,a";
// JSON is an object keyed by n whose values list a_{n,i} by i as decimal
// strings. Both parse back to exactly the table that was written.
std::string betti_to_text(const BettiTable& table);
std::string betti_to_csv(const BettiTable& table);
BettiTable betti_from_csv(std::string_view text);
std::string betti_to_json(const BettiTable& table);
BettiTable betti_from_json(std::string_view text);

}  // namespace m0delta::cli
