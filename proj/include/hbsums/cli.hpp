#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hbsums/exactnum.hpp"

namespace hbsums::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kPrecondition = 1;
inline constexpr int kPrecision = 2;
inline constexpr int kCheckFailed = 3;

/// Runs one command line (without the program name). Results go to `out`
/// (or the --out file), one-line diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// q given as "1+p^M", "1+<p>^M", base-p digits "d0,d1,..." (least
/// significant first) or a plain rational.
Rational parse_q(const std::string& text, long p);

/// "3,5,7" or "{3,5,7}".
std::vector<long> parse_prime_set(const std::string& text);

}  // namespace hbsums::cli
