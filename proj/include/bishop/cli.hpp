#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "bishop/expr.hpp"
#include "bishop/real.hpp"

namespace bishop {

/// A witness search ran out of budget. Says nothing about the truth of the claim.
class SemidecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Command { Eval, Cmp, Digits };

struct RunConfig {
    unsigned digits = 10;
    IndexSchedule budget = doubling_schedule(16);
    Command command = Command::Eval;
};

/// Builds the Real for an expression. Division and inv() search `cfg.budget`
/// for a witness that the divisor is apart from zero and throw
/// SemidecisionError naming the divisor when none turns up.
Real eval_expr(const Expr& e, const RunConfig& cfg);

/// "<fixed-point value> ± 1e-<digits>", within 10^-digits of x.
std::string format_decimal(const Real& x, unsigned digits);

namespace cli {

/// Exit codes of run().
inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kUnknown = 2;

/// Runs the calculator. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cli
}  // namespace bishop
