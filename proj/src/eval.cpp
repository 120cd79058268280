#include "bishop/cli.hpp"

#include "bishop/seq.hpp"

namespace bishop {

namespace {

Real reciprocal(const Real& divisor, const std::string& text, const RunConfig& cfg) {
    auto w = lt_search(real_from_rat(Rat(0)), real_abs(divisor), cfg.budget);
    if (!w) throw SemidecisionError("cannot verify divisor apart from zero: " + text);
    return real_inv(divisor, apartness_from_lt(divisor, *w));
}

}  // namespace

Real eval_expr(const Expr& e, const RunConfig& cfg) {
    auto arg = [&](std::size_t i) { return eval_expr(e.args.at(i), cfg); };
    switch (e.kind) {
        case Expr::Kind::Literal: return real_from_rat(e.value);
        case Expr::Kind::E: return exp_rational(Rat(1));
        case Expr::Kind::Exp: return exp_rational(e.value);
        case Expr::Kind::Add: return real_add(arg(0), arg(1));
        case Expr::Kind::Sub: return real_sub(arg(0), arg(1));
        case Expr::Kind::Mul: return real_mul(arg(0), arg(1));
        case Expr::Kind::Div: return real_mul(arg(0), reciprocal(arg(1), e.args[1].text, cfg));
        case Expr::Kind::Neg: return real_neg(arg(0));
        case Expr::Kind::Abs: return real_abs(arg(0));
        case Expr::Kind::Max: return real_max(arg(0), arg(1));
        case Expr::Kind::Min: return real_min(arg(0), arg(1));
        case Expr::Kind::Inv: return reciprocal(arg(0), e.args[0].text, cfg);
    }
    throw std::logic_error("eval_expr: unknown node kind");
}

std::string format_decimal(const Real& x, unsigned digits) {
    if (digits == 0) throw DomainError("format_decimal needs at least one digit");
    const auto d = static_cast<long>(digits);
    // Half a unit from the approximant, half a unit from rounding.
    Rat q = approx_eps(x, pow10(-d) / Rat(2));
    Rat scaled = rat_abs(q) * pow10(d);
    BigInt units = rat_floor(scaled + Rat(BigInt(1), BigInt(2)));  // ties away from zero

    std::string body = units.get_str();
    if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
    body.insert(body.size() - digits, 1, '.');
    std::string out = (q.sign() < 0 && units != 0) ? "-" : "";
    out += body;
    out += " ± 1e-" + std::to_string(digits);
    return out;
}

}  // namespace bishop
