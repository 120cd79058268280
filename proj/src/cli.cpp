#include "bishop/cli.hpp"

#include <algorithm>
#include <ostream>

#include <CLI11.hpp>

namespace bishop::cli {

namespace {

struct Options {
    std::string expr;
    std::string lhs;
    std::string rhs;
    std::string eps;
    unsigned digits = 10;
    unsigned budget = 16;
};

void add_budget(CLI::App* cmd, Options& o) {
    cmd->add_option("--budget", o.budget, "Witness search schedule 1, 2, 4, ..., 2^B")
        ->capture_default_str()
        ->check(CLI::Range(0u, 4096u));
}

void add_digits(CLI::App* cmd, Options& o) {
    cmd->add_option("--digits", o.digits, "Fractional digits to print")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
}

int execute(Command command, const Options& o, std::ostream& out) {
    RunConfig cfg;
    cfg.command = command;
    cfg.digits = o.digits;
    cfg.budget = doubling_schedule(o.budget);
    switch (command) {
        case Command::Eval:
        case Command::Digits:
            out << format_decimal(eval_expr(parse_expr(o.expr), cfg), cfg.digits) << '\n';
            return kOk;
        case Command::Cmp: {
            Rat eps = parse_rat(o.eps);
            if (eps.sign() <= 0) throw DomainError("--eps must be positive");
            Real x = eval_expr(parse_expr(o.lhs), cfg);
            Real y = eval_expr(parse_expr(o.rhs), cfg);
            out << (approx_cmp(x, y, eps) == CmpResult::Left ? "LEFT: x < y + eps" : "RIGHT: y < x + eps") << '\n';
            return kOk;
        }
    }
    return kInputError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact real calculator: every printed digit carries a proven error bound.", "bishop"};
    app.require_subcommand(1, 1);
    Options o;

    auto* eval = app.add_subcommand("eval", "Evaluate an expression to --digits places");
    eval->add_option("expr", o.expr, "Arithmetic expression")->required();
    add_digits(eval, o);
    add_budget(eval, o);

    auto* cmp = app.add_subcommand("cmp", "Decide x < y + eps or y < x + eps");
    cmp->add_option("x", o.lhs, "Left expression")->required();
    cmp->add_option("y", o.rhs, "Right expression")->required();
    cmp->add_option("--eps", o.eps, "Positive rational tolerance")->required();
    add_budget(cmp, o);

    auto* digits = app.add_subcommand("digits", "Print a named constant such as e");
    digits->add_option("name", o.expr, "Constant or expression")->required();
    add_digits(digits, o);
    add_budget(digits, o);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        if (code == 0) return kOk;
        err << app.help();
        return kInputError;
    }

    Command command = cmp->parsed() ? Command::Cmp : digits->parsed() ? Command::Digits : Command::Eval;
    try {
        return execute(command, o, out);
    } catch (const SemidecisionError& e) {
        err << "error: " << e.what() << '\n';
        return kUnknown;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
}

}  // namespace bishop::cli
