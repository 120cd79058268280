#include "bishop/expr.hpp"

#include <cctype>

namespace bishop {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    Expr parse() {
        Expr e = sum();
        skip_space();
        if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, pos_); }

    void skip_space() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    std::string slice(std::size_t from) const {
        std::string_view s = src_.substr(from, pos_ - from);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return std::string(s);
    }

    static Expr node(Expr::Kind kind, std::vector<Expr> args, std::string text) {
        Expr e;
        e.kind = kind;
        e.args = std::move(args);
        e.text = std::move(text);
        return e;
    }

    Expr sum() {
        skip_space();
        std::size_t start = pos_;
        Expr lhs = product();
        for (;;) {
            Expr::Kind kind;
            if (accept('+')) {
                kind = Expr::Kind::Add;
            } else if (accept('-')) {
                kind = Expr::Kind::Sub;
            } else {
                return lhs;
            }
            Expr rhs = product();
            lhs = node(kind, {std::move(lhs), std::move(rhs)}, slice(start));
        }
    }

    Expr product() {
        skip_space();
        std::size_t start = pos_;
        Expr lhs = unary();
        for (;;) {
            Expr::Kind kind;
            if (accept('*')) {
                kind = Expr::Kind::Mul;
            } else if (accept('/')) {
                kind = Expr::Kind::Div;
            } else {
                return lhs;
            }
            Expr rhs = unary();
            lhs = node(kind, {std::move(lhs), std::move(rhs)}, slice(start));
        }
    }

    Expr unary() {
        skip_space();
        std::size_t start = pos_;
        if (accept('-')) {
            Expr operand = unary();
            return node(Expr::Kind::Neg, {std::move(operand)}, slice(start));
        }
        return primary();
    }

    // Integer, decimal, or digits '/' digits with no spaces.
    Rat number() {
        std::size_t start = pos_;
        while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
        if (pos_ < src_.size() && src_[pos_] == '.') {
            ++pos_;
            while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
            if (pos_ - start == 1) fail("malformed number");
            return parse_rat(src_.substr(start, pos_ - start));
        }
        std::size_t whole_end = pos_;
        if (pos_ + 1 < src_.size() && src_[pos_] == '/' && is_digit(src_[pos_ + 1])) {
            std::size_t q = pos_ + 1;
            while (q < src_.size() && is_digit(src_[q])) ++q;
            // "2/1.5" is 2 divided by 1.5, not the rational 2/1 followed by ".5".
            if (q == src_.size() || src_[q] != '.') {
                std::string_view lit = src_.substr(start, q - start);
                try {
                    Rat r = parse_rat(lit);
                    pos_ = q;
                    return r;
                } catch (const DomainError&) {
                    fail("rational literal with zero denominator");
                }
            }
        }
        return parse_rat(src_.substr(start, whole_end - start));
    }

    std::string identifier() {
        std::size_t start = pos_;
        while (pos_ < src_.size() && is_alpha(src_[pos_])) ++pos_;
        return std::string(src_.substr(start, pos_ - start));
    }

    Expr primary() {
        skip_space();
        std::size_t start = pos_;
        if (pos_ >= src_.size()) fail("unexpected end of input");
        char c = src_[pos_];
        if (is_digit(c) || c == '.') {
            Expr e;
            e.kind = Expr::Kind::Literal;
            e.value = number();
            e.text = slice(start);
            return e;
        }
        if (c == '(') {
            ++pos_;
            Expr inner = sum();
            expect(')');
            return inner;
        }
        if (!is_alpha(c)) fail("unexpected '" + std::string(1, c) + "'");

        std::string name = identifier();
        if (name == "e") return node(Expr::Kind::E, {}, "e");
        if (name == "exp") return exp_call(start);

        Expr::Kind kind;
        std::size_t arity = 1;
        if (name == "abs") {
            kind = Expr::Kind::Abs;
        } else if (name == "inv") {
            kind = Expr::Kind::Inv;
        } else if (name == "max") {
            kind = Expr::Kind::Max;
            arity = 2;
        } else if (name == "min") {
            kind = Expr::Kind::Min;
            arity = 2;
        } else {
            pos_ = start;
            fail("unknown name '" + name + "'");
        }
        expect('(');
        std::vector<Expr> args;
        args.push_back(sum());
        for (std::size_t i = 1; i < arity; ++i) {
            expect(',');
            args.push_back(sum());
        }
        expect(')');
        return node(kind, std::move(args), slice(start));
    }

    Expr exp_call(std::size_t start) {
        expect('(');
        skip_space();
        std::size_t arg_start = pos_;
        bool negative = accept('-');
        skip_space();
        Rat value;
        if (pos_ < src_.size() && (is_digit(src_[pos_]) || src_[pos_] == '.')) {
            value = number();
        } else {
            throw UnsupportedArgument("exp() takes a rational or decimal literal");
        }
        skip_space();
        if (pos_ < src_.size() && src_[pos_] != ')')
            throw UnsupportedArgument("exp() takes a rational or decimal literal, got '" +
                                      std::string(src_.substr(arg_start, src_.find(')', pos_) - arg_start)) + "'");
        expect(')');
        Expr e = node(Expr::Kind::Exp, {}, slice(start));
        e.value = negative ? -value : value;
        return e;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

void render(const Expr& e, std::string& out) {
    auto call = [&](const char* name) {
        out += name;
        out += '(';
        for (std::size_t i = 0; i < e.args.size(); ++i) {
            if (i) out += ", ";
            render(e.args[i], out);
        }
        out += ')';
    };
    switch (e.kind) {
        case Expr::Kind::Literal: {
            Rat r = rat_reduce(e.value);
            out += r.den() == 1 ? "int " + r.num().get_str() : "rat " + to_string(r);
            break;
        }
        case Expr::Kind::E: out += "e"; break;
        case Expr::Kind::Exp: out += "exp(rat " + to_string(e.value) + ")"; break;
        case Expr::Kind::Add: call("add"); break;
        case Expr::Kind::Sub: call("sub"); break;
        case Expr::Kind::Mul: call("mul"); break;
        case Expr::Kind::Div: call("div"); break;
        case Expr::Kind::Neg: call("neg"); break;
        case Expr::Kind::Abs: call("abs"); break;
        case Expr::Kind::Max: call("max"); break;
        case Expr::Kind::Min: call("min"); break;
        case Expr::Kind::Inv: call("inv"); break;
    }
}

}  // namespace

Expr parse_expr(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const Expr& e) {
    std::string out;
    render(e, out);
    return out;
}

}  // namespace bishop
