#include "bishop/rat.hpp"

#include <cctype>
#include <ostream>

namespace bishop {

namespace {
std::atomic<std::size_t> g_reduce_threshold{4096};
}

std::size_t reduce_threshold_bits() noexcept { return g_reduce_threshold.load(std::memory_order_relaxed); }
void set_reduce_threshold_bits(std::size_t bits) noexcept {
    g_reduce_threshold.store(bits, std::memory_order_relaxed);
}

Rat::Rat(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (sgn(den_) == 0) throw DomainError("rational with zero denominator");
    if (sgn(den_) < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

Rat Rat::maybe_reduced(BigInt num, BigInt den) {
    const std::size_t limit = reduce_threshold_bits();
    if (limit != 0 && mpz_sizeinbase(den.get_mpz_t(), 2) > limit) {
        BigInt g;
        mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        if (g != 1) {
            mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), g.get_mpz_t());
            mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), g.get_mpz_t());
        }
    }
    return Rat(std::move(num), std::move(den), Unchecked{});
}

Rat operator+(const Rat& a, const Rat& b) {
    if (a.den_ == b.den_) return Rat::maybe_reduced(a.num_ + b.num_, a.den_);
    return Rat::maybe_reduced(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rat operator-(const Rat& a, const Rat& b) {
    if (a.den_ == b.den_) return Rat::maybe_reduced(a.num_ - b.num_, a.den_);
    return Rat::maybe_reduced(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rat operator*(const Rat& a, const Rat& b) {
    return Rat::maybe_reduced(a.num_ * b.num_, a.den_ * b.den_);
}

Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw DomainError("rational division by zero");
    BigInt num = a.num_ * b.den_;
    BigInt den = a.den_ * b.num_;
    if (sgn(den) < 0) {
        num = -num;
        den = -den;
    }
    return Rat::maybe_reduced(std::move(num), std::move(den));
}

bool operator==(const Rat& a, const Rat& b) {
    if (a.den_ == b.den_) return a.num_ == b.num_;
    return a.num_ * b.den_ == b.num_ * a.den_;
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = a.den_ == b.den_ ? cmp(a.num_, b.num_) : cmp(a.num_ * b.den_, b.num_ * a.den_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::size_t Rat::bit_length() const {
    return mpz_sizeinbase(num_.get_mpz_t(), 2) + mpz_sizeinbase(den_.get_mpz_t(), 2);
}

Rat rat_make(const BigInt& num, const BigInt& den) { return Rat(num, den); }

Rat rat_abs(const Rat& a) { return a.sign() < 0 ? -a : a; }
Rat rat_max(const Rat& a, const Rat& b) { return a < b ? b : a; }
Rat rat_min(const Rat& a, const Rat& b) { return b < a ? b : a; }
std::strong_ordering rat_cmp(const Rat& a, const Rat& b) { return a <=> b; }

BigInt rat_floor(const Rat& a) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.num().get_mpz_t(), a.den().get_mpz_t());
    return q;
}

BigInt rat_ceil_recip_nat(const Rat& a) {
    if (a.sign() <= 0) throw DomainError("ceil_recip_nat needs a positive rational");
    // 1/n <= p/q  <=>  n >= q/p
    BigInt n;
    mpz_cdiv_q(n.get_mpz_t(), a.den().get_mpz_t(), a.num().get_mpz_t());
    if (n < 1) n = 1;
    return n;
}

Rat rat_reduce(const Rat& a) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.num().get_mpz_t(), a.den().get_mpz_t());
    if (sgn(a.num()) == 0) return Rat(BigInt(0), BigInt(1));
    return Rat(BigInt(a.num() / g), BigInt(a.den() / g));
}

Rat pow10(long k) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k < 0 ? -k : k));
    return k < 0 ? Rat(BigInt(1), p) : Rat(p);
}

Rat rat_pow(const Rat& a, unsigned long k) {
    BigInt n, d;
    mpz_pow_ui(n.get_mpz_t(), a.num().get_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), a.den().get_mpz_t(), k);
    return Rat(n, d);
}

std::string to_string(const Rat& a) {
    Rat r = rat_reduce(a);
    return r.num().get_str() + "/" + r.den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& a) { return os << to_string(a); }

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    Rat out;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        auto p = s.substr(0, slash), q = s.substr(slash + 1);
        if (!all_digits(p) || !all_digits(q)) throw DomainError("malformed rational literal: " + std::string(text));
        out = Rat(BigInt(std::string(p), 10), BigInt(std::string(q), 10));
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        auto whole = s.substr(0, dot), frac = s.substr(dot + 1);
        if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
            (whole.empty() && frac.empty()))
            throw DomainError("malformed decimal literal: " + std::string(text));
        std::string digits = std::string(whole) + std::string(frac);
        out = Rat(BigInt(digits, 10), pow10(static_cast<long>(frac.size())).num());
    } else {
        if (!all_digits(s)) throw DomainError("malformed integer literal: " + std::string(text));
        out = Rat(BigInt(std::string(s), 10));
    }
    return negative ? -out : out;
}

}  // namespace bishop
