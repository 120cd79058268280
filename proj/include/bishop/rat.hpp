#pragma once

// Exact rational arithmetic over GMP integers.
//
// Rationals are kept unnormalized: arithmetic cross-multiplies and never
// divides out common factors unless an operand grows past the reduction
// threshold, or the caller asks for it with reduce(). The denominator is
// always positive; the sign lives in the numerator.

#include <atomic>
#include <compare>
#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace bishop {

using BigInt = mpz_class;

/// Raised for zero denominators and other out-of-domain arguments.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Bit length past which add/mul reduce their result to lowest terms.
/// Zero disables automatic reduction entirely.
std::size_t reduce_threshold_bits() noexcept;
void set_reduce_threshold_bits(std::size_t bits) noexcept;

class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long n) : num_(n), den_(1) {}  // NOLINT: implicit from integer literals
    explicit Rat(BigInt n) : num_(std::move(n)), den_(1) {}
    /// num/den with den forced positive; no reduction. Throws on den == 0.
    Rat(BigInt num, BigInt den);

    const BigInt& num() const noexcept { return num_; }
    const BigInt& den() const noexcept { return den_; }

    int sign() const noexcept { return sgn(num_); }
    bool is_zero() const noexcept { return sgn(num_) == 0; }

    Rat operator-() const { return Rat(BigInt(-num_), den_, Unchecked{}); }

    friend Rat operator+(const Rat& a, const Rat& b);
    friend Rat operator-(const Rat& a, const Rat& b);
    friend Rat operator*(const Rat& a, const Rat& b);
    /// Throws DomainError when b is zero.
    friend Rat operator/(const Rat& a, const Rat& b);

    Rat& operator+=(const Rat& b) { return *this = *this + b; }
    Rat& operator-=(const Rat& b) { return *this = *this - b; }
    Rat& operator*=(const Rat& b) { return *this = *this * b; }

    // Semantic comparison: 1/2 == 2/4.
    friend bool operator==(const Rat& a, const Rat& b);
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

    /// True when both numerator and denominator match, i.e. the same representation.
    bool identical(const Rat& other) const { return num_ == other.num_ && den_ == other.den_; }

    std::size_t bit_length() const;

private:
    struct Unchecked {};
    Rat(BigInt num, BigInt den, Unchecked) : num_(std::move(num)), den_(std::move(den)) {}
    static Rat maybe_reduced(BigInt num, BigInt den);

    BigInt num_;
    BigInt den_;
};

Rat rat_make(const BigInt& num, const BigInt& den);
inline Rat rat_add(const Rat& a, const Rat& b) { return a + b; }
inline Rat rat_mul(const Rat& a, const Rat& b) { return a * b; }
inline Rat rat_neg(const Rat& a) { return -a; }
Rat rat_abs(const Rat& a);
Rat rat_max(const Rat& a, const Rat& b);
Rat rat_min(const Rat& a, const Rat& b);
std::strong_ordering rat_cmp(const Rat& a, const Rat& b);

/// Greatest integer <= a.
BigInt rat_floor(const Rat& a);
/// Least positive n with 1/n <= a. Throws DomainError unless a > 0.
BigInt rat_ceil_recip_nat(const Rat& a);
/// Lowest terms, positive denominator.
Rat rat_reduce(const Rat& a);

/// 10^k as an exact rational (k may be negative).
Rat pow10(long k);
/// a^k for k >= 0.
Rat rat_pow(const Rat& a, unsigned long k);

/// Reduced "p/q" rendering.
std::string to_string(const Rat& a);
std::ostream& operator<<(std::ostream& os, const Rat& a);

/// Parses "[-]digits", "[-]p/q" and "[-]d.ddd". Throws DomainError on bad input.
Rat parse_rat(std::string_view text);

}  // namespace bishop
