#pragma once

// Real numbers as regular sequences of rationals.
//
// A Real is a rule n -> x_n (n >= 1) with |x_m - x_n| <= 1/m + 1/n, plus a
// per-instance memo table. Values are immutable; the memo table is the only
// mutable state and it is internally locked, so Reals can be shared across
// threads. Copies share the rule and the cache.
//
// Order and apartness are only semidecidable. Searches take an explicit
// finite index schedule and return a witness or nothing; nothing means
// "not found within budget", never "false".

#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bishop/rat.hpp"

namespace bishop {

using Index = BigInt;
using IndexSchedule = std::vector<Index>;

/// A witness-backed construction failed its own invariant. Always a bug.
class IntegrityError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// 1, 2, 4, ..., 2^max_exponent.
IndexSchedule doubling_schedule(unsigned max_exponent = 16);
/// first, first+1, ..., last.
IndexSchedule range_schedule(long first, long last);

class Real {
public:
    using Rule = std::function<Rat(const Index&)>;

    /// The constant zero.
    Real();

    /// n-th approximant, memoized. Throws DomainError for n < 1.
    Rat approx(const Index& n) const;
    Rat approx(long n) const { return approx(Index(n)); }

    /// Number of memoized indices (diagnostics only).
    std::size_t cache_size() const;

    /// Wraps a rule without any regularity argument. The caller promises
    /// regularity. Library constructions in seq use it for sequences whose
    /// regularity is proved alongside them; tests use it to build specific
    /// sequences such as n -> 1/n. Not for user input.
    static Real assume_regular(Rule rule);

private:
    struct Impl;
    explicit Real(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<Impl> impl_;
};

/// Certificate that y - x is positive: y_{2n} - x_{2n} - 1/n = gap > 0.
struct LtWitness {
    Index n;
    Rat gap;
};

enum class Sign { Pos, Neg };

/// x <> 0 on a uniform tail: for every m >= tail, |x_m| >= 1/tail and x_m has `sign`.
struct ApartnessWitness {
    Sign sign;
    Index tail;
};

/// |x_n| <= bound for every n.
struct CanonicalBound {
    BigInt bound;
};

/// Index at which |x_n - y_n| > 2/n, refuting x = y.
struct EqCounterexample {
    Index n;
    Rat distance;
};

enum class CmpResult {
    Left,   // x < y + eps
    Right,  // y < x + eps
};

Real real_from_rat(const Rat& q);

Rat approx(const Real& x, const Index& n);
/// Approximant within eps of x. Throws DomainError unless eps > 0.
Rat approx_eps(const Real& x, const Rat& eps);

Real real_add(const Real& x, const Real& y);
Real real_neg(const Real& x);
Real real_sub(const Real& x, const Real& y);
Real real_mul(const Real& x, const Real& y);

CanonicalBound canonical_bound(const Real& x);

Real real_max(const Real& x, const Real& y);
Real real_min(const Real& x, const Real& y);
Real real_abs(const Real& x);

inline Real operator+(const Real& x, const Real& y) { return real_add(x, y); }
inline Real operator-(const Real& x, const Real& y) { return real_sub(x, y); }
inline Real operator-(const Real& x) { return real_neg(x); }
inline Real operator*(const Real& x, const Real& y) { return real_mul(x, y); }

/// First scheduled n with y_{2n} - x_{2n} > 1/n.
std::optional<LtWitness> lt_search(const Real& x, const Real& y, const IndexSchedule& budget);
/// First scheduled n with y_{2n} - x_{2n} < -1/n. The result witnesses y < x.
std::optional<LtWitness> le_refute(const Real& x, const Real& y, const IndexSchedule& budget);
/// First scheduled n with |x_n - y_n| > 2/n.
std::optional<EqCounterexample> eq_refute(const Real& x, const Real& y, const IndexSchedule& budget);

/// Exact check of an order witness against the two reals.
bool lt_witness_valid(const Real& x, const Real& y, const LtWitness& w);
/// Checks the tail condition of w at each index in `sample` that is >= w.tail.
bool apartness_valid_on(const Real& x, const ApartnessWitness& w, const IndexSchedule& sample);

/// Decides x < y + eps or y < x + eps. Ties go Left.
CmpResult approx_cmp(const Real& x, const Real& y, const Rat& eps);

/// For x = y: |x_n - y_n| <= 1/j whenever n >= 2j.
Index eq_tail_witness(const Index& j);

/// Turns a witness of 0 < |x| into a uniform-tail apartness witness for x.
ApartnessWitness apartness_from_lt(const Real& x, const LtWitness& w);

/// Multiplicative inverse. Throws IntegrityError if w is not valid for x.
Real real_inv(const Real& x, const ApartnessWitness& w);

/// floor(x_1) + 2, an integer strictly above x. May be negative.
BigInt archimedean_bound(const Real& x);
/// Witness of x < archimedean_bound(x). Tries indices 2, 4, 8, then a closed-form index.
LtWitness archimedean_witness(const Real& x);

struct DenseRational {
    Rat q;
    LtWitness below;  // x < q
    LtWitness above;  // q < y
};

/// A rational strictly between x and y, given a witness of x < y.
DenseRational dense_rational(const Real& x, const Real& y, const LtWitness& w);

}  // namespace bishop
