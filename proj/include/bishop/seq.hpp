#pragma once

// Sequences and series of reals with explicit moduli.
//
// Nothing here infers a modulus. Whoever builds a sequence supplies the
// function k -> N(k) that certifies it, and the constructions below only
// transform those functions.

#include <functional>
#include <memory>
#include <vector>

#include "bishop/real.hpp"

namespace bishop {

/// n -> x_n (n >= 1), memoized so term(n) always returns the same Real.
class RealSeq {
public:
    using Rule = std::function<Real(const Index&)>;

    explicit RealSeq(Rule rule);
    /// Finite list, extended by repeating its last element.
    static RealSeq from_list(std::vector<Real> terms);

    Real term(const Index& n) const;
    Real term(long n) const { return term(Index(n)); }

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

/// k -> N(k) with |x_m - x_n| <= 1/k whenever m, n >= N(k).
struct CauchyModulus {
    std::function<Index(const Index&)> fn;
    Index operator()(const Index& k) const { return fn(k); }
};

/// k -> M(k) with |x_n - l| <= 1/k whenever n >= M(k).
struct ConvergenceModulus {
    std::function<Index(const Index&)> fn;
    Index operator()(const Index& k) const { return fn(k); }
};

struct CauchySeq {
    RealSeq seq;
    CauchyModulus modulus;
};

struct Limit {
    Real value;
    ConvergenceModulus modulus;
};

/// Summands a(1), a(2), ...
using SeriesTerms = RealSeq;

/// l_k = (x_{M_k})_{2k} with M_k = max(3k, N(2k)).
///
/// Precision 1/k touches term M_k >= 3k, so high-precision use needs terms
/// that stay cheap at huge indices (truncated_partial_sums, for series).
Limit limit(const RealSeq& xs, const CauchyModulus& n);
Limit limit(const CauchySeq& xs);

/// N(k) = M(2k).
CauchyModulus cauchy_from_convergent(const ConvergenceModulus& m);

/// Termwise sum with modulus k -> max(N_x(2k), N_y(2k)).
CauchySeq seq_add(const CauchySeq& xs, const CauchySeq& ys);

/// S_n = a(1) + ... + a(n), each S_n built from S_{n-1} by one real_add.
RealSeq partial_sums(const SeriesTerms& a);

/// The same reals as partial_sums(a), but S_n at precision 1/j only sums
/// up to min(n, N(2j)) terms. `n` must be a Cauchy modulus for the partial
/// sums. Makes S_n usable for astronomically large n.
RealSeq truncated_partial_sums(const SeriesTerms& a, const CauchyModulus& n);

/// Modulus for partial sums when |a(n)| <= bound * c^n for n >= start
/// (the caller certifies the bound): N(k) is the least n >= start with
/// bound * c^n / (1 - c) <= 1/k. Throws DomainError unless 0 < c < 1.
CauchyModulus ratio_test_modulus(const Rat& c, const Rat& bound, const Index& start);

/// Given |a(n)| <= b(n) for all n (caller certified), the modulus of the
/// partial sums of b also serves a.
CauchyModulus comparison_test_modulus(const SeriesTerms& a, const SeriesTerms& b, const CauchyModulus& nb);

/// e^q as the sum of q^n/n!. Throws DomainError for |q| > 4.
Real exp_rational(const Rat& q);

struct Diagonal {
    Real x;
    /// Apartness witness for x - enumeration.term(k), k >= 1.
    std::function<ApartnessWitness(const Index&)> witness;
};

/// A real in [lo, hi] apart from every term of the enumeration, built by
/// nested trisection. Throws DomainError unless lo < hi.
Diagonal cantor_diagonal(const RealSeq& enumeration, const Rat& lo, const Rat& hi);

}  // namespace bishop
