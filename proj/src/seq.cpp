#include "bishop/seq.hpp"

#include <limits>
#include <map>
#include <mutex>

namespace bishop {

struct RealSeq::Impl {
    explicit Impl(Rule r) : rule(std::move(r)) {}

    Rule rule;
    std::mutex mu;
    std::map<Index, Real> terms;
};

RealSeq::RealSeq(Rule rule) : impl_(std::make_shared<Impl>(std::move(rule))) {}

RealSeq RealSeq::from_list(std::vector<Real> terms) {
    if (terms.empty()) throw DomainError("RealSeq::from_list needs at least one term");
    auto list = std::make_shared<const std::vector<Real>>(std::move(terms));
    return RealSeq([list](const Index& n) {
        Index last(static_cast<unsigned long>(list->size()));
        return (*list)[(n < last ? n : last).get_ui() - 1];
    });
}

Real RealSeq::term(const Index& n) const {
    if (n < 1) throw DomainError("sequence index must be >= 1");
    {
        std::lock_guard lock(impl_->mu);
        if (auto it = impl_->terms.find(n); it != impl_->terms.end()) return it->second;
    }
    Real value = impl_->rule(n);
    std::lock_guard lock(impl_->mu);
    return impl_->terms.try_emplace(n, std::move(value)).first->second;
}

namespace {

Index max_index(Index a, const Index& b) {
    if (b > a) a = b;
    return a;
}

unsigned long to_count(const Index& n) {
    if (!n.fits_ulong_p()) throw DomainError("partial sum index too large to enumerate");
    return n.get_ui();
}

}  // namespace

Limit limit(const RealSeq& xs, const CauchyModulus& n) {
    ConvergenceModulus m{[n](const Index& k) { return max_index(3 * k, n(2 * k)); }};
    Real value = Real::assume_regular([xs, m](const Index& k) { return xs.term(m(k)).approx(2 * k); });
    return {std::move(value), std::move(m)};
}

Limit limit(const CauchySeq& xs) { return limit(xs.seq, xs.modulus); }

CauchyModulus cauchy_from_convergent(const ConvergenceModulus& m) {
    return {[m](const Index& k) { return m(2 * k); }};
}

CauchySeq seq_add(const CauchySeq& xs, const CauchySeq& ys) {
    RealSeq sum([a = xs.seq, b = ys.seq](const Index& n) { return real_add(a.term(n), b.term(n)); });
    CauchyModulus modulus{[nx = xs.modulus, ny = ys.modulus](const Index& k) {
        Index k2 = 2 * k;
        return max_index(nx(k2), ny(k2));
    }};
    return {std::move(sum), std::move(modulus)};
}

RealSeq partial_sums(const SeriesTerms& a) {
    struct State {
        SeriesTerms terms{[](const Index&) { return Real(); }};
        std::mutex mu;
        std::vector<Real> sums;
    };
    auto state = std::make_shared<State>();
    state->terms = a;
    return RealSeq([state](const Index& n) {
        unsigned long count = to_count(n);
        std::lock_guard lock(state->mu);
        while (state->sums.size() < count) {
            Index i(static_cast<unsigned long>(state->sums.size() + 1));
            Real next = state->sums.empty() ? state->terms.term(i) : real_add(state->sums.back(), state->terms.term(i));
            state->sums.push_back(std::move(next));
        }
        return state->sums[count - 1];
    });
}

RealSeq truncated_partial_sums(const SeriesTerms& a, const CauchyModulus& n) {
    RealSeq sums = partial_sums(a);
    return RealSeq([sums, n](const Index& count) {
        // |S_count - S_{min(count, N(2j))}| <= 1/(2j), plus 1/(2j) approximation error.
        return Real::assume_regular([sums, n, count](const Index& j) {
            Index j2 = 2 * j;
            Index cut = n(j2);
            return sums.term(count < cut ? count : cut).approx(j2);
        });
    });
}

CauchyModulus ratio_test_modulus(const Rat& c, const Rat& bound, const Index& start) {
    if (c.sign() <= 0 || c >= Rat(1)) throw DomainError("ratio test needs 0 < c < 1");
    if (start < 1) throw DomainError("ratio test start index must be >= 1");
    Rat first = rat_reduce(rat_abs(bound) * rat_pow(c, start.get_ui()) / (Rat(1) - c));
    Rat ratio = rat_reduce(c);
    return {[first, ratio, start](const Index& k) {
        Rat target(BigInt(1), k);
        Rat tail = first;
        Index n = start;
        while (tail > target) {
            tail = rat_reduce(tail * ratio);
            n += 1;
        }
        return n;
    }};
}

CauchyModulus comparison_test_modulus(const SeriesTerms&, const SeriesTerms&, const CauchyModulus& nb) {
    return nb;
}

Real exp_rational(const Rat& q) {
    Rat mag = rat_abs(q);
    if (mag > Rat(4)) throw DomainError("exp_rational supports |q| <= 4");
    // a(n) = q^(n-1)/(n-1)!; |a(n+1)/a(n)| = |q|/n <= 1/2 once n >= 2|q|.
    struct Terms {
        Rat q;
        std::mutex mu;
        std::vector<Rat> values{Rat(1)};
    };
    auto terms = std::make_shared<Terms>();
    terms->q = q;
    auto term_value = [terms](unsigned long n) {
        std::lock_guard lock(terms->mu);
        while (terms->values.size() < n) {
            auto k = static_cast<long>(terms->values.size());
            terms->values.push_back(rat_reduce(terms->values.back() * terms->q / Rat(k)));
        }
        return terms->values[n - 1];
    };
    SeriesTerms a([term_value](const Index& n) { return real_from_rat(term_value(to_count(n))); });

    unsigned long start = std::max<unsigned long>(1, rat_floor(Rat(2) * mag).get_ui() + 1);
    Rat bound = rat_abs(term_value(start)) * rat_pow(Rat(2), start);
    CauchyModulus modulus = ratio_test_modulus(Rat(BigInt(1), BigInt(2)), bound, Index(start));
    return limit(truncated_partial_sums(a, modulus), modulus).value;
}

Diagonal cantor_diagonal(const RealSeq& enumeration, const Rat& lo, const Rat& hi) {
    if (!(lo < hi)) throw DomainError("cantor_diagonal needs lo < hi");

    struct State {
        explicit State(RealSeq e) : enumeration(std::move(e)) {}

        RealSeq enumeration;
        std::mutex mu;
        std::vector<Rat> lows;
        std::vector<Rat> highs;
        std::vector<ApartnessWitness> witnesses;  // witnesses[k-1] is for term k

        // Ensures intervals 0..k exist.
        void extend(std::size_t k) {
            while (lows.size() <= k) {
                std::size_t step = lows.size();  // choosing interval `step` avoids term `step`
                const Rat& l = lows.back();
                Rat width = highs.back() - l;
                Rat r = approx_eps(enumeration.term(Index(static_cast<unsigned long>(step))), width / Rat(12));
                Rat margin = width / Rat(6);
                Rat third = width / Rat(3);
                bool placed = false;
                for (long i = 0; i < 3 && !placed; ++i) {
                    Rat t0 = rat_reduce(l + third * Rat(i));
                    Rat t1 = rat_reduce(l + third * Rat(i + 1));
                    Sign side;
                    if (t0 - r >= margin) {
                        side = Sign::Pos;
                    } else if (r - t1 >= margin) {
                        side = Sign::Neg;
                    } else {
                        continue;
                    }
                    // |x - a| >= margin - width/12 = width/12; tail N >= 24/width.
                    Index tail = rat_ceil_recip_nat(width / Rat(24));
                    witnesses.push_back({side, tail});
                    lows.push_back(std::move(t0));
                    highs.push_back(std::move(t1));
                    placed = true;
                }
                if (!placed) throw IntegrityError("cantor_diagonal: no third avoids the approximant");
            }
        }
    };

    auto state = std::make_shared<State>(enumeration);
    state->lows.push_back(rat_reduce(lo));
    state->highs.push_back(rat_reduce(hi));
    Rat initial_width = hi - lo;

    Real x = Real::assume_regular([state, initial_width](const Index& n) {
        // First step whose width (hi - lo)/3^k is <= 1/n.
        Rat scaled = initial_width * Rat(n);
        BigInt power = 1;
        std::size_t k = 0;
        while (scaled > Rat(power)) {
            power *= 3;
            ++k;
        }
        std::lock_guard lock(state->mu);
        state->extend(k);
        return rat_reduce((state->lows[k] + state->highs[k]) / Rat(2));
    });

    auto witness = [state](const Index& k) {
        if (k < 1) throw DomainError("enumeration index must be >= 1");
        std::lock_guard lock(state->mu);
        state->extend(to_count(k));
        return state->witnesses[k.get_ui() - 1];
    };
    return {std::move(x), std::move(witness)};
}

}  // namespace bishop
