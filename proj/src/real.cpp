#include "bishop/real.hpp"

#include <map>
#include <mutex>

namespace bishop {

struct Real::Impl {
    explicit Impl(Rule r) : rule(std::move(r)) {}

    Rule rule;
    mutable std::mutex mu;
    std::map<Index, Rat> cache;
};

Real::Real() : Real(std::make_shared<Impl>([](const Index&) { return Rat(0); })) {}

Real Real::assume_regular(Rule rule) { return Real(std::make_shared<Impl>(std::move(rule))); }

Rat Real::approx(const Index& n) const {
    if (n < 1) throw DomainError("real approximant index must be >= 1");
    {
        std::lock_guard lock(impl_->mu);
        if (auto it = impl_->cache.find(n); it != impl_->cache.end()) return it->second;
    }
    // Evaluate unlocked: the rule may recurse into other Reals, and two
    // threads racing on the same index compute the same value anyway.
    Rat value = impl_->rule(n);
    std::lock_guard lock(impl_->mu);
    return impl_->cache.try_emplace(n, std::move(value)).first->second;
}

std::size_t Real::cache_size() const {
    std::lock_guard lock(impl_->mu);
    return impl_->cache.size();
}

IndexSchedule doubling_schedule(unsigned max_exponent) {
    IndexSchedule out;
    out.reserve(max_exponent + 1);
    Index n = 1;
    for (unsigned i = 0; i <= max_exponent; ++i, n *= 2) out.push_back(n);
    return out;
}

IndexSchedule range_schedule(long first, long last) {
    IndexSchedule out;
    for (long n = first; n <= last; ++n) out.emplace_back(n);
    return out;
}

Real real_from_rat(const Rat& q) {
    return Real::assume_regular([q](const Index&) { return q; });
}

Rat approx(const Real& x, const Index& n) { return x.approx(n); }

Rat approx_eps(const Real& x, const Rat& eps) {
    if (eps.sign() <= 0) throw DomainError("approx_eps needs eps > 0");
    return x.approx(rat_ceil_recip_nat(eps));
}

Real real_add(const Real& x, const Real& y) {
    return Real::assume_regular([x, y](const Index& n) {
        Index m = 2 * n;
        return x.approx(m) + y.approx(m);
    });
}

Real real_neg(const Real& x) {
    return Real::assume_regular([x](const Index& n) { return -x.approx(n); });
}

Real real_sub(const Real& x, const Real& y) { return real_add(x, real_neg(y)); }

CanonicalBound canonical_bound(const Real& x) {
    return {rat_floor(rat_abs(x.approx(1))) + 2};
}

Real real_mul(const Real& x, const Real& y) {
    // |x_{2Kn} y_{2Kn} - x_{2Km} y_{2Km}| <= K (|x_{2Kn} - x_{2Km}| + |y_{2Kn} - y_{2Km}|) <= 1/m + 1/n
    BigInt k = canonical_bound(x).bound;
    BigInt ky = canonical_bound(y).bound;
    if (ky > k) k = ky;
    return Real::assume_regular([x, y, k](const Index& n) {
        Index m = 2 * k * n;
        return x.approx(m) * y.approx(m);
    });
}

Real real_max(const Real& x, const Real& y) {
    return Real::assume_regular([x, y](const Index& n) { return rat_max(x.approx(n), y.approx(n)); });
}

Real real_min(const Real& x, const Real& y) { return real_neg(real_max(real_neg(x), real_neg(y))); }

Real real_abs(const Real& x) { return real_max(x, real_neg(x)); }

namespace {

// (y - x)_n as the sum sequence defines it.
Rat difference_at(const Real& x, const Real& y, const Index& n) {
    Index m = 2 * n;
    return y.approx(m) - x.approx(m);
}

}  // namespace

std::optional<LtWitness> lt_search(const Real& x, const Real& y, const IndexSchedule& budget) {
    for (const Index& n : budget) {
        Rat gap = difference_at(x, y, n) - Rat(BigInt(1), n);
        if (gap.sign() > 0) return LtWitness{n, std::move(gap)};
    }
    return std::nullopt;
}

std::optional<LtWitness> le_refute(const Real& x, const Real& y, const IndexSchedule& budget) {
    for (const Index& n : budget) {
        Rat gap = difference_at(y, x, n) - Rat(BigInt(1), n);
        if (gap.sign() > 0) return LtWitness{n, std::move(gap)};
    }
    return std::nullopt;
}

std::optional<EqCounterexample> eq_refute(const Real& x, const Real& y, const IndexSchedule& budget) {
    for (const Index& n : budget) {
        Rat d = rat_abs(x.approx(n) - y.approx(n));
        if (d > Rat(BigInt(2), n)) return EqCounterexample{n, std::move(d)};
    }
    return std::nullopt;
}

bool lt_witness_valid(const Real& x, const Real& y, const LtWitness& w) {
    if (w.n < 1 || w.gap.sign() <= 0) return false;
    return w.gap == difference_at(x, y, w.n) - Rat(BigInt(1), w.n);
}

bool apartness_valid_on(const Real& x, const ApartnessWitness& w, const IndexSchedule& sample) {
    if (w.tail < 1) return false;
    Rat floor_value(BigInt(1), w.tail);
    for (const Index& m : sample) {
        if (m < w.tail) continue;
        Rat v = x.approx(m);
        if (w.sign == Sign::Pos ? v < floor_value : v > -floor_value) return false;
    }
    return true;
}

CmpResult approx_cmp(const Real& x, const Real& y, const Rat& eps) {
    if (eps.sign() <= 0) throw DomainError("approx_cmp needs eps > 0");
    Index n = rat_ceil_recip_nat(eps / Rat(4));
    return x.approx(n) <= y.approx(n) + eps / Rat(2) ? CmpResult::Left : CmpResult::Right;
}

Index eq_tail_witness(const Index& j) { return 2 * j; }

ApartnessWitness apartness_from_lt(const Real& x, const LtWitness& w) {
    // w certifies |x_{2n}| - 1/n = delta > 0. For m >= max(n, 2/delta):
    // |x_m| >= |x_{2n}| - 1/m - 1/(2n) >= delta - 1/m >= delta/2 >= 1/m.
    if (w.gap.sign() <= 0) throw IntegrityError("apartness_from_lt: non-positive gap");
    Rat xn = x.approx(2 * w.n);
    if (rat_abs(xn) - Rat(BigInt(1), w.n) != w.gap)
        throw IntegrityError("apartness_from_lt: witness does not match x");
    Index tail = rat_ceil_recip_nat(w.gap / Rat(2));
    if (tail < w.n) tail = w.n;
    return {xn.sign() > 0 ? Sign::Pos : Sign::Neg, tail};
}

Real real_inv(const Real& x, const ApartnessWitness& w) {
    if (w.tail < 1) throw IntegrityError("real_inv: apartness witness with tail < 1");
    Index scale = w.tail * w.tail;
    return Real::assume_regular([x, scale](const Index& m) {
        Rat v = x.approx(m * scale);
        if (v.is_zero()) throw IntegrityError("real_inv: zero approximant under an apartness witness");
        return Rat(1) / v;
    });
}

BigInt archimedean_bound(const Real& x) { return rat_floor(x.approx(1)) + 2; }

LtWitness archimedean_witness(const Real& x) {
    BigInt bound = archimedean_bound(x);
    Real ceiling = real_from_rat(Rat(bound));
    IndexSchedule quick{Index(2), Index(4), Index(8)};
    if (auto w = lt_search(x, ceiling, quick)) return *w;
    // slack = N - x_1 - 1 > 0 and x_{2n} <= x_1 + 1 + 1/(2n), so
    // N - x_{2n} > 1/n as soon as n > 3/(2 slack).
    Rat slack = Rat(bound) - x.approx(1) - Rat(1);
    Index n = rat_floor(Rat(3) / (Rat(2) * slack)) + 1;
    if (auto w = lt_search(x, ceiling, {n})) return *w;
    throw IntegrityError("archimedean_witness: closed-form index failed");
}

DenseRational dense_rational(const Real& x, const Real& y, const LtWitness& w) {
    if (!lt_witness_valid(x, y, w)) throw IntegrityError("dense_rational: invalid witness");
    // y - x >= delta. With N >= 8/delta, q sits at least delta/4 from both ends,
    // so witnesses exist at any n > 6/delta.
    const Rat& delta = w.gap;
    Index big_n = rat_ceil_recip_nat(delta / Rat(8));
    if (big_n < w.n) big_n = w.n;
    Rat q = (x.approx(big_n) + y.approx(big_n)) / Rat(2);

    Index limit = rat_ceil_recip_nat(delta / Rat(16));
    IndexSchedule schedule;
    for (Index n = 1; n < limit; n *= 2) schedule.push_back(n);
    schedule.push_back(limit);

    Real qr = real_from_rat(q);
    auto below = lt_search(x, qr, schedule);
    auto above = lt_search(qr, y, schedule);
    if (!below || !above) throw IntegrityError("dense_rational: witness search exhausted its derived budget");
    return {std::move(q), std::move(*below), std::move(*above)};
}

}  // namespace bishop
