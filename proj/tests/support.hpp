#pragma once

// Test-only oracles and generators. Nothing here calls into the code path it checks.

#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "bishop/real.hpp"
#include "bishop/seq.hpp"

namespace bishop::testing {

/// Least positive n with 1/n <= a, by scanning n = 1, 2, ... (a > 0).
inline long brute_ceil_recip(const Rat& a, long limit = 1'000'000) {
    for (long n = 1; n <= limit; ++n)
        if (Rat(BigInt(1), BigInt(n)) <= a) return n;
    return -1;
}

/// e rounded to `digits` places, from sum_{n<=40} 40!/n! over 40!. The tail
/// beyond n = 40 is below 2/41! < 1e-48, so both ends of the enclosing
/// interval must round the same way; returns "" if they do not.
inline std::string e_oracle(unsigned digits) {
    BigInt fact40 = 1;
    for (long i = 2; i <= 40; ++i) fact40 *= i;
    BigInt sum = 0, term = fact40;  // term = 40!/n!
    for (long n = 0; n <= 40; ++n) {
        sum += term;
        if (n < 40) term /= (n + 1);
    }
    BigInt scale = 1;
    for (unsigned i = 0; i < digits; ++i) scale *= 10;
    BigInt tail_den = 1;
    for (long i = 2; i <= 41; ++i) tail_den *= i;  // 41!
    // lower = sum/40!, upper = sum/40! + 2/41!
    auto rounded = [&](const BigInt& num, const BigInt& den) {
        BigInt twice = 2 * num * scale + den;
        BigInt q = twice / (2 * den);
        return q;
    };
    BigInt lo = rounded(sum, fact40);
    BigInt hi = rounded(sum * 41 + 2, tail_den);
    if (lo != hi) return "";
    std::string s = lo.get_str();
    s.insert(s.size() - digits, 1, '.');
    return s;
}

/// Integer ceil(log2 k), k >= 1.
inline Index ceil_log2(const Index& k) {
    if (k <= 1) return 0;
    Index km1 = k - 1;
    return Index(static_cast<unsigned long>(mpz_sizeinbase(km1.get_mpz_t(), 2)));
}

/// x_n = 1 - 2^-n as constant reals, with modulus k -> ceil(log2 k) + 2.
inline CauchySeq one_minus_half_powers() {
    RealSeq xs([](const Index& n) {
        BigInt p = 1;
        mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), n.get_ui());
        return real_from_rat(Rat(1) - Rat(BigInt(1), p));
    });
    return {xs, CauchyModulus{[](const Index& k) -> Index { return ceil_log2(k) + 2; }}};
}

/// A regular sequence q + s/n with |s| <= 1; its value is q.
inline Real wobbly(const Rat& q, const Rat& s) {
    return Real::assume_regular([q, s](const Index& n) { return q + s / Rat(n); });
}

struct Sample {
    Real x;
    std::string text;
};

/// Random expression trees over small rational leaves.
class TreeGen {
public:
    explicit TreeGen(std::uint64_t seed, bool wobbly_leaves = true) : rng_(seed), wobbly_(wobbly_leaves) {}

    Rat small_rat() {
        std::uniform_int_distribution<long> num(-20, 20), den(1, 20);
        return Rat(BigInt(num(rng_)), BigInt(den(rng_)));
    }

    Sample leaf() {
        Rat q = small_rat();
        std::uniform_int_distribution<int> pick(0, 4);
        if (!wobbly_ || pick(rng_) < 2) return {real_from_rat(q), to_string(q)};
        static const Rat shifts[] = {Rat(-1), Rat(BigInt(-1), BigInt(2)), Rat(BigInt(1), BigInt(2)), Rat(1)};
        const Rat& s = shifts[pick(rng_) % 4];
        return {wobbly(q, s), "(" + to_string(q) + "~" + to_string(s) + "/n)"};
    }

    Sample tree(int depth) {
        std::uniform_int_distribution<int> op(0, 7);
        int choice = depth <= 0 ? 0 : op(rng_);
        switch (choice) {
            case 0: return leaf();
            case 1: return binary(depth, "add", real_add);
            case 2: {
                Sample a = tree(depth - 1);
                return {real_neg(a.x), "neg(" + a.text + ")"};
            }
            case 3: return binary(depth, "mul", real_mul);
            case 4: return binary(depth, "max", real_max);
            case 5: return binary(depth, "min", real_min);
            case 6: {
                Sample a = tree(depth - 1);
                return {real_abs(a.x), "abs(" + a.text + ")"};
            }
            default: {
                Sample a = tree(depth - 1);
                auto w = lt_search(real_from_rat(Rat(0)), real_abs(a.x), doubling_schedule(16));
                if (!w) return a;
                return {real_inv(a.x, apartness_from_lt(a.x, *w)), "inv(" + a.text + ")"};
            }
        }
    }

    std::mt19937_64& rng() { return rng_; }

private:
    Sample binary(int depth, const char* name, Real (*f)(const Real&, const Real&)) {
        Sample a = tree(depth - 1), b = tree(depth - 1);
        return {f(a.x, b.x), std::string(name) + "(" + a.text + ", " + b.text + ")"};
    }

    std::mt19937_64 rng_;
    bool wobbly_;
};

/// {1..50} plus 1000 and 10^6.
inline IndexSchedule regularity_indices() {
    IndexSchedule s = range_schedule(1, 50);
    s.emplace_back(1000);
    s.emplace_back(1000000);
    return s;
}

}  // namespace bishop::testing
