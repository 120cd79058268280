// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "bishop/cli.hpp"
#include "bishop/kernels.hpp"
#include "bishop/seq.hpp"
#include "support.hpp"

using namespace bishop;
using bishop::testing::TreeGen;

namespace {

struct Verdict {
    bool pass;
    std::string detail;
};

Rat r(long p, long q = 1) { return Rat(BigInt(p), BigInt(q)); }
Real c(long p, long q = 1) { return real_from_rat(r(p, q)); }

const IndexSchedule& budget_to(long last) {
    static std::map<long, IndexSchedule> cache;
    auto it = cache.find(last);
    if (it == cache.end()) it = cache.emplace(last, range_schedule(1, last)).first;
    return it->second;
}

// 1. Regularity of random expression trees.
Verdict regularity() {
    constexpr int kTrees = 500;
    TreeGen gen(20240501);
    IndexSchedule idx = testing::regularity_indices();
    int violations = 0;
    std::string first;
    auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < kTrees; ++i) {
        auto s = gen.tree(4);
        if (auto v = kernels::regularity_violation_parallel(s.x, idx)) {
            if (violations++ == 0) first = s.text + " at (" + v->m.get_str() + ", " + v->n.get_str() + ")";
        }
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream d;
    d << kTrees << " trees, " << idx.size() << " indices, " << violations << " violations, " << secs << " s";
    if (!first.empty()) d << "; first: " << first;
    return {violations == 0 && secs < 120.0, d.str()};
}

// 2. Field and lattice identities as reals.
Verdict field_axioms() {
    constexpr int kTuples = 100;
    TreeGen gen(77);
    const IndexSchedule& budget = budget_to(100);
    struct Law {
        const char* name;
        std::function<std::pair<Real, Real>(const Real&, const Real&, const Real&)> sides;
        int refuted = 0;
    };
    std::vector<Law> laws{
        {"add commutes", [](auto& x, auto& y, auto&) { return std::pair{x + y, y + x}; }},
        {"mul commutes", [](auto& x, auto& y, auto&) { return std::pair{x * y, y * x}; }},
        {"add associates", [](auto& x, auto& y, auto& z) { return std::pair{(x + y) + z, x + (y + z)}; }},
        {"mul associates", [](auto& x, auto& y, auto& z) { return std::pair{(x * y) * z, x * (y * z)}; }},
        {"distributes", [](auto& x, auto& y, auto& z) { return std::pair{x * (y + z), x * y + x * z}; }},
        {"additive identity", [](auto& x, auto&, auto&) { return std::pair{x + c(0), x}; }},
        {"multiplicative identity", [](auto& x, auto&, auto&) { return std::pair{c(1) * x, x}; }},
        {"additive inverse", [](auto& x, auto&, auto&) { return std::pair{x + (-x), c(0)}; }},
        {"multiplicative inverse",
         [](auto& x, auto&, auto&) {
             auto w = lt_search(c(0), real_abs(x), doubling_schedule(16));
             // Operands are drawn apart from zero below, so w always exists.
             return std::pair{x * real_inv(x, apartness_from_lt(x, *w)), c(1)};
         }},
        {"abs is max(x, -x)", [](auto& x, auto&, auto&) { return std::pair{real_abs(x), real_max(x, -x)}; }},
        {"max idempotent", [](auto& x, auto&, auto&) { return std::pair{real_max(x, x), x}; }},
    };
    int tuples = 0;
    while (tuples < kTuples) {
        auto x = gen.tree(2), y = gen.tree(2), z = gen.tree(2);
        if (!lt_search(c(0), real_abs(x.x), doubling_schedule(16))) continue;
        ++tuples;
        for (Law& law : laws) {
            auto [lhs, rhs] = law.sides(x.x, y.x, z.x);
            if (eq_refute(lhs, rhs, budget)) ++law.refuted;
        }
    }
    int total = 0;
    std::ostringstream d;
    d << laws.size() << " identities x " << tuples << " tuples, budget 1..100";
    for (const Law& law : laws) {
        total += law.refuted;
        if (law.refuted) d << "; " << law.name << " refuted " << law.refuted << "x";
    }
    d << ", " << total << " refutations";
    return {total == 0, d.str()};
}

// 3. Equality lemma with N_j = 2j.
Verdict equality_lemma() {
    TreeGen gen(99);
    int pairs = 0, failures = 0;
    auto check = [&](const Real& x, const Real& y) {
        ++pairs;
        for (long j = 1; j <= 10; ++j) {
            Index start = eq_tail_witness(Index(j));
            for (Index n = start; n <= start + 50; ++n)
                if (rat_abs(x.approx(n) - y.approx(n)) > r(1, j)) {
                    ++failures;
                    return;
                }
        }
    };
    for (int i = 0; i < 10; ++i) {
        auto a = gen.tree(2), b = gen.tree(2), k = gen.tree(1);
        check(a.x + b.x, b.x + a.x);
        check(a.x * (b.x + k.x), a.x * b.x + a.x * k.x);
        check(-(-a.x), a.x);
        check(real_max(a.x, b.x), real_max(b.x, a.x));
        check(real_abs(a.x), real_max(a.x, -a.x));
        Rat q = gen.small_rat();
        check(testing::wobbly(q, r(1)), testing::wobbly(q, r(-1)));
    }
    std::ostringstream d;
    d << pairs << " equal pairs, j = 1..10, n in [2j, 2j+50], " << failures << " failures";
    return {pairs >= 50 && failures == 0, d.str()};
}

// 4. Completeness in both directions.
Verdict completeness() {
    CauchySeq xs = testing::one_minus_half_powers();
    std::ostringstream d;
    bool ok = true;

    // The modulus itself, exactly: |2^-m - 2^-n| <= 1/k for m, n >= N(k).
    for (long k = 1; k <= 40 && ok; ++k) {
        Index n0 = xs.modulus(Index(k));
        for (Index m = n0; m < n0 + 8 && ok; ++m)
            for (Index n = n0; n < n0 + 8 && ok; ++n)
                if (rat_abs(xs.seq.term(m).approx(1) - xs.seq.term(n).approx(1)) > r(1, k)) ok = false;
    }
    d << "modulus " << (ok ? "verified" : "BROKEN");

    Limit l = limit(xs);
    bool equal = !eq_refute(l.value, c(1), budget_to(200));
    d << "; limit = 1 " << (equal ? "not refuted" : "REFUTED") << " on 1..200";

    bool converges = true;
    for (long k = 1; k <= 20 && converges; ++k) {
        Index m = l.modulus(Index(k));
        for (Index n : {Index(m), Index(m + 1), Index(m + 7), Index(2 * m), Index(5 * m + 3)})
            if (le_refute(real_abs(xs.seq.term(n) - l.value), c(1, k), budget_to(50))) converges = false;
    }
    d << "; convergence modulus " << (converges ? "holds" : "REFUTED") << " for k <= 20";

    CauchyModulus back = cauchy_from_convergent(l.modulus);
    bool cauchy = true;
    for (long k = 1; k <= 10 && cauchy; ++k) {
        Index n0 = back(Index(k));
        for (Index m = n0; m < n0 + 5; ++m)
            for (Index n = n0; n < n0 + 15; n += 2)
                if (le_refute(real_abs(xs.seq.term(m) - xs.seq.term(n)), c(1, k), budget_to(50))) cauchy = false;
    }
    d << "; N_k = M_2k " << (cauchy ? "holds" : "REFUTED") << " for k <= 10";
    return {ok && equal && converges && cauchy, d.str()};
}

// 5. e to 30 digits through the CLI.
Verdict e_digits() {
    auto start = std::chrono::steady_clock::now();
    std::ostringstream out, err;
    int code = cli::run({"digits", "e", "--digits", "30"}, out, err);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string oracle = testing::e_oracle(30);
    std::string got = out.str();
    bool match = code == 0 && !oracle.empty() && got == oracle + " ± 1e-30\n";
    std::ostringstream d;
    d << "printed " << got.substr(0, got.find('\n')) << ", oracle " << oracle << ", " << secs << " s";
    return {match && secs < 60.0, d.str()};
}

// 6. Archimedean bound and density of the rationals.
Verdict archimedean_and_density() {
    TreeGen constants(555, false);
    IndexSchedule quick{Index(2), Index(4), Index(8)};
    int bounded = 0, reals = 0;
    for (; reals < 100; ++reals) {
        auto s = constants.tree(3);
        Real bound = real_from_rat(Rat(archimedean_bound(s.x)));
        auto w = lt_search(s.x, bound, quick);
        if (w && lt_witness_valid(s.x, bound, *w)) ++bounded;
    }

    TreeGen gen(556);
    int dense_ok = 0, pairs = 0;
    while (pairs < 100) {
        auto a = gen.tree(2), b = gen.tree(2);
        auto w = lt_search(a.x, b.x, doubling_schedule(16));
        if (!w) continue;
        ++pairs;
        DenseRational d = dense_rational(a.x, b.x, *w);
        Real q = real_from_rat(d.q);
        if (lt_witness_valid(a.x, q, d.below) && lt_witness_valid(q, b.x, d.above)) ++dense_ok;
    }
    std::ostringstream d;
    d << "archimedean witness within [2,4,8] for " << bounded << "/" << reals << " reals; density witnesses valid for "
      << dense_ok << "/" << pairs << " pairs";
    return {bounded == reals && dense_ok == pairs, d.str()};
}

// 7. Diagonal real apart from 20 enumerated reals.
Verdict uncountability() {
    auto start = std::chrono::steady_clock::now();
    std::vector<Real> list;
    for (long k = 1; k <= 20; ++k) {
        switch (k % 4) {
            case 0: list.push_back(exp_rational(r(-k, 5))); break;
            case 1: list.push_back(c(k, 21)); break;
            case 2: {
                // 1/2 + 1/4 + ... = 1
                RealSeq halves([](const Index& n) { return real_from_rat(rat_pow(r(1, 2), n.get_ui())); });
                CauchyModulus m = ratio_test_modulus(r(1, 2), r(1), Index(1));
                list.push_back(limit(truncated_partial_sums(halves, m), m).value);
                break;
            }
            default: {
                // k/20 * (1/3 + 1/9 + ...) = k/40
                Rat scale(BigInt(k), BigInt(20));
                RealSeq terms([scale](const Index& n) { return real_from_rat(scale * rat_pow(r(1, 3), n.get_ui())); });
                CauchyModulus m = ratio_test_modulus(r(1, 3), scale, Index(1));
                list.push_back(limit(truncated_partial_sums(terms, m), m).value);
            }
        }
    }
    RealSeq en = RealSeq::from_list(list);
    Diagonal diag = cantor_diagonal(en, r(0), r(1));
    int valid = 0;
    for (long k = 1; k <= 20; ++k) {
        ApartnessWitness w = diag.witness(Index(k));
        IndexSchedule tail{w.tail, w.tail + 1, w.tail + 2, 2 * w.tail, 3 * w.tail + 1, 10 * w.tail};
        if (apartness_valid_on(diag.x - en.term(k), w, tail)) ++valid;
    }
    bool inside = !le_refute(c(0), diag.x, budget_to(50)) && !le_refute(diag.x, c(1), budget_to(50));
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream d;
    d << valid << "/20 apartness witnesses valid, 0 <= x <= 1 " << (inside ? "not refuted" : "REFUTED") << ", " << secs
      << " s";
    return {valid == 20 && inside && secs < 60.0, d.str()};
}

// 8. CLI golden outputs.
Verdict cli_golden() {
    struct Golden {
        std::vector<std::string> args;
        int code;
        std::string out;
    };
    std::vector<Golden> cases{
        {{"eval", "1/3 + 1/6", "--digits", "10"}, 0, "0.5000000000 ± 1e-10\n"},
        {{"cmp", "1/3", "1/2", "--eps", "1/100"}, 0, "LEFT: x < y + eps\n"},
        {{"digits", "e", "--digits", "30"}, 0, "2.718281828459045235360287471353 ± 1e-30\n"},
    };
    int ok = 0;
    for (const Golden& g : cases) {
        std::ostringstream out, err;
        if (cli::run(g.args, out, err) == g.code && out.str() == g.out) ++ok;
    }
    std::ostringstream out, err;
    int code = cli::run({"eval", "1/(0/1)"}, out, err);
    bool apart = code == 2 && err.str().find("cannot verify divisor apart from zero") != std::string::npos;
    std::ostringstream d;
    d << ok << "/3 goldens byte-identical; 1/(0/1) exit " << code;
    return {ok == 3 && apart, d.str()};
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        Verdict (*run)();
    };
    const Criterion criteria[] = {
        {"1 regularity", regularity},
        {"2 field/lattice axioms", field_axioms},
        {"3 equality lemma", equality_lemma},
        {"4 completeness", completeness},
        {"5 e to 30 digits", e_digits},
        {"6 archimedean/density", archimedean_and_density},
        {"7 uncountability", uncountability},
        {"8 cli golden", cli_golden},
    };
    int failed = 0;
    for (const Criterion& c : criteria) {
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        if (!v.pass) ++failed;
        std::printf("[%s] %s: %s\n", v.pass ? "PASS" : "FAIL", c.name, v.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
    return failed == 0 ? 0 : 1;
}
