#include "bishop/kernels.hpp"

#include <cstddef>
#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bishop::kernels {

namespace {

// Exceptions may not leave an OpenMP region; the first one is rethrown after it.
class ErrorSlot {
public:
    template <class F>
    void run(F&& f) noexcept {
        try {
            f();
        } catch (...) {
            std::lock_guard lock(mu_);
            if (!error_) error_ = std::current_exception();
        }
    }
    void rethrow() const {
        if (error_) std::rethrow_exception(error_);
    }

private:
    std::mutex mu_;
    std::exception_ptr error_;
};

bool violates(const Rat& a, const Rat& b, const Index& m, const Index& n, Rat* distance) {
    Rat d = rat_abs(a - b);
    bool bad = d > Rat(BigInt(1), m) + Rat(BigInt(1), n);
    if (bad && distance) *distance = std::move(d);
    return bad;
}

std::vector<Index> doubled(const IndexSchedule& budget) {
    std::vector<Index> out;
    out.reserve(budget.size());
    for (const Index& n : budget) out.push_back(2 * n);
    return out;
}

}  // namespace

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

std::optional<RegularityViolation> regularity_violation_serial(const Real& x, const IndexSchedule& indices) {
    for (std::size_t i = 0; i < indices.size(); ++i) {
        Rat xi = x.approx(indices[i]);
        for (std::size_t j = i + 1; j < indices.size(); ++j) {
            Rat d;
            if (violates(xi, x.approx(indices[j]), indices[i], indices[j], &d))
                return RegularityViolation{indices[i], indices[j], std::move(d)};
        }
    }
    return std::nullopt;
}

std::vector<Rat> approximants_parallel(const Real& x, const IndexSchedule& indices) {
    std::vector<Rat> values(indices.size());
    const auto count = static_cast<std::ptrdiff_t>(indices.size());
    ErrorSlot errors;
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        errors.run([&] { values[i] = x.approx(indices[i]); });
    }
    errors.rethrow();
    return values;
}

std::optional<RegularityViolation> regularity_violation_parallel(const Real& x, const IndexSchedule& indices) {
    std::vector<Rat> values = approximants_parallel(x, indices);
    const auto count = static_cast<std::ptrdiff_t>(indices.size());
    // first_bad[i] = smallest j > i violating against i, or count.
    std::vector<std::ptrdiff_t> first_bad(indices.size(), count);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        for (std::ptrdiff_t j = i + 1; j < count; ++j) {
            if (violates(values[i], values[j], indices[i], indices[j], nullptr)) {
                first_bad[i] = j;
                break;
            }
        }
    }
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        if (std::ptrdiff_t j = first_bad[i]; j < count)
            return RegularityViolation{indices[i], indices[j], rat_abs(values[i] - values[j])};
    }
    return std::nullopt;
}

std::optional<EqCounterexample> eq_refute_parallel(const Real& x, const Real& y, const IndexSchedule& budget) {
    std::vector<Rat> xs = approximants_parallel(x, budget);
    std::vector<Rat> ys = approximants_parallel(y, budget);
    for (std::size_t i = 0; i < budget.size(); ++i) {
        Rat d = rat_abs(xs[i] - ys[i]);
        if (d > Rat(BigInt(2), budget[i])) return EqCounterexample{budget[i], std::move(d)};
    }
    return std::nullopt;
}

std::optional<LtWitness> le_refute_parallel(const Real& x, const Real& y, const IndexSchedule& budget) {
    std::vector<Index> at = doubled(budget);
    std::vector<Rat> xs = approximants_parallel(x, at);
    std::vector<Rat> ys = approximants_parallel(y, at);
    for (std::size_t i = 0; i < budget.size(); ++i) {
        Rat gap = xs[i] - ys[i] - Rat(BigInt(1), budget[i]);
        if (gap.sign() > 0) return LtWitness{budget[i], std::move(gap)};
    }
    return std::nullopt;
}

}  // namespace bishop::kernels
