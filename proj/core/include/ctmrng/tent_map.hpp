#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

// Weakly coupled symmetric tent maps.
//
// p copies of the symmetric tent map f_a(x) = 1 - a|x| on [-1,1] are coupled
// through a row-stochastic matrix A whose row i has diagonal 1-(p-1)*eps_i
// and constant off-diagonal eps_i.  One step of the system is
//
//     X' = A * f(X),   f applied componentwise.
//
// The coupling constants are tiny (1e-14 for doubles): enough to break the
// short cycles that a discretized scalar tent map falls into, too small to
// disturb the uniform marginal distribution of each component.

namespace ctmrng {

using StateVector = std::vector<double>;

// Thrown when a state component stops being finite mid-stream.
struct stream_corruption_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// f_a(x) = 1 - a|x|.  Total on [-1,1]; for a = 2 it maps [-1,1] onto itself.
inline double tent(double x, double a = 2.0) noexcept {
    return 1.0 - a * std::fabs(x);
}

enum class RatioRule {
    linear,    // eps_i = i * eps_1 (1-based), the canonical choice
    explicit_  // caller supplies the full vector
};

struct CouplingConfig {
    int p = 4;
    double a = 2.0;
    std::vector<double> eps;  // one constant per row, size p
    RatioRule ratio_rule = RatioRule::linear;

    // eps_i = i * eps1 for i = 1..p.
    static CouplingConfig linear(int p, double eps1, double a = 2.0);
    // caller-supplied per-row constants.
    static CouplingConfig explicit_eps(std::vector<double> eps, double a = 2.0);

    // Requires p >= 1, eps.size() == p, and 0 <= eps_i with 1-(p-1)*eps_i > 0
    // so every diagonal entry of A stays positive.  Throws std::invalid_argument.
    void validate() const;
};

struct CouplingMatrix {
    int p = 0;
    std::vector<double> entries;  // row-major p*p

    double operator()(int i, int j) const { return entries[static_cast<std::size_t>(i) * p + j]; }
};

// Row i = [eps_i, ..., 1-(p-1)*eps_i at column i, ..., eps_i].
// Validates the config; every row sums to 1 up to accumulated rounding.
CouplingMatrix build_coupling_matrix(const CouplingConfig& config);

// Sequential stream of state vectors X_{n+1} = A * f(X_n).
//
// The recurrence is loop-carried: a Generator may be moved between threads
// but never shared mutably.  Independent generators are fully parallel.
//
// The inner loop uses the row structure of A to avoid the O(p^2) matvec:
//   X'_i = (1-(p-1)*eps_i)*f_i + eps_i*(S - f_i),   S = sum_j f_j.
// Only additions, multiplications and absolute values are used; no division.
class Generator {
public:
    // x0 components must be finite and in [-1,1].  The first `transient`
    // steps are warm-up: they are taken but not emitted.
    Generator(const CouplingConfig& config, std::span<const double> x0,
              std::uint64_t transient = kDefaultTransient);

    static constexpr std::uint64_t kDefaultTransient = 1000;

    int dimension() const noexcept { return p_; }
    const CouplingConfig& config() const noexcept { return config_; }
    std::uint64_t transient() const noexcept { return transient_; }
    std::uint64_t steps_taken() const noexcept { return n_; }

    // Count of post-transient states produced so far.
    std::uint64_t emitted_count() const noexcept {
        return n_ > transient_ ? n_ - transient_ : 0;
    }

    std::span<const double> state() const noexcept { return x_; }

    // Advance one step and return the new state.
    std::span<const double> step() {
        advance();
        return x_;
    }

    // Advance `steps` steps; invoke fn(state) for every post-transient state.
    template <class Fn>
    void run(std::uint64_t steps, Fn&& fn) {
        for (std::uint64_t k = 0; k < steps; ++k) {
            advance();
            if (n_ > transient_) fn(std::span<const double>(x_));
        }
    }

    // Consume any remaining transient, then invoke fn(state) exactly `count` times.
    template <class Fn>
    void emit(std::uint64_t count, Fn&& fn) {
        while (n_ < transient_) advance();
        for (std::uint64_t k = 0; k < count; ++k) {
            advance();
            fn(std::span<const double>(x_));
        }
    }

private:
    void advance() {
        const int p = p_;
        double s = 0.0;
        for (int j = 0; j < p; ++j) {
            const double fx = 1.0 - a_ * std::fabs(x_[j]);
            fx_[j] = fx;
            s += fx;
        }
        // |s| <= p for a well-behaved state; catches NaN/Inf in one compare.
        if (!(s >= -sum_bound_ && s <= sum_bound_)) fail_nonfinite();
        for (int j = 0; j < p; ++j) {
            x_[j] = diag_[j] * fx_[j] + eps_[j] * (s - fx_[j]);
        }
        ++n_;
    }

    [[noreturn]] void fail_nonfinite() const;

    CouplingConfig config_;
    int p_;
    double a_;
    double sum_bound_;
    std::vector<double> diag_;  // 1-(p-1)*eps_i
    std::vector<double> eps_;
    std::vector<double> x_;
    std::vector<double> fx_;  // scratch for f(X)
    std::uint64_t n_ = 0;
    std::uint64_t transient_;
};

// Advance `steps` steps, materializing every post-transient state.
// Intended for tests and small runs; large runs should stream via Generator::run.
std::vector<StateVector> iterate(Generator& generator, std::uint64_t steps);

}  // namespace ctmrng
