#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "ctmrng/sampler.hpp"

// Box-count estimation of distribution, correlation and autocorrelation
// functions, and their L1/L2 discrepancies against the uniform measure.
//
// The interval [-1,1] is cut into M equal boxes r_i = [s_i, s_{i+1}) with
// s_i = -1 + 2i/M; the last box is closed at 1.  The density estimate is the
// step function P_i = (M/2N) * #r_i, normalized so (2/M) * sum P_i = 1.  The
// square [-1,1]^2 gets the analogous M x M partition with estimate
// C_ij = (M^2/4N) * #r_ij.
//
// Discrepancies are the L1/L2 norms of the relative deviation from the
// uniform value (0.5 on the interval, 0.25 on the square) under normalized
// Lebesgue measure:
//   E1    = (1/M)   * sum |2 P_i - 1|        E2^2    = (1/M)   * sum (2 P_i - 1)^2
//   E_C1  = (1/M^2) * sum |4 C_ij - 1|       E_C2^2  = (1/M^2) * sum (4 C_ij - 1)^2
// For Poisson box counts with mean lambda = N/boxes this gives
// E1 ~ E|c-lambda|/lambda and E2^2 ~ 1/lambda, handy as an oracle.

namespace ctmrng {

class Partition1D {
public:
    // 1 <= box_count <= 10^7 (the 1-D experiment range).
    explicit Partition1D(std::uint64_t box_count);

    std::uint64_t box_count() const noexcept { return m_; }
    double box_width() const noexcept { return 2.0 / static_cast<double>(m_); }

    // Left edge s_i = -1 + 2i/M; edge(M) == 1 exactly.
    double edge(std::uint64_t i) const noexcept {
        return -1.0 + (2.0 * static_cast<double>(i)) / static_cast<double>(m_);
    }

    // Index of the box containing x, i.e. the unique i with s_i <= x < s_{i+1}
    // (x = 1 falls in the closed last box).  Fast path: floor((x+1)*M/2)
    // clamped to M-1.  The raw floor can land one box off when x sits within
    // a few ulps of an edge, so near-edge results are re-checked against the
    // edge values themselves.  The rounding error of z is < 1e-8 index units
    // for M <= 1e7, far inside the guard band.  Requires x in [-1,1].
    std::uint64_t box_index(double x) const noexcept {
        const double z = (x + 1.0) * half_m_;
        std::uint64_t i = z >= max_index_ ? m_ - 1 : static_cast<std::uint64_t>(z);
        const double frac = z - static_cast<double>(i);
        if (frac < kEdgeGuard || frac > 1.0 - kEdgeGuard) {
            while (i > 0 && x < edge(i)) --i;
            while (i + 1 < m_ && x >= edge(i + 1)) ++i;
        }
        return i;
    }

    bool operator==(const Partition1D& other) const noexcept { return m_ == other.m_; }

private:
    static constexpr double kEdgeGuard = 1e-6;

    std::uint64_t m_;
    double half_m_;
    double max_index_;  // M-1 as double, the clamp threshold
};

class Partition2D {
public:
    // 1 <= box_count <= 10^3 per axis (2-D estimates are stored dense).
    explicit Partition2D(std::uint64_t box_count);

    std::uint64_t box_count() const noexcept { return axis_.box_count(); }
    const Partition1D& axis() const noexcept { return axis_; }

    bool operator==(const Partition2D& other) const noexcept { return axis_ == other.axis_; }

private:
    Partition1D axis_;
};

class HistogramAccumulator1D {
public:
    explicit HistogramAccumulator1D(Partition1D partition);

    // Requires x in [-1,1]; anything else signals generator corruption.
    void tally(double x) {
        if (!(x >= -1.0 && x <= 1.0)) fail_range(x);
        ++counts_[partition_.box_index(x)];
        ++total_;
    }

    const Partition1D& partition() const noexcept { return partition_; }
    std::span<const std::uint64_t> counts() const noexcept { return counts_; }
    std::uint64_t total() const noexcept { return total_; }

    // Elementwise count sum; partitions must match.
    void merge(const HistogramAccumulator1D& other);

private:
    [[noreturn]] static void fail_range(double x);

    Partition1D partition_;
    std::vector<std::uint64_t> counts_;
    std::uint64_t total_ = 0;
};

class HistogramAccumulator2D {
public:
    explicit HistogramAccumulator2D(Partition2D partition);

    void tally(double x, double y) {
        if (!(x >= -1.0 && x <= 1.0)) fail_range(x);
        if (!(y >= -1.0 && y <= 1.0)) fail_range(y);
        const auto& axis = partition_.axis();
        ++counts_[axis.box_index(x) * partition_.box_count() + axis.box_index(y)];
        ++total_;
    }

    const Partition2D& partition() const noexcept { return partition_; }
    std::span<const std::uint64_t> counts() const noexcept { return counts_; }
    std::uint64_t total() const noexcept { return total_; }

    void merge(const HistogramAccumulator2D& other);

private:
    [[noreturn]] static void fail_range(double v);

    Partition2D partition_;
    std::vector<std::uint64_t> counts_;  // row-major M*M, row = x box
    std::uint64_t total_ = 0;
};

struct DensityEstimate {
    std::uint64_t box_count = 0;
    std::vector<double> values;  // P_i
};

struct CorrelationEstimate {
    std::uint64_t box_count = 0;         // per axis
    std::vector<double> values;          // C_ij row-major
};

// P_i = (1/2)(M/N) * counts_i.  Requires at least one tallied point.
DensityEstimate density(const HistogramAccumulator1D& acc);

// C_ij = (1/4)(M^2/N) * counts_ij.  Requires at least one tallied pair.
CorrelationEstimate correlation(const HistogramAccumulator2D& acc);

double discrepancy_l1(const DensityEstimate& est);
double discrepancy_l1(const CorrelationEstimate& est);
double discrepancy_l2_squared(const DensityEstimate& est);
double discrepancy_l2_squared(const CorrelationEstimate& est);

HistogramAccumulator1D merge(const HistogramAccumulator1D& a, const HistogramAccumulator1D& b);
HistogramAccumulator2D merge(const HistogramAccumulator2D& a, const HistogramAccumulator2D& b);

// Tally every consecutive pair (v_k, v_{k+1}) of the sampled stream into an
// M x M accumulator and return its correlation estimate.  Pairs overlap:
// N pairs for N+1 values.  Requires at least 2 values.
CorrelationEstimate autocorrelation_estimate(const SampledStream& s, std::uint64_t box_count);

}  // namespace ctmrng
