#include "ctmrng/histogram.hpp"

#include <cmath>
#include <string>

namespace ctmrng {

namespace {

constexpr std::uint64_t kMaxBoxes1D = 10'000'000;  // 1-D experiment range
constexpr std::uint64_t kMaxBoxes2D = 1'000;       // per axis, stored dense

}  // namespace

Partition1D::Partition1D(std::uint64_t box_count) : m_(box_count) {
    if (box_count < 1 || box_count > kMaxBoxes1D)
        throw std::invalid_argument("partition: box count " + std::to_string(box_count) +
                                    " outside [1, 1e7]");
    half_m_ = 0.5 * static_cast<double>(m_);
    max_index_ = static_cast<double>(m_ - 1);
}

Partition2D::Partition2D(std::uint64_t box_count) : axis_(box_count) {
    if (box_count > kMaxBoxes2D)
        throw std::invalid_argument("partition: 2-D box count " + std::to_string(box_count) +
                                    " outside [1, 1e3] per axis");
}

HistogramAccumulator1D::HistogramAccumulator1D(Partition1D partition)
    : partition_(partition), counts_(partition.box_count(), 0) {}

void HistogramAccumulator1D::fail_range(double x) {
    throw std::domain_error("histogram: value " + std::to_string(x) + " outside [-1,1]");
}

void HistogramAccumulator1D::merge(const HistogramAccumulator1D& other) {
    if (!(partition_ == other.partition_))
        throw std::invalid_argument("histogram: cannot merge accumulators over different partitions");
    for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
    total_ += other.total_;
}

HistogramAccumulator2D::HistogramAccumulator2D(Partition2D partition)
    : partition_(partition), counts_(partition.box_count() * partition.box_count(), 0) {}

void HistogramAccumulator2D::fail_range(double v) {
    throw std::domain_error("histogram: value " + std::to_string(v) + " outside [-1,1]");
}

void HistogramAccumulator2D::merge(const HistogramAccumulator2D& other) {
    if (!(partition_ == other.partition_))
        throw std::invalid_argument("histogram: cannot merge accumulators over different partitions");
    for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
    total_ += other.total_;
}

HistogramAccumulator1D merge(const HistogramAccumulator1D& a, const HistogramAccumulator1D& b) {
    HistogramAccumulator1D out = a;
    out.merge(b);
    return out;
}

HistogramAccumulator2D merge(const HistogramAccumulator2D& a, const HistogramAccumulator2D& b) {
    HistogramAccumulator2D out = a;
    out.merge(b);
    return out;
}

DensityEstimate density(const HistogramAccumulator1D& acc) {
    if (acc.total() == 0)
        throw std::invalid_argument("histogram: density estimate undefined for empty accumulator");
    const double m = static_cast<double>(acc.partition().box_count());
    const double n = static_cast<double>(acc.total());
    const double scale = 0.5 * m / n;
    DensityEstimate est;
    est.box_count = acc.partition().box_count();
    est.values.resize(acc.counts().size());
    for (std::size_t i = 0; i < est.values.size(); ++i)
        est.values[i] = scale * static_cast<double>(acc.counts()[i]);
    return est;
}

CorrelationEstimate correlation(const HistogramAccumulator2D& acc) {
    if (acc.total() == 0)
        throw std::invalid_argument("histogram: correlation estimate undefined for empty accumulator");
    const double m = static_cast<double>(acc.partition().box_count());
    const double n = static_cast<double>(acc.total());
    const double scale = 0.25 * m * m / n;
    CorrelationEstimate est;
    est.box_count = acc.partition().box_count();
    est.values.resize(acc.counts().size());
    for (std::size_t i = 0; i < est.values.size(); ++i)
        est.values[i] = scale * static_cast<double>(acc.counts()[i]);
    return est;
}

double discrepancy_l1(const DensityEstimate& est) {
    double sum = 0.0;
    for (double p : est.values) sum += std::fabs(2.0 * p - 1.0);
    return sum / static_cast<double>(est.box_count);
}

double discrepancy_l1(const CorrelationEstimate& est) {
    double sum = 0.0;
    for (double c : est.values) sum += std::fabs(4.0 * c - 1.0);
    const double m = static_cast<double>(est.box_count);
    return sum / (m * m);
}

double discrepancy_l2_squared(const DensityEstimate& est) {
    double sum = 0.0;
    for (double p : est.values) {
        const double d = 2.0 * p - 1.0;
        sum += d * d;
    }
    return sum / static_cast<double>(est.box_count);
}

double discrepancy_l2_squared(const CorrelationEstimate& est) {
    double sum = 0.0;
    for (double c : est.values) {
        const double d = 4.0 * c - 1.0;
        sum += d * d;
    }
    const double m = static_cast<double>(est.box_count);
    return sum / (m * m);
}

CorrelationEstimate autocorrelation_estimate(const SampledStream& s, std::uint64_t box_count) {
    if (s.values.size() < 2)
        throw std::invalid_argument("histogram: autocorrelation needs at least 2 sampled values");
    HistogramAccumulator2D acc{Partition2D(box_count)};
    for (std::size_t k = 0; k + 1 < s.values.size(); ++k) acc.tally(s.values[k], s.values[k + 1]);
    return correlation(acc);
}

}  // namespace ctmrng
