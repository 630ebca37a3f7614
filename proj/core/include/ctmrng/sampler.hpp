#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "ctmrng/tent_map.hpp"

// Chaotic subsampling.
//
// A raw component stream x_n^l plotted against its successor traces out the
// tent map, so raw chaotic numbers are predictable.  Sampling x_n^l only at
// the irregular instants when a second component x_n^m exceeds a threshold
// (or routing between three source components by threshold band) hides the
// generating function: consecutive sampled values are separated by a gap of
// at least K_m raw iterations, mixing many iterates of the map.

namespace ctmrng {

struct ThresholdSamplerConfig {
    int source = 0;   // component l whose values are emitted
    int control = 3;  // component m that gates the emission, != source
    double threshold = 0.998;

    // Requires source != control, both in [0,p), and -1 < threshold < 1.
    void validate(int p) const;
};

struct MixingSamplerConfig {
    std::array<int, 3> sources = {0, 1, 2};
    int control = 3;  // distinct from all sources
    std::array<double, 3> thresholds = {0.998, 0.9987, 0.9994};

    // Requires four distinct component indices in [0,p) and
    // -1 < T1 < T2 < T3 < 1.
    void validate(int p) const;
};

// Select x[source] when x[control] lies in the open interval ]T, 1[.
// A control value exactly equal to T (or to 1) is never selected.
class ThresholdRule {
public:
    explicit ThresholdRule(const ThresholdSamplerConfig& cfg)
        : source_(cfg.source), control_(cfg.control), threshold_(cfg.threshold) {}

    std::optional<double> select(std::span<const double> x) const {
        const double c = x[static_cast<std::size_t>(control_)];
        if (c > threshold_ && c < 1.0) return x[static_cast<std::size_t>(source_)];
        return std::nullopt;
    }

private:
    int source_;
    int control_;
    double threshold_;
};

// Route between three sources by the control component's threshold band:
//   x[l1] for control in ]T1,T2[,  x[l2] for [T2,T3[,  x[l3] for [T3,1[.
// Bands are pairwise disjoint: at most one emission per state.
class MixingRule {
public:
    explicit MixingRule(const MixingSamplerConfig& cfg)
        : sources_(cfg.sources), control_(cfg.control), thresholds_(cfg.thresholds) {}

    std::optional<double> select(std::span<const double> x) const {
        const double c = x[static_cast<std::size_t>(control_)];
        if (!(c > thresholds_[0]) || !(c < 1.0)) return std::nullopt;
        if (c < thresholds_[1]) return x[static_cast<std::size_t>(sources_[0])];
        if (c < thresholds_[2]) return x[static_cast<std::size_t>(sources_[1])];
        return x[static_cast<std::size_t>(sources_[2])];
    }

private:
    std::array<int, 3> sources_;
    int control_;
    std::array<double, 3> thresholds_;
};

struct SampledStream {
    std::vector<double> values;
    std::vector<std::uint64_t> indices;  // originating iterate index, strictly increasing

    std::size_t size() const noexcept { return values.size(); }
};

// Streaming overloads consume the generator until `max_out` values are
// emitted or `max_steps` post-transient iterates have been examined
// (max_steps = 0 means no step limit).  Indices count post-transient
// iterates from the generator's current position.
SampledStream sample_threshold(Generator& gen, const ThresholdSamplerConfig& cfg,
                               std::uint64_t max_out, std::uint64_t max_steps = 0);
SampledStream sample_mixed(Generator& gen, const MixingSamplerConfig& cfg,
                           std::uint64_t max_out, std::uint64_t max_steps = 0);

// Finite-stream overloads for precomputed state sequences; stop at stream end.
SampledStream sample_threshold(std::span<const StateVector> stream,
                               const ThresholdSamplerConfig& cfg, std::uint64_t max_out);
SampledStream sample_mixed(std::span<const StateVector> stream, const MixingSamplerConfig& cfg,
                           std::uint64_t max_out);

// Smallest gap between consecutive source indices; empty for < 2 entries.
std::optional<std::uint64_t> min_gap(const SampledStream& s);

}  // namespace ctmrng
