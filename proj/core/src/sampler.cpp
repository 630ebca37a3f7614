#include "ctmrng/sampler.hpp"

#include <limits>
#include <string>

namespace ctmrng {

namespace {

void check_component(int idx, int p, const char* what) {
    if (idx < 0 || idx >= p)
        throw std::invalid_argument(std::string("sampler: ") + what + " component " +
                                    std::to_string(idx) + " outside [0," + std::to_string(p) + ")");
}

template <class Rule>
SampledStream sample_stream(Generator& gen, const Rule& rule, std::uint64_t max_out,
                            std::uint64_t max_steps) {
    SampledStream out;
    if (max_out == 0) return out;
    std::uint64_t index = 0;
    const std::uint64_t limit = max_steps == 0 ? std::numeric_limits<std::uint64_t>::max() : max_steps;
    while (gen.steps_taken() < gen.transient()) gen.step();
    while (index < limit) {
        const auto x = gen.step();
        if (auto v = rule.select(x)) {
            out.values.push_back(*v);
            out.indices.push_back(index);
            if (out.values.size() >= max_out) break;
        }
        ++index;
    }
    return out;
}

template <class Rule>
SampledStream sample_finite(std::span<const StateVector> stream, const Rule& rule,
                            std::uint64_t max_out) {
    SampledStream out;
    if (max_out == 0) return out;
    for (std::uint64_t index = 0; index < stream.size(); ++index) {
        if (auto v = rule.select(stream[index])) {
            out.values.push_back(*v);
            out.indices.push_back(index);
            if (out.values.size() >= max_out) break;
        }
    }
    return out;
}

}  // namespace

void ThresholdSamplerConfig::validate(int p) const {
    check_component(source, p, "source");
    check_component(control, p, "control");
    if (source == control)
        throw std::invalid_argument("sampler: source and control components must differ");
    if (!(threshold > -1.0 && threshold < 1.0))
        throw std::invalid_argument("sampler: threshold must lie in (-1,1)");
}

void MixingSamplerConfig::validate(int p) const {
    for (int s : sources) check_component(s, p, "source");
    check_component(control, p, "control");
    const int a = sources[0], b = sources[1], c = sources[2];
    if (a == b || a == c || b == c || a == control || b == control || c == control)
        throw std::invalid_argument("sampler: the three sources and the control must be distinct");
    if (!(-1.0 < thresholds[0] && thresholds[0] < thresholds[1] && thresholds[1] < thresholds[2] &&
          thresholds[2] < 1.0))
        throw std::invalid_argument("sampler: thresholds must satisfy -1 < T1 < T2 < T3 < 1");
}

SampledStream sample_threshold(Generator& gen, const ThresholdSamplerConfig& cfg,
                               std::uint64_t max_out, std::uint64_t max_steps) {
    cfg.validate(gen.dimension());
    return sample_stream(gen, ThresholdRule(cfg), max_out, max_steps);
}

SampledStream sample_mixed(Generator& gen, const MixingSamplerConfig& cfg, std::uint64_t max_out,
                           std::uint64_t max_steps) {
    cfg.validate(gen.dimension());
    return sample_stream(gen, MixingRule(cfg), max_out, max_steps);
}

SampledStream sample_threshold(std::span<const StateVector> stream,
                               const ThresholdSamplerConfig& cfg, std::uint64_t max_out) {
    if (!stream.empty()) cfg.validate(static_cast<int>(stream.front().size()));
    return sample_finite(stream, ThresholdRule(cfg), max_out);
}

SampledStream sample_mixed(std::span<const StateVector> stream, const MixingSamplerConfig& cfg,
                           std::uint64_t max_out) {
    if (!stream.empty()) cfg.validate(static_cast<int>(stream.front().size()));
    return sample_finite(stream, MixingRule(cfg), max_out);
}

std::optional<std::uint64_t> min_gap(const SampledStream& s) {
    if (s.indices.size() < 2) return std::nullopt;
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    for (std::size_t k = 1; k < s.indices.size(); ++k) {
        const std::uint64_t gap = s.indices[k] - s.indices[k - 1];
        if (gap < best) best = gap;
    }
    return best;
}

}  // namespace ctmrng
