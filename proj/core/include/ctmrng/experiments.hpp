#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ctmrng/histogram.hpp"
#include "ctmrng/sampler.hpp"
#include "ctmrng/table.hpp"
#include "ctmrng/tent_map.hpp"

// Experiment drivers.  Each takes a declarative spec, makes one pass over the
// generator stream and returns a ResultTable with one row per parameter cell.
// Sweeps over N are checkpointed: counts accumulate across the run and the
// estimates are recomputed at every N in the list, so the row for N is
// exactly the row an independent run of N iterates would produce (same
// stream prefix).

namespace ctmrng {

// A run whose histogram allocation would exceed its box budget is rejected
// before any memory is touched.
struct resource_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultBoxBudget = 50'000'000;

// Reference 4-component initial state used throughout the experiment suite.
inline const StateVector kReferenceX0 = {0.330, 0.3387564, 0.50492331, 0.0};

struct GeneratorSpec {
    CouplingConfig coupling = CouplingConfig::linear(4, 1e-14);
    StateVector x0;
    std::uint64_t transient = Generator::kDefaultTransient;

    Generator make() const { return Generator(coupling, x0, transient); }
};

struct DensitySweepSpec {
    GeneratorSpec generator;
    int component = 0;                                  // coordinate tallied
    std::vector<std::uint64_t> box_counts = {100};      // one accumulator per M
    std::vector<std::uint64_t> iterates = {1'000'000};  // checkpoints, strictly increasing
    std::uint64_t box_budget = kDefaultBoxBudget;
};

// Columns: n_iter, n_disc, e1, e2_sq.  Rows ordered by N (outer), M (inner).
ResultTable run_density_sweep(const DensitySweepSpec& spec);

struct CorrelationSpec {
    GeneratorSpec generator;
    std::vector<std::pair<int, int>> pairs;  // (k,l) with k < l; empty = all such pairs
    std::vector<std::uint64_t> box_counts = {100};  // per axis
    std::vector<std::uint64_t> iterates = {1'000'000};
    std::uint64_t box_budget = kDefaultBoxBudget;
};

// Tallies (x_k, x_l) of every post-transient state for each requested pair.
// Columns: n_iter, n_disc, comp_k, comp_l, ec1, ec2_sq.
ResultTable run_correlation(const CorrelationSpec& spec);

enum class SamplingKind { threshold, mixed };

struct AutocorrSweepSpec {
    GeneratorSpec generator;
    SamplingKind kind = SamplingKind::threshold;
    ThresholdSamplerConfig threshold;
    MixingSamplerConfig mixing;  // used when kind == mixed
    std::vector<std::uint64_t> box_counts = {10};
    std::vector<std::uint64_t> iterates = {100'000'000};  // generator iterates
    std::uint64_t box_budget = kDefaultBoxBudget;
};

// Tallies consecutive sampled pairs on the fly.  Columns: n_iter,
// nsampl_iter, n_disc, eac1.  nsampl_iter counts sampled values up to the
// checkpoint; tallied pairs = nsampl_iter - 1.  A checkpoint with no pair
// yet reports eac1 = 1 (every box empty).
ResultTable run_autocorrelation_sweep(const AutocorrSweepSpec& spec);

struct SeedScanSpec {
    CouplingConfig coupling = CouplingConfig::linear(4, 1e-14);
    StateVector base;                 // component offsets of the seed family
    double stride = 1e-7;
    std::vector<double> multipliers;  // per component
    std::uint64_t count = 1000;       // seeds k = 1..count
    int component = 0;
    std::uint64_t box_count = 100;
    std::uint64_t iterates = 1'000'000;
    std::uint64_t transient = Generator::kDefaultTransient;
    std::uint64_t box_budget = kDefaultBoxBudget;
    unsigned threads = 0;  // 0 = hardware concurrency

    // x0_j(k) = base_j + stride * multipliers_j * k
    StateVector seed(std::uint64_t k) const;
};

// One density run per seed; seeds fan out across a worker pool but each
// trajectory stays sequential, so rows are identical to serial runs.
// Columns: k, e1, e2_sq.  Rows ordered by k.
ResultTable run_seed_scan(const SeedScanSpec& spec);

struct SeedScanSummary {
    double min_e1 = 0.0;
    double max_e1 = 0.0;
    double mean_e1 = 0.0;
    std::vector<std::uint64_t> histogram;  // equal-width bins over [min,max]
};

// Requires a table with an e1 column and at least one row.
SeedScanSummary summarize_seed_scan(const ResultTable& table, std::size_t bins = 20);

struct CycleCheckSpec {
    GeneratorSpec generator;
    std::uint64_t budget = 10'000'000;  // cap on cycle-search steps
};

// Brent's algorithm over the raw orbit from x0; state equality is bitwise on
// all p components.  Columns: found, tail, cycle, steps.  steps counts every
// generator step spent searching.  No cycle within budget -> 0,0,0,steps.
ResultTable run_cycle_check(const CycleCheckSpec& spec);

struct BenchSpec {
    GeneratorSpec generator;
    std::uint64_t steps = 100'000'000;  // measured steps, after warmup
    std::uint64_t warmup = 1'000'000;
};

// Steady-state throughput of the bare step loop.  Columns: steps, seconds,
// steps_per_sec, numbers_per_sec (= p * steps/s, one number per component).
ResultTable run_bench(const BenchSpec& spec);

}  // namespace ctmrng
