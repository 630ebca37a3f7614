#include "ctmrng/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstring>
#include <mutex>
#include <string>
#include <thread>

namespace ctmrng {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_seconds(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void validate_checkpoints(const std::vector<std::uint64_t>& iterates) {
    if (iterates.empty()) throw std::invalid_argument("experiment: empty checkpoint list");
    std::uint64_t prev = 0;
    for (std::uint64_t n : iterates) {
        if (n <= prev)
            throw std::invalid_argument("experiment: checkpoints must be strictly increasing and >= 1");
        prev = n;
    }
}

void check_box_budget(std::uint64_t required, std::uint64_t budget) {
    if (required > budget)
        throw resource_limit_error("experiment: run needs " + std::to_string(required) +
                                   " histogram boxes, budget is " + std::to_string(budget));
}

void validate_component(int component, int p) {
    if (component < 0 || component >= p)
        throw std::invalid_argument("experiment: component " + std::to_string(component) +
                                    " outside [0," + std::to_string(p) + ")");
}

}  // namespace

ResultTable run_density_sweep(const DensitySweepSpec& spec) {
    validate_checkpoints(spec.iterates);
    if (spec.box_counts.empty()) throw std::invalid_argument("experiment: empty box-count list");
    validate_component(spec.component, spec.generator.coupling.p);
    std::uint64_t required = 0;
    for (std::uint64_t m : spec.box_counts) required += m;
    check_box_budget(required, spec.box_budget);

    const auto start = Clock::now();
    std::vector<HistogramAccumulator1D> accs;
    accs.reserve(spec.box_counts.size());
    for (std::uint64_t m : spec.box_counts) accs.emplace_back(Partition1D(m));

    Generator gen = spec.generator.make();
    const std::size_t comp = static_cast<std::size_t>(spec.component);

    ResultTable table;
    table.columns = {"n_iter", "n_disc", "e1", "e2_sq"};
    std::uint64_t done = 0;
    for (std::uint64_t n : spec.iterates) {
        gen.emit(n - done, [&](std::span<const double> x) {
            const double v = x[comp];
            for (auto& acc : accs) acc.tally(v);
        });
        done = n;
        for (std::size_t i = 0; i < accs.size(); ++i) {
            const DensityEstimate est = density(accs[i]);
            table.add_row({static_cast<double>(n), static_cast<double>(spec.box_counts[i]),
                           discrepancy_l1(est), discrepancy_l2_squared(est)});
        }
    }
    table.wall_seconds = elapsed_seconds(start);
    return table;
}

ResultTable run_correlation(const CorrelationSpec& spec) {
    validate_checkpoints(spec.iterates);
    if (spec.box_counts.empty()) throw std::invalid_argument("experiment: empty box-count list");
    const int p = spec.generator.coupling.p;

    std::vector<std::pair<int, int>> pairs = spec.pairs;
    if (pairs.empty()) {
        for (int k = 0; k < p; ++k)
            for (int l = k + 1; l < p; ++l) pairs.emplace_back(k, l);
    }
    for (const auto& [k, l] : pairs) {
        validate_component(k, p);
        validate_component(l, p);
        if (k >= l)
            throw std::invalid_argument("experiment: component pair must satisfy k < l");
    }

    std::uint64_t boxes_per_pair = 0;
    for (std::uint64_t m : spec.box_counts) boxes_per_pair += m * m;
    check_box_budget(boxes_per_pair * pairs.size(), spec.box_budget);

    const auto start = Clock::now();
    // accs[pair][m]
    std::vector<std::vector<HistogramAccumulator2D>> accs(pairs.size());
    for (auto& row : accs) {
        row.reserve(spec.box_counts.size());
        for (std::uint64_t m : spec.box_counts) row.emplace_back(Partition2D(m));
    }

    Generator gen = spec.generator.make();
    ResultTable table;
    table.columns = {"n_iter", "n_disc", "comp_k", "comp_l", "ec1", "ec2_sq"};
    std::uint64_t done = 0;
    for (std::uint64_t n : spec.iterates) {
        gen.emit(n - done, [&](std::span<const double> x) {
            for (std::size_t q = 0; q < pairs.size(); ++q) {
                const double a = x[static_cast<std::size_t>(pairs[q].first)];
                const double b = x[static_cast<std::size_t>(pairs[q].second)];
                for (auto& acc : accs[q]) acc.tally(a, b);
            }
        });
        done = n;
        for (std::size_t i = 0; i < spec.box_counts.size(); ++i) {
            for (std::size_t q = 0; q < pairs.size(); ++q) {
                const CorrelationEstimate est = correlation(accs[q][i]);
                table.add_row({static_cast<double>(n), static_cast<double>(spec.box_counts[i]),
                               static_cast<double>(pairs[q].first),
                               static_cast<double>(pairs[q].second), discrepancy_l1(est),
                               discrepancy_l2_squared(est)});
            }
        }
    }
    table.wall_seconds = elapsed_seconds(start);
    return table;
}

namespace {

template <class Rule>
ResultTable autocorr_impl(const AutocorrSweepSpec& spec, const Rule& rule) {
    const auto start = Clock::now();
    std::vector<HistogramAccumulator2D> accs;
    accs.reserve(spec.box_counts.size());
    for (std::uint64_t m : spec.box_counts) accs.emplace_back(Partition2D(m));

    Generator gen = spec.generator.make();
    ResultTable table;
    table.columns = {"n_iter", "nsampl_iter", "n_disc", "eac1"};

    bool have_prev = false;
    double prev = 0.0;
    std::uint64_t nsampl = 0;
    std::uint64_t done = 0;
    for (std::uint64_t n : spec.iterates) {
        gen.emit(n - done, [&](std::span<const double> x) {
            const std::optional<double> v = rule.select(x);
            if (!v) return;
            if (have_prev)
                for (auto& acc : accs) acc.tally(prev, *v);
            prev = *v;
            have_prev = true;
            ++nsampl;
        });
        done = n;
        for (std::size_t i = 0; i < accs.size(); ++i) {
            // An empty tally means every box density is 0, so the L1 sum is 1.
            const double eac1 =
                accs[i].total() == 0 ? 1.0 : discrepancy_l1(correlation(accs[i]));
            table.add_row({static_cast<double>(n), static_cast<double>(nsampl),
                           static_cast<double>(spec.box_counts[i]), eac1});
        }
    }
    table.wall_seconds = elapsed_seconds(start);
    return table;
}

}  // namespace

ResultTable run_autocorrelation_sweep(const AutocorrSweepSpec& spec) {
    validate_checkpoints(spec.iterates);
    if (spec.box_counts.empty()) throw std::invalid_argument("experiment: empty box-count list");
    std::uint64_t required = 0;
    for (std::uint64_t m : spec.box_counts) required += m * m;
    check_box_budget(required, spec.box_budget);

    const int p = spec.generator.coupling.p;
    if (spec.kind == SamplingKind::threshold) {
        spec.threshold.validate(p);
        return autocorr_impl(spec, ThresholdRule(spec.threshold));
    }
    spec.mixing.validate(p);
    return autocorr_impl(spec, MixingRule(spec.mixing));
}

StateVector SeedScanSpec::seed(std::uint64_t k) const {
    StateVector x0(base.size());
    for (std::size_t j = 0; j < base.size(); ++j)
        x0[j] = base[j] + stride * multipliers[j] * static_cast<double>(k);
    return x0;
}

ResultTable run_seed_scan(const SeedScanSpec& spec) {
    spec.coupling.validate();
    const int p = spec.coupling.p;
    if (spec.base.size() != static_cast<std::size_t>(p) ||
        spec.multipliers.size() != static_cast<std::size_t>(p))
        throw std::invalid_argument("experiment: seed base/multipliers must have p components");
    if (spec.count < 1) throw std::invalid_argument("experiment: seed count must be >= 1");
    if (spec.iterates < 1) throw std::invalid_argument("experiment: iterate count must be >= 1");
    validate_component(spec.component, p);

    unsigned threads = spec.threads ? spec.threads : std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;
    threads = static_cast<unsigned>(
        std::min<std::uint64_t>(threads, spec.count));
    check_box_budget(spec.box_count * threads, spec.box_budget);

    const auto start = Clock::now();
    std::vector<std::vector<double>> rows(spec.count);

    std::atomic<std::uint64_t> next{1};
    std::mutex error_mutex;
    std::exception_ptr first_error;

    auto worker = [&] {
        try {
            for (std::uint64_t k = next.fetch_add(1); k <= spec.count; k = next.fetch_add(1)) {
                Generator gen(spec.coupling, spec.seed(k), spec.transient);
                HistogramAccumulator1D acc{Partition1D(spec.box_count)};
                const std::size_t comp = static_cast<std::size_t>(spec.component);
                gen.emit(spec.iterates,
                         [&](std::span<const double> x) { acc.tally(x[comp]); });
                const DensityEstimate est = density(acc);
                rows[k - 1] = {static_cast<double>(k), discrepancy_l1(est),
                               discrepancy_l2_squared(est)};
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
        }
    };

    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    ResultTable table;
    table.columns = {"k", "e1", "e2_sq"};
    table.rows = std::move(rows);
    table.wall_seconds = elapsed_seconds(start);
    return table;
}

SeedScanSummary summarize_seed_scan(const ResultTable& table, std::size_t bins) {
    const auto it = std::find(table.columns.begin(), table.columns.end(), "e1");
    if (it == table.columns.end())
        throw std::invalid_argument("experiment: summary needs an e1 column");
    if (table.rows.empty()) throw std::invalid_argument("experiment: summary needs rows");
    if (bins < 1) throw std::invalid_argument("experiment: summary needs >= 1 bin");
    const std::size_t col = static_cast<std::size_t>(it - table.columns.begin());

    SeedScanSummary summary;
    summary.min_e1 = table.rows[0][col];
    summary.max_e1 = table.rows[0][col];
    double sum = 0.0;
    for (const auto& row : table.rows) {
        const double v = row[col];
        summary.min_e1 = std::min(summary.min_e1, v);
        summary.max_e1 = std::max(summary.max_e1, v);
        sum += v;
    }
    summary.mean_e1 = sum / static_cast<double>(table.rows.size());

    summary.histogram.assign(bins, 0);
    const double width = (summary.max_e1 - summary.min_e1) / static_cast<double>(bins);
    for (const auto& row : table.rows) {
        std::size_t b = 0;
        if (width > 0.0) {
            b = static_cast<std::size_t>((row[col] - summary.min_e1) / width);
            if (b >= bins) b = bins - 1;  // max lands in the closed last bin
        }
        ++summary.histogram[b];
    }
    return summary;
}

namespace {

bool states_equal(const Generator& a, const Generator& b) {
    const auto sa = a.state();
    const auto sb = b.state();
    return std::memcmp(sa.data(), sb.data(), sa.size() * sizeof(double)) == 0;
}

}  // namespace

ResultTable run_cycle_check(const CycleCheckSpec& spec) {
    const auto start = Clock::now();
    Generator tortoise = spec.generator.make();
    Generator hare = spec.generator.make();

    std::uint64_t steps = 0;
    hare.step();
    ++steps;

    // Brent: tortoise pinned at index 2^i - 1, hare walks; on match the walk
    // distance is the cycle length.
    std::uint64_t power = 1;
    std::uint64_t lam = 1;
    bool found = true;
    while (!states_equal(tortoise, hare)) {
        if (steps >= spec.budget) {
            found = false;
            break;
        }
        if (power == lam) {
            tortoise = hare;
            power *= 2;
            lam = 0;
        }
        hare.step();
        ++steps;
        ++lam;
    }

    ResultTable table;
    table.columns = {"found", "tail", "cycle", "steps"};
    if (!found) {
        table.add_row({0.0, 0.0, 0.0, static_cast<double>(steps)});
    } else {
        // Tail length: walk two fresh orbits lam apart until they meet.
        Generator front = spec.generator.make();
        Generator back = spec.generator.make();
        for (std::uint64_t i = 0; i < lam; ++i) {
            front.step();
            ++steps;
        }
        std::uint64_t mu = 0;
        while (!states_equal(back, front)) {
            back.step();
            front.step();
            steps += 2;
            ++mu;
        }
        table.add_row({1.0, static_cast<double>(mu), static_cast<double>(lam),
                       static_cast<double>(steps)});
    }
    table.wall_seconds = elapsed_seconds(start);
    return table;
}

ResultTable run_bench(const BenchSpec& spec) {
    if (spec.steps < 1) throw std::invalid_argument("experiment: bench needs >= 1 step");
    Generator gen = spec.generator.make();
    for (std::uint64_t i = 0; i < spec.warmup; ++i) gen.step();

    const auto start = Clock::now();
    for (std::uint64_t i = 0; i < spec.steps; ++i) gen.step();
    const double seconds = elapsed_seconds(start);

    // The recurrence is loop-carried and advance() can throw on a non-finite
    // state, so the timed loop cannot be elided.
    const double rate = static_cast<double>(spec.steps) / seconds;
    ResultTable table;
    table.columns = {"steps", "seconds", "steps_per_sec", "numbers_per_sec"};
    table.add_row({static_cast<double>(spec.steps), seconds, rate,
                   rate * static_cast<double>(gen.dimension())});
    table.wall_seconds = seconds;
    return table;
}

}  // namespace ctmrng
