// Command-line frontend: configures generators, runs experiments, serializes
// results as CSV, and streams raw generator output for external consumers.
//
// Exit codes: 0 success, 2 flag or config validation error, 3 resource-guard
// rejection, 4 I/O failure, 1 anything else (e.g. stream corruption).

#include <cstdio>
#include <cstring>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ctmrng/experiments.hpp"

namespace {

using namespace ctmrng;

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// stdout or a file, binary safe, error-checked.
class OutputFile {
public:
    explicit OutputFile(const std::string& path) {
        if (path.empty()) {
            file_ = stdout;
        } else {
            file_ = std::fopen(path.c_str(), "wb");
            if (!file_) throw io_error("cannot open output file: " + path);
            owned_ = true;
        }
    }
    OutputFile(const OutputFile&) = delete;
    OutputFile& operator=(const OutputFile&) = delete;
    ~OutputFile() {
        if (owned_ && file_) std::fclose(file_);
    }

    void write(const void* data, std::size_t bytes) {
        if (std::fwrite(data, 1, bytes, file_) != bytes) throw io_error("write failed");
    }
    void write(const std::string& s) { write(s.data(), s.size()); }

    void close() {
        if (std::fflush(file_) != 0) throw io_error("flush failed");
        if (owned_) {
            FILE* f = file_;
            file_ = nullptr;
            owned_ = false;
            if (std::fclose(f) != 0) throw io_error("close failed");
        }
    }

private:
    FILE* file_ = nullptr;
    bool owned_ = false;
};

enum class Format { csv, raw_f64, fixed32 };

// Buffered per-value encoder.  Binary formats are little-endian regardless
// of host order (bytes are emitted by shifting).
class ValueSink {
public:
    ValueSink(OutputFile& out, Format format) : out_(out), format_(format) {}

    void push(double v) {
        switch (format_) {
            case Format::csv:
                buffer_ += format_double(v, 17);
                buffer_ += '\n';
                break;
            case Format::raw_f64: {
                std::uint64_t bits;
                std::memcpy(&bits, &v, sizeof bits);
                for (int i = 0; i < 8; ++i) buffer_ += static_cast<char>((bits >> (8 * i)) & 0xff);
                break;
            }
            case Format::fixed32: {
                const std::uint32_t u = to_fixed32(v);
                for (int i = 0; i < 4; ++i) buffer_ += static_cast<char>((u >> (8 * i)) & 0xff);
                break;
            }
        }
        if (buffer_.size() >= kFlushBytes) flush();
    }

    void finish() {
        flush();
        out_.close();
    }

    // floor((x+1)/2 * 2^32) clamped to [0, 2^32-1]: -1 -> 0, 1 -> 2^32-1.
    static std::uint32_t to_fixed32(double x) {
        const double z = (x + 1.0) * 2147483648.0;
        if (!(z > 0.0)) return 0;
        if (z >= 4294967296.0) return 0xffffffffu;
        return static_cast<std::uint32_t>(z);
    }

private:
    void flush() {
        out_.write(buffer_);
        buffer_.clear();
    }

    static constexpr std::size_t kFlushBytes = 1 << 16;

    OutputFile& out_;
    Format format_;
    std::string buffer_;
};

struct GeneratorFlags {
    int p = 4;
    double eps1 = 1e-14;
    std::vector<double> eps_list;
    double a = 2.0;
    std::vector<double> x0;
    std::uint64_t transient = Generator::kDefaultTransient;
};

void add_generator_flags(CLI::App* cmd, GeneratorFlags& g) {
    cmd->add_option("--p", g.p, "number of coupled maps")->check(CLI::PositiveNumber);
    cmd->add_option("--eps1", g.eps1, "base coupling constant, eps_i = i*eps1");
    cmd->add_option("--eps-list", g.eps_list, "explicit per-row coupling constants (overrides --eps1)")
        ->delimiter(',');
    cmd->add_option("--a", g.a, "tent map slope");
    cmd->add_option("--x0", g.x0, "initial state components")->delimiter(',');
    cmd->add_option("--transient", g.transient, "warm-up steps dropped from all statistics");
}

GeneratorSpec build_generator(const GeneratorFlags& g, const CLI::App* cmd) {
    GeneratorSpec spec;
    if (!g.eps_list.empty()) {
        if (cmd->count("--p") && g.p != static_cast<int>(g.eps_list.size()))
            throw std::invalid_argument("--p disagrees with the length of --eps-list");
        spec.coupling = CouplingConfig::explicit_eps(g.eps_list, g.a);
    } else {
        spec.coupling = CouplingConfig::linear(g.p, g.eps1, g.a);
    }
    if (!g.x0.empty()) {
        spec.x0 = g.x0;
    } else if (spec.coupling.p == 4) {
        spec.x0 = kReferenceX0;
    } else {
        throw std::invalid_argument("--x0 is required when p != 4");
    }
    if (spec.x0.size() != static_cast<std::size_t>(spec.coupling.p))
        throw std::invalid_argument("--x0 must have exactly p components");
    spec.transient = g.transient;
    return spec;
}

std::string join_doubles(const std::vector<double>& v, int precision = 17) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += format_double(v[i], precision);
    }
    return s;
}

std::string join_u64(const std::vector<std::uint64_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

std::string describe_generator(const GeneratorSpec& spec) {
    std::string s = "p=" + std::to_string(spec.coupling.p);
    s += " a=" + format_double(spec.coupling.a, 17);
    s += " eps=[" + join_doubles(spec.coupling.eps) + "]";
    s += " x0=[" + join_doubles(spec.x0) + "]";
    s += " transient=" + std::to_string(spec.transient);
    return s;
}

void echo_config(const std::string& line) { std::fprintf(stderr, "# %s\n", line.c_str()); }

void echo_wall(double seconds) { std::fprintf(stderr, "# wall_seconds %.6g\n", seconds); }

void write_table(const ResultTable& table, const std::string& path) {
    std::ostringstream ss;
    write_csv(ss, table, 8);
    OutputFile out(path);
    out.write(ss.str());
    out.close();
}

// Checkpoint list: --iters-list wins over --iters.
std::vector<std::uint64_t> checkpoint_list(std::uint64_t iters,
                                           const std::vector<std::uint64_t>& iters_list) {
    if (!iters_list.empty()) return iters_list;
    return {iters};
}

std::vector<std::uint64_t> box_list(std::uint64_t disc, const std::vector<std::uint64_t>& disc_list) {
    if (!disc_list.empty()) return disc_list;
    return {disc};
}

// ---- gen ----------------------------------------------------------------

struct GenCmd {
    GeneratorFlags gen;
    std::uint64_t iters = 1000;
    int component = 0;
    std::string format = "csv";
    std::string sample = "none";
    ThresholdSamplerConfig threshold;
    MixingSamplerConfig mixing;
    std::vector<double> thresholds;
    std::vector<int> sources;
    std::uint64_t max_steps = 0;
    std::string output;

    void run(const CLI::App* cmd) const;
};

void GenCmd::run(const CLI::App* cmd) const {
    const GeneratorSpec spec = build_generator(gen, cmd);
    Format fmt = Format::csv;
    if (format == "raw-f64") fmt = Format::raw_f64;
    else if (format == "fixed32") fmt = Format::fixed32;

    // Validate the full flag set before touching the output path.
    ThresholdSamplerConfig threshold_cfg = threshold;
    MixingSamplerConfig mixing_cfg = mixing;
    if (sample == "none") {
        if (component < 0 || component >= spec.coupling.p)
            throw std::invalid_argument("--component outside [0,p)");
    } else if (sample == "threshold") {
        threshold_cfg.validate(spec.coupling.p);
    } else {
        if (!thresholds.empty()) {
            if (thresholds.size() != 3) throw std::invalid_argument("--thresholds needs T1,T2,T3");
            mixing_cfg.thresholds = {thresholds[0], thresholds[1], thresholds[2]};
        }
        if (!sources.empty()) {
            if (sources.size() != 3) throw std::invalid_argument("--sources needs l1,l2,l3");
            mixing_cfg.sources = {sources[0], sources[1], sources[2]};
        }
        mixing_cfg.validate(spec.coupling.p);
    }
    Generator g = spec.make();

    OutputFile out(output);
    ValueSink sink(out, fmt);
    if (iters == 0) {
        sink.finish();
        return;
    }

    if (sample == "none") {
        const std::size_t comp = static_cast<std::size_t>(component);
        g.emit(iters, [&](std::span<const double> x) { sink.push(x[comp]); });
        sink.finish();
        return;
    }

    // Sampled stream: emit values whose control component clears the
    // selection rule, up to --iters values or --max-steps examined iterates.
    auto pump = [&](auto rule) {
        while (g.steps_taken() < g.transient()) g.step();
        std::uint64_t emitted = 0;
        std::uint64_t examined = 0;
        while (emitted < iters && (max_steps == 0 || examined < max_steps)) {
            const std::span<const double> x = g.step();
            ++examined;
            if (const std::optional<double> v = rule.select(x)) {
                sink.push(*v);
                ++emitted;
            }
        }
    };
    if (sample == "threshold") pump(ThresholdRule(threshold_cfg));
    else pump(MixingRule(mixing_cfg));
    sink.finish();
}

// ---- density ------------------------------------------------------------

struct DensityCmd {
    GeneratorFlags gen;
    int component = 0;
    std::uint64_t disc = 100;
    std::vector<std::uint64_t> disc_list;
    std::uint64_t iters = 1'000'000;
    std::vector<std::uint64_t> iters_list;
    std::string output;

    void run(const CLI::App* cmd) const {
        DensitySweepSpec spec;
        spec.generator = build_generator(gen, cmd);
        spec.component = component;
        spec.box_counts = box_list(disc, disc_list);
        spec.iterates = checkpoint_list(iters, iters_list);
        echo_config("density " + describe_generator(spec.generator) +
                    " component=" + std::to_string(component) + " disc=[" +
                    join_u64(spec.box_counts) + "] iters=[" + join_u64(spec.iterates) + "]");
        const ResultTable table = run_density_sweep(spec);
        write_table(table, output);
        echo_wall(table.wall_seconds);
    }
};

// ---- corr ---------------------------------------------------------------

struct CorrCmd {
    GeneratorFlags gen;
    std::vector<int> pair;
    std::uint64_t disc = 100;
    std::vector<std::uint64_t> disc_list;
    std::uint64_t iters = 1'000'000;
    std::vector<std::uint64_t> iters_list;
    std::string output;

    void run(const CLI::App* cmd) const {
        CorrelationSpec spec;
        spec.generator = build_generator(gen, cmd);
        if (!pair.empty()) {
            if (pair.size() != 2) throw std::invalid_argument("--pair needs exactly k,l");
            spec.pairs = {{pair[0], pair[1]}};
        }
        spec.box_counts = box_list(disc, disc_list);
        spec.iterates = checkpoint_list(iters, iters_list);
        echo_config("corr " + describe_generator(spec.generator) +
                    (pair.empty() ? std::string(" pairs=all")
                                  : " pair=" + std::to_string(pair[0]) + "," +
                                        std::to_string(pair[1])) +
                    " disc=[" + join_u64(spec.box_counts) + "] iters=[" +
                    join_u64(spec.iterates) + "]");
        const ResultTable table = run_correlation(spec);
        write_table(table, output);
        echo_wall(table.wall_seconds);
    }
};

// ---- autocorr -----------------------------------------------------------

struct AutocorrCmd {
    GeneratorFlags gen;
    bool mixed = false;
    ThresholdSamplerConfig threshold;
    std::vector<double> thresholds;
    std::vector<int> sources;
    std::uint64_t disc = 10;
    std::vector<std::uint64_t> disc_list;
    std::uint64_t iters = 1'000'000;
    std::vector<std::uint64_t> iters_list;
    std::string output;

    void run(const CLI::App* cmd) const {
        AutocorrSweepSpec spec;
        spec.generator = build_generator(gen, cmd);
        spec.box_counts = box_list(disc, disc_list);
        spec.iterates = checkpoint_list(iters, iters_list);
        std::string sampler_desc;
        if (mixed) {
            spec.kind = SamplingKind::mixed;
            if (!thresholds.empty()) {
                if (thresholds.size() != 3)
                    throw std::invalid_argument("--thresholds needs T1,T2,T3");
                spec.mixing.thresholds = {thresholds[0], thresholds[1], thresholds[2]};
            }
            if (!sources.empty()) {
                if (sources.size() != 3) throw std::invalid_argument("--sources needs l1,l2,l3");
                spec.mixing.sources = {sources[0], sources[1], sources[2]};
            }
            if (cmd->count("--control")) spec.mixing.control = threshold.control;
            sampler_desc = " mixed thresholds=[" +
                           join_doubles({spec.mixing.thresholds[0], spec.mixing.thresholds[1],
                                         spec.mixing.thresholds[2]}) +
                           "]";
        } else {
            spec.kind = SamplingKind::threshold;
            spec.threshold = threshold;
            sampler_desc = " threshold=" + format_double(threshold.threshold, 17) +
                           " source=" + std::to_string(threshold.source) +
                           " control=" + std::to_string(threshold.control);
        }
        echo_config("autocorr " + describe_generator(spec.generator) + sampler_desc + " disc=[" +
                    join_u64(spec.box_counts) + "] iters=[" + join_u64(spec.iterates) + "]");
        const ResultTable table = run_autocorrelation_sweep(spec);
        write_table(table, output);
        echo_wall(table.wall_seconds);
    }
};

// ---- seedscan -----------------------------------------------------------

struct SeedScanCmd {
    GeneratorFlags gen;
    std::vector<double> base;
    double stride = 1e-7;
    std::vector<double> mults;
    std::uint64_t count = 1000;
    int component = 0;
    std::uint64_t disc = 100;
    std::uint64_t iters = 1'000'000;
    unsigned threads = 0;
    std::string output;

    void run(const CLI::App* cmd) const {
        SeedScanSpec spec;
        if (!gen.eps_list.empty()) {
            if (cmd->count("--p") && gen.p != static_cast<int>(gen.eps_list.size()))
                throw std::invalid_argument("--p disagrees with the length of --eps-list");
            spec.coupling = CouplingConfig::explicit_eps(gen.eps_list, gen.a);
        } else {
            spec.coupling = CouplingConfig::linear(gen.p, gen.eps1, gen.a);
        }
        if (!base.empty()) spec.base = base;
        else if (spec.coupling.p == 4) spec.base = {-0.92712, -0.9183636, -0.92576657, -0.92390643};
        else throw std::invalid_argument("--seed-base is required when p != 4");
        if (!mults.empty()) spec.multipliers = mults;
        else if (spec.coupling.p == 4) spec.multipliers = {1.0, 7.0, 13.0, 17.0};
        else throw std::invalid_argument("--seed-mults is required when p != 4");
        spec.stride = stride;
        spec.count = count;
        spec.component = component;
        spec.box_count = disc;
        spec.iterates = iters;
        spec.transient = gen.transient;
        spec.threads = threads;
        echo_config("seedscan p=" + std::to_string(spec.coupling.p) + " eps=[" +
                    join_doubles(spec.coupling.eps) + "] base=[" + join_doubles(spec.base) +
                    "] stride=" + format_double(stride, 17) + " mults=[" +
                    join_doubles(spec.multipliers) + "] count=" + std::to_string(count) +
                    " disc=" + std::to_string(disc) + " iters=" + std::to_string(iters));
        const ResultTable table = run_seed_scan(spec);
        write_table(table, output);
        const SeedScanSummary summary = summarize_seed_scan(table);
        std::fprintf(stderr, "# e1 min %.8g max %.8g mean %.8g\n", summary.min_e1, summary.max_e1,
                     summary.mean_e1);
        std::string hist = "# e1 hist";
        for (std::uint64_t c : summary.histogram) hist += ' ' + std::to_string(c);
        std::fprintf(stderr, "%s\n", hist.c_str());
        echo_wall(table.wall_seconds);
    }
};

// ---- cycle --------------------------------------------------------------

struct CycleCmd {
    GeneratorFlags gen;
    std::uint64_t budget = 10'000'000;
    std::string output;

    void run(const CLI::App* cmd) const {
        CycleCheckSpec spec;
        spec.generator = build_generator(gen, cmd);
        spec.budget = budget;
        echo_config("cycle " + describe_generator(spec.generator) +
                    " budget=" + std::to_string(budget));
        const ResultTable table = run_cycle_check(spec);
        write_table(table, output);
        echo_wall(table.wall_seconds);
    }
};

// ---- bench --------------------------------------------------------------

struct BenchCmd {
    GeneratorFlags gen;
    std::uint64_t steps = 100'000'000;
    std::uint64_t warmup = 1'000'000;
    std::string output;

    void run(const CLI::App* cmd) const {
        BenchSpec spec;
        spec.generator = build_generator(gen, cmd);
        spec.steps = steps;
        spec.warmup = warmup;
        echo_config("bench " + describe_generator(spec.generator) +
                    " steps=" + std::to_string(steps) + " warmup=" + std::to_string(warmup));
        const ResultTable table = run_bench(spec);
        write_table(table, output);
        echo_wall(table.wall_seconds);
    }
};

void add_sampler_flags(CLI::App* cmd, ThresholdSamplerConfig& threshold,
                       std::vector<double>& thresholds, std::vector<int>& sources) {
    cmd->add_option("--threshold", threshold.threshold, "selection threshold T");
    cmd->add_option("--source", threshold.source, "sampled component");
    cmd->add_option("--control", threshold.control, "gating component");
    cmd->add_option("--thresholds", thresholds, "mixing band edges T1,T2,T3")->delimiter(',');
    cmd->add_option("--sources", sources, "mixing source components l1,l2,l3")->delimiter(',');
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weakly coupled tent map generator and experiment driver"};
    app.require_subcommand(1);

    auto gen_cmd = std::make_shared<GenCmd>();
    {
        CLI::App* cmd = app.add_subcommand("gen", "stream generator output");
        add_generator_flags(cmd, gen_cmd->gen);
        cmd->add_option("--iters", gen_cmd->iters, "values to emit");
        cmd->add_option("--component", gen_cmd->component, "component to stream");
        cmd->add_option("--format", gen_cmd->format, "csv | raw-f64 | fixed32")
            ->check(CLI::IsMember({"csv", "raw-f64", "fixed32"}));
        cmd->add_option("--sample", gen_cmd->sample, "none | threshold | mixed")
            ->check(CLI::IsMember({"none", "threshold", "mixed"}));
        add_sampler_flags(cmd, gen_cmd->threshold, gen_cmd->thresholds, gen_cmd->sources);
        cmd->add_option("--max-steps", gen_cmd->max_steps,
                        "cap on examined iterates in sampled modes (0 = unlimited)");
        cmd->add_option("--output", gen_cmd->output, "output path (default stdout)");
        cmd->callback([gen_cmd, cmd] { gen_cmd->run(cmd); });
    }

    auto density_cmd = std::make_shared<DensityCmd>();
    {
        CLI::App* cmd = app.add_subcommand("density", "density discrepancy sweep");
        add_generator_flags(cmd, density_cmd->gen);
        cmd->add_option("--component", density_cmd->component, "component to tally");
        cmd->add_option("--disc", density_cmd->disc, "box count M");
        cmd->add_option("--disc-list", density_cmd->disc_list, "box counts")->delimiter(',');
        cmd->add_option("--iters", density_cmd->iters, "iterate count N");
        cmd->add_option("--iters-list", density_cmd->iters_list, "iterate checkpoints")
            ->delimiter(',');
        cmd->add_option("--output", density_cmd->output, "output path (default stdout)");
        cmd->callback([density_cmd, cmd] { density_cmd->run(cmd); });
    }

    auto corr_cmd = std::make_shared<CorrCmd>();
    {
        CLI::App* cmd = app.add_subcommand("corr", "pairwise correlation discrepancy");
        add_generator_flags(cmd, corr_cmd->gen);
        cmd->add_option("--pair", corr_cmd->pair, "component pair k,l (default: all k<l)")
            ->delimiter(',');
        cmd->add_option("--disc", corr_cmd->disc, "box count M per axis");
        cmd->add_option("--disc-list", corr_cmd->disc_list, "box counts per axis")->delimiter(',');
        cmd->add_option("--iters", corr_cmd->iters, "iterate count N");
        cmd->add_option("--iters-list", corr_cmd->iters_list, "iterate checkpoints")
            ->delimiter(',');
        cmd->add_option("--output", corr_cmd->output, "output path (default stdout)");
        cmd->callback([corr_cmd, cmd] { corr_cmd->run(cmd); });
    }

    auto autocorr_cmd = std::make_shared<AutocorrCmd>();
    {
        CLI::App* cmd = app.add_subcommand("autocorr", "sampled-stream autocorrelation sweep");
        add_generator_flags(cmd, autocorr_cmd->gen);
        cmd->add_flag("--mixed", autocorr_cmd->mixed, "use the three-band mixing rule");
        add_sampler_flags(cmd, autocorr_cmd->threshold, autocorr_cmd->thresholds,
                          autocorr_cmd->sources);
        cmd->add_option("--disc", autocorr_cmd->disc, "box count M per axis");
        cmd->add_option("--disc-list", autocorr_cmd->disc_list, "box counts per axis")
            ->delimiter(',');
        cmd->add_option("--iters", autocorr_cmd->iters, "generator iterate count N");
        cmd->add_option("--iters-list", autocorr_cmd->iters_list, "iterate checkpoints")
            ->delimiter(',');
        cmd->add_option("--output", autocorr_cmd->output, "output path (default stdout)");
        cmd->callback([autocorr_cmd, cmd] { autocorr_cmd->run(cmd); });
    }

    auto seedscan_cmd = std::make_shared<SeedScanCmd>();
    {
        CLI::App* cmd = app.add_subcommand("seedscan", "density discrepancy across a seed family");
        add_generator_flags(cmd, seedscan_cmd->gen);
        cmd->add_option("--seed-base", seedscan_cmd->base, "base initial state")->delimiter(',');
        cmd->add_option("--seed-stride", seedscan_cmd->stride, "per-seed offset stride");
        cmd->add_option("--seed-mults", seedscan_cmd->mults, "per-component stride multipliers")
            ->delimiter(',');
        cmd->add_option("--seed-count", seedscan_cmd->count, "number of seeds k = 1..count");
        cmd->add_option("--component", seedscan_cmd->component, "component to tally");
        cmd->add_option("--disc", seedscan_cmd->disc, "box count M");
        cmd->add_option("--iters", seedscan_cmd->iters, "iterates per seed");
        cmd->add_option("--threads", seedscan_cmd->threads, "worker threads (0 = hardware)");
        cmd->add_option("--output", seedscan_cmd->output, "output path (default stdout)");
        cmd->callback([seedscan_cmd, cmd] { seedscan_cmd->run(cmd); });
    }

    auto cycle_cmd = std::make_shared<CycleCmd>();
    {
        CLI::App* cmd = app.add_subcommand("cycle", "Brent cycle detection on the orbit");
        add_generator_flags(cmd, cycle_cmd->gen);
        cmd->add_option("--budget", cycle_cmd->budget, "cycle-search step budget");
        cmd->add_option("--output", cycle_cmd->output, "output path (default stdout)");
        cmd->callback([cycle_cmd, cmd] { cycle_cmd->run(cmd); });
    }

    auto bench_cmd = std::make_shared<BenchCmd>();
    {
        CLI::App* cmd = app.add_subcommand("bench", "step-loop throughput");
        add_generator_flags(cmd, bench_cmd->gen);
        cmd->add_option("--steps", bench_cmd->steps, "measured steps");
        cmd->add_option("--warmup", bench_cmd->warmup, "warmup steps");
        cmd->add_option("--output", bench_cmd->output, "output path (default stdout)");
        cmd->callback([bench_cmd, cmd] { bench_cmd->run(cmd); });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const resource_limit_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const io_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 4;
    } catch (const std::logic_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
