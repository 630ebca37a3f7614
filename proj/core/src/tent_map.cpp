#include "ctmrng/tent_map.hpp"

#include <cmath>

namespace ctmrng {

CouplingConfig CouplingConfig::linear(int p, double eps1, double a) {
    CouplingConfig cfg;
    cfg.p = p;
    cfg.a = a;
    cfg.ratio_rule = RatioRule::linear;
    if (p >= 1) {
        cfg.eps.resize(static_cast<std::size_t>(p));
        for (int i = 0; i < p; ++i) cfg.eps[static_cast<std::size_t>(i)] = static_cast<double>(i + 1) * eps1;
    }
    cfg.validate();
    return cfg;
}

CouplingConfig CouplingConfig::explicit_eps(std::vector<double> eps, double a) {
    CouplingConfig cfg;
    cfg.p = static_cast<int>(eps.size());
    cfg.a = a;
    cfg.eps = std::move(eps);
    cfg.ratio_rule = RatioRule::explicit_;
    cfg.validate();
    return cfg;
}

void CouplingConfig::validate() const {
    if (p < 1) throw std::invalid_argument("coupling: dimension p must be >= 1");
    if (!std::isfinite(a)) throw std::invalid_argument("coupling: tent slope a must be finite");
    if (eps.size() != static_cast<std::size_t>(p))
        throw std::invalid_argument("coupling: need exactly p coupling constants, got " +
                                    std::to_string(eps.size()));
    for (int i = 0; i < p; ++i) {
        const double e = eps[static_cast<std::size_t>(i)];
        if (!(e >= 0.0))
            throw std::invalid_argument("coupling: eps[" + std::to_string(i) + "] must be >= 0");
        if (!(1.0 - static_cast<double>(p - 1) * e > 0.0))
            throw std::invalid_argument("coupling: eps[" + std::to_string(i) +
                                        "] too large, diagonal 1-(p-1)*eps must stay positive");
    }
}

CouplingMatrix build_coupling_matrix(const CouplingConfig& config) {
    config.validate();
    const int p = config.p;
    CouplingMatrix m;
    m.p = p;
    m.entries.assign(static_cast<std::size_t>(p) * p, 0.0);
    for (int i = 0; i < p; ++i) {
        const double e = config.eps[static_cast<std::size_t>(i)];
        for (int j = 0; j < p; ++j)
            m.entries[static_cast<std::size_t>(i) * p + j] = (i == j) ? 1.0 - static_cast<double>(p - 1) * e : e;
    }
    return m;
}

Generator::Generator(const CouplingConfig& config, std::span<const double> x0, std::uint64_t transient)
    : config_(config), p_(config.p), a_(config.a), transient_(transient) {
    config_.validate();
    if (x0.size() != static_cast<std::size_t>(p_))
        throw std::invalid_argument("generator: initial state must have p = " + std::to_string(p_) +
                                    " components, got " + std::to_string(x0.size()));
    for (std::size_t j = 0; j < x0.size(); ++j) {
        if (!(x0[j] >= -1.0 && x0[j] <= 1.0))
            throw std::invalid_argument("generator: initial component " + std::to_string(j) +
                                        " outside [-1,1]");
    }
    sum_bound_ = static_cast<double>(p_) + 1.0;
    diag_.resize(static_cast<std::size_t>(p_));
    eps_ = config_.eps;
    for (int i = 0; i < p_; ++i)
        diag_[static_cast<std::size_t>(i)] = 1.0 - static_cast<double>(p_ - 1) * eps_[static_cast<std::size_t>(i)];
    x_.assign(x0.begin(), x0.end());
    fx_.resize(static_cast<std::size_t>(p_));
}

void Generator::fail_nonfinite() const {
    throw stream_corruption_error("generator: non-finite state component at step " +
                                  std::to_string(n_ + 1));
}

std::vector<StateVector> iterate(Generator& generator, std::uint64_t steps) {
    std::vector<StateVector> out;
    generator.run(steps, [&](std::span<const double> x) { out.emplace_back(x.begin(), x.end()); });
    return out;
}

}  // namespace ctmrng
