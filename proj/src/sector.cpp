#include "xxzkink/sector.hpp"

#include <algorithm>
#include <stdexcept>

namespace xxz {

std::int64_t full_dimension(int n_sites, SpinQuantum spin, std::int64_t cap) {
    if (n_sites < 1) throw std::invalid_argument("full_dimension: need at least one site");
    std::int64_t dim = 1;
    const std::int64_t d = spin.dimension();
    for (int i = 0; i < n_sites; ++i) {
        if (dim > cap / d)
            throw std::length_error("full_dimension: (2S+1)^n exceeds the dimension cap");
        dim *= d;
    }
    return dim;
}

std::vector<int> config_of_full_index(std::int64_t index, int n_sites, int site_dim) {
    std::vector<int> config(static_cast<std::size_t>(n_sites));
    for (int x = n_sites - 1; x >= 0; --x) {
        config[static_cast<std::size_t>(x)] = static_cast<int>(index % site_dim);
        index /= site_dim;
    }
    return config;
}

std::int64_t full_index_of_config(const std::vector<int>& config, int site_dim) {
    std::int64_t index = 0;
    for (int k : config) index = index * site_dim + k;
    return index;
}

int twice_m_of_config(const std::vector<int>& config, SpinQuantum spin) {
    int twice_m = 0;
    for (int k : config) twice_m += spin.twice_s - 2 * k;
    return twice_m;
}

namespace {

void enumerate(int site, int remaining_k, int n_sites, int max_k,
               std::vector<int>& current, std::vector<std::vector<int>>& out) {
    if (site == n_sites) {
        if (remaining_k == 0) out.push_back(current);
        return;
    }
    const int sites_left = n_sites - site - 1;
    for (int k = 0; k <= max_k; ++k) {
        const int rest = remaining_k - k;
        if (rest < 0 || rest > sites_left * max_k) continue;
        current[static_cast<std::size_t>(site)] = k;
        enumerate(site + 1, rest, n_sites, max_k, current, out);
    }
}

}  // namespace

SectorBasis SectorBasis::build(int n_sites, SpinQuantum spin, int twice_m) {
    if (n_sites < 1)
        throw std::invalid_argument("SectorBasis: need at least one site");
    const int max_total = n_sites * spin.twice_s;
    if (twice_m > max_total || twice_m < -max_total)
        throw std::invalid_argument("SectorBasis: |2M| exceeds n_sites * 2S");
    if (((max_total - twice_m) % 2) != 0)
        throw std::invalid_argument("SectorBasis: 2M has wrong parity for this chain");

    SectorBasis basis;
    basis.n_sites_ = n_sites;
    basis.spin_ = spin;
    basis.twice_m_ = twice_m;

    // Total local-index sum K with Σ_x (2S - 2k_x) = 2M.
    const int total_k = (max_total - twice_m) / 2;
    std::vector<int> current(static_cast<std::size_t>(n_sites), 0);
    enumerate(0, total_k, n_sites, spin.twice_s, current, basis.configs_);
    return basis;
}

std::vector<int> SectorBasis::twice_m_config(std::size_t i) const {
    std::vector<int> out;
    out.reserve(configs_[i].size());
    for (int k : configs_[i]) out.push_back(spin_.twice_s - 2 * k);
    return out;
}

std::size_t SectorBasis::index_of(const std::vector<int>& config) const {
    auto it = std::lower_bound(configs_.begin(), configs_.end(), config);
    if (it == configs_.end() || *it != config)
        throw std::out_of_range("SectorBasis: configuration not in this sector");
    return static_cast<std::size_t>(it - configs_.begin());
}

bool SectorBasis::contains(const std::vector<int>& config) const {
    auto it = std::lower_bound(configs_.begin(), configs_.end(), config);
    return it != configs_.end() && *it == config;
}

std::int64_t SectorBasis::full_index(std::size_t i) const {
    return full_index_of_config(configs_[i], spin_.dimension());
}

}  // namespace xxz
