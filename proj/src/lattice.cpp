#include "xxzkink/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace xxz {

Chain Chain::centered(int length) {
    if (length < 1) throw std::invalid_argument("Chain: length must be positive");
    return Chain{length, -(length / 2)};
}

int zigzag_chain_index(Site u) {
    const int c = u.x - u.y;
    return c >= 0 ? c / 2 : (c - 1) / 2;
}

Region::Region(std::vector<Site> sites, std::string name)
    : sites_(std::move(sites)), name_(std::move(name)) {
    for (int i = 0; i < n_sites(); ++i) {
        auto [it, inserted] = ordinals_.emplace(std::pair{sites_[i].x, sites_[i].y}, i);
        if (!inserted) throw std::invalid_argument("Region: duplicate site");
    }
}

bool Region::contains(Site u) const { return ordinals_.count({u.x, u.y}) > 0; }

int Region::ordinal(Site u) const {
    auto it = ordinals_.find({u.x, u.y});
    return it == ordinals_.end() ? -1 : it->second;
}

std::vector<OrientedBond> Region::bonds() const {
    std::vector<OrientedBond> out;
    for (const Site& u : sites_) {
        const Site right{u.x + 1, u.y};
        const Site up{u.x, u.y + 1};
        if (contains(right)) out.push_back({u, right});
        if (contains(up)) out.push_back({u, up});
    }
    return out;
}

Region make_rectangle(int width, int height) {
    if (width < 1 || height < 1)
        throw std::invalid_argument("make_rectangle: width and height must be positive");
    std::vector<Site> sites;
    sites.reserve(static_cast<std::size_t>(width) * static_cast<std::size_t>(height));
    for (int y = 0; y < height; ++y)
        for (int x = 0; x < width; ++x) sites.push_back({x, y});
    return Region(std::move(sites), "rectangle");
}

Region make_diagonal_strip(int n_chains, int chain_length) {
    if (n_chains < 1 || chain_length < 2)
        throw std::invalid_argument("make_diagonal_strip: need n_chains >= 1, chain_length >= 2");
    std::vector<Site> sites;
    sites.reserve(static_cast<std::size_t>(n_chains) * static_cast<std::size_t>(chain_length));
    // Chain u is anchored at (u, -u), so every chain covers the same height
    // range 0..chain_length-1 and the strip is cut parallel to the interface.
    for (int u = 0; u < n_chains; ++u) {
        for (int k = 0; k < chain_length; ++k) {
            sites.push_back({u + (k + 1) / 2, -u + k / 2});
        }
    }
    return Region(std::move(sites), "diagonal_strip");
}

ZigZagDecomposition zigzag_decompose(const Region& region) {
    ZigZagDecomposition out;

    std::map<int, std::vector<Site>> by_chain;
    for (const Site& u : region.sites()) by_chain[zigzag_chain_index(u)].push_back(u);

    for (auto& [index, sites] : by_chain) {
        std::sort(sites.begin(), sites.end(), [](const Site& a, const Site& b) {
            return diagonal_height(a) < diagonal_height(b);
        });
        out.chains.push_back({index, sites});
    }

    for (const OrientedBond& b : region.bonds()) {
        if (zigzag_chain_index(b.from) == zigzag_chain_index(b.to))
            out.in_chain_bonds.push_back(b);
        else
            out.interchain_bonds.push_back(b);
    }
    return out;
}

}  // namespace xxz
