#ifndef XXZKINK_SECTOR_HPP
#define XXZKINK_SECTOR_HPP

#include <cstdint>
#include <vector>

#include "xxzkink/spin.hpp"

namespace xxz {

// Full tensor-product dimension (2S+1)^n, guarded by a cap.
std::int64_t full_dimension(int n_sites, SpinQuantum spin, std::int64_t cap);

// Configurations are stored as local indices k_x in 0..2S (k = S - m per site);
// site 0 is the most significant tensor slot, so the lexicographic order over
// configurations coincides with ascending full-space index.
std::vector<int> config_of_full_index(std::int64_t index, int n_sites, int site_dim);
std::int64_t full_index_of_config(const std::vector<int>& config, int site_dim);
int twice_m_of_config(const std::vector<int>& config, SpinQuantum spin);

// All product-basis configurations with fixed total magnetization M (= twice_m/2),
// with a bidirectional index map.
class SectorBasis {
public:
    static SectorBasis build(int n_sites, SpinQuantum spin, int twice_m);

    int n_sites() const { return n_sites_; }
    SpinQuantum spin() const { return spin_; }
    int twice_m() const { return twice_m_; }
    std::size_t size() const { return configs_.size(); }

    const std::vector<int>& config(std::size_t i) const { return configs_[i]; }
    std::vector<int> twice_m_config(std::size_t i) const;

    // Ordinal of a configuration; throws std::out_of_range if absent.
    std::size_t index_of(const std::vector<int>& config) const;
    bool contains(const std::vector<int>& config) const;

    std::int64_t full_index(std::size_t i) const;

private:
    int n_sites_ = 0;
    SpinQuantum spin_{};
    int twice_m_ = 0;
    std::vector<std::vector<int>> configs_;  // ascending lexicographic
};

}  // namespace xxz

#endif
