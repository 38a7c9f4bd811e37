#ifndef XXZKINK_LATTICE_HPP
#define XXZKINK_LATTICE_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace xxz {

// One-dimensional chain on the integer coordinates first..first+length-1.
struct Chain {
    int length = 0;
    int first = 0;

    static Chain centered(int length);

    int coordinate(int i) const { return first + i; }
    int last() const { return first + length - 1; }
};

struct Site {
    int x = 0;
    int y = 0;

    friend bool operator==(const Site&, const Site&) = default;
};

// Signed diagonal coordinate; bonds are oriented toward increasing height.
inline int diagonal_height(Site u) { return u.x + u.y; }

// Index of the zig-zag chain a site belongs to: adjacent anti-diagonals
// x - y in {2u, 2u+1} form chain u.
int zigzag_chain_index(Site u);

struct OrientedBond {
    Site from;
    Site to;
};

// Finite set of 2D sites with a fixed tensor-slot order (ordinal 0 is the
// most significant slot of the product basis).
class Region {
public:
    Region() = default;
    Region(std::vector<Site> sites, std::string name);

    int n_sites() const { return static_cast<int>(sites_.size()); }
    const Site& site(int ordinal) const { return sites_[static_cast<std::size_t>(ordinal)]; }
    const std::vector<Site>& sites() const { return sites_; }
    const std::string& name() const { return name_; }

    bool contains(Site u) const;
    int ordinal(Site u) const;  // -1 when absent

    // All nearest-neighbor bonds inside the region, each oriented so that
    // diagonal_height(to) = diagonal_height(from) + 1.
    std::vector<OrientedBond> bonds() const;

private:
    std::vector<Site> sites_;
    std::map<std::pair<int, int>, int> ordinals_;
    std::string name_;
};

// width x height rectangle; ordinal = y*width + x.
Region make_rectangle(int width, int height);

// n_chains coupled zig-zag staircases of chain_length sites each; ordinal =
// chain*chain_length + position along the staircase. Chain u starts at
// (2u, 0) and alternates right/up steps, so heights along it are 2u, 2u+1, ...
Region make_diagonal_strip(int n_chains, int chain_length);

struct ZigZagChain {
    int index = 0;
    std::vector<Site> sites;  // path order, ascending height
};

struct ZigZagDecomposition {
    std::vector<ZigZagChain> chains;             // ascending chain index
    std::vector<OrientedBond> in_chain_bonds;    // consecutive path sites
    std::vector<OrientedBond> interchain_bonds;  // everything else
};

ZigZagDecomposition zigzag_decompose(const Region& region);

}  // namespace xxz

#endif
