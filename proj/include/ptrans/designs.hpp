#pragma once

#include "ptrans/numeric.hpp"
#include "ptrans/perm.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ptrans {

/// ν_{i,j}: blocks containing a fixed i-set and missing a disjoint j-set,
/// tabulated for i + j ≤ t.
class NuTable {
public:
    NuTable() = default;
    explicit NuTable(int t) : t_(t), values_(static_cast<std::size_t>((t + 1) * (t + 1)), 0) {}

    int strength() const { return t_; }
    bool defined(int i, int j) const { return i >= 0 && j >= 0 && i + j <= t_; }

    const Integer& at(int i, int j) const { return values_[slot(i, j)]; }
    void set(int i, int j, Integer v) { values_[slot(i, j)] = std::move(v); }

private:
    std::size_t slot(int i, int j) const { return static_cast<std::size_t>(i * (t_ + 1) + j); }

    int t_ = -1;
    std::vector<Integer> values_;
};

/// A validated block design on points 1..n.
struct BlockDesign {
    int n = 0;
    int k = 0;
    std::vector<std::vector<int>> blocks; // each sorted ascending
    /// Largest t ≤ k with every t-subset in the same number of blocks.
    int strength = 0;
    /// Coverage ν_{t,0} at the strength.
    Integer nu;
    NuTable nu_table;
};

/// Counts the strength and the full ν_{i,j} table directly. Throws
/// InputError on malformed or repeated blocks, or when `claimed_strength`
/// exceeds what the blocks achieve.
BlockDesign validate_design(int n, int k, std::vector<std::vector<int>> blocks,
                            std::optional<int> claimed_strength = {});

/// Design file: '#' comments, header "n <n> k <k>", one block per line.
BlockDesign read_design(std::string_view text);
BlockDesign read_design_file(const std::string& path);

struct NuIdentityReport {
    bool ok = true;
    /// Which identity failed and where, when !ok.
    std::string failure;
};

/// Checks ν_{i+1,j}(n−i−j) = ν_{i,j}(k−i), ν_{i,j+1}(n−i−j) = ν_{i,j}(n−k−j)
/// and ν_{i+1,j−1}(n−k−j+1) = ν_{i,j}(k−i) wherever all terms are tabulated.
NuIdentityReport nu_identities_check(const BlockDesign& d);

/// Per block b: φ_b lists b and ψ_b lists Ω−b, each in image order.
struct BijectionAssignment {
    std::vector<std::vector<int>> phi;
    std::vector<std::vector<int>> psi;
};

/// φ_b and ψ_b in ascending point order for every block.
BijectionAssignment default_bijections(const BlockDesign& d);

/// Bijection file: one line per block, "label: p1 … pk | c1 … c(n−k)".
/// The label is free text; the block is identified by {p1..pk}. Blocks not
/// listed keep the ascending default.
BijectionAssignment read_bijections(std::string_view text, const BlockDesign& d);
BijectionAssignment read_bijections_file(const std::string& path, const BlockDesign& d);

/// The element i ↦ φ_b(π(i)) for i ≤ k and j ↦ ψ_b(σ(j−k)) for j > k.
Permutation product_element(const BlockDesign& d, const BijectionAssignment& bij, std::size_t block,
                            const Permutation& pi, const Permutation& sigma);

/// Partition (m−t, 1^t) of m, or (1^m) when t ≥ m: the shape whose
/// transitivity is "t-transitive on m points".
Partition t_transitive_shape(int m, int t);

/// All elements for (b, π, σ) ∈ B × D1 × D2. D1 and D2 are first checked to
/// be t-transitive for t = d.strength; throws InputError naming the failing
/// component, or on a duplicate element.
PermSet product_construct(const BlockDesign& d, const PermSet& d1, const PermSet& d2,
                          const BijectionAssignment& bij);

/// c_0..c_h for a set D on m points: c_i is the number of elements taking a
/// fixed ordered i-tuple of distinct points to another. Throws InputError if
/// some count is not constant over all tuple pairs.
std::vector<Integer> tuple_constants(const PermSet& d, int h);

} // namespace ptrans
