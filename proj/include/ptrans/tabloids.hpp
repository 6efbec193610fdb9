#pragma once

#include "ptrans/partitions.hpp"
#include "ptrans/perm.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ptrans {

/// An ordered set partition (P₁,…,P_k) of {1..n} with |Pᵢ| ≥ |Pᵢ₊₁|.
///
/// Blocks are stored sorted ascending. The defaulted ordering compares
/// blocks as sorted integer lists, position by position, which is the
/// canonical tabloid order.
class Tabloid {
public:
    Tabloid() = default;

    /// Throws InputError unless the blocks are non-empty, pairwise disjoint,
    /// cover {1..n} for n = total size, and have weakly decreasing sizes.
    explicit Tabloid(std::vector<std::vector<int>> blocks);

    /// Parses "{1,2,5|3,7|4,6}".
    static Tabloid parse(std::string_view text);

    /// The first tabloid of a shape in canonical order: ({1..λ₁},{λ₁+1..},…).
    static Tabloid first_of_shape(const Partition& la);

    int degree() const { return degree_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    Partition shape() const;

    /// labels[p-1] = index of the block containing point p.
    std::vector<std::uint8_t> labels() const;
    static Tabloid from_labels(const std::vector<std::uint8_t>& labels, std::size_t block_count);

    /// "{1,2,5|3,7|4,6}".
    std::string to_string() const;

    auto operator<=>(const Tabloid&) const = default;
    bool operator==(const Tabloid&) const = default;

private:
    std::vector<std::vector<int>> blocks_;
    int degree_ = 0;
};

/// All multinomial(la) tabloids of shape la, canonical order.
std::vector<Tabloid> tabloids_of_shape(int n, const Partition& la);

/// Blockwise image (gP₁,…,gP_k).
Tabloid act(const Permutation& g, const Tabloid& p);

/// Canonical ranks for every tabloid of one shape, keyed by block labels.
/// This is the cheap representation of the left cosets of a Young subgroup:
/// the coset gY_P is identified with the tabloid gP.
class TabloidIndex {
public:
    TabloidIndex(int n, const Partition& la);

    const Partition& shape() const { return shape_; }
    std::size_t size() const { return tabloids_.size(); }
    const Tabloid& operator[](std::size_t i) const { return tabloids_[i]; }
    const std::vector<std::uint8_t>& labels(std::size_t i) const { return labels_[i]; }

    std::size_t rank_of_labels(const std::vector<std::uint8_t>& labels) const;

    /// Rank of g·(tabloid i), reusing `scratch` for the image labels.
    std::size_t rank_of_image(const Permutation& g, std::size_t i, std::vector<std::uint8_t>& scratch) const;

private:
    Partition shape_;
    std::vector<Tabloid> tabloids_;
    std::vector<std::vector<std::uint8_t>> labels_;
    std::unordered_map<std::string, std::size_t> rank_;
};

/// Every permutation fixing each block of P setwise. Throws BudgetError when
/// ∏|Pᵢ|! exceeds `cap`.
PermSet young_subgroup(const Tabloid& p, std::size_t cap = 1'000'000);

/// The left coset gY_P, represented by the pair (P, gP).
class YoungCoset {
public:
    /// Throws InputError when the shapes differ.
    YoungCoset(Tabloid base, Tabloid image);

    static YoungCoset of(const Permutation& g, const Tabloid& base) { return YoungCoset(base, act(g, base)); }

    const Tabloid& base() const { return base_; }
    const Tabloid& image() const { return image_; }

    bool contains(const Permutation& g) const { return act(g, base_) == image_; }

    /// Explicit elements g·Y_P for any g with g·base = image.
    PermSet elements(std::size_t cap = 1'000'000) const;

private:
    Tabloid base_;
    Tabloid image_;
};

/// Number of ordered tabloids of shape la each of whose blocks is a union of
/// cycles of a permutation with the given cycle type.
Integer fixed_tabloid_count(const Partition& cycle_type, const Partition& la);

/// Number of tabloids of shape la fixed blockwise by g.
Integer fixed_tabloid_count(const Permutation& g, const Partition& la);

} // namespace ptrans
