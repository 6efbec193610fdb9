#pragma once

#include "ptrans/partitions.hpp"

#include <cstddef>
#include <compare>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ptrans {

/// A bijection on the points {1..n}.
///
/// Points are 1-indexed at the interface; internally the image table is
/// stored 0-indexed. Ordering is lexicographic on image sequences, which is
/// the canonical element order used everywhere (closures, S_n enumeration,
/// permutation-set files).
class Permutation {
public:
    Permutation() = default;

    static Permutation identity(int degree);

    /// Builds from 1-indexed images, images[i-1] = g(i). Throws InputError
    /// unless the images form a permutation of {1..n}.
    static Permutation from_images(std::span<const int> images);

    /// Builds from disjoint cycles of 1-indexed points; unlisted points are fixed.
    static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

    int degree() const { return static_cast<int>(images_.size()); }

    /// Image of a 1-indexed point.
    int operator()(int point) const { return images_[static_cast<std::size_t>(point - 1)] + 1; }

    /// 0-indexed image table.
    std::span<const int> table() const { return images_; }

    std::vector<int> images() const;

    bool is_identity() const;
    bool is_even() const;

    /// Disjoint cycles of length at least two, each starting at its smallest point,
    /// ordered by that point.
    std::vector<std::vector<int>> cycles() const;

    /// "(1 4)(2 3 6 5)"; the identity prints as "()".
    std::string to_cycle_string() const;

    /// "4 3 6 1 2 5 7".
    std::string to_one_line_string() const;

    auto operator<=>(const Permutation&) const = default;
    bool operator==(const Permutation&) const = default;

private:
    explicit Permutation(std::vector<int> table) : images_(std::move(table)) {}

    std::vector<int> images_;

    friend Permutation compose(const Permutation& g, const Permutation& h);
    friend Permutation inverse(const Permutation& g);
};

/// Parses one-line notation ("4 3 6 1 2 5 7") or cycle notation ("(1 4)(2 3 6 5)").
/// Inside a cycle, points are separated by blanks or commas; a cycle written
/// without separators ("(2365)") is read digit by digit, which is only
/// accepted for n <= 9. `line` is reported in diagnostics.
Permutation parse_perm(std::string_view text, int n, int line = 1);

/// x -> g(h(x)); h is applied first.
Permutation compose(const Permutation& g, const Permutation& h);

Permutation inverse(const Permutation& g);

Partition cycle_type(const Permutation& g);

/// Cycle type of g∘h⁻¹ without materializing the quotient. `scratch` must
/// hold at least 2·degree ints.
Partition quotient_cycle_type(const Permutation& g, const Permutation& h, std::vector<int>& scratch);

class PermSet;

/// Subgroup generated by `generators` as an explicit element set, by
/// breadth-first multiplication. Throws BudgetError when the group grows
/// beyond `cap` elements.
PermSet closure(const std::vector<Permutation>& generators, std::size_t cap);

/// A finite set of permutations of a common degree, kept sorted.
class PermSet {
public:
    PermSet() = default;

    /// Throws InputError on duplicate elements or mixed degrees.
    PermSet(int degree, std::vector<Permutation> elements);

    int degree() const { return degree_; }
    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }
    const std::vector<Permutation>& elements() const { return elements_; }
    auto begin() const { return elements_.begin(); }
    auto end() const { return elements_.end(); }

    bool contains(const Permutation& g) const;

    /// Whether the set is a subgroup of S_n. Verified on first call by
    /// checking all products when size()² is within `pair_budget`; beyond
    /// that a BudgetError is raised unless assume_group() was called.
    bool is_group(std::size_t pair_budget = default_group_check_budget) const;

    /// Caller vouches that the set is closed under composition.
    void assume_group() const { group_ = true; }

    /// Result of an earlier is_group() or assume_group(), if any.
    std::optional<bool> known_group() const { return group_; }

    bool operator==(const PermSet& other) const
    {
        return degree_ == other.degree_ && elements_ == other.elements_;
    }

    static constexpr std::size_t default_group_check_budget = 50'000'000;

private:
    int degree_ = 0;
    std::vector<Permutation> elements_;
    mutable std::optional<bool> group_;
};

/// Reads the permutation-set file format: '#' comment lines, then a line
/// "n <degree>", then one permutation per line in one-line or cycle
/// notation. Blank lines are skipped. Duplicates are an error.
PermSet read_perm_set(std::string_view text);
PermSet read_perm_set_file(const std::string& path);

/// Writes the same format, one-line notation, canonical order.
std::string write_perm_set(const PermSet& set, std::string_view comment = {});

} // namespace ptrans

template <>
struct std::hash<ptrans::Permutation> {
    std::size_t operator()(const ptrans::Permutation& g) const noexcept;
};
