#pragma once

#include "ptrans/numeric.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace ptrans {

/// A weakly decreasing sequence of positive integers.
///
/// The defaulted ordering is plain lexicographic on the parts, so within one
/// weight the canonical reverse-lexicographic listing ((n) first, (1ⁿ) last)
/// is simply descending order.
class Partition {
public:
    Partition() = default;

    /// Throws InputError unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);

    /// Parses "5,2,1".
    static Partition parse(std::string_view text);

    /// Sorts arbitrary positive parts into a partition.
    static Partition from_unsorted(std::vector<int> parts);

    static Partition single_row(int n) { return Partition({n}); }
    static Partition single_column(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

    int weight() const { return weight_; }
    std::size_t length() const { return parts_.size(); }
    const std::vector<int>& parts() const { return parts_; }

    /// Part i (0-based), or 0 past the end.
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    /// part value -> multiplicity, for each distinct value.
    std::map<int, int> multiplicities() const;

    /// "5,2,1".
    std::string to_string() const;

    auto operator<=>(const Partition& other) const { return parts_ <=> other.parts_; }
    bool operator==(const Partition& other) const { return parts_ == other.parts_; }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// All partitions of n in canonical (reverse-lexicographic) order.
std::vector<Partition> partitions_of(int n);

/// Position lookup into the canonical list for one weight.
class PartitionIndex {
public:
    explicit PartitionIndex(int n);

    int n() const { return n_; }
    std::size_t size() const { return list_.size(); }
    const std::vector<Partition>& list() const { return list_; }
    const Partition& operator[](std::size_t i) const { return list_[i]; }

    /// Throws InputError for a partition of a different weight.
    std::size_t index_of(const Partition& p) const;

private:
    int n_;
    std::vector<Partition> list_;
    std::map<Partition, std::size_t> index_;
};

/// mu ⊵ la: every prefix sum of mu is at least the matching prefix sum of la.
bool dominates(const Partition& mu, const Partition& la);

/// The parts of alpha can be grouped so that the groups sum to the parts of la.
bool refines(const Partition& alpha, const Partition& la);

/// n! / ∏ la_i!
Integer multinomial(const Partition& la);

/// Degree f_mu of the irreducible character, by the hook-length formula.
Integer hook_degree(const Partition& mu);

/// Number of semistandard tableaux of shape nu and content la.
Integer kostka(const Partition& nu, const Partition& la);

/// weight − first part.
int depth(const Partition& nu);

/// Every mu with mu ⊵ la, in canonical order.
std::vector<Partition> up_set(const Partition& la);

} // namespace ptrans
