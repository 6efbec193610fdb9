#pragma once

#include "ptrans/partitions.hpp"

#include <cstdint>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

namespace ptrans {

/// Murnaghan–Nakayama evaluator with a memo keyed on (shape, remaining
/// cycle multiset). Border strips are removed for the largest remaining
/// cycle first. Safe to share between threads.
class CharacterEvaluator {
public:
    std::int64_t operator()(const Partition& mu, const Partition& alpha);

private:
    std::int64_t evaluate(const std::vector<int>& shape, const std::vector<int>& cycles);

    std::map<std::pair<std::vector<int>, std::vector<int>>, std::int64_t> memo_;
    std::mutex mutex_;
};

/// χ^mu at the class of cycle type alpha.
std::int64_t mn_character(const Partition& mu, const Partition& alpha);

/// n! / ∏_v v^{m_v} m_v!
Integer class_size(const Partition& alpha);

/// The integer character table of S_n. Rows are irreducibles μ, columns are
/// classes α, both in canonical partition order.
struct CharacterTable {
    int n = 0;
    std::vector<Partition> partitions;
    std::vector<std::vector<std::int64_t>> values; // values[mu][alpha]
    std::vector<Integer> degrees;
    std::vector<Integer> class_sizes;

    std::size_t size() const { return partitions.size(); }
    std::size_t index_of(const Partition& p) const;
    std::int64_t value(const Partition& mu, const Partition& alpha) const
    {
        return values[index_of(mu)][index_of(alpha)];
    }
};

constexpr int default_character_table_cap = 12;

/// Throws BudgetError when n exceeds `cap`.
CharacterTable character_table(int n, int cap = default_character_table_cap);

} // namespace ptrans
