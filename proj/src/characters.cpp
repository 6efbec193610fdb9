#include "ptrans/characters.hpp"

#include "ptrans/errors.hpp"

#include <algorithm>
#include <functional>

namespace ptrans {

namespace {

// Beta-set of a shape with `len` beads: β_i = μ_i + len − 1 − i.
std::vector<int> beta_set(const std::vector<int>& shape)
{
    const int len = static_cast<int>(shape.size());
    std::vector<int> beta(shape.size());
    for (int i = 0; i < len; ++i)
        beta[static_cast<std::size_t>(i)] = shape[static_cast<std::size_t>(i)] + len - 1 - i;
    return beta;
}

std::vector<int> shape_of_beta(std::vector<int> beta)
{
    std::sort(beta.begin(), beta.end(), std::greater<>());
    const int len = static_cast<int>(beta.size());
    std::vector<int> shape;
    for (int i = 0; i < len; ++i) {
        const int part = beta[static_cast<std::size_t>(i)] - (len - 1 - i);
        if (part > 0)
            shape.push_back(part);
    }
    return shape;
}

} // namespace

std::int64_t CharacterEvaluator::operator()(const Partition& mu, const Partition& alpha)
{
    if (mu.weight() != alpha.weight())
        throw InputError("mn_character: weight mismatch (" + mu.to_string() + " vs " + alpha.to_string() + ")");
    return evaluate(mu.parts(), alpha.parts());
}

std::int64_t CharacterEvaluator::evaluate(const std::vector<int>& shape, const std::vector<int>& cycles)
{
    if (cycles.empty())
        return shape.empty() ? 1 : 0;
    {
        std::lock_guard lock(mutex_);
        if (auto it = memo_.find({shape, cycles}); it != memo_.end())
            return it->second;
    }

    const int strip = cycles.front();
    const std::vector<int> rest(cycles.begin() + 1, cycles.end());
    const std::vector<int> beta = beta_set(shape);

    // Removing a border strip of length L moves one bead from β to β−L onto
    // an empty position; the height is the number of beads jumped over.
    std::int64_t total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        const int target = beta[i] - strip;
        if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end())
            continue;
        int jumped = 0;
        for (int b : beta)
            if (b > target && b < beta[i])
                ++jumped;
        std::vector<int> moved = beta;
        moved[i] = target;
        const std::int64_t sub = evaluate(shape_of_beta(std::move(moved)), rest);
        total += (jumped % 2 == 0) ? sub : -sub;
    }

    std::lock_guard lock(mutex_);
    memo_.emplace(std::make_pair(shape, cycles), total);
    return total;
}

std::int64_t mn_character(const Partition& mu, const Partition& alpha)
{
    CharacterEvaluator eval;
    return eval(mu, alpha);
}

Integer class_size(const Partition& alpha)
{
    Integer denom = 1;
    for (auto [value, mult] : alpha.multiplicities()) {
        Integer power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(value), static_cast<unsigned long>(mult));
        denom *= power * factorial(mult);
    }
    return factorial(alpha.weight()) / denom;
}

std::size_t CharacterTable::index_of(const Partition& p) const
{
    // canonical order is descending, so search with a reversed comparator
    auto it = std::lower_bound(partitions.begin(), partitions.end(), p, std::greater<>());
    if (it == partitions.end() || *it != p)
        throw InputError("partition " + p.to_string() + " is not a partition of " + std::to_string(n));
    return static_cast<std::size_t>(it - partitions.begin());
}

CharacterTable character_table(int n, int cap)
{
    if (n < 1)
        throw InputError("character_table: n must be positive");
    if (n > cap)
        throw BudgetError("character_table: n = " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    CharacterTable table;
    table.n = n;
    table.partitions = partitions_of(n);
    const std::size_t k = table.partitions.size();
    table.values.assign(k, std::vector<std::int64_t>(k, 0));
    CharacterEvaluator eval;
    for (std::size_t mu = 0; mu < k; ++mu)
        for (std::size_t alpha = 0; alpha < k; ++alpha)
            table.values[mu][alpha] = eval(table.partitions[mu], table.partitions[alpha]);
    for (const auto& p : table.partitions) {
        table.degrees.push_back(hook_degree(p));
        table.class_sizes.push_back(class_size(p));
    }
    // the identity class (1ⁿ) is last in canonical order
    for (std::size_t mu = 0; mu < k; ++mu)
        if (Integer(static_cast<long>(table.values[mu][k - 1])) != table.degrees[mu])
            throw InternalError("character degree mismatch for " + table.partitions[mu].to_string());
    return table;
}

} // namespace ptrans
