#include "ptrans/tabloids.hpp"

#include "ptrans/errors.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <numeric>

namespace ptrans {

Tabloid::Tabloid(std::vector<std::vector<int>> blocks) : blocks_(std::move(blocks))
{
    for (auto& b : blocks_) {
        if (b.empty())
            throw InputError("tabloid blocks must be non-empty");
        std::sort(b.begin(), b.end());
        degree_ += static_cast<int>(b.size());
    }
    std::vector<bool> seen(static_cast<std::size_t>(degree_), false);
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (i > 0 && blocks_[i].size() > blocks_[i - 1].size())
            throw InputError("tabloid block sizes must be weakly decreasing");
        for (int p : blocks_[i]) {
            if (p < 1 || p > degree_)
                throw InputError("tabloid point " + std::to_string(p) + " out of range 1.." + std::to_string(degree_));
            if (seen[static_cast<std::size_t>(p - 1)])
                throw InputError("tabloid point " + std::to_string(p) + " appears twice");
            seen[static_cast<std::size_t>(p - 1)] = true;
        }
    }
}

Tabloid Tabloid::parse(std::string_view text)
{
    if (text.size() < 2 || text.front() != '{' || text.back() != '}')
        throw InputError("malformed tabloid '" + std::string(text) + "'");
    std::string_view body = text.substr(1, text.size() - 2);
    std::vector<std::vector<int>> blocks(1);
    std::size_t pos = 0;
    while (pos < body.size()) {
        const char c = body[pos];
        if (c == '|') {
            blocks.emplace_back();
            ++pos;
        } else if (c == ',' || c == ' ') {
            ++pos;
        } else {
            int v = 0;
            auto [ptr, ec] = std::from_chars(body.data() + pos, body.data() + body.size(), v);
            if (ec != std::errc())
                throw InputError("malformed tabloid '" + std::string(text) + "'");
            blocks.back().push_back(v);
            pos = static_cast<std::size_t>(ptr - body.data());
        }
    }
    return Tabloid(std::move(blocks));
}

Tabloid Tabloid::first_of_shape(const Partition& la)
{
    std::vector<std::vector<int>> blocks;
    int next = 1;
    for (int part : la.parts()) {
        std::vector<int> b(static_cast<std::size_t>(part));
        std::iota(b.begin(), b.end(), next);
        next += part;
        blocks.push_back(std::move(b));
    }
    return Tabloid(std::move(blocks));
}

Partition Tabloid::shape() const
{
    std::vector<int> sizes;
    for (const auto& b : blocks_)
        sizes.push_back(static_cast<int>(b.size()));
    return Partition(std::move(sizes));
}

std::vector<std::uint8_t> Tabloid::labels() const
{
    std::vector<std::uint8_t> out(static_cast<std::size_t>(degree_));
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        for (int p : blocks_[i])
            out[static_cast<std::size_t>(p - 1)] = static_cast<std::uint8_t>(i);
    return out;
}

Tabloid Tabloid::from_labels(const std::vector<std::uint8_t>& labels, std::size_t block_count)
{
    std::vector<std::vector<int>> blocks(block_count);
    for (std::size_t p = 0; p < labels.size(); ++p)
        blocks[labels[p]].push_back(static_cast<int>(p) + 1);
    return Tabloid(std::move(blocks));
}

std::string Tabloid::to_string() const
{
    std::string s = "{";
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (i)
            s += '|';
        for (std::size_t j = 0; j < blocks_[i].size(); ++j) {
            if (j)
                s += ',';
            s += std::to_string(blocks_[i][j]);
        }
    }
    return s + "}";
}

std::vector<Tabloid> tabloids_of_shape(int n, const Partition& la)
{
    if (la.weight() != n)
        throw InputError("tabloids_of_shape: partition " + la.to_string() + " does not have weight " +
                         std::to_string(n));
    if (n > 255)
        throw InputError("tabloids_of_shape: degree too large");
    std::vector<Tabloid> out;
    std::vector<std::vector<int>> blocks(la.length());
    std::vector<bool> used(static_cast<std::size_t>(n), false);

    // Choose block b as a lexicographic combination of the unused points.
    std::function<void(std::size_t)> fill_block;
    std::function<void(std::size_t, int)> extend;
    extend = [&](std::size_t b, int from) {
        if (static_cast<int>(blocks[b].size()) == la[b]) {
            fill_block(b + 1);
            return;
        }
        for (int p = from; p <= n; ++p) {
            if (used[static_cast<std::size_t>(p - 1)])
                continue;
            used[static_cast<std::size_t>(p - 1)] = true;
            blocks[b].push_back(p);
            extend(b, p + 1);
            blocks[b].pop_back();
            used[static_cast<std::size_t>(p - 1)] = false;
        }
    };
    fill_block = [&](std::size_t b) {
        if (b == blocks.size()) {
            out.emplace_back(blocks);
            return;
        }
        extend(b, 1);
    };
    fill_block(0);
    return out;
}

Tabloid act(const Permutation& g, const Tabloid& p)
{
    if (g.degree() != p.degree())
        throw InputError("act: degree mismatch (" + std::to_string(g.degree()) + " vs " +
                         std::to_string(p.degree()) + ")");
    std::vector<std::vector<int>> blocks = p.blocks();
    for (auto& b : blocks)
        for (int& x : b)
            x = g(x);
    return Tabloid(std::move(blocks));
}

TabloidIndex::TabloidIndex(int n, const Partition& la) : shape_(la), tabloids_(tabloids_of_shape(n, la))
{
    labels_.reserve(tabloids_.size());
    rank_.reserve(tabloids_.size());
    for (std::size_t i = 0; i < tabloids_.size(); ++i) {
        labels_.push_back(tabloids_[i].labels());
        rank_.emplace(std::string(labels_.back().begin(), labels_.back().end()), i);
    }
}

std::size_t TabloidIndex::rank_of_labels(const std::vector<std::uint8_t>& labels) const
{
    auto it = rank_.find(std::string(labels.begin(), labels.end()));
    if (it == rank_.end())
        throw InputError("tabloid labels do not match shape " + shape_.to_string());
    return it->second;
}

std::size_t TabloidIndex::rank_of_image(const Permutation& g, std::size_t i, std::vector<std::uint8_t>& scratch) const
{
    const auto& src = labels_[i];
    const auto table = g.table();
    scratch.resize(src.size());
    for (std::size_t p = 0; p < src.size(); ++p)
        scratch[static_cast<std::size_t>(table[p])] = src[p];
    return rank_of_labels(scratch);
}

PermSet young_subgroup(const Tabloid& p, std::size_t cap)
{
    Integer order = 1;
    for (const auto& b : p.blocks())
        order *= factorial(static_cast<int>(b.size()));
    if (order > cap)
        throw BudgetError("young_subgroup: order " + order.get_str() + " exceeds cap " + std::to_string(cap));

    const int n = p.degree();
    std::vector<Permutation> elements;
    std::vector<std::vector<int>> arrangement = p.blocks();
    std::vector<int> images(static_cast<std::size_t>(n));

    std::function<void(std::size_t)> permute_block = [&](std::size_t b) {
        if (b == arrangement.size()) {
            for (std::size_t i = 0; i < arrangement.size(); ++i)
                for (std::size_t j = 0; j < arrangement[i].size(); ++j)
                    images[static_cast<std::size_t>(p.blocks()[i][j] - 1)] = arrangement[i][j];
            elements.push_back(Permutation::from_images(images));
            return;
        }
        std::sort(arrangement[b].begin(), arrangement[b].end());
        do {
            permute_block(b + 1);
        } while (std::next_permutation(arrangement[b].begin(), arrangement[b].end()));
    };
    permute_block(0);
    PermSet result(n, std::move(elements));
    result.assume_group();
    return result;
}

YoungCoset::YoungCoset(Tabloid base, Tabloid image) : base_(std::move(base)), image_(std::move(image))
{
    if (base_.shape() != image_.shape() || base_.degree() != image_.degree())
        throw InputError("coset base " + base_.to_string() + " and image " + image_.to_string() +
                         " have different shapes");
}

PermSet YoungCoset::elements(std::size_t cap) const
{
    // a fixed g with g·base = image: match block contents in sorted order
    std::vector<int> images(static_cast<std::size_t>(base_.degree()));
    for (std::size_t i = 0; i < base_.blocks().size(); ++i)
        for (std::size_t j = 0; j < base_.blocks()[i].size(); ++j)
            images[static_cast<std::size_t>(base_.blocks()[i][j] - 1)] = image_.blocks()[i][j];
    const Permutation g = Permutation::from_images(images);
    const PermSet y = young_subgroup(base_, cap);
    std::vector<Permutation> elements;
    elements.reserve(y.size());
    for (const auto& h : y)
        elements.push_back(compose(g, h));
    return PermSet(base_.degree(), std::move(elements));
}

Integer fixed_tabloid_count(const Partition& cycle_type, const Partition& la)
{
    if (cycle_type.weight() != la.weight())
        throw InputError("fixed_tabloid_count: weight mismatch (" + cycle_type.to_string() + " vs " +
                         la.to_string() + ")");
    // Remaining cycle multiset as (length, multiplicity) pairs; each block
    // draws a sub-multiset summing to its size, weighted by the number of
    // ways to pick which of the equal-length cycles go into it.
    std::vector<std::pair<int, int>> pool;
    for (auto [len, mult] : cycle_type.multiplicities())
        pool.emplace_back(len, mult);
    std::sort(pool.begin(), pool.end(), [](auto a, auto b) { return a.first > b.first; });

    std::map<std::pair<std::size_t, std::vector<int>>, Integer> memo;
    std::vector<int> remaining(pool.size());
    for (std::size_t i = 0; i < pool.size(); ++i)
        remaining[i] = pool[i].second;

    std::function<Integer(std::size_t)> count_blocks;
    std::function<Integer(std::size_t, std::size_t, int)> fill;

    fill = [&](std::size_t block, std::size_t kind, int left) -> Integer {
        if (left == 0)
            return count_blocks(block + 1);
        if (kind == pool.size())
            return 0;
        Integer total = 0;
        const int len = pool[kind].first;
        const int have = remaining[kind];
        for (int take = std::min(have, left / len); take >= 0; --take) {
            remaining[kind] = have - take;
            Integer sub = fill(block, kind + 1, left - take * len);
            if (sub != 0)
                total += binomial(have, take) * sub;
        }
        remaining[kind] = have;
        return total;
    };

    count_blocks = [&](std::size_t block) -> Integer {
        if (block == la.length())
            return 1;
        auto key = std::make_pair(block, remaining);
        if (auto it = memo.find(key); it != memo.end())
            return it->second;
        Integer value = fill(block, 0, la[block]);
        memo.emplace(std::move(key), value);
        return value;
    };

    return count_blocks(0);
}

Integer fixed_tabloid_count(const Permutation& g, const Partition& la)
{
    return fixed_tabloid_count(cycle_type(g), la);
}

} // namespace ptrans
