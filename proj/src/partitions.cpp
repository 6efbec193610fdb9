#include "ptrans/partitions.hpp"

#include "ptrans/errors.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

namespace ptrans {

namespace {

void require_same_weight(const Partition& a, const Partition& b, const char* op)
{
    if (a.weight() != b.weight())
        throw InputError(std::string(op) + ": weight mismatch (" + a.to_string() + " has weight " +
                         std::to_string(a.weight()) + ", " + b.to_string() + " has weight " +
                         std::to_string(b.weight()) + ")");
}

void generate(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        generate(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw InputError("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw InputError("partition parts must be weakly decreasing");
        weight_ += parts_[i];
    }
}

Partition Partition::from_unsorted(std::vector<int> parts)
{
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Partition Partition::parse(std::string_view text)
{
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos)
            comma = text.size();
        std::string_view token = text.substr(pos, comma - pos);
        while (!token.empty() && token.front() == ' ')
            token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ')
            token.remove_suffix(1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
            throw InputError("malformed partition '" + std::string(text) + "'");
        parts.push_back(value);
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

std::map<int, int> Partition::multiplicities() const
{
    std::map<int, int> m;
    for (int p : parts_)
        ++m[p];
    return m;
}

std::string Partition::to_string() const
{
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

std::vector<Partition> partitions_of(int n)
{
    if (n < 1)
        throw InputError("partitions_of: n must be positive");
    std::vector<Partition> out;
    std::vector<int> prefix;
    generate(n, n, prefix, out);
    return out;
}

PartitionIndex::PartitionIndex(int n) : n_(n), list_(partitions_of(n))
{
    for (std::size_t i = 0; i < list_.size(); ++i)
        index_.emplace(list_[i], i);
}

std::size_t PartitionIndex::index_of(const Partition& p) const
{
    auto it = index_.find(p);
    if (it == index_.end())
        throw InputError("partition " + p.to_string() + " does not have weight " + std::to_string(n_));
    return it->second;
}

bool dominates(const Partition& mu, const Partition& la)
{
    require_same_weight(mu, la, "dominates");
    int sum_mu = 0;
    int sum_la = 0;
    const std::size_t len = std::max(mu.length(), la.length());
    for (std::size_t j = 0; j < len; ++j) {
        sum_mu += mu[j];
        sum_la += la[j];
        if (sum_mu < sum_la)
            return false;
    }
    return true;
}

bool refines(const Partition& alpha, const Partition& la)
{
    require_same_weight(alpha, la, "refines");
    std::vector<int> capacity = la.parts();
    const std::vector<int>& items = alpha.parts(); // already decreasing

    std::function<bool(std::size_t)> place = [&](std::size_t i) -> bool {
        if (i == items.size())
            return true;
        for (std::size_t b = 0; b < capacity.size(); ++b) {
            if (capacity[b] < items[i])
                continue;
            // bins with equal remaining capacity are interchangeable
            bool seen = false;
            for (std::size_t c = 0; c < b; ++c)
                if (capacity[c] == capacity[b]) {
                    seen = true;
                    break;
                }
            if (seen)
                continue;
            capacity[b] -= items[i];
            if (place(i + 1))
                return true;
            capacity[b] += items[i];
        }
        return false;
    };
    return place(0);
}

Integer multinomial(const Partition& la)
{
    Integer result = factorial(la.weight());
    for (int p : la.parts())
        result /= factorial(p);
    return result;
}

Integer hook_degree(const Partition& mu)
{
    Integer hooks = 1;
    for (std::size_t i = 0; i < mu.length(); ++i) {
        for (int j = 0; j < mu[i]; ++j) {
            int arm = mu[i] - j - 1;
            int leg = 0;
            for (std::size_t r = i + 1; r < mu.length() && mu[r] > j; ++r)
                ++leg;
            hooks *= arm + leg + 1;
        }
    }
    return factorial(mu.weight()) / hooks;
}

Integer kostka(const Partition& nu, const Partition& la)
{
    require_same_weight(nu, la, "kostka");
    const std::size_t rows = nu.length();
    std::vector<int> shape(rows, 0);

    // Entries equal to `value` form a horizontal strip of size la[value]
    // added to the shape filled so far.
    std::function<Integer(std::size_t)> fill_value;
    std::function<Integer(std::size_t, std::size_t, int, const std::vector<int>&)> place_strip;

    place_strip = [&](std::size_t value, std::size_t row, int left, const std::vector<int>& before) -> Integer {
        if (left == 0)
            return fill_value(value + 1);
        if (row == rows)
            return 0;
        Integer total = 0;
        const int cap = std::min(nu[row], row == 0 ? nu[0] : before[row - 1]);
        const int room = cap - shape[row];
        for (int take = std::min(room, left); take >= 0; --take) {
            shape[row] += take;
            total += place_strip(value, row + 1, left - take, before);
            shape[row] -= take;
        }
        return total;
    };

    fill_value = [&](std::size_t value) -> Integer {
        if (value == la.length())
            return std::equal(shape.begin(), shape.end(), nu.parts().begin()) ? 1 : 0;
        std::vector<int> before = shape;
        return place_strip(value, 0, la[value], before);
    };

    return fill_value(0);
}

int depth(const Partition& nu)
{
    return nu.weight() - nu[0];
}

std::vector<Partition> up_set(const Partition& la)
{
    std::vector<Partition> out;
    for (const Partition& mu : partitions_of(la.weight()))
        if (dominates(mu, la))
            out.push_back(mu);
    return out;
}

} // namespace ptrans
