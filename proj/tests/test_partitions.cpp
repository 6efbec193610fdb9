#include "ptrans/characters.hpp"
#include "ptrans/errors.hpp"
#include "ptrans/partitions.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>

using namespace ptrans;

namespace {

Partition P(std::vector<int> parts)
{
    return Partition(std::move(parts));
}

// p(n) by Euler's pentagonal number recurrence
std::vector<long> partition_counts(int up_to)
{
    std::vector<long> p(static_cast<std::size_t>(up_to + 1), 0);
    p[0] = 1;
    for (int n = 1; n <= up_to; ++n) {
        long sum = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            const int g2 = k * (3 * k + 1) / 2;
            if (g1 > n)
                break;
            const long sign = k % 2 ? 1 : -1;
            sum += sign * p[static_cast<std::size_t>(n - g1)];
            if (g2 <= n)
                sum += sign * p[static_cast<std::size_t>(n - g2)];
        }
        p[static_cast<std::size_t>(n)] = sum;
    }
    return p;
}

// tries every assignment of alpha's parts to la's rows
bool refines_brute(const Partition& alpha, const Partition& la)
{
    std::vector<int> room(la.parts());
    std::function<bool(std::size_t)> place = [&](std::size_t i) {
        if (i == alpha.length())
            return std::all_of(room.begin(), room.end(), [](int r) { return r == 0; });
        for (auto& r : room) {
            if (r >= alpha[i]) {
                r -= alpha[i];
                if (place(i + 1))
                    return true;
                r += alpha[i];
            }
        }
        return false;
    };
    return place(0);
}

// every arrangement of the content multiset into the cells of nu, row by row
long kostka_brute(const Partition& nu, const Partition& la)
{
    std::vector<int> content;
    for (std::size_t i = 0; i < la.length(); ++i)
        content.insert(content.end(), static_cast<std::size_t>(la[i]), static_cast<int>(i + 1));
    std::sort(content.begin(), content.end());
    long count = 0;
    do {
        std::vector<std::vector<int>> rows;
        std::size_t pos = 0;
        for (int len : nu.parts()) {
            rows.emplace_back(content.begin() + static_cast<long>(pos), content.begin() + static_cast<long>(pos + len));
            pos += static_cast<std::size_t>(len);
        }
        bool ok = true;
        for (std::size_t r = 0; r < rows.size() && ok; ++r)
            for (std::size_t c = 0; c < rows[r].size() && ok; ++c) {
                if (c > 0 && rows[r][c - 1] > rows[r][c])
                    ok = false;
                if (r > 0 && rows[r - 1][c] >= rows[r][c])
                    ok = false;
            }
        count += ok;
    } while (std::next_permutation(content.begin(), content.end()));
    return count;
}

// standard tableaux by removing the largest entry from each corner
Integer standard_tableaux(const std::vector<int>& shape, std::map<std::vector<int>, Integer>& memo)
{
    if (shape.empty())
        return 1;
    if (auto it = memo.find(shape); it != memo.end())
        return it->second;
    Integer total = 0;
    for (std::size_t i = 0; i < shape.size(); ++i) {
        if (i + 1 < shape.size() && shape[i + 1] == shape[i])
            continue;
        std::vector<int> smaller = shape;
        if (--smaller[i] == 0)
            smaller.pop_back();
        total += standard_tableaux(smaller, memo);
    }
    memo[shape] = total;
    return total;
}

} // namespace

TEST_CASE("partition construction and parsing")
{
    CHECK(Partition::parse("5,2,1") == P({5, 2, 1}));
    CHECK(Partition::parse(" 3 , 1 ") == P({3, 1}));
    CHECK(P({5, 2, 1}).to_string() == "5,2,1");
    CHECK(P({5, 2, 1}).weight() == 8);
    CHECK(Partition::from_unsorted({1, 3, 2}) == P({3, 2, 1}));
    CHECK_THROWS_AS(P({1, 2}), InputError);
    CHECK_THROWS_AS(P({2, 0}), InputError);
    CHECK_THROWS_AS(Partition::parse("3,,1"), InputError);
    CHECK_THROWS_AS(Partition::parse("a"), InputError);
    CHECK_THROWS_AS(Partition::parse(""), InputError);
    CHECK(P({3, 1})[5] == 0);
    CHECK(P({2, 2, 1}).multiplicities() == std::map<int, int>{{1, 1}, {2, 2}});
}

TEST_CASE("partitions_of lists p(n) partitions in reverse-lex order")
{
    const auto four = partitions_of(4);
    CHECK(four == std::vector<Partition>{P({4}), P({3, 1}), P({2, 2}), P({2, 1, 1}), P({1, 1, 1, 1})});
    CHECK(partitions_of(1) == std::vector<Partition>{P({1})});
    const auto p = partition_counts(15);
    CHECK(p[7] == 15);
    for (int n = 1; n <= 15; ++n) {
        const auto list = partitions_of(n);
        CHECK(static_cast<long>(list.size()) == p[static_cast<std::size_t>(n)]);
        CHECK(std::is_sorted(list.begin(), list.end(), std::greater<>()));
        CHECK(std::adjacent_find(list.begin(), list.end()) == list.end());
        for (const auto& la : list)
            CHECK(la.weight() == n);
    }
    const PartitionIndex index(6);
    for (std::size_t i = 0; i < index.size(); ++i)
        CHECK(index.index_of(index[i]) == i);
    CHECK_THROWS_AS(index.index_of(P({3, 2})), InputError);
}

TEST_CASE("dominance")
{
    for (const auto& la : partitions_of(6))
        CHECK(dominates(P({6}), la));
    CHECK_FALSE(dominates(P({3, 3}), P({4, 1, 1})));
    CHECK_FALSE(dominates(P({4, 1, 1}), P({3, 3})));
    for (int n = 2; n <= 9; ++n)
        for (int t = 1; 2 * t <= n; ++t) {
            std::vector<int> hook{n - t};
            hook.insert(hook.end(), static_cast<std::size_t>(t), 1);
            CHECK(dominates(P({n - t, t}), Partition::from_unsorted(hook)));
        }
    CHECK_THROWS_AS(dominates(P({3}), P({2, 1, 1})), InputError);
}

TEST_CASE("dominance is a partial order")
{
    for (int n = 1; n <= 8; ++n) {
        const auto list = partitions_of(n);
        for (const auto& a : list) {
            CHECK(dominates(a, a));
            for (const auto& b : list) {
                if (a != b && dominates(a, b))
                    CHECK_FALSE(dominates(b, a));
                // canonical order is a linear extension
                if (dominates(a, b))
                    CHECK(a >= b);
                for (const auto& c : list)
                    if (dominates(a, b) && dominates(b, c))
                        CHECK(dominates(a, c));
            }
        }
    }
}

TEST_CASE("refinement")
{
    CHECK(refines(P({2, 2, 1}), P({4, 1})));
    CHECK_FALSE(refines(P({3, 1}), P({2, 2})));
    CHECK_THROWS_AS(refines(P({3, 1}), P({2, 1})), InputError);
    for (int n = 1; n <= 8; ++n)
        for (const auto& alpha : partitions_of(n))
            for (const auto& la : partitions_of(n)) {
                const bool r = refines(alpha, la);
                CHECK(r == refines_brute(alpha, la));
                if (r)
                    CHECK(dominates(la, alpha));
            }
}

TEST_CASE("multinomial")
{
    CHECK(multinomial(P({5, 1, 1})) == 42);
    CHECK(multinomial(P({5, 2})) == 21);
    CHECK(multinomial(Partition::single_column(9)) == factorial(9));
    for (int n = 1; n <= 10; ++n)
        for (const auto& la : partitions_of(n)) {
            // product of binomials, filling rows one at a time
            Integer product = 1;
            int remaining = n;
            for (int part : la.parts()) {
                product *= binomial(remaining, part);
                remaining -= part;
            }
            CHECK(multinomial(la) == product);
        }
}

TEST_CASE("hook-length degrees")
{
    std::map<std::vector<int>, Integer> memo;
    for (int n = 1; n <= 10; ++n) {
        CHECK(hook_degree(Partition::single_row(n)) == 1);
        if (n >= 2) {
            std::vector<int> standard{n - 1};
            if (n - 1 >= 1)
                standard.push_back(1);
            CHECK(hook_degree(Partition::from_unsorted(standard)) == n - 1);
        }
        Integer sum = 0;
        for (const auto& mu : partitions_of(n)) {
            const Integer f = hook_degree(mu);
            CHECK(f == standard_tableaux(mu.parts(), memo));
            CHECK(f == mn_character(mu, Partition::single_column(n)));
            sum += f * f;
        }
        CHECK(sum == factorial(n));
    }
}

TEST_CASE("Kostka numbers")
{
    CHECK(kostka(P({3, 1}), P({2, 1, 1})) == 2);
    CHECK_THROWS_AS(kostka(P({3, 1}), P({2, 1})), InputError);
    for (int n = 1; n <= 7; ++n) {
        const auto list = partitions_of(n);
        for (const auto& nu : list) {
            CHECK(kostka(nu, nu) == 1);
            for (const auto& la : list) {
                const Integer k = kostka(nu, la);
                if (n <= 6)
                    CHECK(k == kostka_brute(nu, la));
                if (!dominates(nu, la))
                    CHECK(k == 0);
                else
                    CHECK(k > 0);
                for (const auto& mu : list)
                    if (dominates(mu, la))
                        CHECK(k >= kostka(nu, mu));
            }
        }
        // column content counts standard tableaux
        for (const auto& nu : list)
            CHECK(kostka(nu, Partition::single_column(n)) == hook_degree(nu));
    }
}

TEST_CASE("depth and up-set")
{
    CHECK(depth(P({7})) == 0);
    CHECK(depth(P({5, 2, 1})) == 3);
    CHECK(depth(P({1, 1, 1, 1})) == 3);
    CHECK(up_set(P({5})) == std::vector<Partition>{P({5})});
    CHECK(up_set(Partition::single_column(6)) == partitions_of(6));
    CHECK(up_set(P({2, 2})) == std::vector<Partition>{P({4}), P({3, 1}), P({2, 2})});
    for (int n = 1; n <= 8; ++n)
        for (const auto& la : partitions_of(n)) {
            std::vector<Partition> expected;
            for (const auto& mu : partitions_of(n))
                if (dominates(mu, la))
                    expected.push_back(mu);
            CHECK(up_set(la) == expected);
        }
}
