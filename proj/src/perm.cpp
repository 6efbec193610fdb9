#include "ptrans/perm.hpp"

#include "ptrans/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <unordered_set>

namespace ptrans {

namespace {

void require_same_degree(const Permutation& g, const Permutation& h, const char* op)
{
    if (g.degree() != h.degree())
        throw InputError(std::string(op) + ": degree mismatch (" + std::to_string(g.degree()) + " vs " +
                         std::to_string(h.degree()) + ")");
}

class PermParser {
public:
    PermParser(std::string_view text, int n, int line) : text_(text), n_(n), line_(line) {}

    Permutation parse()
    {
        if (n_ < 1)
            throw ParseError(line_, 1, "degree must be positive");
        skip_blanks();
        if (pos_ < text_.size() && text_[pos_] == '(')
            return parse_cycles();
        return parse_one_line();
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError(line_, static_cast<int>(pos_) + 1, what);
    }

    void skip_blanks()
    {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == ','))
            ++pos_;
    }

    int read_number()
    {
        const char* first = text_.data() + pos_;
        int value = 0;
        auto [ptr, ec] = std::from_chars(first, text_.data() + text_.size(), value);
        if (ec != std::errc() || ptr == first)
            fail("expected a point");
        pos_ += static_cast<std::size_t>(ptr - first);
        return value;
    }

    void check_point(int p, std::vector<bool>& used)
    {
        if (p < 1 || p > n_)
            fail("point " + std::to_string(p) + " out of range 1.." + std::to_string(n_));
        if (used[static_cast<std::size_t>(p - 1)])
            fail("point " + std::to_string(p) + " repeated");
        used[static_cast<std::size_t>(p - 1)] = true;
    }

    Permutation parse_one_line()
    {
        std::vector<bool> used(static_cast<std::size_t>(n_), false);
        std::vector<int> images;
        while (true) {
            skip_blanks();
            if (pos_ == text_.size())
                break;
            if (!std::isdigit(static_cast<unsigned char>(text_[pos_])))
                fail(std::string("unexpected character '") + text_[pos_] + "'");
            const std::size_t start = pos_;
            int p = read_number();
            if (static_cast<int>(images.size()) == n_) {
                pos_ = start;
                fail("more than " + std::to_string(n_) + " images");
            }
            pos_ = start;
            check_point(p, used);
            read_number();
            images.push_back(p);
        }
        if (static_cast<int>(images.size()) != n_)
            fail("expected " + std::to_string(n_) + " images, found " + std::to_string(images.size()));
        return Permutation::from_images(images);
    }

    Permutation parse_cycles()
    {
        std::vector<bool> used(static_cast<std::size_t>(n_), false);
        std::vector<std::vector<int>> cycles;
        while (true) {
            skip_blanks();
            if (pos_ == text_.size())
                break;
            if (text_[pos_] != '(')
                fail("expected '('");
            ++pos_;
            const std::size_t close = text_.find(')', pos_);
            if (close == std::string_view::npos)
                fail("unbalanced '('");
            const std::string_view body = text_.substr(pos_, close - pos_);
            if (body.find('(') != std::string_view::npos)
                fail("nested '('");
            const bool separated = body.find_first_of(" \t,") != std::string_view::npos;
            std::vector<int> cycle;
            while (pos_ < close) {
                skip_blanks();
                if (pos_ >= close)
                    break;
                if (!std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    fail(std::string("unexpected character '") + text_[pos_] + "'");
                int p;
                const std::size_t start = pos_;
                if (separated || body.size() == 1) {
                    p = read_number();
                } else {
                    if (n_ > 9)
                        fail("cycle points must be separated when n > 9");
                    p = text_[pos_] - '0';
                    ++pos_;
                }
                const std::size_t after = pos_;
                pos_ = start;
                check_point(p, used);
                pos_ = after;
                cycle.push_back(p);
            }
            pos_ = close + 1;
            if (cycle.size() > 1)
                cycles.push_back(std::move(cycle));
        }
        return Permutation::from_cycles(n_, cycles);
    }

    std::string_view text_;
    int n_;
    int line_;
    std::size_t pos_ = 0;
};

} // namespace

Permutation Permutation::identity(int degree)
{
    if (degree < 1)
        throw InputError("permutation degree must be positive");
    std::vector<int> t(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i)
        t[static_cast<std::size_t>(i)] = i;
    return Permutation(std::move(t));
}

Permutation Permutation::from_images(std::span<const int> images)
{
    const int n = static_cast<int>(images.size());
    if (n < 1)
        throw InputError("permutation degree must be positive");
    std::vector<int> t(images.size());
    std::vector<bool> seen(images.size(), false);
    for (std::size_t i = 0; i < images.size(); ++i) {
        const int p = images[i];
        if (p < 1 || p > n)
            throw InputError("image " + std::to_string(p) + " out of range 1.." + std::to_string(n));
        if (seen[static_cast<std::size_t>(p - 1)])
            throw InputError("image " + std::to_string(p) + " repeated");
        seen[static_cast<std::size_t>(p - 1)] = true;
        t[i] = p - 1;
    }
    return Permutation(std::move(t));
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles)
{
    Permutation g = identity(degree);
    std::vector<bool> seen(static_cast<std::size_t>(degree), false);
    for (const auto& cycle : cycles) {
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            const int p = cycle[i];
            if (p < 1 || p > degree)
                throw InputError("point " + std::to_string(p) + " out of range 1.." + std::to_string(degree));
            if (seen[static_cast<std::size_t>(p - 1)])
                throw InputError("point " + std::to_string(p) + " repeated");
            seen[static_cast<std::size_t>(p - 1)] = true;
            g.images_[static_cast<std::size_t>(p - 1)] = cycle[(i + 1) % cycle.size()] - 1;
        }
    }
    return g;
}

std::vector<int> Permutation::images() const
{
    std::vector<int> out(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
        out[i] = images_[i] + 1;
    return out;
}

bool Permutation::is_identity() const
{
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != static_cast<int>(i))
            return false;
    return true;
}

bool Permutation::is_even() const
{
    int transpositions = 0;
    for (const auto& c : cycles())
        transpositions += static_cast<int>(c.size()) - 1;
    return transpositions % 2 == 0;
}

std::vector<std::vector<int>> Permutation::cycles() const
{
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t start = 0; start < images_.size(); ++start) {
        if (seen[start] || images_[start] == static_cast<int>(start))
            continue;
        std::vector<int> cycle;
        for (std::size_t p = start; !seen[p]; p = static_cast<std::size_t>(images_[p])) {
            seen[p] = true;
            cycle.push_back(static_cast<int>(p) + 1);
        }
        out.push_back(std::move(cycle));
    }
    return out;
}

std::string Permutation::to_cycle_string() const
{
    const auto cs = cycles();
    if (cs.empty())
        return "()";
    std::string s;
    for (const auto& c : cs) {
        s += '(';
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i)
                s += ' ';
            s += std::to_string(c[i]);
        }
        s += ')';
    }
    return s;
}

std::string Permutation::to_one_line_string() const
{
    std::string s;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (i)
            s += ' ';
        s += std::to_string(images_[i] + 1);
    }
    return s;
}

Permutation parse_perm(std::string_view text, int n, int line)
{
    return PermParser(text, n, line).parse();
}

Permutation compose(const Permutation& g, const Permutation& h)
{
    require_same_degree(g, h, "compose");
    std::vector<int> t(h.images_.size());
    for (std::size_t i = 0; i < t.size(); ++i)
        t[i] = g.images_[static_cast<std::size_t>(h.images_[i])];
    return Permutation(std::move(t));
}

Permutation inverse(const Permutation& g)
{
    std::vector<int> t(g.images_.size());
    for (std::size_t i = 0; i < t.size(); ++i)
        t[static_cast<std::size_t>(g.images_[i])] = static_cast<int>(i);
    return Permutation(std::move(t));
}

Partition cycle_type(const Permutation& g)
{
    const auto table = g.table();
    std::vector<bool> seen(table.size(), false);
    std::vector<int> lengths;
    for (std::size_t start = 0; start < table.size(); ++start) {
        if (seen[start])
            continue;
        int len = 0;
        for (std::size_t p = start; !seen[p]; p = static_cast<std::size_t>(table[p])) {
            seen[p] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    return Partition::from_unsorted(std::move(lengths));
}

Partition quotient_cycle_type(const Permutation& g, const Permutation& h, std::vector<int>& scratch)
{
    require_same_degree(g, h, "quotient_cycle_type");
    const std::size_t n = static_cast<std::size_t>(g.degree());
    scratch.resize(2 * n);
    int* hinv = scratch.data();
    int* seen = scratch.data() + n;
    const auto gt = g.table();
    const auto ht = h.table();
    for (std::size_t i = 0; i < n; ++i) {
        hinv[ht[i]] = static_cast<int>(i);
        seen[i] = 0;
    }
    std::vector<int> lengths;
    for (std::size_t start = 0; start < n; ++start) {
        if (seen[start])
            continue;
        int len = 0;
        for (std::size_t p = start; !seen[p]; p = static_cast<std::size_t>(gt[static_cast<std::size_t>(hinv[p])])) {
            seen[p] = 1;
            ++len;
        }
        lengths.push_back(len);
    }
    return Partition::from_unsorted(std::move(lengths));
}

PermSet closure(const std::vector<Permutation>& generators, std::size_t cap)
{
    if (generators.empty())
        throw InputError("closure: at least one generator is required");
    const int n = generators.front().degree();
    for (const auto& s : generators)
        if (s.degree() != n)
            throw InputError("closure: generators have different degrees");

    std::unordered_set<Permutation> seen;
    std::deque<Permutation> queue;
    const Permutation id = Permutation::identity(n);
    seen.insert(id);
    queue.push_back(id);
    if (seen.size() > cap)
        throw BudgetError("closure: cap " + std::to_string(cap) + " exceeded (reached 1 element)");
    while (!queue.empty()) {
        const Permutation x = std::move(queue.front());
        queue.pop_front();
        for (const auto& s : generators) {
            Permutation y = compose(s, x);
            if (seen.insert(y).second) {
                if (seen.size() > cap)
                    throw BudgetError("closure: cap " + std::to_string(cap) + " exceeded (reached " +
                                      std::to_string(seen.size()) + " elements)");
                queue.push_back(std::move(y));
            }
        }
    }
    PermSet result(n, std::vector<Permutation>(seen.begin(), seen.end()));
    result.assume_group();
    return result;
}

PermSet::PermSet(int degree, std::vector<Permutation> elements) : degree_(degree), elements_(std::move(elements))
{
    if (degree_ < 1)
        throw InputError("permutation set degree must be positive");
    for (const auto& g : elements_)
        if (g.degree() != degree_)
            throw InputError("permutation of degree " + std::to_string(g.degree()) + " in a set of degree " +
                             std::to_string(degree_));
    std::sort(elements_.begin(), elements_.end());
    auto dup = std::adjacent_find(elements_.begin(), elements_.end());
    if (dup != elements_.end())
        throw InputError("duplicate permutation " + dup->to_cycle_string() + " in set");
}

bool PermSet::contains(const Permutation& g) const
{
    return std::binary_search(elements_.begin(), elements_.end(), g);
}

bool PermSet::is_group(std::size_t pair_budget) const
{
    if (group_)
        return *group_;
    if (elements_.empty()) {
        group_ = false;
        return false;
    }
    if (elements_.size() > pair_budget / elements_.size())
        throw BudgetError("group check needs " + std::to_string(elements_.size()) + "² products, beyond budget " +
                          std::to_string(pair_budget) + "; declare the set a group explicitly");
    if (!contains(Permutation::identity(degree_))) {
        group_ = false;
        return false;
    }
    std::unordered_set<Permutation> lookup(elements_.begin(), elements_.end());
    for (const auto& g : elements_)
        for (const auto& h : elements_)
            if (!lookup.count(compose(g, h))) {
                group_ = false;
                return false;
            }
    group_ = true;
    return true;
}

} // namespace ptrans

std::size_t std::hash<ptrans::Permutation>::operator()(const ptrans::Permutation& g) const noexcept
{
    std::size_t h = 1469598103934665603ull;
    for (int v : g.table()) {
        h ^= static_cast<std::size_t>(v);
        h *= 1099511628211ull;
    }
    return h;
}
