#include "ptrans/designs.hpp"

#include "ptrans/errors.hpp"
#include "ptrans/transitivity.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace ptrans {

namespace {

using Mask = std::uint64_t;

Mask mask_of(const std::vector<int>& points)
{
    Mask m = 0;
    for (int p : points)
        m |= Mask{1} << (p - 1);
    return m;
}

// Calls visit(mask) for every size-r subset of the points in `pool`.
void for_each_subset(Mask pool, int r, const std::function<void(Mask)>& visit)
{
    std::vector<int> points;
    for (int p = 0; p < 64; ++p)
        if (pool & (Mask{1} << p))
            points.push_back(p);
    if (r > static_cast<int>(points.size()))
        return;
    std::function<void(std::size_t, int, Mask)> rec = [&](std::size_t from, int left, Mask acc) {
        if (left == 0) {
            visit(acc);
            return;
        }
        for (std::size_t i = from; i + static_cast<std::size_t>(left) <= points.size(); ++i)
            rec(i + 1, left - 1, acc | (Mask{1} << points[i]));
    };
    rec(0, r, 0);
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::vector<int> parse_ints(std::string_view s, int line)
{
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        if (s[pos] == ' ' || s[pos] == '\t' || s[pos] == ',' || s[pos] == '\r') {
            ++pos;
            continue;
        }
        int v = 0;
        auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), v);
        if (ec != std::errc())
            throw ParseError(line, static_cast<int>(pos) + 1, "expected an integer");
        out.push_back(v);
        pos = static_cast<std::size_t>(ptr - s.data());
    }
    return out;
}

std::vector<std::pair<int, std::string_view>> content_lines(std::string_view text)
{
    std::vector<std::pair<int, std::string_view>> out;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos)
            eol = text.size();
        std::string_view line = trim(text.substr(pos, eol - pos));
        pos = eol + 1;
        ++line_no;
        if (!line.empty() && line.front() != '#')
            out.emplace_back(line_no, line);
    }
    return out;
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string block_string(const std::vector<int>& b)
{
    std::string s = "{";
    for (std::size_t i = 0; i < b.size(); ++i)
        s += (i ? "," : "") + std::to_string(b[i]);
    return s + "}";
}

} // namespace

BlockDesign validate_design(int n, int k, std::vector<std::vector<int>> blocks, std::optional<int> claimed_strength)
{
    if (n < 1 || n > 64)
        throw InputError("design: n must lie in 1..64");
    if (k < 1 || k > n)
        throw InputError("design: k must lie in 1..n");
    if (blocks.empty())
        throw InputError("design: no blocks");

    std::set<std::vector<int>> distinct;
    std::vector<Mask> masks;
    for (auto& b : blocks) {
        std::sort(b.begin(), b.end());
        if (static_cast<int>(b.size()) != k)
            throw InputError("design: block " + block_string(b) + " does not have " + std::to_string(k) + " points");
        if (std::adjacent_find(b.begin(), b.end()) != b.end())
            throw InputError("design: block " + block_string(b) + " repeats a point");
        if (b.front() < 1 || b.back() > n)
            throw InputError("design: block " + block_string(b) + " has a point outside 1.." + std::to_string(n));
        if (!distinct.insert(b).second)
            throw InputError("design: repeated block " + block_string(b));
        masks.push_back(mask_of(b));
    }

    BlockDesign d;
    d.n = n;
    d.k = k;
    d.blocks = std::move(blocks);

    const Mask everything = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    // strength: coverage of t-subsets constant; it cannot recover once lost
    int t = 0;
    Integer coverage = static_cast<unsigned long>(masks.size());
    for (int s = 1; s <= k; ++s) {
        std::map<Mask, std::uint64_t> hits;
        for (Mask b : masks)
            for_each_subset(b, s, [&](Mask sub) { ++hits[sub]; });
        if (Integer(static_cast<unsigned long>(hits.size())) != binomial(n, s))
            break;
        const std::uint64_t first = hits.begin()->second;
        if (!std::all_of(hits.begin(), hits.end(), [&](const auto& kv) { return kv.second == first; }))
            break;
        t = s;
        coverage = static_cast<unsigned long>(first);
    }
    if (claimed_strength && *claimed_strength > t)
        throw InputError("design: claimed strength " + std::to_string(*claimed_strength) +
                         " but coverage of " + std::to_string(t + 1) + "-subsets is not constant");
    d.strength = t;
    d.nu = coverage;

    d.nu_table = NuTable(t);
    for (int i = 0; i <= t; ++i)
        for (int j = 0; i + j <= t; ++j) {
            std::optional<std::uint64_t> value;
            bool constant = true;
            for_each_subset(everything, i, [&](Mask in) {
                for_each_subset(everything & ~in, j, [&](Mask out) {
                    std::uint64_t count = 0;
                    for (Mask b : masks)
                        if ((b & in) == in && (b & out) == 0)
                            ++count;
                    if (!value)
                        value = count;
                    else if (*value != count)
                        constant = false;
                });
            });
            if (!constant)
                throw InputError("design: block count nu(" + std::to_string(i) + "," + std::to_string(j) +
                                 ") is not constant");
            d.nu_table.set(i, j, static_cast<unsigned long>(value.value_or(0)));
        }
    return d;
}

BlockDesign read_design(std::string_view text)
{
    const auto lines = content_lines(text);
    if (lines.empty())
        throw ParseError(1, 1, "missing header 'n <n> k <k>'");
    int n = 0;
    int k = 0;
    {
        std::istringstream header{std::string(lines.front().second)};
        std::string n_tag;
        std::string k_tag;
        if (!(header >> n_tag >> n >> k_tag >> k) || n_tag != "n" || k_tag != "k")
            throw ParseError(lines.front().first, 1, "expected header 'n <n> k <k>'");
    }
    std::vector<std::vector<int>> blocks;
    for (std::size_t i = 1; i < lines.size(); ++i)
        blocks.push_back(parse_ints(lines[i].second, lines[i].first));
    return validate_design(n, k, std::move(blocks));
}

BlockDesign read_design_file(const std::string& path)
{
    try {
        return read_design(slurp(path));
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

NuIdentityReport nu_identities_check(const BlockDesign& d)
{
    const NuTable& nu = d.nu_table;
    const int n = d.n;
    const int k = d.k;
    auto fail = [](const char* which, int i, int j) {
        return NuIdentityReport{false, std::string(which) + " fails at i=" + std::to_string(i) + ", j=" + std::to_string(j)};
    };
    for (int i = 0; i <= nu.strength(); ++i)
        for (int j = 0; i + j <= nu.strength(); ++j) {
            if (nu.defined(i + 1, j) && nu.at(i + 1, j) * (n - i - j) != nu.at(i, j) * (k - i))
                return fail("nu(i+1,j)(n-i-j) = nu(i,j)(k-i)", i, j);
            if (nu.defined(i, j + 1) && nu.at(i, j + 1) * (n - i - j) != nu.at(i, j) * (n - k - j))
                return fail("nu(i,j+1)(n-i-j) = nu(i,j)(n-k-j)", i, j);
            if (j >= 1 && nu.defined(i + 1, j - 1) &&
                nu.at(i + 1, j - 1) * (n - k - j + 1) != nu.at(i, j) * (k - i))
                return fail("nu(i+1,j-1)(n-k-j+1) = nu(i,j)(k-i)", i, j);
        }
    return {};
}

BijectionAssignment default_bijections(const BlockDesign& d)
{
    BijectionAssignment bij;
    for (const auto& b : d.blocks) {
        std::vector<int> complement;
        for (int p = 1; p <= d.n; ++p)
            if (!std::binary_search(b.begin(), b.end(), p))
                complement.push_back(p);
        bij.phi.push_back(b);
        bij.psi.push_back(std::move(complement));
    }
    return bij;
}

BijectionAssignment read_bijections(std::string_view text, const BlockDesign& d)
{
    BijectionAssignment bij = default_bijections(d);
    std::vector<bool> assigned(d.blocks.size(), false);
    for (const auto& [line_no, raw] : content_lines(text)) {
        std::string_view line = raw;
        if (auto colon = line.find(':'); colon != std::string_view::npos)
            line = line.substr(colon + 1);
        const auto bar = line.find('|');
        if (bar == std::string_view::npos)
            throw ParseError(line_no, 1, "expected 'label: p1 .. pk | c1 .. c(n-k)'");
        std::vector<int> phi = parse_ints(line.substr(0, bar), line_no);
        std::vector<int> psi = parse_ints(line.substr(bar + 1), line_no);
        std::vector<int> block = phi;
        std::sort(block.begin(), block.end());
        auto it = std::find(d.blocks.begin(), d.blocks.end(), block);
        if (it == d.blocks.end())
            throw ParseError(line_no, 1, "points " + block_string(block) + " are not a block of the design");
        const std::size_t idx = static_cast<std::size_t>(it - d.blocks.begin());
        if (assigned[idx])
            throw ParseError(line_no, 1, "block " + block_string(block) + " assigned twice");
        std::vector<int> rest = psi;
        std::sort(rest.begin(), rest.end());
        if (rest != bij.psi[idx])
            throw ParseError(line_no, static_cast<int>(bar) + 2,
                             "complement list is not a permutation of the points outside " + block_string(block));
        assigned[idx] = true;
        bij.phi[idx] = std::move(phi);
        bij.psi[idx] = std::move(psi);
    }
    return bij;
}

BijectionAssignment read_bijections_file(const std::string& path, const BlockDesign& d)
{
    try {
        return read_bijections(slurp(path), d);
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

Permutation product_element(const BlockDesign& d, const BijectionAssignment& bij, std::size_t block,
                            const Permutation& pi, const Permutation& sigma)
{
    const auto& phi = bij.phi[block];
    const auto& psi = bij.psi[block];
    std::vector<int> images(static_cast<std::size_t>(d.n));
    for (int i = 1; i <= d.k; ++i)
        images[static_cast<std::size_t>(i - 1)] = phi[static_cast<std::size_t>(pi(i) - 1)];
    for (int j = d.k + 1; j <= d.n; ++j)
        images[static_cast<std::size_t>(j - 1)] = psi[static_cast<std::size_t>(sigma(j - d.k) - 1)];
    return Permutation::from_images(images);
}

Partition t_transitive_shape(int m, int t)
{
    if (t >= m)
        return Partition::single_column(m);
    std::vector<int> parts{m - t};
    parts.insert(parts.end(), static_cast<std::size_t>(t), 1);
    return Partition(std::move(parts));
}

PermSet product_construct(const BlockDesign& d, const PermSet& d1, const PermSet& d2, const BijectionAssignment& bij)
{
    if (d1.degree() != d.k)
        throw InputError("product_construct: D1 has degree " + std::to_string(d1.degree()) + ", expected k = " +
                         std::to_string(d.k));
    if (d.n - d.k < 1 || d2.degree() != d.n - d.k)
        throw InputError("product_construct: D2 has degree " + std::to_string(d2.degree()) + ", expected n-k = " +
                         std::to_string(d.n - d.k));
    if (bij.phi.size() != d.blocks.size() || bij.psi.size() != d.blocks.size())
        throw InputError("product_construct: bijection assignment does not cover every block");

    const int t = d.strength;
    const std::pair<const char*, const PermSet*> parts[] = {{"D1", &d1}, {"D2", &d2}};
    for (auto [name, set] : parts) {
        const Partition shape = t_transitive_shape(set->degree(), t);
        const TransitivityVerdict v = check_character(*set, shape);
        if (!v.transitive)
            throw InputError(std::string("product_construct: ") + name + " is not " + std::to_string(t) +
                             "-transitive (" + shape.to_string() + "; " + describe(v.witness) + ")");
    }

    std::vector<Permutation> elements;
    elements.reserve(d.blocks.size() * d1.size() * d2.size());
    for (std::size_t b = 0; b < d.blocks.size(); ++b)
        for (const auto& pi : d1)
            for (const auto& sigma : d2)
                elements.push_back(product_element(d, bij, b, pi, sigma));
    try {
        return PermSet(d.n, std::move(elements));
    } catch (const InputError& e) {
        throw InputError(std::string("product_construct: degenerate bijection assignment: ") + e.what());
    }
}

std::vector<Integer> tuple_constants(const PermSet& d, int h)
{
    const int m = d.degree();
    if (h > m)
        throw InputError("tuple_constants: h = " + std::to_string(h) + " exceeds degree " + std::to_string(m));
    std::vector<Integer> constants;
    for (int i = 0; i <= h; ++i) {
        // ordered i-tuples of distinct points, encoded base m
        std::vector<std::vector<int>> tuples;
        std::vector<int> cur;
        std::vector<bool> used(static_cast<std::size_t>(m), false);
        std::function<void()> gen = [&] {
            if (static_cast<int>(cur.size()) == i) {
                tuples.push_back(cur);
                return;
            }
            for (int p = 1; p <= m; ++p)
                if (!used[static_cast<std::size_t>(p - 1)]) {
                    used[static_cast<std::size_t>(p - 1)] = true;
                    cur.push_back(p);
                    gen();
                    cur.pop_back();
                    used[static_cast<std::size_t>(p - 1)] = false;
                }
        };
        gen();
        std::map<std::vector<int>, std::size_t> rank;
        for (std::size_t r = 0; r < tuples.size(); ++r)
            rank.emplace(tuples[r], r);

        std::optional<std::uint64_t> value;
        std::vector<std::uint64_t> counts(tuples.size());
        std::vector<int> image(static_cast<std::size_t>(i));
        for (const auto& source : tuples) {
            std::fill(counts.begin(), counts.end(), 0);
            for (const auto& g : d) {
                for (int l = 0; l < i; ++l)
                    image[static_cast<std::size_t>(l)] = g(source[static_cast<std::size_t>(l)]);
                ++counts[rank.at(image)];
            }
            for (std::uint64_t c : counts) {
                if (!value)
                    value = c;
                else if (*value != c)
                    throw InputError("tuple_constants: the set is not " + std::to_string(i) + "-transitive");
            }
        }
        constants.emplace_back(static_cast<unsigned long>(*value));
    }
    return constants;
}

} // namespace ptrans
