#include "ptrans/transitivity.hpp"

#include "ptrans/errors.hpp"

#include <algorithm>
#include <map>
#include <thread>
#include <unordered_set>

namespace ptrans {

namespace {

void require_nonempty(const PermSet& d, const char* op)
{
    if (d.empty())
        throw InputError(std::string(op) + ": the permutation set is empty");
}

void require_weight(const PermSet& d, const Partition& la, const char* op)
{
    if (la.weight() != d.degree())
        throw InputError(std::string(op) + ": partition " + la.to_string() + " has weight " +
                         std::to_string(la.weight()) + " but the set has degree " + std::to_string(d.degree()));
}

void require_group(const PermSet& g, const Budgets& budgets, const char* op)
{
    if (!g.is_group(budgets.group_check_pairs))
        throw InputError(std::string(op) + ": the permutation set is not a group");
}

CharacterTable table_for(int n, const Budgets& budgets)
{
    return character_table(n, budgets.max_table_n);
}

Rational ratio(std::size_t size, const Partition& la)
{
    Rational r(Integer(static_cast<unsigned long>(size)), multinomial(la));
    r.canonicalize();
    return r;
}

Integer character_sum(const ClassDistribution& c, const CharacterTable& table, std::size_t mu)
{
    Integer sum = 0;
    for (std::size_t alpha = 0; alpha < c.counts.size(); ++alpha)
        if (c.counts[alpha] != 0)
            sum += Integer(static_cast<unsigned long>(c.counts[alpha])) *
                   Integer(static_cast<long>(table.values[mu][alpha]));
    return sum;
}

} // namespace

const char* to_string(Method m)
{
    switch (m) {
    case Method::oracle:
        return "oracle";
    case Method::character:
        return "character";
    case Method::orbit:
        return "orbit";
    }
    return "?";
}

std::string describe(const Witness& w)
{
    struct Visitor {
        std::string operator()(std::monostate) const { return "none"; }
        std::string operator()(const TabloidWitness& t) const
        {
            return std::to_string(t.count) + " elements take " + t.from.to_string() + " to " + t.to.to_string();
        }
        std::string operator()(const SpectralWitness& s) const
        {
            return "b[" + s.mu.to_string() + "] = " + to_string(s.b);
        }
        std::string operator()(const OrbitWitness& o) const
        {
            return "orbit of " + o.start.to_string() + " has size " + std::to_string(o.orbit_size);
        }
    };
    return std::visit(Visitor{}, w);
}

ClassDistribution pair_class_distribution(const PermSet& d)
{
    require_nonempty(d, "pair_class_distribution");
    const PartitionIndex index(d.degree());
    ClassDistribution c{index.list(), std::vector<std::uint64_t>(index.size(), 0)};

    if (d.known_group().value_or(false)) {
        // for a group, every g ∈ D is the quotient g'h⁻¹ for exactly |D| pairs
        for (const auto& g : d)
            c.counts[index.index_of(cycle_type(g))] += d.size();
        return c;
    }

    std::map<std::vector<int>, std::size_t> by_parts;
    for (std::size_t i = 0; i < index.size(); ++i)
        by_parts.emplace(index[i].parts(), i);

    // rows of D×D are split across threads; each keeps its own counts
    const std::size_t rows = d.size();
    const std::size_t workers =
        rows * rows < 1'000'000 ? 1 : std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), 16));
    std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(index.size(), 0));
    auto work = [&](std::size_t w) {
        std::vector<int> scratch;
        auto& counts = partial[w];
        for (std::size_t i = w; i < rows; i += workers)
            for (const auto& h : d)
                ++counts[by_parts.at(quotient_cycle_type(d.elements()[i], h, scratch).parts())];
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        for (std::size_t w = 0; w < workers; ++w)
            threads.emplace_back(work, w);
        for (auto& t : threads)
            t.join();
    }
    for (const auto& counts : partial)
        for (std::size_t i = 0; i < counts.size(); ++i)
            c.counts[i] += counts[i];
    return c;
}

DistributionVector inner_distribution(const PermSet& d)
{
    return inner_distribution(d, pair_class_distribution(d));
}

DistributionVector inner_distribution(const PermSet& d, const ClassDistribution& c)
{
    require_nonempty(d, "inner_distribution");
    DistributionVector a{DistributionVector::Kind::inner, c.index, {}};
    const Integer size(static_cast<unsigned long>(d.size()));
    Rational total = 0;
    for (std::uint64_t count : c.counts) {
        Rational v(Integer(static_cast<unsigned long>(count)), size);
        v.canonicalize();
        total += v;
        a.values.push_back(v);
    }
    if (total != size)
        throw InternalError("inner distribution does not sum to |D|");
    return a;
}

DistributionVector dual_distribution(const PermSet& d, const Budgets& budgets)
{
    return dual_distribution(d, pair_class_distribution(d), table_for(d.degree(), budgets));
}

DistributionVector dual_distribution(const PermSet& d, const ClassDistribution& c, const CharacterTable& table)
{
    require_nonempty(d, "dual_distribution");
    DistributionVector b{DistributionVector::Kind::dual, table.partitions, {}};
    const Integer size(static_cast<unsigned long>(d.size()));
    Rational total = 0;
    for (std::size_t mu = 0; mu < table.size(); ++mu) {
        Rational v(table.degrees[mu] * character_sum(c, table, mu), size);
        v.canonicalize();
        if (v < 0)
            throw InternalError("negative dual coefficient b[" + table.partitions[mu].to_string() + "] = " +
                                to_string(v));
        total += v;
        b.values.push_back(v);
    }
    if (b.values.front() != size)
        throw InternalError("dual coefficient b[(n)] differs from |D|");
    if (total != factorial(table.n))
        throw InternalError("dual distribution does not sum to n!");
    return b;
}

TransitivityVerdict check_oracle(const PermSet& d, const Partition& la, const Budgets& budgets)
{
    require_nonempty(d, "check_oracle");
    require_weight(d, la, "check_oracle");
    const Integer tabloids = multinomial(la);
    if (tabloids * tabloids * static_cast<unsigned long>(d.size()) > Integer(std::to_string(budgets.oracle_work)))
        throw BudgetError("check_oracle: " + tabloids.get_str() + "² tabloid pairs × " + std::to_string(d.size()) +
                          " elements exceeds the oracle budget; use the character method");

    TransitivityVerdict verdict{la, true, ratio(d.size(), la), std::monostate{}, Method::oracle};
    const TabloidIndex index(d.degree(), la);
    const std::size_t t = index.size();
    std::vector<std::uint64_t> counts(t);
    std::vector<std::uint8_t> scratch;
    for (std::size_t from = 0; from < t; ++from) {
        std::fill(counts.begin(), counts.end(), 0);
        for (const auto& g : d)
            ++counts[index.rank_of_image(g, from, scratch)];
        // all counts equal means each equals |D|/t
        for (std::size_t to = 0; to < t; ++to) {
            if (counts[to] * t != d.size()) {
                verdict.transitive = false;
                verdict.witness = TabloidWitness{index[from], index[to], counts[to]};
                return verdict;
            }
        }
    }
    return verdict;
}

TransitivityVerdict check_character(const PermSet& d, const Partition& la, const Budgets&)
{
    require_nonempty(d, "check_character");
    require_weight(d, la, "check_character");
    // only the rows above λ are needed, so no full table is built
    const ClassDistribution c = pair_class_distribution(d);
    CharacterEvaluator chi;
    TransitivityVerdict verdict{la, true, ratio(d.size(), la), std::monostate{}, Method::character};
    for (const Partition& mu : up_set(la)) {
        if (mu.length() == 1)
            continue;
        Integer sum = 0;
        for (std::size_t alpha = 0; alpha < c.counts.size(); ++alpha)
            if (c.counts[alpha] != 0)
                sum += Integer(static_cast<unsigned long>(c.counts[alpha])) *
                       Integer(static_cast<long>(chi(mu, c.index[alpha])));
        if (sum != 0) {
            Rational b(hook_degree(mu) * sum, Integer(static_cast<unsigned long>(d.size())));
            b.canonicalize();
            verdict.transitive = false;
            verdict.witness = SpectralWitness{mu, b};
            return verdict;
        }
    }
    return verdict;
}

TransitivityVerdict check_character(const PermSet& d, const Partition& la, const ClassDistribution& c,
                                    const CharacterTable& table)
{
    require_nonempty(d, "check_character");
    require_weight(d, la, "check_character");
    TransitivityVerdict verdict{la, true, ratio(d.size(), la), std::monostate{}, Method::character};
    const Integer size(static_cast<unsigned long>(d.size()));
    for (const Partition& mu : up_set(la)) {
        if (mu.length() == 1)
            continue;
        const std::size_t row = table.index_of(mu);
        const Integer sum = character_sum(c, table, row);
        if (sum != 0) {
            Rational b(table.degrees[row] * sum, size);
            b.canonicalize();
            verdict.transitive = false;
            verdict.witness = SpectralWitness{mu, b};
            return verdict;
        }
    }
    return verdict;
}

TransitivityVerdict check_group_orbit(const PermSet& g, const Partition& la, const Budgets& budgets)
{
    require_nonempty(g, "check_group_orbit");
    require_weight(g, la, "check_group_orbit");
    require_group(g, budgets, "check_group_orbit");

    const Tabloid start = Tabloid::first_of_shape(la);
    const auto labels = start.labels();
    std::unordered_set<std::string> orbit;
    std::string image(labels.size(), '\0');
    for (const auto& x : g) {
        const auto table = x.table();
        for (std::size_t p = 0; p < labels.size(); ++p)
            image[static_cast<std::size_t>(table[p])] = static_cast<char>(labels[p]);
        orbit.insert(image);
    }
    TransitivityVerdict verdict{la, true, ratio(g.size(), la), std::monostate{}, Method::orbit};
    if (Integer(static_cast<unsigned long>(orbit.size())) != multinomial(la)) {
        verdict.transitive = false;
        verdict.witness = OrbitWitness{start, orbit.size()};
    }
    return verdict;
}

Integer orbit_count(const PermSet& g, const Partition& la, const Budgets& budgets)
{
    require_nonempty(g, "orbit_count");
    require_weight(g, la, "orbit_count");
    require_group(g, budgets, "orbit_count");
    std::map<Partition, Integer> fixed_by_type;
    Integer total = 0;
    for (const auto& x : g) {
        Partition type = cycle_type(x);
        auto it = fixed_by_type.find(type);
        if (it == fixed_by_type.end())
            it = fixed_by_type.emplace(type, fixed_tabloid_count(type, la)).first;
        total += it->second;
    }
    const Integer order(static_cast<unsigned long>(g.size()));
    if (total % order != 0)
        throw InternalError("Burnside sum " + total.get_str() + " is not divisible by |G| = " + order.get_str());
    return total / order;
}

Profile profile(const PermSet& d, Method method, const Budgets& budgets)
{
    require_nonempty(d, "profile");
    const int n = d.degree();
    const std::vector<Partition> all = partitions_of(n);

    std::optional<ClassDistribution> classes;
    std::optional<CharacterTable> table;
    if (method == Method::character) {
        classes = pair_class_distribution(d);
        table = table_for(n, budgets);
    }

    Profile result;
    // canonical order is a linear extension of dominance read from the top,
    // so every μ ⊳ λ has been decided before λ
    for (const Partition& la : all) {
        bool forced_false = false;
        for (const auto& prior : result.verdicts)
            if (!prior.transitive && dominates(prior.lambda, la)) {
                forced_false = true;
                break;
            }
        if (forced_false) {
            result.verdicts.push_back({la, false, ratio(d.size(), la), std::monostate{}, method});
            continue;
        }
        switch (method) {
        case Method::oracle:
            result.verdicts.push_back(check_oracle(d, la, budgets));
            break;
        case Method::character:
            result.verdicts.push_back(check_character(d, la, *classes, *table));
            break;
        case Method::orbit:
            result.verdicts.push_back(check_group_orbit(d, la, budgets));
            break;
        }
    }

    for (const auto& v : result.verdicts) {
        if (!v.transitive)
            continue;
        bool minimal = true;
        for (const auto& w : result.verdicts)
            if (w.transitive && w.lambda != v.lambda && dominates(v.lambda, w.lambda)) {
                minimal = false;
                break;
            }
        if (minimal)
            result.minimal.push_back(v.lambda);
    }
    return result;
}

DivisibilityResult divisibility_check(const Integer& size, const Partition& la)
{
    DivisibilityResult result;
    for (const Partition& mu : up_set(la)) {
        const Integer m = multinomial(mu);
        if (size % m != 0) {
            result.possible = false;
            result.failing.emplace_back(mu, m);
        }
    }
    return result;
}

} // namespace ptrans
