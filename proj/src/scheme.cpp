#include "ptrans/scheme.hpp"

#include "ptrans/errors.hpp"
#include "ptrans/tabloids.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ptrans {

namespace {

std::vector<Permutation> symmetric_group_elements(int n)
{
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::from_images(images));
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

void require_weight(int n, const Partition& p, const char* op)
{
    if (p.weight() != n)
        throw InputError(std::string(op) + ": partition " + p.to_string() + " does not have weight " +
                         std::to_string(n));
}

int check_matrix_cap(int n, int max_n)
{
    if (n < 1)
        throw InputError("scheme: n must be positive");
    if (n > max_n)
        throw BudgetError("scheme: n = " + std::to_string(n) + " exceeds the matrix cap " + std::to_string(max_n));
    return n;
}

} // namespace

SymmetricGroupScheme::SymmetricGroupScheme(int n, int max_n)
    : n_(check_matrix_cap(n, max_n)), elements_(symmetric_group_elements(n)), index_(n), table_(character_table(n))
{
    const std::size_t order = elements_.size();
    std::map<std::vector<int>, std::uint8_t> by_parts;
    for (std::size_t i = 0; i < index_.size(); ++i)
        by_parts.emplace(index_[i].parts(), static_cast<std::uint8_t>(i));
    classes_.resize(order * order);
    std::vector<int> scratch;
    for (std::size_t a = 0; a < order; ++a)
        for (std::size_t b = 0; b < order; ++b)
            classes_[a * order + b] = by_parts.at(quotient_cycle_type(elements_[a], elements_[b], scratch).parts());
    idempotents_.resize(index_.size());
}

SchemeMatrix SymmetricGroupScheme::class_matrix(const Partition& alpha) const
{
    require_weight(n_, alpha, "class_matrix");
    const std::size_t target = index_.index_of(alpha);
    SchemeMatrix m{n_, SchemeTag::class_matrix, alpha, RationalMatrix(order(), order())};
    for (std::size_t a = 0; a < order(); ++a)
        for (std::size_t b = 0; b < order(); ++b)
            if (class_of(a, b) == target)
                m.entries(a, b) = 1;
    return m;
}

const SchemeMatrix& SymmetricGroupScheme::idempotent(const Partition& mu) const
{
    require_weight(n_, mu, "idempotent");
    const std::size_t row = index_.index_of(mu);
    auto& slot = idempotents_[row];
    if (slot)
        return *slot;

    std::vector<Rational> per_class(index_.size());
    const Integer n_fact = factorial(n_);
    for (std::size_t alpha = 0; alpha < index_.size(); ++alpha) {
        Rational v(table_.degrees[row] * table_.values[row][alpha], n_fact);
        v.canonicalize();
        per_class[alpha] = v;
    }
    SchemeMatrix e{n_, SchemeTag::idempotent, mu, RationalMatrix(order(), order())};
    for (std::size_t a = 0; a < order(); ++a)
        for (std::size_t b = 0; b < order(); ++b)
            e.entries(a, b) = per_class[class_of(a, b)];

    if (!(e.entries * e.entries == e.entries))
        throw InternalError("E[" + mu.to_string() + "] is not idempotent");
    const Integer f = table_.degrees[row];
    if (e.entries.trace() != f * f)
        throw InternalError("trace of E[" + mu.to_string() + "] differs from f²");
    slot = std::move(e);
    return *slot;
}

void SymmetricGroupScheme::verify_idempotents() const
{
    RationalMatrix sum(order(), order());
    for (std::size_t i = 0; i < index_.size(); ++i) {
        const SchemeMatrix& ei = idempotent(index_[i]);
        sum += ei.entries;
        for (std::size_t j = i + 1; j < index_.size(); ++j)
            if (!(ei.entries * idempotent(index_[j]).entries).is_zero())
                throw InternalError("E[" + index_[i].to_string() + "]E[" + index_[j].to_string() + "] is not zero");
    }
    if (!(sum == RationalMatrix::identity(order())))
        throw InternalError("idempotents do not sum to the identity");
    Rational inv(1, factorial(n_));
    inv.canonicalize();
    if (!(idempotent(index_[0]).entries == RationalMatrix::constant(order(), order(), inv)))
        throw InternalError("E[(n)] differs from J/n!");
}

SchemeMatrix SymmetricGroupScheme::split_matrix(const Partition& la) const
{
    require_weight(n_, la, "split_matrix");
    std::vector<Integer> per_class(index_.size());
    for (std::size_t alpha = 0; alpha < index_.size(); ++alpha)
        per_class[alpha] = split_entry(index_[alpha], la);
    SchemeMatrix c{n_, SchemeTag::split, la, RationalMatrix(order(), order())};
    for (std::size_t a = 0; a < order(); ++a)
        for (std::size_t b = 0; b < order(); ++b)
            c.entries(a, b) = per_class[class_of(a, b)];
    if (!class_coordinates(c.entries))
        throw InternalError("C[" + la.to_string() + "] is not in the span of the class matrices");
    return c;
}

std::optional<std::vector<Rational>> SymmetricGroupScheme::class_coordinates(const RationalMatrix& m) const
{
    if (m.rows() != order() || m.cols() != order())
        return std::nullopt;
    std::vector<std::optional<Rational>> seen(index_.size());
    for (std::size_t a = 0; a < order(); ++a)
        for (std::size_t b = 0; b < order(); ++b) {
            auto& slot = seen[class_of(a, b)];
            if (!slot)
                slot = m(a, b);
            else if (*slot != m(a, b))
                return std::nullopt;
        }
    std::vector<Rational> out;
    for (auto& v : seen)
        out.push_back(v.value_or(0));
    return out;
}

std::vector<Rational> SymmetricGroupScheme::krein(const Partition& la, const Partition& mu) const
{
    require_weight(n_, la, "krein");
    require_weight(n_, mu, "krein");
    const RationalMatrix product = idempotent(la).entries.hadamard(idempotent(mu).entries);
    const Integer n_fact = factorial(n_);
    std::vector<Rational> q(index_.size());
    RationalMatrix rebuilt(order(), order());
    for (std::size_t nu = 0; nu < index_.size(); ++nu) {
        const SchemeMatrix& e = idempotent(index_[nu]);
        const Integer f = table_.degrees[nu];
        q[nu] = n_fact * RationalMatrix::trace_of_product(product, e.entries) / (f * f);
        q[nu].canonicalize();
        if (q[nu] < 0)
            throw InternalError("negative Krein parameter q^" + index_[nu].to_string() + "_{" + la.to_string() +
                                "," + mu.to_string() + "} = " + to_string(q[nu]));
        if (q[nu] != 0)
            rebuilt += e.entries * Rational(q[nu] / n_fact);
    }
    if (!(rebuilt == product))
        throw InternalError("Krein expansion does not reconstitute E[" + la.to_string() + "]∘E[" + mu.to_string() +
                            "]");
    return q;
}

SchemeMatrix class_matrix(int n, const Partition& alpha, int max_n)
{
    return SymmetricGroupScheme(n, max_n).class_matrix(alpha);
}

SchemeMatrix idempotent(int n, const Partition& mu, int max_n)
{
    return SymmetricGroupScheme(n, max_n).idempotent(mu);
}

SchemeMatrix split_matrix(int n, const Partition& la, int max_n)
{
    return SymmetricGroupScheme(n, max_n).split_matrix(la);
}

std::vector<Rational> krein(int n, const Partition& la, const Partition& mu, int max_n)
{
    return SymmetricGroupScheme(n, max_n).krein(la, mu);
}

Integer split_entry(const Partition& alpha, const Partition& la)
{
    Integer ordered = fixed_tabloid_count(alpha, la);
    for (auto [part, mult] : la.multiplicities())
        ordered /= factorial(mult);
    return ordered;
}

std::vector<Integer> coeffs_m(int n, const Partition& la)
{
    require_weight(n, la, "coeffs_m");
    std::vector<Integer> m;
    for (const Partition& alpha : partitions_of(n))
        m.push_back(split_entry(alpha, la));
    return m;
}

std::vector<Rational> coeffs_n(int n, const Partition& la)
{
    require_weight(n, la, "coeffs_n");
    const CharacterTable table = character_table(n);
    const std::vector<Integer> m = coeffs_m(n, la);
    std::vector<Rational> out;
    for (std::size_t mu = 0; mu < table.size(); ++mu) {
        Integer sum = 0;
        for (std::size_t alpha = 0; alpha < table.size(); ++alpha)
            sum += m[alpha] * table.class_sizes[alpha] * table.values[mu][alpha];
        Rational v(sum, table.degrees[mu]);
        v.canonicalize();
        out.push_back(v);
    }
    return out;
}

} // namespace ptrans
