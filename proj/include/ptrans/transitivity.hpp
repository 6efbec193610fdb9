#pragma once

#include "ptrans/characters.hpp"
#include "ptrans/partitions.hpp"
#include "ptrans/perm.hpp"
#include "ptrans/tabloids.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace ptrans {

/// c_α = #{(g,h) ∈ D×D : g∘h⁻¹ has cycle type α}, indexed canonically.
struct ClassDistribution {
    std::vector<Partition> index;
    std::vector<std::uint64_t> counts;
};

/// Inner distribution a_α or dual distribution b_μ, over canonical partitions.
struct DistributionVector {
    enum class Kind { inner, dual };
    Kind kind = Kind::inner;
    std::vector<Partition> index;
    std::vector<Rational> values;
};

enum class Method { oracle, character, orbit };

const char* to_string(Method m);

/// Tabloid pair connected by a deviant number of elements of D.
struct TabloidWitness {
    Tabloid from;
    Tabloid to;
    std::uint64_t count = 0;
};

/// An irreducible μ ⊵ λ, μ ≠ (n), whose dual coefficient b_μ is non-zero.
struct SpectralWitness {
    Partition mu;
    Rational b;
};

/// The orbit of the first canonical tabloid is too small.
struct OrbitWitness {
    Tabloid start;
    std::uint64_t orbit_size = 0;
};

using Witness = std::variant<std::monostate, TabloidWitness, SpectralWitness, OrbitWitness>;

struct TransitivityVerdict {
    Partition lambda;
    bool transitive = false;
    /// |D| / multinomial(λ); integral whenever the verdict is transitive.
    Rational r;
    Witness witness;
    Method method = Method::character;
};

std::string describe(const Witness& w);

/// Work limits shared by the checkers.
struct Budgets {
    /// Cap on multinomial(λ)²·|D| for the tabloid oracle.
    std::uint64_t oracle_work = 2'000'000'000;
    /// Largest n for which a character table is built.
    int max_table_n = default_character_table_cap;
    /// Cap on |G|² for verifying closure under composition.
    std::size_t group_check_pairs = PermSet::default_group_check_budget;
};

ClassDistribution pair_class_distribution(const PermSet& d);

DistributionVector inner_distribution(const PermSet& d);
DistributionVector inner_distribution(const PermSet& d, const ClassDistribution& c);

/// b_μ = (f_μ/|D|)·Σ_α c_α χ^μ_α. Throws InternalError if a coefficient is
/// negative or the distribution identities fail.
DistributionVector dual_distribution(const PermSet& d, const Budgets& budgets = {});
DistributionVector dual_distribution(const PermSet& d, const ClassDistribution& c, const CharacterTable& table);

/// Counts, for every ordered pair of tabloids (P,Q) of shape λ, the elements
/// of D taking P to Q.
TransitivityVerdict check_oracle(const PermSet& d, const Partition& la, const Budgets& budgets = {});

/// Tests Σ_α c_α χ^μ_α = 0 for every μ ⊵ λ other than (n). Only those rows
/// are evaluated, so the character table cap does not apply.
TransitivityVerdict check_character(const PermSet& d, const Partition& la, const Budgets& budgets = {});
TransitivityVerdict check_character(const PermSet& d, const Partition& la, const ClassDistribution& c,
                                    const CharacterTable& table);

/// For groups: single orbit on tabloids of shape λ.
TransitivityVerdict check_group_orbit(const PermSet& g, const Partition& la, const Budgets& budgets = {});

/// Number of orbits of a group on tabloids of shape λ, by Burnside.
Integer orbit_count(const PermSet& g, const Partition& la, const Budgets& budgets = {});

struct Profile {
    /// Dominance-minimal λ for which D is λ-transitive, canonical order.
    std::vector<Partition> minimal;
    /// One verdict per partition, canonical order; pruned entries carry the
    /// witness-free verdict implied by upward closure.
    std::vector<TransitivityVerdict> verdicts;
};

Profile profile(const PermSet& d, Method method = Method::character, const Budgets& budgets = {});

struct DivisibilityResult {
    bool possible = true;
    /// (μ, multinomial(μ)) for every μ ⊵ λ with multinomial(μ) ∤ size.
    std::vector<std::pair<Partition, Integer>> failing;
};

DivisibilityResult divisibility_check(const Integer& size, const Partition& la);

} // namespace ptrans
