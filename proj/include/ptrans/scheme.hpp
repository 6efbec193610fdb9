#pragma once

#include "ptrans/characters.hpp"
#include "ptrans/partitions.hpp"
#include "ptrans/perm.hpp"
#include "ptrans/rational_matrix.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace ptrans {

enum class SchemeTag { class_matrix, idempotent, split };

/// An n!×n! matrix of the association scheme of S_n. Rows and columns are
/// indexed by S_n in lexicographic order of image sequences.
struct SchemeMatrix {
    int n = 0;
    SchemeTag tag = SchemeTag::class_matrix;
    Partition label;
    RationalMatrix entries;
};

/// Default largest n for which n!×n! matrices are materialized.
constexpr int default_matrix_cap = 5;

/// Dense model of the conjugacy-class scheme of S_n: the class matrices
/// A_α, the primitive idempotents E_μ, the split basis C_λ and the Krein
/// parameters. Idempotents are built once and verified on first use.
class SymmetricGroupScheme {
public:
    /// Throws BudgetError when n exceeds `max_n`.
    explicit SymmetricGroupScheme(int n, int max_n = default_matrix_cap);

    int n() const { return n_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<Permutation>& elements() const { return elements_; }
    const PartitionIndex& partitions() const { return index_; }
    const CharacterTable& table() const { return table_; }

    /// Canonical index of the cycle type of a∘b⁻¹ for elements a, b.
    std::size_t class_of(std::size_t a, std::size_t b) const { return classes_[a * order() + b]; }

    SchemeMatrix class_matrix(const Partition& alpha) const;

    /// E_μ = (f_μ/n!) Σ_α χ^μ_α A_α. Throws InternalError unless E_μ² = E_μ
    /// and trace E_μ = f_μ².
    const SchemeMatrix& idempotent(const Partition& mu) const;

    /// Throws InternalError unless E_μE_ν = 0 for μ ≠ ν, Σ_μ E_μ = I and
    /// E_(n) = J/n!.
    void verify_idempotents() const;

    /// C_λ = Y_λY_λᵀ, entry (a,b) = number of unordered set partitions of
    /// shape λ whose blocks are unions of cycles of a∘b⁻¹.
    SchemeMatrix split_matrix(const Partition& la) const;

    /// Per-class values when the matrix is constant on the positions of every
    /// class (i.e. lies in the span of the A_α); nullopt otherwise.
    std::optional<std::vector<Rational>> class_coordinates(const RationalMatrix& m) const;

    /// q^ν_{λμ} for every ν, canonical order, from
    /// E_λ∘E_μ = (1/n!) Σ_ν q^ν_{λμ} E_ν. Throws InternalError if the
    /// expansion does not reconstitute the product or a parameter is negative.
    std::vector<Rational> krein(const Partition& la, const Partition& mu) const;

private:
    int n_;
    std::vector<Permutation> elements_;
    PartitionIndex index_;
    CharacterTable table_;
    std::vector<std::uint8_t> classes_;
    mutable std::vector<std::optional<SchemeMatrix>> idempotents_;
};

SchemeMatrix class_matrix(int n, const Partition& alpha, int max_n = default_matrix_cap);
SchemeMatrix idempotent(int n, const Partition& mu, int max_n = default_matrix_cap);
SchemeMatrix split_matrix(int n, const Partition& la, int max_n = default_matrix_cap);
std::vector<Rational> krein(int n, const Partition& la, const Partition& mu, int max_n = default_matrix_cap);

/// Entry of C_λ at a position of class α: fixed_tabloid_count / ∏ (multiplicity of each part)!.
Integer split_entry(const Partition& alpha, const Partition& la);

/// m_{λ,α} with C_λ = Σ_α m_{λ,α} A_α, canonical order over α.
std::vector<Integer> coeffs_m(int n, const Partition& la);

/// n_{λ,μ} with C_λ = Σ_μ n_{λ,μ} E_μ, from the eigenvalue of A_α on V_μ
/// (|C_α| χ^μ_α / f_μ); canonical order over μ.
std::vector<Rational> coeffs_n(int n, const Partition& la);

} // namespace ptrans
