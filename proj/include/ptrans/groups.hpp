#pragma once

#include "ptrans/field.hpp"
#include "ptrans/perm.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace ptrans {

enum class GroupKind { sym, alt, cyclic, agl1, agammal1, psl2, pgl2, pgammal2 };

/// Parses "sym", "alt", "cyclic", "agl1", "agammal1", "psl2", "pgl2", "pgammal2".
GroupKind parse_group_kind(std::string_view name);
const char* to_string(GroupKind kind);

/// True for the kinds parameterized by a field order q rather than a degree n.
bool is_field_kind(GroupKind kind);

constexpr std::size_t default_group_cap = 2'000'000;

/// Explicit element set of a classical permutation group.
///
/// sym/alt/cyclic act on {1..n}. The affine kinds act on GF(q), point
/// label = element code + 1. The projective kinds act on GF(q) ∪ {∞}
/// with ∞ labeled q+1. Throws BudgetError when the order exceeds `cap`.
PermSet classical_group(GroupKind kind, int q_or_n, std::size_t cap = default_group_cap);
PermSet classical_group(GroupKind kind, const GaloisField& field, std::size_t cap = default_group_cap);

/// Default half-set: scan nonzero codes upward, keeping x unless −x was
/// already kept.
std::vector<GaloisField::Element> default_half_set(const GaloisField& field);

/// {x ↦ ax+b : a ∈ S, b ∈ GF(q)} for a half-set S (S ∩ −S = ∅,
/// S ∪ −S = GF(q)*). Throws InputError for even q or an invalid S.
PermSet agl_halved(const GaloisField& field, std::optional<std::vector<GaloisField::Element>> half_set = {});
PermSet agl_halved(int q, std::optional<std::vector<GaloisField::Element>> half_set = {});

} // namespace ptrans
