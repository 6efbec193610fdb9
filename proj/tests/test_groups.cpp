#include "ptrans/errors.hpp"
#include "ptrans/groups.hpp"
#include "ptrans/transitivity.hpp"
#include "support.hpp"

#include <doctest.h>

#include <numeric>

using namespace ptrans;

namespace {

Partition P(std::vector<int> parts)
{
    return Partition(std::move(parts));
}

} // namespace

TEST_CASE("group kinds")
{
    CHECK(parse_group_kind("psl2") == GroupKind::psl2);
    CHECK(std::string(to_string(GroupKind::agammal1)) == "agammal1");
    CHECK_THROWS_AS(parse_group_kind("gl3"), InputError);
    CHECK(is_field_kind(GroupKind::pgl2));
    CHECK_FALSE(is_field_kind(GroupKind::alt));
}

TEST_CASE("symmetric, alternating and cyclic groups")
{
    for (int n = 1; n <= 6; ++n) {
        const PermSet s = classical_group(GroupKind::sym, n);
        CHECK(s.size() == factorial(n));
        const PermSet a = classical_group(GroupKind::alt, n);
        CHECK(a.size() == (n == 1 ? Integer(1) : Integer(factorial(n) / 2)));
        for (const auto& g : a)
            CHECK(g.is_even());
        CHECK(classical_group(GroupKind::cyclic, n).size() == static_cast<std::size_t>(n));
        CHECK(a.is_group());
    }
    CHECK_THROWS_AS(classical_group(GroupKind::sym, 11, 1000), BudgetError);
}

TEST_CASE("field groups have the advertised orders")
{
    for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 16, 25, 27}) {
        const GaloisField f = GaloisField::of_order(q);
        const std::size_t uq = static_cast<std::size_t>(q);
        const std::size_t e = static_cast<std::size_t>(f.degree());
        const std::size_t pgl = (uq + 1) * uq * (uq - 1);
        const PermSet agl = classical_group(GroupKind::agl1, q);
        CHECK(agl.degree() == q);
        CHECK(agl.size() == uq * (uq - 1));
        CHECK(classical_group(GroupKind::agammal1, q).size() == uq * (uq - 1) * e);
        const PermSet pgl2 = classical_group(GroupKind::pgl2, q);
        CHECK(pgl2.degree() == q + 1);
        CHECK(pgl2.size() == pgl);
        CHECK(classical_group(GroupKind::psl2, q).size() == (q % 2 ? pgl / 2 : pgl));
        CHECK(classical_group(GroupKind::pgammal2, q).size() == pgl * e);
        if (q <= 9) {
            CHECK(agl.is_group());
            CHECK(pgl2.is_group());
            CHECK(classical_group(GroupKind::psl2, q).is_group());
            CHECK(classical_group(GroupKind::pgammal2, q).is_group());
            CHECK(classical_group(GroupKind::agammal1, q).is_group());
        }
    }
    CHECK_THROWS_AS(classical_group(GroupKind::pgl2, 6), InputError);
    CHECK_THROWS_AS(classical_group(GroupKind::pgl2, 9, 100), BudgetError);
}

TEST_CASE("projective groups are sharply 3-transitive where expected")
{
    for (int q : {3, 4, 5, 7, 8}) {
        const PermSet g = classical_group(GroupKind::pgl2, q);
        std::vector<int> parts{q - 2, 1, 1, 1};
        CHECK(check_group_orbit(g, Partition::from_unsorted(parts)).transitive);
        CHECK(g.size() == multinomial(Partition::from_unsorted(parts)));
    }
}

TEST_CASE("halved affine line")
{
    const GaloisField f5 = GaloisField::of_order(5);
    CHECK(default_half_set(f5) == std::vector<int>{1, 2});
    const PermSet d = agl_halved(5, std::vector<int>{1, 2});
    CHECK(d.size() == 10);
    CHECK(d == agl_halved(5));
    CHECK(check_character(d, P({3, 2})).transitive);
    CHECK_FALSE(check_oracle(d, P({3, 1, 1})).transitive);
    CHECK(agl_halved(5, std::vector<int>{1, 3}).size() == 10);
    CHECK_THROWS_AS(agl_halved(5, std::vector<int>{1, 4}), InputError);
    CHECK_THROWS_AS(agl_halved(5, std::vector<int>{1}), InputError);
    CHECK_THROWS_AS(agl_halved(5, std::vector<int>{0, 1}), InputError);
    CHECK_THROWS_AS(agl_halved(8), InputError);
    for (int q : {3, 7, 9, 11}) {
        const PermSet h = agl_halved(q);
        CHECK(h.size() == static_cast<std::size_t>(q * (q - 1) / 2));
        const GaloisField f = GaloisField::of_order(q);
        const auto s = default_half_set(f);
        for (int a : s)
            CHECK(std::find(s.begin(), s.end(), f.neg(a)) == s.end());
    }
}
