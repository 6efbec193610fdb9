#include "ptrans/groups.hpp"

#include "ptrans/errors.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace ptrans {

namespace {

constexpr int infinity_code = -1;

void check_order(const Integer& order, std::size_t cap, const char* name)
{
    if (order > cap)
        throw BudgetError(std::string(name) + ": order " + order.get_str() + " exceeds cap " + std::to_string(cap));
}

PermSet symmetric_or_alternating(int n, bool even_only, std::size_t cap)
{
    if (n < 1)
        throw InputError("group degree must be positive");
    Integer order = factorial(n);
    if (even_only && n >= 2)
        order /= 2;
    check_order(order, cap, even_only ? "alt" : "sym");
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    std::vector<Permutation> elements;
    do {
        Permutation g = Permutation::from_images(images);
        if (!even_only || g.is_even())
            elements.push_back(std::move(g));
    } while (std::next_permutation(images.begin(), images.end()));
    PermSet result(n, std::move(elements));
    result.assume_group();
    return result;
}

PermSet cyclic(int n)
{
    if (n < 1)
        throw InputError("group degree must be positive");
    std::vector<Permutation> elements;
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int shift = 0; shift < n; ++shift) {
        for (int i = 0; i < n; ++i)
            images[static_cast<std::size_t>(i)] = (i + shift) % n + 1;
        elements.push_back(Permutation::from_images(images));
    }
    PermSet result(n, std::move(elements));
    result.assume_group();
    return result;
}

PermSet affine(const GaloisField& f, bool semilinear, std::size_t cap)
{
    const int q = f.order();
    const int twists = semilinear ? f.degree() : 1;
    check_order(Integer(q) * (q - 1) * twists, cap, semilinear ? "agammal1" : "agl1");
    std::vector<Permutation> elements;
    std::vector<int> images(static_cast<std::size_t>(q));
    for (int twist = 0; twist < twists; ++twist) {
        for (int a = 1; a < q; ++a) {
            for (int b = 0; b < q; ++b) {
                for (int x = 0; x < q; ++x) {
                    int y = x;
                    for (int i = 0; i < twist; ++i)
                        y = f.frobenius(y);
                    images[static_cast<std::size_t>(x)] = f.add(f.mul(a, y), b) + 1;
                }
                elements.push_back(Permutation::from_images(images));
            }
        }
    }
    PermSet result(q, std::move(elements));
    result.assume_group();
    return result;
}

// Image of a projective point under x ↦ (ax+b)/(cx+d).
int moebius(const GaloisField& f, int a, int b, int c, int d, int x)
{
    if (x == infinity_code)
        return c == 0 ? infinity_code : f.div(a, c);
    const int den = f.add(f.mul(c, x), d);
    if (den == 0)
        return infinity_code;
    return f.div(f.add(f.mul(a, x), b), den);
}

PermSet projective(const GaloisField& f, GroupKind kind, std::size_t cap)
{
    const int q = f.order();
    const int twists = kind == GroupKind::pgammal2 ? f.degree() : 1;
    Integer order = Integer(q) * (Integer(q) * q - 1) * twists;
    if (kind == GroupKind::psl2 && q % 2 == 1)
        order /= 2;
    check_order(order, cap, to_string(kind));

    const int points = q + 1;
    std::unordered_set<Permutation> seen;
    std::vector<int> images(static_cast<std::size_t>(points));
    auto label = [q](int code) { return code == infinity_code ? q + 1 : code + 1; };
    for (int twist = 0; twist < twists; ++twist)
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b)
                for (int c = 0; c < q; ++c)
                    for (int d = 0; d < q; ++d) {
                        const int det = f.sub(f.mul(a, d), f.mul(b, c));
                        if (det == 0)
                            continue;
                        if (kind == GroupKind::psl2 && !f.is_square(det))
                            continue;
                        for (int x = 0; x <= q; ++x) {
                            int y = x == q ? infinity_code : x;
                            if (y != infinity_code)
                                for (int i = 0; i < twist; ++i)
                                    y = f.frobenius(y);
                            images[static_cast<std::size_t>(x)] = label(moebius(f, a, b, c, d, y));
                        }
                        seen.insert(Permutation::from_images(images));
                    }
    if (Integer(static_cast<unsigned long>(seen.size())) != order)
        throw InternalError(std::string(to_string(kind)) + "(" + std::to_string(q) + ") has " +
                            std::to_string(seen.size()) + " elements, expected " + order.get_str());
    PermSet result(points, std::vector<Permutation>(seen.begin(), seen.end()));
    result.assume_group();
    return result;
}

} // namespace

GroupKind parse_group_kind(std::string_view name)
{
    static const std::pair<std::string_view, GroupKind> names[] = {
        {"sym", GroupKind::sym},       {"alt", GroupKind::alt},   {"cyclic", GroupKind::cyclic},
        {"agl1", GroupKind::agl1},     {"agammal1", GroupKind::agammal1}, {"psl2", GroupKind::psl2},
        {"pgl2", GroupKind::pgl2},     {"pgammal2", GroupKind::pgammal2},
    };
    for (auto [n, k] : names)
        if (n == name)
            return k;
    throw InputError("unknown group kind '" + std::string(name) + "'");
}

const char* to_string(GroupKind kind)
{
    switch (kind) {
    case GroupKind::sym:
        return "sym";
    case GroupKind::alt:
        return "alt";
    case GroupKind::cyclic:
        return "cyclic";
    case GroupKind::agl1:
        return "agl1";
    case GroupKind::agammal1:
        return "agammal1";
    case GroupKind::psl2:
        return "psl2";
    case GroupKind::pgl2:
        return "pgl2";
    case GroupKind::pgammal2:
        return "pgammal2";
    }
    return "?";
}

bool is_field_kind(GroupKind kind)
{
    return kind != GroupKind::sym && kind != GroupKind::alt && kind != GroupKind::cyclic;
}

PermSet classical_group(GroupKind kind, int q_or_n, std::size_t cap)
{
    switch (kind) {
    case GroupKind::sym:
        return symmetric_or_alternating(q_or_n, false, cap);
    case GroupKind::alt:
        return symmetric_or_alternating(q_or_n, true, cap);
    case GroupKind::cyclic:
        check_order(Integer(q_or_n), cap, "cyclic");
        return cyclic(q_or_n);
    default:
        return classical_group(kind, GaloisField::of_order(q_or_n), cap);
    }
}

PermSet classical_group(GroupKind kind, const GaloisField& field, std::size_t cap)
{
    switch (kind) {
    case GroupKind::agl1:
        return affine(field, false, cap);
    case GroupKind::agammal1:
        return affine(field, true, cap);
    case GroupKind::psl2:
    case GroupKind::pgl2:
    case GroupKind::pgammal2:
        return projective(field, kind, cap);
    default:
        throw InputError(std::string(to_string(kind)) + " is not a field group");
    }
}

std::vector<GaloisField::Element> default_half_set(const GaloisField& field)
{
    std::vector<bool> taken(static_cast<std::size_t>(field.order()), false);
    std::vector<GaloisField::Element> s;
    for (int x = 1; x < field.order(); ++x) {
        if (taken[static_cast<std::size_t>(field.neg(x))])
            continue;
        taken[static_cast<std::size_t>(x)] = true;
        s.push_back(x);
    }
    return s;
}

PermSet agl_halved(const GaloisField& field, std::optional<std::vector<GaloisField::Element>> half_set)
{
    const int q = field.order();
    if (q % 2 == 0)
        throw InputError("agl_halved: q = " + std::to_string(q) + " must be odd");
    std::vector<GaloisField::Element> s = half_set ? *half_set : default_half_set(field);
    std::vector<int> hits(static_cast<std::size_t>(q), 0);
    for (int a : s) {
        if (a <= 0 || a >= q)
            throw InputError("agl_halved: " + std::to_string(a) + " is not a nonzero element code of GF(" +
                             std::to_string(q) + ")");
        ++hits[static_cast<std::size_t>(a)];
        ++hits[static_cast<std::size_t>(field.neg(a))];
    }
    for (int x = 1; x < q; ++x)
        if (hits[static_cast<std::size_t>(x)] != 1)
            throw InputError("agl_halved: S must satisfy S ∩ −S = ∅ and S ∪ −S = GF(q)*; element " +
                             field.to_string(x) + " is covered " + std::to_string(hits[static_cast<std::size_t>(x)]) +
                             " times");

    std::vector<Permutation> elements;
    std::vector<int> images(static_cast<std::size_t>(q));
    for (int a : s)
        for (int b = 0; b < q; ++b) {
            for (int x = 0; x < q; ++x)
                images[static_cast<std::size_t>(x)] = field.add(field.mul(a, x), b) + 1;
            elements.push_back(Permutation::from_images(images));
        }
    return PermSet(q, std::move(elements));
}

PermSet agl_halved(int q, std::optional<std::vector<GaloisField::Element>> half_set)
{
    if (q % 2 == 0)
        throw InputError("agl_halved: q = " + std::to_string(q) + " must be odd");
    return agl_halved(GaloisField::of_order(q), std::move(half_set));
}

} // namespace ptrans
