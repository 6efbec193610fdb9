#pragma once

#include <string>
#include <vector>

namespace ptrans {

/// GF(p^e) with table-driven arithmetic.
///
/// Elements are integer codes 0..q−1: the residue c₀ + c₁x + … + c_{e−1}x^{e−1}
/// has code c₀ + c₁p + … + c_{e−1}p^{e−1}. Codes are the canonical element order,
/// so 0 and 1 are the field's zero and one, and a prime field is just Z/p.
class GaloisField {
public:
    using Element = int;

    /// GF(q) for a prime q, or a prime power with a built-in modulus
    /// (4, 8, 9, 16, 25, 27, 32, 49). Throws InputError otherwise.
    static GaloisField of_order(int q);

    /// GF(p^e) from a monic modulus given low coefficient first
    /// (size e + 1). Throws InputError unless p is prime and the modulus is
    /// irreducible over GF(p).
    GaloisField(int p, std::vector<int> modulus);

    int order() const { return q_; }
    int characteristic() const { return p_; }
    int degree() const { return e_; }
    const std::vector<int>& modulus() const { return modulus_; }

    Element add(Element a, Element b) const { return add_[idx(a, b)]; }
    Element sub(Element a, Element b) const { return add_[idx(a, neg_[static_cast<std::size_t>(b)])]; }
    Element neg(Element a) const { return neg_[static_cast<std::size_t>(a)]; }
    Element mul(Element a, Element b) const { return mul_[idx(a, b)]; }
    /// Throws InputError for zero.
    Element inv(Element a) const;
    Element div(Element a, Element b) const { return mul(a, inv(b)); }
    Element pow(Element a, long exponent) const;
    /// x ↦ x^p.
    Element frobenius(Element a) const { return pow(a, p_); }

    bool is_square(Element a) const;

    /// "2+x^2" style rendering of an element.
    std::string to_string(Element a) const;

private:
    std::size_t idx(Element a, Element b) const
    {
        return static_cast<std::size_t>(a) * static_cast<std::size_t>(q_) + static_cast<std::size_t>(b);
    }

    int p_ = 0;
    int e_ = 0;
    int q_ = 0;
    std::vector<int> modulus_;
    std::vector<Element> add_;
    std::vector<Element> mul_;
    std::vector<Element> neg_;
    std::vector<Element> inv_;
};

bool is_prime(int n);

/// Built-in monic irreducible modulus for q = p^e, low coefficient first;
/// empty when q is prime or unsupported.
std::vector<int> builtin_modulus(int q);

/// Irreducibility over GF(p) by trial division by all monic polynomials of
/// degree at most half.
bool is_irreducible(int p, const std::vector<int>& poly);

} // namespace ptrans
