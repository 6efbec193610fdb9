#include "ptrans/field.hpp"

#include "ptrans/errors.hpp"

#include <map>

namespace ptrans {

namespace {

using Poly = std::vector<int>; // low coefficient first

void trim(Poly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

int inverse_mod(int a, int p)
{
    for (int x = 1; x < p; ++x)
        if ((a * x) % p == 1)
            return x;
    return 0;
}

// Remainder of a modulo a monic b over GF(p).
Poly poly_mod(Poly a, const Poly& b, int p)
{
    trim(a);
    const std::size_t db = b.size() - 1;
    const int lead_inv = inverse_mod(b.back(), p);
    while (a.size() >= b.size()) {
        const int factor = (a.back() * lead_inv) % p;
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = ((a[shift + i] - factor * b[i]) % p + p) % p;
        trim(a);
    }
    return a;
}

Poly code_to_poly(int code, int p, int e)
{
    Poly a(static_cast<std::size_t>(e), 0);
    for (int i = 0; i < e; ++i) {
        a[static_cast<std::size_t>(i)] = code % p;
        code /= p;
    }
    return a;
}

int poly_to_code(const Poly& a, int p)
{
    int code = 0;
    for (std::size_t i = a.size(); i-- > 0;)
        code = code * p + a[i];
    return code;
}

} // namespace

bool is_prime(int n)
{
    if (n < 2)
        return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::vector<int> builtin_modulus(int q)
{
    static const std::map<int, std::vector<int>> table = {
        {4, {1, 1, 1}},          // x²+x+1
        {8, {1, 1, 0, 1}},       // x³+x+1
        {9, {1, 0, 1}},          // x²+1
        {16, {1, 1, 0, 0, 1}},   // x⁴+x+1
        {25, {2, 0, 1}},         // x²+2
        {27, {1, 2, 0, 1}},      // x³+2x+1
        {32, {1, 0, 1, 0, 0, 1}}, // x⁵+x²+1
        {49, {1, 0, 1}},         // x²+1
    };
    auto it = table.find(q);
    return it == table.end() ? std::vector<int>{} : it->second;
}

bool is_irreducible(int p, const std::vector<int>& poly)
{
    Poly f = poly;
    trim(f);
    const int deg = static_cast<int>(f.size()) - 1;
    if (deg < 1)
        return false;
    for (int d = 1; 2 * d <= deg; ++d) {
        int count = 1;
        for (int i = 0; i < d; ++i)
            count *= p;
        for (int code = 0; code < count; ++code) {
            Poly g = code_to_poly(code, p, d);
            g.push_back(1);
            if (poly_mod(f, g, p).empty())
                return false;
        }
    }
    return true;
}

GaloisField GaloisField::of_order(int q)
{
    if (is_prime(q))
        return GaloisField(q, {0, 1});
    std::vector<int> modulus = builtin_modulus(q);
    if (modulus.empty())
        throw InputError("unsupported field order " + std::to_string(q) +
                         " (primes and 4, 8, 9, 16, 25, 27, 32, 49 are built in)");
    int p = 2;
    while (q % p != 0)
        ++p;
    return GaloisField(p, std::move(modulus));
}

GaloisField::GaloisField(int p, std::vector<int> modulus) : p_(p), modulus_(std::move(modulus))
{
    if (!is_prime(p))
        throw InputError("field characteristic " + std::to_string(p) + " is not prime");
    for (int c : modulus_)
        if (c < 0 || c >= p)
            throw InputError("modulus coefficients must lie in 0.." + std::to_string(p - 1));
    if (modulus_.size() < 2 || modulus_.back() != 1)
        throw InputError("modulus must be monic of degree at least one");
    if (!is_irreducible(p, modulus_))
        throw InputError("modulus is reducible over GF(" + std::to_string(p) + ")");
    e_ = static_cast<int>(modulus_.size()) - 1;
    q_ = 1;
    for (int i = 0; i < e_; ++i)
        q_ *= p;
    if (q_ > 1024)
        throw InputError("field order " + std::to_string(q_) + " too large for table arithmetic");

    const std::size_t qq = static_cast<std::size_t>(q_) * static_cast<std::size_t>(q_);
    add_.resize(qq);
    mul_.resize(qq);
    neg_.resize(static_cast<std::size_t>(q_));
    inv_.assign(static_cast<std::size_t>(q_), 0);
    for (int a = 0; a < q_; ++a) {
        const Poly pa = code_to_poly(a, p, e_);
        Poly na(pa.size());
        for (std::size_t i = 0; i < pa.size(); ++i)
            na[i] = (p - pa[i]) % p;
        neg_[static_cast<std::size_t>(a)] = poly_to_code(na, p);
        for (int b = 0; b < q_; ++b) {
            const Poly pb = code_to_poly(b, p, e_);
            Poly sum(pa.size());
            for (std::size_t i = 0; i < pa.size(); ++i)
                sum[i] = (pa[i] + pb[i]) % p;
            add_[idx(a, b)] = poly_to_code(sum, p);
            Poly prod(pa.size() + pb.size(), 0);
            for (std::size_t i = 0; i < pa.size(); ++i)
                for (std::size_t j = 0; j < pb.size(); ++j)
                    prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p;
            Poly rem = poly_mod(prod, modulus_, p);
            rem.resize(static_cast<std::size_t>(e_), 0);
            const int c = poly_to_code(rem, p);
            mul_[idx(a, b)] = c;
            if (c == 1)
                inv_[static_cast<std::size_t>(a)] = b;
        }
    }
}

GaloisField::Element GaloisField::inv(Element a) const
{
    if (a == 0)
        throw InputError("division by zero in GF(" + std::to_string(q_) + ")");
    return inv_[static_cast<std::size_t>(a)];
}

GaloisField::Element GaloisField::pow(Element a, long exponent) const
{
    Element result = 1;
    Element base = a;
    while (exponent > 0) {
        if (exponent & 1)
            result = mul(result, base);
        base = mul(base, base);
        exponent >>= 1;
    }
    return result;
}

bool GaloisField::is_square(Element a) const
{
    for (Element x = 0; x < q_; ++x)
        if (mul(x, x) == a)
            return true;
    return false;
}

std::string GaloisField::to_string(Element a) const
{
    if (e_ == 1)
        return std::to_string(a);
    const Poly pa = code_to_poly(a, p_, e_);
    std::string s;
    for (std::size_t i = 0; i < pa.size(); ++i) {
        if (pa[i] == 0)
            continue;
        if (!s.empty())
            s += '+';
        if (i == 0 || pa[i] != 1)
            s += std::to_string(pa[i]);
        if (i >= 1)
            s += "x";
        if (i >= 2)
            s += "^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

} // namespace ptrans
