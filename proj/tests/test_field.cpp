#include "ptrans/errors.hpp"
#include "ptrans/field.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace ptrans;

namespace {

// schoolbook polynomial product reduced by the monic modulus, on code digits
int slow_mul(int p, const std::vector<int>& modulus, int a, int b)
{
    const int e = static_cast<int>(modulus.size()) - 1;
    std::vector<int> x(static_cast<std::size_t>(e)), y(static_cast<std::size_t>(e));
    for (int i = 0; i < e; ++i) {
        x[static_cast<std::size_t>(i)] = a % p;
        a /= p;
        y[static_cast<std::size_t>(i)] = b % p;
        b /= p;
    }
    std::vector<int> prod(static_cast<std::size_t>(2 * e), 0);
    for (int i = 0; i < e; ++i)
        for (int j = 0; j < e; ++j)
            prod[static_cast<std::size_t>(i + j)] =
                (prod[static_cast<std::size_t>(i + j)] + x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)]) % p;
    for (int d = 2 * e - 1; d >= e; --d) {
        const int c = prod[static_cast<std::size_t>(d)];
        if (c == 0)
            continue;
        for (int i = 0; i <= e; ++i) {
            auto& slot = prod[static_cast<std::size_t>(d - e + i)];
            slot = ((slot - c * modulus[static_cast<std::size_t>(i)]) % p + p) % p;
        }
    }
    int code = 0;
    for (int i = e - 1; i >= 0; --i)
        code = code * p + prod[static_cast<std::size_t>(i)];
    return code;
}

} // namespace

TEST_CASE("supported orders")
{
    for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49}) {
        const GaloisField f = GaloisField::of_order(q);
        CHECK(f.order() == q);
        int power = 1;
        for (int i = 0; i < f.degree(); ++i)
            power *= f.characteristic();
        CHECK(power == q);
    }
    CHECK(GaloisField::of_order(8).modulus() == std::vector<int>{1, 1, 0, 1});
    CHECK(GaloisField::of_order(9).modulus() == std::vector<int>{1, 0, 1});
    CHECK(GaloisField::of_order(32).modulus() == std::vector<int>{1, 0, 1, 0, 0, 1});
    CHECK_THROWS_AS(GaloisField::of_order(6), InputError);
    CHECK_THROWS_AS(GaloisField::of_order(1), InputError);
    CHECK_THROWS_AS(GaloisField::of_order(81), InputError);
    CHECK_THROWS_AS(GaloisField(2, {1, 0, 1}), InputError); // x²+1 = (x+1)² over GF(2)
    CHECK_THROWS_AS(GaloisField(4, {1, 1, 1}), InputError);
    CHECK(is_irreducible(2, {1, 1, 0, 0, 1}));
    CHECK_FALSE(is_irreducible(3, {2, 0, 1})); // x²−1
    CHECK(is_prime(31));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
}

TEST_CASE("field axioms and table arithmetic")
{
    auto& rng = testing::rng();
    for (int q : {4, 5, 7, 8, 9, 16, 25, 27, 32, 49}) {
        const GaloisField f = GaloisField::of_order(q);
        for (int a = 0; a < q; ++a) {
            CHECK(f.add(a, 0) == a);
            CHECK(f.mul(a, 1) == a);
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a != 0) {
                CHECK(f.mul(a, f.inv(a)) == 1);
                CHECK(f.pow(a, q - 1) == 1);
            }
            CHECK(f.pow(a, q) == a);
        }
        CHECK_THROWS(f.inv(0));
        for (int trial = 0; trial < 300; ++trial) {
            const int a = static_cast<int>(rng() % static_cast<unsigned>(q));
            const int b = static_cast<int>(rng() % static_cast<unsigned>(q));
            const int c = static_cast<int>(rng() % static_cast<unsigned>(q));
            CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
            CHECK(f.mul(a, b) == f.mul(b, a));
            CHECK(f.mul(a, b) == slow_mul(f.characteristic(), f.modulus(), a, b));
            CHECK(f.sub(f.add(a, b), b) == a);
            // Frobenius is additive
            CHECK(f.frobenius(f.add(a, b)) == f.add(f.frobenius(a), f.frobenius(b)));
        }
        // exactly half the nonzero elements are squares in odd characteristic
        int squares = 0;
        for (int a = 1; a < q; ++a)
            squares += f.is_square(a);
        CHECK(squares == (q % 2 ? (q - 1) / 2 : q - 1));
    }
}

TEST_CASE("element codes")
{
    const GaloisField f = GaloisField::of_order(9);
    // code 3 is x, and x² = −1 = 2
    CHECK(f.mul(3, 3) == 2);
    CHECK(f.to_string(0) == "0");
    CHECK(f.to_string(5) == "2+x");
    const GaloisField f8 = GaloisField::of_order(8);
    // x³ = x + 1
    CHECK(f8.mul(f8.mul(2, 2), 2) == 3);
}
