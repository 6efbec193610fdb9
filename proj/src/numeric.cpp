#include "ptrans/numeric.hpp"

#include "ptrans/errors.hpp"

namespace ptrans {

Integer factorial(int n)
{
    Integer result;
    mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
    return result;
}

Integer binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    Integer result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return result;
}

std::string to_string(const Integer& z)
{
    return z.get_str();
}

std::string to_string(const Rational& q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer to_integer(const Rational& q)
{
    if (q.get_den() != 1)
        throw InternalError("expected an integer, got " + to_string(q));
    return q.get_num();
}

} // namespace ptrans
