#include "ptrans/rational_matrix.hpp"

#include "ptrans/errors.hpp"

#include <cstdint>

namespace ptrans {

namespace {

struct ScaledMatrix {
    Integer denominator;            // common denominator
    std::vector<Integer> numerators; // entry = numerator / denominator
    Integer max_abs;
};

ScaledMatrix scale(const RationalMatrix& m)
{
    ScaledMatrix s{1, {}, 0};
    for (const Rational& v : m.data())
        mpz_lcm(s.denominator.get_mpz_t(), s.denominator.get_mpz_t(), v.get_den_mpz_t());
    s.numerators.reserve(m.data().size());
    for (const Rational& v : m.data()) {
        Integer num = v.get_num() * (s.denominator / v.get_den());
        if (abs(num) > s.max_abs)
            s.max_abs = abs(num);
        s.numerators.push_back(std::move(num));
    }
    return s;
}

} // namespace

RationalMatrix RationalMatrix::identity(std::size_t n)
{
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::constant(std::size_t rows, std::size_t cols, const Rational& value)
{
    RationalMatrix m(rows, cols);
    for (Rational& v : m.data_)
        v = value;
    return m;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& other)
{
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw InternalError("matrix sum: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] += other.data_[i];
    return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& scalar)
{
    for (Rational& v : data_)
        v *= scalar;
    return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b)
{
    if (a.cols_ != b.rows_)
        throw InternalError("matrix product: shape mismatch");
    const ScaledMatrix sa = scale(a);
    const ScaledMatrix sb = scale(b);
    const std::size_t n = a.rows_;
    const std::size_t inner = a.cols_;
    const std::size_t m = b.cols_;
    RationalMatrix out(n, m);
    const Integer denominator = sa.denominator * sb.denominator;

    const Integer bound = sa.max_abs * sb.max_abs * static_cast<unsigned long>(inner);
    if (bound < Integer("4611686018427387904")) { // 2^62
        std::vector<std::int64_t> x(sa.numerators.size());
        std::vector<std::int64_t> y(sb.numerators.size());
        for (std::size_t i = 0; i < x.size(); ++i)
            x[i] = sa.numerators[i].get_si();
        for (std::size_t i = 0; i < y.size(); ++i)
            y[i] = sb.numerators[i].get_si();
        std::vector<std::int64_t> row(m);
        for (std::size_t r = 0; r < n; ++r) {
            std::fill(row.begin(), row.end(), 0);
            for (std::size_t k = 0; k < inner; ++k) {
                const std::int64_t f = x[r * inner + k];
                if (f == 0)
                    continue;
                const std::int64_t* yrow = &y[k * m];
                for (std::size_t c = 0; c < m; ++c)
                    row[c] += f * yrow[c];
            }
            for (std::size_t c = 0; c < m; ++c) {
                Rational v(Integer(static_cast<long>(row[c])), denominator);
                v.canonicalize();
                out(r, c) = std::move(v);
            }
        }
        return out;
    }

    std::vector<Integer> row(m);
    for (std::size_t r = 0; r < n; ++r) {
        for (auto& v : row)
            v = 0;
        for (std::size_t k = 0; k < inner; ++k) {
            const Integer& f = sa.numerators[r * inner + k];
            if (f == 0)
                continue;
            for (std::size_t c = 0; c < m; ++c)
                row[c] += f * sb.numerators[k * m + c];
        }
        for (std::size_t c = 0; c < m; ++c) {
            Rational v(row[c], denominator);
            v.canonicalize();
            out(r, c) = std::move(v);
        }
    }
    return out;
}

RationalMatrix RationalMatrix::hadamard(const RationalMatrix& other) const
{
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw InternalError("entrywise product: shape mismatch");
    RationalMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = data_[i] * other.data_[i];
    return out;
}

Rational RationalMatrix::trace() const
{
    Rational t = 0;
    for (std::size_t i = 0; i < rows_ && i < cols_; ++i)
        t += (*this)(i, i);
    return t;
}

Rational RationalMatrix::trace_of_product(const RationalMatrix& a, const RationalMatrix& b)
{
    if (a.cols_ != b.rows_ || a.rows_ != b.cols_)
        throw InternalError("trace of product: shape mismatch");
    Rational t = 0;
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j)
            t += a(i, j) * b(j, i);
    return t;
}

bool RationalMatrix::is_symmetric() const
{
    if (rows_ != cols_)
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i))
                return false;
    return true;
}

bool RationalMatrix::is_zero() const
{
    for (const Rational& v : data_)
        if (v != 0)
            return false;
    return true;
}

std::size_t rank_of(std::vector<std::vector<Rational>> rows)
{
    if (rows.empty())
        return 0;
    const std::size_t cols = rows.front().size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c] == 0)
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[pivot], rows[rank]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][c] == 0)
                continue;
            const Rational factor = rows[r][c] / rows[rank][c];
            for (std::size_t k = c; k < cols; ++k)
                rows[r][k] -= factor * rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

} // namespace ptrans
