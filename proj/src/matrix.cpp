#include <bigqh/matrix.hpp>

namespace bigqh
{

namespace
{

// Reduced row echelon form in place; returns the rank.
std::size_t row_reduce(RationalMatrix &a)
{
    std::size_t rank = 0;
    for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < a.rows() && sgn(a(pivot, col)) == 0) {
            ++pivot;
        }
        if (pivot == a.rows()) {
            continue;
        }
        for (std::size_t j = 0; j < a.cols(); ++j) {
            std::swap(a(pivot, j), a(rank, j));
        }
        const Rational inv = Rational(1) / a(rank, col);
        for (std::size_t j = 0; j < a.cols(); ++j) {
            a(rank, j) *= inv;
        }
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == rank || sgn(a(i, col)) == 0) {
                continue;
            }
            const Rational f = a(i, col);
            for (std::size_t j = 0; j < a.cols(); ++j) {
                a(i, j) -= f * a(rank, j);
            }
        }
        ++rank;
    }
    return rank;
}

} // namespace

std::size_t rank(const RationalMatrix &m)
{
    RationalMatrix a = m;
    return row_reduce(a);
}

RationalMatrix inverse(const RationalMatrix &m)
{
    if (!m.is_square()) {
        throw std::invalid_argument("inverse of a non-square " + m.shape() + " matrix");
    }
    const std::size_t n = m.rows();
    RationalMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            aug(i, j) = m(i, j);
        }
        aug(i, n + i) = 1;
    }
    row_reduce(aug);
    for (std::size_t i = 0; i < n; ++i) {
        if (aug(i, i) != 1) {
            throw std::domain_error("rational matrix is singular");
        }
    }
    RationalMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            inv(i, j) = aug(i, n + j);
        }
    }
    return inv;
}

} // namespace bigqh
