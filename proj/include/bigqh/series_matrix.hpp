#ifndef BIGQH_SERIES_MATRIX_HPP
#define BIGQH_SERIES_MATRIX_HPP

#include <bigqh/matrix.hpp>
#include <bigqh/qpoly.hpp>
#include <bigqh/tseries.hpp>

#include <stdexcept>
#include <string>

namespace bigqh
{

using QMatrix = Matrix<QPoly>;
using SeriesMatrix = Matrix<TSeries>;
using QVector = std::vector<QPoly>;
using SeriesVector = std::vector<TSeries>;

class NotInvertible : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// Minimum truncation order over all entries (kExactOrder for an exact matrix).
std::size_t matrix_order(const SeriesMatrix &m);
std::size_t vector_order(const SeriesVector &v);

SeriesMatrix truncated(const SeriesMatrix &m, std::size_t order);
// Matrix of t^k coefficients; k must lie below the matrix order.
QMatrix t_coefficient(const SeriesMatrix &m, std::size_t k);
// Embeds a q-matrix as constant series known modulo t^order.
SeriesMatrix lift(const QMatrix &m, std::size_t order = kExactOrder);
SeriesVector lift(const QVector &v, std::size_t order = kExactOrder);

// Entrywise comparison of coefficients below t^n.
bool equal_mod(const SeriesMatrix &a, const SeriesMatrix &b, std::size_t n);

QMatrix specialize_q(const QMatrix &m, const Rational &q);
SeriesMatrix specialize_q(const SeriesMatrix &m, const Rational &q);
RationalMatrix to_rational(const QMatrix &m); // requires q-free entries

// Inverse over Q[q, 1/q]: exists iff the determinant is a nonzero monomial.
// Throws NotInvertible otherwise.
QMatrix inverse(const QMatrix &m);

// Inverse over the truncated series ring, m * result = I modulo t^order(m).
// The t^0 part must be invertible over Q[q, 1/q] ("not invertible at t=0"
// otherwise). An exact matrix must be constant in t.
SeriesMatrix mat_inverse(const SeriesMatrix &m);

std::string to_string(const QMatrix &m);

} // namespace bigqh

#endif
