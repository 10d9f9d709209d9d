#include <bigqh/series_matrix.hpp>

#include <algorithm>

namespace bigqh
{

std::size_t matrix_order(const SeriesMatrix &m)
{
    std::size_t order = kExactOrder;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            order = std::min(order, m(i, j).order());
        }
    }
    return order;
}

std::size_t vector_order(const SeriesVector &v)
{
    std::size_t order = kExactOrder;
    for (const auto &x : v) {
        order = std::min(order, x.order());
    }
    return order;
}

SeriesMatrix truncated(const SeriesMatrix &m, std::size_t order)
{
    return m.map([order](const TSeries &x) { return x.truncated(order); });
}

QMatrix t_coefficient(const SeriesMatrix &m, std::size_t k)
{
    return m.map([k](const TSeries &x) { return x.coeff(k); });
}

SeriesMatrix lift(const QMatrix &m, std::size_t order)
{
    return m.map([order](const QPoly &x) { return TSeries(std::vector<QPoly>{x}, order); });
}

SeriesVector lift(const QVector &v, std::size_t order)
{
    SeriesVector out;
    out.reserve(v.size());
    for (const auto &x : v) {
        out.emplace_back(std::vector<QPoly>{x}, order);
    }
    return out;
}

bool equal_mod(const SeriesMatrix &a, const SeriesMatrix &b, std::size_t n)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        return false;
    }
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (!a(i, j).equal_mod(b(i, j), n)) {
                return false;
            }
        }
    }
    return true;
}

QMatrix specialize_q(const QMatrix &m, const Rational &q)
{
    return m.map([&q](const QPoly &x) { return QPoly(x.evaluate(q)); });
}

SeriesMatrix specialize_q(const SeriesMatrix &m, const Rational &q)
{
    return m.map([&q](const TSeries &x) { return x.specialize_q(q); });
}

RationalMatrix to_rational(const QMatrix &m)
{
    return m.map([](const QPoly &x) {
        if (!x.is_constant()) {
            throw std::invalid_argument("entry " + x.to_string() + " depends on q");
        }
        return x.coeff(0);
    });
}

QMatrix inverse(const QMatrix &m)
{
    if (!m.is_square()) {
        throw std::invalid_argument("inverse of a non-square " + m.shape() + " matrix");
    }
    QMatrix adj;
    const std::vector<QPoly> c = char_poly_faddeev(m, &adj);
    const QPoly &c0 = c.front();
    if (c0.is_zero()) {
        throw NotInvertible("matrix is singular");
    }
    if (!c0.is_unit()) {
        throw NotInvertible("determinant " + c0.to_string() + " is not a unit of Q[q, 1/q]");
    }
    return (-c0.unit_inverse()) * adj;
}

SeriesMatrix mat_inverse(const SeriesMatrix &m)
{
    if (!m.is_square()) {
        throw std::invalid_argument("inverse of a non-square " + m.shape() + " matrix");
    }
    const std::size_t n = m.rows();
    const std::size_t order = matrix_order(m);
    if (order == kExactOrder) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (m(i, j).size() > 1) {
                    throw std::invalid_argument("inverse of an exact matrix that is not constant in t");
                }
            }
        }
    }
    QMatrix x0;
    try {
        x0 = inverse(t_coefficient(m, 0));
    } catch (const NotInvertible &e) {
        throw NotInvertible(std::string("not invertible at t=0: ") + e.what());
    }
    if (order == kExactOrder) {
        return lift(x0);
    }
    // X_k = -X_0 * sum_{j=1..k} A_j X_{k-j}
    std::vector<QMatrix> a;
    for (std::size_t k = 0; k < order; ++k) {
        a.push_back(t_coefficient(m, k));
    }
    std::vector<QMatrix> x{x0};
    for (std::size_t k = 1; k < order; ++k) {
        QMatrix acc(n, n);
        for (std::size_t j = 1; j <= k; ++j) {
            if (!a[j].is_zero()) {
                acc += a[j] * x[k - j];
            }
        }
        x.push_back(QPoly(Rational(-1)) * (x0 * acc));
    }
    SeriesMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<QPoly> coeffs(order);
            for (std::size_t k = 0; k < order; ++k) {
                coeffs[k] = x[k](i, j);
            }
            out(i, j) = TSeries(std::move(coeffs), order);
        }
    }
    return out;
}

std::string to_string(const QMatrix &m)
{
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out += "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out += (j ? ", " : "") + m(i, j).to_string();
        }
        out += "]\n";
    }
    return out;
}

} // namespace bigqh
