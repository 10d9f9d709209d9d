#ifndef BIGQH_XPOLY_HPP
#define BIGQH_XPOLY_HPP

#include <bigqh/matrix.hpp>
#include <bigqh/ratpoly.hpp>
#include <bigqh/series_matrix.hpp>
#include <bigqh/tseries.hpp>

#include <string>
#include <vector>

namespace bigqh
{

// Polynomial in the spectral variable x with TSeries coefficients, index =
// power of x. Trailing coefficients that are exact zeros are trimmed; a
// coefficient that is only known to vanish modulo t^N is kept.
class XPoly
{
public:
    XPoly() = default;
    explicit XPoly(std::vector<TSeries> coeffs);

    long degree() const
    {
        return static_cast<long>(coeffs_.size()) - 1;
    }
    const std::vector<TSeries> &coeffs() const
    {
        return coeffs_;
    }
    // Coefficient of x^k (exact zero past the degree).
    const TSeries &coeff(std::size_t k) const;
    // Coefficient a_i in the layout P = a_0 x^n + a_1 x^{n-1} + ... + a_n.
    const TSeries &a(std::size_t i) const
    {
        return coeffs_[coeffs_.size() - 1 - i];
    }
    // True when every known coefficient vanishes.
    bool is_zero() const;
    // Minimum truncation order of the coefficients.
    std::size_t order() const;

    XPoly specialize_q(const Rational &q) const;
    XPoly truncated(std::size_t order) const;
    // Polynomial in x formed by the t^m coefficients (QPoly-valued).
    std::vector<QPoly> t_slice(std::size_t m) const;
    // t^m slice evaluated at a q value, as a polynomial over Q.
    RatPoly t_slice_at(std::size_t m, const Rational &q) const;

    friend bool operator==(const XPoly &a, const XPoly &b) = default;

    // One line per t-power: "P0(x) = x^12 - 60q x^9 - ...".
    std::vector<std::string> t_layout(const std::string &name = "P") const;

private:
    std::vector<TSeries> coeffs_;
};

XPoly x_derivative(const XPoly &p);

// Monic characteristic polynomial det(x I - m) by Faddeev-LeVerrier.
XPoly char_poly(const SeriesMatrix &m);
// Same via the division-free Berkowitz recursion.
XPoly char_poly_division_free(const SeriesMatrix &m);

// det(m) with the precision raised by the adjugate argument: if m is known
// modulo t^N and adj of its known part is O(t^s), then
// det(A + t^N X) = det A + t^N tr(adj(A) X) + O(t^(2N)) is known modulo
// t^(N + min(s, N)).
TSeries lifted_determinant(const SeriesMatrix &m);
// char_poly(m) with the constant coefficient (-1)^n det(m) replaced by its
// lifted version. The other coefficients keep their order.
XPoly char_poly_lifted_constant(const SeriesMatrix &m);

// Sylvester matrix of p (degree m) and q (degree n): n shifted rows of p's
// coefficients followed by m shifted rows of q's, leading coefficients first.
template <typename R>
Matrix<R> sylvester_matrix(const std::vector<R> &p, const std::vector<R> &q)
{
    const std::size_t m = p.size() - 1;
    const std::size_t n = q.size() - 1;
    Matrix<R> s(m + n, m + n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t k = 0; k <= m; ++k) {
            s(r, r + k) = p[m - k];
        }
    }
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t k = 0; k <= n; ++k) {
            s(n + r, r + k) = q[n - k];
        }
    }
    return s;
}

// det of the Sylvester matrix. Sign convention: resultant(x - a, x - b) = a - b,
// i.e. Res(p, q) = lc(p)^deg q * lc(q)^deg p * prod (alpha_i - beta_j).
// Throws std::invalid_argument for a zero polynomial.
TSeries resultant(const XPoly &p, const XPoly &q);

// Helper for rendering a QPoly coefficient in front of a monomial.
std::string render_coefficient_sum(const std::vector<std::pair<QPoly, std::string>> &terms);

} // namespace bigqh

#endif
