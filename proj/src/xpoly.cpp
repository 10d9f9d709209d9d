#include <bigqh/xpoly.hpp>

#include <bigqh/detail/format.hpp>

#include <algorithm>
#include <stdexcept>

namespace bigqh
{

XPoly::XPoly(std::vector<TSeries> coeffs) : coeffs_(std::move(coeffs))
{
    while (!coeffs_.empty() && coeffs_.back().is_zero() && coeffs_.back().is_exact()) {
        coeffs_.pop_back();
    }
}

const TSeries &XPoly::coeff(std::size_t k) const
{
    static const TSeries zero;
    return k < coeffs_.size() ? coeffs_[k] : zero;
}

bool XPoly::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const TSeries &c) { return c.is_zero(); });
}

std::size_t XPoly::order() const
{
    std::size_t o = kExactOrder;
    for (const auto &c : coeffs_) {
        o = std::min(o, c.order());
    }
    return o;
}

XPoly XPoly::specialize_q(const Rational &q) const
{
    std::vector<TSeries> c;
    c.reserve(coeffs_.size());
    for (const auto &x : coeffs_) {
        c.push_back(x.specialize_q(q));
    }
    return XPoly(std::move(c));
}

XPoly XPoly::truncated(std::size_t order) const
{
    std::vector<TSeries> c;
    c.reserve(coeffs_.size());
    for (const auto &x : coeffs_) {
        c.push_back(x.truncated(order));
    }
    return XPoly(std::move(c));
}

std::vector<QPoly> XPoly::t_slice(std::size_t m) const
{
    std::vector<QPoly> out;
    out.reserve(coeffs_.size());
    for (const auto &c : coeffs_) {
        out.push_back(c.coeff(m));
    }
    return out;
}

RatPoly XPoly::t_slice_at(std::size_t m, const Rational &q) const
{
    std::vector<Rational> out;
    out.reserve(coeffs_.size());
    for (const auto &c : coeffs_) {
        out.push_back(c.coeff(m).evaluate(q));
    }
    return RatPoly(std::move(out));
}

std::string render_coefficient_sum(const std::vector<std::pair<QPoly, std::string>> &terms)
{
    std::string out;
    for (const auto &[c, mono] : terms) {
        if (c.is_zero()) {
            continue;
        }
        bool all_negative = true;
        std::size_t count = 0;
        c.for_each_term([&](int, const Rational &v) {
            all_negative = all_negative && sgn(v) < 0;
            ++count;
        });
        const QPoly mag = all_negative ? -c : c;
        std::string body;
        if (count == 1) {
            const std::string s = mag.to_string();
            // Drop a bare unit coefficient in front of a monomial.
            body = (s == "1" && !mono.empty()) ? mono : (mono.empty() ? s : s + " " + mono);
        } else {
            body = "(" + mag.to_string() + ")" + (mono.empty() ? "" : " " + mono);
        }
        if (out.empty()) {
            out = all_negative ? "-" + body : body;
        } else {
            out += (all_negative ? " - " : " + ") + body;
        }
    }
    return out.empty() ? "0" : out;
}

std::vector<std::string> XPoly::t_layout(const std::string &name) const
{
    std::size_t top = 0;
    for (const auto &c : coeffs_) {
        top = std::max(top, c.size());
    }
    std::vector<std::string> lines;
    for (std::size_t m = 0; m < top; ++m) {
        std::vector<std::pair<QPoly, std::string>> terms;
        for (long k = degree(); k >= 0; --k) {
            const TSeries &c = coeffs_[static_cast<std::size_t>(k)];
            if (m < c.size()) {
                terms.emplace_back(c.coeff(m), detail::power("x", k));
            }
        }
        lines.push_back(name + std::to_string(m) + "(x) = " + render_coefficient_sum(terms));
    }
    const std::size_t ord = order();
    if (ord != kExactOrder) {
        lines.push_back("known modulo t^" + std::to_string(ord));
    }
    return lines;
}

XPoly x_derivative(const XPoly &p)
{
    if (p.degree() <= 0) {
        return XPoly();
    }
    std::vector<TSeries> d;
    for (std::size_t k = 1; k < p.coeffs().size(); ++k) {
        d.push_back(p.coeffs()[k] * Rational(static_cast<unsigned long>(k)));
    }
    return XPoly(std::move(d));
}

XPoly char_poly(const SeriesMatrix &m)
{
    return XPoly(char_poly_faddeev(m));
}

XPoly char_poly_division_free(const SeriesMatrix &m)
{
    return XPoly(char_poly_berkowitz(m));
}

TSeries lifted_determinant(const SeriesMatrix &m)
{
    const std::size_t n = matrix_order(m);
    if (n == kExactOrder) {
        return determinant(m);
    }
    // The known part as an exact polynomial matrix in t.
    const SeriesMatrix a = m.map([n](const TSeries &x) {
        std::vector<QPoly> c(n);
        for (std::size_t k = 0; k < n; ++k) {
            c[k] = x.coeff(k);
        }
        return TSeries(std::move(c), kExactOrder);
    });
    SeriesMatrix adj;
    const std::vector<TSeries> cp = char_poly_faddeev(a, &adj);
    std::size_t s = kExactOrder;
    for (std::size_t i = 0; i < adj.rows(); ++i) {
        for (std::size_t j = 0; j < adj.cols(); ++j) {
            const Valuation v = adj(i, j).valuation();
            if (!v.is_infinite()) {
                s = std::min(s, static_cast<std::size_t>(v.value().get_num().get_ui()));
            }
        }
    }
    const TSeries det = (a.rows() % 2 == 0) ? cp[0] : -cp[0];
    return det.truncated(n + std::min(s, n));
}

XPoly char_poly_lifted_constant(const SeriesMatrix &m)
{
    std::vector<TSeries> c = char_poly(m).coeffs();
    const TSeries det = lifted_determinant(m);
    c.at(0) = (m.rows() % 2 == 0) ? det : -det;
    return XPoly(std::move(c));
}

TSeries resultant(const XPoly &p, const XPoly &q)
{
    if (p.is_zero() || q.is_zero()) {
        throw std::invalid_argument("resultant of a zero polynomial");
    }
    if (p.degree() == 0 && q.degree() == 0) {
        return TSeries(1L);
    }
    const SeriesMatrix s = sylvester_matrix(p.coeffs(), q.coeffs());
    return determinant(s);
}

} // namespace bigqh
