#include <bigqh/ratpoly.hpp>

#include <bigqh/detail/format.hpp>

#include <stdexcept>

namespace bigqh
{

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    normalize();
}

RatPoly::RatPoly(const Rational &c)
{
    if (sgn(c) != 0) {
        coeffs_.push_back(c);
    }
}

RatPoly RatPoly::monomial(const Rational &c, std::size_t exponent)
{
    std::vector<Rational> v(exponent + 1, Rational(0));
    v[exponent] = c;
    return RatPoly(std::move(v));
}

Rational RatPoly::evaluate(const Rational &x) const
{
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

RatPoly RatPoly::derivative() const
{
    if (coeffs_.size() <= 1) {
        return {};
    }
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        d[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
    }
    return RatPoly(std::move(d));
}

RatPoly RatPoly::monic() const
{
    if (is_zero()) {
        return {};
    }
    return *this * (Rational(1) / leading());
}

std::size_t RatPoly::x_adic_valuation() const
{
    std::size_t k = 0;
    while (k < coeffs_.size() && sgn(coeffs_[k]) == 0) {
        ++k;
    }
    return is_zero() ? 0 : k;
}

RatPoly RatPoly::divide_by_x_power(std::size_t k) const
{
    if (is_zero()) {
        return {};
    }
    if (x_adic_valuation() < k) {
        throw std::domain_error("x^" + std::to_string(k) + " does not divide " + to_string());
    }
    return RatPoly(std::vector<Rational>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
}

RatPoly &RatPoly::operator+=(const RatPoly &o)
{
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size(), Rational(0));
    }
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
        coeffs_[k] += o.coeffs_[k];
    }
    normalize();
    return *this;
}

RatPoly &RatPoly::operator-=(const RatPoly &o)
{
    return *this += -o;
}

RatPoly operator-(const RatPoly &a)
{
    return a * Rational(-1);
}

RatPoly operator*(const RatPoly &a, const RatPoly &b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return RatPoly(std::move(out));
}

RatPoly operator*(RatPoly a, const Rational &c)
{
    for (auto &x : a.coeffs_) {
        x *= c;
    }
    a.normalize();
    return a;
}

void RatPoly::normalize()
{
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) {
        coeffs_.pop_back();
    }
}

std::string RatPoly::to_string(const std::string &var) const
{
    if (is_zero()) {
        return "0";
    }
    std::string out;
    for (long k = degree(); k >= 0; --k) {
        detail::append_term(out, coeffs_[static_cast<std::size_t>(k)], detail::power(var, k));
    }
    return out;
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly &a, const RatPoly &b)
{
    if (b.is_zero()) {
        throw std::domain_error("polynomial division by zero");
    }
    RatPoly rem = a;
    if (a.degree() < b.degree()) {
        return {RatPoly(), rem};
    }
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1), Rational(0));
    const Rational inv_lead = Rational(1) / b.leading();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        const auto shift = static_cast<std::size_t>(rem.degree() - b.degree());
        const Rational c = rem.leading() * inv_lead;
        quot[shift] = c;
        rem -= RatPoly::monomial(c, shift) * b;
    }
    return {RatPoly(std::move(quot)), rem};
}

RatPoly gcd(const RatPoly &a, const RatPoly &b)
{
    RatPoly x = a.monic();
    RatPoly y = b.monic();
    while (!y.is_zero()) {
        RatPoly r = divmod(x, y).second.monic();
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

std::vector<std::pair<std::size_t, RatPoly>> squarefree_decomposition(const RatPoly &p)
{
    if (p.is_zero()) {
        throw std::domain_error("square-free decomposition of the zero polynomial");
    }
    std::vector<std::pair<std::size_t, RatPoly>> out;
    const RatPoly f = p.monic();
    const RatPoly df = f.derivative();
    const RatPoly g = gcd(f, df);
    RatPoly c = divmod(f, g).first;
    RatPoly d = divmod(df, g).first - c.derivative();
    for (std::size_t i = 1; c.degree() > 0; ++i) {
        const RatPoly a = gcd(c, d);
        c = divmod(c, a).first;
        d = divmod(d, a).first - c.derivative();
        if (a.degree() > 0) {
            out.emplace_back(i, a);
        }
    }
    return out;
}

} // namespace bigqh
