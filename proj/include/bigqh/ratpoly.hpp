#ifndef BIGQH_RATPOLY_HPP
#define BIGQH_RATPOLY_HPP

#include <bigqh/rational.hpp>

#include <string>
#include <utility>
#include <vector>

namespace bigqh
{

// Dense univariate polynomial over Q, coefficient index = exponent.
// Normal form has no trailing zeros; the zero polynomial is empty and has
// degree -1.
class RatPoly
{
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> coeffs);
    RatPoly(const Rational &c);
    RatPoly(long c) : RatPoly(Rational(c)) {}

    static RatPoly x()
    {
        return monomial(Rational(1), 1);
    }
    static RatPoly monomial(const Rational &c, std::size_t exponent);

    bool is_zero() const
    {
        return coeffs_.empty();
    }
    long degree() const
    {
        return static_cast<long>(coeffs_.size()) - 1;
    }
    Rational coeff(std::size_t k) const
    {
        return k < coeffs_.size() ? coeffs_[k] : Rational(0);
    }
    const std::vector<Rational> &coeffs() const
    {
        return coeffs_;
    }
    Rational leading() const
    {
        return is_zero() ? Rational(0) : coeffs_.back();
    }

    Rational evaluate(const Rational &x) const;
    RatPoly derivative() const;
    RatPoly monic() const;
    // Largest k with x^k dividing *this (0 for the zero polynomial).
    std::size_t x_adic_valuation() const;
    // Exact quotient by x^k; throws if x^k does not divide.
    RatPoly divide_by_x_power(std::size_t k) const;

    RatPoly &operator+=(const RatPoly &o);
    RatPoly &operator-=(const RatPoly &o);
    friend RatPoly operator+(RatPoly a, const RatPoly &b)
    {
        return a += b;
    }
    friend RatPoly operator-(RatPoly a, const RatPoly &b)
    {
        return a -= b;
    }
    friend RatPoly operator-(const RatPoly &a);
    friend RatPoly operator*(const RatPoly &a, const RatPoly &b);
    friend RatPoly operator*(RatPoly a, const Rational &c);

    friend bool operator==(const RatPoly &a, const RatPoly &b) = default;

    std::string to_string(const std::string &var = "x") const;

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

// Euclidean division; throws std::domain_error for a zero divisor.
std::pair<RatPoly, RatPoly> divmod(const RatPoly &a, const RatPoly &b);

// Monic gcd, normalized at every Euclidean step; gcd(0, 0) = 0.
RatPoly gcd(const RatPoly &a, const RatPoly &b);

// Yun's square-free decomposition of a nonzero polynomial:
// p = lc * prod_i factors[i].second ^ factors[i].first, factors monic,
// pairwise coprime, square-free, multiplicities strictly increasing.
std::vector<std::pair<std::size_t, RatPoly>> squarefree_decomposition(const RatPoly &p);

} // namespace bigqh

#endif
