#ifndef BIGQH_QPOLY_HPP
#define BIGQH_QPOLY_HPP

#include <bigqh/rational.hpp>

#include <string>
#include <vector>

namespace bigqh
{

// Polynomial in the Novikov variable q with rational coefficients.
//
// Negative exponents are admitted so that matrices whose determinant is a
// monomial c*q^k (every homogeneous matrix of the quantum product is of this
// kind) can be inverted without leaving the ring; is_polynomial() tells
// whether a value lies in Q[q] proper.
//
// Normal form: coeffs_ has no leading or trailing zeros, low_ is the exponent
// of coeffs_[0]; the zero polynomial has empty coeffs_ and low_ == 0.
class QPoly
{
public:
    QPoly() = default;
    QPoly(const Rational &c);
    QPoly(long c) : QPoly(Rational(c)) {}

    static QPoly monomial(const Rational &c, int exponent);
    static QPoly q()
    {
        return monomial(Rational(1), 1);
    }

    bool is_zero() const
    {
        return coeffs_.empty();
    }
    // Precondition for both: !is_zero().
    int low_degree() const
    {
        return low_;
    }
    int high_degree() const
    {
        return low_ + static_cast<int>(coeffs_.size()) - 1;
    }
    Rational coeff(int exponent) const;

    bool is_polynomial() const
    {
        return is_zero() || low_ >= 0;
    }
    bool is_constant() const
    {
        return is_zero() || (coeffs_.size() == 1 && low_ == 0);
    }
    // Units of Q[q, 1/q] are the nonzero monomials.
    bool is_unit() const
    {
        return coeffs_.size() == 1;
    }
    QPoly unit_inverse() const;

    // Calls f(exponent, coefficient) for every nonzero term, ascending.
    template <typename F>
    void for_each_term(F &&f) const
    {
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (sgn(coeffs_[k]) != 0) {
                f(low_ + static_cast<int>(k), coeffs_[k]);
            }
        }
    }

    Rational evaluate(const Rational &q) const;
    // q d/dq, i.e. c*q^k -> k*c*q^k.
    QPoly q_log_derivative() const;

    QPoly &operator+=(const QPoly &other);
    QPoly &operator-=(const QPoly &other);
    QPoly &operator*=(const Rational &c);

    friend QPoly operator+(QPoly a, const QPoly &b)
    {
        return a += b;
    }
    friend QPoly operator-(QPoly a, const QPoly &b)
    {
        return a -= b;
    }
    friend QPoly operator-(QPoly a)
    {
        return a *= Rational(-1);
    }
    friend QPoly operator*(const QPoly &a, const QPoly &b);
    friend QPoly operator*(QPoly a, const Rational &c)
    {
        return a *= c;
    }
    friend QPoly operator*(const Rational &c, QPoly a)
    {
        return a *= c;
    }

    friend bool operator==(const QPoly &a, const QPoly &b)
    {
        return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
    }

    // Rendering: "96q^2 + 26q", "-1/3q^-1", "0".
    std::string to_string(const std::string &var = "q") const;

private:
    void normalize();

    int low_ = 0;
    std::vector<Rational> coeffs_;
};

} // namespace bigqh

#endif
