#ifndef BIGQH_TSERIES_HPP
#define BIGQH_TSERIES_HPP

#include <bigqh/qpoly.hpp>
#include <bigqh/rational.hpp>

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

namespace bigqh
{

// Truncation order of a series that is known exactly (a polynomial in t).
inline constexpr std::size_t kExactOrder = std::numeric_limits<std::size_t>::max();

// Saturating sum of truncation orders.
inline std::size_t add_orders(std::size_t a, std::size_t b)
{
    return (a == kExactOrder || b == kExactOrder || a > kExactOrder - b) ? kExactOrder : a + b;
}

std::string order_to_string(std::size_t order);

// t-adic valuation of a truncated series: either an exact (rational) value
// or the lower bound N when every known coefficient below t^N vanishes.
// AtLeast(kExactOrder) is the valuation of the exact zero.
class Valuation
{
public:
    static Valuation exact(Rational v)
    {
        return Valuation(true, std::move(v), 0);
    }
    static Valuation at_least(std::size_t n)
    {
        return Valuation(false, Rational(0), n);
    }

    bool is_exact() const
    {
        return exact_;
    }
    // Precondition: is_exact().
    const Rational &value() const
    {
        return value_;
    }
    // Precondition: !is_exact().
    std::size_t bound() const
    {
        return bound_;
    }
    bool is_infinite() const
    {
        return !exact_ && bound_ == kExactOrder;
    }

    friend bool operator==(const Valuation &a, const Valuation &b)
    {
        return a.exact_ == b.exact_ && (a.exact_ ? a.value_ == b.value_ : a.bound_ == b.bound_);
    }

    std::string to_string() const;

private:
    Valuation(bool exact, Rational v, std::size_t n) : exact_(exact), value_(std::move(v)), bound_(n) {}

    bool exact_;
    Rational value_;
    std::size_t bound_;
};

// Power series in the deformation parameter t with QPoly coefficients,
// known modulo t^order. Coefficients at index >= order are never stored.
// Trailing zero coefficients are trimmed, so equality is structural.
//
// Order propagation:
//   a + b : min(order(a), order(b))
//   a * b : min(order(a) + vlb(b), order(b) + vlb(a)), vlb = valuation lower bound
// which never claims an unknown coefficient and keeps the extra precision of
// products like t * M.
class TSeries
{
public:
    // The exact zero.
    TSeries() = default;
    TSeries(const QPoly &c);
    TSeries(const Rational &c) : TSeries(QPoly(c)) {}
    TSeries(long c) : TSeries(QPoly(Rational(c))) {}

    TSeries(std::vector<QPoly> coeffs, std::size_t order);

    static TSeries t_power(std::size_t k);
    static TSeries zero(std::size_t order)
    {
        return TSeries({}, order);
    }

    std::size_t order() const
    {
        return order_;
    }
    bool is_exact() const
    {
        return order_ == kExactOrder;
    }
    // Number of stored coefficients (index of highest nonzero + 1).
    std::size_t size() const
    {
        return coeffs_.size();
    }
    // Coefficient of t^k; zero past the stored range. Asking at or beyond the
    // truncation order is a logic error.
    const QPoly &coeff(std::size_t k) const;
    // True when all known coefficients vanish.
    bool is_zero() const
    {
        return coeffs_.empty();
    }

    Valuation valuation() const;

    TSeries truncated(std::size_t order) const;
    // Equality of coefficients below min(n, order(a), order(b)).
    bool equal_mod(const TSeries &other, std::size_t n) const;

    TSeries q_log_derivative() const;
    // t^k -> t^{k+1}/(k+1); order + 1.
    TSeries t_integrate() const;
    // Termwise d/dt; order - 1 (exact stays exact).
    TSeries t_derivative() const;
    TSeries specialize_q(const Rational &q) const;
    // True when no coefficient carries a negative power of q.
    bool is_q_polynomial() const;

    TSeries &operator+=(const TSeries &o);
    TSeries &operator-=(const TSeries &o);
    TSeries &operator*=(const Rational &c);

    friend TSeries operator+(TSeries a, const TSeries &b)
    {
        return a += b;
    }
    friend TSeries operator-(TSeries a, const TSeries &b)
    {
        return a -= b;
    }
    friend TSeries operator-(TSeries a)
    {
        return a *= Rational(-1);
    }
    friend TSeries operator*(const TSeries &a, const TSeries &b);
    friend TSeries operator*(TSeries a, const Rational &c)
    {
        return a *= c;
    }
    friend TSeries operator*(const Rational &c, TSeries a)
    {
        return a *= c;
    }

    friend bool operator==(const TSeries &a, const TSeries &b)
    {
        return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }

    // "q + 3q^2 + (q)t + O(t^2)".
    std::string to_string() const;

private:
    void normalize();

    std::vector<QPoly> coeffs_;
    std::size_t order_ = kExactOrder;
};

inline TSeries series_add(const TSeries &a, const TSeries &b)
{
    return a + b;
}
inline TSeries series_mul(const TSeries &a, const TSeries &b)
{
    return a * b;
}
inline TSeries q_log_derivative(const TSeries &a)
{
    return a.q_log_derivative();
}
inline TSeries t_integrate(const TSeries &a)
{
    return a.t_integrate();
}
inline Valuation t_valuation(const TSeries &a)
{
    return a.valuation();
}

} // namespace bigqh

#endif
