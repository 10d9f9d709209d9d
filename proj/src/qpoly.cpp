#include <bigqh/qpoly.hpp>

#include <bigqh/detail/format.hpp>

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace bigqh
{

QPoly::QPoly(const Rational &c)
{
    if (sgn(c) != 0) {
        coeffs_.push_back(c);
    }
}

QPoly QPoly::monomial(const Rational &c, int exponent)
{
    QPoly p;
    if (sgn(c) != 0) {
        p.low_ = exponent;
        p.coeffs_.push_back(c);
    }
    return p;
}

Rational QPoly::coeff(int exponent) const
{
    if (is_zero() || exponent < low_ || exponent > high_degree()) {
        return Rational(0);
    }
    return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

QPoly QPoly::unit_inverse() const
{
    if (!is_unit()) {
        throw std::domain_error("q-polynomial " + to_string() + " is not a unit");
    }
    return monomial(Rational(1) / coeffs_.front(), -low_);
}

Rational QPoly::evaluate(const Rational &q) const
{
    if (is_zero()) {
        return Rational(0);
    }
    if (low_ < 0 && sgn(q) == 0) {
        throw std::domain_error("cannot evaluate a Laurent polynomial at q = 0");
    }
    // Horner on the coefficient vector, then multiply by q^low.
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= q;
        acc += *it;
    }
    Rational shift(1);
    const Rational base = low_ >= 0 ? q : Rational(1) / q;
    for (int k = 0; k < std::abs(low_); ++k) {
        shift *= base;
    }
    return acc * shift;
}

QPoly QPoly::q_log_derivative() const
{
    QPoly r = *this;
    for (std::size_t k = 0; k < r.coeffs_.size(); ++k) {
        r.coeffs_[k] *= low_ + static_cast<long>(k);
    }
    r.normalize();
    return r;
}

QPoly &QPoly::operator+=(const QPoly &other)
{
    if (other.is_zero()) {
        return *this;
    }
    if (is_zero()) {
        return *this = other;
    }
    const int lo = std::min(low_, other.low_);
    const int hi = std::max(high_degree(), other.high_degree());
    std::vector<Rational> out(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        out[static_cast<std::size_t>(low_ - lo) + k] = coeffs_[k];
    }
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) {
        out[static_cast<std::size_t>(other.low_ - lo) + k] += other.coeffs_[k];
    }
    low_ = lo;
    coeffs_ = std::move(out);
    normalize();
    return *this;
}

QPoly &QPoly::operator-=(const QPoly &other)
{
    return *this += -other;
}

QPoly &QPoly::operator*=(const Rational &c)
{
    if (sgn(c) == 0) {
        coeffs_.clear();
        low_ = 0;
        return *this;
    }
    for (auto &x : coeffs_) {
        x *= c;
    }
    return *this;
}

QPoly operator*(const QPoly &a, const QPoly &b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    QPoly r;
    r.low_ = a.low_ + b.low_;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (sgn(a.coeffs_[i]) == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    r.normalize();
    return r;
}

void QPoly::normalize()
{
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) {
        coeffs_.pop_back();
    }
    std::size_t lead = 0;
    while (lead < coeffs_.size() && sgn(coeffs_[lead]) == 0) {
        ++lead;
    }
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
        low_ += static_cast<int>(lead);
    }
    if (coeffs_.empty()) {
        low_ = 0;
    }
}

std::string QPoly::to_string(const std::string &var) const
{
    if (is_zero()) {
        return "0";
    }
    // Highest power first, as the tables print them.
    std::string out;
    for (int k = high_degree(); k >= low_; --k) {
        detail::append_term(out, coeff(k), detail::power(var, k));
    }
    return out;
}

} // namespace bigqh
