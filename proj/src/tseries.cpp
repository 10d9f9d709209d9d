#include <bigqh/tseries.hpp>

#include <bigqh/detail/format.hpp>

#include <algorithm>
#include <stdexcept>

namespace bigqh
{

std::string order_to_string(std::size_t order)
{
    return order == kExactOrder ? std::string("exact") : std::to_string(order);
}

std::string Valuation::to_string() const
{
    if (exact_) {
        return "Exact(" + bigqh::to_string(value_) + ")";
    }
    return is_infinite() ? std::string("AtLeast(inf)") : "AtLeast(" + std::to_string(bound_) + ")";
}

TSeries::TSeries(const QPoly &c)
{
    if (!c.is_zero()) {
        coeffs_.push_back(c);
    }
}

TSeries::TSeries(std::vector<QPoly> coeffs, std::size_t order) : coeffs_(std::move(coeffs)), order_(order)
{
    if (order_ == 0) {
        throw std::invalid_argument("truncation order must be at least 1");
    }
    normalize();
}

TSeries TSeries::t_power(std::size_t k)
{
    std::vector<QPoly> c(k + 1);
    c[k] = QPoly(Rational(1));
    return TSeries(std::move(c), kExactOrder);
}

const QPoly &TSeries::coeff(std::size_t k) const
{
    static const QPoly zero;
    if (k >= order_) {
        throw std::out_of_range("coefficient t^" + std::to_string(k) + " lies beyond the truncation order "
                                + order_to_string(order_));
    }
    return k < coeffs_.size() ? coeffs_[k] : zero;
}

Valuation TSeries::valuation() const
{
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (!coeffs_[k].is_zero()) {
            return Valuation::exact(Rational(static_cast<unsigned long>(k)));
        }
    }
    return Valuation::at_least(order_);
}

namespace
{

// Valuation lower bound as an order-like quantity (kExactOrder = infinite).
std::size_t valuation_floor(const TSeries &a)
{
    const Valuation v = a.valuation();
    return v.is_exact() ? v.value().get_num().get_ui() : v.bound();
}

} // namespace

TSeries TSeries::truncated(std::size_t order) const
{
    if (order >= order_) {
        return *this;
    }
    std::vector<QPoly> c(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(std::min(order, coeffs_.size())));
    return TSeries(std::move(c), order);
}

bool TSeries::equal_mod(const TSeries &other, std::size_t n) const
{
    const std::size_t lim = std::min({n, order_, other.order_});
    const std::size_t top = std::min(lim, std::max(coeffs_.size(), other.coeffs_.size()));
    for (std::size_t k = 0; k < top; ++k) {
        if (!(coeff(k) == other.coeff(k))) {
            return false;
        }
    }
    return true;
}

TSeries TSeries::q_log_derivative() const
{
    TSeries r = *this;
    for (auto &c : r.coeffs_) {
        c = c.q_log_derivative();
    }
    r.normalize();
    return r;
}

TSeries TSeries::t_integrate() const
{
    std::vector<QPoly> c(coeffs_.size() + 1);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        c[k + 1] = coeffs_[k] * Rational(1, static_cast<unsigned long>(k + 1));
    }
    return TSeries(std::move(c), add_orders(order_, 1));
}

TSeries TSeries::t_derivative() const
{
    if (order_ == 1) {
        throw std::domain_error("t-derivative of a series known only modulo t");
    }
    std::vector<QPoly> c;
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        c.push_back(coeffs_[k] * Rational(static_cast<unsigned long>(k)));
    }
    return TSeries(std::move(c), is_exact() ? kExactOrder : order_ - 1);
}

TSeries TSeries::specialize_q(const Rational &q) const
{
    std::vector<QPoly> c;
    c.reserve(coeffs_.size());
    for (const auto &x : coeffs_) {
        c.emplace_back(x.evaluate(q));
    }
    return TSeries(std::move(c), order_);
}

bool TSeries::is_q_polynomial() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const QPoly &c) { return c.is_polynomial(); });
}

TSeries &TSeries::operator+=(const TSeries &o)
{
    order_ = std::min(order_, o.order_);
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
        coeffs_[k] += o.coeffs_[k];
    }
    normalize();
    return *this;
}

TSeries &TSeries::operator-=(const TSeries &o)
{
    return *this += -o;
}

TSeries &TSeries::operator*=(const Rational &c)
{
    for (auto &x : coeffs_) {
        x *= c;
    }
    normalize();
    return *this;
}

TSeries operator*(const TSeries &a, const TSeries &b)
{
    const std::size_t order
        = std::min(add_orders(a.order_, valuation_floor(b)), add_orders(b.order_, valuation_floor(a)));
    if (a.coeffs_.empty() || b.coeffs_.empty()) {
        TSeries r;
        r.order_ = order;
        return r;
    }
    const std::size_t len = std::min(order, a.coeffs_.size() + b.coeffs_.size() - 1);
    std::vector<QPoly> c(len);
    for (std::size_t i = 0; i < a.coeffs_.size() && i < len; ++i) {
        if (a.coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size() && i + j < len; ++j) {
            if (!b.coeffs_[j].is_zero()) {
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
    }
    TSeries r;
    r.coeffs_ = std::move(c);
    r.order_ = order;
    r.normalize();
    return r;
}

void TSeries::normalize()
{
    if (coeffs_.size() > order_) {
        coeffs_.resize(order_);
    }
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

std::string TSeries::to_string() const
{
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const QPoly &c = coeffs_[k];
        if (c.is_zero()) {
            continue;
        }
        const std::string mono = detail::power("t", static_cast<long>(k));
        std::string piece;
        if (mono.empty()) {
            piece = c.to_string();
        } else if (c == QPoly(Rational(1))) {
            piece = mono;
        } else if (c == QPoly(Rational(-1))) {
            piece = "-" + mono;
        } else {
            piece = "(" + c.to_string() + ")" + mono;
        }
        if (!out.empty()) {
            out += " + ";
        }
        out += piece;
    }
    if (out.empty()) {
        out = "0";
    }
    if (!is_exact()) {
        out += " + O(" + detail::power("t", static_cast<long>(order_)) + ")";
    }
    return out;
}

} // namespace bigqh
