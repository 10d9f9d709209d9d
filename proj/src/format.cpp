#include <bigqh/detail/format.hpp>

namespace bigqh::detail
{

void append_term(std::string &out, const Rational &c, const std::string &monomial)
{
    if (sgn(c) == 0) {
        return;
    }
    const bool negative = sgn(c) < 0;
    if (out.empty()) {
        if (negative) {
            out += '-';
        }
    } else {
        out += negative ? " - " : " + ";
    }
    const Rational mag = abs(c);
    if (monomial.empty()) {
        out += to_string(mag);
    } else if (mag != 1) {
        out += is_integer(mag) ? to_string(mag) : "(" + to_string(mag) + ")";
        out += monomial;
    } else {
        out += monomial;
    }
}

std::string power(const std::string &var, long k)
{
    if (k == 0) {
        return {};
    }
    if (k == 1) {
        return var;
    }
    return var + "^" + std::to_string(k);
}

} // namespace bigqh::detail
