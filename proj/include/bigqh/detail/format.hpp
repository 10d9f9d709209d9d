#ifndef BIGQH_DETAIL_FORMAT_HPP
#define BIGQH_DETAIL_FORMAT_HPP

#include <bigqh/rational.hpp>

#include <string>

namespace bigqh::detail
{

// Appends "c*mono" to a sum being rendered, as " + 3q^2", " - x", "-1/3"...
// An empty monomial stands for 1.
void append_term(std::string &out, const Rational &c, const std::string &monomial);

// "var", "var^k" or "" for k == 0.
std::string power(const std::string &var, long k);

} // namespace bigqh::detail

#endif
