#include <bigqh/rational.hpp>

#include <cctype>
#include <stdexcept>
#include <string>

namespace bigqh
{

Rational make_rational(long num, long den)
{
    if (den == 0) {
        throw std::invalid_argument("rational with zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

namespace
{

bool is_integer_literal(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
        throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
    }
    std::string n(num);
    if (n.front() == '+') {
        n.erase(0, 1);
    }
    Integer zn(n, 10);
    Integer zd(std::string(den), 10);
    if (zd == 0) {
        throw std::invalid_argument("rational with zero denominator: '" + std::string(text) + "'");
    }
    Rational r(zn, zd);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational &r)
{
    return r.get_str(10);
}

} // namespace bigqh
