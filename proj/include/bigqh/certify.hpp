#ifndef BIGQH_CERTIFY_HPP
#define BIGQH_CERTIFY_HPP

#include <bigqh/graded_algebra.hpp>
#include <bigqh/ratpoly.hpp>
#include <bigqh/xpoly.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bigqh
{

// Valuation of a group of roots read off a Newton polygon.
struct RootValuation {
    enum class Kind { exact, at_least, infinite };
    Kind kind = Kind::exact;
    Rational value; // the valuation, or its lower bound
    std::size_t multiplicity = 0;

    bool positive() const
    {
        return kind == Kind::infinite || sgn(value) > 0;
    }
    std::string to_string() const;
    friend bool operator==(const RootValuation &, const RootValuation &) = default;
};

// Whether a root of valuation a might coincide with a root of valuation b.
bool may_overlap(const RootValuation &a, const RootValuation &b);

struct PolygonPoint {
    std::size_t index;
    Rational value;
    friend bool operator==(const PolygonPoint &, const PolygonPoint &) = default;
};

struct PolygonSegment {
    Rational slope;
    std::size_t length;
};

// Newton polygon of P = a_0 x^n + ... + a_n from the points (i, v(a_i)).
// Only exact valuations become vertices. Coefficients known only up to
// O(t^N) after the last exact point form the tail: tail_length roots whose
// valuations are bounded below by tail_bound (none when the tail coefficients
// are exact zeros, i.e. the roots are 0).
struct NewtonPolygon {
    std::size_t degree = 0;
    std::vector<std::pair<std::size_t, Valuation>> points;
    std::vector<PolygonPoint> vertices;
    std::vector<PolygonSegment> segments;
    std::size_t tail_length = 0;
    std::optional<Rational> tail_bound;
    bool reliable = true;
    std::string problem;

    // Segments in order, then the tail; multiplicities sum to degree.
    std::vector<RootValuation> root_valuations() const;
};

// q is substituted first. Throws std::invalid_argument unless a_0 has exact
// valuation 0.
NewtonPolygon newton_polygon(const XPoly &p, const Rational &q);

struct SquarefreeProfile {
    std::size_t gcd_degree = 0;
    // (multiplicity, degree of the product of factors with that multiplicity)
    std::vector<std::pair<std::size_t, std::size_t>> factors;
};

// gcd(p, p') and Yun's decomposition. Throws std::invalid_argument for 0.
SquarefreeProfile squarefree_profile(const RatPoly &p);

enum class Verdict { semisimple, inconclusive };
std::string to_string(Verdict v);

struct PolygonCertificate {
    NewtonPolygon polygon_p;
    NewtonPolygon polygon_pprime;
    std::vector<RootValuation> roots_p;
    std::vector<RootValuation> roots_pprime;
    RatPoly p0;    // t^0 part of P at the specialization
    RatPoly block; // p0 / x^(number of positive-valuation roots)
    std::size_t p0_gcd_degree = 0;
    std::size_t block_gcd_degree = 0;
    Verdict verdict = Verdict::inconclusive;
    std::string reason;
};

// (a) both polygons reliable and the tail, if any, of positive valuation;
// (b) the valuation-0 roots are simple roots of p0;
// (c) no positive-valuation root of P can share its valuation with a root of P'.
PolygonCertificate polygon_certificate(const XPoly &p, const Rational &q);

struct ResultantCertificate {
    TSeries resultant; // Res(P, P') at the specialization
    Valuation valuation = Valuation::at_least(0);
    Verdict verdict = Verdict::inconclusive;
    std::string reason;
};

// Semisimple iff Res(P, P') has a nonzero coefficient below its truncation.
ResultantCertificate resultant_certificate(const XPoly &p, const Rational &q);

struct Certificate {
    XPoly p;
    Rational q;
    PolygonCertificate polygon;
    ResultantCertificate resultant;
    Verdict verdict = Verdict::inconclusive;
    std::string reason;
};

// Semisimple iff either fragment is.
Certificate certify(const XPoly &p, const Rational &q);

// Coefficient of x^(n-i) must be homogeneous of degree i * operator_degree
// with deg q and deg t taken from the spec.
ViolationList check_charpoly_homogeneity(const AlgebraSpec &spec, const XPoly &p, int operator_degree);

} // namespace bigqh

#endif
