#include <bigqh/certify.hpp>

#include <algorithm>
#include <stdexcept>

namespace bigqh
{

namespace
{

Rational lower_bound(const Valuation &v)
{
    return v.is_exact() ? v.value() : Rational(static_cast<unsigned long>(v.bound()));
}

std::string list_string(const std::vector<RootValuation> &roots)
{
    std::string out = "{";
    for (std::size_t k = 0; k < roots.size(); ++k) {
        out += (k ? ", " : "") + roots[k].to_string();
    }
    return out + "}";
}

// Height of the hull through vertex a with the given slope at index i.
Rational on_line(const PolygonPoint &a, const Rational &slope, std::size_t i)
{
    return a.value + slope * Rational(static_cast<long>(i) - static_cast<long>(a.index));
}

} // namespace

std::string RootValuation::to_string() const
{
    std::string v;
    switch (kind) {
    case Kind::exact:
        v = bigqh::to_string(value);
        break;
    case Kind::at_least:
        v = ">=" + bigqh::to_string(value);
        break;
    case Kind::infinite:
        v = "inf";
        break;
    }
    return v + " x" + std::to_string(multiplicity);
}

bool may_overlap(const RootValuation &a, const RootValuation &b)
{
    using K = RootValuation::Kind;
    if (a.kind == K::exact && b.kind == K::exact) {
        return a.value == b.value;
    }
    if (a.kind == K::exact && b.kind == K::at_least) {
        return a.value >= b.value;
    }
    if (a.kind == K::at_least && b.kind == K::exact) {
        return b.value >= a.value;
    }
    if (a.kind == K::exact || b.kind == K::exact) {
        return false; // exact against infinite
    }
    return true;
}

std::vector<RootValuation> NewtonPolygon::root_valuations() const
{
    std::vector<RootValuation> out;
    for (const auto &s : segments) {
        out.push_back({RootValuation::Kind::exact, s.slope, s.length});
    }
    if (tail_length > 0) {
        if (tail_bound) {
            out.push_back({RootValuation::Kind::at_least, *tail_bound, tail_length});
        } else {
            out.push_back({RootValuation::Kind::infinite, Rational(0), tail_length});
        }
    }
    return out;
}

NewtonPolygon newton_polygon(const XPoly &p, const Rational &q)
{
    const XPoly s = p.specialize_q(q);
    if (s.degree() < 0) {
        throw std::invalid_argument("Newton polygon of the zero polynomial");
    }
    NewtonPolygon poly;
    poly.degree = static_cast<std::size_t>(s.degree());
    const std::size_t n = poly.degree;
    for (std::size_t i = 0; i <= n; ++i) {
        poly.points.emplace_back(i, s.a(i).valuation());
    }
    const Valuation &lead = poly.points.front().second;
    if (!lead.is_exact() || sgn(lead.value()) != 0) {
        throw std::invalid_argument("Newton polygon needs a leading coefficient of exact valuation 0, got "
                                    + lead.to_string());
    }

    // Lower hull of the exact points; collinear points are dropped.
    for (const auto &[i, v] : poly.points) {
        if (!v.is_exact()) {
            continue;
        }
        const PolygonPoint c{i, v.value()};
        while (poly.vertices.size() >= 2) {
            const PolygonPoint &a = poly.vertices[poly.vertices.size() - 2];
            const PolygonPoint &b = poly.vertices.back();
            const Rational cross = Rational(static_cast<long>(b.index - a.index)) * (c.value - a.value)
                                   - (b.value - a.value) * Rational(static_cast<long>(c.index - a.index));
            if (sgn(cross) > 0) {
                break;
            }
            poly.vertices.pop_back();
        }
        poly.vertices.push_back(c);
    }
    for (std::size_t k = 1; k < poly.vertices.size(); ++k) {
        const PolygonPoint &a = poly.vertices[k - 1];
        const PolygonPoint &b = poly.vertices[k];
        const std::size_t len = b.index - a.index;
        poly.segments.push_back({(b.value - a.value) / Rational(static_cast<unsigned long>(len)), len});
    }

    const PolygonPoint &last = poly.vertices.back();
    const std::optional<Rational> last_slope
        = poly.segments.empty() ? std::nullopt : std::optional<Rational>(poly.segments.back().slope);
    const auto flag = [&poly](std::size_t i, const Valuation &v, const Rational &hull) {
        if (poly.reliable) {
            poly.reliable = false;
            poly.problem = "polygon unreliable at this truncation: a_" + std::to_string(i) + " has valuation "
                           + v.to_string() + " but the hull passes at " + to_string(hull);
        }
    };

    std::size_t seg = 0;
    for (const auto &[i, v] : poly.points) {
        if (v.is_exact() || v.is_infinite()) {
            continue;
        }
        const Rational bound = lower_bound(v);
        if (i < last.index) {
            while (poly.vertices[seg + 1].index < i) {
                ++seg;
            }
            const Rational hull = on_line(poly.vertices[seg], poly.segments[seg].slope, i);
            if (bound < hull) {
                flag(i, v, hull);
            }
            continue;
        }
        if (last_slope) {
            const Rational hull = on_line(last, *last_slope, i);
            if (bound < hull) {
                flag(i, v, hull);
            }
        }
        const Rational ratio = (bound - last.value) / Rational(static_cast<unsigned long>(i - last.index));
        if (!poly.tail_bound || ratio < *poly.tail_bound) {
            poly.tail_bound = ratio;
        }
    }
    poly.tail_length = n - last.index;
    return poly;
}

SquarefreeProfile squarefree_profile(const RatPoly &p)
{
    if (p.is_zero()) {
        throw std::invalid_argument("square-free profile of the zero polynomial");
    }
    SquarefreeProfile out;
    out.gcd_degree = static_cast<std::size_t>(gcd(p, p.derivative()).degree());
    for (const auto &[mult, f] : squarefree_decomposition(p)) {
        out.factors.emplace_back(mult, static_cast<std::size_t>(f.degree()));
    }
    return out;
}

std::string to_string(Verdict v)
{
    return v == Verdict::semisimple ? "Semisimple" : "Inconclusive";
}

PolygonCertificate polygon_certificate(const XPoly &p, const Rational &q)
{
    PolygonCertificate c;
    c.polygon_p = newton_polygon(p, q);
    c.polygon_pprime = newton_polygon(x_derivative(p), q);
    c.roots_p = c.polygon_p.root_valuations();
    c.roots_pprime = c.polygon_pprime.root_valuations();
    c.p0 = p.t_slice_at(0, q);
    c.p0_gcd_degree = static_cast<std::size_t>(gcd(c.p0, c.p0.derivative()).degree());

    const auto fail = [&c](const std::string &why) {
        c.verdict = Verdict::inconclusive;
        c.reason = why;
        return c;
    };

    if (!c.polygon_p.reliable) {
        return fail("(a) P: " + c.polygon_p.problem);
    }
    if (!c.polygon_pprime.reliable) {
        return fail("(a) P': " + c.polygon_pprime.problem);
    }
    std::size_t positive = 0;
    std::size_t zero = 0;
    for (const auto &r : c.roots_p) {
        if (r.positive()) {
            positive += r.multiplicity;
        } else if (r.kind == RootValuation::Kind::exact && sgn(r.value) == 0) {
            zero += r.multiplicity;
        } else {
            return fail("(a) " + std::to_string(r.multiplicity) + " roots of P have valuation " + r.to_string()
                        + ", not separated from the valuation-0 roots");
        }
    }

    if (c.p0.x_adic_valuation() != positive) {
        return fail("(b) P0 is divisible by x^" + std::to_string(c.p0.x_adic_valuation()) + " but P has "
                    + std::to_string(positive) + " roots of positive valuation");
    }
    c.block = c.p0.divide_by_x_power(positive);
    c.block_gcd_degree = static_cast<std::size_t>(gcd(c.block, c.block.derivative()).degree());
    if (c.block_gcd_degree != 0) {
        return fail("(b) the valuation-0 part of P0 has a repeated root (gcd degree "
                    + std::to_string(c.block_gcd_degree) + ")");
    }

    for (const auto &r : c.roots_p) {
        if (!r.positive()) {
            continue;
        }
        for (const auto &s : c.roots_pprime) {
            if (may_overlap(r, s)) {
                return fail("(c) roots of P of valuation " + r.to_string() + " may meet roots of P' of valuation "
                            + s.to_string());
            }
        }
    }
    c.verdict = Verdict::semisimple;
    c.reason = std::to_string(zero) + " simple roots of valuation 0; roots of P " + list_string(c.roots_p)
               + " against roots of P' " + list_string(c.roots_pprime);
    return c;
}

ResultantCertificate resultant_certificate(const XPoly &p, const Rational &q)
{
    ResultantCertificate c;
    const XPoly s = p.specialize_q(q);
    if (s.order() < 2) {
        c.valuation = Valuation::at_least(s.order());
        c.reason = "P is known only modulo t^" + order_to_string(s.order());
        return c;
    }
    c.resultant = resultant(s, x_derivative(s));
    c.valuation = c.resultant.valuation();
    if (c.valuation.is_exact()) {
        c.verdict = Verdict::semisimple;
        c.reason = "v(Res(P, P')) = " + c.valuation.to_string();
    } else {
        c.reason = "Res(P, P') vanishes modulo t^" + order_to_string(c.resultant.order());
    }
    return c;
}

Certificate certify(const XPoly &p, const Rational &q)
{
    Certificate c;
    c.p = p;
    c.q = q;
    c.polygon = polygon_certificate(p, q);
    c.resultant = resultant_certificate(p, q);
    const bool by_polygon = c.polygon.verdict == Verdict::semisimple;
    const bool by_resultant = c.resultant.verdict == Verdict::semisimple;
    if (by_polygon || by_resultant) {
        c.verdict = Verdict::semisimple;
        c.reason = by_polygon && by_resultant ? "polygon and resultant"
                   : by_polygon              ? "polygon only"
                                             : "resultant only";
    } else {
        c.reason = "polygon: " + c.polygon.reason + "; resultant: " + c.resultant.reason;
    }
    return c;
}

ViolationList check_charpoly_homogeneity(const AlgebraSpec &spec, const XPoly &p, int operator_degree)
{
    ViolationList out;
    const long n = p.degree();
    for (long k = 0; k <= n; ++k) {
        const TSeries &c = p.coeff(static_cast<std::size_t>(k));
        const long i = n - k;
        for (std::size_t m = 0; m < c.size(); ++m) {
            c.coeff(m).for_each_term([&](int j, const Rational &) {
                const long deg = static_cast<long>(j) * spec.q_degree() + static_cast<long>(m) * spec.t_degree();
                if (deg != i * operator_degree) {
                    out.push_back({"homogeneity", "coefficient of x^" + std::to_string(k) + " has a term q^"
                                                      + std::to_string(j) + " t^" + std::to_string(m)
                                                      + " of degree " + std::to_string(deg) + ", expected "
                                                      + std::to_string(i * operator_degree)});
                }
            });
        }
    }
    return out;
}

} // namespace bigqh
