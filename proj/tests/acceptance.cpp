// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// All comparisons are exact equality of rationals; nothing is approximate.

#include <bigqh/certify.hpp>
#include <bigqh/deformation.hpp>
#include <bigqh/ig26_model.hpp>
#include <bigqh/specfile.hpp>
#include <bigqh/xpoly.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

using namespace bigqh;

namespace
{

// Wall-clock budget for the whole run, in seconds.
constexpr double kRuntimeBudget = 60.0;

struct Outcome {
    bool pass = false;
    std::string detail;
};

const AlgebraSpec &small()
{
    static const AlgebraSpec s = ig26::build_small_qh();
    return s;
}

const DeformedProduct &boot(std::size_t n)
{
    static std::map<std::size_t, DeformedProduct> cache;
    auto it = cache.find(n);
    if (it == cache.end()) {
        it = cache.emplace(n, bootstrap(small(), n)).first;
    }
    return it->second;
}

QPoly qp(std::initializer_list<std::pair<long, int>> terms)
{
    QPoly p;
    for (const auto &[c, k] : terms) {
        p += QPoly::monomial(Rational(c), k);
    }
    return p;
}

std::vector<QPoly> by_power(const std::vector<std::pair<std::size_t, QPoly>> &terms)
{
    std::vector<QPoly> c(13);
    for (const auto &[k, v] : terms) {
        c[k] = v;
    }
    return c;
}

std::string roots_text(const std::vector<RootValuation> &r)
{
    std::string s = "{";
    for (std::size_t i = 0; i < r.size(); ++i) {
        s += (i ? ", " : "") + r[i].to_string();
    }
    return s + "}";
}

RootValuation exact_root(long num, long den, std::size_t mult)
{
    return {RootValuation::Kind::exact, make_rational(num, den), mult};
}

Outcome axioms()
{
    const AlgebraSpec &s = small();
    const ViolationList a = verify_axioms(s);
    const ViolationList f = verify_frobenius(s);
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < s.dim(); ++i) {
        for (std::size_t j = i + 1; j < s.dim(); ++j) {
            pairs += s.structure(i) * s.structure(j) == s.structure(j) * s.structure(i) ? 1 : 0;
        }
    }
    const bool ok = s.dim() == 12 && a.empty() && f.empty() && pairs == 66;
    return {ok, std::to_string(a.size()) + " axiom and " + std::to_string(f.size())
                    + " Frobenius violations; " + std::to_string(pairs) + "/66 commuting pairs"};
}

Outcome characters()
{
    const ViolationList v = ig26::verify_character_table(small());
    const XPoly cp = char_poly(lift(specialize_q(small().structure(1), Rational(1))));
    // x^2 (x^5 + 1)(x^5 - 27) = x^12 - 26 x^7 - 27 x^2
    std::vector<TSeries> expect(13);
    expect[12] = TSeries(QPoly(1));
    expect[7] = TSeries(QPoly(-26));
    expect[2] = TSeries(QPoly(-27));
    const bool poly_ok = cp == XPoly(expect);
    return {v.empty() && poly_ok, std::to_string(v.size()) + " table violations; charpoly(M1 at q=1) "
                                      + (poly_ok ? "= x^2(x^5+1)(x^5-27)" : "differs")};
}

Outcome nilpotent()
{
    const QMatrix m = multiplication_matrix(small(), ig26::nilpotent_c0(small()));
    const bool sq = (m * m).is_zero();
    const std::size_t rad = radical_dimension(small(), Rational(1));
    return {sq && !m.is_zero() && rad == 1,
            std::string("M_c0^2 ") + (sq ? "= 0" : "!= 0") + "; radical dimension at q=1 is " + std::to_string(rad)};
}

Outcome gamma_poly()
{
    const XPoly p = char_poly(gamma_matrix(boot(2)));
    const auto p0 = by_power({{12, QPoly(1)},
                              {9, qp({{-60, 1}})},
                              {8, qp({{-90, 1}})},
                              {7, qp({{-96, 2}, {-26, 1}})},
                              {4, qp({{-60, 2}})},
                              {3, qp({{-90, 2}})},
                              {2, qp({{-96, 3}, {-27, 2}})}});
    const auto p1 = by_power({{10, qp({{-30, 1}})},
                              {9, qp({{-96, 1}})},
                              {8, qp({{-36, 1}})},
                              {7, qp({{152, 2}})},
                              {6, qp({{120, 2}})},
                              {5, qp({{-32, 3}, {186, 2}})},
                              {4, qp({{240, 3}, {-26, 2}})},
                              {3, qp({{-36, 2}})},
                              {2, qp({{152, 3}})},
                              {1, qp({{-30, 3}})},
                              {0, qp({{-32, 4}, {-9, 3}})}});
    const bool ok = p.degree() == 12 && p.order() == 2 && p.t_slice(0) == p0 && p.t_slice(1) == p1;
    return {ok, "P0 x^7: " + p.t_slice(0)[7].to_string() + "; P1 constant: " + p.t_slice(1)[0].to_string()};
}

Outcome euler_poly()
{
    const XPoly p = char_poly(euler_matrix(small(), boot(3)));
    const bool p012 = p.t_slice(0) == by_power({{12, QPoly(1)}, {7, qp({{-81250, 1}})}, {2, qp({{-263671875, 2}})}})
                      && p.t_slice(1) == by_power({{8, qp({{-11250, 1}})}, {3, qp({{-35156250, 2}})}})
                      && p.t_slice(2) == by_power({{9, qp({{-900, 1}})}, {4, qp({{-78125, 2}})}});
    const XPoly p4 = char_poly(euler_matrix(small(), boot(4)));
    const QPoly c3 = p4.coeff(0).coeff(3);
    const bool ok = p012 && c3 == qp({{-39062500, 3}});
    return {ok, std::string("P0, P1, P2 ") + (p012 ? "match" : "differ") + "; t^3 constant at order 4: " + c3.to_string()};
}

Outcome polygons()
{
    const XPoly p = char_poly(gamma_matrix(boot(2)));
    const PolygonCertificate c = polygon_certificate(p, Rational(1));
    const std::vector<PolygonPoint> vertices = {{0, Rational(0)}, {10, Rational(0)}, {12, Rational(1)}};
    const bool ok = c.polygon_p.vertices == vertices
                    && c.roots_p == std::vector<RootValuation>{exact_root(0, 1, 10), exact_root(1, 2, 2)}
                    && c.roots_pprime == std::vector<RootValuation>{exact_root(0, 1, 10), exact_root(1, 1, 1)}
                    && c.verdict == Verdict::semisimple;
    std::string v;
    for (const auto &x : c.polygon_p.vertices) {
        v += "(" + std::to_string(x.index) + "," + to_string(x.value) + ")";
    }
    return {ok, "vertices " + v + "; P " + roots_text(c.roots_p) + "; P' " + roots_text(c.roots_pprime) + "; "
                    + to_string(c.verdict)};
}

Outcome euler_spectrum()
{
    const ElementChoice e = ElementChoice::parse("euler");
    const XPoly p4 = char_poly(element_operator(small(), e, 4));
    const XPoly p3 = char_poly(element_operator(small(), e, 3));
    const PolygonCertificate poly4 = polygon_certificate(p4, Rational(1));
    const ResultantCertificate res4 = resultant_certificate(p4, Rational(1));
    const ResultantCertificate res3 = resultant_certificate(p3, Rational(1));
    const bool ok = poly4.verdict == Verdict::semisimple && res4.verdict == Verdict::semisimple
                    && res3.verdict == Verdict::inconclusive;
    return {ok, "order 4: polygon " + to_string(poly4.verdict) + ", resultant " + to_string(res4.verdict) + " ("
                    + res4.valuation.to_string() + "); order 3: resultant " + to_string(res3.verdict)};
}

Outcome squarefree()
{
    const XPoly p = char_poly(gamma_matrix(boot(2)));
    const SquarefreeProfile sp = squarefree_profile(p.t_slice_at(0, Rational(1)));
    std::size_t simple = 0;
    std::size_t doubled = 0;
    for (const auto &[mult, deg] : sp.factors) {
        (mult == 1 ? simple : doubled) += mult == 1 || mult == 2 ? deg : 0;
    }
    const bool ok = sp.gcd_degree == 1 && simple == 10 && doubled == 1 && sp.factors.size() == 2;
    return {ok, "deg gcd(P0, P0') = " + std::to_string(sp.gcd_degree) + "; " + std::to_string(simple)
                    + " simple roots, " + std::to_string(doubled) + " double"};
}

// Randomized and structural checks that do not depend on printed values.
Outcome properties()
{
    std::vector<std::string> failed;
    std::size_t checks = 0;
    auto expect = [&](bool ok, const std::string &what) {
        ++checks;
        if (!ok) {
            failed.push_back(what);
        }
    };
    const AlgebraSpec &s = small();
    const std::size_t n = s.dim();

    // Ring laws on random elements.
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> c(-5, 5);
    std::uniform_int_distribution<int> e(0, 2);
    auto random_element = [&] {
        QVector v(n);
        for (auto &x : v) {
            x = QPoly::monomial(make_rational(c(rng), 1 + e(rng)), e(rng));
        }
        return v;
    };
    auto apply = [](const QMatrix &m, const QVector &v) { return (m * QMatrix::from_columns({v})).column(0); };
    for (int trial = 0; trial < 25; ++trial) {
        const QVector x = random_element();
        const QVector y = random_element();
        const QMatrix a = multiplication_matrix(s, x);
        const QMatrix b = multiplication_matrix(s, y);
        expect(apply(a, y) == apply(b, x), "random elements commute");
        expect(multiplication_matrix(s, apply(a, y)) == a * b, "random triples associate");
        expect(apply(a, s.basis_vector(s.unit())) == x, "unit acts trivially");
    }

    // Char poly contracts: x^(n-1) coefficient is -trace, constant is (-1)^n det.
    for (std::size_t order : {2, 3}) {
        const SeriesMatrix g = gamma_matrix(boot(order));
        const XPoly p = char_poly(g);
        TSeries tr;
        for (std::size_t i = 0; i < n; ++i) {
            tr += g(i, i);
        }
        expect(p.coeff(n - 1).equal_mod(-tr, order), "charpoly trace contract");
        expect(p.coeff(0).equal_mod(determinant(g), order), "charpoly determinant contract (n even)");
        expect(char_poly_division_free(g) == p, "Faddeev-LeVerrier agrees with Berkowitz");
    }

    // Polygon bookkeeping: multiplicities add up to the degree; for an exact
    // last coefficient the slopes times lengths add up to its valuation.
    for (std::size_t order : {2, 3, 4}) {
        const XPoly p = char_poly(element_operator(s, ElementChoice::parse("euler"), order));
        const NewtonPolygon np = newton_polygon(p, Rational(1));
        std::size_t total = 0;
        Rational height(0);
        for (const auto &r : np.root_valuations()) {
            total += r.multiplicity;
        }
        for (const auto &seg : np.segments) {
            height += seg.slope * Rational(static_cast<unsigned long>(seg.length));
        }
        expect(total == np.degree, "polygon multiplicities sum to degree");
        expect(np.vertices.empty() || height == np.vertices.back().value - np.vertices.front().value,
               "polygon slopes integrate to vertex heights");
    }

    // Deformed product for N = 2..6: commutation, consistency, order stability.
    for (std::size_t order = 2; order <= 6; ++order) {
        const DeformedProduct &dp = boot(order);
        const SeriesMatrix m12 = dp.m1_tilde * dp.m2_tilde;
        const SeriesMatrix m21 = dp.m2_tilde * dp.m1_tilde;
        expect(equal_mod(m12, m21, order), "M1~ M2~ = M2~ M1~ mod t^" + std::to_string(order));
        expect(verify_deformed(s, dp).empty(), "verify_deformed at order " + std::to_string(order));
        expect(equal_mod(boot(order).m2_tilde, boot(order - 1).m2_tilde, order - 1),
               "order stability of M2~ at " + std::to_string(order));
        expect(equal_mod(boot(order).m1_tilde, boot(order - 1).m1_tilde, order), "order stability of M1~ at "
                                                                                     + std::to_string(order));
    }

    // Spec-file round trip.
    const std::string text = dump_spec(s);
    expect(parse_spec(text) == s, "spec round trip");
    expect(dump_spec(parse_spec(text)) == text, "spec dump is stable");

    std::string detail = std::to_string(checks - failed.size()) + "/" + std::to_string(checks) + " checks";
    if (!failed.empty()) {
        detail += "; first failure: " + failed.front();
    }
    return {failed.empty(), detail};
}

Outcome guard()
{
    const std::size_t limit = max_bootstrap_order(small());
    try {
        bootstrap(small(), 7);
    } catch (const BootstrapRefused &e) {
        const std::string msg = e.what();
        const bool ok = limit == 6 && msg.find("9-point invariant") != std::string::npos
                        && msg.find("<D2^9>") != std::string::npos;
        return {ok, "max order " + std::to_string(limit) + "; bootstrap(7) refused: " + msg};
    }
    return {false, "bootstrap(7) was not refused"};
}

} // namespace

int main()
{
    const auto start = std::chrono::steady_clock::now();
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"small-ring axioms", axioms},
        {"character table", characters},
        {"nilpotent witness", nilpotent},
        {"gamma polynomial", gamma_poly},
        {"Euler polynomial", euler_poly},
        {"Newton polygons", polygons},
        {"Euler spectrum", euler_spectrum},
        {"squarefree profile", squarefree},
        {"property suites", properties},
        {"bootstrap guard", guard},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += o.pass ? 0 : 1;
        std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << ": " << o.detail
                  << std::endl;
    }

    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = seconds < kRuntimeBudget;
    std::ostringstream t;
    t.precision(2);
    t << std::fixed << seconds;
    std::cout << "runtime " << t.str() << " s (budget " << kRuntimeBudget << " s)" << (in_budget ? "" : " EXCEEDED")
              << '\n';
    std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size() << " criteria pass\n";
    return failures == 0 && in_budget ? 0 : 1;
}
