#include <bigqh/matrix.hpp>
#include <bigqh/qpoly.hpp>
#include <bigqh/ratpoly.hpp>
#include <bigqh/series_matrix.hpp>
#include <bigqh/tseries.hpp>
#include <bigqh/xpoly.hpp>

#include <doctest.h>

#include <random>

using namespace bigqh;

namespace
{

const QPoly q = QPoly::q();

TSeries series(std::vector<QPoly> c, std::size_t order)
{
    return TSeries(std::move(c), order);
}

QPoly random_qpoly(std::mt19937 &rng)
{
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> deg(0, 2);
    QPoly p;
    const int d = deg(rng);
    for (int k = 0; k <= d; ++k) {
        p += QPoly::monomial(Rational(coeff(rng)), k);
    }
    return p;
}

TSeries random_series(std::mt19937 &rng, std::size_t order)
{
    std::vector<QPoly> c(order);
    for (auto &x : c) {
        x = random_qpoly(rng);
    }
    return TSeries(std::move(c), order);
}

SeriesMatrix random_series_matrix(std::mt19937 &rng, std::size_t n, std::size_t order)
{
    SeriesMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = random_series(rng, order);
        }
    }
    return m;
}

} // namespace

TEST_CASE("rational parsing and printing")
{
    CHECK(parse_rational("263671875") == Rational(263671875));
    CHECK(parse_rational(" -2/6 ") == make_rational(-1, 3));
    CHECK(to_string(make_rational(4, -6)) == "-2/3");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("q"), std::invalid_argument);
    // 263671875^2 stays exact.
    const Rational big = Rational(263671875) * Rational(263671875);
    CHECK(to_string(big) == "69522857666015625");
}

TEST_CASE("QPoly basics")
{
    const QPoly p = q * q + QPoly(3) * q;
    CHECK(p.to_string() == "q^2 + 3q");
    CHECK(p.low_degree() == 1);
    CHECK(p.high_degree() == 2);
    CHECK(p.q_log_derivative() == QPoly(2) * q * q + QPoly(3) * q);
    CHECK(QPoly(5).q_log_derivative().is_zero());
    CHECK(p.evaluate(Rational(2)) == 10);

    const QPoly inv = (QPoly(6) * q * q * q).unit_inverse();
    CHECK(inv == QPoly::monomial(make_rational(1, 6), -3));
    CHECK_FALSE(inv.is_polynomial());
    CHECK(inv * QPoly(6) * q * q * q == QPoly(1));
    CHECK_THROWS_AS(p.unit_inverse(), std::domain_error);
    CHECK_THROWS_AS(inv.evaluate(Rational(0)), std::domain_error);
}

TEST_CASE("series_add examples")
{
    // (1 + t mod t^3) + (-1 mod t^2) = t mod t^2
    const TSeries a = series({1, 1}, 3);
    const TSeries b = series({-1}, 2);
    CHECK(a + b == series({0, 1}, 2));
    // (q mod t^2) + (0 mod t^5) = q mod t^2
    CHECK(series({q}, 2) + TSeries::zero(5) == series({q}, 2));
    // (t + t^2 mod t^3) + (t mod t^3) = 2t + t^2 mod t^3
    CHECK(series({0, 1, 1}, 3) + series({0, 1}, 3) == series({0, 2, 1}, 3));
}

TEST_CASE("series_mul examples")
{
    // (1 + t)(1 - t) mod t^2 = 1 mod t^2
    CHECK(series({1, 1}, 2) * series({1, -1}, 2) == series({1}, 2));
    // (t mod t^3)^2: valuation shifts precision to t^4.
    const TSeries t3 = series({0, 1}, 3);
    const TSeries sq = t3 * t3;
    CHECK(sq.order() == 4);
    CHECK(sq == series({0, 0, 1}, 4));
    CHECK(sq.order() >= std::min(t3.order(), t3.order()));
    // q * q^2 = q^3
    CHECK(series({q}, 2) * series({q * q}, 2) == series({q * q * q}, 2));
    // Multiplying by the exact monomial t adds one to the order.
    CHECK((TSeries::t_power(1) * series({q, 1}, 2)).order() == 3);
    // Exact zero absorbs everything.
    CHECK((TSeries() * series({1}, 2)).is_exact());
}

TEST_CASE("q_log_derivative, t_integrate and t_valuation examples")
{
    CHECK(q_log_derivative(TSeries(q * q)) == TSeries(QPoly(2) * q * q));
    CHECK(q_log_derivative(TSeries(5L)).is_zero());
    const TSeries s = series({q + QPoly(3) * q * q, q}, 4);
    CHECK(q_log_derivative(s) == series({q + QPoly(6) * q * q, q}, 4));

    const QPoly a = QPoly(7) * q;
    const QPoly b = QPoly(3);
    CHECK(t_integrate(series({a, b}, 2)) == series({0, a, b * make_rational(1, 2)}, 3));
    CHECK(t_integrate(TSeries::zero(2)) == TSeries::zero(3));
    CHECK(t_integrate(series({1}, 1)) == series({0, 1}, 2));

    CHECK(t_valuation(series({0, 0, 1, -1}, 4)) == Valuation::exact(Rational(2)));
    CHECK(t_valuation(TSeries::zero(3)) == Valuation::at_least(3));
    CHECK(t_valuation(series({q}, 2)) == Valuation::exact(Rational(0)));
    CHECK(t_valuation(TSeries()).is_infinite());
    CHECK_THROWS_AS((void)series({1}, 2).coeff(2), std::out_of_range);
}

TEST_CASE("ring laws hold as truncated identities")
{
    std::mt19937 rng(20261016);
    for (int iter = 0; iter < 50; ++iter) {
        std::uniform_int_distribution<int> ord(1, 5);
        const TSeries a = random_series(rng, static_cast<std::size_t>(ord(rng)));
        const TSeries b = random_series(rng, static_cast<std::size_t>(ord(rng)));
        const TSeries c = random_series(rng, static_cast<std::size_t>(ord(rng)));
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        const TSeries lhs = a * (b + c);
        const TSeries rhs = a * b + a * c;
        const std::size_t n = std::min(lhs.order(), rhs.order());
        CHECK(lhs.equal_mod(rhs, n));
        CHECK(((a * b) * c).equal_mod(a * (b * c), std::min(((a * b) * c).order(), (a * (b * c)).order())));
    }
}

TEST_CASE("t_integrate is a right inverse of d/dt")
{
    std::mt19937 rng(7);
    for (int iter = 0; iter < 20; ++iter) {
        const TSeries a = random_series(rng, 4);
        const TSeries back = a.t_integrate().t_derivative();
        CHECK(back == a);
    }
}

TEST_CASE("valuation is additive below the result order")
{
    std::mt19937 rng(11);
    for (int iter = 0; iter < 50; ++iter) {
        const TSeries a = TSeries::t_power(iter % 3) * random_series(rng, 5);
        const TSeries b = TSeries::t_power(iter % 2) * random_series(rng, 4);
        const TSeries ab = a * b;
        const Valuation va = a.valuation();
        const Valuation vb = b.valuation();
        if (va.is_exact() && vb.is_exact() && va.value() + vb.value() < static_cast<unsigned long>(ab.order())) {
            CHECK(ab.valuation() == Valuation::exact(va.value() + vb.value()));
        }
    }
}

TEST_CASE("matrix arithmetic")
{
    std::mt19937 rng(3);
    const SeriesMatrix m = random_series_matrix(rng, 4, 3);
    CHECK(SeriesMatrix::identity(4) * m == m);
    for (std::size_t j = 0; j < 4; ++j) {
        SeriesVector e(4);
        e[j] = TSeries(1L);
        CHECK(mat_apply(m, e) == m.column(j));
    }
    const SeriesMatrix ta = TSeries::t_power(1) * random_series_matrix(rng, 3, 2);
    const SeriesMatrix tb = TSeries::t_power(1) * random_series_matrix(rng, 3, 2);
    CHECK(matrix_order(ta) == 3);
    CHECK(matrix_order(ta * tb) == 4);
    CHECK_THROWS_AS(m * SeriesMatrix(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(mat_apply(m, SeriesVector(2)), std::invalid_argument);
    CHECK_THROWS_AS(m + SeriesMatrix(3, 3), std::invalid_argument);
}

TEST_CASE("mat_inverse")
{
    CHECK(mat_inverse(SeriesMatrix::identity(5)) == SeriesMatrix::identity(5));

    SeriesMatrix d(2, 2);
    d(0, 0) = series({1, 1}, 2);
    d(1, 1) = series({1, 1}, 2);
    d(0, 1) = TSeries::zero(2);
    d(1, 0) = TSeries::zero(2);
    const SeriesMatrix inv = mat_inverse(d);
    CHECK(inv(0, 0) == series({1, -1}, 2));
    CHECK(inv(1, 1) == series({1, -1}, 2));
    CHECK(inv(0, 1).is_zero());

    SeriesMatrix sing(2, 2);
    sing(0, 0) = series({0, 1}, 3);
    sing(1, 1) = series({1}, 3);
    CHECK_THROWS_WITH_AS(mat_inverse(sing), doctest::Contains("not invertible at t=0"), NotInvertible);

    // Monomial determinant: invertible over Q[q, 1/q].
    QMatrix qm(2, 2);
    qm(0, 0) = q;
    qm(0, 1) = QPoly(1);
    qm(1, 1) = QPoly(2);
    CHECK(inverse(qm) * qm == QMatrix::identity(2));
    qm(1, 0) = QPoly(1);
    CHECK_THROWS_AS(inverse(qm), NotInvertible); // det = 2q - 1

    std::mt19937 rng(5);
    for (int iter = 0; iter < 10; ++iter) {
        SeriesMatrix m = random_series_matrix(rng, 4, 4);
        // Force a unimodular constant term.
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < 4; ++j) {
                std::vector<QPoly> c{QPoly(i == j ? 1 : (i < j ? static_cast<long>(iter % 3) : 0))};
                for (std::size_t k = 1; k < 4; ++k) {
                    c.push_back(m(i, j).coeff(k));
                }
                m(i, j) = TSeries(std::move(c), 4);
            }
        }
        const SeriesMatrix mi = mat_inverse(m);
        CHECK(equal_mod(m * mi, SeriesMatrix::identity(4), 4));
        CHECK(equal_mod(mi * m, SeriesMatrix::identity(4), 4));
    }
}

TEST_CASE("char_poly examples")
{
    const XPoly id = char_poly(SeriesMatrix::identity(2));
    CHECK(id == XPoly({TSeries(1L), TSeries(-2L), TSeries(1L)}));

    // Companion matrix of x^3 - 5.
    SeriesMatrix comp(3, 3);
    comp(1, 0) = TSeries(1L);
    comp(2, 1) = TSeries(1L);
    comp(0, 2) = TSeries(5L);
    CHECK(char_poly(comp) == XPoly({TSeries(-5L), TSeries(), TSeries(), TSeries(1L)}));
    CHECK_THROWS_AS(char_poly(SeriesMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("char_poly contracts: Faddeev-LeVerrier equals Berkowitz, trace and det, reduction mod t")
{
    std::mt19937 rng(17);
    for (int iter = 0; iter < 8; ++iter) {
        const std::size_t n = 2 + static_cast<std::size_t>(iter % 4);
        const SeriesMatrix m = random_series_matrix(rng, n, 3);
        const XPoly fl = char_poly(m);
        const XPoly bk = char_poly_division_free(m);
        REQUIRE(fl.degree() == static_cast<long>(n));
        REQUIRE(bk.degree() == static_cast<long>(n));
        for (std::size_t k = 0; k <= n; ++k) {
            CHECK(fl.coeff(k).equal_mod(bk.coeff(k), 3));
        }
        CHECK(fl.coeff(n) == TSeries(1L));
        CHECK(fl.coeff(n - 1).equal_mod(-trace(m), 3));

        // Reduction modulo t commutes with char_poly.
        const XPoly reduced = char_poly(truncated(m, 1));
        for (std::size_t k = 0; k <= n; ++k) {
            CHECK(fl.coeff(k).equal_mod(reduced.coeff(k), 1));
        }
    }
    // Determinant contract against an exact rational Laplace expansion (3x3).
    RationalMatrix r(3, 3);
    const long vals[9] = {2, -1, 3, 0, 4, 5, 1, 1, -2};
    for (std::size_t k = 0; k < 9; ++k) {
        r(k / 3, k % 3) = vals[k];
    }
    const Rational laplace = Rational(2) * (4 * -2 - 5 * 1) - Rational(-1) * (0 * -2 - 5 * 1) + Rational(3) * (0 - 4);
    const std::vector<Rational> c = char_poly_faddeev(r);
    CHECK(c[0] == -laplace);
    CHECK(determinant(r) == laplace);
    CHECK(char_poly_berkowitz(r) == c);
}

TEST_CASE("resultant sign convention and examples")
{
    const Rational a = 3;
    const Rational b = make_rational(-2, 5);
    const XPoly xa({TSeries(-a), TSeries(1L)});
    const XPoly xb({TSeries(-b), TSeries(1L)});
    CHECK(resultant(xa, xb) == TSeries(a - b));

    const XPoly x2({TSeries(), TSeries(), TSeries(1L)});
    const XPoly x1({TSeries(1L), TSeries(1L)});
    CHECK(resultant(x2, x1) == TSeries(1L));
    CHECK_THROWS_AS(resultant(XPoly(), x1), std::invalid_argument);
}

TEST_CASE("RatPoly gcd and square-free decomposition")
{
    const RatPoly x = RatPoly::x();
    const RatPoly p = (x - RatPoly(1)) * (x - RatPoly(1)) * (x - RatPoly(2));
    CHECK(gcd(p, p.derivative()) == x - RatPoly(1));
    const auto sf = squarefree_decomposition(p);
    REQUIRE(sf.size() == 2);
    CHECK(sf[0].first == 1);
    CHECK(sf[0].second == x - RatPoly(2));
    CHECK(sf[1].first == 2);
    CHECK(sf[1].second == x - RatPoly(1));

    const auto [quot, rem] = divmod(p, x - RatPoly(2));
    CHECK(rem.is_zero());
    CHECK(quot == (x - RatPoly(1)) * (x - RatPoly(1)));
    CHECK(p.to_string() == "x^3 - 4x^2 + 5x - 2");
    CHECK(x.divide_by_x_power(1) == RatPoly(1));
    CHECK_THROWS_AS(p.divide_by_x_power(1), std::domain_error);
    CHECK_THROWS_AS(squarefree_decomposition(RatPoly()), std::domain_error);
}
