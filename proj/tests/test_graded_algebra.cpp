#include <bigqh/graded_algebra.hpp>

#include <doctest.h>

using namespace bigqh;

namespace
{

const QPoly q = QPoly::q();

// QH(P^2): basis 1, H, H^2 with H^3 = q, deg q = 3.
AlgebraSpec qh_p2()
{
    const std::vector<BasisLabel> b = {{"0", 0}, {"1", 1}, {"2", 2}};
    QMatrix mh(3, 3);
    mh(1, 0) = QPoly(1);
    mh(2, 1) = QPoly(1);
    mh(0, 2) = q;
    QMatrix mh2 = mh * mh;
    return AlgebraSpec(b, 3, 0, {QMatrix::identity(3), mh, mh2}, "0", "2");
}

bool has_check(const ViolationList &v, const std::string &check)
{
    for (const auto &x : v) {
        if (x.check == check) {
            return true;
        }
    }
    return false;
}

} // namespace

TEST_CASE("projective plane satisfies the axioms")
{
    const AlgebraSpec s = qh_p2();
    CHECK(verify_axioms(s).empty());
    CHECK(verify_frobenius(s).empty());
    const RationalMatrix eta = derive_pairing(s);
    CHECK(eta(0, 2) == 1);
    CHECK(eta(1, 1) == 1);
    CHECK(eta(0, 0) == 0);
    CHECK(radical_dimension(s, Rational(1)) == 0);
    CHECK(radical_dimension(s, Rational(0)) == 2);
    CHECK(is_nilpotent(s.specialized(Rational(0)), s.basis_vector("1")));
    CHECK_FALSE(is_nilpotent(s, s.basis_vector("1")));
}

TEST_CASE("constructor rejects malformed input")
{
    const std::vector<BasisLabel> b = {{"0", 0}, {"1", 1}};
    const std::vector<QMatrix> m = {QMatrix::identity(2), QMatrix(2, 2)};
    CHECK_THROWS_AS(AlgebraSpec(b, 2, 0, m, "x", "1"), SpecError);
    CHECK_THROWS_AS(AlgebraSpec(b, 2, 0, m, "1", "1"), SpecError);
    CHECK_THROWS_AS(AlgebraSpec(b, 0, 0, m, "0", "1"), SpecError);
    CHECK_THROWS_AS(AlgebraSpec(b, 2, 0, {QMatrix::identity(2)}, "0", "1"), SpecError);
    CHECK_THROWS_AS(AlgebraSpec({{"0", 0}, {"0", 1}}, 2, 0, m, "0", "0"), SpecError);
    CHECK_THROWS_AS(AlgebraSpec(b, 2, 0, {QMatrix::identity(2), QMatrix(3, 3)}, "0", "1"), SpecError);
}

TEST_CASE("mutations are reported")
{
    const AlgebraSpec s = qh_p2();

    SUBCASE("broken commutativity")
    {
        QMatrix m = s.structure(1);
        m(2, 2) += QPoly(1); // H * H^2 gains an H^2 term, H^2 * H does not
        const ViolationList v = verify_axioms(s.with_structure(1, m));
        CHECK(has_check(v, "commutativity"));
    }
    SUBCASE("broken grading")
    {
        QMatrix m1 = s.structure(1);
        m1(0, 2) = q * q;
        QMatrix m2 = s.structure(2);
        m2(1, 1) = q * q;
        const ViolationList v = verify_axioms(s.with_structure(1, m1).with_structure(2, m2));
        CHECK(has_check(v, "grading"));
        CHECK_FALSE(has_check(verify_axioms(s.with_structure(1, m1).with_structure(2, m2).specialized(Rational(2))),
                              "grading"));
    }
    SUBCASE("broken associativity")
    {
        QMatrix m2 = s.structure(2);
        m2(0, 2) = QPoly(0); // H^2 * H^2 loses its q H term but H * (H * H^2) keeps it
        m2(1, 2) = QPoly(0);
        const ViolationList v = verify_axioms(s.with_structure(2, m2));
        CHECK(has_check(v, "associativity"));
    }
    SUBCASE("broken unit")
    {
        QMatrix m0 = s.structure(0);
        m0(1, 1) = QPoly(2);
        CHECK(has_check(verify_axioms(s.with_structure(0, m0)), "unit"));
    }
    SUBCASE("degenerate pairing")
    {
        QMatrix m1 = s.structure(1);
        m1(2, 1) = QPoly(0);
        m1(1, 1) = QPoly(1);
        CHECK_THROWS_AS(derive_pairing(s.with_structure(1, m1)), SpecError);
        CHECK(has_check(verify_frobenius(s.with_structure(1, m1)), "pairing"));
    }
}

TEST_CASE("multiplication matrices and elements")
{
    const AlgebraSpec s = qh_p2();
    const QVector v = element(s, {{QPoly(2), "1"}, {q, "2"}});
    CHECK(describe(s, v) == "2 D1 + q D2");
    CHECK(multiplication_matrix(s, v) == QPoly(2) * s.structure(1) + q * s.structure(2));
    const SeriesVector sv = {TSeries(), TSeries(QPoly(1)), TSeries::t_power(1)};
    const SeriesMatrix sm = multiplication_matrix(s, sv);
    CHECK(t_coefficient(sm, 0) == s.structure(1));
    CHECK(t_coefficient(sm, 1) == s.structure(2));
    CHECK_THROWS_AS(multiplication_matrix(s, QVector(2)), std::invalid_argument);
    CHECK_THROWS_AS(element(s, {{QPoly(1), "7"}}), SpecError);
}

TEST_CASE("specialization commutes with products")
{
    const AlgebraSpec s = qh_p2();
    for (long k : {-2L, 0L, 3L}) {
        const Rational r(k);
        const AlgebraSpec sr = s.specialized(r);
        CHECK_FALSE(sr.graded());
        for (std::size_t a = 0; a < 3; ++a) {
            for (std::size_t b = 0; b < 3; ++b) {
                CHECK(specialize_q(s.structure(a) * s.structure(b), r) == sr.structure(a) * sr.structure(b));
            }
        }
    }
    CHECK(s == qh_p2());
    CHECK_FALSE(s == s.specialized(Rational(1)));
}
