#include <bigqh/ig26_model.hpp>

#include <bigqh/xpoly.hpp>

#include <stdexcept>

namespace bigqh::ig26
{

namespace
{

struct Term {
    long num;
    long den;
    int q_power;
    const char *label;
};

struct Product {
    const char *left;
    const char *right;
    std::vector<Term> terms;
};

// Small quantum products with D1, D2 and D3. Products with the unit and the
// ones obtained by commutativity (D2 * D1, D3 * D1) are filled in below.
const std::vector<Product> &generator_tables()
{
    static const std::vector<Product> tables = {
        {"1", "1", {{1, 1, 0, "2"}, {1, 1, 0, "1,1"}}},
        {"1", "2", {{1, 1, 0, "3"}, {1, 1, 0, "2,1"}}},
        {"1", "1,1", {{1, 1, 0, "2,1"}}},
        {"1", "3", {{2, 1, 0, "4"}, {1, 1, 0, "3,1"}}},
        {"1", "2,1", {{1, 1, 0, "4"}, {2, 1, 0, "3,1"}}},
        {"1", "4", {{1, 1, 0, "4,1"}, {1, 1, 1, "0"}}},
        {"1", "3,1", {{1, 1, 0, "4,1"}, {1, 1, 0, "3,2"}}},
        {"1", "4,1", {{1, 1, 0, "4,2"}, {1, 1, 1, "1"}}},
        {"1", "3,2", {{1, 1, 0, "4,2"}}},
        {"1", "4,2", {{1, 1, 0, "4,3"}, {1, 1, 1, "2"}}},
        {"1", "4,3", {{1, 1, 1, "3"}}},

        {"2", "2", {{2, 1, 0, "4"}, {2, 1, 0, "3,1"}}},
        {"2", "1,1", {{1, 1, 0, "4"}, {1, 1, 0, "3,1"}}},
        {"2", "3", {{2, 1, 0, "4,1"}, {1, 1, 0, "3,2"}, {1, 1, 1, "0"}}},
        {"2", "2,1", {{2, 1, 0, "4,1"}, {1, 1, 0, "3,2"}, {1, 1, 1, "0"}}},
        {"2", "4", {{1, 1, 0, "4,2"}, {1, 1, 1, "1"}}},
        {"2", "3,1", {{1, 1, 0, "4,2"}, {1, 1, 1, "1"}}},
        {"2", "4,1", {{1, 1, 0, "4,3"}, {1, 1, 1, "2"}, {1, 1, 1, "1,1"}}},
        {"2", "3,2", {{1, 1, 1, "2"}}},
        {"2", "4,2", {{1, 1, 1, "3"}, {1, 1, 1, "2,1"}}},
        {"2", "4,3", {{1, 1, 1, "4"}, {1, 1, 1, "3,1"}}},

        {"3", "2", {{2, 1, 0, "4,1"}, {1, 1, 0, "3,2"}, {1, 1, 1, "0"}}},
        {"3", "1,1", {{1, 1, 0, "4,1"}, {1, 1, 1, "0"}}},
        {"3", "3", {{2, 1, 0, "4,2"}, {1, 1, 1, "1"}}},
        {"3", "2,1", {{1, 1, 0, "4,2"}, {2, 1, 1, "1"}}},
        {"3", "4", {{1, 1, 0, "4,3"}, {1, 1, 1, "2"}}},
        {"3", "3,1", {{1, 1, 1, "2"}, {1, 1, 1, "1,1"}}},
        {"3", "4,1", {{1, 1, 1, "2,1"}, {1, 1, 1, "3"}}},
        {"3", "3,2", {{1, 1, 1, "2,1"}}},
        {"3", "4,2", {{2, 1, 1, "3,1"}, {1, 1, 1, "4"}}},
        {"3", "4,3", {{1, 1, 1, "4,1"}, {1, 1, 1, "3,2"}}},
    };
    return tables;
}

std::size_t index(const char *name)
{
    const auto &b = basis();
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i].name == name) {
            return i;
        }
    }
    throw std::logic_error(std::string("IG(2,6) table refers to unknown class ") + name);
}

// Column `right` of M_left from the tables, using the unit and commutativity
// for products the tables do not list.
QVector table_product(std::size_t left, std::size_t right)
{
    const auto &b = basis();
    QVector v(b.size());
    if (right == 0) {
        v[left] = QPoly(1);
        return v;
    }
    if (left == 0) {
        v[right] = QPoly(1);
        return v;
    }
    for (const auto &p : generator_tables()) {
        const std::size_t l = index(p.left);
        const std::size_t r = index(p.right);
        if ((l == left && r == right) || (l == right && r == left)) {
            for (const auto &t : p.terms) {
                v[index(t.label)] += QPoly::monomial(make_rational(t.num, t.den), t.q_power);
            }
            return v;
        }
    }
    throw std::logic_error("IG(2,6) tables miss the product D" + b[left].name + " * D" + b[right].name);
}

QMatrix generator_matrix(const char *name)
{
    const std::size_t l = index(name);
    std::vector<QVector> cols;
    for (std::size_t j = 0; j < basis().size(); ++j) {
        cols.push_back(table_product(l, j));
    }
    return QMatrix::from_columns(cols);
}

RatPoly var_power(const Rational &c, std::size_t k)
{
    return RatPoly::monomial(c, k);
}

} // namespace

const std::vector<BasisLabel> &basis()
{
    static const std::vector<BasisLabel> b = {
        {"0", 0}, {"1", 1},   {"2", 2},   {"1,1", 2}, {"3", 3},   {"2,1", 3},
        {"4", 4}, {"3,1", 4}, {"4,1", 5}, {"3,2", 5}, {"4,2", 6}, {"4,3", 7},
    };
    return b;
}

AlgebraSpec build_small_qh()
{
    const std::size_t n = basis().size();
    const QPoly q = QPoly::q();
    const QMatrix m0 = QMatrix::identity(n);
    const QMatrix m1 = generator_matrix("1");
    const QMatrix m2 = generator_matrix("2");
    const QMatrix m3 = generator_matrix("3");

    const QMatrix m11 = m1 * m1 - m2;
    const QMatrix m21 = m1 * m2 - m3;
    const QMatrix m31 = QPoly(make_rational(-1, 3)) * (m1 * (m3 - QPoly(2) * m21));
    const QMatrix m4 = m1 * m21 - QPoly(2) * m31;
    const QMatrix m41 = m1 * m4 - q * m0;
    const QMatrix m32 = m1 * m31 - m41;
    const QMatrix m42 = m1 * m41 - q * m1;
    const QMatrix m43 = m1 * m42 - q * m2;

    // Basis order: 0, 1, 2, 1,1, 3, 2,1, 4, 3,1, 4,1, 3,2, 4,2, 4,3.
    std::vector<QMatrix> structure = {m0, m1, m2, m11, m3, m21, m4, m31, m41, m32, m42, m43};

    Presentation pres;
    pres.generators = {"1", "2", "3"};
    pres.derived = {
        {"1,1", "M1^2 - M2"},
        {"2,1", "M1*M2 - M3"},
        {"3,1", "-1/3*M1*(M3 - 2*M2,1)"},
        {"4", "M1*M2,1 - 2*M3,1"},
        {"4,1", "M1*M4 - q*M0"},
        {"3,2", "M1*M3,1 - M4,1"},
        {"4,2", "M1*M4,1 - q*M1"},
        {"4,3", "M1*M4,2 - q*M2"},
    };

    // -K_X = 5 D1 gives deg q = 5; deg t = 1 - deg D2 = -1.
    AlgebraSpec spec(basis(), 5, -1, std::move(structure), "0", "4,3", std::string("2"), std::move(pres));

    ViolationList bad = verify_axioms(spec);
    const ViolationList frob = verify_frobenius(spec);
    bad.insert(bad.end(), frob.begin(), frob.end());
    if (!bad.empty()) {
        throw SpecError("IG(2,6) tables fail verification (" + std::to_string(bad.size())
                        + " violations), first: " + bad.front().check + ": " + bad.front().detail);
    }
    return spec;
}

QVector nilpotent_c0(const AlgebraSpec &spec)
{
    const QPoly q = QPoly::q();
    return element(spec, {{QPoly(1), "4,3"}, {-q, "2"}, {q, "1,1"}});
}

const CharacterTable &character_table()
{
    static const CharacterTable table = [] {
        const Rational one(1);
        const Rational third = make_rational(1, 3);
        const Rational ninth = make_rational(1, 9);
        CharacterTable t;
        // Values listed in basis order 0, 1, 2, 1,1, 3, 2,1, 4, 3,1, 4,1, 3,2, 4,2, 4,3.
        t.components[0] = {"Z0", "e", var_power(one, 2),
                           {RatPoly(1), RatPoly(), var_power(one, 1), var_power(-one, 1), RatPoly(), RatPoly(),
                            RatPoly(), RatPoly(), RatPoly(-1), RatPoly(1), RatPoly(), var_power(-one, 1)}};
        t.components[1] = {"Z1", "s", var_power(one, 5) + RatPoly(1),
                           {RatPoly(1), var_power(one, 1), RatPoly(), var_power(one, 2), var_power(-one, 3),
                            var_power(one, 3), var_power(-one, 4), var_power(one, 4), RatPoly(), RatPoly(-1),
                            var_power(-one, 1), var_power(-one, 2)}};
        t.components[2] = {"Z2", "u", var_power(one, 5) - RatPoly(27),
                           {RatPoly(1), var_power(one, 1), var_power(2 * third, 2), var_power(third, 2),
                            var_power(third, 3), var_power(third, 3), var_power(ninth, 4), var_power(ninth, 4),
                            RatPoly(2), RatPoly(1), var_power(one, 1), var_power(third, 2)}};
        return t;
    }();
    return table;
}

ViolationList verify_character_table(const AlgebraSpec &spec)
{
    ViolationList out;
    const AlgebraSpec s = spec.specialized(Rational(1));
    const std::size_t n = s.dim();
    const CharacterTable &table = character_table();
    if (n != basis().size()) {
        return {{"character-table", "algebra has dimension " + std::to_string(n) + ", table expects 12"}};
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (s.basis()[i].name != basis()[i].name) {
            return {{"character-table", "basis label D" + s.basis()[i].name + " does not match table order"}};
        }
    }

    for (const auto &comp : table.components) {
        const auto reduce = [&comp](const RatPoly &p) { return divmod(p, comp.modulus).second; };
        if (!(comp.values[s.unit()] == RatPoly(1))) {
            out.push_back({"character-table", comp.name + ": unit does not map to 1"});
        }
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = a; b < n; ++b) {
                const RatPoly lhs = reduce(comp.values[a] * comp.values[b]);
                RatPoly rhs;
                for (std::size_t c = 0; c < n; ++c) {
                    const Rational k = s.structure(a)(c, b).coeff(0);
                    if (sgn(k) != 0) {
                        rhs += comp.values[c] * k;
                    }
                }
                rhs = reduce(rhs);
                if (!(lhs == rhs)) {
                    out.push_back({"character-table", comp.name + ": value(D" + s.basis()[a].name + ") * value(D"
                                                          + s.basis()[b].name + ") = " + lhs.to_string(comp.variable)
                                                          + " but the product maps to "
                                                          + rhs.to_string(comp.variable)});
                }
            }
        }
    }

    // The three rows together must identify A with A0 x A1 x A2: the 12x12
    // matrix of coordinates (in the monomial bases of the components) is
    // invertible.
    RationalMatrix coords(n, n);
    std::size_t row = 0;
    for (const auto &comp : table.components) {
        const auto d = static_cast<std::size_t>(comp.modulus.degree());
        for (std::size_t k = 0; k < d; ++k, ++row) {
            for (std::size_t b = 0; b < n && row < n; ++b) {
                coords(row, b) = comp.values[b].coeff(k);
            }
        }
    }
    if (row != n || rank(coords) != n) {
        out.push_back({"character-table", "the rows do not identify the algebra with A0 x A1 x A2"});
    }

    const RatPoly x = RatPoly::x();
    const RatPoly expected
        = x * x * (RatPoly::monomial(Rational(1), 5) + RatPoly(1)) * (RatPoly::monomial(Rational(1), 5) - RatPoly(27));
    const RatPoly actual(char_poly_faddeev(to_rational(s.structure(s.index_of("1")))));
    if (!(actual == expected)) {
        out.push_back({"character-table",
                       "charpoly(M1 at q=1) = " + actual.to_string() + ", expected " + expected.to_string()});
    }
    return out;
}

GWVanishingVerdict dimension_axiom_verdict(int dim_x, int q_degree, int insertion_degree, int n)
{
    if (n < 3) {
        throw std::invalid_argument("Gromov-Witten invariants need at least 3 insertions, got "
                                    + std::to_string(n));
    }
    const std::string equation = std::to_string(n) + " + " + std::to_string(dim_x - 3) + " + "
                                 + std::to_string(q_degree) + "d = " + std::to_string(n * insertion_degree);
    const int rest = n * (insertion_degree - 1) - (dim_x - 3);
    if (rest < 0 || rest % q_degree != 0) {
        return {GWVanishingVerdict::Kind::zero, "dimension axiom: " + equation + " has no solution d >= 0"};
    }
    const int d = rest / q_degree;
    if (d == 0 && n >= 4) {
        return {GWVanishingVerdict::Kind::zero,
                "degree 0 (d = 0 solves " + equation + "); invariants of degree 0 with n >= 4 points vanish"};
    }
    return {GWVanishingVerdict::Kind::unknown, "dimension axiom admits d = " + std::to_string(d) + " in " + equation};
}

GWVanishingVerdict gw_power_vanishing(int n)
{
    GWVanishingVerdict v = dimension_axiom_verdict(7, 5, 2, n);
    if (n == 3 || n == 4) {
        v.reason += "; <D2,D2,D2> = <D2,D2,D2,D2> = 0 is the standard vanishing used for IG(2,6)";
    }
    return v;
}

} // namespace bigqh::ig26
