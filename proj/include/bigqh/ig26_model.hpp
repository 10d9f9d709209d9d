#ifndef BIGQH_IG26_MODEL_HPP
#define BIGQH_IG26_MODEL_HPP

#include <bigqh/graded_algebra.hpp>
#include <bigqh/ratpoly.hpp>

#include <array>
#include <string>
#include <vector>

namespace bigqh::ig26
{

// Basis of H^*(IG(2,6)) in table order.
const std::vector<BasisLabel> &basis();

// Small quantum cohomology over Q[q]: M_1, M_2, M_3 from the product tables,
// the other matrices from the recurrences. Throws SpecError if the result
// fails verify_axioms or verify_frobenius.
AlgebraSpec build_small_qh();

// c0 = D4,3 - q D2 + q D1,1, the global nilpotent.
QVector nilpotent_c0(const AlgebraSpec &spec);

// One connected component Z_i = Spec(Q[var]/(modulus)) of the q = 1 algebra
// together with the value of every basis class on it.
struct ComponentRing {
    std::string name;
    std::string variable;
    RatPoly modulus;
    std::vector<RatPoly> values; // indexed like basis()
};

struct CharacterTable {
    std::array<ComponentRing, 3> components;
};

// Z0 over Q[e]/e^2, Z1 over Q[s]/(s^5+1), Z2 over Q[u]/(u^5-27).
const CharacterTable &character_table();

// Checks each table row is a ring homomorphism out of the q = 1 algebra,
// that the rows jointly give an isomorphism onto A0 x A1 x A2, and that
// charpoly(M_1 at q=1) = x^2 (x^5 + 1)(x^5 - 27). The spec is specialized at
// q = 1 internally.
ViolationList verify_character_table(const AlgebraSpec &spec);

struct GWVanishingVerdict {
    enum class Kind { zero, unknown };
    Kind kind = Kind::unknown;
    std::string reason;

    bool is_zero() const
    {
        return kind == Kind::zero;
    }
};

// Dimension axiom for the n-pointed invariant <D^n> of a class of degree
// `insertion_degree` on a variety of dimension `dim_x` with deg q = q_degree:
// n + dim_x - 3 + q_degree * d = n * insertion_degree. Throws for n < 3.
GWVanishingVerdict dimension_axiom_verdict(int dim_x, int q_degree, int insertion_degree, int n);

// <D2, ..., D2> (n insertions) on IG(2,6): Zero for n = 3, 4 and whenever
// n != 4 + 5d; Unknown for n = 9, 14, ...
GWVanishingVerdict gw_power_vanishing(int n);

} // namespace bigqh::ig26

#endif
