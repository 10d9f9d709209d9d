#ifndef BIGQH_DEFORMATION_HPP
#define BIGQH_DEFORMATION_HPP

#include <bigqh/graded_algebra.hpp>
#include <bigqh/series_matrix.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bigqh
{

// Quantum multiplication at the point t*D_deform of the big quantum
// cohomology, reconstructed to finite t-order. h denotes the unique
// degree-1 class.
struct DeformedProduct {
    SeriesMatrix m1_tilde; // multiplication by h, known modulo t^(order+1)
    SeriesMatrix m2_tilde; // multiplication by D_deform, known modulo t^order
    std::size_t order = 0;
    // f_i = h^i for i < dim - 1, f_{dim-1} = D_deform, in D-coordinates.
    std::vector<SeriesVector> f_vectors;
    SeriesMatrix gram; // (f_i, f_j)
};

// Raised when the requested order needs a Gromov-Witten invariant that the
// dimension axiom does not kill.
class BootstrapRefused : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// M1 + q d/dq integral_0^t M2~ dt: the divisor equation for h with (h, beta) = 1.
// The result is known one order further than m2_tilde.
SeriesMatrix m1_from_m2(const QMatrix &m1, const SeriesMatrix &m2_tilde);

// Largest order the bootstrap accepts for `spec`: one more than the number of
// consecutive m >= 1 for which <D_deform^(m+3)> is known to vanish.
std::size_t max_bootstrap_order(const AlgebraSpec &spec);

// Iterates the f-basis reconstruction from M2~ = M2 (order 1) to order N.
// Throws BootstrapRefused past max_bootstrap_order, std::invalid_argument for
// N = 0 or a spec without a deformation direction or degree-1 class, and
// std::runtime_error if the f-basis degenerates or a consistency check fails.
DeformedProduct bootstrap(const AlgebraSpec &spec, std::size_t target_order);

// Commutativity, Frobenius symmetry of eta*M~, reduction to the small
// product, q-polynomiality and grading of both matrices.
ViolationList verify_deformed(const AlgebraSpec &spec, const DeformedProduct &dp);

// Terms c q^j t^m in row a, column b of an operator of degree `operator_degree`
// must satisfy operator_degree + deg b - deg a = j deg q + m deg t.
ViolationList check_grading(const AlgebraSpec &spec, const SeriesMatrix &m, int operator_degree,
                            const std::string &name);

// a M1~ + b M2~, known modulo t^min(order + 1, order) = t^order.
SeriesMatrix element_matrix(const DeformedProduct &dp, const Rational &a, const Rational &b);
// M1~ + M2~.
SeriesMatrix gamma_matrix(const DeformedProduct &dp);
// Euler field: deg(q) h + (1 - deg D_deform) t D_deform; known modulo t^(order+1).
SeriesMatrix euler_matrix(const AlgebraSpec &spec, const DeformedProduct &dp);

// The element whose multiplication operator is certified.
struct ElementChoice {
    enum class Kind { gamma, euler, custom };
    Kind kind = Kind::gamma;
    Rational a{1}; // custom: a h + b D_deform
    Rational b{1};

    // "gamma", "euler" or "custom:a,b" with rational a, b.
    static ElementChoice parse(const std::string &text);
    std::string name() const;
    // Degree of the operator when it is homogeneous.
    std::optional<int> operator_degree(const AlgebraSpec &spec) const;
};

// Bootstrap order after which the element's operator is known modulo t^order.
std::size_t bootstrap_order_for(const ElementChoice &e, std::size_t order);

// Operator of the element, truncated to exactly `order`; runs the bootstrap.
SeriesMatrix element_operator(const AlgebraSpec &spec, const ElementChoice &e, std::size_t order);
SeriesMatrix element_operator(const AlgebraSpec &spec, const DeformedProduct &dp, const ElementChoice &e);

} // namespace bigqh

#endif
