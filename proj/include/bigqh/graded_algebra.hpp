#ifndef BIGQH_GRADED_ALGEBRA_HPP
#define BIGQH_GRADED_ALGEBRA_HPP

#include <bigqh/matrix.hpp>
#include <bigqh/series_matrix.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bigqh
{

struct BasisLabel {
    std::string name; // partition-style, e.g. "4,3" or "0"
    int degree = 0;   // Chow-ring degree

    friend bool operator==(const BasisLabel &, const BasisLabel &) = default;
};

// How an algebra was presented: product tables for a few generators plus
// recurrences (in the spec-file expression syntax) for the remaining
// matrices. Carried along so the algebra can be written back out; it takes
// no part in equality.
struct Presentation {
    std::vector<std::string> generators;
    std::vector<std::pair<std::string, std::string>> derived; // label -> expression
};

class SpecError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Finite-dimensional commutative graded algebra over Q[q] given by its
// multiplication matrices in a fixed basis: structure(l)(c, b) is the
// coefficient of basis element c in D_l * D_b.
class AlgebraSpec
{
public:
    AlgebraSpec() = default;
    AlgebraSpec(std::vector<BasisLabel> basis, int q_degree, int t_degree, std::vector<QMatrix> structure,
                const std::string &unit, const std::string &point, std::optional<std::string> deform = {},
                Presentation presentation = {});

    std::size_t dim() const
    {
        return basis_.size();
    }
    const std::vector<BasisLabel> &basis() const
    {
        return basis_;
    }
    int degree(std::size_t i) const
    {
        return basis_[i].degree;
    }
    std::optional<std::size_t> find(const std::string &name) const;
    // Throws SpecError for an unknown label.
    std::size_t index_of(const std::string &name) const;

    int q_degree() const
    {
        return q_degree_;
    }
    int t_degree() const
    {
        return t_degree_;
    }
    // Grading checks are meaningful only while q is a free variable.
    bool graded() const
    {
        return graded_;
    }

    const QMatrix &structure(std::size_t i) const
    {
        return structure_[i];
    }
    const std::vector<QMatrix> &structure() const
    {
        return structure_;
    }
    std::size_t unit() const
    {
        return unit_;
    }
    std::size_t point() const
    {
        return point_;
    }
    const std::optional<std::size_t> &deform() const
    {
        return deform_;
    }
    const Presentation &presentation() const
    {
        return presentation_;
    }

    QVector basis_vector(std::size_t i) const;
    QVector basis_vector(const std::string &name) const
    {
        return basis_vector(index_of(name));
    }

    // Returns a copy with q replaced by a rational value; grading disabled.
    AlgebraSpec specialized(const Rational &q) const;
    AlgebraSpec with_structure(std::size_t i, QMatrix m) const;

    friend bool operator==(const AlgebraSpec &a, const AlgebraSpec &b);

private:
    std::vector<BasisLabel> basis_;
    int q_degree_ = 1;
    int t_degree_ = 0;
    bool graded_ = true;
    std::vector<QMatrix> structure_;
    std::size_t unit_ = 0;
    std::size_t point_ = 0;
    std::optional<std::size_t> deform_;
    Presentation presentation_;
};

struct Violation {
    std::string check; // "commutativity", "associativity", "unit", "grading", "frobenius", ...
    std::string detail;
};
using ViolationList = std::vector<Violation>;

// sum_l v_l M_l.
QMatrix multiplication_matrix(const AlgebraSpec &spec, const QVector &v);
SeriesMatrix multiplication_matrix(const AlgebraSpec &spec, const SeriesVector &v);

// Exhaustive commutativity, associativity, unit and (when graded) grading
// checks over all basis pairs and triples.
ViolationList verify_axioms(const AlgebraSpec &spec);

// (D_a, D_b) := coefficient of the point class in D_a * D_b at q = 0.
// Throws SpecError when the result is not symmetric or not invertible.
RationalMatrix derive_pairing(const AlgebraSpec &spec);

// (a*b, c) = (a, b*c) over all basis triples, at every power of q.
ViolationList verify_frobenius(const AlgebraSpec &spec);
ViolationList verify_frobenius(const AlgebraSpec &spec, const RationalMatrix &pairing);

// M_v^dim == 0.
bool is_nilpotent(const AlgebraSpec &spec, const QVector &v);

inline AlgebraSpec specialize(const AlgebraSpec &spec, const Rational &q)
{
    return spec.specialized(q);
}

// Dimension of the nilradical of the algebra at a rational q, computed as
// the kernel dimension of the trace form Tr(M_a M_b) (characteristic 0).
std::size_t radical_dimension(const AlgebraSpec &spec, const Rational &q);

// Sum of c_i * D_{label_i}; labels resolved through the spec.
QVector element(const AlgebraSpec &spec, const std::vector<std::pair<QPoly, std::string>> &terms);

std::string describe(const AlgebraSpec &spec, const QVector &v);

} // namespace bigqh

#endif
