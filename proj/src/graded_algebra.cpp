#include <bigqh/graded_algebra.hpp>

#include <bigqh/xpoly.hpp>

#include <set>

namespace bigqh
{

AlgebraSpec::AlgebraSpec(std::vector<BasisLabel> basis, int q_degree, int t_degree, std::vector<QMatrix> structure,
                         const std::string &unit, const std::string &point, std::optional<std::string> deform,
                         Presentation presentation)
    : basis_(std::move(basis)), q_degree_(q_degree), t_degree_(t_degree), structure_(std::move(structure)),
      presentation_(std::move(presentation))
{
    if (basis_.empty()) {
        throw SpecError("algebra has an empty basis");
    }
    std::set<std::string> names;
    for (const auto &b : basis_) {
        if (b.name.empty()) {
            throw SpecError("empty basis label");
        }
        if (!names.insert(b.name).second) {
            throw SpecError("duplicate basis label '" + b.name + "'");
        }
        if (b.degree < 0) {
            throw SpecError("negative degree for basis label '" + b.name + "'");
        }
    }
    if (q_degree_ <= 0) {
        throw SpecError("q_degree must be positive");
    }
    if (structure_.size() != basis_.size()) {
        throw SpecError("expected " + std::to_string(basis_.size()) + " multiplication matrices, got "
                        + std::to_string(structure_.size()));
    }
    for (std::size_t i = 0; i < structure_.size(); ++i) {
        if (structure_[i].rows() != dim() || structure_[i].cols() != dim()) {
            throw SpecError("multiplication matrix of '" + basis_[i].name + "' has shape " + structure_[i].shape());
        }
    }
    unit_ = index_of(unit);
    if (basis_[unit_].degree != 0) {
        throw SpecError("unit label '" + unit + "' must have degree 0");
    }
    point_ = index_of(point);
    if (deform) {
        deform_ = index_of(*deform);
    }
}

std::optional<std::size_t> AlgebraSpec::find(const std::string &name) const
{
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (basis_[i].name == name) {
            return i;
        }
    }
    return std::nullopt;
}

std::size_t AlgebraSpec::index_of(const std::string &name) const
{
    if (const auto i = find(name)) {
        return *i;
    }
    throw SpecError("unknown basis label '" + name + "'");
}

QVector AlgebraSpec::basis_vector(std::size_t i) const
{
    QVector v(dim());
    v.at(i) = QPoly(1);
    return v;
}

AlgebraSpec AlgebraSpec::specialized(const Rational &q) const
{
    AlgebraSpec s = *this;
    for (auto &m : s.structure_) {
        m = specialize_q(m, q);
    }
    s.graded_ = false;
    return s;
}

AlgebraSpec AlgebraSpec::with_structure(std::size_t i, QMatrix m) const
{
    AlgebraSpec s = *this;
    s.structure_.at(i) = std::move(m);
    return s;
}

bool operator==(const AlgebraSpec &a, const AlgebraSpec &b)
{
    return a.basis_ == b.basis_ && a.q_degree_ == b.q_degree_ && a.t_degree_ == b.t_degree_
           && a.graded_ == b.graded_ && a.structure_ == b.structure_ && a.unit_ == b.unit_
           && a.point_ == b.point_ && a.deform_ == b.deform_;
}

QMatrix multiplication_matrix(const AlgebraSpec &spec, const QVector &v)
{
    if (v.size() != spec.dim()) {
        throw std::invalid_argument("element has " + std::to_string(v.size()) + " coordinates, algebra has dimension "
                                    + std::to_string(spec.dim()));
    }
    QMatrix m(spec.dim(), spec.dim());
    for (std::size_t l = 0; l < spec.dim(); ++l) {
        if (!v[l].is_zero()) {
            m += v[l] * spec.structure(l);
        }
    }
    return m;
}

SeriesMatrix multiplication_matrix(const AlgebraSpec &spec, const SeriesVector &v)
{
    if (v.size() != spec.dim()) {
        throw std::invalid_argument("element has " + std::to_string(v.size()) + " coordinates, algebra has dimension "
                                    + std::to_string(spec.dim()));
    }
    SeriesMatrix m(spec.dim(), spec.dim());
    for (std::size_t l = 0; l < spec.dim(); ++l) {
        if (!(v[l] == TSeries())) {
            m += v[l] * lift(spec.structure(l));
        }
    }
    return m;
}

namespace
{

std::string label(const AlgebraSpec &spec, std::size_t i)
{
    return "D" + spec.basis()[i].name;
}

} // namespace

ViolationList verify_axioms(const AlgebraSpec &spec)
{
    ViolationList out;
    const std::size_t n = spec.dim();
    const std::size_t u = spec.unit();

    if (!(spec.structure(u) == QMatrix::identity(n))) {
        out.push_back({"unit", "multiplication by " + label(spec, u) + " is not the identity"});
    }

    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if (!(spec.structure(a).column(b) == spec.structure(b).column(a))) {
                out.push_back({"commutativity", label(spec, a) + " * " + label(spec, b) + " = "
                                                    + describe(spec, spec.structure(a).column(b)) + " but "
                                                    + label(spec, b) + " * " + label(spec, a) + " = "
                                                    + describe(spec, spec.structure(b).column(a))});
            }
        }
    }

    // (a*b)*c = a*(b*c) for every triple, via M_{a*b} = M_a M_b.
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            const QMatrix lhs = multiplication_matrix(spec, spec.structure(a).column(b));
            const QMatrix rhs = spec.structure(a) * spec.structure(b);
            if (lhs == rhs) {
                continue;
            }
            for (std::size_t c = 0; c < n; ++c) {
                if (!(lhs.column(c) == rhs.column(c))) {
                    out.push_back({"associativity", "(" + label(spec, a) + " * " + label(spec, b) + ") * "
                                                        + label(spec, c) + " != " + label(spec, a) + " * ("
                                                        + label(spec, b) + " * " + label(spec, c) + ")"});
                }
            }
        }
    }

    if (spec.graded()) {
        for (std::size_t l = 0; l < n; ++l) {
            for (std::size_t b = 0; b < n; ++b) {
                for (std::size_t c = 0; c < n; ++c) {
                    spec.structure(l)(c, b).for_each_term([&](int k, const Rational &coeff) {
                        if (spec.degree(l) + spec.degree(b) != spec.degree(c) + k * spec.q_degree()) {
                            out.push_back({"grading", label(spec, l) + " * " + label(spec, b) + " has term "
                                                          + QPoly::monomial(coeff, k).to_string() + " "
                                                          + label(spec, c)});
                        }
                    });
                }
            }
        }
    }
    return out;
}

RationalMatrix derive_pairing(const AlgebraSpec &spec)
{
    const std::size_t n = spec.dim();
    RationalMatrix eta(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            eta(a, b) = spec.structure(a)(spec.point(), b).coeff(0);
        }
    }
    if (!(eta == eta.transpose())) {
        throw SpecError("derived Poincare pairing is not symmetric");
    }
    if (rank(eta) != n) {
        throw SpecError("derived Poincare pairing is degenerate");
    }
    return eta;
}

ViolationList verify_frobenius(const AlgebraSpec &spec)
{
    try {
        return verify_frobenius(spec, derive_pairing(spec));
    } catch (const SpecError &e) {
        return {{"pairing", e.what()}};
    }
}

ViolationList verify_frobenius(const AlgebraSpec &spec, const RationalMatrix &pairing)
{
    ViolationList out;
    const std::size_t n = spec.dim();
    const QMatrix eta = pairing.map([](const Rational &x) { return QPoly(x); });
    // (D_a * D_b, D_c) = (eta M_a)(c, b); (D_a, D_b * D_c) = (eta M_b)(a, c).
    std::vector<QMatrix> eta_m;
    eta_m.reserve(n);
    for (std::size_t l = 0; l < n; ++l) {
        eta_m.push_back(eta * spec.structure(l));
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            for (std::size_t c = 0; c < n; ++c) {
                const QPoly &lhs = eta_m[a](c, b);
                const QPoly &rhs = eta_m[b](a, c);
                if (!(lhs == rhs)) {
                    out.push_back({"frobenius", "(" + label(spec, a) + " * " + label(spec, b) + ", " + label(spec, c)
                                                    + ") = " + lhs.to_string() + " but (" + label(spec, a) + ", "
                                                    + label(spec, b) + " * " + label(spec, c)
                                                    + ") = " + rhs.to_string()});
                }
            }
        }
    }
    return out;
}

bool is_nilpotent(const AlgebraSpec &spec, const QVector &v)
{
    return mat_power(multiplication_matrix(spec, v), spec.dim()).is_zero();
}

std::size_t radical_dimension(const AlgebraSpec &spec, const Rational &q)
{
    const AlgebraSpec s = spec.specialized(q);
    const std::size_t n = s.dim();
    std::vector<RationalMatrix> m;
    m.reserve(n);
    for (std::size_t l = 0; l < n; ++l) {
        m.push_back(to_rational(s.structure(l)));
    }
    RationalMatrix form(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a; b < n; ++b) {
            form(a, b) = trace(m[a] * m[b]);
            form(b, a) = form(a, b);
        }
    }
    return n - rank(form);
}

QVector element(const AlgebraSpec &spec, const std::vector<std::pair<QPoly, std::string>> &terms)
{
    QVector v(spec.dim());
    for (const auto &[c, name] : terms) {
        v[spec.index_of(name)] += c;
    }
    return v;
}

std::string describe(const AlgebraSpec &spec, const QVector &v)
{
    std::vector<std::pair<QPoly, std::string>> terms;
    for (std::size_t i = 0; i < v.size() && i < spec.dim(); ++i) {
        terms.emplace_back(v[i], label(spec, i));
    }
    return render_coefficient_sum(terms);
}

} // namespace bigqh
