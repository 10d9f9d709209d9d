#include <bigqh/deformation.hpp>

#include <bigqh/ig26_model.hpp>

#include <algorithm>

namespace bigqh
{

namespace
{

// Beyond this the axiom is not consulted any further.
constexpr std::size_t kOrderCap = 64;

std::size_t divisor_index(const AlgebraSpec &spec)
{
    std::optional<std::size_t> h;
    for (std::size_t i = 0; i < spec.dim(); ++i) {
        if (spec.degree(i) == 1) {
            if (h) {
                throw std::invalid_argument("bootstrap needs a unique degree-1 class, found D" + spec.basis()[*h].name
                                            + " and D" + spec.basis()[i].name);
            }
            h = i;
        }
    }
    if (!h) {
        throw std::invalid_argument("bootstrap needs a degree-1 class");
    }
    return *h;
}

std::size_t deform_index(const AlgebraSpec &spec)
{
    if (!spec.deform()) {
        throw std::invalid_argument("algebra has no deformation direction");
    }
    return *spec.deform();
}

ig26::GWVanishingVerdict power_verdict(const AlgebraSpec &spec, std::size_t n)
{
    return ig26::dimension_axiom_verdict(spec.degree(spec.point()), spec.q_degree(), spec.degree(deform_index(spec)),
                                         static_cast<int>(n));
}

SeriesMatrix rational_lift(const RationalMatrix &m)
{
    return lift(m.map([](const Rational &x) { return QPoly(x); }));
}

std::string label(const AlgebraSpec &spec, std::size_t i)
{
    return "D" + spec.basis()[i].name;
}

SeriesVector unit_vector(std::size_t dim, std::size_t i)
{
    SeriesVector v(dim);
    v[i] = TSeries(1L);
    return v;
}

std::vector<SeriesVector> powers_applied(const SeriesMatrix &m, SeriesVector v, std::size_t count)
{
    std::vector<SeriesVector> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(v);
        v = mat_apply(m, v);
    }
    return out;
}

// One step: from M1~ known modulo t^(k+1), recover M2~ modulo t^(k+1).
SeriesMatrix next_m2(const AlgebraSpec &spec, const RationalMatrix &eta, const SeriesMatrix &m1_tilde,
                     std::size_t order)
{
    const std::size_t n = spec.dim();
    const std::size_t d = deform_index(spec);
    const SeriesMatrix eta_s = rational_lift(eta);
    const SeriesMatrix eta_inv = rational_lift(inverse(eta));
    const SeriesMatrix m1 = truncated(m1_tilde, order);

    std::vector<SeriesVector> f = powers_applied(m1, unit_vector(n, spec.unit()), n - 1);
    f.push_back(unit_vector(n, d));
    const SeriesMatrix fm = SeriesMatrix::from_columns(f);

    // D_deform * f_i = h^i * D_deform for i < n - 1.
    std::vector<SeriesVector> g = powers_applied(m1, unit_vector(n, d), n - 1);

    // b_i = (D_deform * D_deform, f_i) = (D_deform, D_deform * f_i) for i < n - 1;
    // b_{n-1} = sum_m t^m/m! <D_deform^(m+3)>, whose m = 0 term is the small
    // product and whose m >= 1 terms vanish below `order`.
    SeriesVector b(n);
    const SeriesVector eta_d = mat_apply(eta_s, unit_vector(n, d));
    for (std::size_t i = 0; i + 1 < n; ++i) {
        TSeries s = TSeries::zero(order);
        for (std::size_t r = 0; r < n; ++r) {
            s += eta_d[r] * g[i][r];
        }
        b[i] = s;
    }
    TSeries three_point;
    for (std::size_t r = 0; r < n; ++r) {
        three_point += eta_d[r] * TSeries(spec.structure(d)(r, d));
    }
    b[n - 1] = three_point.truncated(order);

    // F^T eta w = b.
    SeriesMatrix finv;
    try {
        finv = mat_inverse(fm);
    } catch (const NotInvertible &e) {
        throw std::runtime_error(std::string("f-basis change matrix is singular: ") + e.what());
    }
    const SeriesVector w = mat_apply(eta_inv, mat_apply(finv.transpose(), b));
    g.push_back(w);

    // M2~ F = G.
    return truncated(SeriesMatrix::from_columns(g) * finv, order);
}

} // namespace

SeriesMatrix m1_from_m2(const QMatrix &m1, const SeriesMatrix &m2_tilde)
{
    SeriesMatrix out = lift(m1);
    out += m2_tilde.map([](const TSeries &x) { return x.t_integrate().q_log_derivative(); });
    return out;
}

std::size_t max_bootstrap_order(const AlgebraSpec &spec)
{
    std::size_t m = 1;
    while (m < kOrderCap && power_verdict(spec, m + 3).is_zero()) {
        ++m;
    }
    return m;
}

DeformedProduct bootstrap(const AlgebraSpec &spec, std::size_t target_order)
{
    if (target_order == 0) {
        throw std::invalid_argument("bootstrap order must be at least 1");
    }
    const std::size_t h = divisor_index(spec);
    const std::size_t d = deform_index(spec);
    const std::size_t limit = max_bootstrap_order(spec);
    if (target_order > limit) {
        const std::size_t n = limit + 3;
        throw BootstrapRefused("bootstrap to order " + std::to_string(target_order) + " requires unknown "
                               + std::to_string(n) + "-point invariant <" + label(spec, d) + "^" + std::to_string(n)
                               + "> (" + power_verdict(spec, n).reason + ")");
    }
    const RationalMatrix eta = derive_pairing(spec);
    const QMatrix &m1 = spec.structure(h);

    SeriesMatrix m2 = lift(spec.structure(d), 1);
    for (std::size_t k = 1; k < target_order; ++k) {
        SeriesMatrix next = next_m2(spec, eta, m1_from_m2(m1, m2), k + 1);
        if (!equal_mod(next, m2, k)) {
            throw std::runtime_error("bootstrap step " + std::to_string(k + 1) + " changed lower-order terms");
        }
        m2 = std::move(next);
    }

    DeformedProduct dp;
    dp.order = target_order;
    dp.m2_tilde = std::move(m2);
    dp.m1_tilde = m1_from_m2(m1, dp.m2_tilde);
    const std::size_t n = spec.dim();
    dp.f_vectors = powers_applied(dp.m1_tilde, unit_vector(n, spec.unit()), n - 1);
    dp.f_vectors.push_back(unit_vector(n, d));
    const SeriesMatrix fm = SeriesMatrix::from_columns(dp.f_vectors);
    dp.gram = fm.transpose() * rational_lift(eta) * fm;

    const ViolationList bad = verify_deformed(spec, dp);
    if (!bad.empty()) {
        throw std::runtime_error("bootstrap to order " + std::to_string(target_order) + " is inconsistent ("
                                 + std::to_string(bad.size()) + " violations), first: " + bad.front().check + ": "
                                 + bad.front().detail);
    }
    return dp;
}

ViolationList check_grading(const AlgebraSpec &spec, const SeriesMatrix &m, int operator_degree,
                            const std::string &name)
{
    ViolationList out;
    for (std::size_t a = 0; a < m.rows(); ++a) {
        for (std::size_t b = 0; b < m.cols(); ++b) {
            const TSeries &x = m(a, b);
            for (std::size_t k = 0; k < x.size(); ++k) {
                x.coeff(k).for_each_term([&](int j, const Rational &) {
                    const int lhs = operator_degree + spec.degree(b) - spec.degree(a);
                    const int rhs = j * spec.q_degree() + static_cast<int>(k) * spec.t_degree();
                    if (lhs != rhs) {
                        out.push_back({"grading", name + "(" + label(spec, a) + ", " + label(spec, b)
                                                      + ") has a term q^" + std::to_string(j) + " t^"
                                                      + std::to_string(k)});
                    }
                });
            }
        }
    }
    return out;
}

ViolationList verify_deformed(const AlgebraSpec &spec, const DeformedProduct &dp)
{
    ViolationList out;
    const std::size_t h = divisor_index(spec);
    const std::size_t d = deform_index(spec);
    const std::size_t n = dp.order;

    if (!equal_mod(dp.m1_tilde * dp.m2_tilde, dp.m2_tilde * dp.m1_tilde, n)) {
        out.push_back({"commutativity", "M1~ M2~ != M2~ M1~ modulo t^" + std::to_string(n)});
    }

    const SeriesMatrix eta = rational_lift(derive_pairing(spec));
    const auto frobenius = [&](const SeriesMatrix &m, std::size_t order, const std::string &name) {
        const SeriesMatrix e = eta * m;
        if (!equal_mod(e, e.transpose(), order)) {
            out.push_back({"frobenius", "eta " + name + " is not symmetric modulo t^" + std::to_string(order)});
        }
    };
    frobenius(dp.m1_tilde, n + 1, "M1~");
    frobenius(dp.m2_tilde, n, "M2~");

    if (!(t_coefficient(dp.m1_tilde, 0) == spec.structure(h))) {
        out.push_back({"reduction", "M1~ at t = 0 differs from the small product"});
    }
    if (!(t_coefficient(dp.m2_tilde, 0) == spec.structure(d))) {
        out.push_back({"reduction", "M2~ at t = 0 differs from the small product"});
    }

    for (const auto *m : {&dp.m1_tilde, &dp.m2_tilde}) {
        for (std::size_t a = 0; a < m->rows(); ++a) {
            for (std::size_t b = 0; b < m->cols(); ++b) {
                if (!(*m)(a, b).is_q_polynomial()) {
                    out.push_back({"polynomial", "negative power of q at (" + label(spec, a) + ", " + label(spec, b)
                                                     + ")"});
                }
            }
        }
    }

    if (spec.graded()) {
        for (auto &v : check_grading(spec, dp.m1_tilde, spec.degree(h), "M1~")) {
            out.push_back(std::move(v));
        }
        for (auto &v : check_grading(spec, dp.m2_tilde, spec.degree(d), "M2~")) {
            out.push_back(std::move(v));
        }
    }
    return out;
}

SeriesMatrix element_matrix(const DeformedProduct &dp, const Rational &a, const Rational &b)
{
    return TSeries(a) * dp.m1_tilde + TSeries(b) * dp.m2_tilde;
}

SeriesMatrix gamma_matrix(const DeformedProduct &dp)
{
    return element_matrix(dp, Rational(1), Rational(1));
}

SeriesMatrix euler_matrix(const AlgebraSpec &spec, const DeformedProduct &dp)
{
    const std::size_t d = deform_index(spec);
    const TSeries c1 = TSeries(Rational(spec.q_degree()));
    const TSeries tcoeff = TSeries::t_power(1) * Rational(1 - spec.degree(d));
    return c1 * dp.m1_tilde + tcoeff * dp.m2_tilde;
}

ElementChoice ElementChoice::parse(const std::string &text)
{
    ElementChoice e;
    if (text == "gamma") {
        return e;
    }
    if (text == "euler") {
        e.kind = Kind::euler;
        return e;
    }
    const std::string prefix = "custom:";
    const auto comma = text.find(',');
    if (text.rfind(prefix, 0) != 0 || comma == std::string::npos) {
        throw std::invalid_argument("element must be gamma, euler or custom:a,b; got '" + text + "'");
    }
    e.kind = Kind::custom;
    e.a = parse_rational(text.substr(prefix.size(), comma - prefix.size()));
    e.b = parse_rational(text.substr(comma + 1));
    if (sgn(e.a) == 0 && sgn(e.b) == 0) {
        throw std::invalid_argument("custom element must be nonzero");
    }
    return e;
}

std::string ElementChoice::name() const
{
    switch (kind) {
    case Kind::gamma:
        return "gamma";
    case Kind::euler:
        return "euler";
    case Kind::custom:
        break;
    }
    return "custom:" + to_string(a) + "," + to_string(b);
}

std::optional<int> ElementChoice::operator_degree(const AlgebraSpec &spec) const
{
    switch (kind) {
    case Kind::gamma:
        return std::nullopt;
    case Kind::euler:
        return 1;
    case Kind::custom:
        break;
    }
    if (sgn(b) == 0) {
        return spec.degree(divisor_index(spec));
    }
    if (sgn(a) == 0) {
        return spec.degree(deform_index(spec));
    }
    return std::nullopt;
}

std::size_t bootstrap_order_for(const ElementChoice &e, std::size_t order)
{
    if (order == 0) {
        throw std::invalid_argument("operator order must be at least 1");
    }
    // M1~ is known one order further than M2~, and t M2~ as well.
    const bool one_ahead = e.kind == ElementChoice::Kind::euler || sgn(e.b) == 0;
    return one_ahead ? std::max<std::size_t>(1, order - 1) : order;
}

SeriesMatrix element_operator(const AlgebraSpec &spec, const DeformedProduct &dp, const ElementChoice &e)
{
    switch (e.kind) {
    case ElementChoice::Kind::gamma:
        return gamma_matrix(dp);
    case ElementChoice::Kind::euler:
        return euler_matrix(spec, dp);
    case ElementChoice::Kind::custom:
        break;
    }
    if (sgn(e.b) == 0) {
        return TSeries(e.a) * dp.m1_tilde;
    }
    return element_matrix(dp, e.a, e.b);
}

SeriesMatrix element_operator(const AlgebraSpec &spec, const ElementChoice &e, std::size_t order)
{
    const DeformedProduct dp = bootstrap(spec, bootstrap_order_for(e, order));
    return truncated(element_operator(spec, dp, e), order);
}

} // namespace bigqh
