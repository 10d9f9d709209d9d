#include <bigqh/report.hpp>

#include <bigqh/ig26_model.hpp>

#include <chrono>
#include <sstream>

namespace bigqh
{

namespace
{

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Long violation lists are cut; the count is always complete.
constexpr std::size_t kMaxListed = 20;

Json violations_json(const ViolationList &v)
{
    Json out = Json::object();
    out["count"] = v.size();
    Json items = Json::array();
    for (std::size_t i = 0; i < v.size() && i < kMaxListed; ++i) {
        items.push_back(v[i].check + ": " + v[i].detail);
    }
    if (v.size() > kMaxListed) {
        items.push_back("... " + std::to_string(v.size() - kMaxListed) + " more");
    }
    out["items"] = items;
    return out;
}

bool is_ig26_basis(const AlgebraSpec &spec)
{
    return spec.basis() == ig26::basis();
}

int max_q_degree(const AlgebraSpec &spec)
{
    int top = 0;
    for (const auto &m : spec.structure()) {
        for (std::size_t i = 0; i < m.rows(); ++i) {
            for (std::size_t j = 0; j < m.cols(); ++j) {
                if (!m(i, j).is_zero()) {
                    top = std::max(top, m(i, j).high_degree());
                }
            }
        }
    }
    return top;
}

Json roots_json(const std::vector<RootValuation> &roots)
{
    Json out = Json::array();
    for (const auto &r : roots) {
        out.push_back(r.to_string());
    }
    return out;
}

std::string valuation_text(const Valuation &v)
{
    return v.to_string();
}

} // namespace

Json polynomial_json(const XPoly &p)
{
    Json out = Json::object();
    out["degree"] = p.degree();
    out["known_modulo"] = p.order() == kExactOrder ? std::string("exact") : "t^" + std::to_string(p.order());
    Json coeffs = Json::array();
    for (long k = p.degree(); k >= 0; --k) {
        const TSeries &c = p.coeff(static_cast<std::size_t>(k));
        Json terms = Json::array();
        for (std::size_t m = 0; m < c.size(); ++m) {
            c.coeff(m).for_each_term([&](int j, const Rational &v) {
                Json t = Json::object();
                t["t"] = m;
                t["q"] = j;
                t["c"] = to_string(v);
                terms.push_back(t);
            });
        }
        Json entry = Json::object();
        entry["x"] = k;
        entry["terms"] = terms;
        coeffs.push_back(entry);
    }
    out["coefficients"] = coeffs;
    return out;
}

Json polygon_json(const NewtonPolygon &np)
{
    Json out = Json::object();
    Json points = Json::array();
    for (const auto &[i, v] : np.points) {
        points.push_back(Json::array({i, valuation_text(v)}));
    }
    out["points"] = points;
    Json vertices = Json::array();
    for (const auto &v : np.vertices) {
        vertices.push_back(Json::array({v.index, to_string(v.value)}));
    }
    out["vertices"] = vertices;
    Json segments = Json::array();
    for (const auto &s : np.segments) {
        Json seg = Json::object();
        seg["slope"] = to_string(s.slope);
        seg["length"] = s.length;
        segments.push_back(seg);
    }
    out["segments"] = segments;
    if (np.tail_length > 0) {
        Json tail = Json::object();
        tail["length"] = np.tail_length;
        tail["bound"] = np.tail_bound ? ">=" + to_string(*np.tail_bound) : std::string("inf");
        out["tail"] = tail;
    }
    out["reliable"] = np.reliable;
    if (!np.reliable) {
        out["problem"] = np.problem;
    }
    out["root_valuations"] = roots_json(np.root_valuations());
    return out;
}

Json verify_small_report(const AlgebraSpec &generic, const std::string &source, const std::optional<Rational> &q,
                         bool timing)
{
    const auto start = Clock::now();
    Json timings = Json::object();
    Json out = Json::object();
    out["command"] = "verify-small";
    out["source"] = source;
    out["dimension"] = generic.dim();
    out["q_degree"] = generic.q_degree();
    out["t_degree"] = generic.t_degree();
    out["q"] = q ? to_string(*q) : std::string("generic");
    out["max_q_degree"] = max_q_degree(generic);

    const AlgebraSpec spec = q ? generic.specialized(*q) : generic;
    bool passed = true;

    auto t0 = Clock::now();
    const ViolationList axioms = verify_axioms(spec);
    Json ax = violations_json(axioms);
    ax["checked"] = spec.graded() ? "commutativity, associativity, unit, grading"
                                  : "commutativity, associativity, unit";
    out["axioms"] = ax;
    passed = passed && axioms.empty();
    timings["axioms"] = ms_since(t0);

    // The pairing is read from the q^0 part, so it comes from the generic ring.
    t0 = Clock::now();
    Json frob = Json::object();
    try {
        const RationalMatrix eta = derive_pairing(generic);
        const ViolationList fv = verify_frobenius(spec, eta);
        frob = violations_json(fv);
        frob["pairing_determinant"] = to_string(determinant(eta));
        passed = passed && fv.empty();
    } catch (const SpecError &e) {
        frob = violations_json({{"pairing", e.what()}});
        passed = false;
    }
    out["frobenius"] = frob;
    timings["frobenius"] = ms_since(t0);

    if (is_ig26_basis(generic)) {
        t0 = Clock::now();
        const ViolationList ct = ig26::verify_character_table(generic);
        Json c = violations_json(ct);
        c["specialization"] = "q = 1";
        Json comps = Json::array();
        for (const auto &z : ig26::character_table().components) {
            comps.push_back(z.name + " = Spec Q[" + z.variable + "]/(" + z.modulus.to_string(z.variable) + ")");
        }
        c["components"] = comps;
        out["character_table"] = c;
        passed = passed && ct.empty();
        timings["character_table"] = ms_since(t0);

        t0 = Clock::now();
        const QVector c0 = ig26::nilpotent_c0(generic);
        const QMatrix mc = multiplication_matrix(generic, c0);
        const Rational q_rad = q ? *q : Rational(1);
        Json nil = Json::object();
        nil["element"] = describe(generic, c0);
        nil["square_is_zero"] = (mc * mc).is_zero();
        nil["radical_dimension"] = radical_dimension(generic, q_rad);
        nil["radical_dimension_at"] = "q = " + to_string(q_rad);
        out["nilpotent"] = nil;
        passed = passed && (mc * mc).is_zero();
        timings["nilpotent"] = ms_since(t0);
    } else {
        out["character_table"] = "skipped: not the IG(2,6) basis";
        out["nilpotent"] = "skipped: not the IG(2,6) basis";
    }

    out["passed"] = passed;
    if (timing) {
        timings["total"] = ms_since(start);
        out["timing_ms"] = timings;
    }
    return out;
}

Json certify_report(const AlgebraSpec &spec, const std::string &source, const CertifyOptions &opts)
{
    const auto start = Clock::now();
    Json timings = Json::object();
    Json out = Json::object();
    out["command"] = "certify";
    out["source"] = source;
    out["element"] = opts.element.name();
    out["order"] = opts.order;
    const std::size_t boot_order = bootstrap_order_for(opts.element, opts.order);
    out["bootstrap_order"] = boot_order;
    out["q"] = to_string(opts.q);
    out["lift_constant"] = opts.lift_constant;

    auto t0 = Clock::now();
    const DeformedProduct dp = bootstrap(spec, boot_order);
    timings["bootstrap"] = ms_since(t0);

    t0 = Clock::now();
    const SeriesMatrix op = truncated(element_operator(spec, dp, opts.element), opts.order);
    const XPoly p = opts.lift_constant ? char_poly_lifted_constant(op) : char_poly(op);
    timings["char_poly"] = ms_since(t0);

    Json poly = polynomial_json(p);
    poly["layout"] = p.t_layout("P");
    out["polynomial"] = poly;

    if (const auto deg = opts.element.operator_degree(spec)) {
        Json h = violations_json(check_charpoly_homogeneity(spec, p, *deg));
        h["operator_degree"] = *deg;
        out["homogeneity"] = h;
    } else {
        out["homogeneity"] = "not applicable: the operator is not homogeneous";
    }

    t0 = Clock::now();
    const Certificate cert = certify(p, opts.q);
    timings["certify"] = ms_since(t0);

    Json pg = Json::object();
    pg["P"] = polygon_json(cert.polygon.polygon_p);
    pg["P'"] = polygon_json(cert.polygon.polygon_pprime);
    pg["p0"] = cert.polygon.p0.to_string("x");
    pg["p0_gcd_degree"] = cert.polygon.p0_gcd_degree;
    pg["block_gcd_degree"] = cert.polygon.block_gcd_degree;
    pg["verdict"] = to_string(cert.polygon.verdict);
    pg["reason"] = cert.polygon.reason;
    out["polygon"] = pg;

    Json rs = Json::object();
    rs["valuation"] = cert.resultant.valuation.to_string();
    rs["known_modulo"] = order_to_string(cert.resultant.resultant.order());
    if (cert.resultant.valuation.is_exact()) {
        const std::size_t k = static_cast<std::size_t>(cert.resultant.valuation.value().get_num().get_si());
        rs["leading_coefficient"] = to_string(cert.resultant.resultant.coeff(k).coeff(0));
    }
    rs["verdict"] = to_string(cert.resultant.verdict);
    rs["reason"] = cert.resultant.reason;
    out["resultant"] = rs;

    out["verdict"] = to_string(cert.verdict);
    out["reason"] = cert.reason;
    if (opts.timing) {
        timings["total"] = ms_since(start);
        out["timing_ms"] = timings;
    }
    return out;
}

namespace
{

std::string scalar_text(const Json &j)
{
    if (j.is_string()) {
        return j.get<std::string>();
    }
    if (j.is_number_float()) {
        std::ostringstream s;
        s.setf(std::ios::fixed);
        s.precision(3);
        s << j.get<double>();
        return s.str();
    }
    return j.dump();
}

bool is_flat_array(const Json &j)
{
    if (!j.is_array()) {
        return false;
    }
    for (const auto &e : j) {
        if (e.is_object()) {
            return false;
        }
        if (e.is_array()) {
            for (const auto &f : e) {
                if (f.is_structured()) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::string inline_text(const Json &j)
{
    if (j.is_object()) {
        std::string s = "(";
        for (auto it = j.begin(); it != j.end(); ++it) {
            s += (it == j.begin() ? "" : " ") + it.key() + "=" + scalar_text(it.value());
        }
        return s + ")";
    }
    if (!j.is_array()) {
        return scalar_text(j);
    }
    std::string s = "(";
    for (std::size_t i = 0; i < j.size(); ++i) {
        s += (i ? ", " : "") + inline_text(j[i]);
    }
    return s + ")";
}

void render(const Json &j, int indent, std::ostringstream &out)
{
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    for (auto it = j.begin(); it != j.end(); ++it) {
        const Json &v = it.value();
        if (v.is_object()) {
            out << pad << it.key() << ":\n";
            render(v, indent + 2, out);
        } else if (v.is_array()) {
            if (v.empty()) {
                out << pad << it.key() << ": none\n";
            } else if (is_flat_array(v) && v.size() <= 16 && !v[0].is_string()) {
                std::string line;
                for (std::size_t i = 0; i < v.size(); ++i) {
                    line += (i ? " " : "") + inline_text(v[i]);
                }
                out << pad << it.key() << ": " << line << '\n';
            } else {
                out << pad << it.key() << ":\n";
                for (const auto &e : v) {
                    if (e.is_object()) {
                        // Object entries in one line each: "x=12 terms=..."
                        std::string flat;
                        for (auto f = e.begin(); f != e.end(); ++f) {
                            std::string val;
                            if (f.value().is_array()) {
                                for (const auto &g : f.value()) {
                                    val += (val.empty() ? "" : " ") + inline_text(g);
                                }
                            } else {
                                val = scalar_text(f.value());
                            }
                            flat += (flat.empty() ? "" : "  ") + f.key() + "=" + val;
                        }
                        out << pad << "  - " << flat << '\n';
                    } else {
                        out << pad << "  " << inline_text(e) << '\n';
                    }
                }
            }
        } else {
            out << pad << it.key() << ": " << scalar_text(v) << '\n';
        }
    }
}

} // namespace

std::string render_text(const Json &report)
{
    std::ostringstream out;
    render(report, 0, out);
    return out.str();
}

} // namespace bigqh
