#ifndef BIGQH_REPORT_HPP
#define BIGQH_REPORT_HPP

#include <bigqh/certify.hpp>
#include <bigqh/deformation.hpp>
#include <bigqh/graded_algebra.hpp>

#include <json.hpp>

#include <optional>
#include <string>

namespace bigqh
{

using Json = nlohmann::ordered_json;

// Both reports carry "passed" (verify) or "verdict" (certify); the text form
// is rendered from the same JSON so the two formats hold identical data.

// Axioms, Frobenius compatibility and, on the IG(2,6) basis, the character
// table and the nilpotent witness. With q set, the ring is specialized first
// (grading is then not checked).
Json verify_small_report(const AlgebraSpec &spec, const std::string &source, const std::optional<Rational> &q,
                         bool timing);

struct CertifyOptions {
    ElementChoice element;
    std::size_t order = 2;
    Rational q{1};
    bool lift_constant = false;
    bool timing = false;
};

// Bootstraps, builds P = det(x - M_element) modulo t^order and certifies it.
// Throws BootstrapRefused past the bootstrap limit.
Json certify_report(const AlgebraSpec &spec, const std::string &source, const CertifyOptions &opts);

// Machine-parsable P; one entry per power of x, exact rational strings.
Json polynomial_json(const XPoly &p);
Json polygon_json(const NewtonPolygon &np);

// Indented key/value rendering of a report.
std::string render_text(const Json &report);

} // namespace bigqh

#endif
