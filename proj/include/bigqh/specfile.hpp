#ifndef BIGQH_SPECFILE_HPP
#define BIGQH_SPECFILE_HPP

#include <bigqh/graded_algebra.hpp>

#include <stdexcept>
#include <string>

namespace bigqh
{

// Syntax error in a spec file; what() starts with "line N: ".
class SpecParseError : public std::runtime_error
{
public:
    SpecParseError(std::size_t line, const std::string &message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line)
    {
    }
    std::size_t line() const
    {
        return line_;
    }

private:
    std::size_t line_;
};

// Spec file format, one statement per line, '#' starts a comment:
//
//   BASIS                      then "D<label> <degree>" lines
//   GRADING                    then "q <deg q>" and "t <deg t>"
//   UNIT D0
//   POINT D4,3
//   DEFORM D2                  optional
//   GENERATORS                 then "D1 * D4 = D4,1 + q D0" lines
//   DERIVED                    then "M4,1 = M1*M4 - q*M0" lines
//
// Products missing from GENERATORS are filled from the unit and from
// commutativity with earlier generators. DERIVED expressions may use only
// matrices defined above them. Unicode input (Δ, ∘, ⋆, ·, −, subscript
// digits) is normalized to ASCII.
//
// The result is not checked against the axioms; see verify_axioms.
AlgebraSpec parse_spec(const std::string &text);
AlgebraSpec parse_spec_file(const std::string &path);

// Canonical ASCII rendering; parse_spec(dump_spec(s)) == s.
std::string dump_spec(const AlgebraSpec &spec);

// Unicode to ASCII normalization used by the parser.
std::string normalize_input(const std::string &text);

} // namespace bigqh

#endif
