#include <bigqh/cli.hpp>
#include <bigqh/ig26_model.hpp>
#include <bigqh/report.hpp>
#include <bigqh/specfile.hpp>

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace bigqh;

namespace
{

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string> &args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string &name, const std::string &text)
{
    const std::string path = "bigqh_test_" + name + ".spec";
    std::ofstream(path) << text;
    return path;
}

// QH(P^2): h^3 = q.
const char *kP2 = R"(
# projective plane
BASIS
  D0 0
  D1 1
  D2 2
GRADING
  q 3
  t -1
UNIT D0
POINT D2
DEFORM D1
GENERATORS
  D1 * D1 = D2
  D1 * D2 = q D0
DERIVED
  M2 = M1^2
)";

std::string parse_error(const std::string &text)
{
    try {
        parse_spec(text);
    } catch (const SpecParseError &e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST_CASE("small spec file")
{
    const AlgebraSpec s = parse_spec(kP2);
    CHECK(s.dim() == 3);
    CHECK(s.q_degree() == 3);
    CHECK(s.t_degree() == -1);
    CHECK(verify_axioms(s).empty());
    CHECK(verify_frobenius(s).empty());
    CHECK(describe(s, s.structure(2).column(2)) == "q D1");
    CHECK(parse_spec(dump_spec(s)) == s);
}

TEST_CASE("built-in tables round-trip through the spec format")
{
    const AlgebraSpec s = ig26::build_small_qh();
    const std::string text = dump_spec(s);
    const AlgebraSpec back = parse_spec(text);
    CHECK(back == s);
    CHECK(dump_spec(back) == text);
    CHECK(verify_axioms(back).empty());

    // Without the recurrences every column is written out; still equal.
    const AlgebraSpec bare(s.basis(), s.q_degree(), s.t_degree(), s.structure(), "0", "4,3", std::string("2"));
    const std::string full = dump_spec(bare);
    CHECK(full.find("DERIVED") == std::string::npos);
    CHECK(parse_spec(full) == s);
}

TEST_CASE("unicode input")
{
    const std::string text = "BASIS\n D0 0\n D1 1\n D2 2\nGRADING\n q 3\n t -1\nUNIT \xCE\x94\xE2\x82\x80\nPOINT D2\n"
                             "GENERATORS\n \xCE\x94\xE2\x82\x81 \xE2\x88\x98 \xCE\x94\xE2\x82\x81 = \xCE\x94\xE2\x82\x82\n"
                             " \xCE\x94\xE2\x82\x81 \xE2\x88\x98 \xCE\x94\xE2\x82\x82 = q\xCE\x94\xE2\x82\x80\n"
                             "DERIVED\n M2 = M1\xC2\xB7M1\n";
    const AlgebraSpec s = parse_spec(text);
    CHECK(s.structure() == parse_spec(kP2).structure());
    CHECK(normalize_input("\xCE\x94\xE2\x82\x84,\xE2\x82\x81 \xE2\x88\x92 q\xC2\xB2") == "D4,1 - q^2");
}

TEST_CASE("expression syntax")
{
    // Rational coefficients, powers of q, parentheses and implicit products.
    const std::string head = "BASIS\n D0 0\n D1 1\n D2 2\nGRADING\n q 3\n t -1\nUNIT D0\nPOINT D2\nGENERATORS\n";
    const AlgebraSpec s = parse_spec(head + " D1 * D1 = 2/3 D2 - (q - 1/2 q^2) D1\n D1*D2 = 0\n"
                                            "DERIVED\n M2 = (3/2)*(M1*M1 + (q - 1/2q^2)*M1)\n");
    CHECK(describe(s, s.structure(1).column(1)) == "((1/2)q^2 - q) D1 + 2/3 D2");
    CHECK(s.structure(1).column(2) == QVector(3));
    // The recurrence recovers M2 from the table: D1 * D1 = 2/3 D2 + ..., so
    // M2 = 3/2 (M1^2 + (q - q^2/2) M1).
    CHECK(s.structure(2).column(0) == s.basis_vector(2));
}

TEST_CASE("spec errors carry line numbers")
{
    const std::string ok_head = "BASIS\n D0 0\n D1 1\n D2 2\nGRADING\n q 3\n t -1\nUNIT D0\nPOINT D2\n";

    CHECK(parse_error("BASIS\nGRADING\n q 1\n t 0\nUNIT D0\nPOINT D0\n").find("BASIS is missing or empty")
          != std::string::npos);
    CHECK(parse_error("FOO\n").rfind("line 1: unknown section 'FOO'", 0) == 0);
    CHECK(parse_error("D0 0\n").rfind("line 1: statement outside of a section", 0) == 0);

    std::string e = parse_error(ok_head + "GENERATORS\n D1 * D1 = D7\n D1 * D2 = q D0\n");
    CHECK(e.rfind("line 11: undeclared label D7", 0) == 0);

    e = parse_error(ok_head + "GENERATORS\n D1 * D1 = 1.5 D2\n");
    CHECK(e.rfind("line 11: non-rational coefficient '1.5'", 0) == 0);

    e = parse_error(ok_head + "GENERATORS\n D1 * D1 = sqrt D2\n");
    CHECK(e.rfind("line 11: non-rational coefficient or unknown symbol 'sqrt'", 0) == 0);

    e = parse_error(ok_head + "GENERATORS\n D1 * D1 = D2 +\n");
    CHECK(e.rfind("line 11: unexpected end", 0) == 0);

    e = parse_error(ok_head + "GENERATORS\n D1 * D1 = D2\n");
    CHECK(e.find("missing product D1 * D2") != std::string::npos);

    e = parse_error(ok_head + "GENERATORS\n D1 * D1 = D2\n D1 * D2 = q D0\nDERIVED\n M2 = M1*M7\n");
    CHECK(e.rfind("line 14: undeclared label M7", 0) == 0);

    e = parse_error(ok_head + "GENERATORS\n D1 * D1 = D2\n D1 * D2 = q D0\n");
    CHECK(e.find("no multiplication matrix for D2") != std::string::npos);

    e = parse_error(ok_head + "GENERATORS\n D1 * D1 = D2\n D1 * D2 = q D0\nDERIVED\n M2 = M1^2 + D1\n");
    CHECK(e.rfind("line 14:", 0) == 0);

    e = parse_error("BASIS\n D0 0\n D0 1\n");
    CHECK(e.rfind("line 3: duplicate basis label D0", 0) == 0);

    e = parse_error("BASIS\n D0 x\n");
    CHECK(e.rfind("line 2: degree must be an integer", 0) == 0);

    e = parse_error(ok_head + "GENERATORS\n D1 * D1 = D2 * D2\n");
    CHECK(e.rfind("line 11: product of two classes", 0) == 0);
}

TEST_CASE("parsing does not check the axioms")
{
    // An explicit D1 * D0 overrides the unit column.
    const std::string text = "BASIS\n D0 0\n D1 1\n D2 2\nGRADING\n q 3\n t -1\nUNIT D0\nPOINT D2\n"
                             "GENERATORS\n D1 * D0 = D2\n D1 * D1 = D2\n D1 * D2 = q D0\nDERIVED\n M2 = M1^2\n";
    const AlgebraSpec s = parse_spec(text);
    CHECK_FALSE(verify_axioms(s).empty());
}

TEST_CASE("cli exit codes")
{
    CHECK(run({"verify-small"}).code == kExitOk);
    CHECK(run({"verify-small", "--q", "0"}).code == kExitOk);

    const Run gamma = run({"certify", "--element", "gamma", "--order", "2"});
    CHECK(gamma.code == kExitOk);
    CHECK(gamma.out.find("P0(x) = x^12 - 60q x^9 - 90q x^8 - (96q^2 + 26q) x^7") != std::string::npos);

    CHECK(run({"certify", "--element", "euler", "--order", "4"}).code == kExitOk);
    CHECK(run({"certify", "--element", "euler", "--order", "3"}).code == kExitInconclusive);
    CHECK(run({"certify", "--element", "euler", "--order", "3", "--lift-constant"}).code == kExitOk);

    const Run refused = run({"certify", "--element", "gamma", "--order", "8"});
    CHECK(refused.code == kExitUsage);
    CHECK(refused.err.find("9-point invariant <D2^9>") != std::string::npos);

    CHECK(run({"certify", "--q", "0"}).code == kExitUsage);
    CHECK(run({"certify", "--order", "0"}).code == kExitUsage);
    CHECK(run({"certify", "--element", "custom:1"}).code == kExitUsage);
    CHECK(run({"certify", "--format", "xml"}).code == kExitUsage);
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("cli on spec files")
{
    const Run dumped = run({"dump"});
    REQUIRE(dumped.code == kExitOk);
    const std::string good = write_temp("good", dumped.out);
    CHECK(run({"verify-small", "--spec", good}).code == kExitOk);
    CHECK(run({"dump", "--spec", good}).out == dumped.out);
    CHECK(run({"certify", "--spec", good, "--element", "gamma"}).code == kExitOk);

    // One coefficient changed: parses, fails verification.
    std::string text = dumped.out;
    const std::string from = "D1 * D4 = q D0 + D4,1";
    REQUIRE(text.find(from) != std::string::npos);
    text.replace(text.find(from), from.size(), "D1 * D4 = 2q D0 + D4,1");
    const std::string bad = write_temp("bad", text);
    const Run v = run({"verify-small", "--spec", bad});
    CHECK(v.code == kExitViolation);
    CHECK(v.out.find("passed: false") != std::string::npos);
    CHECK(run({"certify", "--spec", bad}).code == kExitViolation);

    const std::string broken = write_temp("broken", "BASIS\n D0 0\nBOGUS\n");
    const Run p = run({"verify-small", "--spec", broken});
    CHECK(p.code == kExitParse);
    CHECK(p.err.find("line 3: unknown section 'BOGUS'") != std::string::npos);
    CHECK(run({"verify-small", "--spec", "no_such_file.spec"}).code == kExitParse);

    std::remove(good.c_str());
    std::remove(bad.c_str());
    std::remove(broken.c_str());
}

TEST_CASE("machine and text output hold the same data")
{
    const Run machine = run({"certify", "--element", "euler", "--format", "machine"});
    const Run text = run({"certify", "--element", "euler"});
    REQUIRE(machine.code == kExitOk);
    const Json j = Json::parse(machine.out);
    CHECK(j["verdict"] == "Semisimple");
    CHECK(j["polygon"]["P"]["vertices"].size() >= 2);
    CHECK(text.out == render_text(j));
    CHECK_FALSE(j.contains("timing_ms"));

    // Deterministic without --timing.
    CHECK(run({"certify", "--element", "euler", "--format", "machine"}).out == machine.out);
    const Json timed = Json::parse(run({"certify", "--format", "machine", "--timing"}).out);
    CHECK(timed.contains("timing_ms"));

    // Coefficients are exact rational strings.
    bool found = false;
    for (const auto &c : j["polynomial"]["coefficients"]) {
        for (const auto &t : c["terms"]) {
            found = found || t["c"] == "-263671875";
        }
    }
    CHECK(found);
}
