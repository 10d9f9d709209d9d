#include <bigqh/cli.hpp>

#include <bigqh/ig26_model.hpp>
#include <bigqh/report.hpp>
#include <bigqh/specfile.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <optional>

namespace bigqh
{

namespace
{

struct Loaded {
    AlgebraSpec spec;
    std::string source;
};

Loaded load(const std::string &path)
{
    if (path.empty()) {
        return {ig26::build_small_qh(), "built-in IG(2,6)"};
    }
    return {parse_spec_file(path), path};
}

void emit(const Json &report, const std::string &format, std::ostream &out)
{
    if (format == "machine") {
        out << report.dump(2) << '\n';
    } else {
        out << render_text(report);
    }
}

Rational parse_q(const std::string &text)
{
    try {
        return parse_rational(text);
    } catch (const std::invalid_argument &) {
        throw CLI::ValidationError("--q", "expected a rational number, got '" + text + "'");
    }
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact big quantum cohomology of IG(2,6): small ring, bootstrap and semisimplicity certificates",
                 "bigqh"};
    app.require_subcommand(1);

    std::string spec_path;
    std::string format = "text";
    std::string q_text;
    bool timing = false;

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--spec", spec_path, "spec file (default: built-in IG(2,6) tables)");
        sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "machine"}));
        sub->add_flag("--timing", timing, "add wall-clock timings to the report");
    };

    CLI::App *verify = app.add_subcommand("verify-small", "verify the small quantum ring");
    add_common(verify);
    verify->add_option("--q", q_text, "specialize q to this rational before checking");

    CLI::App *cert = app.add_subcommand("certify", "bootstrap the big product and certify semisimplicity");
    add_common(cert);
    std::string element_text = "gamma";
    std::optional<std::size_t> order;
    bool lift = false;
    q_text.clear();
    cert->add_option("--element", element_text, "gamma, euler or custom:a,b (a h + b D2)");
    cert->add_option("--order", order, "truncation order N of the operator (known modulo t^N)");
    cert->add_option("--q", q_text, "nonzero rational value of q (default 1)");
    cert->add_flag("--lift-constant", lift, "raise the precision of the constant term by the adjugate argument");

    CLI::App *dump = app.add_subcommand("dump", "write the algebra in spec-file format");
    dump->add_option("--spec", spec_path, "spec file to normalize (default: built-in IG(2,6) tables)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (dump->parsed()) {
            out << dump_spec(load(spec_path).spec);
            return kExitOk;
        }

        if (verify->parsed()) {
            std::optional<Rational> q;
            if (!q_text.empty()) {
                q = parse_q(q_text);
            }
            const Loaded l = load(spec_path);
            const Json report = verify_small_report(l.spec, l.source, q, timing);
            emit(report, format, out);
            return report["passed"].get<bool>() ? kExitOk : kExitViolation;
        }

        CertifyOptions opts;
        try {
            opts.element = ElementChoice::parse(element_text);
        } catch (const std::invalid_argument &e) {
            err << "bigqh: --element: " << e.what() << '\n';
            return kExitUsage;
        }
        opts.q = q_text.empty() ? Rational(1) : parse_q(q_text);
        if (sgn(opts.q) == 0) {
            err << "bigqh: --q 0 cannot be certified: the small ring at q = 0 is not semisimple; "
                   "use verify-small --q 0 for the classical ring\n";
            return kExitUsage;
        }
        opts.order = order ? *order : (opts.element.kind == ElementChoice::Kind::euler ? 4 : 2);
        if (opts.order == 0) {
            err << "bigqh: --order must be at least 1\n";
            return kExitUsage;
        }
        opts.lift_constant = lift;
        opts.timing = timing;

        const Loaded l = load(spec_path);
        const ViolationList bad = verify_axioms(l.spec);
        if (!bad.empty()) {
            err << "bigqh: " << l.source << " violates the ring axioms (" << bad.size()
                << "), first: " << bad.front().check << ": " << bad.front().detail << '\n';
            return kExitViolation;
        }
        const Json report = certify_report(l.spec, l.source, opts);
        emit(report, format, out);
        return report["verdict"] == "Semisimple" ? kExitOk : kExitInconclusive;
    } catch (const CLI::ValidationError &e) {
        err << "bigqh: " << e.what() << '\n';
        return kExitUsage;
    } catch (const SpecParseError &e) {
        err << "bigqh: " << spec_path << ": " << e.what() << '\n';
        return kExitParse;
    } catch (const BootstrapRefused &e) {
        err << "bigqh: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        err << "bigqh: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::runtime_error &e) {
        // Consistency failures inside the bootstrap.
        err << "bigqh: " << e.what() << '\n';
        return kExitViolation;
    } catch (const std::exception &e) {
        err << "bigqh: internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}

} // namespace bigqh
