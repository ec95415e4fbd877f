// Command-line front end: one subcommand per stage of the CM construction.

#include "etacm/atkin.hpp"
#include "etacm/classpoly.hpp"
#include "etacm/cm.hpp"
#include "etacm/error.hpp"
#include "etacm/eta.hpp"
#include "etacm/example.hpp"
#include "etacm/ffield.hpp"
#include "etacm/modpoly.hpp"
#include "etacm/qforms.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace etacm;

namespace {

constexpr int kExitPrecondition = 2;
constexpr int kExitPrecision = 3;
constexpr int kExitUsage = 64;

struct RunConfig {
    Precision precision_start = 256;
    Precision precision_max = 65536;
    u64 seed = 0;
    std::optional<std::string> output_path;
    int verbosity = 0;

    PrecisionPolicy policy() const { return {precision_start, precision_max, 6}; }
};

struct Args {
    i64 disc = 0;
    int p1 = 0;
    int p2 = 0;
    i64 n = 0;
    std::optional<i64> b;
    u64 prime = 0;
    u64 modulus = 0;
    std::vector<i64> coeffs;
    bool verify_embedded = false;
};

void require_discriminant(i64 d)
{
    Discriminant{d}; // throws for D >= 0 or D = 2, 3 mod 4
}

std::vector<i64> candidates_or_given(const Args& a)
{
    i64 n = static_cast<i64>(a.p1) * a.p2;
    if (a.b)
        return {*a.b};
    return b_candidates(Discriminant(a.disc), n);
}

int cmd_classpoly(const Args& a, const RunConfig& cfg)
{
    require_discriminant(a.disc);
    require_distinct_odd_primes(a.p1, a.p2);
    if (!check_integrality_conditions(a.disc, a.p1, a.p2))
        throw Error(ErrorKind::conditions_violated, "integrality conditions fail");
    for (i64 b : candidates_or_given(a)) {
        ClassPolynomial h = compute_class_polynomial(a.disc, a.p1, a.p2, b, cfg.policy());
        if (cfg.verbosity > 0)
            std::cerr << "B=" << h.b << " bits=" << h.bits_used << " residual=" << h.max_residual << '\n';
        if (a.b)
            std::cout << h.poly.to_string_high_first() << '\n';
        else
            std::cout << "B=" << h.b << ' ' << h.poly.to_string_high_first() << '\n';
    }
    return 0;
}

int cmd_nsystem(const Args& a, const RunConfig&)
{
    require_discriminant(a.disc);
    i64 n = a.n ? a.n : static_cast<i64>(a.p1) * a.p2;
    Discriminant d(a.disc);
    std::vector<i64> bs = a.b ? std::vector<i64>{*a.b} : b_candidates(d, n);
    for (i64 b : bs) {
        NSystem sys = build_nsystem(d, n, b);
        if (!a.b)
            std::cout << "B=" << sys.b << '\n';
        for (const QuadraticForm& f : sys.forms)
            std::cout << f.a << ' ' << f.b << ' ' << f.c << '\n';
    }
    return 0;
}

int cmd_multiplicity(const Args& a, const RunConfig&)
{
    require_discriminant(a.disc);
    for (i64 b : candidates_or_given(a)) {
        MultipleRootCase r = is_multiple_root_case(a.disc, a.p1, a.p2, b);
        std::cout << "B=" << mod(b, 2 * static_cast<i64>(a.p1) * a.p2);
        if (r.multiple)
            std::cout << " MULTIPLE u=" << r.witness->u << " v=" << r.witness->v << '\n';
        else
            std::cout << " SIMPLE\n";
    }
    return 0;
}

int cmd_modpoly(const Args& a, const RunConfig& cfg)
{
    ModularPolynomialOptions opts;
    opts.start = cfg.precision_start;
    if (a.verify_embedded) {
        ModularPolynomial computed = compute_modular_polynomial(3, 13, opts);
        bool ok = computed == embedded_modular_polynomial_3_13();
        std::cout << (ok ? "PASS" : "FAIL") << " embedded Phi_{3,13}\n";
        return ok ? 0 : 1;
    }
    ModularPolynomial phi = compute_modular_polynomial(a.p1, a.p2, opts);
    std::string text = serialize(phi);
    if (cfg.output_path) {
        std::ofstream out(*cfg.output_path, std::ios::binary);
        if (!out)
            throw Error(ErrorKind::invalid_argument, "cannot open " + *cfg.output_path);
        out << text;
    } else {
        std::cout << text;
    }
    return 0;
}

int cmd_roots(const Args& a, const RunConfig& cfg)
{
    std::vector<i64> low_first(a.coeffs.rbegin(), a.coeffs.rend());
    FpPolynomial f = FpPolynomial::from_signed(a.modulus, low_first);
    if (f.degree() < 1)
        throw Error(ErrorKind::invalid_argument, "polynomial must have degree >= 1 mod L");
    for (const FpRoot& r : roots_mod_l(f, cfg.seed))
        std::cout << r.value << ' ' << r.multiplicity << '\n';
    return 0;
}

int cmd_cm_curve(const Args& a, const RunConfig& cfg)
{
    require_discriminant(a.disc);
    CmOptions opts;
    opts.b = a.b;
    opts.seed = cfg.seed;
    opts.precision = cfg.policy();
    CmResult r = construct_cm_curve(a.disc, a.p1, a.p2, a.prime, opts);
    if (cfg.verbosity > 0) {
        std::cerr << "B=" << r.b << " wbar=" << r.wbar << " J=" << r.jbar << " t=" << r.trace.t
                  << " v=" << r.trace.v << '\n';
        for (const std::string& note : r.notes)
            std::cerr << "note: " << note << '\n';
    }
    std::cout << r.curve.q << ' ' << r.curve.a4 << ' ' << r.curve.a6 << ' ' << r.certificate.order << ' '
              << r.certificate.trace << " shortcut=" << (r.used_shortcut ? "yes" : "no") << '\n';
    return 0;
}

int cmd_reproduce(const Args&, const RunConfig& cfg)
{
    bool all = true;
    for (const ExampleCheck& c : reproduce_example(cfg.seed)) {
        std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  (" << c.detail << ")\n";
        all = all && c.pass;
    }
    return all ? 0 : 1;
}

Precision default_precision()
{
    if (const char* env = std::getenv("ETACM_PRECISION")) {
        try {
            long v = std::stol(env);
            if (v >= kMinPrecision)
                return v;
        } catch (const std::exception&) {
        }
        std::cerr << "ignoring ETACM_PRECISION=" << env << '\n';
    }
    return 256;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"eta-quotient class polynomials and CM curve construction"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    cfg.precision_start = default_precision();
    Args args;

    app.add_option("--precision-start", cfg.precision_start, "starting precision in bits")
        ->check(CLI::Range(static_cast<Precision>(kMinPrecision), static_cast<Precision>(1) << 24));
    app.add_option("--precision-max", cfg.precision_max, "largest precision in bits")
        ->check(CLI::Range(static_cast<Precision>(kMinPrecision), static_cast<Precision>(1) << 24));
    app.add_option("--seed", cfg.seed, "seed for randomized steps");
    app.add_flag("-v,--verbose", cfg.verbosity, "diagnostics on standard error");

    auto add_disc = [&](CLI::App* sub) { sub->add_option("--disc", args.disc, "discriminant D < 0")->required(); };
    auto add_primes = [&](CLI::App* sub) {
        sub->add_option("--p1", args.p1, "first prime")->required();
        sub->add_option("--p2", args.p2, "second prime")->required();
    };
    auto add_b = [&](CLI::App* sub) { sub->add_option("--b", args.b, "residue B with B^2 = D mod 4N"); };

    CLI::App* classpoly = app.add_subcommand("classpoly", "class polynomial H_{B,N}");
    add_disc(classpoly);
    add_primes(classpoly);
    add_b(classpoly);

    CLI::App* nsystem = app.add_subcommand("nsystem", "N-system of quadratic forms");
    add_disc(nsystem);
    auto* n_opt = nsystem->add_option("--n", args.n, "level N = p1 p2");
    auto* p1_opt = nsystem->add_option("--p1", args.p1, "first prime");
    nsystem->add_option("--p2", args.p2, "second prime")->needs(p1_opt);
    p1_opt->excludes(n_opt);
    add_b(nsystem);

    CLI::App* multiplicity = app.add_subcommand("multiplicity", "multiple-root test per B");
    add_disc(multiplicity);
    add_primes(multiplicity);
    add_b(multiplicity);

    CLI::App* modpoly = app.add_subcommand("modpoly", "modular polynomial Phi_{p1,p2}(X, J)");
    auto* mp1 = modpoly->add_option("--p1", args.p1, "first prime");
    auto* mp2 = modpoly->add_option("--p2", args.p2, "second prime");
    modpoly->add_option("--out", cfg.output_path, "write the polynomial file here");
    auto* verify = modpoly->add_flag("--verify-embedded", args.verify_embedded,
                                     "recompute Phi_{3,13} and compare with the shipped table");
    verify->excludes(mp1)->excludes(mp2);

    CLI::App* cm = app.add_subcommand("cm-curve", "construct a CM curve over F_q");
    add_disc(cm);
    add_primes(cm);
    cm->add_option("--prime", args.prime, "field characteristic q")->required();
    add_b(cm);
    cm->add_option("--seed", cfg.seed, "seed for randomized steps");

    CLI::App* roots = app.add_subcommand("roots", "roots of a polynomial mod a prime");
    roots->add_option("--mod", args.modulus, "prime modulus L")->required();
    roots->add_option("--coeffs", args.coeffs, "coefficients, highest degree first")->required();

    CLI::App* example = app.add_subcommand("reproduce-example", "run the D = -56, N = 39 example");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }
    if (cfg.precision_start > cfg.precision_max) {
        std::cerr << "--precision-start exceeds --precision-max\n";
        return kExitUsage;
    }
    if (modpoly->parsed() && !args.verify_embedded && (args.p1 == 0 || args.p2 == 0)) {
        std::cerr << "modpoly needs --p1 and --p2 or --verify-embedded\n";
        return kExitUsage;
    }
    if (nsystem->parsed() && args.n == 0 && (args.p1 == 0 || args.p2 == 0)) {
        std::cerr << "nsystem needs --n or --p1 and --p2\n";
        return kExitUsage;
    }

    try {
        if (classpoly->parsed())
            return cmd_classpoly(args, cfg);
        if (nsystem->parsed())
            return cmd_nsystem(args, cfg);
        if (multiplicity->parsed())
            return cmd_multiplicity(args, cfg);
        if (modpoly->parsed())
            return cmd_modpoly(args, cfg);
        if (cm->parsed())
            return cmd_cm_curve(args, cfg);
        if (roots->parsed())
            return cmd_roots(args, cfg);
        if (example->parsed())
            return cmd_reproduce(args, cfg);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.kind() == ErrorKind::precision_exhausted ? kExitPrecision : kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitPrecondition;
    }
    return kExitUsage;
}
