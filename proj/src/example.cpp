#include "etacm/example.hpp"

#include "etacm/cm.hpp"
#include "etacm/classpoly.hpp"
#include "etacm/ffield.hpp"
#include "etacm/modpoly.hpp"

#include <exception>
#include <sstream>

namespace etacm {

namespace {

constexpr i64 kD = -56;
constexpr int kP1 = 3;
constexpr int kP2 = 13;
constexpr i64 kB = 10;
constexpr u64 kQ = 3593;

struct Expected {
    u64 wbar;
    u64 jbar;
};

constexpr Expected kSquares[] = {{607, 229}, {166, 2979}, {3428, 2874}, {2987, 2696}};

template <typename F>
ExampleCheck run(const std::string& name, F body)
{
    try {
        std::string detail;
        bool ok = body(detail);
        return {name, ok, detail};
    } catch (const std::exception& e) {
        return {name, false, e.what()};
    }
}

} // namespace

std::vector<ExampleCheck> reproduce_example(u64 seed)
{
    std::vector<ExampleCheck> out;
    ClassPolynomial h{Discriminant(kD), kP1, kP2, 1, kB, {}};

    out.push_back(run("H coefficients", [&](std::string& detail) {
        h = compute_class_polynomial(kD, kP1, kP2, kB);
        detail = h.poly.to_string_high_first();
        return h.poly == ZPoly{-1, 2, -1, -2, 1};
    }));

    out.push_back(run("H roots mod 3593", [&](std::string& detail) {
        std::vector<u64> c;
        for (const mpz_class& k : h.poly.coeffs())
            c.push_back(mpz_fdiv_ui(k.get_mpz_t(), kQ));
        std::vector<u64> roots;
        for (const FpRoot& r : roots_mod_l(FpPolynomial(kQ, c), seed))
            roots.push_back(r.value);
        std::ostringstream os;
        for (u64 r : roots)
            os << r << ' ';
        detail = os.str();
        detail.pop_back();
        return roots == std::vector<u64>{166, 607, 2987, 3428};
    }));

    const ModularPolynomial& phi = modular_polynomial(kP1, kP2);
    out.push_back(run("perfect-square quadratics", [&](std::string& detail) {
        bool ok = true;
        for (auto [wbar, jbar] : kSquares) {
            FpPolynomial got = evaluate_in_j_mod_l(phi, wbar, kQ).monic();
            FpPolynomial want = FpPolynomial::linear(kQ, jbar) * FpPolynomial::linear(kQ, jbar);
            if (!detail.empty())
                detail += ", ";
            detail += std::to_string(wbar) + "->" + std::to_string(jbar) + (got == want ? "" : "(bad)");
            ok = ok && got == want;
        }
        return ok;
    }));

    out.push_back(run("discriminant divisibility", [&](std::string& detail) {
        ZPolyDivision qr = divide_by_monic(discriminant_in_j(phi), h.poly);
        detail = "remainder degree " + std::to_string(qr.remainder.degree());
        return qr.remainder.is_zero();
    }));

    out.push_back(run("curve order", [&](std::string& detail) {
        CmOptions opts;
        opts.b = kB;
        opts.seed = seed;
        CmResult r = construct_cm_curve(kD, kP1, kP2, kQ, opts);
        u64 n = r.certificate.order;
        detail = "order " + std::to_string(n) + " shortcut " + (r.used_shortcut ? "yes" : "no");
        return (n == 3588 || n == 3600) && r.used_shortcut && r.certificate.random_checks == 20;
    }));
    return out;
}

} // namespace etacm
