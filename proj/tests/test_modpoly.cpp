#include "oracles.hpp"

#include "etacm/classpoly.hpp"
#include "etacm/error.hpp"
#include "etacm/eta.hpp"
#include "etacm/modpoly.hpp"

#include <doctest.h>

#include <random>

using namespace etacm;

namespace {

ErrorKind kind_of(auto&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no etacm::Error thrown");
    return ErrorKind::invalid_argument;
}

/* Phi(x, j) over C */
Complex evaluate(const ModularPolynomial& phi, const Complex& x, const Complex& j)
{
    Precision p = x.precision();
    Complex acc(p);
    for (int kx = phi.deg_x; kx >= 0; --kx) {
        Complex row(p);
        for (int kj = phi.deg_j; kj >= 0; --kj)
            row = row * j + Real(phi.coeff(kx, kj), p);
        acc = acc * x + row;
    }
    return acc;
}

/* |Phi| relative to the largest term, so that huge values still compare */
double relative_residual(const ModularPolynomial& phi, const Complex& x, const Complex& j)
{
    Precision p = x.precision();
    Real scale(1L, p);
    Real xa = x.abs(), ja = j.abs();
    for (int kx = 0; kx <= phi.deg_x; ++kx) {
        for (int kj = 0; kj <= phi.deg_j; ++kj) {
            if (phi.coeff(kx, kj) == 0)
                continue;
            Real t = abs(Real(phi.coeff(kx, kj), p));
            for (int i = 0; i < kx; ++i)
                t *= xa;
            for (int i = 0; i < kj; ++i)
                t *= ja;
            if (t > scale)
                scale = t;
        }
    }
    return (evaluate(phi, x, j).abs() / scale).to_double();
}

Complex random_tau(std::mt19937_64& rng, Precision p)
{
    std::uniform_real_distribution<double> re(-0.5, 0.5), im(0.6, 1.6);
    return Complex(re(rng), im(rng), p);
}

} // namespace

TEST_SUITE("modpoly")
{
    TEST_CASE("index of Gamma^0(N)")
    {
        CHECK(psi(39) == 56);
        CHECK(psi(15) == 24);
        CHECK(psi(65) == 84);
    }

    TEST_CASE("coset representatives")
    {
        for (i64 n : {15L, 21L, 35L, 39L, 65L}) {
            auto reps = coset_representatives(n);
            REQUIRE(static_cast<i64>(reps.size()) == psi(n));
            for (const Mat2& g : reps)
                REQUIRE(g.det() == 1);
            for (std::size_t a = 0; a < reps.size(); ++a) {
                for (std::size_t b = 0; b < reps.size(); ++b) {
                    if (a != b)
                        REQUIRE(mod((reps[a] * reps[b].inverse()).b, n) != 0);
                }
            }
            // every matrix lies in exactly one coset
            std::mt19937_64 rng(static_cast<u64>(n));
            std::uniform_int_distribution<i64> pick(-50, 50);
            for (int k = 0; k < 200; ++k) {
                i64 a = pick(rng), c = pick(rng);
                auto e = extended_gcd(a, c);
                if (e.g != 1)
                    continue;
                Mat2 m{a, -e.y, c, e.x};
                int hits = 0;
                for (const Mat2& g : reps)
                    hits += mod((m * g.inverse()).b, n) == 0;
                REQUIRE(hits == 1);
            }
        }
        CHECK(kind_of([] { coset_representatives(45); }) == ErrorKind::invalid_argument);
    }

    TEST_CASE("embedded Phi_{3,13} shows the displayed coefficients")
    {
        ModularPolynomial phi = embedded_modular_polynomial_3_13();
        CHECK(phi.p1 == 3);
        CHECK(phi.p2 == 13);
        CHECK(phi.s == 1);
        CHECK(phi.deg_x == 56);
        CHECK(phi.deg_j == 2);
        const std::tuple<int, int, const char*> spots[] = {
            {56, 0, "1"},          {56, 1, "0"},        {55, 0, "704"},        {55, 1, "-1"},
            {54, 0, "168568"},     {54, 1, "39"},       {53, 0, "14498520"},   {53, 1, "-663"},
            {47, 1, "3516903"},    {32, 0, "977815434427"}, {25, 0, "1628026178168"}, {25, 1, "-6888479"},
            {16, 0, "-26470898021"}, {16, 1, "-1486"},  {16, 2, "1"},          {2, 0, "88"},
            {1, 0, "-16"},         {0, 0, "1"},         {0, 1, "0"},           {0, 2, "0"},
        };
        for (auto [kx, kj, want] : spots) {
            INFO("X^" << kx << " J^" << kj);
            CHECK(phi.coeff(kx, kj) == mpz_class(want));
        }
        CHECK(phi.x_coefficient(55) == ZPoly{704, -1});
        CHECK(phi.x_coefficient(16) == ZPoly(std::vector<mpz_class>{mpz_class("-26470898021"), mpz_class(-1486), mpz_class(1)}));
    }

    TEST_CASE("interpolation reproduces the embedded table")
    {
        ModularPolynomial computed = compute_modular_polynomial(3, 13);
        CHECK(computed == embedded_modular_polynomial_3_13());
        CHECK(compute_modular_polynomial(13, 3) == computed);
        ModularPolynomialOptions high;
        high.start = 768;
        CHECK(compute_modular_polynomial(3, 13, high) == computed);
    }

    TEST_CASE("other desk-scale levels")
    {
        for (auto [p1, p2, dx, dj] : {std::tuple{3, 5, 24, 2}, {3, 7, 32, 2}, {5, 7, 48, 2}, {5, 13, 84, 4}}) {
            ModularPolynomial phi = compute_modular_polynomial(p1, p2);
            REQUIRE(phi.deg_x == dx);
            REQUIRE(phi.deg_j == dj);
            REQUIRE(phi.coeff(dx, 0) == 1);
            bool has_top_j = false;
            for (int kx = 0; kx <= dx; ++kx)
                has_top_j = has_top_j || phi.coeff(kx, dj) != 0;
            REQUIRE(has_top_j);
            std::mt19937_64 rng(static_cast<u64>(p1 * 100 + p2));
            for (int k = 0; k < 5; ++k) {
                Complex tau = random_tau(rng, 256);
                Complex w = w_pow_s(UpperHalfPoint(tau), p1, p2, 256);
                Complex j = j_invariant(UpperHalfPoint(tau), 256);
                REQUIRE(relative_residual(phi, w, j) < 1e-50);
            }
        }
        CHECK(kind_of([] { compute_modular_polynomial(7, 13); }) == ErrorKind::invalid_argument);
        CHECK(kind_of([] { compute_modular_polynomial(3, 3); }) == ErrorKind::invalid_argument);
    }

    TEST_CASE("the J-roots of Phi(w^s(tau), J) are J(tau) and J(W_N tau)")
    {
        const ModularPolynomial& phi = modular_polynomial(3, 13);
        std::mt19937_64 rng(5);
        const Precision p = 256;
        for (int k = 0; k < 20; ++k) {
            Complex tau = random_tau(rng, p + 64);
            Complex w = w_pow_s(UpperHalfPoint(tau), 3, 13, p);
            Complex j1 = j_invariant(UpperHalfPoint(tau), p);
            Complex j2 = j_invariant(UpperHalfPoint(apply(Mat2{0, 39, -1, 0}, tau)), p);
            REQUIRE(relative_residual(phi, w, j1) < 1e-50);
            REQUIRE(relative_residual(phi, w, j2) < 1e-50);
            // c2 J^2 + c1 J + c0 at X = w: the roots sum to -c1 / c2
            Complex c[3] = {Complex(p), Complex(p), Complex(p)};
            for (int kj = 0; kj < 3; ++kj) {
                for (int kx = phi.deg_x; kx >= 0; --kx)
                    c[kj] = c[kj] * w + Real(phi.coeff(kx, kj), p);
            }
            Complex sum = -c[1] / c[2];
            REQUIRE(((sum - j1 - j2).abs() / (j1.abs() + j2.abs())).to_double() < 1e-40);
        }
    }

    TEST_CASE("serialization")
    {
        ModularPolynomial phi = embedded_modular_polynomial_3_13();
        std::string text = serialize(phi);
        CHECK(text == std::string(embedded_modular_polynomial_text_3_13()));
        CHECK(text.rfind("MODPOLY v1 p1=3 p2=13 s=1 degX=56 degJ=2\n56 0 1\n55 0 704\n55 1 -1\n", 0) == 0);
        CHECK(text.back() == '\n');
        CHECK(deserialize(text) == phi);

        CHECK(kind_of([] { deserialize(""); }) == ErrorKind::malformed_header);
        CHECK(kind_of([] { deserialize("MODPOLY v2 p1=3 p2=13 s=1 degX=56 degJ=2\n"); }) == ErrorKind::malformed_header);
        CHECK(kind_of([] { deserialize("MODPOLY v1 p1=3 p2=13 s=1 degX=56\n"); }) == ErrorKind::malformed_header);
        CHECK(kind_of([] { deserialize("MODPOLY v1 p1=3 p2=13 s=1 degX=55 degJ=2\n"); }) == ErrorKind::malformed_header);
        CHECK(kind_of([] { deserialize("MODPOLY v1 p1=3 p2=x s=1 degX=56 degJ=2\n"); }) == ErrorKind::malformed_header);
        const std::string head = "MODPOLY v1 p1=3 p2=13 s=1 degX=56 degJ=2\n";
        CHECK(kind_of([&] { deserialize(head + "56 0 1\n3 1 12a\n"); }) == ErrorKind::coefficient_parse_failure);
        CHECK(kind_of([&] { deserialize(head + "56 0 1\n57 0 1\n"); }) == ErrorKind::coefficient_parse_failure);
        CHECK(kind_of([&] { deserialize(head + "56 0 1\n5 0\n"); }) == ErrorKind::coefficient_parse_failure);
        CHECK(kind_of([&] { deserialize(head + "55 0 704\n"); }) == ErrorKind::coefficient_parse_failure);
    }

    TEST_CASE("specialisation at a residue mod l")
    {
        const ModularPolynomial& phi = modular_polynomial(3, 13);
        const u64 l = 3593;
        auto square = [&](u64 r) { return FpPolynomial::linear(l, r) * FpPolynomial::linear(l, r); };
        FpPolynomial f = evaluate_in_j_mod_l(phi, 607, l);
        CHECK(f.degree() == 2);
        CHECK(f.leading() == powmod(607, 16, l)); // only X^16 carries J^2
        CHECK(f.monic() == square(229));
        CHECK(evaluate_in_j_mod_l(phi, 166, l).monic() == square(2979));
        FpPolynomial zero_row = evaluate_in_j_mod_l(phi, 0, l);
        CHECK(zero_row.degree() == 0);
        CHECK(zero_row.coeff(0) == 1);
        CHECK(evaluate_in_x_mod_l(phi, 229, l).degree() == 56);
    }

    TEST_CASE("four linear factors over F_3593 for the CM values of J")
    {
        const ModularPolynomial& phi = modular_polynomial(3, 13);
        // counted with multiplicity: the root shared with H is double
        for (u64 j : {229, 2979, 2874, 2696}) {
            FpPolynomial f = evaluate_in_x_mod_l(phi, j, 3593);
            std::vector<FpRoot> roots = roots_mod_l(f);
            CHECK(roots.size() == oracle::roots_by_exhaustion(f.coeffs(), 3593).size());
            int factors = 0;
            for (const FpRoot& r : roots)
                factors += r.multiplicity;
            CHECK(factors >= 4);
        }
    }

    TEST_CASE("discriminant in J")
    {
        const ModularPolynomial& phi = modular_polynomial(3, 13);
        ZPoly disc = discriminant_in_j(phi);
        ZPoly h10 = compute_class_polynomial(-56, 3, 13, 10).poly;
        ZPoly h16 = compute_class_polynomial(-56, 3, 13, 16).poly;
        CHECK(divide_by_monic(disc, h10).remainder.is_zero());
        CHECK_FALSE(divide_by_monic(disc, h16).remainder.is_zero());

        ModularPolynomial flat = phi;
        for (auto& row : flat.coeffs)
            row[0] = row[1] = 0;
        CHECK(discriminant_in_j(flat).is_zero());
        ModularPolynomial quartic = phi;
        quartic.deg_j = 4;
        CHECK(kind_of([&] { discriminant_in_j(quartic); }) == ErrorKind::wrong_degree);
    }
}
