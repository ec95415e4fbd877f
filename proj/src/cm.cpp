#include "etacm/cm.hpp"

#include "etacm/atkin.hpp"
#include "etacm/error.hpp"
#include "etacm/ffield.hpp"

#include <algorithm>
#include <tuple>
#include <unordered_map>

namespace etacm {

namespace {

constexpr u64 kExhaustiveTraceBound = 1000000;
constexpr u64 kExhaustiveCountBound = 1000000;
constexpr int kOrderChecks = 20;

u64 addm(u64 a, u64 b, u64 q) { return (a + b) % q; }
u64 subm(u64 a, u64 b, u64 q) { return (a + q - b) % q; }
u64 invm(u64 a, u64 q) { return powmod(a, q - 2, q); }

struct Point {
    u64 x = 0;
    u64 y = 0;
    bool inf = true;

    friend bool operator==(const Point&, const Point&) = default;
};

struct Group {
    u64 q;
    u64 a4;
    u64 a6;

    Point add(const Point& p, const Point& r) const
    {
        if (p.inf)
            return r;
        if (r.inf)
            return p;
        u64 lambda;
        if (p.x == r.x) {
            if (addm(p.y, r.y, q) == 0)
                return {};
            u64 num = addm(mulmod(3, mulmod(p.x, p.x, q), q), a4, q);
            lambda = mulmod(num, invm(mulmod(2, p.y, q), q), q);
        } else {
            lambda = mulmod(subm(r.y, p.y, q), invm(subm(r.x, p.x, q), q), q);
        }
        u64 x3 = subm(subm(mulmod(lambda, lambda, q), p.x, q), r.x, q);
        u64 y3 = subm(mulmod(lambda, subm(p.x, x3, q), q), p.y, q);
        return {x3, y3, false};
    }

    Point neg(const Point& p) const
    {
        return p.inf ? p : Point{p.x, subm(0, p.y, q), false};
    }

    Point mul(Point p, u64 n) const
    {
        Point acc;
        while (n) {
            if (n & 1)
                acc = add(acc, p);
            n >>= 1;
            if (n)
                p = add(p, p);
        }
        return acc;
    }

    u64 rhs(u64 x) const
    {
        return addm(addm(mulmod(mulmod(x, x, q), x, q), mulmod(a4, x, q), q), a6, q);
    }

    Point random_point(std::mt19937_64& rng) const
    {
        std::uniform_int_distribution<u64> pick(0, q - 1);
        for (;;) {
            u64 x = pick(rng);
            auto y = sqrt_mod_l(FpElement(static_cast<i64>(rhs(x)), q));
            if (!y)
                continue;
            u64 yy = y->value();
            if (rng() & 1)
                yy = subm(0, yy, q);
            return {x, yy, false};
        }
    }
};

Group group_of(const EllipticCurve& e)
{
    return {e.q, e.a4, e.a6};
}

u64 smallest_nonresidue(u64 q)
{
    for (u64 g = 2;; ++g) {
        if (powmod(g, (q - 1) / 2, q) == q - 1)
            return g;
    }
}

u64 primitive_root(u64 q)
{
    auto fac = factor(q - 1);
    for (u64 g = 2;; ++g) {
        bool ok = true;
        for (auto [p, e] : fac) {
            if (powmod(g, (q - 1) / p, q) == 1) {
                ok = false;
                break;
            }
        }
        if (ok)
            return g;
    }
}

u64 count_by_character_sum(const EllipticCurve& e)
{
    const u64 q = e.q;
    std::vector<bool> square(q, false);
    for (u64 y = 1; y <= q / 2; ++y)
        square[mulmod(y, y, q)] = true;
    Group g = group_of(e);
    i64 sum = 0;
    for (u64 x = 0; x < q; ++x) {
        u64 r = g.rhs(x);
        if (r != 0)
            sum += square[r] ? 1 : -1;
    }
    return static_cast<u64>(static_cast<i64>(q) + 1 + sum);
}

struct PointHash {
    std::size_t operator()(const Point& p) const
    {
        return std::hash<u64>()(p.x * 0x9e3779b97f4a7c15ULL ^ p.y ^ (p.inf ? 1 : 0));
    }
};

/* all m in [lo, hi] with m P = O; empty when P has order below the baby-step count */
std::vector<u64> annihilators_in_interval(const Group& g, const Point& p, u64 lo, u64 hi)
{
    const u64 width = hi - lo + 1;
    const u64 baby = isqrt(width) + 1;
    std::unordered_map<Point, u64, PointHash> table;
    Point jp;
    for (u64 j = 0; j < baby; ++j) {
        if (j > 0 && jp.inf)
            return {}; // order of P is tiny
        table.emplace(jp, j);
        jp = g.add(jp, p);
    }
    const Point giant = g.neg(g.mul(p, baby));
    Point cur = g.neg(g.mul(p, lo)); // -lo P - i baby P
    std::vector<u64> out;
    for (u64 i = 0; i * baby < width + baby; ++i) {
        auto it = table.find(cur);
        if (it != table.end()) {
            u64 m = lo + i * baby + it->second;
            if (m <= hi)
                out.push_back(m);
        }
        cur = g.add(cur, giant);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

u64 count_by_bsgs(const EllipticCurve& e, u64 seed)
{
    const u64 q = e.q;
    const u64 r = 2 * isqrt(q) + 2;
    const u64 lo = q + 1 - std::min(r, q + 1);
    const u64 hi = q + 1 + r;
    std::mt19937_64 rng(seed);
    Group g = group_of(e);
    Group t = group_of(quadratic_twist(e));

    std::vector<u64> cand, twist_cand;
    for (int round = 0; round < 64; ++round) {
        std::vector<u64> c = annihilators_in_interval(g, g.random_point(rng), lo, hi);
        if (!c.empty()) {
            if (cand.empty()) {
                cand = c;
            } else {
                std::vector<u64> keep;
                std::set_intersection(cand.begin(), cand.end(), c.begin(), c.end(), std::back_inserter(keep));
                cand = keep;
            }
        }
        std::vector<u64> ct = annihilators_in_interval(t, t.random_point(rng), lo, hi);
        if (!ct.empty()) {
            if (twist_cand.empty()) {
                twist_cand = ct;
            } else {
                std::vector<u64> keep;
                std::set_intersection(twist_cand.begin(), twist_cand.end(), ct.begin(), ct.end(),
                                      std::back_inserter(keep));
                twist_cand = keep;
            }
        }
        // #E + #E' = 2q + 2
        std::vector<u64> both;
        for (u64 m : cand) {
            if (m > 2 * q + 2)
                continue;
            u64 other = 2 * q + 2 - m;
            if (twist_cand.empty() || std::binary_search(twist_cand.begin(), twist_cand.end(), other))
                both.push_back(m);
        }
        if (both.size() == 1 && !twist_cand.empty())
            return both.front();
    }
    throw Error(ErrorKind::precision_exhausted, "baby-step giant-step did not isolate the group order");
}

std::vector<u64> fp_coefficients(const ZPoly& h, u64 q)
{
    std::vector<u64> c;
    for (const mpz_class& k : h.coeffs())
        c.push_back(mpz_fdiv_ui(k.get_mpz_t(), q));
    return c;
}

} // namespace

std::optional<TraceSolution> find_trace(i64 d, u64 q)
{
    if (q < 3 || !is_prime(q) || q >> 61)
        throw Error(ErrorKind::invalid_argument, "q must be an odd prime below 2^61");
    if (d >= 0)
        throw Error(ErrorKind::invalid_discriminant, "D must be negative");
    if (mod(d, static_cast<i64>(q)) == 0)
        throw Error(ErrorKind::invalid_argument, "q divides D");
    const u128 four_q = u128(4) * q;
    const u128 ad = static_cast<u128>(-d);

    if (q < kExhaustiveTraceBound || ad <= 4) {
        for (u64 v = 1; ad * v * v < four_q; ++v) {
            auto t = exact_sqrt(static_cast<i64>(four_q - ad * v * v));
            if (t && *t > 0)
                return TraceSolution{q, *t, static_cast<i64>(v)};
        }
        return std::nullopt;
    }

    // Cornacchia for t^2 + |D| v^2 = 4q
    auto root = sqrt_mod_l(FpElement(d, q));
    if (!root)
        return std::nullopt;
    u64 b = root->value();
    if ((b & 1) != static_cast<u64>(mod(d, 2)))
        b = q - b;
    u128 a = 2 * u128(q);
    u128 bb = b;
    const u128 limit = isqrt(static_cast<u64>(four_q));
    while (bb > limit) {
        u128 r = a % bb;
        a = bb;
        bb = r;
    }
    u128 rest = four_q - bb * bb;
    if (bb == 0 || rest % ad != 0)
        return std::nullopt;
    auto v = exact_sqrt(static_cast<i64>(rest / ad));
    if (!v || *v == 0)
        return std::nullopt;
    return TraceSolution{q, static_cast<i64>(bb), *v};
}

u64 j_invariant(const EllipticCurve& e)
{
    const u64 q = e.q;
    u64 a43 = mulmod(4, mulmod(mulmod(e.a4, e.a4, q), e.a4, q), q);
    u64 den = addm(a43, mulmod(27, mulmod(e.a6, e.a6, q), q), q);
    if (den == 0)
        throw Error(ErrorKind::invalid_argument, "singular curve");
    return mulmod(mulmod(1728 % q, a43, q), invm(den, q), q);
}

EllipticCurve curve_from_j(u64 jbar, u64 q)
{
    if (q <= 3 || !is_prime(q))
        throw Error(ErrorKind::invalid_argument, "curve_from_j needs a prime q > 3");
    jbar %= q;
    if (jbar == 0)
        return {q, 0, 1};
    if (jbar == 1728 % q)
        return {q, 1, 0};
    u64 k = mulmod(jbar, invm(subm(1728 % q, jbar, q), q), q);
    return {q, mulmod(3, k, q), mulmod(2, k, q)};
}

EllipticCurve quadratic_twist(const EllipticCurve& e)
{
    const u64 q = e.q;
    u64 c = smallest_nonresidue(q);
    return {q, mulmod(e.a4, mulmod(c, c, q), q), mulmod(e.a6, mulmod(mulmod(c, c, q), c, q), q)};
}

std::vector<EllipticCurve> twists(const EllipticCurve& e)
{
    const u64 q = e.q;
    if (e.a4 != 0 && e.a6 != 0)
        return {e, quadratic_twist(e)};
    u64 g = primitive_root(q);
    u64 classes = static_cast<u64>(gcd(static_cast<i64>(q - 1), e.a4 == 0 ? 6 : 4));
    std::vector<EllipticCurve> out;
    u64 w = 1;
    for (u64 k = 0; k < classes; ++k) {
        if (e.a4 == 0)
            out.push_back({q, 0, mulmod(e.a6, w, q)});
        else
            out.push_back({q, mulmod(e.a4, w, q), 0});
        w = mulmod(w, g, q);
    }
    return out;
}

u64 point_count(const EllipticCurve& e, u64 seed)
{
    j_invariant(e); // rejects singular curves
    if (e.q <= kExhaustiveCountBound)
        return count_by_character_sum(e);
    if (e.q >> 40)
        throw Error(ErrorKind::invalid_argument, "point counting is limited to q < 2^40");
    return count_by_bsgs(e, seed);
}

int random_order_checks(const EllipticCurve& e, u64 n, int trials, std::mt19937_64& rng)
{
    Group g = group_of(e);
    int pass = 0;
    for (int i = 0; i < trials; ++i) {
        if (g.mul(g.random_point(rng), n).inf)
            ++pass;
    }
    return pass;
}

std::vector<u64> candidate_j_roots(const ModularPolynomial& phi, const ZPoly& h, u64 q, u64 seed)
{
    std::vector<u64> out;
    FpPolynomial hq(q, fp_coefficients(h, q));
    for (const FpRoot& w : roots_mod_l(hq, seed)) {
        FpPolynomial jp = evaluate_in_j_mod_l(phi, w.value, q);
        if (jp.degree() < 1)
            continue;
        for (const FpRoot& j : roots_mod_l(jp, seed))
            out.push_back(j.value);
    }
    return out;
}

CmResult construct_cm_curve(i64 d, int p1, int p2, u64 q, const CmOptions& options)
{
    if (!check_integrality_conditions(d, p1, p2))
        throw Error(ErrorKind::conditions_violated, "integrality conditions fail");
    if (q <= 3 || !is_prime(q))
        throw Error(ErrorKind::invalid_argument, "q must be a prime above 3");
    if (mod(d, static_cast<i64>(q)) == 0)
        throw Error(ErrorKind::no_trace, "q divides D");
    auto trace = find_trace(d, q);
    if (!trace)
        throw Error(ErrorKind::no_trace, "4q = t^2 - D v^2 has no solution");

    const i64 n = static_cast<i64>(p1) * p2;
    i64 b;
    if (options.b) {
        b = mod(*options.b, 2 * n);
    } else {
        auto cands = b_candidates(Discriminant(d), n);
        b = cands.front();
        for (i64 c : cands) {
            if (multiple_root_condition(d, n, c)) {
                b = c;
                break;
            }
        }
    }

    ClassPolynomial h = compute_class_polynomial(d, p1, p2, b, options.precision);
    std::mt19937_64 rng(options.seed);
    FpPolynomial hq(q, fp_coefficients(h.poly, q));
    std::vector<FpRoot> wroots = hq.degree() >= 1 ? roots_mod_l(hq, rng) : std::vector<FpRoot>{};
    if (wroots.empty())
        throw Error(ErrorKind::no_rational_j_root, "H has no root mod q");

    CmResult res{};
    res.trace = *trace;
    res.b = b;
    res.wbar = wroots.front().value;

    const ModularPolynomial& phi = modular_polynomial(p1, p2);
    FpPolynomial jpoly = evaluate_in_j_mod_l(phi, res.wbar, q);
    if (jpoly.degree() < 1)
        throw Error(ErrorKind::no_rational_j_root, "Phi(wbar, J) is constant mod q");
    std::vector<FpRoot> jroots = roots_mod_l(jpoly, rng);

    const u64 n_minus = q + 1 - static_cast<u64>(trace->t);
    const u64 n_plus = q + 1 + static_cast<u64>(trace->t);

    if (phi.deg_j == 2 && has_multiple_root(jpoly)) {
        auto it = std::find_if(jroots.begin(), jroots.end(), [](const FpRoot& r) { return r.multiplicity >= 2; });
        if (it != jroots.end()) {
            for (const EllipticCurve& e : twists(curve_from_j(it->value, q))) {
                bool ok_minus = random_order_checks(e, n_minus, kOrderChecks, rng) == kOrderChecks;
                bool ok_plus = random_order_checks(e, n_plus, kOrderChecks, rng) == kOrderChecks;
                if (!ok_minus && !ok_plus)
                    continue;
                u64 order = ok_minus ? n_minus : n_plus;
                bool ambiguous = ok_minus && ok_plus;
                if (ambiguous) {
                    order = point_count(e, options.seed);
                    res.notes.push_back("both twist orders passed the random checks; resolved by point counting");
                }
                res.used_shortcut = true;
                res.jbar = it->value;
                res.curve = e;
                res.certificate = {e, order, static_cast<i64>(q + 1) - static_cast<i64>(order),
                                   random_order_checks(e, order, kOrderChecks, rng), ambiguous};
                return res;
            }
            res.notes.push_back("double root did not certify; falling back to point counting");
        }
    }

    struct Candidate {
        u64 j;
        EllipticCurve e;
        u64 order;
    };
    std::vector<Candidate> found;
    for (const FpRoot& r : jroots) {
        for (const EllipticCurve& e : twists(curve_from_j(r.value, q))) {
            u64 order = point_count(e, options.seed);
            if (order == n_minus || order == n_plus)
                found.push_back({r.value, e, order});
        }
    }
    if (found.empty())
        throw Error(ErrorKind::no_rational_j_root, "no rational J-root gives a curve with the CM order");
    auto best = std::min_element(found.begin(), found.end(), [](const Candidate& x, const Candidate& y) {
        return std::tie(x.j, x.e.a4, x.e.a6) < std::tie(y.j, y.e.a4, y.e.a6);
    });
    bool ambiguous = std::any_of(found.begin(), found.end(), [&](const Candidate& c) { return c.j != best->j; });
    if (ambiguous)
        res.notes.push_back("several J-roots give curves with the CM order; chose the smallest (J, a4, a6)");
    res.jbar = best->j;
    res.curve = best->e;
    res.certificate = {best->e, best->order, static_cast<i64>(q + 1) - static_cast<i64>(best->order),
                       random_order_checks(best->e, best->order, kOrderChecks, rng), ambiguous};
    return res;
}

} // namespace etacm
