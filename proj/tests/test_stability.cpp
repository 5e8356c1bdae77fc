// Equilibria, characteristic polynomials, the stable quadratic solver, the
// trinomial root-bound machinery, and the coefficient-based predicates.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "holomap/audit.hpp"
#include "holomap/reference_data.hpp"
#include "holomap/stability.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <utility>
#include <vector>

using namespace holomap;

namespace {

std::mt19937_64 rng(777);

double uniform(double lo, double hi) {
    const double u = double(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

Complex rand_c(double lo, double hi) { return {uniform(lo, hi), uniform(lo, hi)}; }

constexpr double kPhi = 1.6180339887498949;

}  // namespace

TEST_CASE("equilibria of the first map are the square roots of alpha+beta") {
    const MapSpec spec{MapKind::E1, Complex(3), Complex(1)};
    const EquilibriaResult eq = equilibria(spec);
    CHECK_FALSE(eq.degenerate);
    REQUIRE(eq.values.size() == 2);
    // Both signs present, and each satisfies z = alpha/z + beta/z.
    CHECK(std::abs(eq.values[0] + eq.values[1]) < 1e-15);
    for (const Complex z : eq.values) {
        CHECK(std::abs(z * z - Complex(4)) < 1e-12);
        CHECK(std::abs(z - (spec.alpha / z + spec.beta / z)) < 1e-12);
    }
}

TEST_CASE("equilibria of the ratio maps equal alpha+beta") {
    for (const MapKind k : {MapKind::E8, MapKind::E9}) {
        const MapSpec spec{k, Complex(2, 1), Complex(-1, 3)};
        const EquilibriaResult eq = equilibria(spec);
        CHECK_FALSE(eq.degenerate);
        REQUIRE(eq.values.size() == 1);
        CHECK(eq.values[0] == Complex(1, 4));
    }
}

TEST_CASE("degenerate parameter sum") {
    const EquilibriaResult e1 = equilibria({MapKind::E1, Complex(1, 2), Complex(-1, -2)});
    CHECK(e1.degenerate);
    REQUIRE(e1.values.size() == 1);
    CHECK(e1.values[0] == Complex(0));

    const EquilibriaResult e8 = equilibria({MapKind::E8, Complex(1), Complex(-1)});
    CHECK(e8.degenerate);
    CHECK(e8.values[0] == Complex(0));

    CHECK_THROWS_AS(charpoly({MapKind::E1, Complex(1), Complex(-1)}),
                    DegenerateParameters);
}

TEST_CASE("characteristic polynomial coefficients") {
    const Complex a(2, -1), b(0.5, 3);
    const Complex s = a + b;
    const CharPoly2 p1 = charpoly({MapKind::E1, a, b});
    CHECK(std::abs(p1.a1 - a / s) < 1e-15);
    CHECK(std::abs(p1.a0 - b / s) < 1e-15);
    const CharPoly2 p8 = charpoly({MapKind::E8, a, b});
    CHECK(std::abs(p8.a1 + b / s) < 1e-15);
    CHECK(std::abs(p8.a0 - b / s) < 1e-15);
    const CharPoly2 p9 = charpoly({MapKind::E9, a, b});
    CHECK(std::abs(p9.a1 - a / s) < 1e-15);
    CHECK(std::abs(p9.a0 + a / s) < 1e-15);
}

TEST_CASE("published table polynomials are reproduced exactly") {
    // Every special-parameter row's printed polynomial must agree with the
    // recomputed one to 1e-15 in both coefficients.
    const auto rows = audit_stability_tables();
    CHECK(rows.size() == 15);
    for (const auto& row : rows) {
        INFO(row.source.table, " ", row.source.params);
        CHECK(row.poly_matches);
        CHECK(row.poly_error <= 1e-15);
    }
}

TEST_CASE("exactly the known special-parameter rows disagree with their printed verdicts") {
    const auto rows = audit_stability_tables();
    std::vector<std::pair<std::string, std::string>> flagged;
    for (const auto& row : rows)
        if (!row.claim_agrees) flagged.emplace_back(row.source.table, row.source.params);
    std::vector<std::pair<std::string, std::string>> expected = {
        {"e1", "alpha=beta"},    {"e1", "alpha=i*beta"},  {"e1", "alpha=-i*beta"},
        {"e8", "alpha=i*beta"},  {"e8", "alpha=-i*beta"}, {"e9", "alpha=i*beta"},
        {"e9", "alpha=-i*beta"}, {"e9", "beta=0"},
    };
    std::sort(flagged.begin(), flagged.end());
    std::sort(expected.begin(), expected.end());
    CHECK(flagged == expected);
    // The alpha=0 rows all agree.
    for (const auto& row : rows)
        if (row.source.params == "alpha=0") CHECK(row.claim_agrees);
}

TEST_CASE("solve_quadratic: exact real roots, ordered by modulus") {
    const RootPair r = solve_quadratic({Complex(0.5), Complex(-0.5)});
    CHECK(std::abs(r.lambda_plus - Complex(-1)) < 1e-15);
    CHECK(std::abs(r.lambda_minus - Complex(0.5)) < 1e-15);
    CHECK(r.mod_plus == doctest::Approx(1.0));
    CHECK(r.mod_minus == doctest::Approx(0.5));
}

TEST_CASE("solve_quadratic: no cancellation for widely split roots") {
    // Roots 1e8 and 1e-8.
    const RootPair r = solve_quadratic({Complex(-(1e8 + 1e-8)), Complex(1.0)});
    CHECK(std::abs(r.lambda_plus.real() - 1e8) < 1e-4);
    CHECK(std::abs(r.lambda_minus.real() - 1e-8) < 1e-20);
}

TEST_CASE("solve_quadratic: complex roots") {
    // (L - (2+i)) (L - (-1+3i)):  a1 = -(1+4i), a0 = -5+5i.
    const RootPair r = solve_quadratic({Complex(-1, -4), Complex(-5, 5)});
    CHECK(std::abs(r.lambda_plus - Complex(-1, 3)) < 1e-12);
    CHECK(std::abs(r.lambda_minus - Complex(2, 1)) < 1e-12);
}

TEST_CASE("solve_quadratic: Vieta identities on random coefficients") {
    for (int trial = 0; trial < 200; ++trial) {
        const CharPoly2 p{rand_c(-10, 10), rand_c(-10, 10)};
        const RootPair r = solve_quadratic(p);
        CHECK(r.mod_plus >= r.mod_minus);
        CHECK(std::abs(r.lambda_plus * r.lambda_minus - p.a0) <= 1e-12 * (1 + std::abs(p.a0)));
        CHECK(std::abs(r.lambda_plus + r.lambda_minus + p.a1) <= 1e-12 * (1 + std::abs(p.a1)));
    }
}

TEST_CASE("root classification") {
    auto rp = [](Complex plus, Complex minus) {
        return RootPair{plus, minus, std::abs(plus), std::abs(minus)};
    };
    CHECK(classify_roots(rp(Complex(0.5), Complex(0, 0.25))) ==
          StabilityClass::LocAsympStable);
    CHECK(classify_roots(rp(Complex(2), Complex(-1.5))) == StabilityClass::AllOutside);
    CHECK(classify_roots(rp(Complex(2), Complex(0.5))) == StabilityClass::Saddle);
    CHECK(classify_roots(rp(Complex(1), Complex(0.5))) == StabilityClass::NonHyperbolic);
    // Tolerance band 1e-9 around modulus 1.
    CHECK(classify_roots(rp(Complex(1 + 1e-10), Complex(0.5))) ==
          StabilityClass::NonHyperbolic);
    CHECK(classify_roots(rp(Complex(1 + 1e-8), Complex(0.5))) == StabilityClass::Saddle);
}

TEST_CASE("class and label names") {
    CHECK(std::string(stability_class_name(StabilityClass::LocAsympStable)) ==
          "locally_asymptotically_stable");
    CHECK(std::string(stability_class_name(StabilityClass::AllOutside)) ==
          "all_roots_outside");
    // Published tables swap the usual sink/repeller wording; the labels
    // reproduce that usage on purpose.
    CHECK(std::string(stability_published_label(StabilityClass::LocAsympStable)) ==
          "l.a.s/repeller");
    CHECK(std::string(stability_published_label(StabilityClass::AllOutside)) == "sink");
    CHECK(std::string(stability_published_label(StabilityClass::Saddle)) == "saddle");
    CHECK(std::string(stability_published_label(StabilityClass::NonHyperbolic)) == "non-hyp");
}

TEST_CASE("trinomial largest root") {
    CHECK(trinomial_largest_root(1) == 1.0);
    CHECK(std::abs(trinomial_largest_root(2) - kPhi) < 1e-9);
    CHECK(std::abs(trinomial_largest_root(3) - 1.8392867552141612) < 1e-9);
    double prev = trinomial_largest_root(2);
    for (unsigned n = 3; n <= 10; ++n) {
        const double t = trinomial_largest_root(n);
        CHECK(t > prev);
        CHECK(t < 2.0);
        // Root property of R^n (R-2) + 1.
        CHECK(std::abs(std::pow(t, double(n)) * (t - 2.0) + 1.0) < 1e-10);
        prev = t;
    }
    CHECK_THROWS_AS(trinomial_largest_root(0), InvalidArgument);
}

TEST_CASE("coefficient-ratio radius and chain violations") {
    const std::vector<Complex> coeffs = {Complex(1), Complex(0.5), Complex(0.5)};
    CHECK(std::abs(govil_rahman_radius(coeffs, 1.0) - kPhi) < 1e-9);
    try {
        govil_rahman_radius(coeffs, 2.0);  // 0.5 >= 2*0.5 fails at index 1
        FAIL("expected ChainViolation");
    } catch (const ChainViolation& e) {
        CHECK(e.index == 1);
    }
}

TEST_CASE("radius bounds the actual root moduli for quadratics") {
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const MapSpec spec{MapKind::E1, rand_c(-5, 5), rand_c(-5, 5)};
        const CharPoly2 p = charpoly(spec);
        const double A = std::abs(p.a1), B = std::abs(p.a0);
        if (A < 1e-6 || B < 1e-6) continue;
        // Back off one part in 1e12 so rounding in A/B cannot break the
        // strict chain hypothesis.
        const double U = std::min(A / B, 1.0 / A) * (1 - 1e-12);
        const double radius = govil_rahman_radius({Complex(1), p.a1, p.a0}, U);
        const RootPair r = solve_quadratic(p);
        CHECK(r.mod_plus <= radius * (1 + 1e-9));
        ++checked;
    }
    CHECK(checked > 150);
}

TEST_CASE("coefficient predicates") {
    // The first predicate region is empty for these maps: it needs
    // |a1| < 1/phi and |a0| < |a1|/phi simultaneously, which the coefficient
    // structure of all three characteristic polynomials rules out.
    for (const MapKind k : {MapKind::E1, MapKind::E8, MapKind::E9}) {
        const LemmaPredicates lp = lemma_predicates({k, Complex(1.3, 0.2), Complex(-0.4, 2.0)});
        CHECK_FALSE(lp.lemma1);
        CHECK(lp.lemma2);
    }
    // alpha = 0 zeroes the trailing ratio, so the second predicate fails.
    const LemmaPredicates z = lemma_predicates({MapKind::E1, Complex(0), Complex(1)});
    CHECK_FALSE(z.lemma2);
    // The third predicate is hyperbolicity.
    const LemmaPredicates saddle = lemma_predicates({MapKind::E1, Complex(0, 1), Complex(1)});
    CHECK(saddle.lemma3);
    const LemmaPredicates nonhyp = lemma_predicates({MapKind::E1, Complex(0), Complex(1)});
    CHECK_FALSE(nonhyp.lemma3);  // alpha=0 gives roots on the unit circle
}

TEST_CASE("equilibrium report bundles values and classes") {
    const auto reports = report({MapKind::E1, Complex(3), Complex(1)});
    REQUIRE(reports.size() == 2);
    for (const auto& r : reports) {
        CHECK(r.cls == StabilityClass::LocAsympStable);
        CHECK(r.roots.mod_plus == doctest::Approx(0.5));
        CHECK_FALSE(r.degenerate);
    }
    CHECK(reports[0].equilibrium == -reports[1].equilibrium);
}
