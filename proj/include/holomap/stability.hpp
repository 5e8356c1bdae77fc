#pragma once
/**
 * @file stability.hpp
 * @brief Equilibria, linearization, characteristic quadratics and their
 *        stable root solver, stability classification, and the trinomial
 *        root-bound machinery used by the coefficient-chain lemmas.
 */

#include "holomap/maps.hpp"

#include <cstdint>
#include <vector>

namespace holomap {

/// Monic quadratic lambda^2 + a1*lambda + a0.
struct CharPoly2 {
    Complex a1, a0;
};

/// Roots ordered by modulus descending; modulus ties break by larger real
/// part, then larger imaginary part (exact double comparisons).
struct RootPair {
    Complex lambda_plus;
    Complex lambda_minus;
    double mod_plus = 0;
    double mod_minus = 0;
};

enum class StabilityClass { LocAsympStable, AllOutside, Saddle, NonHyperbolic };

/// Canonical lowercase identifier ("locally_asymptotically_stable", ...).
const char* stability_class_name(StabilityClass c);

/// The vocabulary the published tables use for the same situation. Note the
/// published usage of "sink" and "repeller" is inverted relative to the
/// standard convention; this mapping preserves the published wording so the
/// audit can compare like with like.
const char* stability_published_label(StabilityClass c);

/// |modulus - 1| below this is treated as on the unit circle.
inline constexpr double kNonHyperbolicTol = 1e-9;

struct EquilibriaResult {
    std::vector<Complex> values;
    /// True when alpha+beta = 0: the fixed-point equation degenerates and
    /// the listed value(s) cannot be validated by substitution.
    bool degenerate = false;
};

/// E1 has the pair +/- sqrt(alpha+beta); E8 and E9 have the single point
/// alpha+beta.
EquilibriaResult equilibria(const MapSpec& spec);

/// Characteristic polynomial of the linearization at the equilibrium.
/// Throws DegenerateParameters when alpha+beta = 0.
CharPoly2 charpoly(const MapSpec& spec);

/// Cancellation-free quadratic solver: the larger root is formed by adding
/// quantities of matching sign, the smaller recovered from the product.
RootPair solve_quadratic(const CharPoly2& p);

StabilityClass classify_roots(const RootPair& r, double tol = kNonHyperbolicTol);

/// Largest real root of R^(n+1) - 2 R^n + 1 on (1, 2]; n = 1 gives 1,
/// n = 2 gives the golden ratio. Bisection to absolute tolerance 1e-12.
double trinomial_largest_root(unsigned n);

/// Root-modulus bound for a polynomial whose coefficients (leading first)
/// satisfy the chain |c[k]| >= a*|c[k+1]|. Throws ChainViolation naming the
/// first failing index when the hypothesis does not hold.
double govil_rahman_radius(const std::vector<Complex>& coeffs_leading_first, double a);

/// The three published sufficient conditions, evaluated in closed form from
/// the characteristic coefficient moduli A = |a1|, B = |a0| via the largest
/// chain ratio U = min(A/B, 1/A) (infinite factors dropped):
///   lemma1: U exceeds the golden ratio (both roots inside the unit disk),
///   lemma2: U > 0 (a finite enclosing radius exists),
///   lemma3: the equilibrium is hyperbolic.
struct LemmaPredicates {
    bool lemma1 = false;
    bool lemma2 = false;
    bool lemma3 = false;
};

LemmaPredicates lemma_predicates(const MapSpec& spec);

/// One equilibrium with its full linear analysis.
struct EquilibriumReport {
    MapSpec spec;
    Complex equilibrium;
    bool degenerate = false;
    CharPoly2 poly;
    RootPair roots;
    StabilityClass cls = StabilityClass::NonHyperbolic;
};

/// One report per equilibrium value. Propagates DegenerateParameters from
/// charpoly when alpha+beta = 0.
std::vector<EquilibriumReport> report(const MapSpec& spec);

}  // namespace holomap
