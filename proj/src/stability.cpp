/**
 * @file stability.cpp
 * @brief Equilibrium analysis: characteristic quadratics, the stable root
 *        solver, classification, and the trinomial/chain bound machinery.
 */

#include "holomap/stability.hpp"

#include <cmath>
#include <limits>

namespace holomap {

const char* stability_class_name(StabilityClass c) {
    switch (c) {
        case StabilityClass::LocAsympStable: return "locally_asymptotically_stable";
        case StabilityClass::AllOutside: return "all_roots_outside";
        case StabilityClass::Saddle: return "saddle";
        case StabilityClass::NonHyperbolic: return "non_hyperbolic";
    }
    return "?";
}

const char* stability_published_label(StabilityClass c) {
    switch (c) {
        case StabilityClass::LocAsympStable: return "l.a.s/repeller";
        case StabilityClass::AllOutside: return "sink";
        case StabilityClass::Saddle: return "saddle";
        case StabilityClass::NonHyperbolic: return "non-hyp";
    }
    return "?";
}

EquilibriaResult equilibria(const MapSpec& spec) {
    const Complex sum = spec.alpha + spec.beta;
    const bool degenerate = sum == Complex(0);
    if (spec.kind == MapKind::E1) {
        if (degenerate) return {{Complex(0)}, true};
        const Complex r = std::sqrt(sum);
        return {{r, -r}, false};
    }
    return {{sum}, degenerate};
}

CharPoly2 charpoly(const MapSpec& spec) {
    const Complex sum = spec.alpha + spec.beta;
    if (sum == Complex(0))
        throw DegenerateParameters("characteristic polynomial undefined: alpha + beta = 0");
    switch (spec.kind) {
        case MapKind::E1: return {spec.alpha / sum, spec.beta / sum};
        case MapKind::E8: return {-spec.beta / sum, spec.beta / sum};
        case MapKind::E9: return {spec.alpha / sum, -spec.alpha / sum};
    }
    return {};
}

RootPair solve_quadratic(const CharPoly2& p) {
    const Complex disc = p.a1 * p.a1 - 4.0 * p.a0;
    const Complex s = std::sqrt(disc);
    // Add quantities of matching sign so the larger-magnitude root never
    // suffers cancellation; recover the other root from the product.
    const bool same_sign = (p.a1.real() * s.real() + p.a1.imag() * s.imag()) >= 0.0;
    const Complex big = same_sign ? -(p.a1 + s) * 0.5 : -(p.a1 - s) * 0.5;
    Complex other;
    if (big == Complex(0)) {
        other = -p.a1;  // both roots vanish together only when a1 = a0 = 0
    } else {
        other = p.a0 / big;
    }

    RootPair r;
    const double mb = std::abs(big), mo = std::abs(other);
    bool big_first = mb > mo;
    if (mb == mo) {
        big_first = big.real() > other.real() ||
                    (big.real() == other.real() && big.imag() >= other.imag());
    }
    if (big_first) {
        r.lambda_plus = big;
        r.lambda_minus = other;
        r.mod_plus = mb;
        r.mod_minus = mo;
    } else {
        r.lambda_plus = other;
        r.lambda_minus = big;
        r.mod_plus = mo;
        r.mod_minus = mb;
    }
    return r;
}

StabilityClass classify_roots(const RootPair& r, double tol) {
    const bool plus_on = std::abs(r.mod_plus - 1.0) < tol;
    const bool minus_on = std::abs(r.mod_minus - 1.0) < tol;
    if (plus_on || minus_on) return StabilityClass::NonHyperbolic;
    const bool plus_in = r.mod_plus < 1.0;
    const bool minus_in = r.mod_minus < 1.0;
    if (plus_in && minus_in) return StabilityClass::LocAsympStable;
    if (!plus_in && !minus_in) return StabilityClass::AllOutside;
    return StabilityClass::Saddle;
}

double trinomial_largest_root(unsigned n) {
    if (n == 0) throw InvalidArgument("trinomial degree parameter must be >= 1");
    if (n == 1) return 1.0;  // R^2 - 2R + 1 has the double root 1
    auto value = [n](double r) { return std::pow(r, n) * (r - 2.0) + 1.0; };
    double lo = 1.0 + 1e-9, hi = 2.0;
    // value(lo) ~ -(n-1)*1e-9 < 0 and value(2) = 1 > 0 bracket the largest
    // root, which is simple on this interval.
    for (int it = 0; it < 200 && (hi - lo) > 1e-12; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (value(mid) < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double govil_rahman_radius(const std::vector<Complex>& coeffs, double a) {
    if (coeffs.size() < 2)
        throw InvalidArgument("chain bound needs a polynomial of degree >= 1");
    if (!(a > 0.0)) throw InvalidArgument("chain ratio must be positive");
    for (std::size_t k = 0; k + 1 < coeffs.size(); ++k) {
        if (std::abs(coeffs[k]) < a * std::abs(coeffs[k + 1])) {
            throw ChainViolation(
                "coefficient chain fails at index " + std::to_string(k) + ": |c[" +
                    std::to_string(k) + "]| < a*|c[" + std::to_string(k + 1) + "]|",
                k);
        }
    }
    const unsigned degree = static_cast<unsigned>(coeffs.size() - 1);
    return trinomial_largest_root(degree) / a;
}

LemmaPredicates lemma_predicates(const MapSpec& spec) {
    const CharPoly2 p = charpoly(spec);
    const double A = std::abs(p.a1);
    const double B = std::abs(p.a0);
    const double inf = std::numeric_limits<double>::infinity();
    // Largest a with 1 >= a*A and A >= a*B, i.e. the best chain ratio for
    // the coefficient sequence (1, a1, a0).
    const double u = std::min(B > 0.0 ? A / B : inf, A > 0.0 ? 1.0 / A : inf);
    LemmaPredicates lm;
    lm.lemma1 = u > trinomial_largest_root(2);
    lm.lemma2 = u > 0.0;
    lm.lemma3 = classify_roots(solve_quadratic(p)) != StabilityClass::NonHyperbolic;
    return lm;
}

std::vector<EquilibriumReport> report(const MapSpec& spec) {
    const CharPoly2 p = charpoly(spec);  // throws on alpha + beta = 0
    const EquilibriaResult eq = equilibria(spec);
    const RootPair roots = solve_quadratic(p);
    const StabilityClass cls = classify_roots(roots);
    std::vector<EquilibriumReport> out;
    out.reserve(eq.values.size());
    for (const Complex& v : eq.values)
        out.push_back({spec, v, eq.degenerate, p, roots, cls});
    return out;
}

}  // namespace holomap
