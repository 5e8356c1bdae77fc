#pragma once
/**
 * @file reference_data.hpp
 * @brief Published benchmark values that the audit and the acceptance suite
 *        recompute against: stability-table claims, cycle listings, the long
 *        24-point cycle case, the comparative verdict table, and the
 *        state-space survey rows. Values are transcribed verbatim from the
 *        published tables; transcription fidelity is deliberate even where
 *        recomputation disagrees, since detecting such disagreements is the
 *        audit's job.
 */

#include "holomap/classify.hpp"

#include <array>

namespace holomap::refdata {

/// How a published row summarizes its root moduli.
enum class ModulusClaim {
    AllGreater1,   ///< "> 1"
    AllLess1,      ///< "< 1"
    AllEqual1,     ///< "= 1"
    ZeroAndOne,    ///< "= 0, 1"
    AllZero,       ///< "= 0"
    OneAndHalf,    ///< "= 1, 1/2"
};

struct StabilityRow {
    const char* table;             ///< "e1" / "e8" / "e9"
    const char* params;            ///< e.g. "alpha=beta"
    MapSpec spec;                  ///< concrete instance used for recomputation
    CharPoly2 printed_poly;        ///< coefficients as printed
    ModulusClaim claim;
    const char* claim_text;        ///< printed modulus summary
    const char* printed_inference; ///< printed stability wording
};

const std::vector<StabilityRow>& stability_rows();

/// One row of the published cycle tables (all at alpha = beta = 1).
struct CycleRow {
    MapKind map;
    std::size_t labeled_period;
    std::vector<Complex> points;
};

const std::vector<CycleRow>& cycle_rows();

/// The worked long-cycle example: parameters, seed pair, the published
/// period claim, and the 24 printed orbit values.
struct LongCycleCase {
    MapSpec spec;
    State initial;
    std::size_t published_period;
    std::vector<Complex> printed_points;
};

const LongCycleCase& long_cycle_case();

/// One row of the comparative verdict table: a shared parameter/seed set
/// with the published verdict per map, plus the printed limit value or
/// cycle representative where one was given.
struct VerdictCell {
    const char* text;                    ///< condensed published verdict
    Verdict claimed_kind;                ///< parsed verdict kind
    std::optional<Complex> value;        ///< printed limit / cycle point
    std::optional<std::size_t> period;   ///< printed period when stated
};

struct VerdictRow {
    Complex alpha, beta, z0, z1;
    std::array<VerdictCell, 3> cells;    ///< order: e1, e8, e9
};

const std::array<VerdictRow, 4>& verdict_rows();

/// One row of the state-space survey (qualitative labels per map).
struct StateSpaceRow {
    Complex alpha, beta, z0, z1;
    std::array<const char*, 3> labels;   ///< order: e1, e8, e9
};

const std::array<StateSpaceRow, 8>& state_space_rows();

/// Published largest-Lyapunov magnitudes for the three single-map chaotic
/// showcases (e1, e8, e9 in that order).
const std::array<double, 3>& published_lyapunov();

}  // namespace holomap::refdata
