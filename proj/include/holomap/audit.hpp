#pragma once
/**
 * @file audit.hpp
 * @brief Systematic recomputation of the published claims: stability-table
 *        rows, cycle listings, the long-cycle worked example, and the
 *        comparative verdict table. Each audit reports agreement per row and
 *        keeps the published value next to the recomputed one so the text
 *        and JSON renderings stay self-contained.
 */

#include "holomap/classify.hpp"
#include "holomap/reference_data.hpp"

namespace holomap {

/// One stability-table row after recomputation.
struct StabilityAuditRow {
    refdata::StabilityRow source;
    CharPoly2 computed_poly;
    /// Max componentwise coefficient error, printed vs recomputed.
    double poly_error = 0;
    RootPair roots;
    StabilityClass cls = StabilityClass::NonHyperbolic;
    bool poly_matches = false;   ///< poly_error <= 1e-15
    bool claim_agrees = false;   ///< printed modulus claim holds for the roots
};

std::vector<StabilityAuditRow> audit_stability_tables();

/// One named audit finding; `discrepancy` marks rows where recomputation
/// contradicts the published value.
struct AuditFinding {
    std::string id;
    bool discrepancy = false;
    std::string message;
};

/// Checks every published cycle listing by direct residual evaluation plus
/// minimal-period analysis, the closed-form 2-cycle sign, and the worked
/// long-cycle example (period claim and printed values).
std::vector<AuditFinding> audit_cycle_tables();

/// One cell of the comparative verdict table after reclassification.
struct VerdictAuditCell {
    std::size_t row = 0;         ///< 1-based row in the published table
    MapKind map = MapKind::E1;
    std::string published;
    std::string recomputed;
    bool agrees = false;
    std::string detail;          ///< values, periods, exponents, notes
};

/// Re-runs the classifier on all rows x maps. A cell agrees when the
/// verdict kind matches and any printed limit or cycle point is reproduced
/// to 1e-3; period counts are compared in `detail` but the long-cycle
/// period discrepancy is adjudicated by the dedicated finding, not here.
std::vector<VerdictAuditCell> audit_verdict_table();

/// Full human-readable report over all audits.
std::string render_audit_text();

}  // namespace holomap
