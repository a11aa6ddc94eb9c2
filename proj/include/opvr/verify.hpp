#pragma once

#include <string>
#include <vector>

#include "opvr/compact.hpp"
#include "opvr/configs.hpp"
#include "opvr/graph.hpp"

namespace opvr {

/// Pure function of (graph, drawing): geometric validity, embedding
/// preservation, reflex accounting. Failures are report entries.
struct VerificationReport {
    bool pass = true;
    std::vector<std::string> failures;
    std::vector<std::pair<std::string, int>> reflex;  // per polygon
    int max_reflex = 0;
    long long width = 0, height = 0;

    void fail(const std::string& what) {
        pass = false;
        failures.push_back(what);
    }
};

VerificationReport verify(const OnePlaneGraph& g, const OpvrDrawing& d);

/// Clockwise walk of a configuration's external boundary in the drawing:
/// r = k + a + 4 with k the switching crossings and a the attachment points
/// of the configuration's own edges; r is the ledger corner count
/// (convex-minus-reflex corner excess plus k plus a).
struct BoundaryAudit {
    int r = 0, k = 0, a = 0;
    bool identity = false;  // r == k + a + 4
    int walk_reflex = 0;    // pole-polygon reflex corners on the walk
    std::vector<std::pair<std::string, OpvrDrawing::Pt>> reflex_corners;
};

BoundaryAudit boundary_audit(const OnePlaneGraph& g, const OpvrDrawing& d,
                             const ForbiddenConfig& f);

/// Totals the per-configuration reflex corners of a lower-bound drawing:
/// at least 4 n_p - 8 distinct reflex corners over the poles, and maximum
/// reflex at least 4 when n_p > 8.
struct LowerBoundAudit {
    bool pass = true;
    int total_distinct_reflex = 0;
    int max_per_pole = 0;
    std::vector<std::string> failures;
};

LowerBoundAudit lower_bound_audit(const OnePlaneGraph& g, const OpvrDrawing& d,
                                  const std::vector<ForbiddenConfig>& configs, int np);

std::string verification_report_json(const VerificationReport& r);

}  // namespace opvr
