#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zonediag/carrier.hpp"

namespace zd {

// One simultaneous application of the dominance operator: component k of the
// result holds the carrier points at least as close to P_k as to the union
// of the other components of r.
RegionTuple dom_step(const RegionTuple& r);

struct IterationStep {
    int step;
    std::vector<std::size_t> comp_count;
    std::size_t neutral_count;
};

// The alternating iteration from the sites: even iterates grow, odd iterates
// shrink, and every even iterate sits below every odd one. even_limit is the
// least double-fixed-point candidate, odd_limit the greatest.
struct IterationTrace {
    RegionTuple even_limit, odd_limit;
    std::vector<IterationStep> steps;
    bool converged = false;
    bool sandwich_ok = false;   // the inclusion chain held at every step
    bool unique_zone = false;   // even and odd limits coincide
    int stabilized_at = -1;     // step index at which both parities repeated
};

IterationTrace iterate_dom(const SiteTuple& sites,
                           std::shared_ptr<const Carrier> carrier, int max_iter);

struct ContainmentCheck {
    bool holds = false;               // zero violating carrier points
    std::size_t violations = 0;
    bool up_to_discretization = false;  // violations within perimeter allowance
};

struct DiagramClass {
    ContainmentCheck territory;         // R inside Dom(R)
    ContainmentCheck double_territory;  // R inside Dom^2(R)
    ContainmentCheck zone;              // R equals Dom(R)
    ContainmentCheck double_zone;       // R equals Dom^2(R)
    std::size_t perimeter_allowance = 0;
    double slack = 0.0;
};

DiagramClass classify(const RegionTuple& r);

enum class DiagramKind { Territory, DoubleTerritory };

// Neutral set with certified shells: component k gets a shell of points
// outside R_k but within the shell radius of it; every shell point must be
// neutral, up to boundary-pixel slack on grids.
struct NeutralZone {
    Mask neutral;
    std::vector<double> shell_radius;       // r_k/3 or (r_k + min_j r_j)/8
    std::vector<Mask> shells;
    std::vector<std::size_t> shell_violations;  // shell points inside some region
    std::size_t perimeter_allowance = 0;
    std::size_t neutral_count = 0;
};

NeutralZone neutral_zone(const RegionTuple& r, DiagramKind kind);

struct PairSeparation {
    int k, j;
    double distance;
    double bound;
    bool pass;  // distance >= bound - 2*slack
};

std::vector<PairSeparation> separation_check(const RegionTuple& r, DiagramKind kind);

// Outcome of one enlargement challenge: kingdom k annexes the carrier points
// A (disjoint from R_k and from the rival sites); rivals lose those points.
// A witness is an annexed point that rivals can now reach strictly faster
// than the defender.
struct ChallengeOutcome {
    bool violation = false;
    std::size_t witness = 0;  // carrier index, valid when violation
    double defender_distance = 0.0;
    double rival_distance = 0.0;
};

ChallengeOutcome challenge_enlargement(const RegionTuple& r, int k,
                                       const std::vector<std::size_t>& annexed);

// Analytic verification of the glued segment-disk example: the explicit
// tuple R1 = {0}x[1,3], R2 = disk plus {0}x(-2,-1] is a zone diagram whose
// neutral set is exactly {0}x(-1,1), checked at sampled parameters.
struct GluedExampleReport {
    int samples = 0;
    int zone_violations = 0;      // membership vs dominance predicate mismatches
    int neutral_mismatches = 0;   // neutral set differs from {0}x(-1,1)
    bool is_zone() const { return zone_violations == 0; }
    bool neutral_matches() const { return neutral_mismatches == 0; }
};

GluedExampleReport verify_glued_zone_example(int min_samples = 1000);

}  // namespace zd
