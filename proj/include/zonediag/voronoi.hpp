#pragma once

#include <span>
#include <string>
#include <vector>

#include "zonediag/carrier.hpp"
#include "zonediag/sites.hpp"

namespace zd {

// Verdict on whether inf_k d(x, P_k) is attained by some index.
//   Attained      -- index and distance of a nearest site (exact minimum)
//   NotAttained   -- only under a family certificate; carries the infimum
//   Undetermined  -- best seen so far did not beat the tail bound
struct Attainment {
    enum class Kind { Attained, NotAttained, Undetermined };
    Kind kind = Kind::Undetermined;
    long index = 0;
    double distance = kInf;    // attained / best-seen distance
    double inf_value = kInf;   // certified infimum (NotAttained)
    double tail_bound = kInf;  // inf over indices past the scan (Undetermined)

    bool attained() const { return kind == Kind::Attained; }
};

Attainment nearest_site_attainment(const SiteFamily& fam, const Point& x, long k_max);
Attainment nearest_site_attainment(const SiteTuple& tuple, const Point& x);

// d(x,P) <= d(x,A); empty A counts as infinitely far.
bool in_dom(const Space& s, std::span<const Point> p, std::span<const Point> a,
            const Point& x);

// Cells over a carrier; ties put the point in every minimizing cell.
RegionTuple voronoi_cells(const SiteTuple& sites,
                          std::shared_ptr<const Carrier> carrier);

struct NeutralVoronoiMasks {
    Mask neutral;       // pixels with a certified non-attained infimum
    Mask undetermined;  // pixels the scan could not settle
};

NeutralVoronoiMasks neutral_voronoi_mask(const SiteFamily& fam, const Grid& g,
                                         long k_max);

// Cross-checks sampled attainment verdicts against declared accumulation
// points: in a finitely compact space, a point with no nearest site forces
// an accumulation point of the site union, and a declared external
// accumulation point can never have a nearest site at positive distance.
struct AccumulationReport {
    bool finitely_compact = true;
    long attained = 0, not_attained = 0, undetermined = 0;
    bool missing_accumulation_point = false;  // non-attainment with none declared
    bool declared_point_attained = false;     // declared point has a nearest site
    std::vector<std::string> notes;

    bool consistent() const {
        return !missing_accumulation_point && !declared_point_attained;
    }
};

AccumulationReport accumulation_consistency(const SiteFamily& fam,
                                            const std::vector<Point>& declared,
                                            bool finitely_compact,
                                            std::span<const Point> samples,
                                            long k_max);

}  // namespace zd
