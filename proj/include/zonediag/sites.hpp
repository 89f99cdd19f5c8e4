#pragma once

#include <memory>
#include <string>
#include <vector>

#include "zonediag/space.hpp"

namespace zd {

// An indexed tuple of nonempty finite point sets inside a common world.
struct SiteTuple {
    Space space;
    std::vector<std::vector<Point>> sites;

    SiteTuple() = default;
    SiteTuple(Space sp, std::vector<std::vector<Point>> st);

    int count() const { return static_cast<int>(sites.size()); }
    void validate() const;  // throws std::invalid_argument
};

// r_k = inf { d(P_k, P_j) : j != k }, by pairwise brute force.
std::vector<double> separation_radii(const SiteTuple& t);

inline bool radii_positive(const std::vector<double>& r) {
    for (double v : r)
        if (!(v > 0.0)) return false;
    return !r.empty();
}

enum class CertificateKind { None, StrictlyDecreasing };

// An infinite site family P_1, P_2, ... given by closed-form per-index
// distance profiles; never enumerated. tail_inf(x, K) is the exact infimum
// of the profile over indices k > K. A StrictlyDecreasing certificate
// declares a region on which the profile strictly decreases in k with a
// non-attained limit, which is the only way a negative attainment verdict
// is ever issued.
class SiteFamily {
  public:
    virtual ~SiteFamily() = default;

    virtual std::string name() const = 0;
    // ambient dimension of query points; 0 = any
    virtual int dim() const = 0;
    // d(x, P_k), k >= 1
    virtual double profile(const Point& x, long k) const = 0;
    // inf { d(x, P_k) : k > after }
    virtual double tail_inf(const Point& x, long after) const = 0;

    virtual CertificateKind certificate() const { return CertificateKind::None; }
    virtual bool certificate_covers(const Point&) const { return false; }
    // the non-attained limit value, valid where the certificate covers
    virtual double certified_inf(const Point&) const {
        throw unsupported_error("family carries no certificate");
    }

    virtual std::vector<Point> declared_accumulation_points() const { return {}; }
    virtual bool finitely_compact_space() const { return true; }
};

enum class BuiltinFamily { ConvergingColumn, OrthonormalSpikes, Lattice };

BuiltinFamily parse_family(const std::string& name);
std::string to_string(BuiltinFamily f);

// ConvergingColumn: P_k = {(0, 1/k)} in the Euclidean plane; the certificate
//   covers the closed lower halfplane, where the infimum |x| is not attained.
// OrthonormalSpikes: P_k = {((k+1)/k) e_k} in l2; queries are finitely
//   supported coordinate vectors; the certificate covers the origin.
// Lattice: P_k enumerates Z^2 by square rings; everything is attained.
std::unique_ptr<SiteFamily> builtin_family(BuiltinFamily which);

// View a finite tuple through the family interface (empty tail = +inf).
std::unique_ptr<SiteFamily> wrap_finite(SiteTuple tuple);

// Lattice ring enumeration helpers (Z^2, 1-based index).
Point lattice_point_of_index(long k);

}  // namespace zd
