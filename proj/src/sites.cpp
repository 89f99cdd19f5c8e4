#include "zonediag/sites.hpp"

#include <algorithm>
#include <cmath>

namespace zd {

SiteTuple::SiteTuple(Space sp, std::vector<std::vector<Point>> st)
    : space(std::move(sp)), sites(std::move(st)) {
    validate();
}

void SiteTuple::validate() const {
    if (sites.size() < 2)
        throw std::invalid_argument("site tuple needs at least 2 sites");
    for (const auto& p : sites) {
        if (p.empty()) throw std::invalid_argument("site must be nonempty");
        for (const Point& q : p)
            if (!space.contains(q))
                throw std::invalid_argument("site point outside world");
    }
}

std::vector<double> separation_radii(const SiteTuple& t) {
    const int k = t.count();
    std::vector<double> r(k, kInf);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            const double d = set_distance(t.space, t.sites[i], t.sites[j]);
            r[i] = std::min(r[i], d);
            r[j] = std::min(r[j], d);
        }
    return r;
}

BuiltinFamily parse_family(const std::string& name) {
    if (name == "converging_column") return BuiltinFamily::ConvergingColumn;
    if (name == "orthonormal_spikes") return BuiltinFamily::OrthonormalSpikes;
    if (name == "lattice") return BuiltinFamily::Lattice;
    throw std::invalid_argument("unknown family: " + name);
}

std::string to_string(BuiltinFamily f) {
    switch (f) {
        case BuiltinFamily::ConvergingColumn: return "converging_column";
        case BuiltinFamily::OrthonormalSpikes: return "orthonormal_spikes";
        case BuiltinFamily::Lattice: return "lattice";
    }
    return "?";
}

namespace {

// P_k = {(0, 1/k)} in the Euclidean plane. The heights 1/k decrease to 0,
// so below the x-axis the infimum over k is |x|, never attained.
class ConvergingColumnFamily final : public SiteFamily {
  public:
    std::string name() const override { return "converging_column"; }
    int dim() const override { return 2; }

    double profile(const Point& x, long k) const override {
        if (k < 1) throw std::invalid_argument("index must be >= 1");
        const Point site{0.0, 1.0 / static_cast<double>(k)};
        return norm_distance(Norm::L2, x, site);
    }

    double tail_inf(const Point& x, long after) const override {
        const double y = x[1];
        const double limit = norm_distance(Norm::L2, x, Point{0.0, 0.0});
        if (y <= 0.0) return limit;  // heights above y: nearer with larger k
        // convex in the height; discrete argmin is a neighbor of height y
        const long lo = std::max<long>(after + 1,
                                       static_cast<long>(std::floor(1.0 / y)));
        double best = profile(x, lo);
        best = std::min(best, profile(x, lo + 1));
        return best;
    }

    CertificateKind certificate() const override {
        return CertificateKind::StrictlyDecreasing;
    }
    bool certificate_covers(const Point& x) const override { return x[1] <= 0.0; }
    double certified_inf(const Point& x) const override {
        return norm_distance(Norm::L2, x, Point{0.0, 0.0});
    }

    std::vector<Point> declared_accumulation_points() const override {
        return {Point{0.0, 0.0}};
    }
};

// P_k = {((k+1)/k) e_k} in l2; a query is a finitely supported coordinate
// vector. Pairwise site distances are at least sqrt(2), yet at the origin
// the profile (k+1)/k strictly decreases to 1.
class OrthonormalSpikesFamily final : public SiteFamily {
  public:
    std::string name() const override { return "orthonormal_spikes"; }
    int dim() const override { return 0; }

    static double coeff(long k) {
        return static_cast<double>(k + 1) / static_cast<double>(k);
    }

    double profile(const Point& x, long k) const override {
        if (k < 1) throw std::invalid_argument("index must be >= 1");
        double acc = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double d = (static_cast<long>(i) + 1 == k) ? x[i] - coeff(k) : x[i];
            acc += d * d;
        }
        if (k > static_cast<long>(x.size())) acc += coeff(k) * coeff(k);
        return std::sqrt(acc);
    }

    double tail_inf(const Point& x, long after) const override {
        double s = 0.0;
        for (double v : x) s += v * v;
        double best = std::sqrt(s + 1.0);  // limit of sqrt(s + c_k^2), c_k -> 1
        for (long k = after + 1; k <= static_cast<long>(x.size()); ++k)
            best = std::min(best, profile(x, k));
        return best;
    }

    CertificateKind certificate() const override {
        return CertificateKind::StrictlyDecreasing;
    }
    bool certificate_covers(const Point& x) const override {
        for (double v : x)
            if (v != 0.0) return false;
        return true;
    }
    double certified_inf(const Point&) const override { return 1.0; }

    bool finitely_compact_space() const override { return false; }
};

// Index k >= 2 lives on the square ring of radius r(k) in the max norm;
// within a ring, points are ordered lexicographically.
long ring_of_index(long k) {
    long r = 0;
    while (1 + 4 * r * (r + 1) < k) ++r;
    return r;
}

long ring_first_index(long r) {  // 1-based index of the ring's first point
    return r == 0 ? 1 : 2 + 4 * (r - 1) * r;
}

void ring_points(long r, std::vector<Point>& out) {
    out.clear();
    if (r == 0) {
        out.push_back({0.0, 0.0});
        return;
    }
    for (long vx = -r; vx <= r; ++vx) {
        if (vx == -r || vx == r) {
            for (long vy = -r; vy <= r; ++vy)
                out.push_back({static_cast<double>(vx), static_cast<double>(vy)});
        } else {
            out.push_back({static_cast<double>(vx), static_cast<double>(-r)});
            out.push_back({static_cast<double>(vx), static_cast<double>(r)});
        }
    }
}

class LatticeFamily final : public SiteFamily {
  public:
    std::string name() const override { return "lattice"; }
    int dim() const override { return 2; }

    double profile(const Point& x, long k) const override {
        if (k < 1) throw std::invalid_argument("index must be >= 1");
        return norm_distance(Norm::L2, x, lattice_point_of_index(k));
    }

    double tail_inf(const Point& x, long after) const override {
        const double xinf = std::max(std::abs(x[0]), std::abs(x[1]));
        double best = kInf;
        std::vector<Point> ring;
        for (long r = 0;; ++r) {
            const double lower = std::max(0.0, static_cast<double>(r) - xinf);
            if (lower >= best) break;
            ring_points(r, ring);
            const long base = ring_first_index(r);
            for (long i = 0; i < static_cast<long>(ring.size()); ++i)
                if (base + i > after)
                    best = std::min(best, norm_distance(Norm::L2, x, ring[i]));
        }
        return best;
    }
};

// A finite tuple seen through the family interface: the tail past the last
// index is empty, so its infimum is +inf and attainment always succeeds.
class FiniteTupleFamily final : public SiteFamily {
  public:
    explicit FiniteTupleFamily(SiteTuple t) : tuple_(std::move(t)) {}

    std::string name() const override { return "finite_tuple"; }
    int dim() const override { return tuple_.space.dim(); }

    double profile(const Point& x, long k) const override {
        if (k < 1 || k > tuple_.count())
            throw std::invalid_argument("index out of range");
        double best = kInf;
        for (const Point& p : tuple_.sites[k - 1])
            best = std::min(best, raw_distance(x, p));
        return best;
    }

    double tail_inf(const Point& x, long after) const override {
        double best = kInf;
        for (long k = after + 1; k <= tuple_.count(); ++k)
            best = std::min(best, profile(x, k));
        return best;
    }

  private:
    double raw_distance(const Point& x, const Point& p) const {
        if (tuple_.space.kind == WorldKind::GluedSegmentDisk)
            return distance(tuple_.space, x, p);
        return norm_distance(tuple_.space.norm, x, p);
    }

    SiteTuple tuple_;
};

}  // namespace

Point lattice_point_of_index(long k) {
    if (k < 1) throw std::invalid_argument("index must be >= 1");
    const long r = ring_of_index(k);
    std::vector<Point> ring;
    ring_points(r, ring);
    return ring[k - ring_first_index(r)];
}

std::unique_ptr<SiteFamily> builtin_family(BuiltinFamily which) {
    switch (which) {
        case BuiltinFamily::ConvergingColumn:
            return std::make_unique<ConvergingColumnFamily>();
        case BuiltinFamily::OrthonormalSpikes:
            return std::make_unique<OrthonormalSpikesFamily>();
        case BuiltinFamily::Lattice:
            return std::make_unique<LatticeFamily>();
    }
    throw std::invalid_argument("unknown builtin family");
}

std::unique_ptr<SiteFamily> wrap_finite(SiteTuple tuple) {
    tuple.validate();
    return std::make_unique<FiniteTupleFamily>(std::move(tuple));
}

}  // namespace zd
