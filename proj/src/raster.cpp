#include "zonediag/raster.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace zd {

Grid::Grid(std::vector<double> lo_, std::vector<double> hi_, std::vector<int> n_)
    : lo(std::move(lo_)), hi(std::move(hi_)), n(std::move(n_)) {
    if (n.empty() || n.size() > 3 || lo.size() != n.size() || hi.size() != n.size())
        throw std::invalid_argument("grid: dimension must be 1..3");
    pitch_.resize(n.size());
    for (std::size_t a = 0; a < n.size(); ++a) {
        if (n[a] < 2) throw std::invalid_argument("grid: need at least 2 pixels per axis");
        if (!(lo[a] < hi[a])) throw std::invalid_argument("grid: lo must be below hi");
        pitch_[a] = (hi[a] - lo[a]) / static_cast<double>(n[a] - 1);
    }
}

std::size_t Grid::count() const {
    std::size_t c = 1;
    for (int v : n) c *= static_cast<std::size_t>(v);
    return c;
}

double Grid::max_pitch() const {
    double h = 0.0;
    for (std::size_t a = 0; a < n.size(); ++a) h = std::max(h, pitch_[a]);
    return h;
}

double Grid::diameter_tol() const {
    return max_pitch() * std::sqrt(static_cast<double>(dim()));
}

Point Grid::point(std::size_t flat) const {
    const auto idx = unflatten(flat);
    Point p(dim());
    for (int a = 0; a < dim(); ++a) p[a] = coord(a, idx[a]);
    return p;
}

std::array<long, 3> Grid::unflatten(std::size_t flat) const {
    std::array<long, 3> idx{0, 0, 0};
    for (int a = 0; a < dim(); ++a) {
        idx[a] = static_cast<long>(flat % static_cast<std::size_t>(n[a]));
        flat /= static_cast<std::size_t>(n[a]);
    }
    return idx;
}

std::size_t Grid::flatten(std::span<const long> idx) const {
    std::size_t flat = 0;
    for (int a = dim() - 1; a >= 0; --a)
        flat = flat * static_cast<std::size_t>(n[a]) + static_cast<std::size_t>(idx[a]);
    return flat;
}

std::size_t Grid::nearest_index(const Point& p) const {
    std::array<long, 3> idx{0, 0, 0};
    for (int a = 0; a < dim(); ++a) {
        long i = static_cast<long>(std::llround((p[a] - lo[a]) / pitch_[a]));
        idx[a] = std::clamp<long>(i, 0, n[a] - 1);
    }
    return flatten(std::span<const long>(idx.data(), static_cast<std::size_t>(dim())));
}

namespace {

// ---- exact 1-D transforms -------------------------------------------------
//
// Each pass keeps values canonical: one term per axis, accumulated in axis
// order, so separable results match the brute-force formula bit for bit on
// every source the backends agree to select.

// g(i) = min_j f(j) + h*|i-j|
void dt_l1_line(const double* f, long n, double h, double* out) {
    // best-from-left source index; candidates never reorder as i grows
    long j = 0;
    for (long i = 0; i < n; ++i) {
        const double cand = f[j] + h * static_cast<double>(i - j);
        if (f[i] <= cand) {
            j = i;
            out[i] = f[i];
        } else {
            out[i] = cand;
        }
    }
    j = n - 1;
    for (long i = n - 1; i >= 0; --i) {
        const double cand = f[j] + h * static_cast<double>(j - i);
        if (f[i] <= cand) j = i;
        else out[i] = std::min(out[i], cand);
    }
}

// g(i) = min_j max(f(j), h*|i-j|); outward scan with radius cutoff
void dt_linf_line(const double* f, long n, double h, double* out) {
    for (long i = 0; i < n; ++i) {
        double best = f[i];
        for (long d = 1; d < n; ++d) {
            const double hd = h * static_cast<double>(d);
            if (hd >= best) break;
            const long a = i - d, b = i + d;
            bool any = false;
            if (a >= 0) {
                best = std::min(best, std::max(f[a], hd));
                any = true;
            }
            if (b < n) {
                best = std::min(best, std::max(f[b], hd));
                any = true;
            }
            if (!any) break;
        }
        out[i] = best;
    }
}

// g(i) = min_j f(j) + (h*(i-j))^2, lower envelope of parabolas
void dt_l2_line(const double* f, long n, double h, double* out, long* v, double* z) {
    long k = -1;
    const double h2 = h * h;
    for (long q = 0; q < n; ++q) {
        if (f[q] == kInf) continue;
        double s = 0.0;
        while (k >= 0) {
            const double fq = f[q] + h2 * static_cast<double>(q) * static_cast<double>(q);
            const double fv = f[v[k]] + h2 * static_cast<double>(v[k]) * static_cast<double>(v[k]);
            s = (fq - fv) / (2.0 * h2 * static_cast<double>(q - v[k]));
            if (s <= z[k]) --k;
            else break;
        }
        ++k;
        v[k] = q;
        z[k] = (k == 0) ? -kInf : s;
        z[k + 1] = kInf;
    }
    if (k < 0) {
        for (long q = 0; q < n; ++q) out[q] = kInf;
        return;
    }
    long j = 0;
    for (long q = 0; q < n; ++q) {
        while (z[j + 1] < static_cast<double>(q)) ++j;
        const double t = h * static_cast<double>(q - v[j]);
        out[q] = f[v[j]] + t * t;
    }
}

void transform_axis(const Grid& g, std::vector<double>& field, int axis, Norm norm) {
    const long len = g.n[axis];
    std::size_t stride = 1;
    for (int a = 0; a < axis; ++a) stride *= static_cast<std::size_t>(g.n[a]);
    const std::size_t block = stride * static_cast<std::size_t>(len);
    const double h = g.pitch(axis);

    std::vector<double> buf(len), out(len), z;
    std::vector<long> v;
    if (norm == Norm::L2) {
        v.resize(len);
        z.resize(len + 1);
    }

    const std::size_t total = field.size();
    for (std::size_t base = 0; base < total; base += block) {
        for (std::size_t off = 0; off < stride; ++off) {
            double* line0 = field.data() + base + off;
            for (long i = 0; i < len; ++i) buf[i] = line0[static_cast<std::size_t>(i) * stride];
            switch (norm) {
                case Norm::L1: dt_l1_line(buf.data(), len, h, out.data()); break;
                case Norm::Linf: dt_linf_line(buf.data(), len, h, out.data()); break;
                case Norm::L2: dt_l2_line(buf.data(), len, h, out.data(), v.data(), z.data()); break;
            }
            for (long i = 0; i < len; ++i) line0[static_cast<std::size_t>(i) * stride] = out[i];
        }
    }
}

std::vector<double> brute_force_field(const Grid& g, const Mask& m, Norm norm) {
    const int dim = g.dim();
    std::vector<std::array<long, 3>> sources;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i]) sources.push_back(g.unflatten(i));
    std::vector<double> field(g.count(), kInf);
    if (sources.empty()) return field;
    for (std::size_t i = 0; i < field.size(); ++i) {
        const auto qi = g.unflatten(i);
        double best = kInf;
        for (const auto& s : sources) {
            double acc = 0.0;
            for (int a = 0; a < dim; ++a) {
                const double t = g.pitch(a) * static_cast<double>(qi[a] - s[a]);
                switch (norm) {
                    case Norm::L1: acc += std::abs(t); break;
                    case Norm::L2: acc += t * t; break;
                    case Norm::Linf: acc = std::max(acc, std::abs(t)); break;
                }
            }
            best = std::min(best, acc);
        }
        field[i] = best;
    }
    return field;
}

}  // namespace

std::vector<double> mask_distance_field(const Grid& g, const Mask& m, Norm norm,
                                        FieldBackend backend) {
    if (m.size() != g.count())
        throw std::invalid_argument("mask_distance_field: mask/grid size mismatch");
    if (backend == FieldBackend::BruteForce) return brute_force_field(g, m, norm);
    std::vector<double> field(g.count());
    for (std::size_t i = 0; i < m.size(); ++i) field[i] = m[i] ? 0.0 : kInf;
    for (int a = 0; a < g.dim(); ++a) transform_axis(g, field, a, norm);
    return field;
}

std::vector<double> point_distance_field(const Grid& g, std::span<const Point> pts,
                                         Norm norm) {
    std::vector<double> field(g.count(), kInf);
    if (pts.empty()) return field;
    const int dim = g.dim();
    Point x(dim);
    for (std::size_t i = 0; i < field.size(); ++i) {
        const auto qi = g.unflatten(i);
        for (int a = 0; a < dim; ++a) x[a] = g.coord(a, qi[a]);
        double best = kInf;
        for (const Point& p : pts) best = std::min(best, norm_compare(norm, x, p));
        field[i] = best;
    }
    return field;
}

static void require_same_size(const Mask& a, const Mask& b) {
    if (a.size() != b.size()) throw std::invalid_argument("mask size mismatch");
}

Mask mask_union(const Mask& a, const Mask& b) {
    require_same_size(a, b);
    Mask r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] | b[i];
    return r;
}

Mask mask_intersection(const Mask& a, const Mask& b) {
    require_same_size(a, b);
    Mask r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] & b[i];
    return r;
}

Mask mask_difference(const Mask& a, const Mask& b) {
    require_same_size(a, b);
    Mask r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] & static_cast<std::uint8_t>(!b[i]);
    return r;
}

Mask mask_complement(const Mask& a) {
    Mask r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<std::uint8_t>(!a[i]);
    return r;
}

std::size_t mask_count(const Mask& a) {
    std::size_t c = 0;
    for (auto v : a) c += v ? 1 : 0;
    return c;
}

bool mask_subset(const Mask& a, const Mask& b) {
    require_same_size(a, b);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && !b[i]) return false;
    return true;
}

std::size_t surface_pixel_count(const Grid& g, const Mask& m) {
    const int dim = g.dim();
    std::size_t c = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (!m[i]) continue;
        auto idx = g.unflatten(i);
        bool surface = false;
        for (int a = 0; a < dim && !surface; ++a) {
            for (int s = -1; s <= 1 && !surface; s += 2) {
                auto nb = idx;
                nb[a] += s;
                if (nb[a] < 0 || nb[a] >= g.n[a]) {
                    surface = true;
                } else {
                    std::span<const long> sp(nb.data(), static_cast<std::size_t>(dim));
                    if (!m[g.flatten(sp)]) surface = true;
                }
            }
        }
        if (surface) ++c;
    }
    return c;
}

std::vector<Rgb> default_palette() {
    return {
        {230, 80, 60},  {70, 140, 220}, {90, 190, 90},   {235, 195, 70},
        {160, 90, 200}, {80, 200, 200}, {230, 130, 190}, {150, 150, 80},
        {110, 80, 50},  {60, 90, 140},  {180, 220, 140}, {200, 110, 90},
    };
}

void write_ppm(const std::string& path, const Grid& g,
               const std::vector<Mask>& masks, const std::vector<Rgb>& palette,
               const std::string& comment) {
    if (g.dim() != 2) throw std::invalid_argument("write_ppm: 2-D grids only");
    for (const Mask& m : masks)
        if (m.size() != g.count()) throw std::invalid_argument("write_ppm: mask size mismatch");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_ppm: cannot open " + path);
    out << "P6\n";
    if (!comment.empty()) out << "# " << comment << "\n";
    char pitchline[128];
    std::snprintf(pitchline, sizeof pitchline, "# pitch %.12g %.12g\n", g.pitch(0), g.pitch(1));
    out << pitchline;
    out << g.n[0] << " " << g.n[1] << "\n255\n";
    const std::size_t nx = static_cast<std::size_t>(g.n[0]);
    std::vector<std::uint8_t> row(nx * 3);
    for (long iy = g.n[1] - 1; iy >= 0; --iy) {
        for (std::size_t ix = 0; ix < nx; ++ix) {
            const std::size_t flat = static_cast<std::size_t>(iy) * nx + ix;
            Rgb px{0, 0, 0};
            for (std::size_t k = 0; k < masks.size(); ++k) {
                if (masks[k][flat]) {
                    px = palette[k % palette.size()];
                    break;
                }
            }
            row[ix * 3] = px.r;
            row[ix * 3 + 1] = px.g;
            row[ix * 3 + 2] = px.b;
        }
        out.write(reinterpret_cast<const char*>(row.data()), static_cast<std::streamsize>(row.size()));
    }
}

std::size_t uncovered_count(const std::vector<Mask>& masks, std::size_t total) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < total; ++i) {
        bool covered = false;
        for (const Mask& m : masks)
            if (m[i]) {
                covered = true;
                break;
            }
        if (!covered) ++c;
    }
    return c;
}

void write_mask(const std::string& path, const Grid& g, const Mask& m) {
    if (m.size() != g.count()) throw std::invalid_argument("write_mask: size mismatch");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_mask: cannot open " + path);
    out << "mask " << g.dim();
    for (int a = 0; a < g.dim(); ++a) out << " " << g.n[a];
    out << "\n";
    std::vector<char> bytes(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) bytes[i] = m[i] ? '1' : '0';
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

Mask read_mask(const std::string& path, std::vector<int>* shape) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("read_mask: cannot open " + path);
    std::string tag;
    int dim = 0;
    in >> tag >> dim;
    if (tag != "mask" || dim < 1 || dim > 3)
        throw std::runtime_error("read_mask: bad header");
    std::size_t total = 1;
    std::vector<int> sh(dim);
    for (int a = 0; a < dim; ++a) {
        in >> sh[a];
        total *= static_cast<std::size_t>(sh[a]);
    }
    in.get();  // newline
    std::vector<char> bytes(total);
    in.read(bytes.data(), static_cast<std::streamsize>(total));
    if (static_cast<std::size_t>(in.gcount()) != total)
        throw std::runtime_error("read_mask: truncated payload");
    Mask m(total);
    for (std::size_t i = 0; i < total; ++i) m[i] = bytes[i] == '1' ? 1 : 0;
    if (shape) *shape = sh;
    return m;
}

}  // namespace zd
