#include "zonediag/scenario.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace zd {

Analysis parse_analysis(const std::string& s) {
    if (s == "voronoi") return Analysis::Voronoi;
    if (s == "zone") return Analysis::Zone;
    if (s == "classify") return Analysis::Classify;
    if (s == "neutral") return Analysis::Neutral;
    if (s == "separation") return Analysis::Separation;
    if (s == "challenge") return Analysis::Challenge;
    if (s == "measure") return Analysis::Measure;
    if (s == "density") return Analysis::Density;
    throw std::invalid_argument("unknown analysis: " + s);
}

std::string to_string(Analysis a) {
    switch (a) {
        case Analysis::Voronoi: return "voronoi";
        case Analysis::Zone: return "zone";
        case Analysis::Classify: return "classify";
        case Analysis::Neutral: return "neutral";
        case Analysis::Separation: return "separation";
        case Analysis::Challenge: return "challenge";
        case Analysis::Measure: return "measure";
        case Analysis::Density: return "density";
    }
    return "?";
}

int Scenario::default_grid(int dim) const {
    if (grid_n > 0) return grid_n;
    switch (dim) {
        case 1: return 1201;
        case 2: return 512;
        default: return 96;
    }
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream is(line);
    std::string t;
    while (is >> t) toks.push_back(t);
    return toks;
}

double to_real(const std::string& s) {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("bad number: " + s);
    return v;
}

std::vector<double> to_reals(const std::vector<std::string>& toks, std::size_t from) {
    std::vector<double> v;
    for (std::size_t i = from; i < toks.size(); ++i) v.push_back(to_real(toks[i]));
    return v;
}

// points separated by ';'
std::vector<Point> to_points(const std::vector<std::string>& toks, std::size_t from) {
    std::vector<Point> pts;
    Point cur;
    for (std::size_t i = from; i < toks.size(); ++i) {
        if (toks[i] == ";") {
            if (cur.empty()) throw std::invalid_argument("empty point before ';'");
            pts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(to_real(toks[i]));
        }
    }
    if (!cur.empty()) pts.push_back(cur);
    if (pts.empty()) throw std::invalid_argument("expected at least one point");
    return pts;
}

Norm parse_norm(const std::string& s) {
    if (s == "l1") return Norm::L1;
    if (s == "l2") return Norm::L2;
    if (s == "linf") return Norm::Linf;
    throw std::invalid_argument("unknown norm: " + s);
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
    Scenario sc;
    std::istringstream in(text);
    std::string raw;
    std::string section;
    int lineno = 0;

    auto fail = [&](const std::string& msg) {
        throw std::invalid_argument("scenario line " + std::to_string(lineno) + ": " + msg);
    };

    while (std::getline(in, raw)) {
        ++lineno;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        auto toks = tokenize(raw);
        if (toks.empty()) continue;

        if (toks.size() == 2 && toks[1] == "{") {
            if (!section.empty()) fail("nested sections are not allowed");
            if (toks[0] != "space" && toks[0] != "sites" && toks[0] != "tuple")
                fail("unknown section: " + toks[0]);
            section = toks[0];
            continue;
        }
        if (toks.size() == 1 && toks[0] == "}") {
            if (section.empty()) fail("stray '}'");
            section.clear();
            continue;
        }

        const std::string& key = toks[0];
        if (section == "space") {
            sc.has_space = true;
            if (key == "kind") {
                if (toks.size() != 2) fail("kind takes one value");
                if (toks[1] == "box") sc.kind = WorldKind::Box;
                else if (toks[1] == "finite") sc.kind = WorldKind::FinitePoints;
                else if (toks[1] == "glued") sc.kind = WorldKind::GluedSegmentDisk;
                else fail("unknown world kind: " + toks[1]);
            } else if (key == "lo") sc.lo = to_reals(toks, 1);
            else if (key == "hi") sc.hi = to_reals(toks, 1);
            else if (key == "norm" && toks.size() == 2) sc.norm = parse_norm(toks[1]);
            else if (key == "dim" && toks.size() == 2) sc.finite_dim = std::stoi(toks[1]);
            else if (key == "points") sc.finite_points = to_points(toks, 1);
            else fail("unknown space key: " + key);
        } else if (section == "sites") {
            if (key == "site") sc.site_points.push_back(to_points(toks, 1));
            else if (key == "family" && toks.size() == 2) {
                sc.has_family = true;
                sc.family = parse_family(toks[1]);
            } else if (key == "kmax" && toks.size() == 2) sc.kmax = std::stol(toks[1]);
            else if (key == "lattice") {
                const auto v = to_reals(toks, 1);
                if (v.size() < 3 || v.size() % 2 == 0) fail("lattice needs lo.. hi.. pitch");
                const std::size_t d = (v.size() - 1) / 2;
                sc.has_lattice = true;
                sc.lattice.lo.assign(v.begin(), v.begin() + d);
                sc.lattice.hi.assign(v.begin() + d, v.begin() + 2 * d);
                sc.lattice.pitch = v.back();
            } else fail("unknown sites key: " + key);
        } else if (section == "tuple") {
            if (key == "voronoi") {
                for (std::size_t i = 1; i < toks.size(); ++i)
                    sc.tuple_voronoi.push_back(std::stoi(toks[i]));
            } else if (key == "region") sc.tuple_regions.push_back(to_points(toks, 1));
            else fail("unknown tuple key: " + key);
        } else {
            if (key == "grid" && toks.size() == 2) sc.grid_n = std::stoi(toks[1]);
            else if (key == "max_iter" && toks.size() == 2) sc.max_iter = std::stoi(toks[1]);
            else if (key == "seed" && toks.size() == 2) sc.seed = std::stoull(toks[1]);
            else if (key == "omega" && toks.size() == 2) sc.omega = to_real(toks[1]);
            else if (key == "rho" && toks.size() == 2) sc.rho = to_real(toks[1]);
            else if (key == "challenges" && toks.size() == 2) sc.challenges = std::stoi(toks[1]);
            else if (key == "suite" && toks.size() == 2) sc.suite = toks[1];
            else if (key == "out" && toks.size() == 2) sc.out_dir = toks[1];
            else if (key == "analyses") {
                for (std::size_t i = 1; i < toks.size(); ++i)
                    sc.analyses.push_back(parse_analysis(toks[i]));
            } else fail("unknown key: " + key);
        }
    }
    if (!section.empty()) throw std::invalid_argument("scenario: unterminated section " + section);
    return sc;
}

Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open scenario file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_scenario(ss.str());
}

namespace {

void emit_reals(std::ostream& os, const std::vector<double>& v) {
    for (double x : v) os << " " << x;
}

void emit_points(std::ostream& os, const std::vector<Point>& pts) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) os << " ;";
        emit_reals(os, pts[i]);
    }
}

}  // namespace

std::string serialize_scenario(const Scenario& s) {
    std::ostringstream os;
    os.precision(17);
    if (s.has_space) {
        os << "space {\n";
        os << "  kind "
           << (s.kind == WorldKind::Box ? "box"
               : s.kind == WorldKind::FinitePoints ? "finite" : "glued")
           << "\n";
        if (s.kind == WorldKind::Box) {
            os << "  lo";
            emit_reals(os, s.lo);
            os << "\n  hi";
            emit_reals(os, s.hi);
            os << "\n";
        }
        if (s.kind == WorldKind::FinitePoints) {
            os << "  dim " << s.finite_dim << "\n  points";
            emit_points(os, s.finite_points);
            os << "\n";
        }
        if (s.kind != WorldKind::GluedSegmentDisk)
            os << "  norm " << to_string(s.norm) << "\n";
        os << "}\n";
    }
    if (!s.site_points.empty() || s.has_family || s.has_lattice) {
        os << "sites {\n";
        for (const auto& site : s.site_points) {
            os << "  site";
            emit_points(os, site);
            os << "\n";
        }
        if (s.has_family)
            os << "  family " << to_string(s.family) << "\n  kmax " << s.kmax << "\n";
        if (s.has_lattice) {
            os << "  lattice";
            emit_reals(os, s.lattice.lo);
            emit_reals(os, s.lattice.hi);
            os << " " << s.lattice.pitch << "\n";
        }
        os << "}\n";
    }
    if (!s.tuple_voronoi.empty() || !s.tuple_regions.empty()) {
        os << "tuple {\n";
        if (!s.tuple_voronoi.empty()) {
            os << "  voronoi";
            for (int k : s.tuple_voronoi) os << " " << k;
            os << "\n";
        }
        for (const auto& reg : s.tuple_regions) {
            os << "  region";
            emit_points(os, reg);
            os << "\n";
        }
        os << "}\n";
    }
    if (s.grid_n > 0) os << "grid " << s.grid_n << "\n";
    os << "max_iter " << s.max_iter << "\n";
    os << "seed " << s.seed << "\n";
    if (s.omega > 0) os << "omega " << s.omega << "\n";
    if (s.rho > 0) os << "rho " << s.rho << "\n";
    os << "challenges " << s.challenges << "\n";
    if (!s.suite.empty()) os << "suite " << s.suite << "\n";
    if (!s.out_dir.empty()) os << "out " << s.out_dir << "\n";
    if (!s.analyses.empty()) {
        os << "analyses";
        for (Analysis a : s.analyses) os << " " << to_string(a);
        os << "\n";
    }
    return os.str();
}

namespace {

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> cat;

    const char* square8 =
        "space {\n"
        "  kind box\n"
        "  lo -6 -6\n"
        "  hi 6 6\n"
        "  norm l2\n"
        "}\n"
        "sites {\n"
        "  site -3.2 2.4\n"
        "  site 1.5 3.7\n"
        "  site 4.1 1.2\n"
        "  site -1.8 -0.6\n"
        "  site 2.7 -2.9\n"
        "  site -4.4 -3.1\n"
        "  site 0.3 0.9\n"
        "  site 3.6 4.3\n"
        "}\n";

    const char* zdt =
        "space {\n"
        "  kind box\n"
        "  lo -6 -6\n"
        "  hi 6 6\n"
        "  norm l1\n"
        "}\n"
        "sites {\n"
        "  site 2 1 ; -2 -1\n"
        "  site -2 1 ; 2 -1\n"
        "}\n";

    cat.push_back({"fig1_voronoi",
                   "Voronoi diagram of 8 point sites in a square (l2); full cover, no neutral pixels",
                   std::string(square8) + "analyses voronoi\n"});
    cat.push_back({"fig2_zone_l2",
                   "zone diagram of the same 8 sites; the black neutral region separates the cells",
                   std::string(square8) + "analyses zone classify neutral separation\n"});
    cat.push_back({"fig3_zone_l1",
                   "zone diagram of two 2-point sites in an l1 square; nonempty neutral region",
                   std::string(zdt) + "analyses zone classify neutral separation\n"});
    cat.push_back({"fig4_territory_l1",
                   "territory diagram for the same sites: component 1 is its Voronoi cell, component 2 stays at its site",
                   std::string(zdt) + "tuple {\n  voronoi 1\n}\nanalyses classify neutral separation\n"});
    cat.push_back({"fig5_least_double_zone_l1",
                   "least double-fixed-point iterate of the l1 setting (zone_even artifact)",
                   std::string(zdt) + "analyses zone classify\n"});
    cat.push_back({"fig6_greatest_double_zone_l1",
                   "greatest double-fixed-point iterate of the l1 setting (zone_odd artifact)",
                   std::string(zdt) + "analyses zone classify\n"});
    cat.push_back({"fig7_glued",
                   "glued segment-disk world: the neutral region is the open segment {0}x(-1,1)",
                   "space {\n  kind glued\n}\nanalyses classify neutral\n"});
    cat.push_back({"glued_space",
                   "alias of fig7_glued: analytic checks on the glued segment-disk example",
                   "space {\n  kind glued\n}\nanalyses classify neutral\n"});
    cat.push_back({"fig8_flowers",
                   "17 sites in two flower clusters (l2); regions stay clear of the world boundary",
                   "space {\n"
                   "  kind box\n"
                   "  lo -6 -6\n"
                   "  hi 6 6\n"
                   "  norm l2\n"
                   "}\n"
                   "sites {\n"
                   "  site 0 2.3\n"
                   "  site 1.4 2.3\n"
                   "  site 0.99 3.29\n"
                   "  site 0 3.7\n"
                   "  site -0.99 3.29\n"
                   "  site -1.4 2.3\n"
                   "  site -0.99 1.31\n"
                   "  site 0 0.9\n"
                   "  site 0.99 1.31\n"
                   "  site 1.38 -2.15\n"
                   "  site 0.93 -1.24\n"
                   "  site -0.07 -0.92\n"
                   "  site -1.04 -1.35\n"
                   "  site -1.41 -2.33\n"
                   "  site -0.95 -3.28\n"
                   "  site 0.05 -3.68\n"
                   "  site 1.01 -3.22\n"
                   "}\n"
                   "omega 0.4\n"
                   "rho 7.0\n"
                   "analyses zone classify neutral measure\n"});
    cat.push_back({"discrete_counterexamples",
                   "exact checks on the three-point world and the dyadic interval",
                   "space {\n"
                   "  kind finite\n"
                   "  dim 1\n"
                   "  points -1 ; 0 ; 1\n"
                   "  norm l2\n"
                   "}\n"
                   "sites {\n"
                   "  site -1\n"
                   "  site 1\n"
                   "}\n"
                   "suite discrete\n"
                   "analyses zone classify challenge\n"});
    cat.push_back({"oned_fixed_point",
                   "two sites at -1 and 1 on [-6,6]; cell boundaries converge to -1/3 and 1/3",
                   "space {\n"
                   "  kind box\n"
                   "  lo -6\n"
                   "  hi 6\n"
                   "  norm l2\n"
                   "}\n"
                   "sites {\n"
                   "  site -1\n"
                   "  site 1\n"
                   "}\n"
                   "grid 1201\n"
                   "analyses zone classify neutral separation challenge\n"});
    cat.push_back({"equilibrium_fig2",
                   "random single-pixel annexations of the converged 8-site zone diagram; every one backfires",
                   std::string(square8) + "challenges 100\nanalyses zone challenge\n"});
    cat.push_back({"attainment_column",
                   "site heights 1/k converging to the origin: everything at or below the x-axis is neutral",
                   "space {\n"
                   "  kind box\n"
                   "  lo -2 -2\n"
                   "  hi 2 2\n"
                   "  norm l2\n"
                   "}\n"
                   "sites {\n"
                   "  family converging_column\n"
                   "  kmax 1024\n"
                   "}\n"
                   "grid 256\n"
                   "analyses voronoi\n"});
    cat.push_back({"attainment_spikes",
                   "orthonormal spike sites in l2: pairwise separated, yet the origin has no nearest site",
                   "sites {\n"
                   "  family orthonormal_spikes\n"
                   "  kmax 64\n"
                   "}\n"
                   "analyses voronoi\n"});
    cat.push_back({"attainment_lattice",
                   "integer lattice sites: a nearest site exists everywhere, no neutral pixels",
                   "space {\n"
                   "  kind box\n"
                   "  lo -2.5 -2.5\n"
                   "  hi 2.5 2.5\n"
                   "  norm l2\n"
                   "}\n"
                   "sites {\n"
                   "  family lattice\n"
                   "  kmax 128\n"
                   "}\n"
                   "grid 256\n"
                   "analyses voronoi\n"});
    cat.push_back({"concentration_m2",
                   "5x5 unit lattice of sites in [0,6]^2: interior-region volume against the neutral volume",
                   "space {\n"
                   "  kind box\n"
                   "  lo 0 0\n"
                   "  hi 6 6\n"
                   "  norm l2\n"
                   "}\n"
                   "sites {\n"
                   "  lattice 1 1 5 5 1\n"
                   "}\n"
                   "grid 512\n"
                   "omega 1.0\n"
                   "rho 1.5\n"
                   "analyses zone measure\n"});
    cat.push_back({"concentration_m3",
                   "center site plus 8 cube-corner sites in [0,12]^3 at 96^3",
                   "space {\n"
                   "  kind box\n"
                   "  lo 0 0 0\n"
                   "  hi 12 12 12\n"
                   "  norm l2\n"
                   "}\n"
                   "sites {\n"
                   "  site 6 6 6\n"
                   "  site 2 2 2\n"
                   "  site 2 2 10\n"
                   "  site 2 10 2\n"
                   "  site 2 10 10\n"
                   "  site 10 2 2\n"
                   "  site 10 2 10\n"
                   "  site 10 10 2\n"
                   "  site 10 10 10\n"
                   "}\n"
                   "grid 96\n"
                   "omega 1.5\n"
                   "rho 7.0\n"
                   "analyses zone measure\n"});
    cat.push_back({"density_demo",
                   "half-unit lattice filling [0,6]^2: the density condition certifies an interior cell",
                   "space {\n"
                   "  kind box\n"
                   "  lo 0 0\n"
                   "  hi 6 6\n"
                   "  norm l2\n"
                   "}\n"
                   "sites {\n"
                   "  lattice 0 0 6 6 0.5\n"
                   "}\n"
                   "grid 256\n"
                   "omega 1.0\n"
                   "analyses density\n"});
    return cat;
}

}  // namespace

const std::vector<CatalogEntry>& scenario_catalog() {
    static const std::vector<CatalogEntry> cat = build_catalog();
    return cat;
}

const CatalogEntry* find_bundled(const std::string& name) {
    for (const auto& e : scenario_catalog())
        if (e.name == name) return &e;
    return nullptr;
}

}  // namespace zd
