#include "ordexp/lattice.hpp"

#include <cmath>

namespace ordexp {

namespace {

double real_coordinate(const cplx& v, const char* what) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw InvalidInput(std::string(what) + " evaluates to a non-finite coordinate");
    if (std::abs(v.imag()) > 1e-9 * (1.0 + std::abs(v.real())))
        throw InvalidInput(std::string(what) +
                           " evaluates to a complex coordinate; chart coordinates are real");
    return v.real();
}

void check_coords(const std::vector<ScalarExpr>& coords, int max_arity, const char* what) {
    if (coords.empty()) throw InvalidInput(std::string(what) + " needs at least one coordinate");
    for (const auto& e : coords)
        if (!e.ast() || e.arity() > max_arity)
            throw InvalidInput(std::string(what) + " coordinate has the wrong arity");
}

} // namespace

// ---------------------------------------------------------------------------
// PathSpec
// ---------------------------------------------------------------------------

PathSpec PathSpec::from_expressions(std::vector<ScalarExpr> coords) {
    check_coords(coords, 1, "path");
    PathSpec g;
    g.m = static_cast<int>(coords.size());
    g.coords = std::move(coords);
    g.start = g.eval(0.0);
    g.end = g.eval(1.0);
    return g;
}

PathSpec PathSpec::from_strings(const std::vector<std::string>& coords) {
    std::vector<ScalarExpr> parsed;
    parsed.reserve(coords.size());
    for (const auto& s : coords) parsed.push_back(ScalarExpr::parse(s, 1));
    return from_expressions(std::move(parsed));
}

Point PathSpec::eval(double t) const {
    std::vector<cplx> arg = {cplx(t, 0.0)};
    Point p(m);
    for (int k = 0; k < m; ++k)
        p[k] = real_coordinate(coords[static_cast<std::size_t>(k)].eval(arg), "path");
    return p;
}

PathSpec PathSpec::restrict(double a, double b) const {
    // t |-> a + (b - a) t, substituted into every coordinate AST.
    ScalarExpr repl = ScalarExpr::literal(cplx(a, 0.0), 1) +
                      ScalarExpr::literal(cplx(b - a, 0.0), 1) * ScalarExpr::variable(0, 1);
    std::vector<ScalarExpr> cs;
    cs.reserve(coords.size());
    for (const auto& e : coords) cs.push_back(e.substitute(0, repl));
    return from_expressions(std::move(cs));
}

// ---------------------------------------------------------------------------
// HomotopySpec
// ---------------------------------------------------------------------------

HomotopySpec HomotopySpec::from_expressions(std::vector<ScalarExpr> coords) {
    check_coords(coords, 2, "homotopy");
    HomotopySpec h;
    h.m = static_cast<int>(coords.size());
    h.coords = std::move(coords);
    return h;
}

HomotopySpec HomotopySpec::from_strings(const std::vector<std::string>& coords) {
    std::vector<ScalarExpr> parsed;
    parsed.reserve(coords.size());
    for (const auto& s : coords) parsed.push_back(ScalarExpr::parse(s, 2));
    return from_expressions(std::move(parsed));
}

Point HomotopySpec::eval(double t1, double t2) const {
    std::vector<cplx> arg = {cplx(t1, 0.0), cplx(t2, 0.0)};
    Point p(m);
    for (int k = 0; k < m; ++k)
        p[k] = real_coordinate(coords[static_cast<std::size_t>(k)].eval(arg), "homotopy");
    return p;
}

PathSpec HomotopySpec::boundary_t2(double t2) const {
    std::vector<ScalarExpr> cs;
    cs.reserve(coords.size());
    for (const auto& e : coords) {
        ScalarExpr fixed = e.substitute(1, ScalarExpr::literal(cplx(t2, 0.0), 2));
        cs.push_back(ScalarExpr(fixed.ast(), 1));
    }
    return PathSpec::from_expressions(std::move(cs));
}

PathSpec HomotopySpec::boundary_t1(double t1) const {
    std::vector<ScalarExpr> cs;
    cs.reserve(coords.size());
    for (const auto& e : coords) {
        ScalarExpr fixed = e.substitute(0, ScalarExpr::literal(cplx(t1, 0.0), 2));
        cs.push_back(fixed.remap_variable(1, 0, 1));
    }
    return PathSpec::from_expressions(std::move(cs));
}

// ---------------------------------------------------------------------------
// Flagging
// ---------------------------------------------------------------------------

Flagging Flagging::make(Point sigma0, Point sigma1, PathSpec s01, PathSpec s11) {
    auto close = [](const Point& a, const Point& b) {
        return (a - b).norm() <= 1e-9 * (1.0 + a.norm() + b.norm());
    };
    if (s01.m != s11.m || sigma0.size() != s01.m || sigma1.size() != s01.m)
        throw InvalidInput("flag data dimensions do not match");
    if (!close(s01.start, sigma0) || !close(s11.start, sigma0))
        throw InvalidInput("flag paths must start at sigma0");
    if (!close(s01.end, sigma1) || !close(s11.end, sigma1))
        throw InvalidInput("flag paths must end at sigma1");
    Flagging f;
    f.sigma0 = std::move(sigma0);
    f.sigma1 = std::move(sigma1);
    f.sigma01 = std::move(s01);
    f.sigma11 = std::move(s11);
    return f;
}

Flagging Flagging::from_homotopy(const HomotopySpec& h) {
    Point s0 = h.eval(0.0, 0.0);
    Point s1 = h.eval(1.0, 0.0);
    for (double t2 : {0.25, 0.5, 0.75, 1.0}) {
        if ((h.eval(0.0, t2) - s0).norm() > 1e-9 * (1.0 + s0.norm()) ||
            (h.eval(1.0, t2) - s1).norm() > 1e-9 * (1.0 + s1.norm()))
            throw InvalidInput("homotopy does not fix its endpoints");
    }
    return make(std::move(s0), std::move(s1), h.boundary_t2(0.0), h.boundary_t2(1.0));
}

// ---------------------------------------------------------------------------
// Sampling
// ---------------------------------------------------------------------------

std::vector<PathSample> sample_path(const std::function<Point(double)>& gamma, int N) {
    if (N < 1) throw InvalidInput("path partition needs N >= 1");
    std::vector<Point> verts(static_cast<std::size_t>(N) + 1);
    for (int k = 0; k <= N; ++k)
        verts[static_cast<std::size_t>(k)] = gamma(static_cast<double>(k) / N);
    std::vector<PathSample> out(static_cast<std::size_t>(N));
    for (int k = 0; k < N; ++k) {
        out[static_cast<std::size_t>(k)].at = gamma((k + 0.5) / N);
        out[static_cast<std::size_t>(k)].displacement =
            verts[static_cast<std::size_t>(k) + 1] - verts[static_cast<std::size_t>(k)];
    }
    return out;
}

std::vector<PathSample> sample_path(const PathSpec& gamma, int N) {
    return sample_path([&gamma](double t) { return gamma.eval(t); }, N);
}

Lattice2D lattice_2d(const std::function<Point(double, double)>& h, int m, int N1, int N2) {
    if (N1 < 1 || N2 < 1) throw InvalidInput("surface partition needs N1, N2 >= 1");
    if (m < 1) throw InvalidInput("chart dimension must be positive");
    Lattice2D lat;
    lat.m = m;
    lat.N1 = N1;
    lat.N2 = N2;
    lat.verts.resize(static_cast<std::size_t>(N1 + 1) * static_cast<std::size_t>(N2 + 1));
    for (int i = 0; i <= N2; ++i)
        for (int j = 0; j <= N1; ++j) {
            Point p = h(static_cast<double>(j) / N1, static_cast<double>(i) / N2);
            if (p.size() != m)
                throw InvalidInput("homotopy image dimension changed across the lattice");
            lat.verts[static_cast<std::size_t>(i) * (N1 + 1) + j] = std::move(p);
        }
    return lat;
}

Lattice2D lattice_2d(const HomotopySpec& h, int N1, int N2) {
    return lattice_2d([&h](double t1, double t2) { return h.eval(t1, t2); }, h.m, N1, N2);
}

// ---------------------------------------------------------------------------
// Cube boundary sweep
// ---------------------------------------------------------------------------

Point CubeFace::route(int first, double t) const {
    int second = (first == axis_a) ? axis_b : axis_a;
    Point p = c_lo;
    if (t <= 0.5) {
        p[first] += (c_hi[first] - c_lo[first]) * (2.0 * t);
    } else {
        p[first] = c_hi[first];
        p[second] += (c_hi[second] - c_lo[second]) * (2.0 * t - 1.0);
    }
    return p;
}

Point CubeFace::sweep(double t1, double t2) const {
    return (1.0 - t2) * route(first_axis_old, t1) + t2 * route(first_axis_new, t1);
}

Point FaceSequenceEntry::start_point() const {
    if (is_face) return face.c_hi;
    return reversed ? edge.to : edge.from;
}

Point FaceSequenceEntry::end_point() const {
    if (is_face) return face.c_hi;
    return reversed ? edge.from : edge.to;
}

FaceSequence cube_boundary_sequence_d2(const Point& center, double eps,
                                       const std::array<int, 3>& axes) {
    const int m = static_cast<int>(center.size());
    if (m < 3) throw InvalidInput("cube boundary needs chart dimension >= 3");
    if (!(eps > 0.0)) throw InvalidInput("cube edge length must be positive");
    for (int a : axes)
        if (a < 0 || a >= m) throw InvalidInput("cube axis out of range");
    if (axes[0] == axes[1] || axes[0] == axes[2] || axes[1] == axes[2])
        throw InvalidInput("cube axes must be distinct");

    auto corner = [&](int u, int v, int w) {
        Point p = center;
        p[axes[0]] += eps * (u - 0.5);
        p[axes[1]] += eps * (v - 0.5);
        p[axes[2]] += eps * (w - 0.5);
        return p;
    };
    auto face = [&](const char* id, Point lo, Point hi, int a, int b, int old_first,
                    int new_first) {
        CubeFace f;
        f.id = id;
        f.c_lo = std::move(lo);
        f.c_hi = std::move(hi);
        f.axis_a = a;
        f.axis_b = b;
        f.first_axis_old = old_first;
        f.first_axis_new = new_first;
        FaceSequenceEntry e;
        e.is_face = true;
        e.face = std::move(f);
        return e;
    };
    auto edge = [&](const char* id, Point from, Point to) {
        CubeEdge ce;
        ce.id = id;
        ce.from = std::move(from);
        ce.to = std::move(to);
        FaceSequenceEntry e;
        e.is_face = false;
        e.edge = std::move(ce);
        return e;
    };

    const int u = axes[0], v = axes[1], w = axes[2];
    FaceSequence seq;
    seq.entries = {
        // Deform the route across each face, then walk one cube edge so the
        // next face's loop base is reachable.  Opposite faces are swept with
        // opposite orientations; the connecting edges cancel in pairs.
        face("f**0", corner(0, 0, 0), corner(1, 1, 0), u, v, v, u),
        edge("e11*", corner(1, 1, 0), corner(1, 1, 1)),
        face("f1**", corner(1, 0, 0), corner(1, 1, 1), v, w, v, w),
        edge("e1*1", corner(1, 1, 1), corner(1, 0, 1)),
        face("f*0*", corner(0, 0, 0), corner(1, 0, 1), u, w, u, w),
        edge("e1*1", corner(1, 0, 1), corner(1, 1, 1)),
        face("f**1", corner(0, 0, 1), corner(1, 1, 1), u, v, u, v),
        edge("e*11", corner(1, 1, 1), corner(0, 1, 1)),
        face("f0**", corner(0, 0, 0), corner(0, 1, 1), v, w, w, v),
        edge("e*11", corner(0, 1, 1), corner(1, 1, 1)),
        face("f*1*", corner(0, 1, 0), corner(1, 1, 1), u, w, w, u),
        edge("e11*", corner(1, 1, 1), corner(1, 1, 0)),
    };

    for (std::size_t k = 0; k + 1 < seq.entries.size(); ++k) {
        if ((seq.entries[k].end_point() - seq.entries[k + 1].start_point()).norm() > 1e-12)
            throw InvalidInput("cube boundary sequence does not compose");
    }
    return seq;
}

FaceSequence reversed(const FaceSequence& seq) {
    FaceSequence out;
    out.entries.reserve(seq.entries.size());
    for (auto it = seq.entries.rbegin(); it != seq.entries.rend(); ++it) {
        FaceSequenceEntry e = *it;
        if (e.is_face)
            std::swap(e.face.first_axis_old, e.face.first_axis_new);
        else
            e.reversed = !e.reversed;
        out.entries.push_back(std::move(e));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Cellular homomorphism tables
// ---------------------------------------------------------------------------

KappaTable kappa_tables(int d) {
    if (d != 2 && d != 3)
        throw InvalidInput("cellular tables exist for d = 2 and d = 3 only");
    KappaTable t;
    t.d = d;
    if (d == 3) {
        t.d3.v_sigma0 = "v000";
        t.d3.v_sigma1 = "v111";
        t.d3.e_sigma0p = {"e*00", "e1*0", "e11*"};
        t.d3.e_sigma1p = {"e00*", "e0*1", "e*11"};
        t.d3.f_sigma0pp = {"f**0", "f1**", "f*1*"};
        t.d3.f_sigma1pp = {"f**1", "f0**", "f*0*"};
    } else {
        // Monotone edge staircases from 000 to 111; consecutive staircases
        // differ by the four edges of a single face.
        t.d2.chains = {{{"e*00", "e1*0", "e11*"},
                        {"e*00", "e10*", "e1*1"},
                        {"e00*", "e*01", "e1*1"},
                        {"e00*", "e0*1", "e*11"}}};
        t.d2.step_difference = {"f1**", "f*0*", "f**1"};
    }
    return t;
}

} // namespace ordexp
