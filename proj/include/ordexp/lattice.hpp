#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "ordexp/forms.hpp"

namespace ordexp {

// ---------------------------------------------------------------------------
// Lattice approximation of paths, homotopies and cube boundaries.
// Partitions are always uniform; the integrals computed downstream are
// parametrization-independent in the limit.
// ---------------------------------------------------------------------------

struct PathSpec {
    int m = 0;
    std::vector<ScalarExpr> coords;   // arity 1, parameter t in [0,1]
    Point start, end;                 // cached endpoints

    static PathSpec from_expressions(std::vector<ScalarExpr> coords);
    static PathSpec from_strings(const std::vector<std::string>& coords);

    Point eval(double t) const;
    // The subpath t |-> gamma(a + (b-a) t), built by AST substitution.
    PathSpec restrict(double a, double b) const;
};

struct HomotopySpec {
    int m = 0;
    std::vector<ScalarExpr> coords;   // arity 2, parameters (t1, t2) in [0,1]^2

    static HomotopySpec from_expressions(std::vector<ScalarExpr> coords);
    static HomotopySpec from_strings(const std::vector<std::string>& coords);

    Point eval(double t1, double t2) const;
    PathSpec boundary_t2(double t2) const;   // t1 |-> h(t1, t2)
    PathSpec boundary_t1(double t1) const;   // t2 |-> h(t1, t2)
};

// Flag boundary data of a swept 2-disk: two corner points and the two
// boundary paths joining them.
struct Flagging {
    Point sigma0, sigma1;
    PathSpec sigma01, sigma11;

    // Validates the endpoint identities within 1e-9.
    static Flagging make(Point sigma0, Point sigma1, PathSpec s01, PathSpec s11);
    // sigma01 = h(.,0), sigma11 = h(.,1); requires fixed endpoints.
    static Flagging from_homotopy(const HomotopySpec& h);
};

struct PathSample {
    Point at;             // form evaluation point on the segment
    Point displacement;   // x(t_{k+1}) - x(t_k)
};

// N midpoint-rule samples over the uniform partition of [0,1].
std::vector<PathSample> sample_path(const PathSpec& gamma, int N);
std::vector<PathSample> sample_path(const std::function<Point(double)>& gamma, int N);

// Cell grid of a 2-parameter homotopy: vertex coordinates plus the two
// edge vectors out of each cell's lowest vertex.
struct Lattice2D {
    int m = 0, N1 = 0, N2 = 0;
    std::vector<Point> verts;   // (N1+1) x (N2+1), row-major in i (t2 index)

    const Point& vertex(int i, int j) const { return verts[i * (N1 + 1) + j]; }
    Point e1(int i, int j) const { return vertex(i, j + 1) - vertex(i, j); }
    Point e2(int i, int j) const { return vertex(i + 1, j) - vertex(i, j); }
};

Lattice2D lattice_2d(const HomotopySpec& h, int N1, int N2);
Lattice2D lattice_2d(const std::function<Point(double, double)>& h, int m, int N1, int N2);

// ---------------------------------------------------------------------------
// Cube boundary for the degree-2 variation (Bianchi check).
//
// The boundary of the axis cube [0,eps]^3 (anchored at center - eps/2 per
// axis) is traversed as twelve entries: six face sweeps interleaved with
// six connecting edges, alternating face/edge and starting with a face.
// Each face sweep deforms one two-leg corner-to-corner route into the
// other across the face; each connecting edge walks one cube edge so that
// consecutive entries compose.  Opposite faces appear with opposite
// orientations, and the whole word of lattice edge factors telescopes to
// the identity when the face plaquettes are exact.
// ---------------------------------------------------------------------------

struct CubeFace {
    std::string id;            // e.g. "f**0"
    Point c_lo, c_hi;          // diagonal corners joined by both routes
    int axis_a = 0, axis_b = 0;          // the face's plane axes
    int first_axis_old = 0, first_axis_new = 0;  // route taken first at t2=0 / t2=1

    // Two-leg route from c_lo to c_hi, taking `first` axis on [0,1/2].
    Point route(int first, double t) const;
    // The sweep h(t1,t2) = (1-t2) route_old(t1) + t2 route_new(t1).
    Point sweep(double t1, double t2) const;
};

struct CubeEdge {
    std::string id;            // e.g. "e11*"
    Point from, to;
};

struct FaceSequenceEntry {
    bool is_face = true;
    CubeFace face;
    CubeEdge edge;
    bool reversed = false;

    // Face entries are loops based at c_hi; edges run from -> to.
    Point start_point() const;
    Point end_point() const;
};

struct FaceSequence {
    std::vector<FaceSequenceEntry> entries;   // length 12, time-ordered
};

FaceSequence cube_boundary_sequence_d2(const Point& center, double eps,
                                       const std::array<int, 3>& axes);
FaceSequence reversed(const FaceSequence& seq);

// ---------------------------------------------------------------------------
// Cellular homomorphism tables (cube -> flagged disk).  Cells of the
// 3-cube are labelled by three characters from {0,1,*}: the number of
// stars is the cell dimension.
// ---------------------------------------------------------------------------

struct KappaTableD3 {
    std::string v_sigma0, v_sigma1;                 // vertices
    std::array<std::string, 3> e_sigma0p, e_sigma1p;   // edge chains
    std::array<std::string, 3> f_sigma0pp, f_sigma1pp; // face triples
};

struct KappaTableD2 {
    // The four edge chains of the sweeping sequence (each a staircase
    // from corner 000 to corner 111) and the face by which consecutive
    // chains differ.
    std::array<std::array<std::string, 3>, 4> chains;
    std::array<std::string, 3> step_difference;
};

struct KappaTable {
    int d = 0;
    KappaTableD3 d3;
    KappaTableD2 d2;
};

KappaTable kappa_tables(int d);   // d in {2, 3}

} // namespace ordexp
