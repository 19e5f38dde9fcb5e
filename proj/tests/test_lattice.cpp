#include "ordexp/lattice.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

using namespace ordexp;

namespace {
const double kPi = 3.14159265358979323846;

// The four edges of a face label: replace one of its two stars by 0 and 1.
std::set<std::string> face_edges(const std::string& f) {
    std::set<std::string> out;
    for (std::size_t k = 0; k < f.size(); ++k)
        if (f[k] == '*')
            for (char c : {'0', '1'}) {
                std::string e = f;
                e[k] = c;
                e[0] = 'e';   // filling one slot of a face label names an edge
                out.insert(e);
            }
    return out;
}
} // namespace

TEST_CASE("path specs evaluate and cache endpoints") {
    PathSpec g = PathSpec::from_strings({"cos(2*pi*t)", "sin(2*pi*t)"});
    CHECK(g.m == 2);
    CHECK((g.start - (Point(2) << 1, 0).finished()).norm() < 1e-15);
    CHECK((g.end - (Point(2) << 1, 0).finished()).norm() < 1e-12);
    Point q = g.eval(0.25);
    CHECK(std::abs(q[0]) < 1e-15);
    CHECK(std::abs(q[1] - 1.0) < 1e-15);
}

TEST_CASE("paths with imaginary coordinate values are rejected") {
    // endpoints are evaluated (and validated) at construction
    CHECK_THROWS_AS(PathSpec::from_strings({"i*t"}), InvalidInput);
}

TEST_CASE("restriction is exact on dyadic subdivisions") {
    PathSpec g = PathSpec::from_strings({"cos(2*pi*t)", "sin(2*pi*t)"});
    PathSpec left = g.restrict(0.0, 0.5);
    for (int j = 0; j <= 4; ++j) {
        Point a = left.eval(j / 4.0);
        Point b = g.eval(j / 8.0);
        CHECK((a - b).isZero(0.0));   // bitwise: same arguments reach the ast
    }
    PathSpec mid = g.restrict(0.25, 0.75);
    CHECK((mid.eval(0.0) - g.eval(0.25)).norm() < 1e-15);
    CHECK((mid.eval(1.0) - g.eval(0.75)).norm() < 1e-15);
}

TEST_CASE("homotopy boundaries restrict correctly") {
    HomotopySpec h = HomotopySpec::from_strings({"t1", "t2*sin(pi*t1)"});
    CHECK(h.m == 2);
    PathSpec bottom = h.boundary_t2(0.0);
    PathSpec top = h.boundary_t2(1.0);
    CHECK((bottom.eval(0.3) - h.eval(0.3, 0.0)).norm() < 1e-15);
    CHECK((top.eval(0.7) - h.eval(0.7, 1.0)).norm() < 1e-15);
    PathSpec side = h.boundary_t1(0.5);
    CHECK((side.eval(0.3) - h.eval(0.5, 0.3)).norm() < 1e-15);
    CHECK(side.m == 2);
}

TEST_CASE("flag boundary data from a fixed-endpoint homotopy") {
    HomotopySpec h = HomotopySpec::from_strings({"t1", "t2*sin(pi*t1)"});
    Flagging f = Flagging::from_homotopy(h);
    CHECK((f.sigma0 - (Point(2) << 0, 0).finished()).norm() < 1e-9);
    CHECK((f.sigma1 - (Point(2) << 1, 0).finished()).norm() < 1e-9);
    CHECK((f.sigma01.eval(0.5) - h.eval(0.5, 0.0)).norm() < 1e-15);
    CHECK((f.sigma11.eval(0.5) - h.eval(0.5, 1.0)).norm() < 1e-15);

    HomotopySpec moving = HomotopySpec::from_strings({"t1 + t2", "0"});
    CHECK_THROWS_AS(Flagging::from_homotopy(moving), InvalidInput);
}

TEST_CASE("path samples telescope to the endpoint difference") {
    PathSpec g = PathSpec::from_strings({"t^3", "sin(2*pi*t)"});
    auto samples = sample_path(g, 37);
    CHECK(samples.size() == 37);
    Point sum = Point::Zero(2);
    for (const auto& s : samples) sum += s.displacement;
    CHECK((sum - (g.end - g.start)).norm() < 1e-12);
    // midpoint evaluation point of segment k
    Point mid = g.eval((3 + 0.5) / 37.0);
    CHECK((samples[3].at - mid).norm() < 1e-15);
}

TEST_CASE("single-segment sampling") {
    PathSpec g = PathSpec::from_strings({"t"});
    auto samples = sample_path(g, 1);
    CHECK(samples.size() == 1);
    CHECK(std::abs(samples[0].at[0] - 0.5) < 1e-15);
    CHECK(std::abs(samples[0].displacement[0] - 1.0) < 1e-15);
}

TEST_CASE("lattice vertices and edge vectors") {
    HomotopySpec h = HomotopySpec::from_strings({"t1", "t2 + 0.1*t1*t2"});
    Lattice2D lat = lattice_2d(h, 4, 3);
    CHECK(lat.verts.size() == 5u * 4u);
    CHECK((lat.vertex(2, 3) - h.eval(3 / 4.0, 2 / 3.0)).norm() < 1e-15);
    CHECK((lat.e1(1, 2) - (lat.vertex(1, 3) - lat.vertex(1, 2))).isZero(0.0));
    CHECK((lat.e2(1, 2) - (lat.vertex(2, 2) - lat.vertex(1, 2))).isZero(0.0));
}

TEST_CASE("cube boundary sequence structure") {
    Point c(3);
    c << 0.2, -0.1, 0.4;
    FaceSequence seq = cube_boundary_sequence_d2(c, 0.3, {0, 1, 2});
    REQUIRE(seq.entries.size() == 12);

    std::set<std::string> face_ids, edge_ids;
    for (std::size_t k = 0; k < 12; ++k) {
        const auto& e = seq.entries[k];
        CHECK(e.is_face == (k % 2 == 0));   // alternating, face first
        if (e.is_face) face_ids.insert(e.face.id);
        else edge_ids.insert(e.edge.id);
    }
    CHECK(face_ids == std::set<std::string>{"f**0", "f1**", "f*0*", "f**1", "f0**", "f*1*"});

    // consecutive entries compose, and the whole word closes up
    for (std::size_t k = 0; k + 1 < 12; ++k)
        CHECK((seq.entries[k].end_point() - seq.entries[k + 1].start_point()).norm() < 1e-12);
    CHECK((seq.entries.back().end_point() - seq.entries.front().start_point()).norm() < 1e-12);
}

TEST_CASE("face sweeps deform one corner route into the other") {
    Point c = Point::Zero(3);
    FaceSequence seq = cube_boundary_sequence_d2(c, 1.0, {0, 1, 2});
    const CubeFace& f = seq.entries[0].face;   // f**0
    CHECK((f.sweep(0.0, 0.0) - f.c_lo).norm() < 1e-15);
    CHECK((f.sweep(1.0, 0.0) - f.c_hi).norm() < 1e-15);
    CHECK((f.sweep(0.0, 1.0) - f.c_lo).norm() < 1e-15);
    CHECK((f.sweep(1.0, 1.0) - f.c_hi).norm() < 1e-15);
    // the two routes pass through different intermediate corners
    Point mid_old = f.sweep(0.5, 0.0), mid_new = f.sweep(0.5, 1.0);
    CHECK((mid_old - mid_new).norm() > 0.5);
}

TEST_CASE("reversing a face sequence flips its traversal") {
    Point c = Point::Zero(3);
    FaceSequence seq = cube_boundary_sequence_d2(c, 0.5, {0, 1, 2});
    FaceSequence rev = reversed(seq);
    REQUIRE(rev.entries.size() == 12);
    CHECK((rev.entries.front().start_point() - seq.entries.back().end_point()).norm() < 1e-12);
    CHECK((rev.entries.back().end_point() - seq.entries.front().start_point()).norm() < 1e-12);
    for (std::size_t k = 0; k + 1 < 12; ++k)
        CHECK((rev.entries[k].end_point() - rev.entries[k + 1].start_point()).norm() < 1e-12);
}

TEST_CASE("cube boundary input validation") {
    Point c = Point::Zero(3);
    CHECK_THROWS_AS(cube_boundary_sequence_d2(c, -0.1, {0, 1, 2}), InvalidInput);
    CHECK_THROWS_AS(cube_boundary_sequence_d2(c, 0.1, {0, 0, 2}), InvalidInput);
    CHECK_THROWS_AS(cube_boundary_sequence_d2(c, 0.1, {0, 1, 7}), InvalidInput);
    Point c2 = Point::Zero(2);
    CHECK_THROWS_AS(cube_boundary_sequence_d2(c2, 0.1, {0, 1, 2}), InvalidInput);
}

TEST_CASE("cube boundary respects a permuted axis frame") {
    Point c(4);
    c << 0.1, 0.2, 0.3, 0.4;
    FaceSequence seq = cube_boundary_sequence_d2(c, 0.2, {3, 1, 0});
    for (const auto& e : seq.entries) {
        Point p = e.is_face ? e.face.c_lo : e.edge.from;
        CHECK(std::abs(p[2] - 0.3) < 1e-15);   // axis 2 never moves
    }
}

TEST_CASE("cellular homomorphism tables") {
    KappaTable t3 = kappa_tables(3);
    CHECK(t3.d == 3);
    CHECK(t3.d3.v_sigma0 == "v000");
    CHECK(t3.d3.v_sigma1 == "v111");
    CHECK(t3.d3.e_sigma0p == std::array<std::string, 3>{"e*00", "e1*0", "e11*"});
    CHECK(t3.d3.e_sigma1p == std::array<std::string, 3>{"e00*", "e0*1", "e*11"});
    CHECK(t3.d3.f_sigma0pp == std::array<std::string, 3>{"f**0", "f1**", "f*1*"});
    CHECK(t3.d3.f_sigma1pp == std::array<std::string, 3>{"f**1", "f0**", "f*0*"});

    KappaTable t2 = kappa_tables(2);
    CHECK(t2.d == 2);
    // first and last chains are the d=3 corner chains
    CHECK(t2.d2.chains[0] == t3.d3.e_sigma0p);
    CHECK(t2.d2.chains[3] == t3.d3.e_sigma1p);
    // consecutive chains differ by exactly the four edges of the step face
    for (int k = 0; k < 3; ++k) {
        std::set<std::string> a(t2.d2.chains[k].begin(), t2.d2.chains[k].end());
        std::set<std::string> b(t2.d2.chains[k + 1].begin(), t2.d2.chains[k + 1].end());
        std::set<std::string> sym;
        std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                      std::inserter(sym, sym.begin()));
        CHECK(sym == face_edges(t2.d2.step_difference[static_cast<std::size_t>(k)]));
    }

    CHECK_THROWS_AS(kappa_tables(1), InvalidInput);
    CHECK_THROWS_AS(kappa_tables(4), InvalidInput);
}

TEST_CASE("homotopy parameterization stays in bounds") {
    HomotopySpec h = HomotopySpec::from_strings({"t1", "0.5*t2"});
    Lattice2D lat = lattice_2d(h, 8, 8);
    for (const auto& v : lat.verts) {
        CHECK(v[0] >= -1e-12);
        CHECK(v[0] <= 1.0 + 1e-12);
        CHECK(v[1] <= 0.5 + 1e-12);
    }
    (void)kPi;
}
