#include "ordexp/holonomy.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace ordexp;

namespace {

const double kPi = 3.14159265358979323846;

Eigen::MatrixXcd m2(cplx a, cplx b, cplx c, cplx d) {
    Eigen::MatrixXcd m(2, 2);
    m << a, b, c, d;
    return m;
}

Point pt2(double a, double b) {
    Point p(2);
    p << a, b;
    return p;
}

ConnectionForm zero_connection(int m, int n) {
    std::vector<AlgebraElement> xs(static_cast<std::size_t>(m),
                                   AlgebraElement(Eigen::MatrixXcd::Zero(n, n)));
    return preset_constant(xs);
}

} // namespace

TEST_CASE("abelian path holonomy is the exponential of the line integral") {
    // A = c dx on a 1-d chart: Hol = exp(c (end - start)) at any resolution.
    std::vector<AlgebraElement> xs = {AlgebraElement(0.3 * Eigen::MatrixXcd::Identity(1, 1))};
    ConnectionForm a = preset_constant(xs);
    PathSpec g = PathSpec::from_strings({"t^2"});
    for (int n : {1, 7, 64})
        CHECK(std::abs(path_holonomy(a, g, n).mat(0, 0) - std::exp(cplx(0.3))) < 1e-13);
}

TEST_CASE("circle holonomy of the log-pole connection") {
    cplx alpha(0.5, 0.0);
    ConnectionForm a = preset_alpha_connection(alpha);
    PathSpec circle = PathSpec::from_strings({"cos(2*pi*t)", "sin(2*pi*t)"});
    GroupElement h = path_holonomy(a, circle, 4096);
    cplx want = std::exp(cplx(0, 2) * kPi * alpha);   // = -1
    // chord-midpoint error of the exponent is alpha*pi^3/(3 N^2) ~ 3.1e-7
    CHECK(std::abs(h.mat(0, 0) - want) < 1e-6);
}

TEST_CASE("holonomy is multiplicative over concatenation (later factors left)") {
    ConnectionForm a = random_polynomial_connection(17, 2, 2, 2, 0.6);
    PathSpec g = PathSpec::from_strings({"t", "t*(1-t)"});
    int n = 1024;
    GroupElement full = path_holonomy(a, g, n);
    GroupElement first = path_holonomy(a, g.restrict(0.0, 0.5), n / 2);
    GroupElement second = path_holonomy(a, g.restrict(0.5, 1.0), n / 2);
    CHECK(group_distance(second * first, full) < 1e-12);
    // the opposite order differs by a visible margin for this connection
    CHECK(group_distance(first * second, full) > 1e-6);
}

TEST_CASE("zero connection integrates to the exact identity") {
    ConnectionForm a = zero_connection(2, 3);
    PathSpec g = PathSpec::from_strings({"sin(t)", "t^3"});
    GroupElement h = path_holonomy(a, g, 17);
    CHECK((h.mat - Eigen::MatrixXcd::Identity(3, 3)).isZero(0.0));
}

TEST_CASE("midpoint quadrature converges at second order, left endpoint at first") {
    ConnectionForm a = random_polynomial_connection(23, 2, 2, 2, 0.7);
    PathSpec g = PathSpec::from_strings({"t", "0.4*sin(pi*t)"});
    Eigen::MatrixXcd ref = path_holonomy(a, g, 8192).mat;
    std::vector<int> levels = {32, 64, 128, 256};

    ConvergenceReport mid = refine(
        [&](int n) { return path_holonomy(a, g, n, Quadrature::midpoint).mat; }, levels, ref);
    ConvergenceReport left = refine(
        [&](int n) { return path_holonomy(a, g, n, Quadrature::left_endpoint).mat; }, levels,
        ref);
    CHECK(mid.estimated_order > 1.9);
    CHECK(left.estimated_order > 0.9);
    CHECK(left.estimated_order < 1.5);
    CHECK(mid.residuals.back() < left.residuals.back());
}

TEST_CASE("path holonomy accepts a plain callable") {
    ConnectionForm a = random_polynomial_connection(29, 2, 2, 1, 0.5);
    PathSpec g = PathSpec::from_strings({"t", "t^2"});
    GroupElement via_spec = path_holonomy(a, g, 133);
    GroupElement via_fn = path_holonomy(
        a, [](double t) { return pt2(t, t * t); }, 133);
    CHECK(group_distance(via_spec, via_fn) < 1e-13);
}

TEST_CASE("surface holonomy approaches the boundary holonomy gap") {
    // Stokes-type comparison: for the flag (F(A), A) the surface integral
    // over the sweep equals Hol(top) Hol(bottom)^{-1} in the limit.
    ConnectionForm a = random_polynomial_connection(31, 2, 2, 2, 0.5);
    FormFlag flag = FormFlag::surface_flag(curvature(a), a);
    HomotopySpec h = HomotopySpec::from_strings({"t1", "(0.1 + 0.2*t2)*sin(pi*t1)"});
    GroupElement top = path_holonomy(a, h.boundary_t2(1.0), 4096);
    GroupElement bottom = path_holonomy(a, h.boundary_t2(0.0), 4096);
    GroupElement want = top * group_inverse(bottom);

    double prev = -1.0;
    for (int n : {8, 16, 32}) {
        double d = group_distance(surface_holonomy(flag, h, n, n), want);
        if (prev > 0.0) CHECK(d < prev);
        prev = d;
    }
    CHECK(prev < 5e-3);
}

TEST_CASE("zero two-form gives the exact identity regardless of the sweep") {
    ConnectionForm a = random_polynomial_connection(37, 2, 2, 2, 0.5);
    FormFlag flag = FormFlag::surface_flag(TwoForm::zero(2, 2), a);
    HomotopySpec h = HomotopySpec::from_strings({"t1", "t2*t1*(1-t1)"});
    GroupElement s = surface_holonomy(flag, h, 9, 7);
    CHECK((s.mat - Eigen::MatrixXcd::Identity(2, 2)).isZero(0.0));
}

TEST_CASE("surface holonomy accepts a plain callable") {
    ConnectionForm a = random_polynomial_connection(41, 2, 2, 1, 0.4);
    FormFlag flag = FormFlag::surface_flag(curvature(a), a);
    HomotopySpec h = HomotopySpec::from_strings({"t1", "0.3*t2*sin(pi*t1)"});
    GroupElement via_spec = surface_holonomy(flag, h, 12, 10);
    GroupElement via_fn = surface_holonomy(
        flag,
        [](double t1, double t2) { return pt2(t1, 0.3 * t2 * std::sin(kPi * t1)); }, 2, 12, 10);
    CHECK(group_distance(via_spec, via_fn) < 1e-12);
}

TEST_CASE("cube boundary decays faster than the cube volume for curvature flags") {
    ConnectionForm a = random_polynomial_connection(43, 3, 2, 2, 0.4);
    FormFlag flag = FormFlag::surface_flag(curvature(a), a);
    Point c(3);
    c << 0.05, -0.02, 0.03;
    double v1 = mat_log(cube_boundary_holonomy(flag, c, 0.2, {0, 1, 2}, 2)).mat.norm();
    double v2 = mat_log(cube_boundary_holonomy(flag, c, 0.1, {0, 1, 2}, 4)).mat.norm();
    CHECK(v1 > 0.0);
    CHECK(v2 > 0.0);
    CHECK(v1 / v2 > 10.0);   // epsilon^4 decay would give 16
}

TEST_CASE("cube boundary validation") {
    ConnectionForm a = random_polynomial_connection(47, 3, 2, 2, 0.4);
    FormFlag flag = FormFlag::surface_flag(curvature(a), a);
    Point c = Point::Zero(3);
    CHECK_THROWS_AS(cube_boundary_holonomy(flag, c, 0.1, {0, 1, 2}, 3), InvalidInput);
    CHECK_THROWS_AS(cube_boundary_holonomy(flag, c, 0.1, {0, 1, 2}, 0), InvalidInput);
    ConnectionForm a2 = random_polynomial_connection(47, 2, 2, 2, 0.4);
    FormFlag flag2 = FormFlag::surface_flag(curvature(a2), a2);
    CHECK_THROWS_AS(cube_boundary_holonomy(flag2, Point(Point::Zero(2)), 0.1, {0, 1, 2}, 2),
                    InvalidInput);
    FormFlag path_only = FormFlag::path_flag(a);
    FaceSequence seq = cube_boundary_sequence_d2(c, 0.1, {0, 1, 2});
    CHECK_THROWS_AS(evaluate_face_sequence(path_only, seq, 2), InvalidInput);
}

TEST_CASE("loop estimate recovers the curvature of a constant connection") {
    std::vector<AlgebraElement> xs = {AlgebraElement(m2(0, 1, 0, 0)),
                                      AlgebraElement(m2(0, 0, 1, 0))};
    ConnectionForm a = preset_constant(xs);
    Eigen::MatrixXcd want = m2(1, 0, 0, -1);   // [X, Y]

    AlgebraElement raw = loop_curvature_estimate(a, pt2(0, 0), 0, 1, 0.2, 8);
    AlgebraElement rich = loop_curvature_richardson(a, pt2(0, 0), 0, 1, 0.2, 5, 8);
    CHECK((raw.mat - want).norm() < 0.4);   // leading error ~ 1.4 * eps
    CHECK((rich.mat - want).norm() < 1e-6);
    CHECK((rich.mat - want).norm() <= (raw.mat - want).norm());
}

TEST_CASE("loop estimate matches the analytic curvature of a polynomial connection") {
    ConnectionForm a = random_polynomial_connection(53, 2, 2, 2, 0.5);
    Point x = pt2(0.3, -0.2);
    Eigen::MatrixXcd want = curvature(a).value(0, 1, x).mat;
    AlgebraElement rich = loop_curvature_richardson(a, x, 0, 1, 0.2, 5, 8);
    CHECK((rich.mat - want).norm() < 1e-5);
}

TEST_CASE("word parsing and evaluation") {
    Word w = Word::parse("a b a^-1 b^-1");
    CHECK(w.letters.size() == 4);
    CHECK(w.to_string() == "a b a^-1 b^-1");
    Word squared = Word::parse("a^2 b^-2");
    CHECK(squared.letters.size() == 4);
    CHECK(squared.letters[0].name == "a");
    CHECK(squared.letters[2].exponent == -1);

    std::map<std::string, GroupElement> gens;
    gens.emplace("a", make_group_element(m2(1, 1, 0, 1)));
    gens.emplace("b", make_group_element(m2(1, 0, 1, 1)));

    GroupElement c1 = word_holonomy(gens, Word::parse("a b a^-1 b^-1"));
    CHECK((c1.mat - m2(3, -1, 1, 0)).norm() < 1e-14);
    GroupElement c2 = word_holonomy(gens, Word::parse("b a^-1 b^-1 a"));
    CHECK((c2.mat - m2(2, 1, 1, 1)).norm() < 1e-14);
    CHECK(std::abs(c1.mat.trace() - c2.mat.trace()) < 1e-14);       // conjugate words
    CHECK((c1.mat - c2.mat).norm() > 1.0);                          // but distinct elements

    GroupElement ab = word_holonomy(gens, Word::parse("a b"));
    CHECK((ab.mat - m2(2, 1, 1, 1)).isZero(0.0));   // direct product, exact
}

TEST_CASE("word errors") {
    CHECK_THROWS_AS(Word::parse("a ^2"), ParseError);
    CHECK_THROWS_AS(Word::parse("a^"), ParseError);
    CHECK(Word::parse("").letters.empty());
    CHECK_THROWS_AS(word_holonomy({}, Word::parse("")), InvalidInput);
    std::map<std::string, GroupElement> gens;
    gens.emplace("a", make_group_element(m2(1, 1, 0, 1)));
    CHECK_THROWS_AS(word_holonomy(gens, Word::parse("a c")), InvalidInput);
    std::map<std::string, GroupElement> mixed;
    mixed.emplace("a", make_group_element(m2(1, 1, 0, 1)));
    mixed.emplace("b", group_identity(3));
    CHECK_THROWS_AS(word_holonomy(mixed, Word::parse("a b")), InvalidInput);
}

TEST_CASE("refinement reporting recovers exact orders") {
    Eigen::MatrixXcd base = m2(1, 0, 0, 1), dir = m2(0, 1, 1, 0);
    auto f = [&](int n) { return Eigen::MatrixXcd(base + std::pow(n, -2.0) * dir); };
    std::vector<int> levels = {4, 8, 16, 32};

    ConvergenceReport no_ref = refine(f, levels);
    CHECK(no_ref.estimated_order == doctest::Approx(2.0).epsilon(0.01));
    CHECK(!no_ref.saturated);
    CHECK((no_ref.extrapolant - base).norm() < 1e-12);

    ConvergenceReport with_ref = refine(f, levels, base);
    CHECK(with_ref.has_reference);
    CHECK(with_ref.estimated_order == doctest::Approx(2.0).epsilon(0.01));
    CHECK(with_ref.residuals.back() == doctest::Approx(std::pow(32, -2.0) * dir.norm()));
}

TEST_CASE("refinement saturates on constant sequences") {
    auto f = [&](int) { return Eigen::MatrixXcd(m2(2, 0, 0, 2)); };
    ConvergenceReport r = refine(f, {4, 8, 16});
    CHECK(r.saturated);
    CHECK((r.extrapolant - m2(2, 0, 0, 2)).isZero(0.0));
}

TEST_CASE("refinement validates its level list") {
    auto f = [&](int) { return Eigen::MatrixXcd(m2(1, 0, 0, 1)); };
    CHECK_THROWS_AS(refine(f, {8}, m2(1, 0, 0, 1)), InvalidInput);
    CHECK_THROWS_AS(refine(f, {8, 8, 16}), InvalidInput);
    CHECK_THROWS_AS(refine(f, {16, 8, 32}), InvalidInput);
    CHECK_THROWS_AS(refine(f, {4, 8}), InvalidInput);   // no-reference needs three levels
}

TEST_CASE("convergence CSV has the fixed shape and is deterministic up to timing") {
    ConnectionForm a = random_polynomial_connection(59, 2, 2, 2, 0.5);
    PathSpec g = PathSpec::from_strings({"t", "0.2*sin(pi*t)"});
    auto f = [&](int n) { return path_holonomy(a, g, n).mat; };
    std::string csv1 = convergence_csv(refine(f, {8, 16, 32}));
    std::string csv2 = convergence_csv(refine(f, {8, 16, 32}));

    auto strip_wall = [](const std::string& csv) {
        std::string out;
        for (std::size_t pos = 0; pos < csv.size();) {
            std::size_t eol = csv.find('\n', pos);
            std::string line = csv.substr(pos, eol - pos);
            out += line.substr(0, line.rfind(','));
            out += '\n';
            pos = eol + 1;
        }
        return out;
    };
    CHECK(csv1.substr(0, csv1.find('\n')) == "level,N,residual,estimated_order,wall_ms");
    CHECK(strip_wall(csv1) == strip_wall(csv2));
    // three data rows + header
    CHECK(std::count(csv1.begin(), csv1.end(), '\n') == 4);
}

TEST_CASE("homotopy invariance check demands matching endpoints") {
    ConnectionForm flat = preset_cr_connection(ScalarExpr::parse("x1 + i*x2", 2));
    PathSpec line = PathSpec::from_strings({"t", "0"});
    PathSpec arc = PathSpec::from_strings({"t", "0.3*sin(pi*t)"});
    CHECK(homotopy_invariance_check(flat, line, arc, 512) < 1e-5);
    PathSpec shifted = PathSpec::from_strings({"t + 1", "0"});
    CHECK_THROWS_AS(homotopy_invariance_check(flat, line, shifted, 64), InvalidInput);
}
