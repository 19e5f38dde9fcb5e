// Acceptance suite: one self-contained scenario per shipped guarantee.
// Each prints exactly one [PASS]/[FAIL] line; any failure (including a
// blown time budget) makes the binary exit nonzero.

#include "ordexp/experiments.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

using namespace ordexp;

namespace {

const double kPi = 3.14159265358979323846;

int g_failures = 0;

void criterion(int idx, const char* title, double limit_s,
               const std::function<bool(std::ostringstream&)>& body) {
    std::ostringstream detail;
    bool ok = false;
    auto t0 = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        ok = false;
        detail << " exception: " << e.what();
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > limit_s) {
        ok = false;
        detail << " exceeded the " << limit_s << "s budget";
    }
    std::printf("[%s] %2d %s (%.2fs)%s\n", ok ? "PASS" : "FAIL", idx, title, secs,
                detail.str().c_str());
    if (!ok) ++g_failures;
}

Point pt2(double a, double b) {
    Point p(2);
    p << a, b;
    return p;
}

Eigen::MatrixXcd m2(cplx a, cplx b, cplx c, cplx d) {
    Eigen::MatrixXcd m(2, 2);
    m << a, b, c, d;
    return m;
}

} // namespace

int main() {
    // 1. circle holonomy of the log-pole connection reaches exp(2 pi i alpha)
    //    at second order
    criterion(1, "log-pole circle holonomy converges to exp(2*pi*i*alpha)", 2.0,
              [](std::ostringstream& out) {
        cplx alpha(0.3, 0.7);
        ConnectionForm a = preset_alpha_connection(alpha);
        PathSpec circle = PathSpec::from_strings({"cos(2*pi*t)", "sin(2*pi*t)"});
        Eigen::MatrixXcd want(1, 1);
        want(0, 0) = std::exp(cplx(0, 2) * kPi * alpha);
        ConvergenceReport r = refine(
            [&](int n) { return path_holonomy(a, circle, n).mat; }, {512, 1024, 2048, 4096},
            want);
        out << " |err(4096)| = " << r.residuals.back() << ", order = " << r.estimated_order;
        return r.residuals.back() <= 1e-8 && r.estimated_order >= 1.9;
    });

    // 2. extrapolated loop shrinking recovers the curvature [X, Y] of a
    //    constant connection
    criterion(2, "loop-shrinking estimate recovers [X, Y] for a constant connection", 1.0,
              [](std::ostringstream& out) {
        std::vector<AlgebraElement> xs = {AlgebraElement(m2(0, 1, 0, 0)),
                                          AlgebraElement(m2(0, 0, 1, 0))};
        ConnectionForm a = preset_constant(xs);
        AlgebraElement est = loop_curvature_richardson(a, pt2(0, 0), 0, 1, 0.2, 6, 4);
        double err = (est.mat - m2(1, 0, 0, -1)).norm();
        out << " |est - diag(1,-1)| = " << err;
        return err <= 1e-6;
    });

    // 3. complex-multiplication connections are flat exactly for holomorphic f
    criterion(3, "complex-multiplication connection flat iff f holomorphic", 1.0,
              [](std::ostringstream& out) {
        Point lo = pt2(-1, -1), hi = pt2(1, 1);
        double worst_flat = 0.0;
        for (const char* f : {"x1 + i*x2", "(x1 + i*x2)^2", "exp(x1 + i*x2)"}) {
            ConnectionForm a = preset_cr_connection(ScalarExpr::parse(f, 2));
            worst_flat = std::max(worst_flat, max_curvature_on_grid(a, lo, hi, {21, 21}));
        }
        ConnectionForm anti = preset_cr_connection(ScalarExpr::parse("x1 - i*x2", 2));
        double nonflat = max_curvature_on_grid(anti, lo, hi, {21, 21});
        out << " max flat ||F|| = " << worst_flat << ", conj ||F|| = " << nonflat;
        return worst_flat <= 1e-10 && nonflat > 0.1;
    });

    // 4. the covariant exterior derivative annihilates every curvature
    criterion(4, "exterior-derivative identity for 20 random polynomial connections", 5.0,
              [](std::ostringstream& out) {
        double worst = 0.0;
        for (int s = 0; s < 20; ++s) {
            ConnectionForm a =
                random_polynomial_connection(101 + static_cast<std::uint64_t>(s), 3, 2, 2, 1.0);
            ThreeFormCoefficient c = covariant_ext_derivative(curvature(a), a);
            std::mt19937_64 rng(707 + static_cast<std::uint64_t>(s));
            for (int t = 0; t < 10; ++t) {
                Point p(3);
                for (int k = 0; k < 3; ++k)
                    p[k] = 2.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53) - 1.0;
                worst = std::max(worst, c.value(0, 1, 2, p).mat.norm());
            }
        }
        out << " max residual = " << worst;
        return worst <= 1e-10;
    });

    // 5. cube-boundary products of curvature flags decay faster than the
    //    cube volume
    criterion(5, "cube-boundary decay beats slope 3.5 for curvature flags", 30.0,
              [](std::ostringstream& out) {
        double min_slope = 1e300;
        Point c(3);
        c << 0.05, -0.02, 0.03;
        std::vector<double> eps = {0.2, 0.1, 0.05, 0.025};
        for (int s = 0; s < 3; ++s) {
            ConnectionForm a =
                random_polynomial_connection(303 + static_cast<std::uint64_t>(s), 3, 2, 2, 0.4);
            FormFlag flag = FormFlag::surface_flag(curvature(a), a);
            double sx = 0, sy = 0, sxx = 0, sxy = 0;
            int used = 0;
            for (double e : eps) {
                int nsub = std::max(2, static_cast<int>(std::lround(0.4 / e) +
                                                        (std::lround(0.4 / e) % 2)));
                double v = mat_log(cube_boundary_holonomy(flag, c, e, {0, 1, 2}, nsub))
                               .mat.norm();
                if (!(v > 0.0)) continue;   // vanished: stronger than any slope
                double lx = std::log(e), ly = std::log(v);
                sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
                ++used;
            }
            if (used < 2) continue;
            double nn = static_cast<double>(used);
            double slope = (nn * sxy - sx * sy) / (nn * sxx - sx * sx);
            min_slope = std::min(min_slope, slope);
        }
        out << " min slope = " << min_slope;
        return min_slope >= 3.5;
    });

    // 6. surface holonomy converges to the boundary holonomy gap of the sweep
    criterion(6, "surface holonomy matches Hol(top) Hol(bottom)^-1 at first order", 30.0,
              [](std::ostringstream& out) {
        ConnectionForm a = random_polynomial_connection(1063, 2, 2, 2, 0.25);
        FormFlag flag = FormFlag::surface_flag(curvature(a), a);
        HomotopySpec h = HomotopySpec::from_strings({"t1", "(0.1 + 0.2*t2)*sin(pi*t1)"});
        GroupElement top = path_holonomy(a, h.boundary_t2(1.0), 4096);
        GroupElement bottom = path_holonomy(a, h.boundary_t2(0.0), 4096);
        Eigen::MatrixXcd ref = (top * group_inverse(bottom)).mat;
        ConvergenceReport r = refine(
            [&](int n) { return surface_holonomy(flag, h, n, n).mat; }, {16, 32, 64, 128},
            ref);
        out << " |err(128)| = " << r.residuals.back() << ", order = " << r.estimated_order;
        return r.estimated_order >= 1.0 && r.residuals.back() <= 1e-4;
    });

    // 7. gauge covariance of path holonomy
    criterion(7, "gauge transformation conjugates path holonomy by endpoint values", 2.0,
              [](std::ostringstream& out) {
        ConnectionForm a = random_polynomial_connection(77, 2, 2, 2, 0.5);
        GaugeFunction g = random_gauge_function(11, 2, 0.5);
        ConnectionForm ag = gauge_transform_connection(g, a);
        PathSpec arc = PathSpec::from_strings({"t", "0.3*sin(pi*t)"});
        int n = 4096;
        GroupElement lhs = path_holonomy(ag, arc, n);
        Eigen::MatrixXcd ge = g.eval(arc.end);
        Eigen::MatrixXcd gs = g.eval(arc.start);
        Eigen::MatrixXcd rhs =
            ge * path_holonomy(a, arc, n).mat *
            Eigen::PartialPivLU<Eigen::MatrixXcd>(gs).solve(Eigen::MatrixXcd::Identity(2, 2));
        double err = (lhs.mat - rhs).norm();
        out << " |Hol' - g Hol g^-1| = " << err;
        return err <= 1e-6;
    });

    // 8. conjugate commutator words share traces; evaluation is the direct
    //    product
    criterion(8, "commutator words: conjugate traces agree, direct product exact", 1.0,
              [](std::ostringstream& out) {
        Word w1 = Word::parse("a b a^-1 b^-1");
        Word w2 = Word::parse("b a^-1 b^-1 a");
        double worst_trace = 0.0;
        bool exact = true;
        for (int k = 0; k < 10; ++k) {
            std::map<std::string, GroupElement> gens;
            GroupElement ga = random_unimodular2(41 + 2 * static_cast<std::uint64_t>(k), 0.5);
            GroupElement gb = random_unimodular2(42 + 2 * static_cast<std::uint64_t>(k), 0.5);
            gens.emplace("a", ga);
            gens.emplace("b", gb);
            GroupElement v1 = word_holonomy(gens, w1);
            GroupElement v2 = word_holonomy(gens, w2);
            worst_trace = std::max(worst_trace, std::abs(v1.mat.trace() - v2.mat.trace()));
            Eigen::MatrixXcd direct =
                ga.mat * gb.mat * group_inverse(ga).mat * group_inverse(gb).mat;
            exact = exact && (v1.mat - direct).isZero(0.0);
        }
        out << " max |tr difference| = " << worst_trace
            << (exact ? ", direct product exact" : ", direct product DIFFERS");
        return worst_trace <= 1e-12 && exact;
    });

    // 9. circle discrepancy: invariant under exact forms, normalized on
    //    constants
    criterion(9, "circle discrepancy is gauge invariant and normalized", 1.0,
              [](std::ostringstream& out) {
        ScalarExpr base = ScalarExpr::parse("0.7 + sin(2*pi*t)", 1);
        double d0 = discrepancy_S1(base, 512);
        double worst = 0.0;
        for (int k = 0; k < 10; ++k) {
            auto [f, fp] = random_periodic_pair(53 + static_cast<std::uint64_t>(k), 3, 1.0);
            (void)f;
            ScalarExpr shifted = ScalarExpr::parse("0.7 + sin(2*pi*t) + (" + fp + ")", 1);
            worst = std::max(worst, std::abs(discrepancy_S1(shifted, 512) - d0));
        }
        double cerr = 0.0;
        for (double c : {0.7, -1.25, kPi}) {
            ScalarExpr w = ScalarExpr::literal(cplx(c), 1);
            cerr = std::max(cerr, std::abs(discrepancy_S1(w, 512) - c));
        }
        out << " max gauge shift = " << worst << ", constant error = " << cerr;
        return worst <= 1e-10 && cerr <= 1e-12;
    });

    // 10. homotopic arcs agree under the flat log-pole connection; arcs
    //     separated by the pole differ by |exp(2 pi i alpha) - 1|
    criterion(10, "log-pole holonomy separates homotopy classes of arcs", 3.0,
              [](std::ostringstream& out) {
        double alpha = 0.3;
        ConnectionForm a = preset_alpha_connection(cplx(alpha, 0.0));
        PathSpec upper = PathSpec::from_strings({"cos(pi*t)", "sin(pi*t)"});
        PathSpec wavy =
            PathSpec::from_strings({"cos(pi*t)", "sin(pi*t)*(1 + 0.2*sin(pi*t))"});
        PathSpec lower = PathSpec::from_strings({"cos(pi*t)", "-sin(pi*t)"});
        int n = 4096;
        double same = homotopy_invariance_check(a, upper, wavy, n);
        double gap = homotopy_invariance_check(a, upper, lower, n);
        double want = std::abs(std::exp(cplx(0, 2) * kPi * alpha) - cplx(1.0));
        out << " homotopic gap = " << same << ", separated gap error = "
            << std::abs(gap - want);
        return same <= 1e-6 && std::abs(gap - want) <= 1e-4;
    });

    // 11. ordered products: exact splitting, exact neutrality of zero forms
    criterion(11, "multiplicativity and zero-form neutrality", 1.0,
              [](std::ostringstream& out) {
        ConnectionForm a = random_polynomial_connection(505, 2, 2, 2, 0.5);
        PathSpec g = PathSpec::from_strings({"t", "t*(1-t)"});
        int n = 256;
        GroupElement full = path_holonomy(a, g, n);
        GroupElement left = path_holonomy(a, g.restrict(0.0, 0.5), n / 2);
        GroupElement right = path_holonomy(a, g.restrict(0.5, 1.0), n / 2);
        double split = group_distance(right * left, full);

        std::vector<AlgebraElement> zs(2, AlgebraElement(Eigen::MatrixXcd::Zero(2, 2)));
        GroupElement hz = path_holonomy(preset_constant(zs), g, 64);
        bool zero_conn_exact = (hz.mat - Eigen::MatrixXcd::Identity(2, 2)).isZero(0.0);

        FormFlag flag = FormFlag::surface_flag(TwoForm::zero(2, 2), a);
        HomotopySpec h = HomotopySpec::from_strings({"t1", "0.2*t2*sin(pi*t1)"});
        GroupElement sz = surface_holonomy(flag, h, 16, 16);
        bool zero_form_exact = (sz.mat - Eigen::MatrixXcd::Identity(2, 2)).isZero(0.0);

        out << " split gap = " << split << (zero_conn_exact ? ", zero connection exact" : "")
            << (zero_form_exact ? ", zero two-form exact" : "");
        return split <= 1e-13 && zero_conn_exact && zero_form_exact;
    });

    if (g_failures == 0) {
        std::printf("all acceptance criteria satisfied\n");
        return 0;
    }
    std::printf("%d acceptance criteria FAILED\n", g_failures);
    return 1;
}
