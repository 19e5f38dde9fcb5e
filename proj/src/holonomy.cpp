#include "holonomy_detail.hpp"
#include "ordexp/parallel.hpp"

#include <atomic>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#if defined(ORDEXP_HAVE_OPENMP)
#include <omp.h>
#endif

namespace ordexp {

int effective_threads() {
#if defined(ORDEXP_HAVE_OPENMP)
    int nt = omp_get_max_threads();
#else
    int nt = 1;
#endif
    if (const char* env = std::getenv("ORDEXP_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) nt = v;
    }
    return nt < 1 ? 1 : nt;
}

namespace {

// Runs body(k) for k in [0, n) with exception transport out of the
// parallel region (throwing across an omp boundary would terminate).
template <class F>
void parallel_for(long n, F&& body) {
#if defined(ORDEXP_HAVE_OPENMP)
    std::atomic<bool> failed{false};
    std::exception_ptr err = nullptr;
    const int nt = effective_threads();
#pragma omp parallel for schedule(static) num_threads(nt)
    for (long k = 0; k < n; ++k) {
        if (failed.load(std::memory_order_relaxed)) continue;
        try {
            body(k);
        } catch (...) {
            bool expected = false;
            if (failed.compare_exchange_strong(expected, true))
                err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
#else
    for (long k = 0; k < n; ++k) body(k);
#endif
}

GroupElement path_impl(const ConnectionForm& a, const std::function<Point(double)>& gamma,
                       int N, Quadrature q) {
    if (N < 1) throw InvalidInput("path partition needs N >= 1");
    std::vector<Point> verts(static_cast<std::size_t>(N) + 1);
    parallel_for(N + 1, [&](long k) {
        verts[static_cast<std::size_t>(k)] = gamma(static_cast<double>(k) / N);
        if (verts[static_cast<std::size_t>(k)].size() != a.m)
            throw InvalidInput("path image dimension does not match the chart dimension");
    });
    std::vector<Eigen::MatrixXcd> factor(static_cast<std::size_t>(N));
    parallel_for(N, [&](long k) {
        Point at = q == Quadrature::midpoint ? gamma((k + 0.5) / N)
                                             : verts[static_cast<std::size_t>(k)];
        Point dx = verts[static_cast<std::size_t>(k) + 1] - verts[static_cast<std::size_t>(k)];
        factor[static_cast<std::size_t>(k)] = detail::segment_factor(a, at, dx).mat;
    });
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Identity(a.n, a.n);
    for (int k = 0; k < N; ++k) acc = factor[static_cast<std::size_t>(k)] * acc;
    return GroupElement(std::move(acc));
}

GroupElement surface_impl(const FormFlag& flag, const std::function<Point(double, double)>& h,
                          int m, int N1, int N2) {
    if (flag.degree != 2)
        throw InvalidInput("surface holonomy needs a degree-2 flag (w, A)");
    const ConnectionForm& a = flag.one;
    const TwoForm& w = flag.two;
    if (m != a.m) throw InvalidInput("homotopy dimension does not match the chart dimension");
    const int n = a.n;
    Lattice2D lat = lattice_2d(h, m, N1, N2);
    const long cells = static_cast<long>(N1) * N2;

    std::vector<Eigen::MatrixXcd> cell(static_cast<std::size_t>(cells));
    std::vector<char> cell_zero(static_cast<std::size_t>(cells), 0);
    parallel_for(cells, [&](long t) {
        int i = static_cast<int>(t / N1), j = static_cast<int>(t % N1);
        Point center = h((j + 0.5) / N1, (i + 0.5) / N2);
        cell[static_cast<std::size_t>(t)] =
            detail::cell_exponent(w, center, lat.e1(i, j), lat.e2(i, j));
        cell_zero[static_cast<std::size_t>(t)] =
            cell[static_cast<std::size_t>(t)].isZero(0.0) ? 1 : 0;
    });
    std::vector<char> row_zero(static_cast<std::size_t>(N2), 1);
    for (int i = 0; i < N2; ++i)
        for (int j = 0; j < N1; ++j)
            if (!cell_zero[static_cast<std::size_t>(i) * N1 + j]) {
                row_zero[static_cast<std::size_t>(i)] = 0;
                break;
            }

    // bottom-edge factors of the non-trivial rows
    std::vector<GroupElement> u(static_cast<std::size_t>(cells));
    parallel_for(cells, [&](long t) {
        int i = static_cast<int>(t / N1), j = static_cast<int>(t % N1);
        if (row_zero[static_cast<std::size_t>(i)]) return;
        u[static_cast<std::size_t>(t)] = detail::segment_factor(
            a, h((j + 0.5) / N1, static_cast<double>(i) / N2), lat.e1(i, j));
    });

    // suffix transports to the row end: G_j = U_{N1-1} ... U_j
    std::vector<GroupElement> g(static_cast<std::size_t>(N2) * (N1 + 1));
    parallel_for(N2, [&](long i) {
        if (row_zero[static_cast<std::size_t>(i)]) return;
        auto* grow = &g[static_cast<std::size_t>(i) * (N1 + 1)];
        grow[N1] = group_identity(n);
        for (int j = N1 - 1; j >= 0; --j)
            grow[j] = grow[j + 1] * u[static_cast<std::size_t>(i) * N1 + j];
    });

    std::vector<Eigen::MatrixXcd> tfac(static_cast<std::size_t>(cells));
    parallel_for(cells, [&](long t) {
        int i = static_cast<int>(t / N1), j = static_cast<int>(t % N1);
        if (row_zero[static_cast<std::size_t>(i)] || cell_zero[static_cast<std::size_t>(t)])
            return;
        tfac[static_cast<std::size_t>(t)] = detail::conjugated_cell_factor(
            g[static_cast<std::size_t>(i) * (N1 + 1) + j], cell[static_cast<std::size_t>(t)]);
    });

    std::vector<Eigen::MatrixXcd> row(static_cast<std::size_t>(N2));
    parallel_for(N2, [&](long i) {
        if (row_zero[static_cast<std::size_t>(i)]) return;
        Eigen::MatrixXcd acc = Eigen::MatrixXcd::Identity(n, n);
        for (int j = 0; j < N1; ++j) {
            if (cell_zero[static_cast<std::size_t>(i) * N1 + j]) continue;
            acc = tfac[static_cast<std::size_t>(i) * N1 + j] * acc;
        }
        row[static_cast<std::size_t>(i)] = std::move(acc);
    });

    Eigen::MatrixXcd total = Eigen::MatrixXcd::Identity(n, n);
    for (int i = 0; i < N2; ++i) {
        if (row_zero[static_cast<std::size_t>(i)]) continue;
        total = row[static_cast<std::size_t>(i)] * total;
    }
    return GroupElement(std::move(total));
}

std::function<Point(double)> straight_segment(Point from, Point to) {
    return [from = std::move(from), to = std::move(to)](double t) {
        return Point((1.0 - t) * from + t * to);
    };
}

} // namespace

// ---------------------------------------------------------------------------
// Public entry points
// ---------------------------------------------------------------------------

GroupElement path_holonomy(const ConnectionForm& a, const PathSpec& gamma, int N, Quadrature q) {
    if (a.m != gamma.m)
        throw InvalidInput("connection and path live on different charts");
    return path_impl(a, [&gamma](double t) { return gamma.eval(t); }, N, q);
}

GroupElement path_holonomy(const ConnectionForm& a, const std::function<Point(double)>& gamma,
                           int N, Quadrature q) {
    return path_impl(a, gamma, N, q);
}

GroupElement surface_holonomy(const FormFlag& flag, const HomotopySpec& h, int N1, int N2) {
    return surface_impl(flag, [&h](double t1, double t2) { return h.eval(t1, t2); }, h.m,
                        N1, N2);
}

GroupElement surface_holonomy(const FormFlag& flag,
                              const std::function<Point(double, double)>& h,
                              int m, int N1, int N2) {
    return surface_impl(flag, h, m, N1, N2);
}

// ---------------------------------------------------------------------------
// Cube boundary
// ---------------------------------------------------------------------------

GroupElement evaluate_face_sequence(const FormFlag& flag, const FaceSequence& seq, int Nsub) {
    if (flag.degree != 2)
        throw InvalidInput("cube boundary evaluation needs a degree-2 flag (w, A)");
    if (Nsub < 2 || Nsub % 2 != 0)
        throw InvalidInput("cube subdivision must be even (the route kink must sit on a vertex)");
    const int m = flag.one.m;
    const int n = flag.one.n;

    std::vector<Eigen::MatrixXcd> face_val;
    bool faces_trivial = true;
    for (const auto& e : seq.entries) {
        if (!e.is_face) continue;
        if (e.face.c_lo.size() != m)
            throw InvalidInput("cube face dimension does not match the chart dimension");
        const CubeFace& f = e.face;
        GroupElement s = surface_holonomy(
            flag, [&f](double t1, double t2) { return f.sweep(t1, t2); }, m, Nsub, Nsub);
        if (!(s.mat - Eigen::MatrixXcd::Identity(n, n)).isZero(0.0)) faces_trivial = false;
        face_val.push_back(std::move(s.mat));
    }
    // All-trivial faces: the remaining edge word is contractible and its
    // factors cancel pairwise in exact arithmetic; return the identity.
    if (faces_trivial) return group_identity(n);

    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Identity(n, n);
    std::size_t fi = 0;
    for (const auto& e : seq.entries) {
        if (e.is_face) {
            acc = face_val[fi++] * acc;
        } else {
            GroupElement t = path_holonomy(
                flag.one, straight_segment(e.start_point(), e.end_point()), Nsub);
            acc = t.mat * acc;
        }
    }
    return GroupElement(std::move(acc));
}

GroupElement cube_boundary_holonomy(const FormFlag& flag, const Point& center, double eps,
                                    const std::array<int, 3>& axes, int Nsub) {
    FaceSequence seq = cube_boundary_sequence_d2(center, eps, axes);
    return evaluate_face_sequence(flag, seq, Nsub);
}

// ---------------------------------------------------------------------------
// Loop-based curvature estimation
// ---------------------------------------------------------------------------

AlgebraElement loop_curvature_estimate(const ConnectionForm& a, const Point& x, int i, int j,
                                       double eps, int N) {
    if (x.size() != a.m)
        throw InvalidInput("point dimension does not match the chart dimension");
    if (i < 0 || i >= a.m || j < 0 || j >= a.m || i == j)
        throw InvalidInput("curvature plane axes must be distinct chart axes");
    if (!(eps > 0.0)) throw InvalidInput("loop size must be positive");

    Point c00 = x, c01 = x, c11 = x, c10 = x;
    c00[i] -= 0.5 * eps; c00[j] -= 0.5 * eps;
    c01[i] -= 0.5 * eps; c01[j] += 0.5 * eps;
    c11[i] += 0.5 * eps; c11[j] += 0.5 * eps;
    c10[i] += 0.5 * eps; c10[j] -= 0.5 * eps;

    // up (+e_j), across (+e_i), down (-e_j), back (-e_i); later factors left
    GroupElement l1 = path_holonomy(a, straight_segment(c00, c01), N);
    GroupElement l2 = path_holonomy(a, straight_segment(c01, c11), N);
    GroupElement l3 = path_holonomy(a, straight_segment(c11, c10), N);
    GroupElement l4 = path_holonomy(a, straight_segment(c10, c00), N);
    GroupElement loop = l4 * (l3 * (l2 * l1));
    return AlgebraElement(mat_log(loop).mat / (eps * eps));
}

AlgebraElement loop_curvature_richardson(const ConnectionForm& a, const Point& x, int i, int j,
                                         double eps0, int levels, int N) {
    if (levels < 1) throw InvalidInput("extrapolation needs at least one level");
    std::vector<Eigen::MatrixXcd> t(static_cast<std::size_t>(levels));
    double eps = eps0;
    for (int k = 0; k < levels; ++k) {
        t[static_cast<std::size_t>(k)] = loop_curvature_estimate(a, x, i, j, eps, N).mat;
        eps *= 0.5;
    }
    // Neville over halvings: the estimate has a genuine eps^1 error term
    // (BCH tail), so column m removes the eps^m power with weight 2^m - 1.
    for (int m = 1; m < levels; ++m) {
        double w = std::pow(2.0, m) - 1.0;
        for (int k = levels - 1; k >= m; --k)
            t[static_cast<std::size_t>(k)] =
                t[static_cast<std::size_t>(k)] +
                (t[static_cast<std::size_t>(k)] - t[static_cast<std::size_t>(k) - 1]) / w;
    }
    return AlgebraElement(t[static_cast<std::size_t>(levels) - 1]);
}

// ---------------------------------------------------------------------------
// Words
// ---------------------------------------------------------------------------

Word Word::parse(const std::string& text) {
    Word w;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (!std::isalpha(static_cast<unsigned char>(text[i])) && text[i] != '_')
            throw ParseError("expected a generator name", i, {"identifier"});
        while (i < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
            ++i;
        std::string name = text.substr(start, i - start);
        long long e = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            std::size_t es = i;
            if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == es || (i == es + 1 && !std::isdigit(static_cast<unsigned char>(text[es]))))
                throw ParseError("expected an integer exponent", es, {"integer"});
            e = std::atoll(text.substr(es, i - es).c_str());
        }
        int sign = e < 0 ? -1 : 1;
        for (long long r = 0; r < (e < 0 ? -e : e); ++r)
            w.letters.push_back(Letter{name, sign});
    }
    return w;
}

std::string Word::to_string() const {
    std::string out;
    for (const auto& l : letters) {
        if (!out.empty()) out += ' ';
        out += l.name;
        if (l.exponent == -1) out += "^-1";
    }
    return out;
}

GroupElement word_holonomy(const std::map<std::string, GroupElement>& assignments,
                           const Word& w) {
    int n = 0;
    if (!assignments.empty()) n = assignments.begin()->second.n();
    for (const auto& [name, g] : assignments) {
        (void)name;
        if (g.n() != n) throw InvalidInput("word generator assignments have mixed dimensions");
    }
    if (w.letters.empty()) {
        if (n == 0)
            throw InvalidInput("cannot infer the group dimension of an empty word "
                               "without assignments");
        return group_identity(n);
    }
    if (assignments.empty())
        throw InvalidInput("word generator '" + w.letters.front().name + "' has no assignment");

    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Identity(n, n);
    for (const auto& l : w.letters) {
        auto it = assignments.find(l.name);
        if (it == assignments.end())
            throw InvalidInput("word generator '" + l.name + "' has no assignment");
        // leftmost letters act last: accumulate on the right
        acc = acc * (l.exponent == 1 ? it->second.mat : group_inverse(it->second).mat);
    }
    return GroupElement(std::move(acc));
}

// ---------------------------------------------------------------------------
// Convergence reporting
// ---------------------------------------------------------------------------

namespace {

void check_levels(const std::vector<int>& levels, std::size_t minimum) {
    if (levels.size() < minimum)
        throw InvalidInput("refinement needs at least " + std::to_string(minimum) + " levels");
    for (std::size_t k = 0; k < levels.size(); ++k) {
        if (levels[k] < 1) throw InvalidInput("refinement levels must be positive");
        if (k > 0 && levels[k] <= levels[k - 1])
            throw InvalidInput("refinement levels must increase strictly");
    }
}

std::vector<Eigen::MatrixXcd> run_levels(const std::function<Eigen::MatrixXcd(int)>& f,
                                         const std::vector<int>& levels,
                                         std::vector<double>& wall_ms) {
    std::vector<Eigen::MatrixXcd> values;
    values.reserve(levels.size());
    wall_ms.clear();
    for (int nl : levels) {
        auto t0 = std::chrono::steady_clock::now();
        values.push_back(f(nl));
        auto t1 = std::chrono::steady_clock::now();
        wall_ms.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
        if (values.size() > 1 && (values.back().rows() != values.front().rows() ||
                                  values.back().cols() != values.front().cols()))
            throw InvalidInput("refinement values change shape across levels");
    }
    return values;
}

Eigen::MatrixXcd richardson_extrapolant(const std::vector<Eigen::MatrixXcd>& v,
                                        const std::vector<int>& levels, double p,
                                        bool saturated) {
    const std::size_t L = v.size();
    if (saturated || !std::isfinite(p)) return v[L - 1];
    double rho = static_cast<double>(levels[L - 1]) / levels[L - 2];
    double denom = std::pow(rho, p) - 1.0;
    if (!(denom > 1e-6)) return v[L - 1];
    return v[L - 1] + (v[L - 1] - v[L - 2]) / denom;
}

} // namespace

ConvergenceReport refine(const std::function<Eigen::MatrixXcd(int)>& f,
                         const std::vector<int>& levels) {
    check_levels(levels, 3);
    ConvergenceReport r;
    r.levels = levels;
    r.values = run_levels(f, levels, r.wall_ms);
    const std::size_t L = levels.size();

    std::vector<double> c(L - 1);
    for (std::size_t k = 0; k + 1 < L; ++k) c[k] = (r.values[k + 1] - r.values[k]).norm();
    double scale = r.values[L - 1].norm();
    r.saturated = c[L - 2] <= 1e-15 * (1.0 + scale);
    if (c[L - 3] > 0.0 && c[L - 2] > 0.0)
        r.estimated_order = std::log(c[L - 3] / c[L - 2]) /
                            std::log(static_cast<double>(levels[L - 2]) / levels[L - 3]);
    r.extrapolant = richardson_extrapolant(r.values, levels, r.estimated_order, r.saturated);

    r.residuals.resize(L);
    for (std::size_t k = 0; k + 1 < L; ++k)
        r.residuals[k] = (r.values[k] - r.values[L - 1]).norm();
    r.residuals[L - 1] = (r.values[L - 1] - r.extrapolant).norm();
    return r;
}

ConvergenceReport refine(const std::function<Eigen::MatrixXcd(int)>& f,
                         const std::vector<int>& levels,
                         const Eigen::MatrixXcd& reference) {
    check_levels(levels, 2);
    ConvergenceReport r;
    r.levels = levels;
    r.has_reference = true;
    r.values = run_levels(f, levels, r.wall_ms);
    const std::size_t L = levels.size();
    if (r.values[0].rows() != reference.rows() || r.values[0].cols() != reference.cols())
        throw InvalidInput("reference shape does not match the refinement values");

    r.residuals.resize(L);
    for (std::size_t k = 0; k < L; ++k) r.residuals[k] = (r.values[k] - reference).norm();
    r.saturated = r.residuals[L - 1] <= 1e-15 * (1.0 + reference.norm());
    if (r.residuals[L - 2] > 0.0 && r.residuals[L - 1] > 0.0)
        r.estimated_order = std::log(r.residuals[L - 2] / r.residuals[L - 1]) /
                            std::log(static_cast<double>(levels[L - 1]) / levels[L - 2]);
    r.extrapolant = richardson_extrapolant(r.values, levels, r.estimated_order, r.saturated);
    return r;
}

std::string convergence_csv(const ConvergenceReport& r) {
    std::ostringstream out;
    out << "level,N,residual,estimated_order,wall_ms\n";
    char buf[96];
    for (std::size_t k = 0; k < r.levels.size(); ++k) {
        double order = std::numeric_limits<double>::quiet_NaN();
        if (k > 0 && r.residuals[k - 1] > 0.0 && r.residuals[k] > 0.0)
            order = std::log(r.residuals[k - 1] / r.residuals[k]) /
                    std::log(static_cast<double>(r.levels[k]) / r.levels[k - 1]);
        std::snprintf(buf, sizeof buf, "%zu,%d,%.17g,%.6g,%.3f", k, r.levels[k],
                      r.residuals[k], order, r.wall_ms[k]);
        out << buf << "\n";
    }
    return out.str();
}

double homotopy_invariance_check(const ConnectionForm& a, const PathSpec& gamma1,
                                 const PathSpec& gamma2, int N) {
    if (gamma1.m != gamma2.m || gamma1.m != a.m)
        throw InvalidInput("paths and connection live on different charts");
    if ((gamma1.start - gamma2.start).norm() > 1e-9 * (1.0 + gamma1.start.norm()) ||
        (gamma1.end - gamma2.end).norm() > 1e-9 * (1.0 + gamma1.end.norm()))
        throw InvalidInput("paths must share endpoints for a holonomy comparison");
    return group_distance(path_holonomy(a, gamma1, N), path_holonomy(a, gamma2, N));
}

} // namespace ordexp
