#include "ordexp/experiments.hpp"

#include <json.hpp>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <sstream>

namespace ordexp {

using nlohmann::json;

namespace {

// ---------------------------------------------------------------------------
// Formatting
// ---------------------------------------------------------------------------

std::string fmt_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_cplx(const cplx& v) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", v.real(), v.imag());
    return buf;
}

std::string fmt_matrix(const Eigen::MatrixXcd& m) {
    std::string s = "[";
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        s += r ? ", [" : "[";
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (c) s += ", ";
            s += fmt_cplx(m(r, c));
        }
        s += "]";
    }
    return s + "]";
}

// ---------------------------------------------------------------------------
// Config access with inline validation
// ---------------------------------------------------------------------------

[[noreturn]] void bad(const std::string& msg) { throw ConfigError(msg); }

const json& field(const json& j, const char* key, const char* ctx) {
    auto it = j.find(key);
    if (it == j.end()) bad(std::string(ctx) + ": missing required field '" + key + "'");
    return *it;
}

cplx const_expr(const json& j, const char* ctx) {
    if (j.is_number()) return cplx(j.get<double>(), 0.0);
    if (j.is_string()) return ScalarExpr::parse(j.get<std::string>(), 0).eval({});
    bad(std::string(ctx) + ": expected a number or a constant expression string");
}

double real_const(const json& j, const char* ctx) {
    cplx v = const_expr(j, ctx);
    if (std::abs(v.imag()) > 1e-12 * (1.0 + std::abs(v.real())))
        bad(std::string(ctx) + ": expected a real value");
    return v.real();
}

double real_field(const json& j, const char* key, double fallback) {
    auto it = j.find(key);
    if (it == j.end()) return fallback;
    return real_const(*it, key);
}

int int_field(const json& j, const char* key, int fallback) {
    auto it = j.find(key);
    if (it == j.end()) return fallback;
    if (!it->is_number_integer()) bad(std::string(key) + ": expected an integer");
    return it->get<int>();
}

int int_require(const json& j, const char* key, const char* ctx) {
    const json& v = field(j, key, ctx);
    if (!v.is_number_integer()) bad(std::string(ctx) + ": '" + key + "' must be an integer");
    return v.get<int>();
}

std::uint64_t seed_field(const json& j, const char* key, std::uint64_t fallback) {
    auto it = j.find(key);
    if (it == j.end()) return fallback;
    if (!it->is_number_integer()) bad(std::string(key) + ": expected an integer seed");
    return it->get<std::uint64_t>();
}

std::vector<double> real_array(const json& j, const char* ctx) {
    if (!j.is_array() || j.empty()) bad(std::string(ctx) + ": expected a nonempty array");
    std::vector<double> out;
    for (const auto& e : j) out.push_back(real_const(e, ctx));
    return out;
}

Point point_array(const json& j, const char* ctx) {
    std::vector<double> v = real_array(j, ctx);
    Point p(static_cast<Eigen::Index>(v.size()));
    for (std::size_t k = 0; k < v.size(); ++k) p[static_cast<Eigen::Index>(k)] = v[k];
    return p;
}

Eigen::MatrixXcd const_matrix(const json& j, const char* ctx) {
    if (!j.is_array() || j.empty()) bad(std::string(ctx) + ": expected a matrix (array of rows)");
    const std::size_t rows = j.size();
    std::size_t cols = 0;
    Eigen::MatrixXcd m;
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].empty())
            bad(std::string(ctx) + ": matrix rows must be nonempty arrays");
        if (r == 0) {
            cols = j[r].size();
            m.resize(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
        } else if (j[r].size() != cols) {
            bad(std::string(ctx) + ": ragged matrix rows");
        }
        for (std::size_t c = 0; c < cols; ++c)
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                const_expr(j[r][c], ctx);
    }
    return m;
}

ExprMatrix expr_matrix(const json& j, int arity, const char* ctx) {
    if (!j.is_array() || j.empty()) bad(std::string(ctx) + ": expected a matrix of expressions");
    ExprMatrix g;
    g.rows = static_cast<int>(j.size());
    g.cols = static_cast<int>(j[0].size());
    for (const auto& row : j) {
        if (!row.is_array() || static_cast<int>(row.size()) != g.cols)
            bad(std::string(ctx) + ": ragged expression matrix");
        for (const auto& e : row) {
            if (e.is_number())
                g.entries.push_back(ScalarExpr::literal(cplx(e.get<double>(), 0.0), arity));
            else if (e.is_string())
                g.entries.push_back(ScalarExpr::parse(e.get<std::string>(), arity));
            else
                bad(std::string(ctx) + ": matrix entries must be strings or numbers");
        }
    }
    return g;
}

// ---------------------------------------------------------------------------
// Form / path construction
// ---------------------------------------------------------------------------

const json* connection_section(const json& cfg) {
    if (cfg.contains("connection")) return &cfg["connection"];
    if (cfg.contains("A")) return &cfg["A"];
    return nullptr;
}

ConnectionForm parse_connection(const json& j) {
    if (!j.is_object()) bad("connection: expected an object");
    if (j.contains("preset")) {
        std::string p = j["preset"].get<std::string>();
        if (p == "cr")
            return preset_cr_connection(
                ScalarExpr::parse(field(j, "f", "connection preset cr").get<std::string>(), 2));
        if (p == "alpha")
            return preset_alpha_connection(const_expr(field(j, "alpha", "connection"), "alpha"));
        if (p == "constant") {
            const json& ms = field(j, "matrices", "connection preset constant");
            if (!ms.is_array() || ms.empty()) bad("connection: 'matrices' must be a nonempty array");
            std::vector<AlgebraElement> xs;
            for (const auto& m : ms) xs.emplace_back(const_matrix(m, "connection matrix"));
            return preset_constant(xs);
        }
        if (p == "zero") {
            int m = int_require(j, "m", "connection preset zero");
            int n = int_require(j, "n", "connection preset zero");
            if (m < 1 || n < 1) bad("connection: zero preset needs positive m and n");
            std::vector<AlgebraElement> xs(
                static_cast<std::size_t>(m), AlgebraElement(Eigen::MatrixXcd::Zero(n, n)));
            return preset_constant(xs);
        }
        bad("connection: unknown preset '" + p + "'");
    }
    if (j.contains("random")) {
        const json& r = j["random"];
        return random_polynomial_connection(seed_field(r, "seed", 1), int_field(r, "m", 2),
                                            int_field(r, "n", 2), int_field(r, "degree", 2),
                                            real_field(r, "scale", 0.5));
    }
    if (j.contains("components")) {
        const json& cs = j["components"];
        if (!cs.is_array() || cs.empty()) bad("connection: 'components' must be a nonempty array");
        int m = static_cast<int>(cs.size());
        std::vector<ExprMatrix> grids;
        for (const auto& c : cs) grids.push_back(expr_matrix(c, m, "connection component"));
        int n = grids[0].rows;
        return ConnectionForm::from_expressions(m, n, std::move(grids));
    }
    bad("connection: expected 'preset', 'random', or 'components'");
}

std::vector<ExprMatrix> random_pair_grids(std::uint64_t seed, int m, int n, int degree,
                                          double scale, std::size_t count) {
    std::vector<ExprMatrix> out;
    std::uint64_t s = seed;
    while (out.size() < count) {
        ConnectionForm c = random_polynomial_connection(s, m, n, degree, scale);
        for (auto& g : c.source) {
            out.push_back(g);
            if (out.size() == count) break;
        }
        ++s;
    }
    return out;
}

TwoForm parse_two_form(const json& j, const ConnectionForm& a) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "curvature") return curvature(a);
        if (s == "zero") return TwoForm::zero(a.m, a.n);
        bad("omega: unknown shorthand '" + s + "'");
    }
    if (!j.is_object()) bad("omega: expected an object or shorthand string");
    if (j.value("curvature", false)) return curvature(a);
    if (j.value("zero", false)) return TwoForm::zero(a.m, a.n);
    if (j.contains("components")) {
        const json& cs = j["components"];
        std::size_t pairs = static_cast<std::size_t>(a.m) * (a.m - 1) / 2;
        if (!cs.is_array() || cs.size() != pairs)
            bad("omega: needs one component grid per index pair i<j (" +
                std::to_string(pairs) + ")");
        std::vector<ExprMatrix> grids;
        for (const auto& c : cs) grids.push_back(expr_matrix(c, a.m, "omega component"));
        return TwoForm::from_expressions(a.m, a.n, std::move(grids));
    }
    if (j.contains("random")) {
        const json& r = j["random"];
        std::size_t pairs = static_cast<std::size_t>(a.m) * (a.m - 1) / 2;
        return TwoForm::from_expressions(
            a.m, a.n,
            random_pair_grids(seed_field(r, "seed", 2), a.m, a.n, int_field(r, "degree", 2),
                              real_field(r, "scale", 0.5), pairs));
    }
    bad("omega: expected 'curvature', 'zero', 'components', or 'random'");
}

PathSpec parse_path(const json& j, const char* ctx) {
    const json* coords = nullptr;
    if (j.is_array()) coords = &j;
    else if (j.is_object() && j.contains("coords")) coords = &j["coords"];
    else bad(std::string(ctx) + ": expected {\"coords\": [\"...\"]} or a coordinate array");
    std::vector<std::string> cs;
    for (const auto& e : *coords) {
        if (!e.is_string()) bad(std::string(ctx) + ": coordinates must be expression strings");
        cs.push_back(e.get<std::string>());
    }
    return PathSpec::from_strings(cs);
}

HomotopySpec parse_homotopy(const json& j, const char* ctx) {
    const json* coords = nullptr;
    if (j.is_array()) coords = &j;
    else if (j.is_object() && j.contains("coords")) coords = &j["coords"];
    else bad(std::string(ctx) + ": expected {\"coords\": [\"...\"]} or a coordinate array");
    std::vector<std::string> cs;
    for (const auto& e : *coords) {
        if (!e.is_string()) bad(std::string(ctx) + ": coordinates must be expression strings");
        cs.push_back(e.get<std::string>());
    }
    return HomotopySpec::from_strings(cs);
}

Quadrature parse_quadrature(const json& cfg) {
    std::string q = cfg.value("quadrature", std::string("midpoint"));
    if (q == "midpoint") return Quadrature::midpoint;
    if (q == "left" || q == "left_endpoint") return Quadrature::left_endpoint;
    bad("quadrature: expected 'midpoint' or 'left'");
}

Eigen::MatrixXcd invert(const Eigen::MatrixXcd& m) {
    return Eigen::PartialPivLU<Eigen::MatrixXcd>(m).solve(
        Eigen::MatrixXcd::Identity(m.rows(), m.cols()));
}

// ---------------------------------------------------------------------------
// Report assembly
// ---------------------------------------------------------------------------

struct Report {
    std::ostringstream body;
    bool tol_fail = false;

    void line(const std::string& s) { body << s << "\n"; }
    void kv(const std::string& key, const std::string& value) { body << key << ": " << value << "\n"; }

    void check_le(const std::string& name, double value, double tol) {
        bool pass = value <= tol;   // NaN compares false
        if (!pass) tol_fail = true;
        body << "check " << name << ": " << fmt_real(value) << (pass ? " <= " : " > ")
             << fmt_real(tol) << (pass ? "  [pass]" : "  [FAIL]") << "\n";
    }
    void check_ge(const std::string& name, double value, double bound) {
        bool pass = value >= bound;
        if (!pass) tol_fail = true;
        body << "check " << name << ": " << fmt_real(value) << (pass ? " >= " : " < ")
             << fmt_real(bound) << (pass ? "  [pass]" : "  [FAIL]") << "\n";
    }
    void check_true(const std::string& name, bool pass) {
        if (!pass) tol_fail = true;
        body << "check " << name << (pass ? "  [pass]" : "  [FAIL]") << "\n";
    }
};

void report_group_element(Report& rep, const std::string& label, const GroupElement& g) {
    rep.kv(label, fmt_matrix(g.mat));
    ConjugacyInvariants inv = conjugacy_invariants(g);
    rep.kv(label + " trace", fmt_cplx(inv.trace));
    rep.kv(label + " det", fmt_cplx(inv.det));
}

double rand_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// ---------------------------------------------------------------------------
// Kind handlers
// ---------------------------------------------------------------------------

void run_integrate_path(const json& cfg, Report& rep, bool validate_only) {
    const json* cj = connection_section(cfg);
    if (!cj) bad("integrate-path: missing 'connection' section");
    ConnectionForm a = parse_connection(*cj);
    PathSpec gamma = parse_path(field(cfg, "path", "integrate-path"), "path");
    if (gamma.m != a.m) bad("integrate-path: path and connection dimensions differ");
    int N = int_field(cfg, "N", 256);
    if (N < 1) bad("integrate-path: N must be positive");
    Quadrature q = parse_quadrature(cfg);
    if (validate_only) return;

    GroupElement hol = path_holonomy(a, gamma, N, q);
    rep.kv("N", std::to_string(N));
    report_group_element(rep, "holonomy", hol);

    if (cfg.contains("expect")) {
        Eigen::MatrixXcd want = const_matrix(cfg["expect"], "expect");
        double tol = real_field(cfg, "expect_tol", 1e-8);
        rep.check_le("holonomy vs expected", (hol.mat - want).norm(), tol);
    }

    if (cfg.contains("gauge_covariance")) {
        const json& gc = cfg["gauge_covariance"];
        if (a.m != 2) bad("gauge_covariance: generated gauge functions live on m = 2 charts");
        GaugeFunction g = random_gauge_function(seed_field(gc, "seed", 11), a.n,
                                                real_field(gc, "scale", 0.5));
        ConnectionForm ag = gauge_transform_connection(g, a);
        GroupElement lhs = path_holonomy(ag, gamma, N, q);
        Eigen::MatrixXcd rhs = g.eval(gamma.end) * hol.mat * invert(g.eval(gamma.start));
        rep.check_le("gauge covariance", (lhs.mat - rhs).norm(),
                     real_field(gc, "tol", 1e-6));
    }

    if (cfg.contains("compare_paths")) {
        for (const auto& cp : cfg["compare_paths"]) {
            PathSpec other = parse_path(field(cp, "path", "compare_paths"), "compare path");
            std::string label = cp.value("label", std::string("comparison"));
            double d = homotopy_invariance_check(a, gamma, other, N);
            std::string expect = cp.value("expect", std::string("equal"));
            if (expect == "equal") {
                rep.check_le("holonomy distance (" + label + ")", d,
                             real_field(cp, "tol", 1e-6));
            } else if (expect == "distance") {
                double want = real_const(field(cp, "value", "compare_paths"), "value");
                rep.check_le("holonomy distance gap (" + label + ")", std::abs(d - want),
                             real_field(cp, "tol", 1e-4));
            } else {
                bad("compare_paths: 'expect' must be 'equal' or 'distance'");
            }
        }
    }

    if (cfg.contains("split_check")) {
        const json& sc = cfg["split_check"];
        double at = real_field(sc, "at", 0.5);
        if (!(at > 0.0 && at < 1.0)) bad("split_check: 'at' must lie strictly inside (0,1)");
        int nl = static_cast<int>(std::lround(at * N));
        if (nl < 1 || nl >= N) bad("split_check: split point leaves an empty side");
        GroupElement left = path_holonomy(a, gamma.restrict(0.0, at), nl, q);
        GroupElement right = path_holonomy(a, gamma.restrict(at, 1.0), N - nl, q);
        rep.check_le("split composition", group_distance(right * left, hol),
                     real_field(sc, "tol", 1e-13));
    }

    if (cfg.value("zero_form_checks", false)) {
        std::vector<AlgebraElement> zs(static_cast<std::size_t>(a.m),
                                       AlgebraElement(Eigen::MatrixXcd::Zero(a.n, a.n)));
        ConnectionForm zero_a = preset_constant(zs);
        GroupElement hz = path_holonomy(zero_a, gamma, N, q);
        rep.check_true("zero connection gives exactly the identity",
                       (hz.mat - Eigen::MatrixXcd::Identity(a.n, a.n)).isZero(0.0));

        FormFlag flag = FormFlag::surface_flag(TwoForm::zero(a.m, a.n), a);
        GroupElement hs = surface_holonomy(
            flag,
            [&gamma](double t1, double t2) {
                Point p = gamma.eval(t1);
                p[0] += 0.25 * t2 * std::sin(3.14159265358979323846 * t1);
                return p;
            },
            a.m, 8, 8);
        rep.check_true("zero two-form sweep gives exactly the identity",
                       (hs.mat - Eigen::MatrixXcd::Identity(a.n, a.n)).isZero(0.0));
    }
}

void run_integrate_surface(const json& cfg, Report& rep, bool validate_only) {
    const json* cj = connection_section(cfg);
    if (!cj) bad("integrate-surface: missing 'connection' section");
    ConnectionForm a = parse_connection(*cj);
    TwoForm w = parse_two_form(field(cfg, "omega", "integrate-surface"), a);
    HomotopySpec h = parse_homotopy(field(cfg, "homotopy", "integrate-surface"), "homotopy");
    if (h.m != a.m) bad("integrate-surface: homotopy and connection dimensions differ");
    int N1 = int_field(cfg, "N1", 32), N2 = int_field(cfg, "N2", 32);
    if (N1 < 1 || N2 < 1) bad("integrate-surface: N1 and N2 must be positive");
    FormFlag flag = FormFlag::surface_flag(std::move(w), a);
    if (validate_only) return;

    GroupElement s = surface_holonomy(flag, h, N1, N2);
    rep.kv("N1", std::to_string(N1));
    rep.kv("N2", std::to_string(N2));
    report_group_element(rep, "surface holonomy", s);

    if (cfg.contains("expect")) {
        Eigen::MatrixXcd want = const_matrix(cfg["expect"], "expect");
        rep.check_le("surface holonomy vs expected", (s.mat - want).norm(),
                     real_field(cfg, "expect_tol", 1e-8));
    }
    if (cfg.value("expect_identity", false)) {
        rep.check_le("surface holonomy vs identity",
                     (s.mat - Eigen::MatrixXcd::Identity(a.n, a.n)).norm(),
                     real_field(cfg, "expect_tol", 1e-8));
    }
}

void run_converge(const json& cfg, Report& rep, std::string& csv, bool validate_only) {
    std::string of = cfg.value("of", std::string());
    if (of == "integrate-path") of = "path";
    if (of == "integrate-surface") of = "surface";
    if (of != "path" && of != "surface")
        bad("converge: 'of' must be 'path' or 'surface'");
    const json* cj = connection_section(cfg);
    if (!cj) bad("converge: missing 'connection' section");
    ConnectionForm a = parse_connection(*cj);

    const json& lv = field(cfg, "levels", "converge");
    if (!lv.is_array() || lv.size() < 2) bad("converge: 'levels' must list at least two N");
    std::vector<int> levels;
    for (const auto& e : lv) {
        if (!e.is_number_integer()) bad("converge: levels must be integers");
        levels.push_back(e.get<int>());
    }

    std::function<Eigen::MatrixXcd(int)> f;
    HomotopySpec h;
    if (of == "path") {
        PathSpec gamma = parse_path(field(cfg, "path", "converge"), "path");
        if (gamma.m != a.m) bad("converge: path and connection dimensions differ");
        Quadrature q = parse_quadrature(cfg);
        f = [a, gamma, q](int N) { return path_holonomy(a, gamma, N, q).mat; };
    } else {
        h = parse_homotopy(field(cfg, "homotopy", "converge"), "homotopy");
        if (h.m != a.m) bad("converge: homotopy and connection dimensions differ");
        TwoForm w = parse_two_form(field(cfg, "omega", "converge"), a);
        FormFlag flag = FormFlag::surface_flag(std::move(w), a);
        f = [flag, h](int N) { return surface_holonomy(flag, h, N, N).mat; };
    }

    bool has_ref = cfg.contains("reference");
    bool stokes_ref = has_ref && cfg["reference"].is_string() &&
                      cfg["reference"].get<std::string>() == "stokes";
    if (stokes_ref && of != "surface") bad("converge: the 'stokes' reference needs of=surface");
    if (validate_only) {
        if (has_ref && !stokes_ref) const_matrix(cfg["reference"], "reference");
        return;
    }

    ConvergenceReport r;
    if (has_ref) {
        Eigen::MatrixXcd ref;
        if (stokes_ref) {
            int pn = int_field(cfg, "reference_path_N", 4096);
            GroupElement top = path_holonomy(a, h.boundary_t2(1.0), pn);
            GroupElement bottom = path_holonomy(a, h.boundary_t2(0.0), pn);
            ref = (top * group_inverse(bottom)).mat;
            rep.kv("reference", "stokes boundary product at path N " + std::to_string(pn));
        } else {
            ref = const_matrix(cfg["reference"], "reference");
            rep.kv("reference", fmt_matrix(ref));
        }
        r = refine(f, levels, ref);
    } else {
        r = refine(f, levels);
    }

    csv = convergence_csv(r);
    for (std::size_t k = 0; k < r.levels.size(); ++k)
        rep.kv("residual at N " + std::to_string(r.levels[k]), fmt_real(r.residuals[k]));
    rep.kv("estimated order", fmt_real(r.estimated_order));
    rep.kv("saturated", r.saturated ? "true" : "false");
    rep.kv("extrapolant", fmt_matrix(r.extrapolant));

    if (cfg.contains("min_order")) {
        if (r.saturated)
            rep.check_true("order (saturated refinement counts as converged)", true);
        else
            rep.check_ge("estimated order", r.estimated_order,
                         real_field(cfg, "min_order", 1.0));
    }
    if (cfg.contains("final_tol"))
        rep.check_le("final residual", r.residuals.back(), real_field(cfg, "final_tol", 1e-8));
}

void run_curvature_estimate(const json& cfg, Report& rep, bool validate_only) {
    const json* cj = connection_section(cfg);
    if (!cj) bad("curvature-estimate: missing 'connection' section");
    ConnectionForm a = parse_connection(*cj);
    Point x = point_array(field(cfg, "point", "curvature-estimate"), "point");
    if (x.size() != a.m) bad("curvature-estimate: point dimension differs from the chart");
    const json& ax = field(cfg, "axes", "curvature-estimate");
    if (!ax.is_array() || ax.size() != 2) bad("curvature-estimate: 'axes' must be [i, j]");
    int i = ax[0].get<int>() - 1, j = ax[1].get<int>() - 1;   // 1-based in configs
    if (i < 0 || j < 0 || i >= a.m || j >= a.m || i == j)
        bad("curvature-estimate: axes must be distinct chart axes (1-based)");
    double eps0 = real_field(cfg, "eps0", 0.2);
    int levels = int_field(cfg, "levels", 5);
    int N = int_field(cfg, "N", 8);
    if (validate_only) return;

    AlgebraElement est = loop_curvature_richardson(a, x, i, j, eps0, levels, N);
    rep.kv("estimate", fmt_matrix(est.mat));
    if (cfg.contains("expect")) {
        Eigen::MatrixXcd want = const_matrix(cfg["expect"], "expect");
        rep.check_le("curvature estimate vs expected", (est.mat - want).norm(),
                     real_field(cfg, "tol", 1e-6));
    }
}

void run_check_flat(const json& cfg, Report& rep, bool validate_only) {
    const json& cases = field(cfg, "cases", "check-flat");
    if (!cases.is_array() || cases.empty()) bad("check-flat: 'cases' must be a nonempty array");
    std::vector<int> counts = {21, 21};
    if (cfg.contains("grid")) {
        const json& g = cfg["grid"];
        if (!g.is_array() || g.size() != 2) bad("check-flat: 'grid' must be [n1, n2]");
        counts = {g[0].get<int>(), g[1].get<int>()};
    }
    Point lo = cfg.contains("lo") ? point_array(cfg["lo"], "lo") : Point(Point::Constant(2, -1.0));
    Point hi = cfg.contains("hi") ? point_array(cfg["hi"], "hi") : Point(Point::Constant(2, 1.0));
    double flat_tol = real_field(cfg, "flat_tol", 1e-10);
    double nonflat_min = real_field(cfg, "nonflat_min", 0.1);

    for (const auto& c : cases) {
        std::string ftext = field(c, "f", "check-flat case").get<std::string>();
        ConnectionForm a = preset_cr_connection(ScalarExpr::parse(ftext, 2));
        bool expect_flat = field(c, "expect_flat", "check-flat case").get<bool>();
        if (validate_only) continue;
        double maxf = max_curvature_on_grid(a, lo, hi, counts);
        if (expect_flat)
            rep.check_le("max ||F|| for f = " + ftext, maxf, flat_tol);
        else
            rep.check_ge("max ||F|| for f = " + ftext, maxf, nonflat_min);
    }
}

void run_check_bianchi(const json& cfg, Report& rep, bool validate_only) {
    std::vector<ConnectionForm> conns;
    if (connection_section(cfg)) {
        conns.push_back(parse_connection(*connection_section(cfg)));
    } else if (cfg.contains("random")) {
        const json& r = cfg["random"];
        int count = int_field(r, "count", 20);
        std::uint64_t seed = seed_field(r, "seed", 101);
        int m = int_field(r, "m", 3), n = int_field(r, "n", 2);
        int degree = int_field(r, "degree", 2);
        double scale = real_field(r, "scale", 1.0);
        if (m < 3) bad("check-bianchi: needs chart dimension m >= 3");
        for (int k = 0; k < count; ++k)
            conns.push_back(random_polynomial_connection(seed + static_cast<std::uint64_t>(k),
                                                         m, n, degree, scale));
    } else {
        bad("check-bianchi: expected 'connection' or 'random'");
    }
    const json pts = cfg.value("points", json::object());
    int pcount = int_field(pts, "count", 10);
    std::uint64_t pseed = seed_field(pts, "seed", 707);
    double tol = real_field(cfg, "tol", 1e-10);
    if (validate_only) return;

    double worst = 0.0;
    for (const auto& a : conns) {
        ThreeFormCoefficient c = covariant_ext_derivative(curvature(a), a);
        std::mt19937_64 rng(pseed);
        for (int t = 0; t < pcount; ++t) {
            Point p(a.m);
            for (int k = 0; k < a.m; ++k) p[k] = 2.0 * rand_unit(rng) - 1.0;
            for (int i = 0; i < a.m; ++i)
                for (int j = i + 1; j < a.m; ++j)
                    for (int k = j + 1; k < a.m; ++k)
                        worst = std::max(worst, c.value(i, j, k, p).mat.norm());
        }
    }
    rep.kv("connections", std::to_string(conns.size()));
    rep.kv("points per connection", std::to_string(pcount));
    rep.check_le("max ||covariant exterior derivative of F||", worst, tol);
}

void run_cube_boundary(const json& cfg, Report& rep, std::string& csv, bool validate_only) {
    std::vector<ConnectionForm> conns;
    if (connection_section(cfg)) {
        conns.push_back(parse_connection(*connection_section(cfg)));
    } else if (cfg.contains("random")) {
        const json& r = cfg["random"];
        int count = int_field(r, "count", 3);
        std::uint64_t seed = seed_field(r, "seed", 303);
        int m = int_field(r, "m", 3), n = int_field(r, "n", 2);
        int degree = int_field(r, "degree", 2);
        double scale = real_field(r, "scale", 0.4);
        if (m < 3) bad("cube-boundary: needs chart dimension m >= 3");
        for (int k = 0; k < count; ++k)
            conns.push_back(random_polynomial_connection(seed + static_cast<std::uint64_t>(k),
                                                         m, n, degree, scale));
    } else {
        bad("cube-boundary: expected 'connection' or 'random'");
    }

    const json& ej = field(cfg, "eps", "cube-boundary");
    std::vector<double> eps = real_array(ej, "eps");
    for (double e : eps)
        if (!(e > 0.0)) bad("cube-boundary: eps values must be positive");

    std::array<int, 3> axes = {0, 1, 2};
    if (cfg.contains("axes")) {
        const json& ax = cfg["axes"];
        if (!ax.is_array() || ax.size() != 3) bad("cube-boundary: 'axes' must be [i, j, k]");
        for (int k = 0; k < 3; ++k) axes[static_cast<std::size_t>(k)] = ax[k].get<int>() - 1;
    }
    bool auto_nsub = true;
    int fixed_nsub = 0;
    if (cfg.contains("nsub") && !cfg["nsub"].is_string()) {
        auto_nsub = false;
        fixed_nsub = cfg["nsub"].get<int>();
    }
    auto nsub_for = [&](double e) {
        if (!auto_nsub) return fixed_nsub;
        int v = static_cast<int>(std::lround(0.4 / e));
        v += v % 2;
        return std::max(2, v);
    };
    if (validate_only) return;

    Point center = cfg.contains("center")
                       ? point_array(cfg["center"], "center")
                       : Point(Point::Zero(conns.front().m));
    if (center.size() != conns.front().m)
        bad("cube-boundary: center dimension differs from the chart");
    double min_slope = real_field(cfg, "min_slope", 3.5);

    for (std::size_t ci = 0; ci < conns.size(); ++ci) {
        const ConnectionForm& a = conns[ci];
        FormFlag flag = FormFlag::surface_flag(curvature(a), a);
        std::vector<double> vals, walls;
        for (double e : eps) {
            auto t0 = std::chrono::steady_clock::now();
            GroupElement g = cube_boundary_holonomy(flag, center, e, axes, nsub_for(e));
            vals.push_back(mat_log(g).mat.norm());
            auto t1 = std::chrono::steady_clock::now();
            walls.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
        }
        // least-squares slope of log v against log eps
        double slope = std::numeric_limits<double>::infinity();
        bool all_pos = true;
        for (double v : vals)
            if (!(v > 0.0)) all_pos = false;
        if (all_pos) {
            double sx = 0, sy = 0, sxx = 0, sxy = 0;
            for (std::size_t k = 0; k < eps.size(); ++k) {
                double lx = std::log(eps[k]), ly = std::log(vals[k]);
                sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
            }
            double nn = static_cast<double>(eps.size());
            slope = (nn * sxy - sx * sy) / (nn * sxx - sx * sx);
        }
        std::string tag = "connection " + std::to_string(ci);
        for (std::size_t k = 0; k < eps.size(); ++k)
            rep.kv(tag + " ||log boundary product|| at eps " + fmt_real(eps[k]),
                   fmt_real(vals[k]));
        rep.check_ge(tag + " decay slope", slope, min_slope);

        if (ci == 0) {
            std::ostringstream c;
            c << "level,N,residual,estimated_order,wall_ms\n";
            char buf[96];
            for (std::size_t k = 0; k < eps.size(); ++k) {
                double order = std::numeric_limits<double>::quiet_NaN();
                if (k > 0 && vals[k - 1] > 0.0 && vals[k] > 0.0)
                    order = std::log(vals[k - 1] / vals[k]) / std::log(eps[k - 1] / eps[k]);
                std::snprintf(buf, sizeof buf, "%zu,%d,%.17g,%.6g,%.3f", k, nsub_for(eps[k]),
                              vals[k], order, walls[k]);
                c << buf << "\n";
            }
            csv = c.str();
        }
    }
}

void run_monodromy(const json& cfg, Report& rep, bool validate_only) {
    const json* cj = connection_section(cfg);
    if (!cj) bad("monodromy: missing 'connection' section");
    ConnectionForm a = parse_connection(*cj);
    Point base = point_array(field(cfg, "base", "monodromy"), "base");
    const json& lj = field(cfg, "loops", "monodromy");
    if (!lj.is_array() || lj.empty()) bad("monodromy: 'loops' must be a nonempty array");
    std::vector<std::pair<std::string, PathSpec>> loops;
    for (const auto& l : lj) {
        std::string name = field(l, "name", "monodromy loop").get<std::string>();
        loops.emplace_back(name, parse_path(field(l, "path", "monodromy loop"), "loop path"));
    }
    int N = int_field(cfg, "N", 1024);
    double flat_tol = real_field(cfg, "flat_tol", 1e-8);
    if (validate_only) return;

    MonodromyRep mr = monodromy_representation(a, base, loops, N, flat_tol);
    rep.kv("flatness residual", fmt_real(mr.flatness_residual));
    for (std::size_t k = 0; k < mr.names.size(); ++k)
        report_group_element(rep, "image of " + mr.names[k], mr.images[k]);

    if (cfg.contains("expect_images")) {
        for (const auto& e : cfg["expect_images"]) {
            std::string name = field(e, "name", "expect_images").get<std::string>();
            Eigen::MatrixXcd want = const_matrix(field(e, "matrix", "expect_images"), "matrix");
            double tol = real_field(e, "tol", 1e-8);
            bool found = false;
            for (std::size_t k = 0; k < mr.names.size(); ++k)
                if (mr.names[k] == name) {
                    rep.check_le("image of " + name + " vs expected",
                                 (mr.images[k].mat - want).norm(), tol);
                    found = true;
                }
            if (!found) bad("monodromy: expectation names unknown loop '" + name + "'");
        }
    }
}

void run_word(const json& cfg, Report& rep, bool validate_only) {
    std::map<std::string, GroupElement> fixed;
    if (cfg.contains("generators")) {
        const json& gj = cfg["generators"];
        if (!gj.is_object()) bad("word: 'generators' must map names to matrices");
        for (auto it = gj.begin(); it != gj.end(); ++it)
            fixed.emplace(it.key(), make_group_element(const_matrix(it.value(), "generator")));
    }
    const json& wj = field(cfg, "words", "word");
    if (!wj.is_array() || wj.empty()) bad("word: 'words' must be a nonempty array");
    std::vector<Word> words;
    for (const auto& w : wj) words.push_back(Word::parse(w.get<std::string>()));
    double tol = real_field(cfg, "trace_tol", 1e-12);

    int pair_count = 0;
    std::uint64_t pair_seed = 0;
    double pair_scale = 0.5;
    if (cfg.contains("random_pairs")) {
        const json& rp = cfg["random_pairs"];
        pair_count = int_field(rp, "count", 10);
        pair_seed = seed_field(rp, "seed", 41);
        pair_scale = real_field(rp, "scale", 0.5);
    }
    if (validate_only) return;

    auto eval_set = [&](const std::map<std::string, GroupElement>& gens,
                        const std::string& tag) {
        std::vector<GroupElement> vals;
        for (std::size_t k = 0; k < words.size(); ++k) {
            vals.push_back(word_holonomy(gens, words[k]));
            if (tag.empty())
                report_group_element(rep, "value of '" + words[k].to_string() + "'", vals[k]);
        }
        if (cfg.value("equal_traces", true) && vals.size() >= 2) {
            for (std::size_t k = 1; k < vals.size(); ++k)
                rep.check_le("trace match" + tag + " '" + words[0].to_string() + "' vs '" +
                                 words[k].to_string() + "'",
                             std::abs(vals[0].mat.trace() - vals[k].mat.trace()), tol);
        }
        if (cfg.value("direct_product_check", false) && !words.empty()) {
            const Word& w0 = words[0];
            Eigen::MatrixXcd direct;
            bool first = true;
            for (const auto& l : w0.letters) {
                const GroupElement& g = gens.at(l.name);
                Eigen::MatrixXcd m = l.exponent == 1 ? g.mat : group_inverse(g).mat;
                direct = first ? m : Eigen::MatrixXcd(direct * m);
                first = false;
            }
            rep.check_true("word value equals the direct product exactly" + tag,
                           !first && (vals[0].mat - direct).isZero(0.0));
        }
    };

    if (!fixed.empty()) eval_set(fixed, "");
    for (int k = 0; k < pair_count; ++k) {
        std::map<std::string, GroupElement> gens;
        gens.emplace("a", random_unimodular2(pair_seed + 2 * static_cast<std::uint64_t>(k),
                                             pair_scale));
        gens.emplace("b", random_unimodular2(pair_seed + 2 * static_cast<std::uint64_t>(k) + 1,
                                             pair_scale));
        eval_set(gens, " (pair " + std::to_string(k) + ")");
    }
}

void run_discrepancy_s1(const json& cfg, Report& rep, bool validate_only) {
    std::string otext = field(cfg, "omega", "discrepancy-s1").get<std::string>();
    ScalarExpr omega = ScalarExpr::parse(otext, 1);
    int N = int_field(cfg, "N", 512);
    if (validate_only) return;

    double delta = discrepancy_S1(omega, N);
    rep.kv("discrepancy", fmt_real(delta));

    if (cfg.contains("expect"))
        rep.check_le("discrepancy vs expected",
                     std::abs(delta - real_const(cfg["expect"], "expect")),
                     real_field(cfg, "tol", 1e-12));

    if (cfg.contains("gauge_pairs")) {
        const json& gp = cfg["gauge_pairs"];
        int count = int_field(gp, "count", 10);
        std::uint64_t seed = seed_field(gp, "seed", 53);
        int degree = int_field(gp, "degree", 3);
        double scale = real_field(gp, "scale", 1.0);
        double tol = real_field(gp, "tol", 1e-10);
        double worst = 0.0;
        for (int k = 0; k < count; ++k) {
            auto [fe, fpe] = random_periodic_pair(seed + static_cast<std::uint64_t>(k),
                                                  degree, scale);
            ScalarExpr shifted = ScalarExpr::parse("(" + otext + ")+(" + fpe + ")", 1);
            worst = std::max(worst, std::abs(discrepancy_S1(shifted, N) - delta));
            (void)fe;
        }
        rep.kv("gauge pairs", std::to_string(count));
        rep.check_le("max |discrepancy shift| over exact forms", worst, tol);
    }

    if (cfg.contains("linearity")) {
        const json& lj = cfg["linearity"];
        std::string o2 = field(lj, "omega2", "linearity").get<std::string>();
        double d2 = discrepancy_S1(ScalarExpr::parse(o2, 1), N);
        double dsum = discrepancy_S1(ScalarExpr::parse("(" + otext + ")+(" + o2 + ")", 1), N);
        rep.check_le("discrepancy linearity", std::abs(dsum - delta - d2),
                     real_field(lj, "tol", 1e-12));
    }
}

void run_alpha_class(const json& cfg, Report& rep, bool validate_only) {
    cplx alpha = const_expr(field(cfg, "alpha", "alpha-class"), "alpha");
    if (validate_only) return;
    AlphaClass c = alpha_class(alpha);
    rep.kv("representative", fmt_cplx(c.representative));
    rep.kv("monodromy", fmt_cplx(c.monodromy));

    if (cfg.contains("expect_monodromy"))
        rep.check_le("monodromy vs expected",
                     std::abs(c.monodromy - const_expr(cfg["expect_monodromy"], "expect_monodromy")),
                     real_field(cfg, "tol", 1e-12));
    if (cfg.contains("expect_representative"))
        rep.check_le("representative vs expected",
                     std::abs(c.representative -
                              const_expr(cfg["expect_representative"], "expect_representative")),
                     real_field(cfg, "tol", 1e-12));
    if (cfg.contains("pairs")) {
        for (const auto& p : cfg["pairs"]) {
            cplx a = const_expr(field(p, "a", "alpha pair"), "a");
            cplx b = const_expr(field(p, "b", "alpha pair"), "b");
            bool want = field(p, "same", "alpha pair").get<bool>();
            bool got = same_alpha_class(a, b);
            rep.check_true("class comparison " + fmt_cplx(a) + " vs " + fmt_cplx(b) +
                               (want ? " (same)" : " (different)"),
                           got == want);
        }
    }
}

// ---------------------------------------------------------------------------
// Dispatch
// ---------------------------------------------------------------------------

RunResult assemble(const std::string& status, int exit_code, const std::string& body,
                   const std::string& csv = "") {
    RunResult res;
    res.status = status;
    res.exit_code = exit_code;
    res.report = "STATUS: " + status + "\n" + body;
    res.csv = csv;
    return res;
}

RunResult run_json(const json& cfg, bool validate_only) {
    if (!cfg.is_object()) bad("config: top level must be a JSON object");
    std::string kind = field(cfg, "kind", "config").get<std::string>();
    Report rep;
    rep.kv("kind", kind);
    std::string csv;

    if (kind == "integrate-path") run_integrate_path(cfg, rep, validate_only);
    else if (kind == "integrate-surface") run_integrate_surface(cfg, rep, validate_only);
    else if (kind == "converge") run_converge(cfg, rep, csv, validate_only);
    else if (kind == "curvature-estimate") run_curvature_estimate(cfg, rep, validate_only);
    else if (kind == "check-flat") run_check_flat(cfg, rep, validate_only);
    else if (kind == "check-bianchi") run_check_bianchi(cfg, rep, validate_only);
    else if (kind == "cube-boundary") run_cube_boundary(cfg, rep, csv, validate_only);
    else if (kind == "monodromy") run_monodromy(cfg, rep, validate_only);
    else if (kind == "word") run_word(cfg, rep, validate_only);
    else if (kind == "discrepancy-s1") run_discrepancy_s1(cfg, rep, validate_only);
    else if (kind == "alpha-class") run_alpha_class(cfg, rep, validate_only);
    else bad("config: unknown kind '" + kind + "'");

    if (validate_only) {
        rep.line("config valid");
        return assemble("ok", 0, rep.body.str());
    }
    if (rep.tol_fail) return assemble("tolerance-fail", 2, rep.body.str(), csv);
    return assemble("ok", 0, rep.body.str(), csv);
}

RunResult guarded(const std::function<RunResult()>& f) {
    try {
        return f();
    } catch (const EvalDomainError& e) {
        return assemble("domain-error", 4, std::string("error: ") + e.what() + "\n");
    } catch (const DomainError& e) {
        return assemble("domain-error", 4, std::string("error: ") + e.what() + "\n");
    } catch (const ParseError& e) {
        return assemble("config-error", 3, std::string("error: ") + e.what() + "\n");
    } catch (const ConfigError& e) {
        return assemble("config-error", 3, std::string("error: ") + e.what() + "\n");
    } catch (const InvalidInput& e) {
        return assemble("config-error", 3, std::string("error: ") + e.what() + "\n");
    } catch (const json::exception& e) {
        return assemble("config-error", 3, std::string("error: invalid JSON: ") + e.what() + "\n");
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

RunResult run_config_text(const std::string& json_text) {
    return guarded([&] { return run_json(json::parse(json_text), false); });
}

RunResult run_config_file(const std::string& path) {
    return guarded([&] { return run_json(json::parse(read_file(path)), false); });
}

RunResult validate_config_text(const std::string& json_text) {
    return guarded([&] { return run_json(json::parse(json_text), true); });
}

RunResult validate_config_file(const std::string& path) {
    return guarded([&] { return run_json(json::parse(read_file(path)), true); });
}

std::string config_schema_json() {
    // Hand-maintained schema mirroring the dispatch above.
    return R"json({
  "$schema": "https://json-schema.org/draft/2020-12/schema",
  "title": "ordexp experiment config",
  "type": "object",
  "required": ["kind"],
  "properties": {
    "kind": {
      "enum": ["integrate-path", "integrate-surface", "curvature-estimate", "check-flat",
               "check-bianchi", "cube-boundary", "monodromy", "word", "discrepancy-s1",
               "alpha-class", "converge"]
    },
    "connection": {
      "description": "g-valued 1-form; also accepted under key 'A'",
      "type": "object",
      "oneOf": [
        {"properties": {"preset": {"const": "cr"}, "f": {"type": "string"}},
         "required": ["preset", "f"]},
        {"properties": {"preset": {"const": "alpha"},
                        "alpha": {"type": ["string", "number"]}},
         "required": ["preset", "alpha"]},
        {"properties": {"preset": {"const": "constant"},
                        "matrices": {"type": "array", "items": {"$ref": "#/$defs/matrix"}}},
         "required": ["preset", "matrices"]},
        {"properties": {"preset": {"const": "zero"}, "m": {"type": "integer"},
                        "n": {"type": "integer"}},
         "required": ["preset", "m", "n"]},
        {"properties": {"random": {"type": "object", "properties": {
            "seed": {"type": "integer"}, "m": {"type": "integer"}, "n": {"type": "integer"},
            "degree": {"type": "integer"}, "scale": {"type": "number"}}}},
         "required": ["random"]},
        {"properties": {"components": {"type": "array",
                        "items": {"$ref": "#/$defs/matrix"}}},
         "required": ["components"]}
      ]
    },
    "omega": {
      "description": "g-valued 2-form for surface flags",
      "oneOf": [
        {"enum": ["curvature", "zero"]},
        {"type": "object", "properties": {
          "curvature": {"type": "boolean"}, "zero": {"type": "boolean"},
          "components": {"type": "array", "items": {"$ref": "#/$defs/matrix"},
                         "description": "one n-by-n grid per index pair i<j, lexicographic"},
          "random": {"type": "object"}}}
      ]
    },
    "path": {"$ref": "#/$defs/path"},
    "homotopy": {"$ref": "#/$defs/path"},
    "N": {"type": "integer"}, "N1": {"type": "integer"}, "N2": {"type": "integer"},
    "quadrature": {"enum": ["midpoint", "left"]},
    "expect": {"$ref": "#/$defs/matrix"}, "expect_tol": {"type": "number"},
    "gauge_covariance": {"type": "object", "properties": {
      "seed": {"type": "integer"}, "scale": {"type": "number"}, "tol": {"type": "number"}}},
    "compare_paths": {"type": "array", "items": {"type": "object", "properties": {
      "path": {"$ref": "#/$defs/path"}, "label": {"type": "string"},
      "expect": {"enum": ["equal", "distance"]},
      "value": {"type": ["string", "number"]}, "tol": {"type": "number"}}}},
    "split_check": {"type": "object", "properties": {
      "at": {"type": "number"}, "tol": {"type": "number"}}},
    "zero_form_checks": {"type": "boolean"},
    "levels": {"type": "array", "items": {"type": "integer"}},
    "of": {"enum": ["path", "surface", "integrate-path", "integrate-surface"]},
    "reference": {"oneOf": [{"const": "stokes"}, {"$ref": "#/$defs/matrix"}]},
    "reference_path_N": {"type": "integer"},
    "min_order": {"type": "number"}, "final_tol": {"type": "number"},
    "point": {"type": "array", "items": {"type": "number"}},
    "axes": {"type": "array", "items": {"type": "integer"},
             "description": "1-based chart axes"},
    "eps0": {"type": "number"}, "eps": {"type": "array", "items": {"type": "number"}},
    "nsub": {"oneOf": [{"const": "auto"}, {"type": "integer"}]},
    "min_slope": {"type": "number"}, "center": {"type": "array"},
    "cases": {"type": "array", "items": {"type": "object", "properties": {
      "f": {"type": "string"}, "expect_flat": {"type": "boolean"}}}},
    "grid": {"type": "array"}, "lo": {"type": "array"}, "hi": {"type": "array"},
    "flat_tol": {"type": "number"}, "nonflat_min": {"type": "number"},
    "random": {"type": "object"}, "points": {"type": "object"}, "tol": {"type": "number"},
    "base": {"type": "array"},
    "loops": {"type": "array", "items": {"type": "object", "properties": {
      "name": {"type": "string"}, "path": {"$ref": "#/$defs/path"}}}},
    "flat_tol_monodromy": {"type": "number"},
    "expect_images": {"type": "array"},
    "generators": {"type": "object", "additionalProperties": {"$ref": "#/$defs/matrix"}},
    "random_pairs": {"type": "object", "properties": {
      "count": {"type": "integer"}, "seed": {"type": "integer"}, "scale": {"type": "number"}}},
    "words": {"type": "array", "items": {"type": "string"}},
    "equal_traces": {"type": "boolean"}, "trace_tol": {"type": "number"},
    "direct_product_check": {"type": "boolean"},
    "gauge_pairs": {"type": "object", "properties": {
      "count": {"type": "integer"}, "seed": {"type": "integer"},
      "degree": {"type": "integer"}, "scale": {"type": "number"}, "tol": {"type": "number"}}},
    "linearity": {"type": "object"},
    "alpha": {"type": ["string", "number"]},
    "expect_monodromy": {"type": ["string", "number"]},
    "expect_representative": {"type": ["string", "number"]},
    "pairs": {"type": "array", "items": {"type": "object", "properties": {
      "a": {"type": ["string", "number"]}, "b": {"type": ["string", "number"]},
      "same": {"type": "boolean"}}}}
  },
  "$defs": {
    "matrix": {"type": "array", "items": {"type": "array",
               "items": {"type": ["string", "number"]}},
               "description": "matrix of expression strings (or plain numbers)"},
    "path": {"oneOf": [
      {"type": "array", "items": {"type": "string"}},
      {"type": "object", "properties": {"coords": {"type": "array",
       "items": {"type": "string"}}}, "required": ["coords"]}]}
  }
})json";
}

} // namespace ordexp
