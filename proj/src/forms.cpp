#include "ordexp/forms.hpp"

#include <cmath>
#include <cstdio>
#include <random>

namespace ordexp {

namespace {

Eigen::MatrixXcd invert(const Eigen::MatrixXcd& m) {
    return Eigen::PartialPivLU<Eigen::MatrixXcd>(m).solve(
        Eigen::MatrixXcd::Identity(m.rows(), m.cols()));
}

Eigen::MatrixXcd comm(const Eigen::MatrixXcd& x, const Eigen::MatrixXcd& y) {
    return x * y - y * x;
}

std::string format_coeff(double re, double im) {
    char buf[96];
    if (im >= 0.0)
        std::snprintf(buf, sizeof buf, "(%.17g+%.17g*i)", re, im);
    else
        std::snprintf(buf, sizeof buf, "(%.17g-%.17g*i)", re, -im);
    return buf;
}

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double rand_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// All monomial exponent vectors of length m with total degree <= degree.
void enumerate_monomials(int m, int degree, std::vector<int>& cur,
                         std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == m) {
        out.push_back(cur);
        return;
    }
    int used = 0;
    for (int e : cur) used += e;
    for (int e = 0; e + used <= degree; ++e) {
        cur.push_back(e);
        enumerate_monomials(m, degree, cur, out);
        cur.pop_back();
    }
}

std::string monomial_suffix(const std::vector<int>& expv) {
    std::string s;
    for (std::size_t k = 0; k < expv.size(); ++k) {
        if (expv[k] == 0) continue;
        s += "*x" + std::to_string(k + 1);
        if (expv[k] > 1) s += "^" + std::to_string(expv[k]);
    }
    return s;
}

} // namespace

std::vector<cplx> to_cplx_coords(const Point& p) {
    std::vector<cplx> out(static_cast<std::size_t>(p.size()));
    for (Eigen::Index k = 0; k < p.size(); ++k) out[k] = cplx(p[k], 0.0);
    return out;
}

// ---------------------------------------------------------------------------
// ExprMatrix
// ---------------------------------------------------------------------------

Eigen::MatrixXcd ExprMatrix::eval(const Point& p) const {
    std::vector<cplx> c = to_cplx_coords(p);
    Eigen::MatrixXcd out(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int q = 0; q < cols; ++q) out(r, q) = at(r, q).eval(c);
    return out;
}

Eigen::MatrixXcd ExprMatrix::partial(const Point& p, int k) const {
    std::vector<cplx> c = to_cplx_coords(p);
    Eigen::MatrixXcd out(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int q = 0; q < cols; ++q) out(r, q) = at(r, q).partial(c, k);
    return out;
}

Eigen::MatrixXcd ExprMatrix::partial2(const Point& p, int k, int l) const {
    std::vector<cplx> c = to_cplx_coords(p);
    Eigen::MatrixXcd out(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int q = 0; q < cols; ++q) out(r, q) = at(r, q).partial2(c, k, l);
    return out;
}

// ---------------------------------------------------------------------------
// ConnectionForm
// ---------------------------------------------------------------------------

AlgebraElement ConnectionForm::value(int i, const Point& p) const {
    if (i < 0 || i >= m) throw InvalidInput("connection component index out of range");
    if (static_cast<int>(p.size()) != m)
        throw InvalidInput("point dimension does not match the chart dimension");
    return AlgebraElement(comp[static_cast<std::size_t>(i)].value(p));
}

AlgebraElement ConnectionForm::partial(int i, int k, const Point& p) const {
    if (i < 0 || i >= m || k < 0 || k >= m)
        throw InvalidInput("connection partial index out of range");
    if (static_cast<int>(p.size()) != m)
        throw InvalidInput("point dimension does not match the chart dimension");
    const auto& c = comp[static_cast<std::size_t>(i)];
    if (!c.partial) throw InvalidInput("connection has no first partials");
    return AlgebraElement(c.partial(p, k));
}

AlgebraElement ConnectionForm::partial2(int i, int k, int l, const Point& p) const {
    if (i < 0 || i >= m || k < 0 || k >= m || l < 0 || l >= m)
        throw InvalidInput("connection partial index out of range");
    if (static_cast<int>(p.size()) != m)
        throw InvalidInput("point dimension does not match the chart dimension");
    const auto& c = comp[static_cast<std::size_t>(i)];
    if (!c.partial2)
        throw InvalidInput(
            "second partials are unavailable for this derived connection "
            "(they would need third derivatives of the gauge function)");
    return AlgebraElement(c.partial2(p, k, l));
}

bool ConnectionForm::has_partial2() const {
    for (const auto& c : comp)
        if (!c.partial2) return false;
    return !comp.empty();
}

ConnectionForm ConnectionForm::from_expressions(int m, int n, std::vector<ExprMatrix> grids) {
    if (m <= 0 || n <= 0) throw InvalidInput("chart and algebra dimensions must be positive");
    if (static_cast<int>(grids.size()) != m)
        throw InvalidInput("a connection needs one matrix grid per chart axis");
    for (const auto& g : grids) {
        if (g.rows != n || g.cols != n ||
            static_cast<int>(g.entries.size()) != n * n)
            throw InvalidInput("connection grid is not n x n");
        for (const auto& e : g.entries)
            if (e.arity() > m)
                throw InvalidInput("connection entry uses a variable beyond the chart dimension");
    }
    ConnectionForm a;
    a.m = m;
    a.n = n;
    a.source = grids;
    a.comp.resize(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        ExprMatrix g = grids[static_cast<std::size_t>(i)];
        a.comp[static_cast<std::size_t>(i)] = Component{
            [g](const Point& p) { return g.eval(p); },
            [g](const Point& p, int k) { return g.partial(p, k); },
            [g](const Point& p, int k, int l) { return g.partial2(p, k, l); }};
    }
    return a;
}

// ---------------------------------------------------------------------------
// TwoForm
// ---------------------------------------------------------------------------

int TwoForm::pair_index(int i, int j, int m) {
    // lexicographic over i<j: (0,1),(0,2),...,(0,m-1),(1,2),...
    return i * m - i * (i + 1) / 2 + (j - i - 1);
}

AlgebraElement TwoForm::value(int i, int j, const Point& p) const {
    if (i < 0 || i >= m || j < 0 || j >= m)
        throw InvalidInput("two-form index out of range");
    if (static_cast<int>(p.size()) != m)
        throw InvalidInput("point dimension does not match the chart dimension");
    if (i == j) return AlgebraElement(Eigen::MatrixXcd::Zero(n, n));
    if (i < j) return AlgebraElement(comp[static_cast<std::size_t>(pair_index(i, j, m))].value(p));
    return AlgebraElement(-comp[static_cast<std::size_t>(pair_index(j, i, m))].value(p));
}

AlgebraElement TwoForm::partial(int i, int j, int k, const Point& p) const {
    if (i < 0 || i >= m || j < 0 || j >= m || k < 0 || k >= m)
        throw InvalidInput("two-form index out of range");
    if (static_cast<int>(p.size()) != m)
        throw InvalidInput("point dimension does not match the chart dimension");
    if (i == j) return AlgebraElement(Eigen::MatrixXcd::Zero(n, n));
    const Component& c =
        comp[static_cast<std::size_t>(pair_index(std::min(i, j), std::max(i, j), m))];
    if (!c.partial)
        throw InvalidInput("two-form has no first partials (derived from a gauge transform "
                           "without curvature partials)");
    Eigen::MatrixXcd d = c.partial(p, k);
    return AlgebraElement(i < j ? d : Eigen::MatrixXcd(-d));
}

bool TwoForm::has_partial() const {
    for (const auto& c : comp)
        if (!c.partial) return false;
    return !comp.empty();
}

TwoForm TwoForm::from_expressions(int m, int n, std::vector<ExprMatrix> grids_upper) {
    if (m < 2 || n <= 0) throw InvalidInput("a two-form needs chart dimension >= 2");
    const int pairs = m * (m - 1) / 2;
    if (static_cast<int>(grids_upper.size()) != pairs)
        throw InvalidInput("a two-form needs one grid per index pair i<j");
    for (const auto& g : grids_upper) {
        if (g.rows != n || g.cols != n ||
            static_cast<int>(g.entries.size()) != n * n)
            throw InvalidInput("two-form grid is not n x n");
        for (const auto& e : g.entries)
            if (e.arity() > m)
                throw InvalidInput("two-form entry uses a variable beyond the chart dimension");
    }
    TwoForm w;
    w.m = m;
    w.n = n;
    w.comp.resize(static_cast<std::size_t>(pairs));
    for (int idx = 0; idx < pairs; ++idx) {
        ExprMatrix g = grids_upper[static_cast<std::size_t>(idx)];
        w.comp[static_cast<std::size_t>(idx)] = Component{
            [g](const Point& p) { return g.eval(p); },
            [g](const Point& p, int k) { return g.partial(p, k); }};
    }
    return w;
}

TwoForm TwoForm::zero(int m, int n) {
    if (m < 2 || n <= 0) throw InvalidInput("a two-form needs chart dimension >= 2");
    TwoForm w;
    w.m = m;
    w.n = n;
    w.comp.resize(static_cast<std::size_t>(m * (m - 1) / 2));
    for (auto& c : w.comp) {
        c.value = [n](const Point&) { return Eigen::MatrixXcd::Zero(n, n).eval(); };
        c.partial = [n](const Point&, int) { return Eigen::MatrixXcd::Zero(n, n).eval(); };
    }
    return w;
}

// ---------------------------------------------------------------------------
// FormFlag
// ---------------------------------------------------------------------------

FormFlag FormFlag::path_flag(ConnectionForm a) {
    if (a.m <= 0 || a.n <= 0 || a.comp.empty())
        throw InvalidInput("path flag needs a populated connection");
    FormFlag f;
    f.degree = 1;
    f.one = std::move(a);
    return f;
}

FormFlag FormFlag::surface_flag(TwoForm w, ConnectionForm a) {
    if (a.m <= 0 || a.n <= 0 || a.comp.empty())
        throw InvalidInput("surface flag needs a populated connection");
    if (w.m != a.m || w.n != a.n)
        throw InvalidInput("surface flag forms live on different charts or algebras");
    FormFlag f;
    f.degree = 2;
    f.one = std::move(a);
    f.two = std::move(w);
    return f;
}

// ---------------------------------------------------------------------------
// GaugeFunction
// ---------------------------------------------------------------------------

Eigen::MatrixXcd GaugeFunction::eval(const Point& p) const {
    Eigen::MatrixXcd g = entries.eval(p);
    double scale = g.cwiseAbs().maxCoeff();
    double det = std::abs(Eigen::PartialPivLU<Eigen::MatrixXcd>(g).determinant());
    if (!(det > 1e-9 * std::max(1.0, std::pow(scale, static_cast<double>(n)))))
        throw DomainError("gauge function is numerically singular at an evaluation point");
    return g;
}

Eigen::MatrixXcd GaugeFunction::partial(const Point& p, int k) const {
    return entries.partial(p, k);
}

Eigen::MatrixXcd GaugeFunction::partial2(const Point& p, int k, int l) const {
    return entries.partial2(p, k, l);
}

// ---------------------------------------------------------------------------
// ThreeFormCoefficient
// ---------------------------------------------------------------------------

AlgebraElement ThreeFormCoefficient::value(int i, int j, int k, const Point& p) const {
    if (i < 0 || i >= m || j < 0 || j >= m || k < 0 || k >= m)
        throw InvalidInput("three-form index out of range");
    if (i == j || i == k || j == k)
        return AlgebraElement(Eigen::MatrixXcd::Zero(n, n));
    int a = i, b = j, c = k;
    double sign = 1.0;
    if (a > b) { std::swap(a, b); sign = -sign; }
    if (b > c) { std::swap(b, c); sign = -sign; }
    if (a > b) { std::swap(a, b); sign = -sign; }
    return AlgebraElement(sign * canonical(a, b, c, p));
}

// ---------------------------------------------------------------------------
// Derived forms
// ---------------------------------------------------------------------------

TwoForm curvature(const ConnectionForm& a) {
    if (a.m < 2) throw InvalidInput("curvature needs chart dimension >= 2");
    TwoForm f;
    f.m = a.m;
    f.n = a.n;
    f.comp.resize(static_cast<std::size_t>(a.m * (a.m - 1) / 2));
    const bool second = a.has_partial2();
    for (int i = 0; i < a.m; ++i)
        for (int j = i + 1; j < a.m; ++j) {
            auto& c = f.comp[static_cast<std::size_t>(TwoForm::pair_index(i, j, a.m))];
            c.value = [a, i, j](const Point& p) {
                Eigen::MatrixXcd ai = a.value(i, p).mat;
                Eigen::MatrixXcd aj = a.value(j, p).mat;
                return (a.partial(i, j, p).mat - a.partial(j, i, p).mat + comm(ai, aj)).eval();
            };
            if (second)
                c.partial = [a, i, j](const Point& p, int k) {
                    // dF_ij/dx_k = d2A_i/dx_j dx_k - d2A_j/dx_i dx_k
                    //            + [dA_i/dx_k, A_j] + [A_i, dA_j/dx_k]
                    Eigen::MatrixXcd ai = a.value(i, p).mat;
                    Eigen::MatrixXcd aj = a.value(j, p).mat;
                    Eigen::MatrixXcd dik = a.partial(i, k, p).mat;
                    Eigen::MatrixXcd djk = a.partial(j, k, p).mat;
                    return (a.partial2(i, j, k, p).mat - a.partial2(j, i, k, p).mat +
                            comm(dik, aj) + comm(ai, djk))
                        .eval();
                };
        }
    return f;
}

ThreeFormCoefficient covariant_ext_derivative(const TwoForm& w, const ConnectionForm& a) {
    if (w.m != a.m || w.n != a.n)
        throw InvalidInput("two-form and connection live on different charts or algebras");
    if (w.m < 3) throw InvalidInput("the covariant exterior derivative needs chart dimension >= 3");
    if (!w.has_partial())
        throw InvalidInput("the covariant exterior derivative needs two-form partials");
    ThreeFormCoefficient d;
    d.m = w.m;
    d.n = w.n;
    d.canonical = [w, a](int i, int j, int k, const Point& p) {
        // C_ijk = dw_ij/dx_k + dw_ki/dx_j + dw_jk/dx_i
        //         - ([A_k, w_ij] + [A_j, w_ki] + [A_i, w_jk])
        Eigen::MatrixXcd dwij_k = w.partial(i, j, k, p).mat;
        Eigen::MatrixXcd dwki_j = w.partial(k, i, j, p).mat;
        Eigen::MatrixXcd dwjk_i = w.partial(j, k, i, p).mat;
        Eigen::MatrixXcd wij = w.value(i, j, p).mat;
        Eigen::MatrixXcd wki = w.value(k, i, p).mat;
        Eigen::MatrixXcd wjk = w.value(j, k, p).mat;
        Eigen::MatrixXcd ai = a.value(i, p).mat;
        Eigen::MatrixXcd aj = a.value(j, p).mat;
        Eigen::MatrixXcd ak = a.value(k, p).mat;
        return (dwij_k + dwki_j + dwjk_i - comm(ak, wij) - comm(aj, wki) - comm(ai, wjk))
            .eval();
    };
    return d;
}

ConnectionForm gauge_transform_connection(const GaugeFunction& g, const ConnectionForm& a) {
    if (g.m != a.m || g.n != a.n)
        throw InvalidInput("gauge function and connection live on different charts or algebras");
    ConnectionForm out;
    out.m = a.m;
    out.n = a.n;
    out.comp.resize(static_cast<std::size_t>(a.m));
    for (int i = 0; i < a.m; ++i) {
        auto& c = out.comp[static_cast<std::size_t>(i)];
        // A'_i = g A_i g^-1 + (d_i g) g^-1
        c.value = [g, a, i](const Point& p) {
            Eigen::MatrixXcd gv = g.eval(p);
            Eigen::MatrixXcd gi = invert(gv);
            return (gv * a.value(i, p).mat * gi + g.partial(p, i) * gi).eval();
        };
        // d_k A'_i, using d_k(g^-1) = -g^-1 (d_k g) g^-1.
        c.partial = [g, a, i](const Point& p, int k) {
            Eigen::MatrixXcd gv = g.eval(p);
            Eigen::MatrixXcd gi = invert(gv);
            Eigen::MatrixXcd dg = g.partial(p, k);
            Eigen::MatrixXcd dgi = -gi * dg * gi;
            Eigen::MatrixXcd av = a.value(i, p).mat;
            Eigen::MatrixXcd dav = a.partial(i, k, p).mat;
            Eigen::MatrixXcd dig = g.partial(p, i);
            Eigen::MatrixXcd d2g = g.partial2(p, i, k);
            return (dg * av * gi + gv * dav * gi + gv * av * dgi + d2g * gi + dig * dgi)
                .eval();
        };
        // Second partials would need third derivatives of g; left empty.
        c.partial2 = nullptr;
    }
    return out;
}

TwoForm gauge_transform_curvature(const GaugeFunction& g, const TwoForm& f) {
    if (g.m != f.m || g.n != f.n)
        throw InvalidInput("gauge function and two-form live on different charts or algebras");
    TwoForm out;
    out.m = f.m;
    out.n = f.n;
    out.comp.resize(f.comp.size());
    const bool partials = f.has_partial();
    for (int i = 0; i < f.m; ++i)
        for (int j = i + 1; j < f.m; ++j) {
            auto& c = out.comp[static_cast<std::size_t>(TwoForm::pair_index(i, j, f.m))];
            c.value = [g, f, i, j](const Point& p) {
                Eigen::MatrixXcd gv = g.eval(p);
                return (gv * f.value(i, j, p).mat * invert(gv)).eval();
            };
            if (partials)
                c.partial = [g, f, i, j](const Point& p, int k) {
                    Eigen::MatrixXcd gv = g.eval(p);
                    Eigen::MatrixXcd gi = invert(gv);
                    Eigen::MatrixXcd dg = g.partial(p, k);
                    Eigen::MatrixXcd fv = f.value(i, j, p).mat;
                    return (dg * fv * gi + gv * f.partial(i, j, k, p).mat * gi -
                            gv * fv * gi * dg * gi)
                        .eval();
                };
        }
    return out;
}

// ---------------------------------------------------------------------------
// Presets
// ---------------------------------------------------------------------------

ConnectionForm preset_cr_connection(const ScalarExpr& f) {
    if (f.arity() > 2)
        throw InvalidInput("the complex-multiplication preset needs f = f(x1, x2)");
    ScalarExpr f2(f.ast(), 2, f.source());
    ScalarExpr u = expr_call("re", f2);
    ScalarExpr v = -expr_call("im", f2);
    ExprMatrix a1{2, 2, {u, v, -v, u}};
    ExprMatrix a2{2, 2, {v, -u, u, v}};
    return ConnectionForm::from_expressions(2, 2, {a1, a2});
}

ConnectionForm preset_alpha_connection(cplx alpha) {
    ScalarExpr x1 = ScalarExpr::variable(0, 2);
    ScalarExpr x2 = ScalarExpr::variable(1, 2);
    ScalarExpr al = ScalarExpr::literal(alpha, 2);
    ScalarExpr iu = ScalarExpr::literal(cplx(0.0, 1.0), 2);
    ScalarExpr r2 = x1 * x1 + x2 * x2;
    // alpha dlog(x1 + i x2) split into real chart components.
    ScalarExpr a1 = al * (x1 - iu * x2) / r2;
    ScalarExpr a2 = al * (x2 + iu * x1) / r2;
    ExprMatrix g1{1, 1, {a1}};
    ExprMatrix g2{1, 1, {a2}};
    return ConnectionForm::from_expressions(2, 1, {g1, g2});
}

ConnectionForm preset_constant(const std::vector<AlgebraElement>& x) {
    if (x.empty()) throw InvalidInput("constant connection needs at least one component");
    const int m = static_cast<int>(x.size());
    const int n = x.front().n();
    for (const auto& xi : x) {
        if (xi.n() != n || xi.mat.rows() != xi.mat.cols() || xi.n() == 0)
            throw InvalidInput("constant connection components must be square and equally sized");
        if (!finite_entries(xi.mat))
            throw InvalidInput("constant connection has non-finite entries");
    }
    ConnectionForm a;
    a.m = m;
    a.n = n;
    a.comp.resize(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        Eigen::MatrixXcd v = x[static_cast<std::size_t>(i)].mat;
        a.comp[static_cast<std::size_t>(i)] = ConnectionForm::Component{
            [v](const Point&) { return v; },
            [n](const Point&, int) { return Eigen::MatrixXcd::Zero(n, n).eval(); },
            [n](const Point&, int, int) { return Eigen::MatrixXcd::Zero(n, n).eval(); }};
    }
    return a;
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

ConnectionForm random_polynomial_connection(std::uint64_t seed, int m, int n,
                                            int degree, double scale) {
    if (m <= 0 || n <= 0 || degree < 0 || !(scale > 0.0))
        throw InvalidInput("bad polynomial connection parameters");
    std::mt19937_64 rng(seed);
    std::vector<std::vector<int>> monos;
    std::vector<int> cur;
    enumerate_monomials(m, degree, cur, monos);
    const double bound = scale / static_cast<double>(monos.size());

    std::vector<ExprMatrix> grids;
    grids.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        ExprMatrix g;
        g.rows = n;
        g.cols = n;
        g.entries.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
        for (int r = 0; r < n; ++r)
            for (int q = 0; q < n; ++q) {
                std::string text;
                for (std::size_t t = 0; t < monos.size(); ++t) {
                    double re = bound * (2.0 * rand_unit(rng) - 1.0);
                    double im = bound * (2.0 * rand_unit(rng) - 1.0);
                    if (!text.empty()) text += "+";
                    text += format_coeff(re, im) + monomial_suffix(monos[t]);
                }
                g.entries.push_back(ScalarExpr::parse(text, m));
            }
        grids.push_back(std::move(g));
    }
    return ConnectionForm::from_expressions(m, n, std::move(grids));
}

std::vector<std::vector<std::string>> connection_source_strings(const ConnectionForm& a, int i) {
    if (i < 0 || i >= a.m) throw InvalidInput("connection component index out of range");
    if (a.source.empty())
        throw InvalidInput("connection is not expression-backed");
    const ExprMatrix& g = a.source[static_cast<std::size_t>(i)];
    std::vector<std::vector<std::string>> out(static_cast<std::size_t>(g.rows));
    for (int r = 0; r < g.rows; ++r) {
        out[static_cast<std::size_t>(r)].resize(static_cast<std::size_t>(g.cols));
        for (int q = 0; q < g.cols; ++q) {
            const ScalarExpr& e = g.at(r, q);
            out[static_cast<std::size_t>(r)][static_cast<std::size_t>(q)] =
                e.source().empty() ? e.to_string() : e.source();
        }
    }
    return out;
}

GaugeFunction random_gauge_function(std::uint64_t seed, int n, double scale) {
    if (n <= 0 || !(scale > 0.0)) throw InvalidInput("bad gauge function parameters");
    std::mt19937_64 rng(seed);
    auto poly = [&rng, scale](bool zero_constant) {
        // real polynomial c0 + c1 x1 + c2 x2 + c3 x1 x2, coefficients <= scale/4
        std::string text;
        for (int t = 0; t < 4; ++t) {
            double c = 0.25 * scale * (2.0 * rand_unit(rng) - 1.0);
            if (t == 0 && zero_constant) c = 0.0;
            if (!text.empty()) text += "+";
            text += "(" + format_real(c) + ")";
            if (t == 1) text += "*x1";
            if (t == 2) text += "*x2";
            if (t == 3) text += "*x1*x2";
        }
        return ScalarExpr::parse(text, 2);
    };

    // g = L U with L unipotent lower and U upper with diagonal exp(q_r):
    // det g = exp(q_1 + ... + q_n) never vanishes.
    std::vector<ScalarExpr> lower(static_cast<std::size_t>(n) * n);
    std::vector<ScalarExpr> upper(static_cast<std::size_t>(n) * n);
    ScalarExpr zero = ScalarExpr::literal(cplx(0.0, 0.0), 2);
    ScalarExpr one = ScalarExpr::literal(cplx(1.0, 0.0), 2);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            std::size_t idx = static_cast<std::size_t>(r) * n + c;
            if (r > c) lower[idx] = poly(false);
            else if (r == c) lower[idx] = one;
            else lower[idx] = zero;
            if (r < c) upper[idx] = poly(false);
            else if (r == c) upper[idx] = expr_call("exp", poly(true));
            else upper[idx] = zero;
        }

    GaugeFunction g;
    g.m = 2;
    g.n = n;
    g.entries.rows = n;
    g.entries.cols = n;
    g.entries.entries.reserve(static_cast<std::size_t>(n) * n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            ScalarExpr sum = zero;
            for (int k = 0; k < n; ++k)
                sum = sum + lower[static_cast<std::size_t>(r) * n + k] *
                                upper[static_cast<std::size_t>(k) * n + c];
            g.entries.entries.push_back(sum);
        }
    return g;
}

double max_curvature_on_grid(const ConnectionForm& a, const Point& lo, const Point& hi,
                             const std::vector<int>& counts) {
    if (lo.size() != a.m || hi.size() != a.m ||
        static_cast<int>(counts.size()) != a.m)
        throw InvalidInput("grid bounds do not match the chart dimension");
    for (int c : counts)
        if (c < 1) throw InvalidInput("grid counts must be positive");
    TwoForm f = curvature(a);
    long total = 1;
    for (int c : counts) total *= c;
    double best = 0.0;
    Point p(a.m);
    for (long t = 0; t < total; ++t) {
        long rem = t;
        for (int k = 0; k < a.m; ++k) {
            int c = counts[static_cast<std::size_t>(k)];
            int idx = static_cast<int>(rem % c);
            rem /= c;
            p[k] = c == 1 ? lo[k] : lo[k] + (hi[k] - lo[k]) * idx / (c - 1);
        }
        for (int i = 0; i < a.m; ++i)
            for (int j = i + 1; j < a.m; ++j)
                best = std::max(best, f.value(i, j, p).mat.norm());
    }
    return best;
}

} // namespace ordexp
