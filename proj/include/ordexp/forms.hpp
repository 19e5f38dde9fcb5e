#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ordexp/algebra.hpp"
#include "ordexp/formlang.hpp"

namespace ordexp {

// Chart points are real coordinate vectors.
using Point = Eigen::VectorXd;

std::vector<cplx> to_cplx_coords(const Point& p);

// ---------------------------------------------------------------------------
// g-valued differential forms on a single chart.
//
// Forms are analytic: either grids of parsed scalar expressions (whose
// partials come exactly from forward-mode AD) or closures derived from
// such grids (curvature, gauge transforms) whose partials are assembled
// exactly from the parents'.  No finite differencing anywhere.
//
// Curvature convention, fixed once and used everywhere:
//     F_ij = dA_i/dx_j - dA_j/dx_i + [A_i, A_j].
// ---------------------------------------------------------------------------

// n x n matrix of scalar expressions, all of one arity.
struct ExprMatrix {
    int rows = 0, cols = 0;
    std::vector<ScalarExpr> entries;   // row-major

    const ScalarExpr& at(int r, int c) const { return entries[r * cols + c]; }
    Eigen::MatrixXcd eval(const Point& p) const;
    Eigen::MatrixXcd partial(const Point& p, int k) const;
    Eigen::MatrixXcd partial2(const Point& p, int k, int l) const;
};

struct ConnectionForm {
    struct Component {
        std::function<Eigen::MatrixXcd(const Point&)> value;
        std::function<Eigen::MatrixXcd(const Point&, int)> partial;
        std::function<Eigen::MatrixXcd(const Point&, int, int)> partial2;  // may be empty
    };

    int m = 0;   // chart dimension
    int n = 0;   // algebra dimension
    std::vector<Component> comp;        // size m
    std::vector<ExprMatrix> source;     // non-empty iff expression-backed

    AlgebraElement value(int i, const Point& p) const;
    AlgebraElement partial(int i, int k, const Point& p) const;   // dA_i/dx_k
    AlgebraElement partial2(int i, int k, int l, const Point& p) const;
    bool has_partial2() const;

    static ConnectionForm from_expressions(int m, int n, std::vector<ExprMatrix> grids);
};

// Antisymmetric g-valued 2-form; only i<j components are stored and
// w_ji := -w_ij, w_ii := 0 structurally.
struct TwoForm {
    struct Component {
        std::function<Eigen::MatrixXcd(const Point&)> value;
        std::function<Eigen::MatrixXcd(const Point&, int)> partial;   // may be empty
    };

    int m = 0;
    int n = 0;
    std::vector<Component> comp;        // indexed by pair_index(i,j) over i<j

    static int pair_index(int i, int j, int m);   // i < j, 0-based

    AlgebraElement value(int i, int j, const Point& p) const;
    AlgebraElement partial(int i, int j, int k, const Point& p) const;
    bool has_partial() const;

    static TwoForm from_expressions(int m, int n, std::vector<ExprMatrix> grids_upper);
    static TwoForm zero(int m, int n);
};

// Ordered flag of forms (w^2, w^1) for degree 2, or just w^1 for degree 1.
struct FormFlag {
    int degree = 1;          // 1 or 2
    ConnectionForm one;      // A (always present)
    TwoForm two;             // w (degree 2 only)

    static FormFlag path_flag(ConnectionForm a);
    static FormFlag surface_flag(TwoForm w, ConnectionForm a);
};

// Pointwise-invertible matrix of expressions acting on connections.
struct GaugeFunction {
    int m = 0;
    int n = 0;
    ExprMatrix entries;

    // Evaluation validates |det g(p)| > 1e-9 and throws DomainError otherwise.
    Eigen::MatrixXcd eval(const Point& p) const;
    Eigen::MatrixXcd partial(const Point& p, int k) const;
    Eigen::MatrixXcd partial2(const Point& p, int k, int l) const;
};

// Totally antisymmetric output of the covariant exterior derivative.
struct ThreeFormCoefficient {
    int m = 0;
    int n = 0;
    std::function<Eigen::MatrixXcd(int, int, int, const Point&)> canonical;  // i<j<k

    // Any index order; antisymmetric through the permutation sign.
    AlgebraElement value(int i, int j, int k, const Point& p) const;
};

// F_ij = dA_i/dx_j - dA_j/dx_i + [A_i, A_j].
TwoForm curvature(const ConnectionForm& a);

// C_ijk = dw_ij/dx_k + dw_ki/dx_j + dw_jk/dx_i
//         - ([A_k, w_ij] + [A_j, w_ki] + [A_i, w_jk]).
// The bracket side is the one under which C(curvature(A), A) vanishes
// identically (the Bianchi identity); see docs/conventions.md.
ThreeFormCoefficient covariant_ext_derivative(const TwoForm& w, const ConnectionForm& a);

// A' = g A g^{-1} + (dg) g^{-1}; satisfies
// Hol_{A'}(c) = g(c(1)) Hol_A(c) g(c(0))^{-1}.
ConnectionForm gauge_transform_connection(const GaugeFunction& g, const ConnectionForm& a);

// F' = g F g^{-1} pointwise.
TwoForm gauge_transform_curvature(const GaugeFunction& g, const TwoForm& f);

// The complex-multiplication connection built from f(x1,x2):
//   u = re f, v = -im f,
//   A1 = [[u, v], [-v, u]],  A2 = [[v, -u], [u, v]]  (m=2, n=2, real).
// Flat exactly when f satisfies the Cauchy-Riemann equations.
ConnectionForm preset_cr_connection(const ScalarExpr& f);

// A = alpha d(log z) in real coordinates (m=2, n=1):
//   A1 = alpha (x1 - i x2)/(x1^2 + x2^2),
//   A2 = alpha (x2 + i x1)/(x1^2 + x2^2).
// Evaluation at the origin is a domain error.
ConnectionForm preset_alpha_connection(cplx alpha);

// Constant connection A_i(p) = X_i.
ConnectionForm preset_constant(const std::vector<AlgebraElement>& x);

// Deterministic generators for randomized checks.  Coefficient
// magnitudes are bounded by scale / (number of monomials).
ConnectionForm random_polynomial_connection(std::uint64_t seed, int m, int n,
                                            int degree, double scale);
// Returns the generated expression strings of component i.
std::vector<std::vector<std::string>> connection_source_strings(const ConnectionForm& a, int i);

// Everywhere-invertible random gauge function on m=2 charts:
// product of a unipotent lower factor and an upper-triangular factor
// with exponential diagonal, so det = exp(q1 + q2) never vanishes.
GaugeFunction random_gauge_function(std::uint64_t seed, int n, double scale);

// max over a rectangular grid of ||F_ij(p)||_F over all i<j.
double max_curvature_on_grid(const ConnectionForm& a, const Point& lo, const Point& hi,
                             const std::vector<int>& counts);

} // namespace ordexp
