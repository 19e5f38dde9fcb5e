#pragma once

#include "ordexp/holonomy.hpp"

// Shared per-segment / per-cell factor code.  The parallel kernels and the
// serial references both call these, in the same order, so their results
// are bit-identical.

namespace ordexp {
namespace detail {

// sum_p A_p(at) dx^p
inline Eigen::MatrixXcd segment_exponent(const ConnectionForm& a, const Point& at,
                                         const Point& dx) {
    Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(a.n, a.n);
    for (int p = 0; p < a.m; ++p) {
        if (dx[p] == 0.0) continue;
        x += a.value(p, at).mat * dx[p];
    }
    return x;
}

inline GroupElement segment_factor(const ConnectionForm& a, const Point& at, const Point& dx) {
    Eigen::MatrixXcd x = segment_exponent(a, at, dx);
    if (x.isZero(0.0)) return group_identity(a.n);
    return mat_exp(AlgebraElement(std::move(x)));
}

// sum_{p<q} w_pq(center) (E1^p E2^q - E1^q E2^p)
inline Eigen::MatrixXcd cell_exponent(const TwoForm& w, const Point& center, const Point& e1,
                                      const Point& e2) {
    Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(w.n, w.n);
    for (int p = 0; p < w.m; ++p)
        for (int q = p + 1; q < w.m; ++q) {
            double kappa = e1[p] * e2[q] - e1[q] * e2[p];
            if (kappa == 0.0) continue;
            x += w.value(p, q, center).mat * kappa;
        }
    return x;
}

// g exp(cell) g^{-1}: the cell plaquette transported to the row end.
inline Eigen::MatrixXcd conjugated_cell_factor(const GroupElement& g,
                                               const Eigen::MatrixXcd& cell) {
    GroupElement e = mat_exp(AlgebraElement(cell));
    return g.mat * e.mat * group_inverse(g).mat;
}

} // namespace detail
} // namespace ordexp
