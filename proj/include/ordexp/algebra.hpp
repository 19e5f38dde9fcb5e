#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

#include "ordexp/errors.hpp"

namespace ordexp {

using cplx = std::complex<double>;

// ---------------------------------------------------------------------------
// Numerics for a concrete matrix Lie algebra g and its group G = exp g.
// Everything is a dense complex matrix; real algebras embed with zero
// imaginary parts.  All norms and distances are Frobenius.
// ---------------------------------------------------------------------------

struct AlgebraElement {
    Eigen::MatrixXcd mat;

    AlgebraElement() = default;
    explicit AlgebraElement(Eigen::MatrixXcd m) : mat(std::move(m)) {}

    int n() const { return static_cast<int>(mat.rows()); }
};

struct GroupElement {
    Eigen::MatrixXcd mat;

    GroupElement() = default;
    explicit GroupElement(Eigen::MatrixXcd m) : mat(std::move(m)) {}

    int n() const { return static_cast<int>(mat.rows()); }
};

// Validating constructor: square, finite, invertible
// (|det| > 1e-12 * ||entries||^n).
GroupElement make_group_element(const Eigen::MatrixXcd& m);

GroupElement group_identity(int n);
GroupElement operator*(const GroupElement& a, const GroupElement& b);
GroupElement group_inverse(const GroupElement& g);

// exp: g -> G by scaling-and-squaring with a truncated Taylor series;
// relative error <= 1e-12 against the true exponential.
GroupElement mat_exp(const AlgebraElement& x);

// Principal log near the identity: requires ||G - I||_F < 0.5 (a larger
// deviation signals that the caller's mesh is too coarse and throws
// DomainError).  One matrix square root (Denman-Beavers), then the log
// power series, then doubling.
AlgebraElement mat_log(const GroupElement& g);

// [X, Y] = XY - YX.
AlgebraElement commutator(const AlgebraElement& x, const AlgebraElement& y);

// g X g^{-1}.
AlgebraElement conjugate(const GroupElement& g, const AlgebraElement& x);

// Frobenius distance ||g - h||_F.
double group_distance(const GroupElement& g, const GroupElement& h);

// Deterministic test-input generator; entry magnitudes <= scale.
AlgebraElement random_algebra_element(std::uint64_t seed, int n, double scale);

bool finite_entries(const Eigen::MatrixXcd& m);

} // namespace ordexp
