#include "ordexp/algebra.hpp"

#include <cmath>
#include <random>

namespace ordexp {

bool finite_entries(const Eigen::MatrixXcd& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag()))
                return false;
    return true;
}

GroupElement make_group_element(const Eigen::MatrixXcd& m) {
    if (m.rows() != m.cols() || m.rows() == 0)
        throw InvalidInput("group element must be a nonempty square matrix");
    if (!finite_entries(m))
        throw InvalidInput("group element has non-finite entries");
    double scale = m.cwiseAbs().maxCoeff();
    if (scale == 0.0)
        throw InvalidInput("group element is the zero matrix");
    double det = std::abs(Eigen::PartialPivLU<Eigen::MatrixXcd>(m).determinant());
    if (det <= 1e-12 * std::pow(scale, static_cast<double>(m.rows())))
        throw InvalidInput("group element is numerically singular");
    return GroupElement(m);
}

GroupElement group_identity(int n) {
    if (n <= 0) throw InvalidInput("dimension must be positive");
    return GroupElement(Eigen::MatrixXcd::Identity(n, n));
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
    if (a.n() != b.n())
        throw InvalidInput("group element dimensions do not match");
    return GroupElement(a.mat * b.mat);
}

GroupElement group_inverse(const GroupElement& g) {
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(g.mat);
    Eigen::MatrixXcd inv =
        lu.solve(Eigen::MatrixXcd::Identity(g.mat.rows(), g.mat.cols()));
    if (!finite_entries(inv))
        throw DomainError("group element is not invertible");
    return GroupElement(std::move(inv));
}

// exp(X) = exp(X / 2^s)^(2^s); the scaled norm is <= 0.25, where a
// degree-16 Taylor sum is accurate to ~1e-17 relative.
GroupElement mat_exp(const AlgebraElement& x) {
    if (x.mat.rows() != x.mat.cols() || x.mat.rows() == 0)
        throw InvalidInput("exp needs a nonempty square matrix");
    if (!finite_entries(x.mat))
        throw InvalidInput("exp input has non-finite entries");
    const Eigen::Index n = x.mat.rows();
    double norm = x.mat.norm();
    int s = 0;
    if (norm > 0.25)
        s = static_cast<int>(std::ceil(std::log2(norm / 0.25)));
    Eigen::MatrixXcd a = x.mat / std::pow(2.0, s);

    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Identity(n, n);
    Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(n, n);
    for (int k = 1; k <= 16; ++k) {
        term = (term * a) / static_cast<double>(k);
        sum += term;
    }
    for (int k = 0; k < s; ++k) sum = sum * sum;
    return GroupElement(std::move(sum));
}

// Principal log: one Denman-Beavers square root pulls the argument well
// inside the convergence disc of log(I + E) = sum (-1)^(m+1) E^m / m.
AlgebraElement mat_log(const GroupElement& g) {
    if (g.mat.rows() != g.mat.cols() || g.mat.rows() == 0)
        throw InvalidInput("log needs a nonempty square matrix");
    if (!finite_entries(g.mat))
        throw InvalidInput("log input has non-finite entries");
    const Eigen::Index n = g.mat.rows();
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
    double dev = (g.mat - id).norm();
    if (!(dev < 0.5))
        throw DomainError("matrix log outside its domain: ||G - I||_F = " +
                          std::to_string(dev) + " >= 0.5 (refine the mesh)");

    // Denman-Beavers iteration for sqrt(G): Y -> (Y + Z^-1)/2, Z -> (Z + Y^-1)/2.
    Eigen::MatrixXcd y = g.mat, z = id;
    for (int it = 0; it < 40; ++it) {
        Eigen::MatrixXcd yn =
            0.5 * (y + Eigen::PartialPivLU<Eigen::MatrixXcd>(z).solve(id));
        Eigen::MatrixXcd zn =
            0.5 * (z + Eigen::PartialPivLU<Eigen::MatrixXcd>(y).solve(id));
        double step = (yn - y).norm();
        y = std::move(yn);
        z = std::move(zn);
        if (step < 1e-15 * (1.0 + y.norm())) break;
    }

    Eigen::MatrixXcd e = y - id;   // ||e|| <~ 0.26 after one square root
    Eigen::MatrixXcd power = e;
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(n, n);
    double sign = 1.0;
    for (int m = 1; m <= 60; ++m) {
        sum += (sign / static_cast<double>(m)) * power;
        if (power.norm() / static_cast<double>(m) < 1e-17 * (1.0 + sum.norm())) break;
        power = power * e;
        sign = -sign;
    }
    return AlgebraElement(2.0 * sum);
}

AlgebraElement commutator(const AlgebraElement& x, const AlgebraElement& y) {
    if (x.n() != y.n())
        throw InvalidInput("commutator dimensions do not match");
    return AlgebraElement(x.mat * y.mat - y.mat * x.mat);
}

AlgebraElement conjugate(const GroupElement& g, const AlgebraElement& x) {
    if (g.n() != x.n())
        throw InvalidInput("conjugation dimensions do not match");
    // g X g^{-1}, with the inverse applied as a linear solve on (g X)^T.
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(g.mat.transpose());
    Eigen::MatrixXcd gx_t = (g.mat * x.mat).transpose();
    return AlgebraElement(lu.solve(gx_t).transpose());
}

double group_distance(const GroupElement& g, const GroupElement& h) {
    if (g.n() != h.n())
        throw InvalidInput("distance dimensions do not match");
    return (g.mat - h.mat).norm();
}

AlgebraElement random_algebra_element(std::uint64_t seed, int n, double scale) {
    if (n <= 0) throw InvalidInput("dimension must be positive");
    std::mt19937_64 rng(seed);
    auto unit = [&rng]() {
        return static_cast<double>(rng() >> 11) * 0x1.0p-53;   // [0, 1)
    };
    Eigen::MatrixXcd m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double re = scale * (2.0 * unit() - 1.0);
            double im = scale * (2.0 * unit() - 1.0);
            m(i, j) = std::complex<double>(re, im);
        }
    return AlgebraElement(std::move(m));
}

} // namespace ordexp
