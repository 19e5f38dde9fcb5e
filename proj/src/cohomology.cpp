#include "ordexp/cohomology.hpp"

#include <algorithm>
#include <cmath>

namespace ordexp {

MonodromyRep monodromy_representation(const ConnectionForm& a, const Point& base,
                                      const std::vector<std::pair<std::string, PathSpec>>& loops,
                                      int N, double flat_tol) {
    if (base.size() != a.m)
        throw InvalidInput("base point dimension does not match the chart dimension");
    if (loops.empty()) throw InvalidInput("monodromy needs at least one loop");
    if (!(flat_tol > 0.0)) throw InvalidInput("flatness tolerance must be positive");

    // Flatness certificate: sample ||F_ij|| along every loop.  Without it
    // the images would depend on the chosen representatives, not on the
    // homotopy classes.
    TwoForm f = curvature(a);
    double residual = 0.0;
    const int samples = 64;
    for (const auto& [name, loop] : loops) {
        (void)name;
        if (loop.m != a.m)
            throw InvalidInput("loop dimension does not match the chart dimension");
        if ((loop.start - base).norm() > 1e-9 * (1.0 + base.norm()) ||
            (loop.end - base).norm() > 1e-9 * (1.0 + base.norm()))
            throw InvalidInput("monodromy loops must close at the base point");
        for (int s = 0; s <= samples; ++s) {
            Point p = loop.eval(static_cast<double>(s) / samples);
            for (int i = 0; i < a.m; ++i)
                for (int j = i + 1; j < a.m; ++j)
                    residual = std::max(residual, f.value(i, j, p).mat.norm());
        }
    }
    if (residual > flat_tol)
        throw DomainError("connection is not flat along the loops (max ||F|| = " +
                          std::to_string(residual) + " > tolerance); monodromy is undefined");

    MonodromyRep rep;
    rep.base = base;
    rep.flatness_residual = residual;
    for (const auto& [name, loop] : loops) {
        rep.names.push_back(name);
        rep.loops.push_back(loop);
        rep.images.push_back(path_holonomy(a, loop, N));
    }
    return rep;
}

ConjugacyInvariants conjugacy_invariants(const GroupElement& g) {
    ConjugacyInvariants inv;
    inv.trace = g.mat.trace();
    inv.det = Eigen::PartialPivLU<Eigen::MatrixXcd>(g.mat).determinant();
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(g.mat, /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success)
        throw DomainError("eigenvalue computation failed");
    inv.eigenvalues.resize(static_cast<std::size_t>(g.n()));
    for (int k = 0; k < g.n(); ++k) inv.eigenvalues[static_cast<std::size_t>(k)] = es.eigenvalues()[k];
    std::sort(inv.eigenvalues.begin(), inv.eigenvalues.end(), [](const cplx& x, const cplx& y) {
        if (x.real() != y.real()) return x.real() < y.real();
        return x.imag() < y.imag();
    });
    return inv;
}

double discrepancy_S1(const ScalarExpr& omega, int N) {
    if (N < 1) throw InvalidInput("circle partition needs N >= 1");
    if (omega.arity() > 1)
        throw InvalidInput("a circle 1-form coefficient depends on the single parameter t");
    // periodicity precheck: w(0) = w(1), and at interior offsets w(t) = w(t+1)
    for (double t : {0.0, 0.25, 0.5}) {
        cplx a = omega.eval({cplx(t, 0.0)});
        cplx b = omega.eval({cplx(t + 1.0, 0.0)});
        if (std::abs(a - b) > 1e-9 * (1.0 + std::abs(a)))
            throw DomainError("circle 1-form is not 1-periodic");
    }
    cplx sum(0.0, 0.0);
    for (int k = 0; k < N; ++k) sum += omega.eval({cplx((k + 0.5) / N, 0.0)});
    cplx delta = sum / static_cast<double>(N);
    if (std::abs(delta.imag()) > 1e-9 * (1.0 + std::abs(delta.real())))
        throw DomainError("circle discrepancy must be real");
    return delta.real();
}

AlphaClass alpha_class(cplx alpha) {
    AlphaClass c;
    double shift = std::floor(alpha.real());
    c.representative = cplx(alpha.real() - shift, alpha.imag());
    const double two_pi = 2.0 * 3.14159265358979323846;
    c.monodromy = std::exp(cplx(0.0, two_pi) * alpha);
    return c;
}

bool same_alpha_class(cplx a, cplx b) {
    cplx d = a - b;
    if (std::abs(d.imag()) > 1e-12 * (1.0 + std::abs(a.imag()) + std::abs(b.imag())))
        return false;
    double r = d.real();
    bool integer_shift = std::abs(r - std::round(r)) <= 1e-12 * (1.0 + std::abs(r));
    cplx ma = alpha_class(a).monodromy, mb = alpha_class(b).monodromy;
    bool monodromy_match = std::abs(ma - mb) <= 1e-9 * (1.0 + std::abs(ma));
    return integer_shift && monodromy_match;
}

} // namespace ordexp
