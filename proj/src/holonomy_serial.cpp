#include "holonomy_detail.hpp"

namespace ordexp {
namespace serial {

namespace {

GroupElement path_impl(const ConnectionForm& a, const std::function<Point(double)>& gamma,
                       int N, Quadrature q) {
    if (N < 1) throw InvalidInput("path partition needs N >= 1");
    std::vector<Point> verts(static_cast<std::size_t>(N) + 1);
    for (int k = 0; k <= N; ++k) {
        verts[static_cast<std::size_t>(k)] = gamma(static_cast<double>(k) / N);
        if (verts[static_cast<std::size_t>(k)].size() != a.m)
            throw InvalidInput("path image dimension does not match the chart dimension");
    }
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Identity(a.n, a.n);
    for (int k = 0; k < N; ++k) {
        Point at = q == Quadrature::midpoint ? gamma((k + 0.5) / N)
                                             : verts[static_cast<std::size_t>(k)];
        Point dx = verts[static_cast<std::size_t>(k) + 1] - verts[static_cast<std::size_t>(k)];
        acc = detail::segment_factor(a, at, dx).mat * acc;
    }
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

    Eigen::MatrixXcd total = Eigen::MatrixXcd::Identity(n, n);
    for (int i = 0; i < N2; ++i) {
        // cell exponents of the row; a row of exact zeros contributes
        // exactly the identity without touching the edge factors.
        std::vector<Eigen::MatrixXcd> cell(static_cast<std::size_t>(N1));
        bool row_zero = true;
        for (int j = 0; j < N1; ++j) {
            Point center = h((j + 0.5) / N1, (i + 0.5) / N2);
            cell[static_cast<std::size_t>(j)] =
                detail::cell_exponent(w, center, lat.e1(i, j), lat.e2(i, j));
            if (!cell[static_cast<std::size_t>(j)].isZero(0.0)) row_zero = false;
        }
        if (row_zero) continue;

        // bottom-edge factors and their suffix transports to the row end
        std::vector<GroupElement> u(static_cast<std::size_t>(N1));
        for (int j = 0; j < N1; ++j)
            u[static_cast<std::size_t>(j)] =
                detail::segment_factor(a, h((j + 0.5) / N1, static_cast<double>(i) / N2),
                                       lat.e1(i, j));
        std::vector<GroupElement> g(static_cast<std::size_t>(N1) + 1);
        g[static_cast<std::size_t>(N1)] = group_identity(n);
        for (int j = N1 - 1; j >= 0; --j)
            g[static_cast<std::size_t>(j)] =
                g[static_cast<std::size_t>(j) + 1] * u[static_cast<std::size_t>(j)];

        Eigen::MatrixXcd row = Eigen::MatrixXcd::Identity(n, n);
        for (int j = 0; j < N1; ++j) {
            if (cell[static_cast<std::size_t>(j)].isZero(0.0)) continue;
            Eigen::MatrixXcd t = detail::conjugated_cell_factor(
                g[static_cast<std::size_t>(j)], cell[static_cast<std::size_t>(j)]);
            row = t * row;
        }
        total = row * total;
    }
    return GroupElement(std::move(total));
}

} // namespace

GroupElement path_holonomy_reference(const ConnectionForm& a, const PathSpec& gamma, int N,
                                     Quadrature q) {
    if (a.m != gamma.m)
        throw InvalidInput("connection and path live on different charts");
    return path_impl(a, [&gamma](double t) { return gamma.eval(t); }, N, q);
}

GroupElement surface_holonomy_reference(const FormFlag& flag, const HomotopySpec& h,
                                        int N1, int N2) {
    return surface_impl(flag, [&h](double t1, double t2) { return h.eval(t1, t2); }, h.m,
                        N1, N2);
}

} // namespace serial
} // namespace ordexp
