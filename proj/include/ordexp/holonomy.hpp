#pragma once

#include <functional>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "ordexp/lattice.hpp"

namespace ordexp {

// ---------------------------------------------------------------------------
// Ordered-product (multiplicative) integration.
//
// Ordering convention, fixed everywhere: factors at LATER parameter
// values multiply on the LEFT, so concatenation of paths satisfies
// Hol(second . first) = Hol(second) * Hol(first).
// ---------------------------------------------------------------------------

enum class Quadrature { midpoint, left_endpoint };

// Ordered product over the uniform partition with one factor
// exp(sum_i A_i(x_k) dx_k^i) per segment; x_k is the parameter midpoint
// (default) or the left endpoint.
GroupElement path_holonomy(const ConnectionForm& a, const PathSpec& gamma, int N,
                           Quadrature q = Quadrature::midpoint);
GroupElement path_holonomy(const ConnectionForm& a, const std::function<Point(double)>& gamma,
                           int N, Quadrature q = Quadrature::midpoint);

// Row-by-row ordered product for a flag (w, A) over a 2-parameter sweep.
// Each cell contributes exp(w(center) contracted with its edge bivector),
// conjugated by the ordered product of the row's bottom-edge factors from
// the cell to the row end; rows are left-multiplied bottom to top.  With
// w = curvature(A) the rows telescope to the lattice Stokes identity.
GroupElement surface_holonomy(const FormFlag& flag, const HomotopySpec& h, int N1, int N2);
GroupElement surface_holonomy(const FormFlag& flag,
                              const std::function<Point(double, double)>& h,
                              int m, int N1, int N2);

// Ordered product of the twelve cube-boundary entries (six face sweeps at
// Nsub x Nsub, six connecting edges at Nsub).  Nsub must be even so the
// route kink falls on a lattice vertex.
GroupElement cube_boundary_holonomy(const FormFlag& flag, const Point& center, double eps,
                                    const std::array<int, 3>& axes, int Nsub);
GroupElement evaluate_face_sequence(const FormFlag& flag, const FaceSequence& seq, int Nsub);

// log(holonomy around the centered eps x eps coordinate square through x
// in the (i, j) plane) / eps^2 -> F_ij(x) as eps -> 0.
AlgebraElement loop_curvature_estimate(const ConnectionForm& a, const Point& x, int i, int j,
                                       double eps, int N);
// Iterated Richardson (Neville) over eps, eps/2, ..., eps/2^{levels-1};
// cancels the leading error powers of the single-loop estimate.
AlgebraElement loop_curvature_richardson(const ConnectionForm& a, const Point& x, int i, int j,
                                         double eps0, int levels, int N);

// Free-group words evaluated in G; letters multiply left-to-right as
// written (the leftmost letter acts last, matching path composition).
struct Word {
    struct Letter {
        std::string name;
        int exponent = 1;   // +1 or -1
    };
    std::vector<Letter> letters;

    static Word parse(const std::string& text);   // "a b a^-1 b^-1"
    std::string to_string() const;
};

GroupElement word_holonomy(const std::map<std::string, GroupElement>& assignments,
                           const Word& w);

// ---------------------------------------------------------------------------
// Convergence reporting: every limit claim is observed as a refinement
// order plus a Richardson extrapolant.
// ---------------------------------------------------------------------------

struct ConvergenceReport {
    std::vector<int> levels;                  // strictly increasing N
    std::vector<Eigen::MatrixXcd> values;
    std::vector<double> residuals;            // vs reference (or finest level)
    std::vector<double> wall_ms;
    double estimated_order = std::numeric_limits<double>::quiet_NaN();
    Eigen::MatrixXcd extrapolant;
    bool saturated = false;
    bool has_reference = false;
};

ConvergenceReport refine(const std::function<Eigen::MatrixXcd(int)>& f,
                         const std::vector<int>& levels);
ConvergenceReport refine(const std::function<Eigen::MatrixXcd(int)>& f,
                         const std::vector<int>& levels,
                         const Eigen::MatrixXcd& reference);

// CSV rendering with the fixed columns level,N,residual,estimated_order,wall_ms.
// Deterministic except for the wall_ms column.
std::string convergence_csv(const ConvergenceReport& r);

// Frobenius distance of the two path holonomies (zero for homotopic paths
// under a flat connection).  Endpoints must agree within 1e-9.
double homotopy_invariance_check(const ConnectionForm& a, const PathSpec& gamma1,
                                 const PathSpec& gamma2, int N);

// Serial reference implementations (same factor code, same fold order;
// results are bit-identical to the parallel kernels).
namespace serial {
GroupElement path_holonomy_reference(const ConnectionForm& a, const PathSpec& gamma, int N,
                                     Quadrature q = Quadrature::midpoint);
GroupElement surface_holonomy_reference(const FormFlag& flag, const HomotopySpec& h,
                                        int N1, int N2);
} // namespace serial

} // namespace ordexp
