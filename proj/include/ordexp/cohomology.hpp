#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ordexp/holonomy.hpp"

namespace ordexp {

// ---------------------------------------------------------------------------
// Monodromy of flat connections and the two worked gauge-orbit examples.
// ---------------------------------------------------------------------------

struct MonodromyRep {
    Point base;
    std::vector<std::string> names;
    std::vector<PathSpec> loops;
    std::vector<GroupElement> images;
    double flatness_residual = 0.0;
};

// Certifies flatness numerically (max ||F|| sampled along the loops must
// not exceed flat_tol; otherwise the holonomy would not be homotopy
// invariant and a DomainError is thrown), then computes each loop's
// holonomy at resolution N.  Loops must close at the base within 1e-9.
MonodromyRep monodromy_representation(const ConnectionForm& a, const Point& base,
                                      const std::vector<std::pair<std::string, PathSpec>>& loops,
                                      int N, double flat_tol);

struct ConjugacyInvariants {
    cplx trace;
    cplx det;
    std::vector<cplx> eigenvalues;   // sorted by (re, im)
};

ConjugacyInvariants conjugacy_invariants(const GroupElement& g);

// Discrepancy of a periodic 1-form on the circle: Delta = integral_0^1
// w(t) dt by the composite midpoint rule.  Periodicity (period 1, within
// 1e-9) is prechecked; the value must be real within 1e-9.
double discrepancy_S1(const ScalarExpr& omega, int N);

// The class of z^alpha in C/Z: representative with re in [0,1) and the
// monodromy e^{2 pi i alpha}.
struct AlphaClass {
    cplx representative;
    cplx monodromy;
};

AlphaClass alpha_class(cplx alpha);

// Same class iff alpha - alpha' is an integer: both the monodromy match
// and the integer real-part difference are checked.
bool same_alpha_class(cplx a, cplx b);

} // namespace ordexp
