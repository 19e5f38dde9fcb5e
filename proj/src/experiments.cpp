#include "ordexp/experiments.hpp"

#include <cstdio>
#include <random>

namespace ordexp {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double rand_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace

std::pair<std::string, std::string> random_periodic_pair(std::uint64_t seed, int degree,
                                                         double scale) {
    if (degree < 1 || !(scale > 0.0)) throw InvalidInput("bad periodic pair parameters");
    std::mt19937_64 rng(seed);
    const double bound = scale / (2.0 * degree + 1.0);
    const double two_pi = 2.0 * 3.14159265358979323846;

    std::string f = "(" + fmt(bound * (2.0 * rand_unit(rng) - 1.0)) + ")";
    std::string fp;
    for (int k = 1; k <= degree; ++k) {
        double a = bound * (2.0 * rand_unit(rng) - 1.0);
        double b = bound * (2.0 * rand_unit(rng) - 1.0);
        std::string freq = "2*pi*" + std::to_string(k) + "*t";
        f += "+(" + fmt(a) + ")*sin(" + freq + ")+(" + fmt(b) + ")*cos(" + freq + ")";
        if (!fp.empty()) fp += "+";
        fp += "(" + fmt(two_pi * k * a) + ")*cos(" + freq + ")+(" + fmt(-two_pi * k * b) +
              ")*sin(" + freq + ")";
    }
    return {f, fp};
}

GroupElement random_unimodular2(std::uint64_t seed, double scale) {
    if (!(scale > 0.0)) throw InvalidInput("bad unimodular parameters");
    std::mt19937_64 rng(seed);
    double d = scale * (2.0 * rand_unit(rng) - 1.0);
    double b = scale * (2.0 * rand_unit(rng) - 1.0);
    double c = scale * (2.0 * rand_unit(rng) - 1.0);
    Eigen::MatrixXcd x(2, 2);
    x << cplx(d, 0.0), cplx(b, 0.0), cplx(c, 0.0), cplx(-d, 0.0);
    return mat_exp(AlgebraElement(std::move(x)));
}

} // namespace ordexp
