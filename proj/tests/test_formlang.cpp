#include "ordexp/formlang.hpp"

#include <doctest.h>

#include <cmath>

using namespace ordexp;

namespace {
const double kPi = 3.14159265358979323846;
}

TEST_CASE("basic parsing and evaluation") {
    ScalarExpr e = ScalarExpr::parse("x1^2 + x2", 2);
    CHECK(std::abs(e.eval({cplx(2.0), cplx(3.0)}) - cplx(7.0)) < 1e-15);
    CHECK(e.arity() == 2);
}

TEST_CASE("syntax errors carry the byte offset") {
    try {
        ScalarExpr::parse("x1 +", 2);
        FAIL("expected a ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset == 4);
        CHECK(!e.expected.empty());
    }
}

TEST_CASE("imaginary unit and pi") {
    ScalarExpr e = ScalarExpr::parse("i*x1", 1);
    CHECK(std::abs(e.eval({cplx(2.0)}) - cplx(0.0, 2.0)) < 1e-15);
    CHECK(std::abs(ScalarExpr::parse("pi", 0).eval({}) - cplx(kPi)) < 1e-15);
}

TEST_CASE("parameter aliases t, t1, t2") {
    ScalarExpr a = ScalarExpr::parse("t^2", 1);
    ScalarExpr b = ScalarExpr::parse("x1^2", 1);
    CHECK(structural_equal(a, b));
    ScalarExpr c = ScalarExpr::parse("t1*t2", 2);
    CHECK(std::abs(c.eval({cplx(3.0), cplx(5.0)}) - cplx(15.0)) < 1e-15);
}

TEST_CASE("unknown identifiers and out-of-arity variables are parse errors") {
    CHECK_THROWS_AS(ScalarExpr::parse("foo(x1)", 1), ParseError);
    CHECK_THROWS_AS(ScalarExpr::parse("x3", 2), ParseError);
    CHECK_THROWS_AS(ScalarExpr::parse("t2", 1), ParseError);
    CHECK_THROWS_AS(ScalarExpr::parse("", 1), ParseError);
    CHECK_THROWS_AS(ScalarExpr::parse("sin(x1, x2)", 2), ParseError);
}

TEST_CASE("precedence and associativity") {
    CHECK(std::abs(ScalarExpr::parse("-x1^2", 1).eval({cplx(2.0)}) - cplx(-4.0)) < 1e-15);
    CHECK(std::abs(ScalarExpr::parse("2^3^2", 0).eval({}) - cplx(512.0)) < 1e-12);
    CHECK(std::abs(ScalarExpr::parse("1-2-3", 0).eval({}) - cplx(-4.0)) < 1e-15);
    CHECK(std::abs(ScalarExpr::parse("6/3/2", 0).eval({}) - cplx(1.0)) < 1e-15);
    CHECK(std::abs(ScalarExpr::parse("1+2*3", 0).eval({}) - cplx(7.0)) < 1e-15);
}

TEST_CASE("integer powers differentiate exactly") {
    ScalarExpr e = ScalarExpr::parse("x1^3", 1);
    CHECK(std::abs(e.partial({cplx(2.0)}, 0) - cplx(12.0)) < 1e-14);
    ScalarExpr inv = ScalarExpr::parse("x1^-1", 1);
    CHECK(std::abs(inv.partial({cplx(2.0)}, 0) - cplx(-0.25)) < 1e-15);
}

TEST_CASE("evaluation domain errors") {
    CHECK_THROWS_AS(ScalarExpr::parse("1/x1", 1).eval({cplx(0.0)}), EvalDomainError);
    CHECK_THROWS_AS(ScalarExpr::parse("log(x1)", 1).eval({cplx(0.0)}), EvalDomainError);
    CHECK_THROWS_AS(ScalarExpr::parse("x1^-2", 1).eval({cplx(0.0)}), EvalDomainError);
}

TEST_CASE("first partials match closed forms") {
    ScalarExpr e = ScalarExpr::parse("sin(x1)*exp(x2)", 2);
    std::vector<cplx> p = {cplx(0.3), cplx(0.2)};
    CHECK(std::abs(e.partial(p, 0) - std::cos(0.3) * std::exp(0.2)) < 1e-15);
    CHECK(std::abs(e.partial(p, 1) - std::sin(0.3) * std::exp(0.2)) < 1e-15);
}

TEST_CASE("second partials are exactly symmetric") {
    ScalarExpr e = ScalarExpr::parse("sin(x1*x2^2) + exp(x1)*x2", 2);
    std::vector<cplx> p = {cplx(0.7), cplx(-0.4)};
    CHECK(e.partial2(p, 0, 1) == e.partial2(p, 1, 0));   // canonicalized: same call
    // against the closed form of d^2/dx1 dx2 [sin(x1 x2^2)] + exp(x1)
    double x = 0.7, y = -0.4;
    double want = 2.0 * y * std::cos(x * y * y) -
                  x * y * y * 2.0 * y * std::sin(x * y * y) + std::exp(x);
    CHECK(std::abs(e.partial2(p, 0, 1) - cplx(want)) < 1e-14);
}

TEST_CASE("re, im, conj differentiate structurally") {
    std::vector<cplx> p = {cplx(0.6)};
    CHECK(std::abs(ScalarExpr::parse("re(i*x1)", 1).partial(p, 0)) < 1e-15);
    CHECK(std::abs(ScalarExpr::parse("im(i*x1)", 1).partial(p, 0) - cplx(1.0)) < 1e-15);
    CHECK(std::abs(ScalarExpr::parse("conj(i*x1)", 1).partial(p, 0) - cplx(0.0, -1.0)) < 1e-15);
    CHECK(std::abs(ScalarExpr::parse("re((x1+i*x1)^2)", 1).eval(p)) < 1e-15);
}

TEST_CASE("pretty printing round-trips the AST") {
    for (const char* s : {"x1^2 + x2", "-x1^2", "2^3^2", "(x1+x2)*x1", "sin(x1)/cos(x2)",
                          "1-2-3", "x1^-2", "conj(x1+i*x2)", "-(x1+x2)", "2*pi*x1"}) {
        ScalarExpr e = ScalarExpr::parse(s, 2);
        ScalarExpr back = ScalarExpr::parse(e.to_string(), 2);
        CAPTURE(s);
        CAPTURE(e.to_string());
        CHECK(structural_equal(e, back));
    }
}

TEST_CASE("substitution composes expressions") {
    ScalarExpr e = ScalarExpr::parse("t^2", 1);
    ScalarExpr sub = e.substitute(0, ScalarExpr::parse("0.5*t", 1));
    CHECK(std::abs(sub.eval({cplx(0.6)}) - cplx(0.09)) < 1e-15);
}

TEST_CASE("variable remapping changes arity") {
    ScalarExpr e = ScalarExpr::parse("x2^2", 2);
    ScalarExpr r = e.remap_variable(1, 0, 1);
    CHECK(r.arity() == 1);
    CHECK(std::abs(r.eval({cplx(3.0)}) - cplx(9.0)) < 1e-15);
}

TEST_CASE("programmatic builders") {
    ScalarExpr two = ScalarExpr::literal(cplx(2.0, 3.0));
    CHECK(std::abs(two.eval({}) - cplx(2.0, 3.0)) < 1e-15);
    ScalarExpr x = ScalarExpr::variable(0, 1);
    ScalarExpr y = x * x + ScalarExpr::literal(cplx(1.0), 1);
    CHECK(std::abs(y.eval({cplx(3.0)}) - cplx(10.0)) < 1e-15);
    ScalarExpr s = expr_call("sin", x);
    CHECK(std::abs(s.eval({cplx(0.5)}) - std::sin(cplx(0.5))) < 1e-15);
}

TEST_CASE("sqrt of a negative real takes the principal branch") {
    cplx v = ScalarExpr::parse("sqrt(-4)", 0).eval({});
    CHECK(std::abs(v - cplx(0.0, 2.0)) < 1e-15);
}

TEST_CASE("eval domain errors carry the offending offset") {
    try {
        ScalarExpr::parse("x1 + 1/(x1-1)", 1).eval({cplx(1.0)});
        FAIL("expected EvalDomainError");
    } catch (const EvalDomainError& e) {
        CHECK(e.offset >= 5);   // inside the division subexpression
    }
}
