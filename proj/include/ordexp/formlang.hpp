#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ordexp/errors.hpp"

namespace ordexp {

using cplx = std::complex<double>;

// ---------------------------------------------------------------------------
// Expression AST.
//
// Scalar expressions over real chart coordinates x1..xm.  Complex values
// enter only through literals and the constant i; consequently re/im/conj
// are smooth in every coordinate and differentiate exactly (forward-mode
// dual numbers, nested once for second partials).
//
// Grammar (see docs/expression-language.md for the full EBNF):
//   expr   := term  (('+'|'-') term)*
//   term   := unary (('*'|'/') unary)*
//   unary  := '-' unary | power
//   power  := atom ['^' unary]            (right-associative)
//   atom   := number | 'i' | 'pi' | variable | fn '(' expr ')' | '(' expr ')'
// Variables: x1..xm, with aliases t -> x1, t1 -> x1, t2 -> x2.
// Functions: sin cos exp log sqrt re im conj.
// ---------------------------------------------------------------------------

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    enum class Kind { literal, variable, neg, add, sub, mul, div, pow, call };

    Kind kind;
    cplx value{};                       // literal
    int var_index = -1;                 // variable, 0-based
    std::string fn;                     // call
    ExprPtr a, b;                       // children (unary uses a)
    std::optional<long long> int_exp;   // pow: exponent folded to an integer constant
    std::size_t offset = 0;             // byte offset in the source text
};

class ScalarExpr {
public:
    ScalarExpr() = default;

    // Parser entry point.  Throws ParseError (with byte offset and the
    // expected-token set) on malformed input, unknown identifiers, or a
    // variable index exceeding the arity.
    static ScalarExpr parse(const std::string& text, int arity);

    // Programmatic builders (used by form presets and generators).
    static ScalarExpr literal(cplx v, int arity = 0);
    static ScalarExpr variable(int index, int arity);

    // Evaluation with exact forward-mode partial derivatives.  Domain
    // errors (log of zero, division by zero) throw EvalDomainError
    // carrying the offending subexpression.
    cplx eval(const std::vector<cplx>& p) const;
    cplx partial(const std::vector<cplx>& p, int k) const;
    // Exactly symmetric in (k, l): the pair is canonicalized before
    // evaluation, so partial2(p,k,l) and partial2(p,l,k) are the same call.
    cplx partial2(const std::vector<cplx>& p, int k, int l) const;

    int arity() const { return arity_; }
    ExprPtr ast() const { return root_; }
    const std::string& source() const { return source_; }

    // Minimal-parenthesis pretty print.  parse(to_string(e)) reproduces
    // the AST structurally for every parser-produced tree.  (Trees built
    // programmatically may contain complex literals, which the grammar
    // has no single token for; those round-trip to an equivalent tree.)
    std::string to_string() const;

    // Replace every occurrence of variable `var` by `replacement`
    // (used for path restriction and homotopy boundaries).
    ScalarExpr substitute(int var, const ScalarExpr& replacement) const;
    // Renumber variable `from` to `to` and set a new arity.
    ScalarExpr remap_variable(int from, int to, int new_arity) const;

    // Combinators.  The result arity is the max of the operand arities.
    friend ScalarExpr operator+(const ScalarExpr&, const ScalarExpr&);
    friend ScalarExpr operator-(const ScalarExpr&, const ScalarExpr&);
    friend ScalarExpr operator*(const ScalarExpr&, const ScalarExpr&);
    friend ScalarExpr operator/(const ScalarExpr&, const ScalarExpr&);
    friend ScalarExpr operator-(const ScalarExpr&);
    friend ScalarExpr expr_call(const std::string& fn, const ScalarExpr&);

    ScalarExpr(ExprPtr root, int arity, std::string source = "")
        : root_(std::move(root)), arity_(arity), source_(std::move(source)) {}

private:
    ExprPtr root_;
    int arity_ = 0;
    std::string source_;
};

ScalarExpr expr_call(const std::string& fn, const ScalarExpr& e);

// Structural AST equality (offsets and derived annotations ignored).
bool structural_equal(const ExprPtr& a, const ExprPtr& b);
inline bool structural_equal(const ScalarExpr& a, const ScalarExpr& b) {
    return structural_equal(a.ast(), b.ast());
}

std::string expr_to_string(const ExprPtr& node);

} // namespace ordexp
