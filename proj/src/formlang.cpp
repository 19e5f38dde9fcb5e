#include "ordexp/formlang.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <sstream>

namespace ordexp {

namespace {

const double kPi = 3.14159265358979323846;

bool is_known_function(const std::string& s) {
    static const std::set<std::string> fns = {"sin", "cos", "exp", "log",
                                              "sqrt", "re", "im", "conj"};
    return fns.count(s) > 0;
}

// ---------------------------------------------------------------------------
// Tokenizer
// ---------------------------------------------------------------------------

struct Token {
    enum class Type { number, ident, plus, minus, star, slash, caret, lparen, rparen, end };
    Type type;
    std::size_t offset = 0;
    double num = 0.0;
    std::string text;
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        Token t;
        t.offset = i;
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '.' && i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1])))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j < s.size() && s[j] == '.') {
                ++j;
                while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            }
            if (j < s.size() && (s[j] == 'e' || s[j] == 'E')) {
                std::size_t k = j + 1;
                if (k < s.size() && (s[k] == '+' || s[k] == '-')) ++k;
                if (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) {
                    ++k;
                    while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
                    j = k;
                }
            }
            t.type = Token::Type::number;
            t.text = s.substr(i, j - i);
            t.num = std::strtod(t.text.c_str(), nullptr);
            i = j;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                ++j;
            t.type = Token::Type::ident;
            t.text = s.substr(i, j - i);
            i = j;
        } else {
            switch (c) {
                case '+': t.type = Token::Type::plus; break;
                case '-': t.type = Token::Type::minus; break;
                case '*': t.type = Token::Type::star; break;
                case '/': t.type = Token::Type::slash; break;
                case '^': t.type = Token::Type::caret; break;
                case '(': t.type = Token::Type::lparen; break;
                case ')': t.type = Token::Type::rparen; break;
                default:
                    throw ParseError("unexpected character '" + std::string(1, c) + "'", i,
                                     {"number", "identifier", "operator", "'('", "')'"});
            }
            t.text = std::string(1, c);
            ++i;
        }
        out.push_back(std::move(t));
    }
    Token end;
    end.type = Token::Type::end;
    end.offset = s.size();
    out.push_back(end);
    return out;
}

// ---------------------------------------------------------------------------
// Node constructors
// ---------------------------------------------------------------------------

ExprPtr make_literal(cplx v, std::size_t off = 0) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprNode::Kind::literal;
    n->value = v;
    n->offset = off;
    return n;
}

ExprPtr make_variable(int idx, std::size_t off = 0) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprNode::Kind::variable;
    n->var_index = idx;
    n->offset = off;
    return n;
}

ExprPtr make_unary(ExprPtr a, std::size_t off = 0) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprNode::Kind::neg;
    n->a = std::move(a);
    n->offset = off;
    return n;
}

ExprPtr make_call(std::string fn, ExprPtr a, std::size_t off = 0) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprNode::Kind::call;
    n->fn = std::move(fn);
    n->a = std::move(a);
    n->offset = off;
    return n;
}

// Constant-folds literal-only subtrees; used to recognize integer
// exponents at parse time (no variables, no domain hazards involved).
bool fold_constant(const ExprPtr& n, cplx& out) {
    switch (n->kind) {
        case ExprNode::Kind::literal: out = n->value; return true;
        case ExprNode::Kind::neg: {
            cplx a;
            if (!fold_constant(n->a, a)) return false;
            out = -a;
            return true;
        }
        case ExprNode::Kind::add:
        case ExprNode::Kind::sub:
        case ExprNode::Kind::mul:
        case ExprNode::Kind::div: {
            cplx a, b;
            if (!fold_constant(n->a, a) || !fold_constant(n->b, b)) return false;
            if (n->kind == ExprNode::Kind::add) out = a + b;
            else if (n->kind == ExprNode::Kind::sub) out = a - b;
            else if (n->kind == ExprNode::Kind::mul) out = a * b;
            else {
                if (b == cplx(0.0, 0.0)) return false;
                out = a / b;
            }
            return true;
        }
        default: return false;
    }
}

ExprPtr make_binary(ExprNode::Kind kind, ExprPtr a, ExprPtr b, std::size_t off = 0) {
    auto n = std::make_shared<ExprNode>();
    n->kind = kind;
    n->a = std::move(a);
    n->b = std::move(b);
    n->offset = off;
    if (kind == ExprNode::Kind::pow) {
        cplx e;
        if (fold_constant(n->b, e) && std::abs(e.imag()) <= 1e-12) {
            double r = std::round(e.real());
            if (std::abs(e.real() - r) <= 1e-12 && std::abs(r) <= 64.0)
                n->int_exp = static_cast<long long>(r);
        }
    }
    return n;
}

// ---------------------------------------------------------------------------
// Recursive-descent parser
// ---------------------------------------------------------------------------

struct Parser {
    const std::string& src;
    std::vector<Token> toks;
    std::size_t pos = 0;
    int arity;

    Parser(const std::string& s, int a) : src(s), toks(tokenize(s)), arity(a) {}

    const Token& peek() const { return toks[pos]; }
    Token take() { return toks[pos++]; }

    [[noreturn]] void fail(const std::string& msg, std::vector<std::string> expected) {
        throw ParseError(msg + " at offset " + std::to_string(peek().offset), peek().offset,
                         std::move(expected));
    }

    ExprPtr parse_full() {
        ExprPtr e = parse_expr();
        if (peek().type != Token::Type::end)
            fail("unexpected trailing input", {"'+'", "'-'", "'*'", "'/'", "'^'", "end of input"});
        return e;
    }

    ExprPtr parse_expr() {
        ExprPtr e = parse_term();
        while (peek().type == Token::Type::plus || peek().type == Token::Type::minus) {
            Token op = take();
            ExprPtr r = parse_term();
            e = make_binary(op.type == Token::Type::plus ? ExprNode::Kind::add
                                                         : ExprNode::Kind::sub,
                            e, r, op.offset);
        }
        return e;
    }

    ExprPtr parse_term() {
        ExprPtr e = parse_unary();
        while (peek().type == Token::Type::star || peek().type == Token::Type::slash) {
            Token op = take();
            ExprPtr r = parse_unary();
            e = make_binary(op.type == Token::Type::star ? ExprNode::Kind::mul
                                                         : ExprNode::Kind::div,
                            e, r, op.offset);
        }
        return e;
    }

    ExprPtr parse_unary() {
        if (peek().type == Token::Type::minus) {
            Token op = take();
            return make_unary(parse_unary(), op.offset);
        }
        return parse_power();
    }

    ExprPtr parse_power() {
        ExprPtr base = parse_atom();
        if (peek().type == Token::Type::caret) {
            Token op = take();
            ExprPtr exp = parse_unary();   // right-associative, allows x^-2
            return make_binary(ExprNode::Kind::pow, base, exp, op.offset);
        }
        return base;
    }

    ExprPtr parse_atom() {
        const Token& t = peek();
        switch (t.type) {
            case Token::Type::number: {
                Token tok = take();
                return make_literal(cplx(tok.num, 0.0), tok.offset);
            }
            case Token::Type::lparen: {
                take();
                ExprPtr e = parse_expr();
                if (peek().type != Token::Type::rparen) fail("expected ')'", {"')'"});
                take();
                return e;
            }
            case Token::Type::ident: {
                Token tok = take();
                const std::string& name = tok.text;
                if (peek().type == Token::Type::lparen) {
                    if (!is_known_function(name))
                        throw ParseError("unknown function '" + name + "'", tok.offset,
                                         {"sin", "cos", "exp", "log", "sqrt", "re", "im", "conj"});
                    take();
                    ExprPtr arg = parse_expr();
                    if (peek().type != Token::Type::rparen) fail("expected ')'", {"')'"});
                    take();
                    return make_call(name, arg, tok.offset);
                }
                if (name == "i") return make_literal(cplx(0.0, 1.0), tok.offset);
                if (name == "pi") return make_literal(cplx(kPi, 0.0), tok.offset);
                int idx = -1;
                if (name == "t" || name == "t1") idx = 0;
                else if (name == "t2") idx = 1;
                else if (name.size() >= 2 && name[0] == 'x') {
                    bool digits = true;
                    for (std::size_t k = 1; k < name.size(); ++k)
                        if (!std::isdigit(static_cast<unsigned char>(name[k]))) digits = false;
                    if (digits) idx = std::atoi(name.c_str() + 1) - 1;
                }
                if (idx < 0)
                    throw ParseError("unknown identifier '" + name + "'", tok.offset,
                                     {"variable x1..x" + std::to_string(arity), "i", "pi",
                                      "function"});
                if (idx >= arity)
                    throw ParseError("variable '" + name + "' exceeds arity " +
                                         std::to_string(arity),
                                     tok.offset, {});
                return make_variable(idx, tok.offset);
            }
            default:
                fail("expected expression",
                     {"number", "'i'", "'pi'", "variable", "function", "'('", "'-'"});
        }
    }
};

// ---------------------------------------------------------------------------
// Evaluation: plain complex and nested dual numbers.
// ---------------------------------------------------------------------------

template <class T>
struct Dual {
    T v{};   // value
    T d{};   // tangent
};

using D1 = Dual<cplx>;
using D2 = Dual<Dual<cplx>>;

inline cplx leading_value(const cplx& x) { return x; }
template <class T>
cplx leading_value(const Dual<T>& x) { return leading_value(x.v); }

inline bool exact_zero(const cplx& x) { return x == cplx(0.0, 0.0); }
template <class T>
bool exact_zero(const Dual<T>& x) { return exact_zero(x.v) && exact_zero(x.d); }

template <class T> Dual<T> operator+(const Dual<T>& a, const Dual<T>& b) { return {a.v + b.v, a.d + b.d}; }
template <class T> Dual<T> operator-(const Dual<T>& a, const Dual<T>& b) { return {a.v - b.v, a.d - b.d}; }
template <class T> Dual<T> operator-(const Dual<T>& a) { return {-a.v, -a.d}; }
template <class T> Dual<T> operator*(const Dual<T>& a, const Dual<T>& b) {
    return {a.v * b.v, a.v * b.d + a.d * b.v};
}
template <class T> Dual<T> operator/(const Dual<T>& a, const Dual<T>& b) {
    T q = a.v / b.v;
    return {q, (a.d - q * b.d) / b.v};
}

inline cplx d_sin(const cplx& x) { return std::sin(x); }
inline cplx d_cos(const cplx& x) { return std::cos(x); }
inline cplx d_exp(const cplx& x) { return std::exp(x); }
// On the negative real axis the sign of an imaginary zero would pick the
// branch; normalize to +0 so sqrt(-4) = 2i and log(-1) = i*pi regardless
// of how the value was produced (e.g. by unary minus).
inline cplx branch_arg(const cplx& x) {
    return x.imag() == 0.0 ? cplx(x.real(), 0.0) : x;
}
inline cplx d_log(const cplx& x) { return std::log(branch_arg(x)); }
inline cplx d_sqrt(const cplx& x) { return std::sqrt(branch_arg(x)); }
// re/im/conj act on the complex VALUE; coordinates are real, so these are
// smooth and their tangents are just re/im/conj of the tangent.
inline cplx d_re(const cplx& x) { return cplx(x.real(), 0.0); }
inline cplx d_im(const cplx& x) { return cplx(x.imag(), 0.0); }
inline cplx d_conj(const cplx& x) { return std::conj(x); }

template <class T> Dual<T> d_sin(const Dual<T>& a) { return {d_sin(a.v), d_cos(a.v) * a.d}; }
template <class T> Dual<T> d_cos(const Dual<T>& a) { return {d_cos(a.v), -(d_sin(a.v) * a.d)}; }
template <class T> Dual<T> d_exp(const Dual<T>& a) {
    T e = d_exp(a.v);
    return {e, e * a.d};
}
template <class T> Dual<T> d_log(const Dual<T>& a) { return {d_log(a.v), a.d / a.v}; }
template <class T> Dual<T> d_sqrt(const Dual<T>& a) {
    T s = d_sqrt(a.v);
    // tangent of a constant zero stays zero; otherwise d/(2 sqrt).
    if (exact_zero(a.d)) return {s, a.d};
    T two = s;  // reuse shape
    two = s + s;
    return {s, a.d / two};
}
template <class T> Dual<T> d_re(const Dual<T>& a) { return {d_re(a.v), d_re(a.d)}; }
template <class T> Dual<T> d_im(const Dual<T>& a) { return {d_im(a.v), d_im(a.d)}; }
template <class T> Dual<T> d_conj(const Dual<T>& a) { return {d_conj(a.v), d_conj(a.d)}; }

template <class T> T d_one() { return T{}; }
template <> cplx d_one<cplx>() { return cplx(1.0, 0.0); }
template <> D1 d_one<D1>() { return {d_one<cplx>(), cplx(0.0, 0.0)}; }
template <> D2 d_one<D2>() { return {d_one<D1>(), D1{}}; }

// Embed a complex scalar as a constant of type T.
template <class T> T scalar_embed(const cplx& v);
template <> cplx scalar_embed<cplx>(const cplx& v) { return v; }
template <> D1 scalar_embed<D1>(const cplx& v) { return {v, cplx(0.0, 0.0)}; }
template <> D2 scalar_embed<D2>(const cplx& v) { return {{v, cplx(0.0, 0.0)}, D1{}}; }

template <class T>
T ipow_plain(T base, long long e) {
    T acc = d_one<T>();
    T b = base;
    unsigned long long k = static_cast<unsigned long long>(e);
    while (k > 0) {
        if (k & 1ull) acc = acc * b;
        b = b * b;
        k >>= 1;
    }
    return acc;
}

template <class T>
T evaluate(const ExprNode* n, const std::vector<T>& vars) {
    switch (n->kind) {
        case ExprNode::Kind::literal:
            return scalar_embed<T>(n->value);
        case ExprNode::Kind::variable:
            return vars[static_cast<std::size_t>(n->var_index)];
        case ExprNode::Kind::neg:
            return -evaluate(n->a.get(), vars);
        case ExprNode::Kind::add:
            return evaluate(n->a.get(), vars) + evaluate(n->b.get(), vars);
        case ExprNode::Kind::sub:
            return evaluate(n->a.get(), vars) - evaluate(n->b.get(), vars);
        case ExprNode::Kind::mul:
            return evaluate(n->a.get(), vars) * evaluate(n->b.get(), vars);
        case ExprNode::Kind::div: {
            T a = evaluate(n->a.get(), vars);
            T b = evaluate(n->b.get(), vars);
            if (leading_value(b) == cplx(0.0, 0.0))
                throw EvalDomainError("division by zero in '" + expr_to_string(n->b) +
                                          "' at offset " + std::to_string(n->offset),
                                      n->offset);
            return a / b;
        }
        case ExprNode::Kind::pow: {
            T base = evaluate(n->a.get(), vars);
            if (n->int_exp) {
                long long e = *n->int_exp;
                if (e < 0 && leading_value(base) == cplx(0.0, 0.0))
                    throw EvalDomainError("zero raised to a negative power in '" +
                                              expr_to_string(n->a) + "' at offset " +
                                              std::to_string(n->offset),
                                          n->offset);
                if (e < 0) return d_one<T>() / ipow_plain(base, -e);
                return ipow_plain(base, e);
            }
            T expo = evaluate(n->b.get(), vars);
            if (leading_value(base) == cplx(0.0, 0.0))
                throw EvalDomainError("log of zero (general power of zero) in '" +
                                          expr_to_string(n->a) + "' at offset " +
                                          std::to_string(n->offset),
                                      n->offset);
            return d_exp(expo * d_log(base));
        }
        case ExprNode::Kind::call: {
            T a = evaluate(n->a.get(), vars);
            const std::string& f = n->fn;
            if (f == "sin") return d_sin(a);
            if (f == "cos") return d_cos(a);
            if (f == "exp") return d_exp(a);
            if (f == "log") {
                if (leading_value(a) == cplx(0.0, 0.0))
                    throw EvalDomainError("log of zero in '" + expr_to_string(n->a) +
                                              "' at offset " + std::to_string(n->offset),
                                          n->offset);
                return d_log(a);
            }
            if (f == "sqrt") return d_sqrt(a);
            if (f == "re") return d_re(a);
            if (f == "im") return d_im(a);
            if (f == "conj") return d_conj(a);
            throw InvalidInput("unknown function node '" + f + "'");
        }
    }
    throw InvalidInput("corrupt expression node");
}

// ---------------------------------------------------------------------------
// Pretty printer with minimal parentheses.
// ---------------------------------------------------------------------------

int precedence(const ExprNode* n) {
    switch (n->kind) {
        case ExprNode::Kind::add:
        case ExprNode::Kind::sub: return 1;
        case ExprNode::Kind::mul:
        case ExprNode::Kind::div: return 2;
        case ExprNode::Kind::neg: return 3;
        case ExprNode::Kind::pow: return 4;
        default: return 5;
    }
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string print_literal(const cplx& v) {
    if (v == cplx(0.0, 1.0)) return "i";
    if (v.real() == kPi && v.imag() == 0.0) return "pi";
    if (v.imag() == 0.0) return format_double(v.real());
    // No complex literal token in the grammar: print an equivalent sum.
    std::string re = format_double(v.real());
    std::string im = format_double(v.imag());
    return "(" + re + "+" + im + "*i)";
}

void print_node(const ExprNode* n, std::string& out) {
    auto child = [&](const ExprPtr& c, bool parens) {
        if (parens) out += '(';
        print_node(c.get(), out);
        if (parens) out += ')';
    };
    int p = precedence(n);
    switch (n->kind) {
        case ExprNode::Kind::literal:
            out += print_literal(n->value);
            return;
        case ExprNode::Kind::variable:
            out += "x" + std::to_string(n->var_index + 1);
            return;
        case ExprNode::Kind::neg:
            out += '-';
            child(n->a, precedence(n->a.get()) < p);
            return;
        case ExprNode::Kind::add:
        case ExprNode::Kind::sub:
        case ExprNode::Kind::mul:
        case ExprNode::Kind::div: {
            child(n->a, precedence(n->a.get()) < p);
            switch (n->kind) {
                case ExprNode::Kind::add: out += '+'; break;
                case ExprNode::Kind::sub: out += '-'; break;
                case ExprNode::Kind::mul: out += '*'; break;
                default: out += '/'; break;
            }
            child(n->b, precedence(n->b.get()) <= p);
            return;
        }
        case ExprNode::Kind::pow:
            child(n->a, precedence(n->a.get()) <= p);
            out += '^';
            child(n->b, precedence(n->b.get()) < p);
            return;
        case ExprNode::Kind::call:
            out += n->fn;
            out += '(';
            print_node(n->a.get(), out);
            out += ')';
            return;
    }
}

ExprPtr substitute_node(const ExprPtr& n, int var, const ExprPtr& repl) {
    switch (n->kind) {
        case ExprNode::Kind::literal: return n;
        case ExprNode::Kind::variable: return n->var_index == var ? repl : n;
        case ExprNode::Kind::neg: {
            ExprPtr a = substitute_node(n->a, var, repl);
            return a == n->a ? n : make_unary(a, n->offset);
        }
        case ExprNode::Kind::call: {
            ExprPtr a = substitute_node(n->a, var, repl);
            return a == n->a ? n : make_call(n->fn, a, n->offset);
        }
        default: {
            ExprPtr a = substitute_node(n->a, var, repl);
            ExprPtr b = substitute_node(n->b, var, repl);
            return (a == n->a && b == n->b) ? n : make_binary(n->kind, a, b, n->offset);
        }
    }
}

ExprPtr remap_node(const ExprPtr& n, int from, int to) {
    switch (n->kind) {
        case ExprNode::Kind::literal: return n;
        case ExprNode::Kind::variable:
            return n->var_index == from ? make_variable(to, n->offset) : n;
        case ExprNode::Kind::neg: {
            ExprPtr a = remap_node(n->a, from, to);
            return a == n->a ? n : make_unary(a, n->offset);
        }
        case ExprNode::Kind::call: {
            ExprPtr a = remap_node(n->a, from, to);
            return a == n->a ? n : make_call(n->fn, a, n->offset);
        }
        default: {
            ExprPtr a = remap_node(n->a, from, to);
            ExprPtr b = remap_node(n->b, from, to);
            return (a == n->a && b == n->b) ? n : make_binary(n->kind, a, b, n->offset);
        }
    }
}

} // namespace

// ---------------------------------------------------------------------------
// ScalarExpr
// ---------------------------------------------------------------------------

ScalarExpr ScalarExpr::parse(const std::string& text, int arity) {
    if (arity < 0) throw InvalidInput("arity must be nonnegative");
    Parser p(text, arity);
    ExprPtr root = p.parse_full();
    return ScalarExpr(std::move(root), arity, text);
}

ScalarExpr ScalarExpr::literal(cplx v, int arity) {
    return ScalarExpr(make_literal(v), arity);
}

ScalarExpr ScalarExpr::variable(int index, int arity) {
    if (index < 0 || index >= arity) throw InvalidInput("variable index out of range");
    return ScalarExpr(make_variable(index), arity);
}

cplx ScalarExpr::eval(const std::vector<cplx>& p) const {
    if (static_cast<int>(p.size()) < arity_)
        throw InvalidInput("evaluation point has fewer coordinates than the expression arity");
    return evaluate<cplx>(root_.get(), p);
}

cplx ScalarExpr::partial(const std::vector<cplx>& p, int k) const {
    if (static_cast<int>(p.size()) < arity_)
        throw InvalidInput("evaluation point has fewer coordinates than the expression arity");
    if (k < 0 || k >= static_cast<int>(p.size()))
        throw InvalidInput("partial index out of range");
    std::vector<D1> vars(p.size());
    for (std::size_t j = 0; j < p.size(); ++j)
        vars[j] = {p[j], cplx(j == static_cast<std::size_t>(k) ? 1.0 : 0.0, 0.0)};
    return evaluate<D1>(root_.get(), vars).d;
}

cplx ScalarExpr::partial2(const std::vector<cplx>& p, int k, int l) const {
    if (static_cast<int>(p.size()) < arity_)
        throw InvalidInput("evaluation point has fewer coordinates than the expression arity");
    if (k < 0 || k >= static_cast<int>(p.size()) || l < 0 || l >= static_cast<int>(p.size()))
        throw InvalidInput("partial index out of range");
    // Canonical order makes partial2 exactly symmetric in (k, l).
    if (k > l) std::swap(k, l);
    std::vector<D2> vars(p.size());
    for (std::size_t j = 0; j < p.size(); ++j) {
        cplx sk(j == static_cast<std::size_t>(k) ? 1.0 : 0.0, 0.0);
        cplx sl(j == static_cast<std::size_t>(l) ? 1.0 : 0.0, 0.0);
        vars[j] = {{p[j], sl}, {sk, cplx(0.0, 0.0)}};
    }
    return evaluate<D2>(root_.get(), vars).d.d;
}

std::string ScalarExpr::to_string() const { return expr_to_string(root_); }

ScalarExpr ScalarExpr::substitute(int var, const ScalarExpr& replacement) const {
    int new_arity = std::max(arity_, replacement.arity());
    return ScalarExpr(substitute_node(root_, var, replacement.ast()), new_arity);
}

ScalarExpr ScalarExpr::remap_variable(int from, int to, int new_arity) const {
    return ScalarExpr(remap_node(root_, from, to), new_arity);
}

ScalarExpr operator+(const ScalarExpr& a, const ScalarExpr& b) {
    return ScalarExpr(make_binary(ExprNode::Kind::add, a.ast(), b.ast()),
                      std::max(a.arity(), b.arity()));
}
ScalarExpr operator-(const ScalarExpr& a, const ScalarExpr& b) {
    return ScalarExpr(make_binary(ExprNode::Kind::sub, a.ast(), b.ast()),
                      std::max(a.arity(), b.arity()));
}
ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b) {
    return ScalarExpr(make_binary(ExprNode::Kind::mul, a.ast(), b.ast()),
                      std::max(a.arity(), b.arity()));
}
ScalarExpr operator/(const ScalarExpr& a, const ScalarExpr& b) {
    return ScalarExpr(make_binary(ExprNode::Kind::div, a.ast(), b.ast()),
                      std::max(a.arity(), b.arity()));
}
ScalarExpr operator-(const ScalarExpr& a) {
    return ScalarExpr(make_unary(a.ast()), a.arity());
}
ScalarExpr expr_call(const std::string& fn, const ScalarExpr& e) {
    if (!is_known_function(fn)) throw InvalidInput("unknown function '" + fn + "'");
    return ScalarExpr(make_call(fn, e.ast()), e.arity());
}

bool structural_equal(const ExprPtr& a, const ExprPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case ExprNode::Kind::literal: return a->value == b->value;
        case ExprNode::Kind::variable: return a->var_index == b->var_index;
        case ExprNode::Kind::neg: return structural_equal(a->a, b->a);
        case ExprNode::Kind::call:
            return a->fn == b->fn && structural_equal(a->a, b->a);
        default:
            return structural_equal(a->a, b->a) && structural_equal(a->b, b->b);
    }
}

std::string expr_to_string(const ExprPtr& node) {
    std::string out;
    print_node(node.get(), out);
    return out;
}

} // namespace ordexp
