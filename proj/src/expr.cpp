#include "loja/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace loja {

namespace {

NodePtr make_node(Node n) { return std::make_shared<const Node>(std::move(n)); }

double pow_nonneg_int(double base, int e) {
    double acc = 1.0;
    double b = base;
    for (int k = e; k > 0; k >>= 1) {
        if (k & 1) acc *= b;
        b *= b;
    }
    return acc;
}

double eval_node(const Node& n, std::span<const double> x) {
    switch (n.kind) {
        case NodeKind::constant: return n.value;
        case NodeKind::variable: {
            int i = n.var_index;
            if (i < 1 || static_cast<size_t>(i) > x.size())
                throw dimension_error("variable x" + std::to_string(i) + " out of range for point of dimension " +
                                      std::to_string(x.size()));
            return x[i - 1];
        }
        case NodeKind::add: return eval_node(*n.kids[0], x) + eval_node(*n.kids[1], x);
        case NodeKind::sub: return eval_node(*n.kids[0], x) - eval_node(*n.kids[1], x);
        case NodeKind::mul: return eval_node(*n.kids[0], x) * eval_node(*n.kids[1], x);
        case NodeKind::div: {
            double num = eval_node(*n.kids[0], x);
            double den = eval_node(*n.kids[1], x);
            if (den == 0.0) throw eval_error("division by zero");
            return num / den;
        }
        case NodeKind::pow_int: return pow_nonneg_int(eval_node(*n.kids[0], x), n.exponent);
        case NodeKind::neg: return -eval_node(*n.kids[0], x);
        case NodeKind::abs_fn: return std::fabs(eval_node(*n.kids[0], x));
        case NodeKind::sqrt_fn: {
            double v = eval_node(*n.kids[0], x);
            if (v < 0.0) throw eval_error("sqrt of negative value");
            return std::sqrt(v);
        }
        case NodeKind::floor_fn: return std::floor(eval_node(*n.kids[0], x));
        case NodeKind::sign_fn: {
            double v = eval_node(*n.kids[0], x);
            return (v > 0.0) ? 1.0 : (v < 0.0 ? -1.0 : 0.0);
        }
        case NodeKind::min_fn: {
            double m = eval_node(*n.kids[0], x);
            for (size_t i = 1; i < n.kids.size(); ++i) m = std::min(m, eval_node(*n.kids[i], x));
            return m;
        }
        case NodeKind::max_fn: {
            double m = eval_node(*n.kids[0], x);
            for (size_t i = 1; i < n.kids.size(); ++i) m = std::max(m, eval_node(*n.kids[i], x));
            return m;
        }
    }
    throw error("corrupt expression node");
}

int max_var_node(const Node& n) {
    int m = (n.kind == NodeKind::variable) ? n.var_index : 0;
    for (const auto& k : n.kids) m = std::max(m, max_var_node(*k));
    return m;
}

bool equal_node(const Node& a, const Node& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case NodeKind::constant: return a.value == b.value;
        case NodeKind::variable: return a.var_index == b.var_index;
        case NodeKind::pow_int:
            if (a.exponent != b.exponent) return false;
            break;
        default: break;
    }
    if (a.kids.size() != b.kids.size()) return false;
    for (size_t i = 0; i < a.kids.size(); ++i)
        if (!equal_node(*a.kids[i], *b.kids[i])) return false;
    return true;
}

}  // namespace

Expr Expr::constant(double v) {
    Node n;
    n.kind = NodeKind::constant;
    n.value = v;
    return Expr(make_node(std::move(n)));
}

Expr Expr::variable(int index) {
    Node n;
    n.kind = NodeKind::variable;
    n.var_index = index;
    return Expr(make_node(std::move(n)));
}

double Expr::eval(std::span<const double> x) const {
    if (!root_) throw error("empty expression");
    return eval_node(*root_, x);
}

int Expr::max_var_index() const { return root_ ? max_var_node(*root_) : 0; }

bool Expr::operator==(const Expr& other) const {
    if (!root_ || !other.root_) return root_ == other.root_;
    return equal_node(*root_, *other.root_);
}

bool Guard::holds(std::span<const double> x) const {
    for (const auto& conj : clauses) {
        bool all = true;
        for (const auto& cmp : conj) {
            double l = cmp.lhs.eval(x);
            double r = cmp.rhs.eval(x);
            bool ok = false;
            switch (cmp.op) {
                case CmpOp::lt: ok = l < r; break;
                case CmpOp::le: ok = l <= r; break;
                case CmpOp::eq: ok = l == r; break;
                case CmpOp::ge: ok = l >= r; break;
                case CmpOp::gt: ok = l > r; break;
            }
            if (!ok) { all = false; break; }
        }
        if (all) return true;
    }
    return false;
}

bool Guard::operator==(const Guard& other) const {
    if (clauses.size() != other.clauses.size()) return false;
    for (size_t i = 0; i < clauses.size(); ++i) {
        if (clauses[i].size() != other.clauses[i].size()) return false;
        for (size_t j = 0; j < clauses[i].size(); ++j) {
            const auto& a = clauses[i][j];
            const auto& b = other.clauses[i][j];
            if (a.op != b.op || !(a.lhs == b.lhs) || !(a.rhs == b.rhs)) return false;
        }
    }
    return true;
}

bool Branch::matches(std::span<const double> x) const {
    return !guard || guard->holds(x);
}

double PiecewiseFn::eval(std::span<const double> x) const {
    if (branches_.empty()) throw error("empty piecewise function");
    if (static_cast<int>(x.size()) < arity_)
        throw dimension_error("point of dimension " + std::to_string(x.size()) +
                              " passed to function of arity " + std::to_string(arity_));
    for (const auto& b : branches_)
        if (b.matches(x)) return b.body.eval(x);
    throw domain_error("no branch guard holds at the evaluation point");
}

bool PiecewiseFn::defined_at(std::span<const double> x) const {
    for (const auto& b : branches_)
        if (b.matches(x)) return true;
    return false;
}

bool PiecewiseFn::operator==(const PiecewiseFn& other) const {
    if (arity_ != other.arity_ || branches_.size() != other.branches_.size()) return false;
    for (size_t i = 0; i < branches_.size(); ++i) {
        const auto& a = branches_[i];
        const auto& b = other.branches_[i];
        if (a.guard.has_value() != b.guard.has_value()) return false;
        if (a.guard && !(*a.guard == *b.guard)) return false;
        if (!(a.body == b.body)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

namespace {

enum class Tok {
    end, number, variable, ident,
    plus, minus, star, slash, caret,
    lparen, rparen, lbrace, rbrace,
    semicolon, colon, comma,
    lt, le, eq, ge, gt,
    and_and, or_or,
};

struct Token {
    Tok kind = Tok::end;
    double number = 0.0;
    int var_index = 0;
    std::string ident;
    int line = 1;
    int col = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, line_, col_); }

    int cur() const { return pos_ < src_.size() ? static_cast<unsigned char>(src_[pos_]) : -1; }

    void bump() {
        if (pos_ < src_.size()) {
            if (src_[pos_] == '\n') { ++line_; col_ = 1; } else { ++col_; }
            ++pos_;
        }
    }

    void advance() {
        while (cur() == ' ' || cur() == '\t' || cur() == '\n' || cur() == '\r') bump();
        tok_ = Token{};
        tok_.line = line_;
        tok_.col = col_;
        int c = cur();
        if (c < 0) { tok_.kind = Tok::end; return; }
        switch (c) {
            case '+': bump(); tok_.kind = Tok::plus; return;
            case '-': bump(); tok_.kind = Tok::minus; return;
            case '*': bump(); tok_.kind = Tok::star; return;
            case '/': bump(); tok_.kind = Tok::slash; return;
            case '^': bump(); tok_.kind = Tok::caret; return;
            case '(': bump(); tok_.kind = Tok::lparen; return;
            case ')': bump(); tok_.kind = Tok::rparen; return;
            case '{': bump(); tok_.kind = Tok::lbrace; return;
            case '}': bump(); tok_.kind = Tok::rbrace; return;
            case ';': bump(); tok_.kind = Tok::semicolon; return;
            case ':': bump(); tok_.kind = Tok::colon; return;
            case ',': bump(); tok_.kind = Tok::comma; return;
            case '<':
                bump();
                if (cur() == '=') { bump(); tok_.kind = Tok::le; } else { tok_.kind = Tok::lt; }
                return;
            case '>':
                bump();
                if (cur() == '=') { bump(); tok_.kind = Tok::ge; } else { tok_.kind = Tok::gt; }
                return;
            case '=':
                bump();
                if (cur() != '=') fail("expected '==' ");
                bump();
                tok_.kind = Tok::eq;
                return;
            case '&':
                bump();
                if (cur() != '&') fail("expected '&&'");
                bump();
                tok_.kind = Tok::and_and;
                return;
            case '|':
                bump();
                if (cur() != '|') fail("expected '||'");
                bump();
                tok_.kind = Tok::or_or;
                return;
            default: break;
        }
        if (std::isdigit(c) || c == '.') {
            lex_number();
            return;
        }
        if (c == 'x' && pos_ + 1 < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
            bump();
            long idx = 0;
            while (std::isdigit(cur())) {
                idx = idx * 10 + (cur() - '0');
                if (idx > 1000000) fail("variable index too large");
                bump();
            }
            if (idx < 1) fail("variable index must be positive");
            tok_.kind = Tok::variable;
            tok_.var_index = static_cast<int>(idx);
            return;
        }
        if (std::isalpha(c)) {
            std::string id;
            while (std::isalnum(cur()) || cur() == '_') {
                id.push_back(static_cast<char>(cur()));
                bump();
            }
            tok_.kind = Tok::ident;
            tok_.ident = std::move(id);
            return;
        }
        fail(std::string("unexpected character '") + static_cast<char>(c) + "'");
    }

    void lex_number() {
        size_t start = pos_;
        while (std::isdigit(cur())) bump();
        if (cur() == '.') {
            bump();
            while (std::isdigit(cur())) bump();
        }
        if (cur() == 'e' || cur() == 'E') {
            size_t save = pos_;
            int save_line = line_, save_col = col_;
            bump();
            if (cur() == '+' || cur() == '-') bump();
            if (std::isdigit(cur())) {
                while (std::isdigit(cur())) bump();
            } else {
                pos_ = save; line_ = save_line; col_ = save_col;
            }
        }
        std::string text(src_.substr(start, pos_ - start));
        if (text == ".") fail("malformed number");
        try {
            tok_.number = std::stod(text);
        } catch (const std::exception&) {
            fail("malformed number '" + text + "'");
        }
        tok_.kind = Tok::number;
    }

    std::string_view src_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token tok_;
};

// ---------------------------------------------------------------------------
// Recursive-descent parser
// ---------------------------------------------------------------------------

class Parser {
public:
    Parser(std::string_view src, int declared_arity)
        : lex_(src), declared_arity_(declared_arity) {}

    PiecewiseFn parse() {
        std::vector<Branch> branches;
        if (lex_.peek().kind == Tok::ident && lex_.peek().ident == "piecewise") {
            lex_.take();
            expect(Tok::lbrace, "'{'");
            branches.push_back(parse_branch());
            while (lex_.peek().kind == Tok::semicolon) {
                lex_.take();
                branches.push_back(parse_branch());
            }
            expect(Tok::rbrace, "'}'");
        } else {
            Branch b;
            b.body = parse_expr();
            branches.push_back(std::move(b));
        }
        expect(Tok::end, "end of input");
        int arity = declared_arity_ > 0 ? declared_arity_ : std::max(1, max_seen_);
        return PiecewiseFn(arity, std::move(branches));
    }

private:
    [[noreturn]] void fail(const std::string& msg) {
        throw parse_error(msg, lex_.peek().line, lex_.peek().col);
    }

    Token expect(Tok kind, const std::string& what) {
        if (lex_.peek().kind != kind) fail("expected " + what);
        return lex_.take();
    }

    Branch parse_branch() {
        Branch b;
        b.guard = parse_guard();
        expect(Tok::colon, "':'");
        b.body = parse_expr();
        return b;
    }

    Guard parse_guard() {
        Guard g;
        g.clauses.push_back(parse_conj());
        while (lex_.peek().kind == Tok::or_or) {
            lex_.take();
            g.clauses.push_back(parse_conj());
        }
        return g;
    }

    std::vector<Comparison> parse_conj() {
        std::vector<Comparison> conj;
        conj.push_back(parse_cmp());
        while (lex_.peek().kind == Tok::and_and) {
            lex_.take();
            conj.push_back(parse_cmp());
        }
        return conj;
    }

    Comparison parse_cmp() {
        Comparison c;
        c.lhs = parse_expr();
        switch (lex_.peek().kind) {
            case Tok::lt: c.op = CmpOp::lt; break;
            case Tok::le: c.op = CmpOp::le; break;
            case Tok::eq: c.op = CmpOp::eq; break;
            case Tok::ge: c.op = CmpOp::ge; break;
            case Tok::gt: c.op = CmpOp::gt; break;
            default: fail("expected comparison operator");
        }
        lex_.take();
        c.rhs = parse_expr();
        return c;
    }

    Expr parse_expr() {
        bool negate = false;
        if (lex_.peek().kind == Tok::plus) {
            lex_.take();
        } else if (lex_.peek().kind == Tok::minus) {
            lex_.take();
            negate = true;
        }
        Expr acc = parse_term();
        if (negate) acc = unary(NodeKind::neg, acc);
        for (;;) {
            Tok k = lex_.peek().kind;
            if (k == Tok::plus) {
                lex_.take();
                acc = binary(NodeKind::add, acc, parse_term());
            } else if (k == Tok::minus) {
                lex_.take();
                acc = binary(NodeKind::sub, acc, parse_term());
            } else {
                return acc;
            }
        }
    }

    Expr parse_term() {
        Expr acc = parse_factor();
        for (;;) {
            Tok k = lex_.peek().kind;
            if (k == Tok::star) {
                lex_.take();
                acc = binary(NodeKind::mul, acc, parse_factor());
            } else if (k == Tok::slash) {
                lex_.take();
                acc = binary(NodeKind::div, acc, parse_factor());
            } else {
                return acc;
            }
        }
    }

    Expr parse_factor() {
        Expr base = parse_atom();
        if (lex_.peek().kind == Tok::caret) {
            lex_.take();
            Token t = expect(Tok::number, "non-negative integer exponent");
            double e = t.number;
            if (e < 0 || e != std::floor(e) || e > 1e6)
                throw parse_error("exponent must be a non-negative integer", t.line, t.col);
            Node n;
            n.kind = NodeKind::pow_int;
            n.exponent = static_cast<int>(e);
            n.kids.push_back(base.root());
            return Expr(make_node(std::move(n)));
        }
        return base;
    }

    Expr parse_atom() {
        const Token& t = lex_.peek();
        switch (t.kind) {
            case Tok::number: {
                Token n = lex_.take();
                return Expr::constant(n.number);
            }
            case Tok::variable: {
                Token v = lex_.take();
                if (declared_arity_ > 0 && v.var_index > declared_arity_)
                    throw parse_error("variable x" + std::to_string(v.var_index) +
                                          " exceeds declared arity " + std::to_string(declared_arity_),
                                      v.line, v.col);
                max_seen_ = std::max(max_seen_, v.var_index);
                return Expr::variable(v.var_index);
            }
            case Tok::lparen: {
                lex_.take();
                Expr e = parse_expr();
                expect(Tok::rparen, "')'");
                return e;
            }
            case Tok::ident: {
                Token id = lex_.take();
                NodeKind kind;
                size_t min_args = 1, max_args = 1;
                if (id.ident == "sqrt") kind = NodeKind::sqrt_fn;
                else if (id.ident == "abs") kind = NodeKind::abs_fn;
                else if (id.ident == "floor") kind = NodeKind::floor_fn;
                else if (id.ident == "sign") kind = NodeKind::sign_fn;
                else if (id.ident == "min") { kind = NodeKind::min_fn; min_args = 2; max_args = 64; }
                else if (id.ident == "max") { kind = NodeKind::max_fn; min_args = 2; max_args = 64; }
                else throw parse_error("unknown function '" + id.ident + "'", id.line, id.col);
                expect(Tok::lparen, "'('");
                std::vector<Expr> args;
                args.push_back(parse_expr());
                while (lex_.peek().kind == Tok::comma) {
                    lex_.take();
                    args.push_back(parse_expr());
                }
                expect(Tok::rparen, "')'");
                if (args.size() < min_args || args.size() > max_args)
                    throw parse_error("wrong number of arguments to '" + id.ident + "'", id.line, id.col);
                Node n;
                n.kind = kind;
                for (auto& a : args) n.kids.push_back(a.root());
                return Expr(make_node(std::move(n)));
            }
            default:
                fail("expected number, variable, '(' or function call");
        }
    }

    static Expr binary(NodeKind kind, const Expr& a, const Expr& b) {
        Node n;
        n.kind = kind;
        n.kids = {a.root(), b.root()};
        return Expr(make_node(std::move(n)));
    }

    static Expr unary(NodeKind kind, const Expr& a) {
        Node n;
        n.kind = kind;
        n.kids = {a.root()};
        return Expr(make_node(std::move(n)));
    }

    Lexer lex_;
    int declared_arity_;
    int max_seen_ = 0;
};

// ---------------------------------------------------------------------------
// Printer
// ---------------------------------------------------------------------------

std::string number_to_string(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    std::string s(buf);
    // shortest representation that round-trips
    for (int prec = 1; prec < 17; ++prec) {
        char b2[40];
        std::snprintf(b2, sizeof(b2), "%.*g", prec, v);
        if (std::stod(b2) == v) { s = b2; break; }
    }
    return s;
}

void print_node(const Node& n, std::string& out) {
    switch (n.kind) {
        case NodeKind::constant: out += number_to_string(n.value); return;
        case NodeKind::variable: out += "x" + std::to_string(n.var_index); return;
        case NodeKind::add:
        case NodeKind::sub:
        case NodeKind::mul:
        case NodeKind::div: {
            const char* op = n.kind == NodeKind::add ? " + "
                           : n.kind == NodeKind::sub ? " - "
                           : n.kind == NodeKind::mul ? " * " : " / ";
            out += "(";
            print_node(*n.kids[0], out);
            out += op;
            print_node(*n.kids[1], out);
            out += ")";
            return;
        }
        case NodeKind::pow_int:
            out += "(";
            print_node(*n.kids[0], out);
            out += ")^" + std::to_string(n.exponent);
            return;
        case NodeKind::neg:
            out += "(-";
            print_node(*n.kids[0], out);
            out += ")";
            return;
        case NodeKind::abs_fn:
        case NodeKind::sqrt_fn:
        case NodeKind::floor_fn:
        case NodeKind::sign_fn:
        case NodeKind::min_fn:
        case NodeKind::max_fn: {
            const char* name = n.kind == NodeKind::abs_fn ? "abs"
                             : n.kind == NodeKind::sqrt_fn ? "sqrt"
                             : n.kind == NodeKind::floor_fn ? "floor"
                             : n.kind == NodeKind::sign_fn ? "sign"
                             : n.kind == NodeKind::min_fn ? "min" : "max";
            out += name;
            out += "(";
            for (size_t i = 0; i < n.kids.size(); ++i) {
                if (i) out += ", ";
                print_node(*n.kids[i], out);
            }
            out += ")";
            return;
        }
    }
}

const char* cmp_to_string(CmpOp op) {
    switch (op) {
        case CmpOp::lt: return " < ";
        case CmpOp::le: return " <= ";
        case CmpOp::eq: return " == ";
        case CmpOp::ge: return " >= ";
        case CmpOp::gt: return " > ";
    }
    return " ? ";
}

}  // namespace

PiecewiseFn parse_function(std::string_view source, int declared_arity) {
    return Parser(source, declared_arity).parse();
}

std::string to_string(const Expr& e) {
    std::string out;
    if (e.root()) print_node(*e.root(), out);
    return out;
}

std::string to_string(const PiecewiseFn& f) {
    const auto& br = f.branches();
    if (br.size() == 1 && !br[0].guard) return to_string(br[0].body);
    std::string out = "piecewise{ ";
    for (size_t i = 0; i < br.size(); ++i) {
        if (i) out += " ; ";
        if (br[i].guard) {
            const Guard& g = *br[i].guard;
            for (size_t ci = 0; ci < g.clauses.size(); ++ci) {
                if (ci) out += " || ";
                for (size_t cj = 0; cj < g.clauses[ci].size(); ++cj) {
                    if (cj) out += " && ";
                    out += to_string(g.clauses[ci][cj].lhs);
                    out += cmp_to_string(g.clauses[ci][cj].op);
                    out += to_string(g.clauses[ci][cj].rhs);
                }
            }
        } else {
            out += "0 == 0";
        }
        out += " : ";
        out += to_string(br[i].body);
    }
    out += " }";
    return out;
}

PiecewiseFn load_function(const std::string& path, int declared_arity) {
    std::ifstream in(path);
    if (!in) throw error("cannot open function file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_function(ss.str(), declared_arity);
}

}  // namespace loja
