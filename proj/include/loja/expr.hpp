#pragma once

#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace loja {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Syntax or arity problem while parsing a function source string.
struct parse_error : error {
    parse_error(const std::string& msg, int line, int col)
        : error(msg + " (line " + std::to_string(line) + ", col " + std::to_string(col) + ")"),
          line(line), col(col) {}
    int line;
    int col;
};

/// Numeric failure during evaluation: sqrt of a negative, division by zero.
struct eval_error : error {
    using error::error;
};

/// No branch guard holds at the evaluation point.
struct domain_error : error {
    using error::error;
};

struct dimension_error : error {
    using error::error;
};

// ---------------------------------------------------------------------------
// Expression trees
// ---------------------------------------------------------------------------

enum class NodeKind {
    constant,
    variable,   // 1-based index
    add, sub, mul, div,
    pow_int,    // non-negative integer exponent
    neg, abs_fn, sqrt_fn, floor_fn, sign_fn,
    min_fn, max_fn,
};

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
    NodeKind kind = NodeKind::constant;
    double value = 0.0;             // constant
    int var_index = 0;              // variable
    int exponent = 0;               // pow_int
    std::vector<NodePtr> kids;
};

/// Immutable scalar expression over variables x1..xn.
class Expr {
public:
    Expr() = default;
    explicit Expr(NodePtr root) : root_(std::move(root)) {}

    static Expr constant(double v);
    static Expr variable(int index);

    const NodePtr& root() const { return root_; }
    bool valid() const { return root_ != nullptr; }

    double eval(std::span<const double> x) const;
    int max_var_index() const;

    bool operator==(const Expr& other) const;

private:
    NodePtr root_;
};

enum class CmpOp { lt, le, eq, ge, gt };

struct Comparison {
    Expr lhs;
    CmpOp op = CmpOp::lt;
    Expr rhs;
};

/// Disjunction of conjunctions of comparisons; empty disjunction never holds.
struct Guard {
    std::vector<std::vector<Comparison>> clauses;

    bool holds(std::span<const double> x) const;
    bool operator==(const Guard& other) const;
};

struct Branch {
    std::optional<Guard> guard;  // absent = always taken
    Expr body;

    bool matches(std::span<const double> x) const;
};

/// Piecewise scalar function; evaluation takes the first branch whose guard
/// holds, and raises domain_error when none does.
class PiecewiseFn {
public:
    PiecewiseFn() = default;
    PiecewiseFn(int arity, std::vector<Branch> branches)
        : arity_(arity), branches_(std::move(branches)) {}

    int arity() const { return arity_; }
    const std::vector<Branch>& branches() const { return branches_; }
    bool valid() const { return !branches_.empty(); }

    double eval(std::span<const double> x) const;
    double eval1(double x) const { return eval(std::span<const double>(&x, 1)); }

    /// True when some branch guard holds at x (x is in the declared domain).
    bool defined_at(std::span<const double> x) const;
    bool defined_at1(double x) const { return defined_at(std::span<const double>(&x, 1)); }

    bool operator==(const PiecewiseFn& other) const;

private:
    int arity_ = 0;
    std::vector<Branch> branches_;
};

// ---------------------------------------------------------------------------
// Parse / print
// ---------------------------------------------------------------------------

/// Parses a function from source text. When declared_arity is 0 the arity is
/// inferred from the largest variable index (at least 1); otherwise variables
/// beyond the declared arity raise parse_error.
PiecewiseFn parse_function(std::string_view source, int declared_arity = 0);

/// Canonical fully parenthesised form; parse_function(to_string(f)) == f.
std::string to_string(const Expr& e);
std::string to_string(const PiecewiseFn& f);

PiecewiseFn load_function(const std::string& path, int declared_arity = 0);

}  // namespace loja
