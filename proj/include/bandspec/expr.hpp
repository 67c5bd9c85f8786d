#ifndef BANDSPEC_EXPR_HPP
#define BANDSPEC_EXPR_HPP

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "bandspec/graph.hpp"
#include "bandspec/spectrum_set.hpp"

namespace bandspec {

class GraphExpr;
using ExprPtr = std::shared_ptr<const GraphExpr>;

/// Which operator of the graph the spectrum is requested for. All of them
/// are affine images of the adjacency spectrum on regular graphs.
enum class OperatorKind { Adjacency, Laplacian, Markov, NormalizedLaplacian };

/// Expression tree over base graphs and the three compositions. Leaves are
/// finite graph literals or the symbolic infinite atoms (line, lattice,
/// regular tree); inner nodes are Sum / Product / Strong and the N-fold
/// iterated sum Repeat. Immutable; shared subtrees are fine.
class GraphExpr {
 public:
  enum class Kind { Literal, Line, Lattice, Tree, Sum, Product, Strong, Repeat };

  Kind kind() const { return kind_; }
  const FiniteGraph& graph() const { return *graph_; }  // Literal only
  /// Exact spectrum attached by a canonical builder (closed form); absent
  /// for generic literals, which get eigensolved instead.
  const std::optional<SpectrumSet>& known_spectrum() const { return known_spectrum_; }
  int param() const { return param_; }  // Lattice d / Tree q / Repeat count
  const ExprPtr& left() const { return left_; }
  const ExprPtr& right() const { return right_; }
  const std::string& name() const { return name_; }
  bool is_leaf() const {
    return kind_ == Kind::Literal || kind_ == Kind::Line || kind_ == Kind::Lattice ||
           kind_ == Kind::Tree;
  }

  static ExprPtr literal(FiniteGraph g, std::string name = "lit");
  static ExprPtr literal(FiniteGraph g, SpectrumSet exact, std::string name);
  static ExprPtr line();
  static ExprPtr lattice(int d);  // d >= 1
  static ExprPtr tree(int q);     // q >= 3
  static ExprPtr sum(ExprPtr a, ExprPtr b);
  static ExprPtr product(ExprPtr a, ExprPtr b);
  static ExprPtr strong(ExprPtr a, ExprPtr b);
  static ExprPtr repeat(int count, ExprPtr child);  // count >= 1

 private:
  GraphExpr() = default;
  Kind kind_ = Kind::Line;
  std::shared_ptr<const FiniteGraph> graph_;
  std::optional<SpectrumSet> known_spectrum_;
  int param_ = 0;
  ExprPtr left_;
  ExprPtr right_;
  std::string name_;
};

/// Parse the expression grammar (stable public surface, v1):
///   atoms:  K<n>, Kb<n>, Q<d>, C<m>, P<m>, Line, Lattice<d>, Tree<q>,
///           Free<d>, lit:<path>
///   prefix: <N>@ expr   (N-fold iterated sum; binds tighter than infix)
///   infix:  + (sum) < * (product) < & (strong), ascending precedence
///   parentheses allowed, whitespace ignored.
/// Throws ParseError with the offending position.
ExprPtr parse_expr(std::string_view text);

/// Spectrum of a leaf: closed forms for the infinite atoms, eigensolve for
/// generic finite literals.
SpectrumSet base_spectrum(const GraphExpr& leaf);

/// Band spectrum of the adjacency operator, by structural recursion with
/// the interval composition rules.
SpectrumSet eval_spectrum(const GraphExpr& e);

/// Degree / group-order / Cayley bookkeeping for the expression.
CayleyMeta eval_meta(const GraphExpr& e);

/// Spectrum of the requested operator kind; non-adjacency kinds need a
/// known regular degree (and a nonzero one for the Markov variants).
SpectrumSet derived_spectrum(const GraphExpr& e, OperatorKind kind);

std::string to_string(const GraphExpr& e);
const char* to_string(OperatorKind kind);
std::optional<OperatorKind> operator_kind_from_string(std::string_view text);

}  // namespace bandspec

#endif  // BANDSPEC_EXPR_HPP
