#include "bandspec/expr.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "bandspec/eigensolver.hpp"
#include "bandspec/errors.hpp"
#include "bandspec/io.hpp"

namespace bandspec {

namespace {

SpectrumSet complete_graph_spectrum(int n) {
  if (n == 1) return SpectrumSet::point(0.0);
  return SpectrumSet({{-1.0, -1.0}, {static_cast<double>(n - 1), static_cast<double>(n - 1)}});
}

SpectrumSet complete_bipartite_spectrum(int n) {
  if (n == 1) return SpectrumSet({{-1.0, -1.0}, {1.0, 1.0}});
  const double nd = n;
  return SpectrumSet({{-nd, -nd}, {0.0, 0.0}, {nd, nd}});
}

// 2 cos(2 pi k / m); k and m-k coincide, so k runs to floor(m/2).
SpectrumSet cycle_spectrum(int m) {
  std::vector<SpectrumSet::Interval> atoms;
  for (int k = 0; k <= m / 2; ++k) {
    const double v = 2.0 * std::cos(2.0 * std::numbers::pi * k / m);
    atoms.push_back({v, v});
  }
  return SpectrumSet(std::move(atoms));
}

// 2 cos(pi k / (m+1)), k = 1..m.
SpectrumSet path_spectrum(int m) {
  std::vector<SpectrumSet::Interval> atoms;
  for (int k = 1; k <= m; ++k) {
    const double v = 2.0 * std::cos(std::numbers::pi * k / (m + 1));
    atoms.push_back({v, v});
  }
  return SpectrumSet(std::move(atoms));
}

CayleyMeta infinite_atom_meta(int degree) {
  CayleyMeta m;
  m.cayley = Tri::Yes;
  m.infinite_group = true;
  m.degree = degree;
  m.generating_set_size = degree;
  return m;
}

}  // namespace

ExprPtr GraphExpr::literal(FiniteGraph g, std::string name) {
  auto e = std::shared_ptr<GraphExpr>(new GraphExpr());
  e->kind_ = Kind::Literal;
  e->graph_ = std::make_shared<const FiniteGraph>(std::move(g));
  e->name_ = std::move(name);
  return e;
}

ExprPtr GraphExpr::literal(FiniteGraph g, SpectrumSet exact, std::string name) {
  auto e = std::shared_ptr<GraphExpr>(new GraphExpr());
  e->kind_ = Kind::Literal;
  e->graph_ = std::make_shared<const FiniteGraph>(std::move(g));
  e->known_spectrum_ = std::move(exact);
  e->name_ = std::move(name);
  return e;
}

ExprPtr GraphExpr::line() {
  auto e = std::shared_ptr<GraphExpr>(new GraphExpr());
  e->kind_ = Kind::Line;
  e->name_ = "Line";
  return e;
}

ExprPtr GraphExpr::lattice(int d) {
  if (d < 1) throw std::invalid_argument("lattice: dimension must be >= 1");
  auto e = std::shared_ptr<GraphExpr>(new GraphExpr());
  e->kind_ = Kind::Lattice;
  e->param_ = d;
  e->name_ = "Lattice" + std::to_string(d);
  return e;
}

ExprPtr GraphExpr::tree(int q) {
  if (q < 3) throw std::invalid_argument("tree: degree must be >= 3 (q = 2 is the line)");
  auto e = std::shared_ptr<GraphExpr>(new GraphExpr());
  e->kind_ = Kind::Tree;
  e->param_ = q;
  e->name_ = "Tree" + std::to_string(q);
  return e;
}

ExprPtr GraphExpr::sum(ExprPtr a, ExprPtr b) {
  auto e = std::shared_ptr<GraphExpr>(new GraphExpr());
  e->kind_ = Kind::Sum;
  e->left_ = std::move(a);
  e->right_ = std::move(b);
  return e;
}

ExprPtr GraphExpr::product(ExprPtr a, ExprPtr b) {
  auto e = std::shared_ptr<GraphExpr>(new GraphExpr());
  e->kind_ = Kind::Product;
  e->left_ = std::move(a);
  e->right_ = std::move(b);
  return e;
}

ExprPtr GraphExpr::strong(ExprPtr a, ExprPtr b) {
  auto e = std::shared_ptr<GraphExpr>(new GraphExpr());
  e->kind_ = Kind::Strong;
  e->left_ = std::move(a);
  e->right_ = std::move(b);
  return e;
}

ExprPtr GraphExpr::repeat(int count, ExprPtr child) {
  if (count < 1) throw std::invalid_argument("repeat: count must be >= 1");
  auto e = std::shared_ptr<GraphExpr>(new GraphExpr());
  e->kind_ = Kind::Repeat;
  e->param_ = count;
  e->left_ = std::move(child);
  return e;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct Token {
  enum class Type { Atom, Number, Plus, Star, Amp, At, LParen, RParen, LitPath, End };
  Type type = Type::End;
  std::string text;       // atom name or literal path
  long long number = -1;  // attached count for atoms, value for numbers
  std::size_t pos = 0;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  const auto issep = [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' ||
           c == '+' || c == '*' || c == '&' || c == '@';
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    Token t;
    t.pos = i;
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isalpha(static_cast<unsigned char>(src[j]))) ++j;
      t.text = std::string(src.substr(i, j - i));
      if (t.text == "lit" && j < src.size() && src[j] == ':') {
        ++j;
        std::size_t k = j;
        while (k < src.size() && !issep(src[k])) ++k;
        if (k == j) throw ParseError("lit: needs a file path", j);
        t.type = Token::Type::LitPath;
        t.text = std::string(src.substr(j, k - j));
        i = k;
      } else {
        t.type = Token::Type::Atom;
        std::size_t k = j;
        while (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]))) ++k;
        if (k > j) {
          try {
            t.number = std::stoll(std::string(src.substr(j, k - j)));
          } catch (const std::out_of_range&) {
            throw ParseError("number out of range", j);
          }
        }
        i = k;
      }
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      t.type = Token::Type::Number;
      try {
        t.number = std::stoll(std::string(src.substr(i, j - i)));
      } catch (const std::out_of_range&) {
        throw ParseError("number out of range", i);
      }
      i = j;
    } else {
      switch (c) {
        case '+': t.type = Token::Type::Plus; break;
        case '*': t.type = Token::Type::Star; break;
        case '&': t.type = Token::Type::Amp; break;
        case '@': t.type = Token::Type::At; break;
        case '(': t.type = Token::Type::LParen; break;
        case ')': t.type = Token::Type::RParen; break;
        default:
          throw ParseError(std::string("unexpected character '") + c + "'", i);
      }
      ++i;
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.pos = src.size();
  out.push_back(end);
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(tokenize(src)) {}

  ExprPtr parse() {
    ExprPtr e = parse_expression(1);
    if (peek().type != Token::Type::End)
      throw ParseError("unexpected trailing input", peek().pos);
    return e;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  const Token& take() { return toks_[i_++]; }

  static int precedence(Token::Type t) {
    switch (t) {
      case Token::Type::Plus: return 1;
      case Token::Type::Star: return 2;
      case Token::Type::Amp: return 3;
      default: return 0;
    }
  }

  ExprPtr parse_expression(int min_prec) {
    ExprPtr lhs = parse_primary();
    for (;;) {
      const int prec = precedence(peek().type);
      if (prec == 0 || prec < min_prec) break;
      const Token op = take();
      ExprPtr rhs = parse_expression(prec + 1);
      switch (op.type) {
        case Token::Type::Plus: lhs = GraphExpr::sum(std::move(lhs), std::move(rhs)); break;
        case Token::Type::Star: lhs = GraphExpr::product(std::move(lhs), std::move(rhs)); break;
        default: lhs = GraphExpr::strong(std::move(lhs), std::move(rhs)); break;
      }
    }
    return lhs;
  }

  ExprPtr parse_primary() {
    const Token& t = peek();
    switch (t.type) {
      case Token::Type::Number: {
        const Token count = take();
        if (peek().type != Token::Type::At)
          throw ParseError("expected '@' after repeat count", peek().pos);
        take();
        if (count.number < 1) throw ParseError("repeat count must be >= 1", count.pos);
        if (count.number > 1000000) throw ParseError("repeat count too large", count.pos);
        return GraphExpr::repeat(static_cast<int>(count.number), parse_primary());
      }
      case Token::Type::LParen: {
        take();
        ExprPtr e = parse_expression(1);
        if (peek().type != Token::Type::RParen)
          throw ParseError("expected ')'", peek().pos);
        take();
        return e;
      }
      case Token::Type::LitPath: {
        const Token lit = take();
        try {
          return GraphExpr::literal(read_edge_list_file(lit.text), "lit:" + lit.text);
        } catch (const std::exception& err) {
          throw ParseError(err.what(), lit.pos);
        }
      }
      case Token::Type::Atom: {
        const Token atom = take();
        return make_atom(atom);
      }
      default:
        throw ParseError("expected a graph expression", t.pos);
    }
  }

  static ExprPtr make_atom(const Token& t) {
    const std::string& name = t.text;
    const long long num = t.number;
    const auto need = [&](long long lo, const char* what) {
      if (num < lo)
        throw ParseError("atom '" + name + "' needs " + what, t.pos);
      return static_cast<int>(num);
    };
    const auto bare = [&]() {
      if (num >= 0)
        throw ParseError("atom '" + name + "' takes no parameter", t.pos);
    };
    if (name == "K") {
      const int n = need(1, "a size >= 1");
      return GraphExpr::literal(complete_graph(n), complete_graph_spectrum(n),
                                "K" + std::to_string(n));
    }
    if (name == "Kb") {
      const int n = need(1, "a size >= 1");
      return GraphExpr::literal(complete_bipartite(n), complete_bipartite_spectrum(n),
                                "Kb" + std::to_string(n));
    }
    if (name == "C") {
      const int m = need(3, "a length >= 3");
      return GraphExpr::literal(cycle_graph(m), cycle_spectrum(m), "C" + std::to_string(m));
    }
    if (name == "P") {
      const int m = need(1, "a length >= 1");
      return GraphExpr::literal(path_graph(m), path_spectrum(m), "P" + std::to_string(m));
    }
    if (name == "Q") {
      const int d = need(1, "a dimension >= 1");
      return GraphExpr::repeat(
          d, GraphExpr::literal(complete_graph(2), complete_graph_spectrum(2), "K2"));
    }
    if (name == "Line") {
      bare();
      return GraphExpr::line();
    }
    if (name == "Lattice") {
      const int d = need(1, "a dimension >= 1");
      return GraphExpr::lattice(d);
    }
    if (name == "Tree") {
      if (num == 2) throw ParseError("Tree2 is the line; use Line", t.pos);
      const int q = need(3, "a degree >= 3");
      return GraphExpr::tree(q);
    }
    if (name == "Free") {
      // Rank-d free group with d free generators and their inverses: the
      // Cayley graph is the 2d-regular tree.
      if (num == 1) throw ParseError("Free1 is the line; use Line", t.pos);
      const int d = need(2, "a rank >= 2");
      return GraphExpr::tree(2 * d);
    }
    throw ParseError("unknown atom '" + name + "'", t.pos);
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

}  // namespace

ExprPtr parse_expr(std::string_view text) { return Parser(text).parse(); }

// ---------------------------------------------------------------------------
// Evaluation

SpectrumSet base_spectrum(const GraphExpr& leaf) {
  switch (leaf.kind()) {
    case GraphExpr::Kind::Literal:
      if (leaf.known_spectrum()) return *leaf.known_spectrum();
      return from_eigen(eigenvalues(leaf.graph()));
    case GraphExpr::Kind::Line:
      return SpectrumSet::interval(-2.0, 2.0);
    case GraphExpr::Kind::Lattice:
      return SpectrumSet::interval(-2.0 * leaf.param(), 2.0 * leaf.param());
    case GraphExpr::Kind::Tree: {
      const double r = 2.0 * std::sqrt(static_cast<double>(leaf.param() - 1));
      return SpectrumSet::interval(-r, r);
    }
    default:
      throw std::invalid_argument("base_spectrum: not a leaf");
  }
}

SpectrumSet eval_spectrum(const GraphExpr& e) {
  switch (e.kind()) {
    case GraphExpr::Kind::Sum:
      return minkowski_sum(eval_spectrum(*e.left()), eval_spectrum(*e.right()));
    case GraphExpr::Kind::Product:
      return pointwise_product(eval_spectrum(*e.left()), eval_spectrum(*e.right()));
    case GraphExpr::Kind::Strong:
      return strong_combine(eval_spectrum(*e.left()), eval_spectrum(*e.right()));
    case GraphExpr::Kind::Repeat: {
      const SpectrumSet child = eval_spectrum(*e.left());
      SpectrumSet acc = child;
      for (int i = 1; i < e.param(); ++i) acc = minkowski_sum(child, acc);
      return acc;
    }
    default:
      return base_spectrum(e);
  }
}

CayleyMeta eval_meta(const GraphExpr& e) {
  switch (e.kind()) {
    case GraphExpr::Kind::Literal:
      return e.graph().meta();
    case GraphExpr::Kind::Line:
      return infinite_atom_meta(2);
    case GraphExpr::Kind::Lattice:
      return infinite_atom_meta(2 * e.param());
    case GraphExpr::Kind::Tree:
      return infinite_atom_meta(e.param());
    case GraphExpr::Kind::Sum:
      return compose_sum_meta(eval_meta(*e.left()), eval_meta(*e.right()));
    case GraphExpr::Kind::Product:
      return compose_product_meta(eval_meta(*e.left()), eval_meta(*e.right()));
    case GraphExpr::Kind::Strong:
      return compose_strong_meta(eval_meta(*e.left()), eval_meta(*e.right()));
    case GraphExpr::Kind::Repeat: {
      const CayleyMeta child = eval_meta(*e.left());
      CayleyMeta acc = child;
      for (int i = 1; i < e.param(); ++i) acc = compose_sum_meta(child, acc);
      return acc;
    }
  }
  throw std::logic_error("eval_meta: unreachable");
}

SpectrumSet derived_spectrum(const GraphExpr& e, OperatorKind kind) {
  SpectrumSet adjacency = eval_spectrum(e);
  if (kind == OperatorKind::Adjacency) return adjacency;
  const CayleyMeta meta = eval_meta(e);
  if (!meta.degree)
    throw EvalError(std::string(to_string(kind)) +
                    " spectrum needs a known regular degree");
  const double k = static_cast<double>(*meta.degree);
  switch (kind) {
    case OperatorKind::Laplacian:
      return adjacency.affine(-1.0, k);
    case OperatorKind::Markov:
      if (k == 0.0) throw EvalError("markov spectrum undefined for degree 0");
      return adjacency.affine(1.0 / k, 0.0);
    case OperatorKind::NormalizedLaplacian:
      if (k == 0.0) throw EvalError("normalized-laplacian spectrum undefined for degree 0");
      return adjacency.affine(-1.0 / k, 1.0);
    default:
      return adjacency;
  }
}

std::string to_string(const GraphExpr& e) {
  switch (e.kind()) {
    case GraphExpr::Kind::Sum:
      return "(" + to_string(*e.left()) + " + " + to_string(*e.right()) + ")";
    case GraphExpr::Kind::Product:
      return "(" + to_string(*e.left()) + " * " + to_string(*e.right()) + ")";
    case GraphExpr::Kind::Strong:
      return "(" + to_string(*e.left()) + " & " + to_string(*e.right()) + ")";
    case GraphExpr::Kind::Repeat:
      return std::to_string(e.param()) + "@" + to_string(*e.left());
    default:
      return e.name();
  }
}

const char* to_string(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::Adjacency: return "adjacency";
    case OperatorKind::Laplacian: return "laplacian";
    case OperatorKind::Markov: return "markov";
    case OperatorKind::NormalizedLaplacian: return "normalized-laplacian";
  }
  return "adjacency";
}

std::optional<OperatorKind> operator_kind_from_string(std::string_view text) {
  if (text == "adjacency") return OperatorKind::Adjacency;
  if (text == "laplacian") return OperatorKind::Laplacian;
  if (text == "markov") return OperatorKind::Markov;
  if (text == "normalized-laplacian" || text == "normalized_laplacian")
    return OperatorKind::NormalizedLaplacian;
  return std::nullopt;
}

}  // namespace bandspec
