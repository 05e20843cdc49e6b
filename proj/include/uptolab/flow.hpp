#ifndef UPTOLAB_FLOW_HPP
#define UPTOLAB_FLOW_HPP

// Systems of flow equations over integer predicates, solved by simultaneous
// (Jacobi) Kleene iteration from the empty predicate, either exactly or in
// the sign domain.

#include <cctype>
#include <fstream>
#include <istream>
#include <memory>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "uptolab/error.hpp"
#include "uptolab/intpred.hpp"
#include "uptolab/sign.hpp"

namespace uptolab {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { constant, var, join, inter, shift };
  Kind kind = Kind::constant;
  IntPred pred;            // constant, inter
  IntPred::Int amount = 0; // shift
  std::size_t var = 0;     // var
  ExprPtr lhs, rhs;
};

inline ExprPtr make_const(IntPred p) {
  return std::make_shared<const Expr>(Expr{Expr::Kind::constant, std::move(p), 0, 0, nullptr, nullptr});
}
inline ExprPtr make_var(std::size_t v) {
  return std::make_shared<const Expr>(Expr{Expr::Kind::var, {}, 0, v, nullptr, nullptr});
}
inline ExprPtr make_union(ExprPtr a, ExprPtr b) {
  return std::make_shared<const Expr>(Expr{Expr::Kind::join, {}, 0, 0, std::move(a), std::move(b)});
}
inline ExprPtr make_inter(ExprPtr a, IntPred p) {
  return std::make_shared<const Expr>(Expr{Expr::Kind::inter, std::move(p), 0, 0, std::move(a), nullptr});
}
inline ExprPtr make_shift(ExprPtr a, IntPred::Int k) {
  return std::make_shared<const Expr>(Expr{Expr::Kind::shift, {}, k, 0, std::move(a), nullptr});
}

class FlowSystem {
 public:
  std::size_t add_var(const std::string& name) {
    if (index_.count(name)) throw Error(Errc::MalformedSystem, "variable '" + name + "' declared twice");
    index_.emplace(name, names_.size());
    names_.push_back(name);
    eqs_.push_back(nullptr);
    return names_.size() - 1;
  }

  void set_equation(std::size_t v, ExprPtr e) {
    if (eqs_.at(v)) throw Error(Errc::MalformedSystem, "variable '" + names_[v] + "' has two equations");
    eqs_[v] = std::move(e);
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t v) const { return names_.at(v); }
  const ExprPtr& equation(std::size_t v) const { return eqs_.at(v); }

  std::size_t index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw Error(Errc::MalformedSystem, "undeclared variable '" + name + "'");
    return it->second;
  }

  void validate() const {
    for (std::size_t v = 0; v < size(); ++v)
      if (!eqs_[v]) throw Error(Errc::MalformedSystem, "variable '" + names_[v] + "' has no equation");
  }

 private:
  std::vector<std::string> names_;
  std::vector<ExprPtr> eqs_;
  std::unordered_map<std::string, std::size_t> index_;
};

inline std::string format_expr(const FlowSystem& sys, const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::constant: return "const(" + e.pred.str() + ")";
    case Expr::Kind::var: return sys.name(e.var);
    case Expr::Kind::join: return "union(" + format_expr(sys, *e.lhs) + ", " + format_expr(sys, *e.rhs) + ")";
    case Expr::Kind::inter: return "inter(" + format_expr(sys, *e.lhs) + ", " + e.pred.str() + ")";
    case Expr::Kind::shift: return "shift(" + format_expr(sys, *e.lhs) + ", " + std::to_string(e.amount) + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

class ExprParser {
 public:
  ExprParser(std::string_view s, const FlowSystem& sys, std::string where)
      : s_(s), sys_(sys), where_(std::move(where)) {}

  ExprPtr parse() {
    auto e = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input '" + std::string(s_.substr(pos_)) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw Error(Errc::Parse, where_ + ": " + msg); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string ident() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected an expression");
    return std::string(s_.substr(start, pos_ - start));
  }

  IntPred pred() {
    skip();
    try {
      return parse_pred_prefix(s_, pos_);
    } catch (const Error& e) {
      fail(e.detail());
    }
  }

  IntPred::Int integer() {
    skip();
    std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    try {
      std::size_t used = 0;
      std::string text(s_.substr(start, pos_ - start));
      auto v = std::stoll(text, &used);
      if (used != text.size()) fail("bad integer");
      return v;
    } catch (const std::logic_error&) {
      fail("expected a finite integer shift amount");
    }
  }

  ExprPtr expr() {
    std::string id = ident();
    skip();
    bool call = pos_ < s_.size() && s_[pos_] == '(';
    if (!call) return make_var(sys_.index(id));
    ++pos_;
    ExprPtr out;
    if (id == "const") {
      out = make_const(pred());
    } else if (id == "union") {
      auto a = expr();
      expect(',');
      out = make_union(std::move(a), expr());
    } else if (id == "inter") {
      auto a = expr();
      expect(',');
      out = make_inter(std::move(a), pred());
    } else if (id == "shift") {
      auto a = expr();
      expect(',');
      out = make_shift(std::move(a), integer());
    } else {
      fail("unknown operator '" + id + "'");
    }
    expect(')');
    return out;
  }

  std::string_view s_;
  const FlowSystem& sys_;
  std::string where_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Flow files: `var <name>` declarations and `eq <name> = <expr>` lines,
/// `#` comments. Variables must be declared before use.
inline FlowSystem parse_flow(std::istream& in, const std::string& source = "<input>") {
  FlowSystem sys;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::string where = source + ":" + std::to_string(lineno);
    std::istringstream is(line);
    std::string kw;
    if (!(is >> kw)) continue;
    try {
      if (kw == "var") {
        std::string name;
        while (is >> name) sys.add_var(name);
      } else if (kw == "eq") {
        auto eqpos = line.find('=');
        if (eqpos == std::string::npos) throw Error(Errc::Parse, "expected 'eq <name> = <expr>'");
        std::istringstream lhs(line.substr(0, eqpos));
        std::string eqkw, name, extra;
        lhs >> eqkw >> name;
        if (name.empty() || (lhs >> extra)) throw Error(Errc::Parse, "expected 'eq <name> = <expr>'");
        std::size_t v = sys.index(name);
        sys.set_equation(v, detail::ExprParser(std::string_view(line).substr(eqpos + 1), sys, where).parse());
      } else {
        throw Error(Errc::Parse, "unknown directive '" + kw + "'");
      }
    } catch (const Error& e) {
      if (e.detail().rfind(source + ":", 0) == 0) throw;
      throw Error(e.code(), where + ": " + e.detail());
    }
  }
  sys.validate();
  return sys;
}

inline FlowSystem parse_flow_string(const std::string& text) {
  std::istringstream in(text);
  return parse_flow(in);
}

inline FlowSystem load_flow(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Parse, "cannot open " + path);
  return parse_flow(in, path);
}

// ---------------------------------------------------------------------------
// Domains and solving

/// Exact semantics on predicates.
struct ConcreteDomain {
  using Value = IntPred;
  static constexpr std::string_view name = "concrete";
  static Value bottom() { return IntPred::empty(); }
  static Value constant(const IntPred& p) { return p; }
  static Value join(const Value& a, const Value& b) { return a | b; }
  static Value inter(const Value& a, const IntPred& p) { return a & p; }
  static Value shift(const Value& a, IntPred::Int k) { return a.shift(k); }
  static IntPred concretize(const Value& v) { return v; }
  static std::string str(const Value& v) { return v.str(); }
};

/// Signs, with every operator replaced by its best abstraction
/// abstract . op . concretize.
struct SignDomain {
  using Value = Sign;
  static constexpr std::string_view name = "sign";
  static Value bottom() { return Sign::bot; }
  static Value constant(const IntPred& p) { return abstract_sign(p); }
  static Value join(Value a, Value b) { return sign_join(a, b); }
  static Value inter(Value a, const IntPred& p) { return abstract_sign(uptolab::concretize(a) & p); }
  static Value shift(Value a, IntPred::Int k) { return abstract_sign(uptolab::concretize(a).shift(k)); }
  static IntPred concretize(Value v) { return uptolab::concretize(v); }
  static std::string str(Value v) { return sign_name(v); }
};

template <class D>
typename D::Value eval_expr(const Expr& e, const std::vector<typename D::Value>& env) {
  switch (e.kind) {
    case Expr::Kind::constant: return D::constant(e.pred);
    case Expr::Kind::var: return env[e.var];
    case Expr::Kind::join: return D::join(eval_expr<D>(*e.lhs, env), eval_expr<D>(*e.rhs, env));
    case Expr::Kind::inter: return D::inter(eval_expr<D>(*e.lhs, env), e.pred);
    case Expr::Kind::shift: return D::shift(eval_expr<D>(*e.lhs, env), e.amount);
  }
  throw std::logic_error("unknown expression kind");
}

template <class Value>
struct FlowSolution {
  std::vector<Value> values;
  std::vector<std::vector<Value>> traces;  // distinct successive values per variable
  std::size_t iterations = 0;              // rounds until nothing changed
};

inline constexpr std::size_t kDefaultFlowCap = 10000;

template <class D>
FlowSolution<typename D::Value> solve_flow(const FlowSystem& sys, std::size_t cap = kDefaultFlowCap) {
  sys.validate();
  using V = typename D::Value;
  FlowSolution<V> sol;
  sol.values.assign(sys.size(), D::bottom());
  sol.traces.assign(sys.size(), std::vector<V>{D::bottom()});
  for (;;) {
    if (sol.iterations >= cap)
      throw Error(Errc::NoConvergence, "no fixed point after " + std::to_string(cap) + " iterations");
    std::vector<V> next(sys.size());
    for (std::size_t v = 0; v < sys.size(); ++v) next[v] = eval_expr<D>(*sys.equation(v), sol.values);
    ++sol.iterations;
    bool changed = false;
    for (std::size_t v = 0; v < sys.size(); ++v) {
      if (!(next[v] == sol.values[v])) {
        changed = true;
        sol.traces[v].push_back(next[v]);
      }
    }
    sol.values = std::move(next);
    if (!changed) return sol;
  }
}

enum class FlowDomain { concrete, sign };

struct FlowQuery {
  std::string var;
  IntPred bound;
};

/// "<var> subset <pred>"
inline FlowQuery parse_query(const std::string& text) {
  std::istringstream is(text);
  std::string var, kw;
  if (!(is >> var >> kw) || kw != "subset")
    throw Error(Errc::Parse, "query must read '<var> subset <pred>': " + text);
  std::string rest;
  std::getline(is, rest);
  return {var, IntPred::parse(rest)};
}

}  // namespace uptolab

#endif  // UPTOLAB_FLOW_HPP
