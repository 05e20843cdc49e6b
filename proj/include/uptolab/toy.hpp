#ifndef UPTOLAB_TOY_HPP
#define UPTOLAB_TOY_HPP

// The countdown program  x := 5; while x > 0 do x := x - 1  and the
// transformers on integer predicates it induces:
//   b(P)   = {5} U ((P & [1,inf)) - 1)     the loop-head equation
//   i(P)   = {5}
//   b*(P)  = (P & [1,inf)) - 1             so b = i U b*
//   b_*(P) = ((-inf,0] U P) + 1
// The property of interest is f = [0,inf).
//
// The b_* above is the formula used throughout the analysis. It contains
// the exact right adjoint of b*, (-inf,0] U (P + 1), and differs from it
// only at 1 (it always contains 1). It is the exact right adjoint of
// (P & [2,inf)) - 1 instead.

#include <stdexcept>
#include <string>
#include <vector>

#include "uptolab/checker.hpp"
#include "uptolab/fixpoint.hpp"
#include "uptolab/flow.hpp"
#include "uptolab/intpred.hpp"
#include "uptolab/sign.hpp"

namespace uptolab {

enum class ToyOp { b, bstar, bsub, i };

inline IntPred toy_transform(ToyOp which, const IntPred& p) {
  switch (which) {
    case ToyOp::i: return IntPred::point(5);
    case ToyOp::bstar: return (p & IntPred::at_least(1)).shift(-1);
    case ToyOp::bsub: return (IntPred::at_most(0) | p).shift(1);
    case ToyOp::b: {
      IntPred out = IntPred::point(5) | (p & IntPred::at_least(1)).shift(-1);
      if (!(out == (toy_transform(ToyOp::i, p) | toy_transform(ToyOp::bstar, p))))
        throw std::logic_error("b differs from i join b*");
      return out;
    }
  }
  throw std::logic_error("unknown toy transformer");
}

/// {q | b*({q}) is included in P}, the exact right adjoint of b*.
inline IntPred toy_bstar_right_adjoint(const IntPred& p) { return IntPred::at_most(0) | p.shift(1); }

inline IntPred toy_property() { return IntPred::at_least(0); }

/// (b_* meet f)(P)
inline IntPred toy_bsub_f(const IntPred& p) { return toy_transform(ToyOp::bsub, p) & toy_property(); }

/// x1 = {5}; x2 = x1 U x4; x3 = x2 & [1,inf); x4 = x3 - 1; x5 = x2 & (-inf,0]
inline const char* toy_flow_source() {
  return "# x := 5;(1) while (2) x > 0 (3) do { x := x - 1;(4) } (5)\n"
         "var x1 x2 x3 x4 x5\n"
         "eq x1 = const({5})\n"
         "eq x2 = union(x1, x4)\n"
         "eq x3 = inter(x2, [1,inf))\n"
         "eq x4 = shift(x3, -1)\n"
         "eq x5 = inter(x2, (-inf,0])\n";
}

inline FlowSystem toy_flow_system() { return parse_flow_string(toy_flow_source()); }

/// Kleene chain of b from the empty predicate, distinct iterates.
inline std::vector<IntPred> toy_concrete_chain(std::size_t cap = kDefaultFlowCap) {
  auto chain = kleene_chain(IntPred::empty(), [](const IntPred& p) { return toy_transform(ToyOp::b, p); }, cap);
  if (!chain) throw Error(Errc::NoConvergence, "toy chain did not stabilize");
  return *chain;
}

/// Kleene chain of s.b from the empty predicate, distinct iterates.
inline std::vector<IntPred> toy_sign_chain() {
  auto chain = kleene_chain(
      IntPred::empty(), [](const IntPred& p) { return sign_closure(toy_transform(ToyOp::b, p)); }, 16);
  if (!chain) throw std::logic_error("sign chain cannot be longer than the domain");
  return *chain;
}

struct SignReportItem {
  std::string key;
  std::string claim;
  bool pass = false;
  std::vector<std::pair<std::string, std::string>> values;
};

/// Facts about the sign domain s and the countdown program. Each item passes
/// when the stated fact (holding or failing) is reproduced.
inline std::vector<SignReportItem> sign_report() {
  std::vector<SignReportItem> out;
  const IntPred f = toy_property();
  auto s = [](const IntPred& p) { return sign_closure(p); };

  {
    IntPred mu_b = toy_concrete_chain().back();
    IntPred mu_sb = toy_sign_chain().back();
    out.push_back({"complete",
                   "s(mu b) == mu(s b)",
                   s(mu_b) == mu_sb,
                   {{"mu b", mu_b.str()}, {"s(mu b)", s(mu_b).str()}, {"mu(s b)", mu_sb.str()}}});
  }
  {
    IntPred x = IntPred::point(3);
    IntPred lhs = toy_transform(ToyOp::bstar, s(x));
    IntPred rhs = s(toy_transform(ToyOp::bstar, x));
    out.push_back({"not-fully-complete",
                   "b*(s(x)) not below s(b*(x)) at x = {3}",
                   !lhs.subset_of(rhs),
                   {{"x", x.str()}, {"b*(s(x))", lhs.str()}, {"s(b*(x))", rhs.str()}}});
  }
  {
    IntPred x = IntPred::point(-3);
    IntPred lhs = s(toy_bsub_f(x));
    IntPred rhs = toy_bsub_f(s(x));
    out.push_back({"not-compatible",
                   "s((b_* & f)(x)) not below (b_* & f)(s(x)) at x = {-3}",
                   !lhs.subset_of(rhs),
                   {{"x", x.str()}, {"s((b_* & f)(x))", lhs.str()}, {"(b_* & f)(s(x))", rhs.str()}}});
  }
  {
    IntPred x = IntPred::point(5);
    IntPred sx = s(x);
    IntPred step = toy_bsub_f(sx);
    out.push_back({"upto-proof",
                   "{5} is included in (b_* & f)(s({5}))",
                   x.subset_of(step),
                   {{"s({5})", sx.str()}, {"(b_* & f)(s({5}))", step.str()}}});
  }
  {
    auto dom = f_companion_domain(
        IntPred::all(), f, [](const IntPred& p) { return toy_transform(ToyOp::bsub, p); },
        [](const IntPred& a, const IntPred& b) { return a & b; }, 64);
    if (!dom) throw std::logic_error("b_* orbit of f did not repeat");
    const auto& omega = dom->second;
    bool inside = true;
    std::string listing;
    for (const auto& p : omega) {
      inside = inside && s(p).subset_of(p);
      listing += (listing.empty() ? "" : "; ") + p.str();
    }
    out.push_back({"local-complete",
                   "every element of the f-companion domain is a fixed point of s",
                   inside,
                   {{"domain", listing}}});
  }
  return out;
}

}  // namespace uptolab

#endif  // UPTOLAB_TOY_HPP
