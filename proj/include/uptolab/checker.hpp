#ifndef UPTOLAB_CHECKER_HPP
#define UPTOLAB_CHECKER_HPP

// Exhaustive decision procedures for the soundness / completeness notions
// relating up-to techniques and abstract domains, plus companions and the
// second-order operator whose greatest fixed point is the f-companion.

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "uptolab/error.hpp"
#include "uptolab/fixpoint.hpp"
#include "uptolab/lattice.hpp"

namespace uptolab {

/// a.b <= b.a (EM law).
inline bool is_compatible(const MonotoneMap& a, const MonotoneMap& b) {
  return pointwise_leq(compose(a, b), compose(b, a));
}

/// b.a <= a.b (Kleisli law).
inline bool is_fully_complete(const MonotoneMap& a, const MonotoneMap& b) {
  return pointwise_leq(compose(b, a), compose(a, b));
}

/// nu(b.a) <= nu(b).
inline bool is_sound(const MonotoneMap& a, const MonotoneMap& b,
                     FixpointMethod m = FixpointMethod::kleene) {
  return b.domain().leq(gfp(compose(b, a), m), gfp(b, m));
}

/// a(mu b) == mu(a.b).
inline bool is_complete(const MonotoneMap& a, const MonotoneMap& b,
                        FixpointMethod m = FixpointMethod::kleene) {
  return a(lfp(b, m)) == lfp(compose(a, b), m);
}

struct LawReport {
  bool compatible = false;
  bool fully_complete = false;
  bool sound = false;
  bool complete = false;
  bool em_lifting_exists = false;
  bool kl_extension_exists = false;

  friend bool operator==(const LawReport&, const LawReport&) = default;
};

inline LawReport law_report(const ClosureOperator& a, const MonotoneMap& b,
                            FixpointMethod method = FixpointMethod::kleene) {
  require_same(a.lattice(), b.lattice(), "closure and map live on different lattices");
  const auto& am = a.map();
  LawReport r;
  r.compatible = is_compatible(am, b);
  r.fully_complete = is_fully_complete(am, b);
  r.sound = is_sound(am, b, method);
  r.complete = is_complete(am, b, method);

  // A lifting of b to Pre(a) exists iff b maps Pre(a) into itself.
  r.em_lifting_exists = true;
  for (Elem x : a.pre_fixed())
    if (!a.contains(b(x))) r.em_lifting_exists = false;
  // An extension along alpha exists iff a.b == a.b.a.
  r.kl_extension_exists = compose(am, b) == compose(am, compose(b, am));

  if (r.compatible != r.em_lifting_exists || r.fully_complete != r.kl_extension_exists)
    throw std::logic_error("law equivalences disagree");
  if ((r.compatible && !r.sound) || (r.fully_complete && !r.complete))
    throw std::logic_error("sufficient condition held without its conclusion");
  return r;
}

/// Best sound approximation alpha.b.gamma as a map on the abstract lattice.
inline MonotoneMap best_abstraction(const ClosureOperator& a, const MonotoneMap& b) {
  require_same(a.lattice(), b.lattice(), "closure and map live on different lattices");
  const auto& A = *a.abstract_lattice();
  std::vector<Elem> t(A.size());
  for (Elem k = 0; k < A.size(); ++k) t[k] = a.alpha(b(a.gamma(k)));
  MonotoneMap abs(a.abstract_lattice(), std::move(t));
  for (Elem x = 0; x < b.domain().size(); ++x)
    if (!A.leq(a.alpha(b(x)), abs(a.alpha(x))))
      throw std::logic_error("best abstraction is not sound");
  return abs;
}

/// Sound approximation test alpha.b <= abs.alpha for an arbitrary abs on A.
inline bool is_sound_approximation(const ClosureOperator& a, const MonotoneMap& b,
                                   const MonotoneMap& abs) {
  require_same(a.abstract_lattice(), abs.lattice(), "approximation lives on another lattice");
  const auto& A = *a.abstract_lattice();
  for (Elem x = 0; x < b.domain().size(); ++x)
    if (!A.leq(a.alpha(b(x)), abs(a.alpha(x)))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Companions

struct CompanionResult {
  std::vector<Elem> chain;  // top, b(top), ..., nu b (distinct)
  ClosureOperator closure;
};

inline CompanionResult companion(const MonotoneMap& b) {
  auto chain = kleene_iterates(b, Extremum::greatest);
  const auto& L = b.domain();
  auto sub = meet_closure(chain, [&](Elem x, Elem y) { return L.meet(x, y); });
  CompanionResult res{chain, closure_from_sublattice(b.lattice(), sub)};
  if (!is_compatible(res.closure.map(), b))
    throw std::logic_error("companion is not compatible");
  return res;
}

/// Generators top, f, g(f), g(g(f)), ... of the f-companion domain and their
/// meet closure, for any carrier with top/meet/equality. `cap` bounds the
/// orbit on infinite carriers.
template <class T, class G, class Meet>
std::optional<std::pair<std::vector<T>, std::vector<T>>> f_companion_domain(
    const T& top, const T& f, G&& g, Meet&& meet, std::size_t cap) {
  auto orb = orbit(f, g, cap);
  if (!orb) return std::nullopt;
  std::vector<T> gens{top};
  for (auto& x : *orb)
    if (!(x == top)) gens.push_back(x);
  auto sub = meet_closure(gens, meet);
  return std::make_pair(std::move(gens), std::move(sub));
}

struct FCompanionResult {
  std::vector<Elem> generators;  // top, f, bsub(f), ...
  std::vector<Elem> sublattice;  // sorted meet closure
  ClosureOperator closure;
};

inline bool preserves_binary_meets_and_top(const MonotoneMap& m) {
  const auto& L = m.domain();
  if (m(L.top()) != L.top()) return false;
  for (Elem x = 0; x < L.size(); ++x)
    for (Elem y = 0; y < L.size(); ++y)
      if (m(L.meet(x, y)) != L.meet(m(x), m(y))) return false;
  return true;
}

/// a(f) <= f and a.b <= b.a.
inline bool bf_compatible_raw(const MonotoneMap& a, const MonotoneMap& b, Elem f) {
  return a.domain().leq(a(f), f) && is_compatible(a, b);
}

inline FCompanionResult f_companion(const MonotoneMap& bsub, Elem f) {
  if (!preserves_binary_meets_and_top(bsub))
    throw Error(Errc::NotARightAdjoint, "map does not preserve binary meets and top");
  const auto& L = bsub.domain();
  auto dom = f_companion_domain(
      L.top(), f, [&](Elem x) { return bsub(x); }, [&](Elem x, Elem y) { return L.meet(x, y); },
      L.size() + 1);
  auto [gens, sub] = std::move(*dom);
  std::sort(sub.begin(), sub.end());
  FCompanionResult res{gens, sub, closure_from_sublattice(bsub.lattice(), sub)};
  const auto& w = res.closure.map();
  if (!bf_compatible_raw(w, bsub, f) || !classify_map(w).up_closure)
    throw std::logic_error("f-companion lost one of its defining properties");
  return res;
}

/// (b,f)-completeness: a(f) <= f and (mu(a.b) <= f iff mu b <= f).
inline bool local_completeness(const ClosureOperator& a, const MonotoneMap& b, Elem f) {
  require_same(a.lattice(), b.lattice(), "closure and map live on different lattices");
  const auto& L = b.domain();
  if (!L.leq(a(f), f)) return false;
  bool abstract_ok = L.leq(lfp(compose(a.map(), b)), f);
  bool concrete_ok = L.leq(lfp(b), f);
  return abstract_ok == concrete_ok;
}

/// (b,f)-compatibility. When it holds, a is an up-closure and b has a left
/// adjoint b*, every i must make a complete for i join b*; that consequence
/// is checked too.
inline bool bf_compatibility(const MonotoneMap& a, const MonotoneMap& b, Elem f) {
  require_same(a.lattice(), b.lattice(), "maps live on different lattices");
  bool ok = bf_compatible_raw(a, b, f);
  if (ok && classify_map(a).up_closure && preserves_binary_meets_and_top(b)) {
    auto pair = adjoint_of(b, AdjointSide::left_of);
    const auto& L = b.domain();
    for (Elem i = 0; i < L.size(); ++i) {
      auto bi = pointwise_join(constant_map(b.lattice(), i), pair.left);
      if (!is_complete(a, bi))
        throw std::logic_error("(b,f)-compatible closure is incomplete for i join b*");
    }
  }
  return ok;
}

struct BridgeReport {
  bool forward = false;   // b* a <= a b*
  bool backward = false;  // a b_* <= b_* a
};

inline BridgeReport bridge_check(const AdjointPair& pair, const ClosureOperator& a) {
  require_same(pair.left.lattice(), a.lattice(), "adjoint pair and closure differ in lattice");
  BridgeReport r;
  r.forward = pointwise_leq(compose(pair.left, a.map()), compose(a.map(), pair.left));
  r.backward = pointwise_leq(compose(a.map(), pair.right), compose(pair.right, a.map()));
  if (r.forward != r.backward) throw std::logic_error("bridge biconditional violated");
  return r;
}

// ---------------------------------------------------------------------------
// Second-order operator

inline constexpr std::size_t kMaxEnumerableLattice = 7;

/// All monotone self-maps of L, by depth-first assignment along a linear
/// extension: the image of x only has to sit above the images of the
/// elements already assigned below it.
inline std::vector<std::vector<Elem>> enumerate_monotone_maps(const FiniteLattice& L) {
  if (L.size() > kMaxEnumerableLattice)
    throw Error(Errc::LatticeTooLarge, "monotone-map enumeration is capped at " +
                                           std::to_string(kMaxEnumerableLattice) +
                                           " elements, got " + std::to_string(L.size()));
  const auto& order = L.linear_extension();
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> table(L.size());
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == order.size()) {
      out.push_back(table);
      return;
    }
    Elem x = order[pos];
    Elem floor = L.bot();
    for (std::size_t q = 0; q < pos; ++q)
      if (L.leq(order[q], x)) floor = L.join(floor, table[order[q]]);
    for (Elem v = 0; v < L.size(); ++v) {
      if (!L.leq(floor, v)) continue;
      table[x] = v;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  return out;
}

struct BGfpResult {
  ClosureOperator closure;
  std::size_t maps_enumerated = 0;
  std::size_t iterations = 0;
};

/// B(a) = lub{c in maps | c.b <= b.a, c(f) <= f}, with maps given as tables.
inline std::vector<Elem> b_operator(const MonotoneMap& b, Elem f, const std::vector<Elem>& a,
                                    const std::vector<std::vector<Elem>>& maps) {
  const auto& L = b.domain();
  std::vector<Elem> acc(L.size(), L.bot());
  for (const auto& c : maps) {
    if (!L.leq(c[f], f)) continue;
    bool ok = true;
    for (Elem x = 0; x < L.size() && ok; ++x) ok = L.leq(c[b(x)], b(a[x]));
    if (!ok) continue;
    for (Elem x = 0; x < L.size(); ++x) acc[x] = L.join(acc[x], c[x]);
  }
  return acc;
}

/// nu B, by Kleene iteration from the constant-top map over all enumerated
/// monotone maps.
inline BGfpResult b_gfp(const MonotoneMap& b, Elem f) {
  const auto& L = b.domain();
  auto maps = enumerate_monotone_maps(L);
  auto B = [&](const std::vector<Elem>& a) { return b_operator(b, f, a, maps); };
  std::vector<Elem> cur(L.size(), L.top());
  std::size_t iterations = 0;
  for (;;) {
    auto next = B(cur);
    ++iterations;
    if (next == cur) break;
    cur = std::move(next);
  }
  BGfpResult res{closure_from_map(MonotoneMap(b.lattice(), cur)), maps.size(), iterations};
  if (preserves_binary_meets_and_top(b)) {
    auto fc = f_companion(b, f);
    if (!(fc.closure.map() == res.closure.map()))
      throw std::logic_error("nu B differs from the f-companion");
  }
  return res;
}

/// For an adjoint pair with a fully complete for the left adjoint and
/// a(f) <= f: every iterate (b_* meet f)^k(top), k <= k_max, is in Pre(a).
inline bool duality_check(const AdjointPair& pair, const ClosureOperator& a, Elem f,
                          std::size_t k_max) {
  require_same(pair.left.lattice(), a.lattice(), "adjoint pair and closure differ in lattice");
  const auto& L = a.map().domain();
  if (!bridge_check(pair, a).forward)
    throw Error(Errc::PreconditionFailed,
                "closure is not fully complete w.r.t. the left adjoint "
                "(equivalently not compatible with the right adjoint)");
  if (!L.leq(a(f), f))
    throw Error(Errc::PreconditionFailed, "a(" + L.name(f) + ") is not below " + L.name(f));
  Elem x = L.top();
  for (std::size_t k = 0; k <= k_max; ++k) {
    if (!L.leq(a(x), x)) return false;
    Elem next = L.meet(pair.right(x), f);
    if (next == x) break;
    x = next;
  }
  return true;
}

}  // namespace uptolab

#endif  // UPTOLAB_CHECKER_HPP
