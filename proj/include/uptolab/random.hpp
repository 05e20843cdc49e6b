#ifndef UPTOLAB_RANDOM_HPP
#define UPTOLAB_RANDOM_HPP

// Seeded generators for property tests: small lattices, monotone maps,
// closures and adjoint pairs.

#include <cstdint>
#include <random>
#include <vector>

#include "uptolab/fixpoint.hpp"
#include "uptolab/lattice.hpp"

namespace uptolab {

using Rng = std::mt19937_64;

inline std::size_t uniform_index(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

/// A random lattice with at most `max_size` elements, realized as a family
/// of subsets of a 4-element universe that contains the full set and is
/// closed under intersection. Such families include non-distributive
/// lattices (M3, N5).
inline LatticePtr random_lattice(Rng& rng, std::size_t max_size) {
  constexpr unsigned kBits = 4;
  constexpr std::uint32_t kFull = (1u << kBits) - 1;
  for (;;) {
    std::size_t target = 1 + uniform_index(rng, max_size);
    std::vector<std::uint32_t> family{kFull};
    std::size_t attempts = 0;
    while (family.size() < target && attempts++ < 64) {
      auto candidate = family;
      candidate.push_back(std::uint32_t(uniform_index(rng, kFull + 1)));
      candidate = meet_closure(candidate, [](std::uint32_t a, std::uint32_t b) { return a & b; });
      if (candidate.size() <= max_size) family = std::move(candidate);
    }
    std::sort(family.begin(), family.end());
    const std::size_t n = family.size();
    std::vector<std::string> names;
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i) {
      names.push_back("e" + std::to_string(i));
      for (std::size_t j = 0; j < n; ++j) leq[i][j] = (family[i] & ~family[j]) == 0;
    }
    return std::make_shared<const FiniteLattice>(FiniteLattice::from_order(names, leq));
  }
}

/// Random monotone map: a random function g made monotone by
/// m(x) = lub{g(y) | y <= x}.
inline MonotoneMap random_monotone(Rng& rng, const LatticePtr& Lp) {
  const auto& L = *Lp;
  std::vector<Elem> g(L.size());
  for (auto& v : g) v = Elem(uniform_index(rng, L.size()));
  std::vector<Elem> m(L.size());
  for (Elem x = 0; x < L.size(); ++x) {
    Elem acc = L.bot();
    for (Elem y = 0; y < L.size(); ++y)
      if (L.leq(y, x)) acc = L.join(acc, g[y]);
    m[x] = acc;
  }
  return MonotoneMap(Lp, std::move(m));
}

/// Meet-closed random subset containing top, plus `extra` (also kept).
inline std::vector<Elem> random_moore_family(Rng& rng, const LatticePtr& Lp,
                                             std::vector<Elem> extra = {}) {
  const auto& L = *Lp;
  std::vector<Elem> gens = std::move(extra);
  gens.push_back(L.top());
  for (Elem x = 0; x < L.size(); ++x)
    if (uniform_index(rng, 3) == 0) gens.push_back(x);
  auto family = meet_closure(gens, [&](Elem a, Elem b) { return L.meet(a, b); });
  std::sort(family.begin(), family.end());
  return family;
}

inline ClosureOperator random_closure(Rng& rng, const LatticePtr& Lp) {
  return closure_from_sublattice(Lp, random_moore_family(rng, Lp));
}

/// Random meet-preserving map built from the step maps
/// s_{p,q}(y) = top if p <= y else q, which preserve meets, combined by
/// pointwise meets and composition (both preserve meet-preservation).
inline MonotoneMap random_right_adjoint(Rng& rng, const LatticePtr& Lp) {
  const auto& L = *Lp;
  auto step = [&] {
    Elem p = Elem(uniform_index(rng, L.size()));
    Elem q = Elem(uniform_index(rng, L.size()));
    std::vector<Elem> t(L.size());
    for (Elem y = 0; y < L.size(); ++y) t[y] = L.leq(p, y) ? L.top() : q;
    return MonotoneMap(Lp, std::move(t));
  };
  MonotoneMap r = uniform_index(rng, 2) == 0 ? identity_map(Lp) : step();
  std::size_t rounds = uniform_index(rng, 4);
  for (std::size_t i = 0; i < rounds; ++i) {
    switch (uniform_index(rng, 3)) {
      case 0: r = pointwise_meet(r, step()); break;
      case 1: r = compose(r, step()); break;
      default: r = compose(step(), r); break;
    }
  }
  return r;
}

inline AdjointPair random_adjoint_pair(Rng& rng, const LatticePtr& Lp) {
  return adjoint_of(random_right_adjoint(rng, Lp), AdjointSide::left_of);
}

}  // namespace uptolab

#endif  // UPTOLAB_RANDOM_HPP
