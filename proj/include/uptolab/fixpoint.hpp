#ifndef UPTOLAB_FIXPOINT_HPP
#define UPTOLAB_FIXPOINT_HPP

// Lattice-agnostic iteration helpers. They only need a value type with
// operator== plus whatever callables the caller supplies, so the same code
// drives finite lattices, integer predicates and the sign domain.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

namespace uptolab {

/// Distinct iterates start, f(start), f(f(start)), ... up to the first value
/// that f maps to itself. The last element is the fixed point reached.
/// Returns nullopt if no fixed point appears within `cap` applications.
template <class T, class F>
std::optional<std::vector<T>> kleene_chain(T start, F&& f, std::size_t cap) {
  std::vector<T> chain{start};
  for (std::size_t step = 0; step < cap; ++step) {
    T next = f(chain.back());
    if (next == chain.back()) return chain;
    chain.push_back(std::move(next));
  }
  return std::nullopt;
}

/// Orbit x, f(x), f(f(x)), ... stopping before the first repeated value.
/// On a finite carrier this always terminates; `cap` bounds infinite ones.
template <class T, class F>
std::optional<std::vector<T>> orbit(T x, F&& f, std::size_t cap) {
  std::vector<T> seen{x};
  for (std::size_t step = 0; step < cap; ++step) {
    T next = f(seen.back());
    if (std::find(seen.begin(), seen.end(), next) != seen.end()) return seen;
    seen.push_back(std::move(next));
  }
  return std::nullopt;
}

/// Smallest superset of `gens` closed under the binary `meet`. The result
/// keeps generators first, then new meets in discovery order.
template <class T, class Meet>
std::vector<T> meet_closure(std::vector<T> gens, Meet&& meet) {
  std::vector<T> out;
  for (auto& g : gens)
    if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      T m = meet(out[i], out[j]);
      if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(std::move(m));
    }
  }
  return out;
}

}  // namespace uptolab

#endif  // UPTOLAB_FIXPOINT_HPP
