#ifndef UPTOLAB_LATTICE_HPP
#define UPTOLAB_LATTICE_HPP

// Explicit finite complete lattices and monotone maps on them. Elements are
// dense indices 0..n-1; order, joins and meets are precomputed tables, so
// every law in this library can be checked by plain enumeration.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "uptolab/error.hpp"
#include "uptolab/fixpoint.hpp"

namespace uptolab {

using Elem = std::uint32_t;

class FiniteLattice {
 public:
  /// Validates a full order relation (leq[x][y] iff x below y) and
  /// precomputes joins and meets. Throws NotAPartialOrder / NotALattice.
  static FiniteLattice from_order(std::vector<std::string> names,
                                  const std::vector<std::vector<bool>>& leq) {
    const std::size_t n = names.size();
    if (n == 0) throw Error(Errc::NotALattice, "empty carrier has no top or bottom");
    if (leq.size() != n) throw Error(Errc::NotAPartialOrder, "order matrix has wrong size");
    FiniteLattice L;
    L.n_ = n;
    L.names_ = std::move(names);
    L.leq_.assign(n * n, 0);
    for (std::size_t x = 0; x < n; ++x) {
      if (leq[x].size() != n) throw Error(Errc::NotAPartialOrder, "order matrix has wrong size");
      for (std::size_t y = 0; y < n; ++y) L.leq_[x * n + y] = leq[x][y] ? 1 : 0;
    }
    L.check_partial_order();
    L.index_names();
    L.compute_bounds();
    return L;
  }

  std::size_t size() const noexcept { return n_; }
  const std::string& name(Elem x) const { return names_.at(x); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::optional<Elem> find(std::string_view name) const {
    auto it = by_name_.find(std::string(name));
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
  }

  Elem at(std::string_view name) const {
    auto e = find(name);
    if (!e) throw Error(Errc::Parse, "unknown lattice element '" + std::string(name) + "'");
    return *e;
  }

  bool leq(Elem x, Elem y) const noexcept { return leq_[x * n_ + y] != 0; }
  Elem join(Elem x, Elem y) const noexcept { return join_[x * n_ + y]; }
  Elem meet(Elem x, Elem y) const noexcept { return meet_[x * n_ + y]; }
  Elem top() const noexcept { return top_; }
  Elem bot() const noexcept { return bot_; }

  Elem lub(std::span<const Elem> s) const {
    Elem acc = bot_;
    for (Elem x : s) acc = join(acc, x);
    return acc;
  }

  Elem glb(std::span<const Elem> s) const {
    Elem acc = top_;
    for (Elem x : s) acc = meet(acc, x);
    return acc;
  }

  /// (lub, glb) of a subset; the empty set gives (bot, top).
  std::pair<Elem, Elem> big_bounds(std::span<const Elem> s) const { return {lub(s), glb(s)}; }

  /// Elements sorted so that x strictly below y implies x comes first.
  const std::vector<Elem>& linear_extension() const noexcept { return linear_; }

  std::vector<Elem> elements() const {
    std::vector<Elem> v(n_);
    std::iota(v.begin(), v.end(), Elem{0});
    return v;
  }

  friend bool operator==(const FiniteLattice& a, const FiniteLattice& b) {
    return a.n_ == b.n_ && a.names_ == b.names_ && a.leq_ == b.leq_;
  }

 private:
  FiniteLattice() = default;

  void check_partial_order() const {
    for (std::size_t x = 0; x < n_; ++x)
      if (!leq(Elem(x), Elem(x)))
        throw Error(Errc::NotAPartialOrder, "not reflexive at " + names_[x]);
    for (std::size_t x = 0; x < n_; ++x)
      for (std::size_t y = 0; y < n_; ++y) {
        if (x != y && leq(Elem(x), Elem(y)) && leq(Elem(y), Elem(x)))
          throw Error(Errc::NotAPartialOrder,
                      "cycle between " + names_[x] + " and " + names_[y]);
        if (!leq(Elem(x), Elem(y))) continue;
        for (std::size_t z = 0; z < n_; ++z)
          if (leq(Elem(y), Elem(z)) && !leq(Elem(x), Elem(z)))
            throw Error(Errc::NotAPartialOrder, "not transitive at " + names_[x] + " <= " +
                                                    names_[y] + " <= " + names_[z]);
      }
  }

  void index_names() {
    for (std::size_t x = 0; x < n_; ++x) {
      if (!by_name_.emplace(names_[x], Elem(x)).second)
        throw Error(Errc::NotAPartialOrder, "duplicate element name " + names_[x]);
    }
  }

  void compute_bounds() {
    std::vector<std::size_t> below(n_, 0);
    for (std::size_t x = 0; x < n_; ++x)
      for (std::size_t y = 0; y < n_; ++y) below[x] += leq(Elem(y), Elem(x));
    linear_ = elements();
    std::stable_sort(linear_.begin(), linear_.end(),
                     [&](Elem a, Elem b) { return below[a] < below[b]; });

    join_.assign(n_ * n_, 0);
    meet_.assign(n_ * n_, 0);
    for (std::size_t x = 0; x < n_; ++x) {
      for (std::size_t y = x; y < n_; ++y) {
        auto j = least_upper(Elem(x), Elem(y));
        auto m = greatest_lower(Elem(x), Elem(y));
        if (!j || !m)
          throw Error(Errc::NotALattice, "pair (" + names_[x] + ", " + names_[y] + ") has no " +
                                             (!j ? "least upper bound" : "greatest lower bound"));
        join_[x * n_ + y] = join_[y * n_ + x] = *j;
        meet_[x * n_ + y] = meet_[y * n_ + x] = *m;
      }
    }
    // With binary joins/meets everywhere, a finite poset is complete iff it
    // has extremal elements.
    top_ = linear_.front();
    bot_ = linear_.front();
    for (Elem x : linear_) {
      top_ = join(top_, x);
      bot_ = meet(bot_, x);
    }
    for (Elem x : linear_)
      if (!leq(bot_, x) || !leq(x, top_))
        throw Error(Errc::NotALattice, "missing top or bottom");
  }

  std::optional<Elem> least_upper(Elem x, Elem y) const {
    for (Elem z : linear_) {
      if (!leq(x, z) || !leq(y, z)) continue;
      // First upper bound in a linear extension is minimal; it is the least
      // one only if it lies below every other upper bound.
      for (Elem w = 0; w < n_; ++w)
        if (leq(x, w) && leq(y, w) && !leq(z, w)) return std::nullopt;
      return z;
    }
    return std::nullopt;
  }

  std::optional<Elem> greatest_lower(Elem x, Elem y) const {
    for (auto it = linear_.rbegin(); it != linear_.rend(); ++it) {
      Elem z = *it;
      if (!leq(z, x) || !leq(z, y)) continue;
      for (Elem w = 0; w < n_; ++w)
        if (leq(w, x) && leq(w, y) && !leq(w, z)) return std::nullopt;
      return z;
    }
    return std::nullopt;
  }

  std::size_t n_ = 0;
  std::vector<std::string> names_;
  std::unordered_map<std::string, Elem> by_name_;
  std::vector<std::uint8_t> leq_;
  std::vector<Elem> join_, meet_;
  std::vector<Elem> linear_;
  Elem top_ = 0, bot_ = 0;
};

using LatticePtr = std::shared_ptr<const FiniteLattice>;

/// Builds a lattice from element names and covering pairs (lo, hi). The
/// reflexive-transitive closure of the covers is the order.
inline LatticePtr build_lattice(std::vector<std::string> names,
                                const std::vector<std::pair<std::string, std::string>>& covers) {
  const std::size_t n = names.size();
  std::unordered_map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < n; ++i)
    if (!idx.emplace(names[i], i).second)
      throw Error(Errc::NotAPartialOrder, "duplicate element name " + names[i]);
  const std::size_t words = (n + 63) / 64;
  std::vector<std::uint64_t> reach(n * words, 0);
  auto set = [&](std::size_t a, std::size_t b) { reach[a * words + b / 64] |= 1ULL << (b % 64); };
  auto get = [&](std::size_t a, std::size_t b) {
    return (reach[a * words + b / 64] >> (b % 64)) & 1ULL;
  };
  for (std::size_t i = 0; i < n; ++i) set(i, i);
  for (const auto& [lo, hi] : covers) {
    auto a = idx.find(lo), b = idx.find(hi);
    if (a == idx.end() || b == idx.end())
      throw Error(Errc::Parse, "cover mentions unknown element " +
                                   (a == idx.end() ? lo : hi));
    set(a->second, b->second);
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (get(i, k))
        for (std::size_t w = 0; w < words; ++w) reach[i * words + w] |= reach[k * words + w];
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) leq[i][j] = get(i, j) != 0;
  return std::make_shared<const FiniteLattice>(FiniteLattice::from_order(std::move(names), leq));
}

/// Chain names[0] < names[1] < ... .
inline LatticePtr chain_lattice(std::vector<std::string> names) {
  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t i = 0; i + 1 < names.size(); ++i) covers.emplace_back(names[i], names[i + 1]);
  return build_lattice(std::move(names), covers);
}

/// Lattice of all subsets of {0..bits-1}; element k is the subset with bit
/// mask k. `names` may be empty, in which case masks are printed in binary.
inline LatticePtr powerset_lattice(unsigned bits, std::vector<std::string> names = {}) {
  const std::size_t n = std::size_t{1} << bits;
  if (names.empty()) {
    for (std::size_t k = 0; k < n; ++k) {
      std::string s;
      for (unsigned b = bits; b-- > 0;) s.push_back((k >> b) & 1 ? '1' : '0');
      names.push_back(bits == 0 ? "0" : s);
    }
  }
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) leq[x][y] = (x & ~y) == 0;
  return std::make_shared<const FiniteLattice>(FiniteLattice::from_order(std::move(names), leq));
}

inline bool same_lattice(const LatticePtr& a, const LatticePtr& b) {
  return a == b || (a && b && *a == *b);
}

inline void require_same(const LatticePtr& a, const LatticePtr& b, std::string_view what) {
  if (!same_lattice(a, b)) throw Error(Errc::DomainMismatch, std::string(what));
}

/// A total, monotone self-map given by its table.
class MonotoneMap {
 public:
  MonotoneMap(LatticePtr lattice, std::vector<Elem> table)
      : lattice_(std::move(lattice)), table_(std::move(table)) {
    const auto& L = *lattice_;
    if (table_.size() != L.size())
      throw Error(Errc::NotMonotone, "table has " + std::to_string(table_.size()) +
                                         " entries for " + std::to_string(L.size()) + " elements");
    for (Elem v : table_)
      if (v >= L.size()) throw Error(Errc::NotMonotone, "table value out of range");
    for (Elem x = 0; x < L.size(); ++x)
      for (Elem y = 0; y < L.size(); ++y)
        if (L.leq(x, y) && !L.leq(table_[x], table_[y]))
          throw Error(Errc::NotMonotone, L.name(x) + " <= " + L.name(y) + " but image " +
                                             L.name(table_[x]) + " is not below " +
                                             L.name(table_[y]));
  }

  Elem operator()(Elem x) const { return table_[x]; }
  const LatticePtr& lattice() const noexcept { return lattice_; }
  const FiniteLattice& domain() const noexcept { return *lattice_; }
  const std::vector<Elem>& table() const noexcept { return table_; }

  friend bool operator==(const MonotoneMap& f, const MonotoneMap& g) {
    return same_lattice(f.lattice_, g.lattice_) && f.table_ == g.table_;
  }

 private:
  LatticePtr lattice_;
  std::vector<Elem> table_;
};

inline MonotoneMap identity_map(const LatticePtr& L) { return MonotoneMap(L, L->elements()); }

inline MonotoneMap constant_map(const LatticePtr& L, Elem c) {
  return MonotoneMap(L, std::vector<Elem>(L->size(), c));
}

/// f after g.
inline MonotoneMap compose(const MonotoneMap& f, const MonotoneMap& g) {
  require_same(f.lattice(), g.lattice(), "compose: maps live on different lattices");
  std::vector<Elem> t(g.table().size());
  for (Elem x = 0; x < t.size(); ++x) t[x] = f(g(x));
  return MonotoneMap(f.lattice(), std::move(t));
}

inline MonotoneMap pointwise_join(const MonotoneMap& f, const MonotoneMap& g) {
  require_same(f.lattice(), g.lattice(), "join: maps live on different lattices");
  std::vector<Elem> t(f.table().size());
  for (Elem x = 0; x < t.size(); ++x) t[x] = f.domain().join(f(x), g(x));
  return MonotoneMap(f.lattice(), std::move(t));
}

inline MonotoneMap pointwise_meet(const MonotoneMap& f, const MonotoneMap& g) {
  require_same(f.lattice(), g.lattice(), "meet: maps live on different lattices");
  std::vector<Elem> t(f.table().size());
  for (Elem x = 0; x < t.size(); ++x) t[x] = f.domain().meet(f(x), g(x));
  return MonotoneMap(f.lattice(), std::move(t));
}

/// f below g in the pointwise order.
inline bool pointwise_leq(const MonotoneMap& f, const MonotoneMap& g) {
  require_same(f.lattice(), g.lattice(), "leq: maps live on different lattices");
  for (Elem x = 0; x < f.table().size(); ++x)
    if (!f.domain().leq(f(x), g(x))) return false;
  return true;
}

/// First x with f(x) not below g(x), if any.
inline std::optional<Elem> leq_witness(const MonotoneMap& f, const MonotoneMap& g) {
  require_same(f.lattice(), g.lattice(), "leq: maps live on different lattices");
  for (Elem x = 0; x < f.table().size(); ++x)
    if (!f.domain().leq(f(x), g(x))) return x;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Fixed points

enum class Extremum { least, greatest };
enum class FixpointMethod { kleene, tarski };

/// Kleene iterates from bottom (least) or top (greatest); distinct values,
/// the last one being the fixed point.
inline std::vector<Elem> kleene_iterates(const MonotoneMap& f, Extremum kind) {
  const auto& L = f.domain();
  Elem start = kind == Extremum::least ? L.bot() : L.top();
  // A monotone chain in an n-element lattice has at most n distinct values.
  auto chain = kleene_chain(start, [&](Elem x) { return f(x); }, L.size() + 1);
  if (!chain) throw std::logic_error("Kleene iteration did not stabilize on a finite lattice");
  return *chain;
}

inline Elem fixpoint(const MonotoneMap& f, Extremum kind,
                     FixpointMethod method = FixpointMethod::kleene) {
  const auto& L = f.domain();
  if (method == FixpointMethod::kleene) return kleene_iterates(f, kind).back();
  std::vector<Elem> witnesses;
  for (Elem x = 0; x < L.size(); ++x) {
    if (kind == Extremum::least ? L.leq(f(x), x) : L.leq(x, f(x))) witnesses.push_back(x);
  }
  return kind == Extremum::least ? L.glb(witnesses) : L.lub(witnesses);
}

inline Elem lfp(const MonotoneMap& f, FixpointMethod m = FixpointMethod::kleene) {
  return fixpoint(f, Extremum::least, m);
}
inline Elem gfp(const MonotoneMap& f, FixpointMethod m = FixpointMethod::kleene) {
  return fixpoint(f, Extremum::greatest, m);
}

// ---------------------------------------------------------------------------
// Adjoints

struct AdjointPair {
  MonotoneMap left;   // preserves joins
  MonotoneMap right;  // preserves meets
};

/// Exhaustive check of l(x) <= y iff x <= r(y).
inline bool is_adjunction(const MonotoneMap& l, const MonotoneMap& r) {
  require_same(l.lattice(), r.lattice(), "adjunction: maps live on different lattices");
  const auto& L = l.domain();
  for (Elem x = 0; x < L.size(); ++x)
    for (Elem y = 0; y < L.size(); ++y)
      if (L.leq(l(x), y) != L.leq(x, r(y))) return false;
  return true;
}

enum class AdjointSide { right_of, left_of };

/// right_of: m is taken as the left adjoint and its right adjoint
/// r(y) = lub{x | m(x) <= y} is computed; left_of dually.
inline AdjointPair adjoint_of(const MonotoneMap& m, AdjointSide side) {
  const auto& L = m.domain();
  std::vector<Elem> t(L.size());
  for (Elem y = 0; y < L.size(); ++y) {
    std::vector<Elem> s;
    for (Elem x = 0; x < L.size(); ++x) {
      if (side == AdjointSide::right_of ? L.leq(m(x), y) : L.leq(y, m(x))) s.push_back(x);
    }
    t[y] = side == AdjointSide::right_of ? L.lub(s) : L.glb(s);
    bool ok = side == AdjointSide::right_of ? L.leq(m(t[y]), y) : L.leq(y, m(t[y]));
    if (!ok) {
      std::ostringstream os;
      os << "map does not preserve " << (side == AdjointSide::right_of ? "the join" : "the meet")
         << " of {";
      for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << L.name(s[i]);
      os << "} (bound " << L.name(y) << ")";
      throw Error(Errc::NoAdjoint, os.str());
    }
  }
  MonotoneMap other(m.lattice(), std::move(t));
  AdjointPair pair = side == AdjointSide::right_of ? AdjointPair{m, other} : AdjointPair{other, m};
  if (!is_adjunction(pair.left, pair.right))
    throw Error(Errc::NoAdjoint, "exhaustive adjunction check failed");
  return pair;
}

// ---------------------------------------------------------------------------
// Classification

struct MapClass {
  bool monotone = false;
  bool up_closure = false;
  bool down_closure = false;
  bool preserves_joins = false;
  bool preserves_meets = false;
};

/// Checks every flag exhaustively on a raw table; nothing is rejected.
inline MapClass classify_map(const FiniteLattice& L, std::span<const Elem> f) {
  MapClass c;
  const Elem n = Elem(L.size());
  if (f.size() != n) return c;
  for (Elem v : f)
    if (v >= n) return c;
  c.monotone = c.up_closure = c.down_closure = c.preserves_joins = c.preserves_meets = true;
  c.preserves_joins = f[L.bot()] == L.bot();
  c.preserves_meets = f[L.top()] == L.top();
  for (Elem x = 0; x < n; ++x) {
    if (!L.leq(x, f[x]) || !L.leq(f[f[x]], f[x])) c.up_closure = false;
    if (!L.leq(f[x], x) || !L.leq(f[x], f[f[x]])) c.down_closure = false;
    for (Elem y = 0; y < n; ++y) {
      if (L.leq(x, y) && !L.leq(f[x], f[y])) c.monotone = false;
      if (f[L.join(x, y)] != L.join(f[x], f[y])) c.preserves_joins = false;
      if (f[L.meet(x, y)] != L.meet(f[x], f[y])) c.preserves_meets = false;
    }
  }
  c.up_closure = c.up_closure && c.monotone;
  c.down_closure = c.down_closure && c.monotone;
  return c;
}

inline MapClass classify_map(const MonotoneMap& f) { return classify_map(f.domain(), f.table()); }

// ---------------------------------------------------------------------------
// Closures

// up(x) is the least y above x with f(y) <= y, reached by iterating
// y -> x join f(y) from bot. When f preserves binary joins this is the join of
// the orbit x, f(x), f(f(x)), ...; for other f the orbit join need not be
// idempotent. down is the dual.
struct PowerClosures {
  MonotoneMap up;
  MonotoneMap down;
};

inline PowerClosures power_closures(const MonotoneMap& f) {
  const auto& L = f.domain();
  std::vector<Elem> up(L.size()), down(L.size());
  for (Elem x = 0; x < L.size(); ++x) {
    Elem y = L.bot();
    for (Elem next; (next = L.join(x, f(y))) != y;) y = next;
    up[x] = y;
    y = L.top();
    for (Elem next; (next = L.meet(x, f(y))) != y;) y = next;
    down[x] = y;
  }
  PowerClosures pc{MonotoneMap(f.lattice(), std::move(up)),
                   MonotoneMap(f.lattice(), std::move(down))};
  if (!classify_map(pc.up).up_closure || !classify_map(pc.down).down_closure)
    throw std::logic_error("power closure lost its closure laws");
  return pc;
}

/// An up-closure together with its abstract domain A = Pre(a) and the
/// Galois insertion alpha: L -> A, gamma: A -> L. A is a lattice of its own
/// whose element k is pre_fixed()[k].
class ClosureOperator {
 public:
  const MonotoneMap& map() const noexcept { return carrier_; }
  Elem operator()(Elem x) const { return carrier_(x); }
  const LatticePtr& lattice() const noexcept { return carrier_.lattice(); }
  const std::vector<Elem>& pre_fixed() const noexcept { return pre_fixed_; }
  const LatticePtr& abstract_lattice() const noexcept { return abstract_; }

  bool contains(Elem x) const { return carrier_(x) == x; }
  Elem alpha(Elem x) const { return index_of_[carrier_(x)]; }
  Elem gamma(Elem k) const { return pre_fixed_.at(k); }

  friend ClosureOperator closure_from_sublattice(const LatticePtr& L, std::vector<Elem> A);

 private:
  ClosureOperator(MonotoneMap carrier, std::vector<Elem> pre, LatticePtr abstract,
                  std::vector<Elem> index_of)
      : carrier_(std::move(carrier)),
        pre_fixed_(std::move(pre)),
        abstract_(std::move(abstract)),
        index_of_(std::move(index_of)) {}

  MonotoneMap carrier_;
  std::vector<Elem> pre_fixed_;
  LatticePtr abstract_;
  std::vector<Elem> index_of_;  // element of L -> index in A (only for members of A)
};

/// Closure whose pre-fixed points are exactly A: a(x) = glb{y in A | x <= y}.
/// A must contain top and be closed under binary meets.
inline ClosureOperator closure_from_sublattice(const LatticePtr& Lp, std::vector<Elem> A) {
  const auto& L = *Lp;
  std::sort(A.begin(), A.end());
  A.erase(std::unique(A.begin(), A.end()), A.end());
  for (Elem x : A)
    if (x >= L.size()) throw Error(Errc::Parse, "sublattice element out of range");
  if (!std::binary_search(A.begin(), A.end(), L.top()))
    throw Error(Errc::MissingTop, "sublattice must contain " + L.name(L.top()));
  for (Elem x : A)
    for (Elem y : A)
      if (!std::binary_search(A.begin(), A.end(), L.meet(x, y)))
        throw Error(Errc::NotMeetClosed, "meet of " + L.name(x) + " and " + L.name(y) + " (" +
                                             L.name(L.meet(x, y)) + ") is missing");
  std::vector<Elem> table(L.size());
  for (Elem x = 0; x < L.size(); ++x) {
    std::vector<Elem> above;
    for (Elem y : A)
      if (L.leq(x, y)) above.push_back(y);
    table[x] = L.glb(above);
  }
  std::vector<Elem> index_of(L.size(), Elem(-1));
  std::vector<std::string> names;
  std::vector<std::vector<bool>> leq(A.size(), std::vector<bool>(A.size()));
  for (std::size_t i = 0; i < A.size(); ++i) {
    index_of[A[i]] = Elem(i);
    names.push_back(L.name(A[i]));
    for (std::size_t j = 0; j < A.size(); ++j) leq[i][j] = L.leq(A[i], A[j]);
  }
  auto abstract = std::make_shared<const FiniteLattice>(FiniteLattice::from_order(names, leq));
  ClosureOperator c(MonotoneMap(Lp, std::move(table)), std::move(A), std::move(abstract),
                    std::move(index_of));
  for (Elem k = 0; k < c.pre_fixed().size(); ++k)
    if (c.alpha(c.gamma(k)) != k) throw std::logic_error("alpha . gamma is not the identity");
  return c;
}

/// Reads an up-closure given as a table and rebuilds it from its Pre set.
inline ClosureOperator closure_from_map(const MonotoneMap& a) {
  if (!classify_map(a).up_closure)
    throw Error(Errc::NotAClosure, "map is not extensive and idempotent");
  std::vector<Elem> pre;
  for (Elem x = 0; x < a.table().size(); ++x)
    if (a(x) == x) pre.push_back(x);
  auto c = closure_from_sublattice(a.lattice(), std::move(pre));
  if (!(c.map() == a)) throw std::logic_error("closure not determined by its pre-fixed points");
  return c;
}

inline std::string format_set(const FiniteLattice& L, std::span<const Elem> s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + L.name(s[i]);
  return out + "}";
}

inline std::string format_table(const MonotoneMap& f) {
  const auto& L = f.domain();
  std::string out;
  for (Elem x = 0; x < L.size(); ++x)
    out += (x ? " " : "") + L.name(x) + "->" + L.name(f(x));
  return out;
}

}  // namespace uptolab

#endif  // UPTOLAB_LATTICE_HPP
