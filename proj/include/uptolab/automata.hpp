#ifndef UPTOLAB_AUTOMATA_HPP
#define UPTOLAB_AUTOMATA_HPP

// Language equivalence of DFA states by coinduction. The lattice here is
// Rel_X (relations on states); the transformers b, b*, b_* and f act on it
// and e is the equivalence closure.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <fstream>
#include <istream>
#include <numeric>
#include <optional>
#include <queue>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "uptolab/error.hpp"
#include "uptolab/partition.hpp"

namespace uptolab {

class Dfa {
 public:
  Dfa(std::vector<std::string> state_names, std::vector<std::string> alphabet,
      std::vector<bool> out, std::vector<State> trans)
      : names_(std::move(state_names)),
        alphabet_(std::move(alphabet)),
        out_(std::move(out)),
        trans_(std::move(trans)) {
    if (alphabet_.empty()) throw Error(Errc::Parse, "alphabet must be non-empty");
    if (names_.empty()) throw Error(Errc::Parse, "automaton needs at least one state");
    if (out_.size() != names_.size()) throw Error(Errc::Parse, "output vector has wrong size");
    if (trans_.size() != names_.size() * alphabet_.size())
      throw Error(Errc::Parse, "transition table is not total");
    for (State s : trans_)
      if (s >= names_.size()) throw Error(Errc::UnknownState, "transition target out of range");
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (!index_.emplace(names_[i], State(i)).second)
        throw Error(Errc::Parse, "duplicate state name " + names_[i]);
    for (std::size_t a = 0; a < alphabet_.size(); ++a)
      if (!symbols_.emplace(alphabet_[a], a).second)
        throw Error(Errc::Parse, "duplicate symbol " + alphabet_[a]);
  }

  std::size_t states() const noexcept { return names_.size(); }
  std::size_t symbols() const noexcept { return alphabet_.size(); }
  const std::vector<std::string>& alphabet() const noexcept { return alphabet_; }
  const std::string& name(State s) const { return names_.at(s); }
  bool out(State s) const { return out_[s]; }
  State next(State s, std::size_t sym) const { return trans_[s * alphabet_.size() + sym]; }

  State state(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw Error(Errc::UnknownState, "no state named '" + name + "'");
    return it->second;
  }

  std::size_t symbol(const std::string& sym) const {
    auto it = symbols_.find(sym);
    if (it == symbols_.end()) throw Error(Errc::UnknownSymbol, "symbol '" + sym + "' not in alphabet");
    return it->second;
  }

 private:
  std::vector<std::string> names_;
  std::vector<std::string> alphabet_;
  std::vector<bool> out_;
  std::vector<State> trans_;
  std::unordered_map<std::string, State> index_;
  std::unordered_map<std::string, std::size_t> symbols_;
};

/// A relation on n states, stored as an n x n bit matrix.
class Relation {
 public:
  explicit Relation(std::size_t n = 0) : n_(n), words_((n * n + 63) / 64, 0) {}

  static Relation full(std::size_t n) {
    Relation r(n);
    for (State x = 0; x < n; ++x)
      for (State y = 0; y < n; ++y) r.insert(x, y);
    return r;
  }

  static Relation identity(std::size_t n) {
    Relation r(n);
    for (State x = 0; x < n; ++x) r.insert(x, x);
    return r;
  }

  static Relation from_pairs(std::size_t n, const std::vector<std::pair<State, State>>& ps) {
    Relation r(n);
    for (auto [x, y] : ps) r.insert(x, y);
    return r;
  }

  std::size_t states() const noexcept { return n_; }

  bool contains(State x, State y) const {
    std::size_t k = std::size_t(x) * n_ + y;
    return (words_[k / 64] >> (k % 64)) & 1ULL;
  }

  void insert(State x, State y) {
    if (x >= n_ || y >= n_) throw Error(Errc::UnknownState, "pair index out of range");
    std::size_t k = std::size_t(x) * n_ + y;
    words_[k / 64] |= 1ULL << (k % 64);
  }

  std::size_t size() const {
    std::size_t c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool empty() const { return size() == 0; }

  std::vector<std::pair<State, State>> pairs() const {
    std::vector<std::pair<State, State>> out;
    for (State x = 0; x < n_; ++x)
      for (State y = 0; y < n_; ++y)
        if (contains(x, y)) out.emplace_back(x, y);
    return out;
  }

  bool subset_of(const Relation& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  bool is_equivalence() const {
    for (State x = 0; x < n_; ++x) {
      if (!contains(x, x)) return false;
      for (State y = 0; y < n_; ++y) {
        if (!contains(x, y)) continue;
        if (!contains(y, x)) return false;
        for (State z = 0; z < n_; ++z)
          if (contains(y, z) && !contains(x, z)) return false;
      }
    }
    return true;
  }

  friend Relation operator|(Relation a, const Relation& b) {
    for (std::size_t i = 0; i < a.words_.size(); ++i) a.words_[i] |= b.words_[i];
    return a;
  }
  friend Relation operator&(Relation a, const Relation& b) {
    for (std::size_t i = 0; i < a.words_.size(); ++i) a.words_[i] &= b.words_[i];
    return a;
  }
  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::size_t n_;
  std::vector<std::uint64_t> words_;
};

inline Relation to_relation(const Partition& p) {
  Relation r(p.size());
  for (const auto& block : p.blocks())
    for (State x : block)
      for (State y : block) r.insert(x, y);
  return r;
}

inline std::string format_partition(const Dfa& dfa, const Partition& p) {
  std::string out;
  for (const auto& block : p.blocks()) {
    out += "{";
    for (std::size_t i = 0; i < block.size(); ++i) out += (i ? "," : "") + dfa.name(block[i]);
    out += "}";
  }
  return out;
}

inline std::string format_relation(const Dfa& dfa, const Relation& r) {
  std::string out = "{";
  bool first = true;
  for (auto [x, y] : r.pairs()) {
    out += (first ? "(" : ",(") + dfa.name(x) + "," + dfa.name(y) + ")";
    first = false;
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// Semantics

/// Membership of a word (sequence of symbols) in the language of x.
inline bool lang_query(const Dfa& dfa, State x, const std::vector<std::string>& word) {
  for (const auto& sym : word) x = dfa.next(x, dfa.symbol(sym));
  return dfa.out(x);
}

/// Same, for alphabets whose symbols are single characters.
inline bool lang_query(const Dfa& dfa, State x, std::string_view word) {
  std::vector<std::string> w;
  for (char c : word) w.emplace_back(1, c);
  return lang_query(dfa, x, w);
}

/// Ground truth: breadth-first search of the product automaton from (x,y).
inline bool lang_equiv_oracle(const Dfa& dfa, State x, State y) {
  const std::size_t n = dfa.states();
  std::vector<bool> seen(n * n, false);
  std::queue<std::pair<State, State>> q;
  q.emplace(x, y);
  seen[std::size_t(x) * n + y] = true;
  while (!q.empty()) {
    auto [p, r] = q.front();
    q.pop();
    if (dfa.out(p) != dfa.out(r)) return false;
    for (std::size_t a = 0; a < dfa.symbols(); ++a) {
      State p2 = dfa.next(p, a), r2 = dfa.next(r, a);
      if (!seen[std::size_t(p2) * n + r2]) {
        seen[std::size_t(p2) * n + r2] = true;
        q.emplace(p2, r2);
      }
    }
  }
  return true;
}

enum class RelOp { b, bstar, bsub, f };

/// b_*(R): pairs whose successors under every symbol lie in R.
inline Relation rel_bsub(const Dfa& dfa, const Relation& R) {
  Relation out(dfa.states());
  for (State x = 0; x < dfa.states(); ++x)
    for (State y = 0; y < dfa.states(); ++y) {
      bool ok = true;
      for (std::size_t a = 0; a < dfa.symbols() && ok; ++a)
        ok = R.contains(dfa.next(x, a), dfa.next(y, a));
      if (ok) out.insert(x, y);
    }
  return out;
}

/// b*(R): successor pairs of pairs in R.
inline Relation rel_bstar(const Dfa& dfa, const Relation& R) {
  Relation out(dfa.states());
  for (auto [x, y] : R.pairs())
    for (std::size_t a = 0; a < dfa.symbols(); ++a) out.insert(dfa.next(x, a), dfa.next(y, a));
  return out;
}

/// f: pairs with equal output (independent of the argument).
inline Relation rel_outputs(const Dfa& dfa) {
  Relation out(dfa.states());
  for (State x = 0; x < dfa.states(); ++x)
    for (State y = 0; y < dfa.states(); ++y)
      if (dfa.out(x) == dfa.out(y)) out.insert(x, y);
  return out;
}

inline Relation rel_transform(const Dfa& dfa, RelOp which, const Relation& R) {
  switch (which) {
    case RelOp::bsub: return rel_bsub(dfa, R);
    case RelOp::bstar: return rel_bstar(dfa, R);
    case RelOp::f: return rel_outputs(dfa);
    case RelOp::b: {
      Relation out(dfa.states());
      for (State x = 0; x < dfa.states(); ++x)
        for (State y = 0; y < dfa.states(); ++y) {
          if (dfa.out(x) != dfa.out(y)) continue;
          bool ok = true;
          for (std::size_t a = 0; a < dfa.symbols() && ok; ++a)
            ok = R.contains(dfa.next(x, a), dfa.next(y, a));
          if (ok) out.insert(x, y);
        }
      if (!(out == (rel_bsub(dfa, R) & rel_outputs(dfa))))
        throw std::logic_error("b differs from b_* meet f");
      return out;
    }
  }
  throw std::logic_error("unknown relation transformer");
}

/// Smallest equivalence relation containing R.
inline Partition equiv_close(const Relation& R, std::size_t n_states) {
  Partition p(n_states);
  for (auto [x, y] : R.pairs()) p.unite(x, y);
  return p;
}

inline bool is_b_simulation(const Dfa& dfa, const Relation& R) {
  return R.subset_of(rel_transform(dfa, RelOp::b, R));
}

inline bool is_b_simulation_upto_e(const Dfa& dfa, const Relation& R) {
  return R.subset_of(rel_transform(dfa, RelOp::b, to_relation(equiv_close(R, dfa.states()))));
}

// ---------------------------------------------------------------------------
// Algorithms

enum class EquivAlgo { naive, naive_upto, hk, oracle };

inline std::string_view algo_name(EquivAlgo a) {
  switch (a) {
    case EquivAlgo::naive: return "naive";
    case EquivAlgo::naive_upto: return "naive-upto";
    case EquivAlgo::hk: return "hk";
    case EquivAlgo::oracle: return "oracle";
  }
  return "?";
}

struct EquivRunTrace {
  EquivAlgo algorithm = EquivAlgo::naive;
  std::size_t visited = 0;    // pairs inserted into R (for HK: unions performed)
  std::size_t extracted = 0;  // pairs taken from todo
  Relation relation;          // final R (for HK: the full equivalence relation)
  std::optional<Partition> partition;
  bool verdict = false;
  std::size_t invariant_checks = 0;
  bool invariant_held = true;
};

enum class UpTo { none, equivalence };

/// The naive coinductive check, optionally up to equivalence. todo is FIFO.
inline EquivRunTrace run_naive(const Dfa& dfa, State x1, State x2, UpTo upto) {
  const std::size_t n = dfa.states();
  EquivRunTrace tr;
  tr.algorithm = upto == UpTo::none ? EquivAlgo::naive : EquivAlgo::naive_upto;
  Relation R(n);
  Partition closure(n);  // e(R), maintained incrementally in the up-to variant
  std::deque<std::pair<State, State>> todo{{x1, x2}};
  bool verdict = true;
  while (!todo.empty()) {
    auto [p, q] = todo.front();
    todo.pop_front();
    ++tr.extracted;
    if (upto == UpTo::equivalence) {
      if (q < p) std::swap(p, q);
      if (closure.same(p, q)) continue;
    } else if (R.contains(p, q)) {
      continue;
    }
    if (dfa.out(p) != dfa.out(q)) {
      verdict = false;
      break;
    }
    for (std::size_t a = 0; a < dfa.symbols(); ++a) todo.emplace_back(dfa.next(p, a), dfa.next(q, a));
    R.insert(p, q);
    closure.unite(p, q);
    ++tr.visited;
  }
  tr.relation = R;
  tr.verdict = verdict;
  if (verdict) {
    bool closed = upto == UpTo::none ? is_b_simulation(dfa, R) : is_b_simulation_upto_e(dfa, R);
    bool has_query = upto == UpTo::none ? R.contains(x1, x2) : equiv_close(R, n).same(x1, x2);
    if (!closed || !has_query) throw std::logic_error("naive run ended without a valid witness");
  }
  return tr;
}

/// Hopcroft-Karp: no output test in the loop, R kept as an equivalence
/// (union-find), final verdict is R included in f. With `check_invariant`
/// the loop-head invariant  e(b*(R) join i) == e(R join todo)  is checked.
inline EquivRunTrace run_hk(const Dfa& dfa, State x1, State x2, bool check_invariant = false) {
  const std::size_t n = dfa.states();
  EquivRunTrace tr;
  tr.algorithm = EquivAlgo::hk;
  Partition R(n);
  std::deque<std::pair<State, State>> todo{{x1, x2}};
  Relation initial(n);
  initial.insert(x1, x2);

  auto invariant = [&] {
    Relation lhs = rel_bstar(dfa, to_relation(R)) | initial;
    Relation rhs = to_relation(R);
    for (auto [p, q] : todo) rhs.insert(p, q);
    return equiv_close(lhs, n) == equiv_close(rhs, n);
  };

  for (;;) {
    if (check_invariant) {
      ++tr.invariant_checks;
      if (!invariant()) tr.invariant_held = false;
    }
    if (todo.empty()) break;
    auto [p, q] = todo.front();
    todo.pop_front();
    ++tr.extracted;
    if (R.same(p, q)) continue;
    for (std::size_t a = 0; a < dfa.symbols(); ++a) todo.emplace_back(dfa.next(p, a), dfa.next(q, a));
    R.unite(p, q);
    ++tr.visited;
  }
  tr.relation = to_relation(R);
  tr.verdict = tr.relation.subset_of(rel_outputs(dfa));
  tr.partition = std::move(R);
  return tr;
}

inline EquivRunTrace run_oracle(const Dfa& dfa, State x1, State x2) {
  EquivRunTrace tr;
  tr.algorithm = EquivAlgo::oracle;
  tr.relation = Relation(dfa.states());
  tr.verdict = lang_equiv_oracle(dfa, x1, x2);
  return tr;
}

inline EquivRunTrace run_equiv(const Dfa& dfa, State x1, State x2, EquivAlgo algo,
                               bool check_invariant = false) {
  switch (algo) {
    case EquivAlgo::naive: return run_naive(dfa, x1, x2, UpTo::none);
    case EquivAlgo::naive_upto: return run_naive(dfa, x1, x2, UpTo::equivalence);
    case EquivAlgo::hk: return run_hk(dfa, x1, x2, check_invariant);
    case EquivAlgo::oracle: return run_oracle(dfa, x1, x2);
  }
  throw std::logic_error("unknown algorithm");
}

/// Least fixed point of e.(b* join i) in the lattice of equivalence
/// relations, by Kleene iteration from the identity partition.
inline Partition abstract_lfp(const Dfa& dfa, const Relation& i) {
  const std::size_t n = dfa.states();
  Partition cur(n);
  for (;;) {
    Partition next = equiv_close(rel_bstar(dfa, to_relation(cur)) | i, n);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

/// Descending Kleene chain of b from the full relation, distinct iterates.
/// Every iterate is an equivalence relation.
inline std::vector<Partition> partition_refine(const Dfa& dfa) {
  const std::size_t n = dfa.states();
  auto as_partition = [&](const Relation& r) {
    if (!r.is_equivalence()) throw std::logic_error("refinement iterate is not an equivalence");
    return equiv_close(r, n);
  };
  Relation cur = Relation::full(n);
  std::vector<Partition> chain{as_partition(cur)};
  for (;;) {
    Relation next = rel_transform(dfa, RelOp::b, cur);
    if (next == cur) return chain;
    chain.push_back(as_partition(next));
    cur = std::move(next);
  }
}

// ---------------------------------------------------------------------------
// Input and generators

/// DFA files:
///   states <n> | states <name> <name> ...
///   alphabet <sym> <sym> ...
///   final <state> ...
///   trans <from> <sym> <to>
inline Dfa parse_dfa(std::istream& in, const std::string& source = "<input>") {
  std::vector<std::string> names, alphabet;
  std::vector<std::string> finals;
  struct T { std::string from, sym, to; std::size_t line; };
  std::vector<T> trans;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream is(line);
    std::vector<std::string> toks;
    for (std::string t; is >> t;) toks.push_back(t);
    if (toks.empty()) continue;
    auto fail = [&](const std::string& msg) {
      throw Error(Errc::Parse, source + ":" + std::to_string(lineno) + ": " + msg);
    };
    const auto& kw = toks[0];
    if (kw == "states") {
      if (toks.size() < 2) fail("expected 'states <n>' or a list of state names");
      bool numeric = toks.size() == 2 && toks[1].find_first_not_of("0123456789") == std::string::npos;
      if (numeric) {
        std::size_t n = std::stoul(toks[1]);
        for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
      } else {
        names.assign(toks.begin() + 1, toks.end());
      }
    } else if (kw == "alphabet") {
      if (toks.size() < 2) fail("alphabet must be non-empty");
      alphabet.assign(toks.begin() + 1, toks.end());
    } else if (kw == "final") {
      finals.insert(finals.end(), toks.begin() + 1, toks.end());
    } else if (kw == "trans") {
      if (toks.size() != 4) fail("expected 'trans <from> <sym> <to>'");
      trans.push_back({toks[1], toks[2], toks[3], lineno});
    } else {
      fail("unknown directive '" + kw + "'");
    }
  }
  if (names.empty()) throw Error(Errc::Parse, source + ": missing 'states'");
  if (alphabet.empty()) throw Error(Errc::Parse, source + ": missing 'alphabet'");
  std::unordered_map<std::string, State> sidx;
  for (std::size_t i = 0; i < names.size(); ++i) sidx.emplace(names[i], State(i));
  std::unordered_map<std::string, std::size_t> aidx;
  for (std::size_t i = 0; i < alphabet.size(); ++i) aidx.emplace(alphabet[i], i);
  auto state_of = [&](const std::string& s, std::size_t lineno) {
    auto it = sidx.find(s);
    if (it == sidx.end())
      throw Error(Errc::UnknownState, source + ":" + std::to_string(lineno) + ": unknown state '" + s + "'");
    return it->second;
  };
  std::vector<bool> out(names.size(), false);
  for (const auto& f : finals) out[state_of(f, 0)] = true;
  const State unset = State(-1);
  std::vector<State> table(names.size() * alphabet.size(), unset);
  for (const auto& t : trans) {
    State from = state_of(t.from, t.line), to = state_of(t.to, t.line);
    auto a = aidx.find(t.sym);
    if (a == aidx.end())
      throw Error(Errc::UnknownSymbol, source + ":" + std::to_string(t.line) + ": unknown symbol '" + t.sym + "'");
    auto& slot = table[from * alphabet.size() + a->second];
    if (slot != unset && slot != to)
      throw Error(Errc::Parse, source + ":" + std::to_string(t.line) + ": nondeterministic transition");
    slot = to;
  }
  for (std::size_t s = 0; s < names.size(); ++s)
    for (std::size_t a = 0; a < alphabet.size(); ++a)
      if (table[s * alphabet.size() + a] == unset)
        throw Error(Errc::Parse, source + ": no transition from " + names[s] + " on " + alphabet[a]);
  return Dfa(std::move(names), std::move(alphabet), std::move(out), std::move(table));
}

inline Dfa load_dfa(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Parse, "cannot open " + path);
  return parse_dfa(in, path);
}

inline Dfa random_dfa(std::mt19937_64& rng, std::size_t n, std::size_t symbols) {
  std::vector<std::string> names, alphabet;
  for (std::size_t i = 0; i < n; ++i) names.push_back("q" + std::to_string(i));
  for (std::size_t a = 0; a < symbols; ++a) alphabet.push_back(std::string(1, char('a' + a)));
  std::uniform_int_distribution<State> pick(0, State(n - 1));
  std::bernoulli_distribution fin(0.5);
  std::vector<bool> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = fin(rng);
  std::vector<State> t(n * symbols);
  for (auto& s : t) s = pick(rng);
  return Dfa(std::move(names), std::move(alphabet), std::move(out), std::move(t));
}

inline Relation random_relation(std::mt19937_64& rng, std::size_t n, double density = 0.3) {
  std::bernoulli_distribution keep(density);
  Relation r(n);
  for (State x = 0; x < n; ++x)
    for (State y = 0; y < n; ++y)
      if (keep(rng)) r.insert(x, y);
  return r;
}

/// Disjoint union of `d` with a state-permuted copy of itself; state x and
/// state n + perm[x] accept the same language. Returns the union and perm.
inline std::pair<Dfa, std::vector<State>> twin_dfa(std::mt19937_64& rng, const Dfa& d) {
  const std::size_t n = d.states(), k = d.symbols();
  std::vector<State> perm(n);
  std::iota(perm.begin(), perm.end(), State{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::string> names;
  std::vector<bool> out(2 * n);
  std::vector<State> t(2 * n * k);
  for (State x = 0; x < n; ++x) names.push_back(d.name(x));
  for (State x = 0; x < n; ++x) names.push_back(d.name(x) + "'");
  // copy state n + perm[x] mirrors x
  std::vector<std::string> copy_names(n);
  for (State x = 0; x < n; ++x) copy_names[perm[x]] = d.name(x) + "'";
  for (State i = 0; i < n; ++i) names[n + i] = copy_names[i];
  for (State x = 0; x < n; ++x) {
    out[x] = d.out(x);
    out[n + perm[x]] = d.out(x);
    for (std::size_t a = 0; a < k; ++a) {
      t[x * k + a] = d.next(x, a);
      t[(n + perm[x]) * k + a] = State(n + perm[d.next(x, a)]);
    }
  }
  return {Dfa(std::move(names), d.alphabet(), std::move(out), std::move(t)), perm};
}

}  // namespace uptolab

#endif  // UPTOLAB_AUTOMATA_HPP
