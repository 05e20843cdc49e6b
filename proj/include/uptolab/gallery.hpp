#ifndef UPTOLAB_GALLERY_HPP
#define UPTOLAB_GALLERY_HPP

// Worked examples with their expected outcomes. Each fixture lists its
// expectations as data (claim, expected rendering, where the claim comes
// from) and a routine that computes the actual renderings through the
// library. Output is deterministic for a given seed.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "uptolab/automata.hpp"
#include "uptolab/checker.hpp"
#include "uptolab/flow.hpp"
#include "uptolab/lattice.hpp"
#include "uptolab/lattice_io.hpp"
#include "uptolab/report.hpp"
#include "uptolab/sign.hpp"
#include "uptolab/toy.hpp"

namespace uptolab {

struct Expectation {
  std::string claim;
  std::string expected;
  std::string source;
};

struct ClaimResult {
  std::string claim;
  std::string expected;
  std::string actual;
  std::string source;
  bool pass() const { return expected == actual; }
};

using Actuals = std::map<std::string, std::string>;

struct Fixture {
  std::string id;
  std::string title;
  std::vector<Expectation> expected;
  std::function<Actuals(std::uint64_t seed)> compute;
};

struct FixtureResult {
  std::string id;
  std::string title;
  std::vector<ClaimResult> claims;
  bool pass() const {
    for (const auto& c : claims)
      if (!c.pass()) return false;
    return true;
  }
};

// ---------------------------------------------------------------------------
// Fixture payloads

inline const char* chain_counterexample_source() {
  return "elem bot\nelem 1\nelem 2\nelem 3\nelem 4\nelem top\n"
         "cover bot 1\ncover 1 2\ncover 2 3\ncover 3 4\ncover 4 top\n"
         "map b bot bot\nmap b 1 bot\nmap b 2 3\nmap b 3 3\nmap b 4 4\nmap b top top\n"
         "map bsub bot 1\nmap bsub 1 1\nmap bsub 2 1\nmap bsub 3 3\nmap bsub 4 4\nmap bsub top top\n"
         "map a bot 2\nmap a 1 2\nmap a 2 2\nmap a 3 3\nmap a 4 4\nmap a top top\n"
         "map a2 bot 3\nmap a2 1 3\nmap a2 2 3\nmap a2 3 3\nmap a2 4 4\nmap a2 top top\n";
}

// Reading of the drawing: dashed lines x-u, y-v, z-w, z-v; the dotted line
// is y-w. x goes to y and y to z on both letters, z loops; u goes to v on a
// and to w on b, and v, w swap on both letters.
inline const char* dfa_example_source() {
  return "states x y z v w u\nalphabet a b\nfinal y z v w\n"
         "trans x a y\ntrans x b y\ntrans y a z\ntrans y b z\ntrans z a z\ntrans z b z\n"
         "trans u a v\ntrans u b w\ntrans v a w\ntrans v b w\ntrans w a v\ntrans w b v\n";
}

inline Dfa dfa_example() {
  std::istringstream in(dfa_example_source());
  return parse_dfa(in, "dfa-example");
}

inline Relation dfa_example_dashed(const Dfa& d) {
  auto s = [&](const char* n) { return d.state(n); };
  return Relation::from_pairs(d.states(), {{s("x"), s("u")}, {s("y"), s("v")}, {s("z"), s("w")}, {s("z"), s("v")}});
}

namespace detail {

inline std::string yes(bool b) { return b ? "true" : "false"; }

inline std::string join_names(const FiniteLattice& L, const std::vector<Elem>& xs) {
  std::string out;
  for (Elem x : xs) out += (out.empty() ? "" : ", ") + L.name(x);
  return out;
}

inline std::string join_preds(const std::vector<IntPred>& ps) {
  std::string out;
  for (const auto& p : ps) out += (out.empty() ? "" : ", ") + p.str();
  return out;
}

inline Actuals compute_chain_counterexample(std::uint64_t) {
  auto lf = parse_lattice_string(chain_counterexample_source());
  const auto& Lp = lf.lattice;
  const auto& L = *Lp;
  auto el = [&](const char* n) { return *L.find(n); };
  auto b = lf.map("b"), bsub = lf.map("bsub");
  auto a = closure_from_map(lf.map("a"));
  auto a2 = closure_from_map(lf.map("a2"));
  auto ib = pointwise_join(constant_map(Lp, el("1")), b);
  auto g = pointwise_meet(bsub, constant_map(Lp, el("4")));

  Actuals act;
  auto mu_chain = kleene_iterates(ib, Extremum::least);
  act["lfp chain of i join b*"] = join_names(L, mu_chain);
  act["a(lfp(i join b*))"] = L.name(a(mu_chain.back()));
  auto amu_chain = kleene_iterates(compose(a.map(), ib), Extremum::least);
  act["lfp chain of a(i join b*)"] = join_names(L, amu_chain);
  act["gfp chain of b_* meet f"] = join_names(L, kleene_iterates(g, Extremum::greatest));
  act["gfp of (b_* meet f) a"] = L.name(gfp(compose(g, a.map())));
  act["b* left adjoint of b_*"] = yes(is_adjunction(b, bsub));
  act["a complete for i join b*"] = yes(law_report(a, ib).complete);
  act["a sound for b_* meet f"] = yes(law_report(a, g).sound);
  act["a compatible with b_* meet f"] = yes(law_report(a, g).compatible);
  for (const char* f : {"top", "4", "3", "2"})
    act[std::string("a locally complete at f=") + f] = yes(local_completeness(a, ib, el(f)));
  act["a2 complete for i join b*"] = yes(law_report(a2, ib).complete);
  act["a below a2"] = yes(pointwise_leq(a.map(), a2.map()));

  auto comp = companion(g);
  act["companion chain of b_* meet f"] = join_names(L, comp.chain);
  act["companion domain of b_* meet f"] = format_set(L, comp.closure.pre_fixed());
  for (const char* f : {"top", "4", "3"}) {
    auto fc = f_companion(bsub, el(f));
    act[std::string("f-companion domain at f=") + f] = format_set(L, fc.sublattice);
    auto nb = b_gfp(bsub, el(f));
    act[std::string("gfp of B equals f-companion at f=") + f] = yes(nb.closure.map() == fc.closure.map());
    act["monotone maps enumerated"] = std::to_string(nb.maps_enumerated);
  }
  auto pc = power_closures(b);
  act["b* up-power at 1"] = L.name(pc.up(el("1")));
  act["b* up-power at 2"] = L.name(pc.up(el("2")));

  AdjointPair pair{b, bsub};
  try {
    act["duality for a at f=4"] = yes(duality_check(pair, a, el("4"), L.size()));
  } catch (const Error& e) {
    act["duality for a at f=4"] = std::string(errc_name(e.code()));
  }
  act["duality for a2 at f=4"] = yes(duality_check(pair, a2, el("4"), L.size()));
  return act;
}

inline Actuals compute_dfa_example(std::uint64_t seed) {
  Dfa d = dfa_example();
  State x = d.state("x"), u = d.state("u"), y = d.state("y"), w = d.state("w");
  Actuals act;
  act["x accepts the empty word"] = yes(lang_query(d, x, std::string_view("")));
  act["x accepts a"] = yes(lang_query(d, x, std::string_view("a")));
  for (auto algo : {EquivAlgo::oracle, EquivAlgo::naive, EquivAlgo::naive_upto, EquivAlgo::hk}) {
    act["x ~ u by " + std::string(algo_name(algo))] = yes(run_equiv(d, x, u, algo).verdict);
    act["x ~ y by " + std::string(algo_name(algo))] = yes(run_equiv(d, x, y, algo).verdict);
  }
  auto naive = run_naive(d, x, u, UpTo::none);
  auto upto = run_naive(d, x, u, UpTo::equivalence);
  auto hk = run_hk(d, x, u, true);
  act["naive relation"] = format_relation(d, naive.relation);
  act["naive stored pairs"] = std::to_string(naive.visited);
  act["naive up to e stored pairs"] = std::to_string(upto.visited);
  act["up to e stores fewer pairs"] = yes(upto.visited < naive.visited);
  act["hk unions"] = std::to_string(hk.visited);
  act["hk partition"] = format_partition(d, *hk.partition);
  act["hk loop invariant held"] = yes(hk.invariant_held && hk.invariant_checks > 0);
  Relation i(d.states());
  i.insert(x, u);
  act["hk partition equals abstract lfp"] = yes(*hk.partition == abstract_lfp(d, i));

  Relation dashed = dfa_example_dashed(d);
  act["dashed is a b-simulation"] = yes(is_b_simulation(d, dashed));
  act["dashed is a b-simulation up to e"] = yes(is_b_simulation_upto_e(d, dashed));
  act["(y,w) in e(dashed)"] = yes(equiv_close(dashed, d.states()).same(y, w));
  act["(x,u) in b(dashed)"] = yes(rel_transform(d, RelOp::b, dashed).contains(x, u));
  act["b*{(x,u)}"] = format_relation(d, rel_bstar(d, i));

  std::string chain;
  auto refine = partition_refine(d);
  for (const auto& p : refine) chain += (chain.empty() ? "" : " > ") + format_partition(d, p);
  act["refinement chain"] = chain;
  act["refinement ends in language equivalence"] = [&] {
    for (State p = 0; p < d.states(); ++p)
      for (State q = 0; q < d.states(); ++q)
        if (refine.back().same(p, q) != lang_equiv_oracle(d, p, q)) return "false";
    return "true";
  }();

  std::mt19937_64 rng(seed);
  bool adj = true, e_compat = true;
  Relation f = rel_outputs(d);
  for (int k = 0; k < 200; ++k) {
    Relation R = random_relation(rng, d.states()), S = random_relation(rng, d.states());
    adj = adj && (rel_bstar(d, R).subset_of(S) == R.subset_of(rel_bsub(d, S)));
    Relation eR = to_relation(equiv_close(R, d.states()));
    e_compat = e_compat && to_relation(equiv_close(rel_bsub(d, R), d.states())).subset_of(rel_bsub(d, eR));
  }
  act["b* left adjoint of b_* on samples"] = yes(adj);
  act["e compatible with b_* on samples"] = yes(e_compat);
  act["e(f) included in f"] = yes(to_relation(equiv_close(f, d.states())).subset_of(f));
  return act;
}

inline Actuals compute_toy_countdown(std::uint64_t seed) {
  Actuals act;
  act["concrete chain of b"] = join_preds(toy_concrete_chain());
  act["sign chain of s b"] = join_preds(toy_sign_chain());
  auto sys = toy_flow_system();
  auto conc = solve_flow<ConcreteDomain>(sys);
  auto sign = solve_flow<SignDomain>(sys);
  for (const char* v : {"x2", "x5"}) {
    act[std::string("concrete ") + v] = conc.values[sys.index(v)].str();
    act[std::string("sign ") + v] = sign_name(sign.values[sys.index(v)]);
  }
  std::vector<IntPred> trace_x2(sign.traces[sys.index("x2")].size());
  for (std::size_t k = 0; k < trace_x2.size(); ++k) trace_x2[k] = concretize(sign.traces[sys.index("x2")][k]);
  act["sign trace of x2"] = join_preds(trace_x2);
  act["sign x5 within {0}"] = yes(concretize(sign.values[sys.index("x5")]).subset_of(IntPred::point(0)));
  for (const auto& item : sign_report()) {
    act["report " + item.key] = item.pass ? "pass" : "fail";
    for (const auto& [k, v] : item.values) act["report " + item.key + " " + k] = v;
  }
  act["b_*([3,5])"] = toy_transform(ToyOp::bsub, IntPred::range(3, 5)).str();
  act["alpha({5,6})"] = sign_name(abstract_sign(IntPred::of({5, 6})));
  act["alpha({-2,3})"] = sign_name(abstract_sign(IntPred::of({-2, 3})));

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(-8, 8);
  auto sample = [&] {
    std::vector<IntPred::Interval> iv;
    for (int k = 0; k < 2; ++k) {
      int lo = pick(rng), hi = lo + std::abs(pick(rng)) / 2;
      iv.push_back({lo, hi});
    }
    if (pick(rng) > 5) iv.push_back({IntPred::kNegInf, pick(rng)});
    if (pick(rng) > 5) iv.push_back({pick(rng), IntPred::kPosInf});
    return IntPred::from_intervals(iv);
  };
  bool adj = true, above = true, formula_adj = true;
  for (int k = 0; k < 200; ++k) {
    IntPred P = sample(), Q = sample();
    adj = adj && (toy_transform(ToyOp::bstar, P).subset_of(Q) == P.subset_of(toy_bstar_right_adjoint(Q)));
    formula_adj = formula_adj &&
                  (toy_transform(ToyOp::bstar, P).subset_of(Q) == P.subset_of(toy_transform(ToyOp::bsub, Q)));
    above = above && toy_bstar_right_adjoint(Q).subset_of(toy_transform(ToyOp::bsub, Q));
  }
  act["b* left adjoint of (-inf,0] U (P+1) on samples"] = yes(adj);
  act["b_* contains the exact right adjoint on samples"] = yes(above);
  act["b_* is the right adjoint of b* on samples"] = yes(formula_adj);
  act["b_*({}) versus exact adjoint"] =
      toy_transform(ToyOp::bsub, IntPred::empty()).str() + " vs " + toy_bstar_right_adjoint(IntPred::empty()).str();
  return act;
}

// Relations on the two states p (not final) and q (final) of the automaton
// p -a-> q -a-> p, as the sixteen-element powerset of the pairs.
inline Actuals compute_rel_lattice(std::uint64_t) {
  const std::size_t n = 2;
  const State next[2] = {1, 0};
  const bool out[2] = {false, true};
  auto bit = [&](State x, State y) { return 1u << (x * n + y); };
  std::vector<std::string> names;
  for (unsigned m = 0; m < 16; ++m) {
    std::string s = "{";
    for (State x = 0; x < n; ++x)
      for (State y = 0; y < n; ++y)
        if (m & bit(x, y)) s += std::string(s.size() > 1 ? "," : "") + "pq"[x] + "pq"[y];
    names.push_back(s + "}");
  }
  auto Lp = powerset_lattice(4, names);
  auto table = [&](auto fn) {
    std::vector<Elem> t(16);
    for (unsigned m = 0; m < 16; ++m) t[m] = fn(m);
    return t;
  };
  auto has = [&](unsigned m, State x, State y) { return (m & bit(x, y)) != 0; };
  std::vector<Elem> raw_r = table([&](unsigned) { return bit(0, 0) | bit(1, 1); });
  std::vector<Elem> raw_s = table([&](unsigned m) {
    unsigned o = 0;
    for (State x = 0; x < n; ++x)
      for (State y = 0; y < n; ++y)
        if (has(m, x, y)) o |= bit(y, x);
    return o;
  });
  std::vector<Elem> raw_t = table([&](unsigned m) {
    unsigned o = 0;
    for (State x = 0; x < n; ++x)
      for (State y = 0; y < n; ++y)
        for (State z = 0; z < n; ++z)
          if (has(m, x, y) && has(m, y, z)) o |= bit(x, z);
    return o;
  });
  MonotoneMap r(Lp, raw_r), s(Lp, raw_s), t(Lp, raw_t);
  MonotoneMap bsub(Lp, table([&](unsigned m) {
    unsigned o = 0;
    for (State x = 0; x < n; ++x)
      for (State y = 0; y < n; ++y)
        if (has(m, next[x], next[y])) o |= bit(x, y);
    return o;
  }));
  Elem f = 0;
  for (State x = 0; x < n; ++x)
    for (State y = 0; y < n; ++y)
      if (out[x] == out[y]) f |= bit(x, y);
  MonotoneMap e(Lp, table([&](unsigned m) {
    Relation R(n);
    for (State x = 0; x < n; ++x)
      for (State y = 0; y < n; ++y)
        if (has(m, x, y)) R.insert(x, y);
    unsigned o = 0;
    for (auto [x, y] : to_relation(equiv_close(R, n)).pairs()) o |= bit(x, y);
    return o;
  }));

  Actuals act;
  auto generator = pointwise_join(pointwise_join(identity_map(Lp), r), pointwise_join(s, t));
  act["e equals (id join r join s join t) up-power"] = yes(power_closures(generator).up == e);
  act["e is an up-closure"] = yes(classify_map(e).up_closure);
  act["r is an up-closure"] = yes(classify_map(r).up_closure);
  act["s is an up-closure"] = yes(classify_map(s).up_closure);
  act["t is an up-closure"] = yes(classify_map(t).up_closure);
  act["r, s, t compatible with b_*"] =
      yes(is_compatible(r, bsub) && is_compatible(s, bsub) && is_compatible(t, bsub));
  act["e is (b_*, f)-compatible"] = yes(bf_compatibility(e, bsub, f));
  auto fc = f_companion(bsub, f);
  act["f-companion domain"] = format_set(*Lp, fc.sublattice);
  act["e below the f-companion"] = yes(pointwise_leq(e, fc.closure.map()));
  auto pair = adjoint_of(bsub, AdjointSide::left_of);
  act["duality for e"] = yes(duality_check(pair, closure_from_map(e), f, 16));
  return act;
}

}  // namespace detail

inline std::vector<Fixture> gallery_fixtures() {
  const std::string cex = "incompleteness counterexample on the six-element chain";
  const std::string loc = "local completeness on the six-element chain";
  const std::string cmp = "companions and the second-order operator on the six-element chain";
  const std::string dfa = "language equivalence example with two simulations";
  const std::string alg = "naive and Hopcroft-Karp runs on the example automaton";
  const std::string toy = "countdown program analysed in the sign domain";
  const std::string rel = "equivalence closure as an up-to technique on relations";
  std::vector<Fixture> out;

  out.push_back({"chain-counterexample",
                 "six-element chain with i=1 and f=4",
                 {
                     {"lfp chain of i join b*", "bot, 1", cex + ": Kleene chain of i join b*"},
                     {"a(lfp(i join b*))", "2", cex + ": a applied to the least fixed point"},
                     {"lfp chain of a(i join b*)", "bot, 2, 3", cex + ": chain of the abstracted map"},
                     {"gfp chain of b_* meet f", "top, 4", cex + ": descending chain of b_* meet f"},
                     {"gfp of (b_* meet f) a", "4", cex + ": up-to fixed point equals the original"},
                     {"b* left adjoint of b_*", "true", cex + ": dashed and dotted maps form an adjoint pair"},
                     {"a complete for i join b*", "false", cex + ": a is not complete"},
                     {"a sound for b_* meet f", "true", cex + ": a is a sound up-to technique"},
                     {"a compatible with b_* meet f", "false", cex + ": soundness without compatibility"},
                     {"a locally complete at f=top", "true", loc + ": holds for f in {top,4,3}"},
                     {"a locally complete at f=4", "true", loc + ": holds for f in {top,4,3}"},
                     {"a locally complete at f=3", "true", loc + ": holds for f in {top,4,3}"},
                     {"a locally complete at f=2", "false", loc + ": fails for f=2"},
                     {"a2 complete for i join b*", "true", loc + ": the larger closure with fixed points {3,4,top}"},
                     {"a below a2", "true", loc + ": completeness is not closed downwards"},
                     {"companion chain of b_* meet f", "top, 4", cmp + ": companion chain"},
                     {"companion domain of b_* meet f", "{4,top}", cmp + ": companion domain"},
                     {"f-companion domain at f=top", "{top}", cmp + ": f-companion generators"},
                     {"f-companion domain at f=4", "{4,top}", cmp + ": f-companion generators"},
                     {"f-companion domain at f=3", "{3,top}", cmp + ": f-companion generators"},
                     {"gfp of B equals f-companion at f=top", "true", cmp + ": greatest fixed point of B"},
                     {"gfp of B equals f-companion at f=4", "true", cmp + ": greatest fixed point of B"},
                     {"gfp of B equals f-companion at f=3", "true", cmp + ": greatest fixed point of B"},
                     {"monotone maps enumerated", "462", cmp + ": monotone self-maps of a six-element chain"},
                     {"b* up-power at 1", "1", cex + ": orbit of 1 under b* is {1, bot}"},
                     {"b* up-power at 2", "3", cex + ": orbit of 2 under b* is {2, 3}"},
                     {"duality for a at f=4", "PreconditionFailed", cex + ": a is not fully complete for b*"},
                     {"duality for a2 at f=4", "true", loc + ": iterates of b_* meet f stay in Pre(a2)"},
                 },
                 detail::compute_chain_counterexample});

  out.push_back({"dfa-example",
                 "automaton with states x y z v w u over {a,b}",
                 {
                     {"x accepts the empty word", "false", dfa + ": x is not final"},
                     {"x accepts a", "true", dfa + ": x reaches the final state y"},
                     {"x ~ u by oracle", "true", dfa + ": x and u are equivalent"},
                     {"x ~ u by naive", "true", alg},
                     {"x ~ u by naive-upto", "true", alg},
                     {"x ~ u by hk", "true", alg},
                     {"x ~ y by oracle", "false", dfa + ": the empty word separates x and y"},
                     {"x ~ y by naive", "false", alg},
                     {"x ~ y by naive-upto", "false", alg},
                     {"x ~ y by hk", "false", alg + ": the final relation is not inside f"},
                     {"naive relation", "{(x,u),(y,v),(y,w),(z,v),(z,w)}", dfa + ": dashed and dotted lines"},
                     {"naive stored pairs", "5", alg + ": breadth-first witness"},
                     {"naive up to e stored pairs", "4", alg + ": equivalence closure skips one pair"},
                     {"up to e stores fewer pairs", "true", alg + ": up-to witnesses are smaller"},
                     {"hk unions", "4", alg + ": at most n-1 unions"},
                     {"hk partition", "{x,u}{y,z,v,w}", alg + ": final equivalence"},
                     {"hk loop invariant held", "true", alg + ": loop invariant at every loop head"},
                     {"hk partition equals abstract lfp", "true", alg + ": final relation is the abstract least fixed point"},
                     {"dashed is a b-simulation", "false", dfa + ": (y,w) is missing"},
                     {"dashed is a b-simulation up to e", "true", dfa + ": dashed lines alone suffice up to e"},
                     {"(y,w) in e(dashed)", "true", dfa + ": (y,w) is in the equivalence closure"},
                     {"(x,u) in b(dashed)", "false", dfa + ": (x,u) is not in b(R)"},
                     {"b*{(x,u)}", "{(y,v),(y,w)}", dfa + ": successors of (x,u)"},
                     {"refinement chain", "{x,y,z,v,w,u} > {x,u}{y,z,v,w}", dfa + ": partition refinement from top"},
                     {"refinement ends in language equivalence", "true", dfa + ": the chain ends in language equivalence"},
                     {"b* left adjoint of b_* on samples", "true", dfa + ": adjunction on relations"},
                     {"e compatible with b_* on samples", "true", rel + ": e is compatible with b_*"},
                     {"e(f) included in f", "true", rel + ": f is an equivalence"},
                 },
                 detail::compute_dfa_example});

  out.push_back({"toy-countdown",
                 "x := 5; while x > 0 do x := x - 1",
                 {
                     {"concrete chain of b", "{}, {5}, [4,5], [3,5], [2,5], [1,5], [0,5]", toy + ": concrete Kleene chain"},
                     {"sign chain of s b", "{}, [1,inf), [0,inf)", toy + ": abstract Kleene chain"},
                     {"concrete x2", "[0,5]", toy + ": loop head"},
                     {"concrete x5", "{0}", toy + ": after the loop x is 0"},
                     {"sign x2", "[0,inf)", toy + ": loop head in the sign domain"},
                     {"sign x5", "{0}", toy + ": after the loop in the sign domain"},
                     {"sign trace of x2", "{}, [1,inf), [0,inf)", toy + ": flow solver reaches the abstract fixed point"},
                     {"sign x5 within {0}", "true", toy + ": after the loop x has value 0"},
                     {"report complete", "pass", toy + ": s(mu b) = mu(s b)"},
                     {"report complete mu b", "[0,5]", toy + ": least fixed point of b"},
                     {"report complete s(mu b)", "[0,inf)", toy},
                     {"report complete mu(s b)", "[0,inf)", toy},
                     {"report not-fully-complete", "pass", toy + ": s is not fully complete"},
                     {"report not-fully-complete x", "{3}", toy},
                     {"report not-fully-complete b*(s(x))", "[0,inf)", toy},
                     {"report not-fully-complete s(b*(x))", "[1,inf)", toy},
                     {"report not-compatible", "pass", toy + ": s is not compatible with b_* meet f"},
                     {"report not-compatible x", "{-3}", toy},
                     {"report not-compatible s((b_* & f)(x))", "[0,inf)", toy},
                     {"report not-compatible (b_* & f)(s(x))", "[0,1]", toy},
                     {"report upto-proof", "pass", toy + ": {5} is a post-fixed point up to s"},
                     {"report upto-proof s({5})", "[1,inf)", toy},
                     {"report upto-proof (b_* & f)(s({5}))", "[0,inf)", toy},
                     {"report local-complete", "pass", toy + ": s is below the f-companion"},
                     {"report local-complete domain", "Z; [0,inf)", toy + ": f-companion domain"},
                     {"b_*([3,5])", "(-inf,1] U [4,6]", toy + ": right adjoint of b*"},
                     {"alpha({5,6})", "[1,inf)", toy + ": abstraction of {5,6}"},
                     {"alpha({-2,3})", "(-inf,-1] U [1,inf)", toy + ": least sign containing both"},
                     {"b* left adjoint of (-inf,0] U (P+1) on samples", "true", toy + ": exact right adjoint of b*"},
                     {"b_* contains the exact right adjoint on samples", "true", toy + ": the b_* formula over-approximates the adjoint"},
                     {"b_* is the right adjoint of b* on samples", "false", toy + ": the b_* formula also contains 1 when 0 is not in P"},
                     {"b_*({}) versus exact adjoint", "(-inf,1] vs (-inf,0]", toy + ": the two differ exactly at 1"},
                 },
                 detail::compute_toy_countdown});

  out.push_back({"rel-lattice",
                 "relations on a two-state automaton p -a-> q -a-> p, q final",
                 {
                     {"e equals (id join r join s join t) up-power", "true", rel + ": e as the up-power of its components"},
                     {"e is an up-closure", "true", rel},
                     {"r is an up-closure", "false", rel + ": r, s, t are not up-closures"},
                     {"s is an up-closure", "false", rel + ": r, s, t are not up-closures"},
                     {"t is an up-closure", "false", rel + ": r, s, t are not up-closures"},
                     {"r, s, t compatible with b_*", "true", rel + ": componentwise compatibility"},
                     {"e is (b_*, f)-compatible", "true", rel + ": e is (b_*, f)-compatible"},
                     {"f-companion domain", "{{pp,qq},{pp,pq,qp,qq}}", rel + ": f-companion generators"},
                     {"e below the f-companion", "true", rel + ": compatible closures sit below the f-companion"},
                     {"duality for e", "true", rel + ": iterates of b_* meet f are equivalences"},
                 },
                 detail::compute_rel_lattice});
  return out;
}

inline std::vector<FixtureResult> run_gallery(const std::optional<std::string>& filter = std::nullopt,
                                              std::uint64_t seed = 0) {
  std::vector<FixtureResult> results;
  bool matched = false;
  for (const auto& fx : gallery_fixtures()) {
    if (filter && *filter != fx.id) continue;
    matched = true;
    Actuals act = fx.compute(seed);
    FixtureResult fr{fx.id, fx.title, {}};
    for (const auto& e : fx.expected) {
      auto it = act.find(e.claim);
      fr.claims.push_back({e.claim, e.expected, it == act.end() ? "<not computed>" : it->second, e.source});
    }
    results.push_back(std::move(fr));
  }
  if (filter && !matched) throw Error(Errc::UnknownFixture, "no fixture named '" + *filter + "'");
  return results;
}

inline std::string render_gallery(const std::vector<FixtureResult>& results) {
  std::string out;
  std::size_t total = 0, passed = 0;
  for (const auto& fr : results) {
    out += "fixture: " + fr.id + " (" + fr.title + ")\n";
    for (const auto& c : fr.claims) {
      ++total;
      passed += c.pass();
      out += std::string(c.pass() ? "  pass " : "  FAIL ") + c.claim + ": " + c.actual + "\n";
      if (!c.pass()) out += "       expected " + c.expected + " (" + c.source + ")\n";
    }
  }
  out += "claims: " + std::to_string(passed) + "/" + std::to_string(total) + " passed\n";
  return out;
}

inline Report::Json gallery_json(const std::vector<FixtureResult>& results) {
  Report::Json j = Report::Json::array();
  for (const auto& fr : results) {
    Report::Json claims = Report::Json::array();
    for (const auto& c : fr.claims)
      claims.push_back({{"claim", c.claim}, {"pass", c.pass()}, {"actual", c.actual},
                        {"expected", c.expected}, {"source", c.source}});
    j.push_back({{"fixture", fr.id}, {"title", fr.title}, {"pass", fr.pass()}, {"claims", claims}});
  }
  return j;
}

}  // namespace uptolab

#endif  // UPTOLAB_GALLERY_HPP
