#include <gtest/gtest.h>

#include "uptolab/checker.hpp"
#include "uptolab/lattice_io.hpp"

using namespace uptolab;

namespace {

struct Chain {
  LatticeFile lf = load_lattice(std::string(UPTOLAB_DATA_DIR) + "/cex61.lat");
  const LatticePtr& L = lf.lattice;
  MonotoneMap bstar = lf.map("b");
  MonotoneMap bsub = lf.map("bsub");
  ClosureOperator a = closure_from_map(lf.map("a"));
  ClosureOperator a2 = closure_from_map(lf.map("a2"));

  Elem at(const char* n) const { return L->at(n); }
  MonotoneMap i_join_bstar() const { return pointwise_join(constant_map(L, at("1")), bstar); }
  MonotoneMap bsub_meet(Elem f) const { return pointwise_meet(bsub, constant_map(L, f)); }
  ClosureOperator identity() const { return closure_from_map(identity_map(L)); }
};

std::vector<Elem> elems(const Chain& c, std::initializer_list<const char*> names) {
  std::vector<Elem> v;
  for (const char* n : names) v.push_back(c.at(n));
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST(LawReport, CounterexampleIncomplete) {
  Chain c;
  auto b = c.i_join_bstar();
  EXPECT_EQ(lfp(b), c.at("1"));
  EXPECT_EQ(c.a(lfp(b)), c.at("2"));
  EXPECT_EQ(kleene_iterates(compose(c.a.map(), b), Extremum::least), elems(c, {"bot", "2", "3"}));
  auto r = law_report(c.a, b);
  EXPECT_FALSE(r.complete);
  EXPECT_FALSE(r.fully_complete);
  EXPECT_TRUE(r.sound);
  EXPECT_TRUE(law_report(c.a, c.bsub_meet(c.at("4"))).sound);
}

TEST(LawReport, SmallerClosureIsComplete) {
  Chain c;
  auto b = c.i_join_bstar();
  EXPECT_TRUE(law_report(c.a2, b).complete);
  EXPECT_TRUE(pointwise_leq(c.a.map(), c.a2.map()));
  EXPECT_FALSE(law_report(c.a, b).complete);
}

TEST(LawReport, IdentityClosureAllTrue) {
  Chain c;
  for (const auto& b : {c.bstar, c.bsub, c.i_join_bstar()}) {
    auto r = law_report(c.identity(), b);
    EXPECT_TRUE(r.compatible && r.fully_complete && r.sound && r.complete && r.em_lifting_exists &&
                r.kl_extension_exists);
  }
}

TEST(LawReport, MethodIndependent) {
  Chain c;
  for (const auto& cl : {c.a, c.a2})
    for (const auto& b : {c.bstar, c.bsub, c.i_join_bstar()})
      EXPECT_EQ(law_report(cl, b, FixpointMethod::kleene), law_report(cl, b, FixpointMethod::tarski));
}

TEST(LawReport, DomainMismatch) {
  Chain c;
  auto other = chain_lattice({"p", "q"});
  try {
    law_report(c.a, identity_map(other));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DomainMismatch);
  }
}

TEST(BestAbstraction, IdentityClosureReturnsMap) {
  Chain c;
  auto b = c.i_join_bstar();
  auto abs = best_abstraction(c.identity(), b);
  EXPECT_EQ(abs.table(), b.table());
}

TEST(BestAbstraction, CounterexampleLeastFixpoint) {
  Chain c;
  auto abs = best_abstraction(c.a, c.i_join_bstar());
  const auto& A = *abs.lattice();
  std::vector<std::string> chain;
  for (Elem k : kleene_iterates(abs, Extremum::least)) chain.push_back(A.name(k));
  EXPECT_EQ(chain, (std::vector<std::string>{"2", "3"}));
  EXPECT_EQ(c.a.gamma(lfp(abs)), c.at("3"));
  EXPECT_TRUE(is_sound_approximation(c.a, c.i_join_bstar(), abs));
  // the constant-top abstraction is sound but not best
  auto top = constant_map(c.a.abstract_lattice(), A.top());
  EXPECT_TRUE(is_sound_approximation(c.a, c.i_join_bstar(), top));
  EXPECT_TRUE(pointwise_leq(abs, top));
  auto bot = constant_map(c.a.abstract_lattice(), A.bot());
  EXPECT_FALSE(is_sound_approximation(c.a, c.i_join_bstar(), bot));
}

TEST(Companion, Identity) {
  Chain c;
  auto comp = companion(identity_map(c.L));
  EXPECT_EQ(comp.chain, elems(c, {"top"}));
  EXPECT_EQ(comp.closure.map(), constant_map(c.L, c.at("top")));
}

TEST(Companion, ChainOfBsubMeetF) {
  Chain c;
  auto comp = companion(c.bsub_meet(c.at("4")));
  EXPECT_EQ(comp.chain, (std::vector<Elem>{c.at("top"), c.at("4")}));
  EXPECT_EQ(comp.closure.pre_fixed(), elems(c, {"4", "top"}));
}

TEST(Companion, GreatestAmongCompatibleClosures) {
  Chain c;
  for (const auto& b : {c.bstar, c.bsub, c.i_join_bstar(), c.bsub_meet(c.at("4"))}) {
    auto omega = companion(b).closure.map();
    for (const auto& t : enumerate_monotone_maps(*c.L)) {
      MonotoneMap m(c.L, t);
      if (classify_map(m).up_closure && is_compatible(m, b)) {
        EXPECT_TRUE(pointwise_leq(m, omega));
      }
    }
  }
}

TEST(Companion, ChainCorollary) {
  // any closure containing every b^i(top) is sound for b
  Chain c;
  for (const auto& b : {c.bstar, c.bsub, c.bsub_meet(c.at("4"))}) {
    auto chain = companion(b).chain;
    for (const auto& t : enumerate_monotone_maps(*c.L)) {
      MonotoneMap m(c.L, t);
      if (!classify_map(m).up_closure) continue;
      bool contains_chain = std::all_of(chain.begin(), chain.end(), [&](Elem x) { return m(x) == x; });
      if (contains_chain) {
        EXPECT_TRUE(is_sound(m, b));
      }
    }
  }
}

TEST(FCompanion, Examples) {
  Chain c;
  auto fc = f_companion(c.bsub, c.at("4"));
  EXPECT_EQ(fc.generators, (std::vector<Elem>{c.at("top"), c.at("4")}));
  EXPECT_EQ(fc.sublattice, elems(c, {"4", "top"}));
  auto top = f_companion(c.bsub, c.at("top"));
  EXPECT_EQ(top.sublattice, elems(c, {"top"}));
  auto two = f_companion(c.bsub, c.at("2"));
  EXPECT_EQ(two.generators, (std::vector<Elem>{c.at("top"), c.at("2"), c.at("1")}));
  EXPECT_EQ(two.sublattice, elems(c, {"1", "2", "top"}));
}

TEST(FCompanion, NotARightAdjoint) {
  Chain c;
  try {
    // top is sent to 4, so the empty meet is not preserved
    f_companion(pointwise_meet(c.bsub, constant_map(c.L, c.at("4"))), c.at("4"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotARightAdjoint);
  }
}

TEST(LocalCompleteness, Counterexample) {
  Chain c;
  auto b = c.i_join_bstar();
  for (const char* f : {"top", "4", "3"}) EXPECT_TRUE(local_completeness(c.a, b, c.at(f))) << f;
  EXPECT_FALSE(local_completeness(c.a, b, c.at("2")));
}

TEST(LocalCompleteness, TopAlwaysHolds) {
  Chain c;
  for (const auto& cl : {c.a, c.a2, c.identity()})
    for (const auto& b : {c.bstar, c.bsub, c.i_join_bstar()})
      EXPECT_TRUE(local_completeness(cl, b, c.at("top")));
}

TEST(LocalCompleteness, GlobalIsAllLocal) {
  Chain c;
  for (const auto& t : enumerate_monotone_maps(*c.L)) {
    MonotoneMap m(c.L, t);
    if (!classify_map(m).up_closure) continue;
    auto cl = closure_from_map(m);
    for (const auto& b : {c.bstar, c.bsub, c.i_join_bstar()}) {
      bool all_local = true;
      for (Elem f : cl.pre_fixed()) all_local = all_local && local_completeness(cl, b, f);
      EXPECT_EQ(law_report(cl, b).complete, all_local);
    }
  }
}

TEST(BfCompatibility, Examples) {
  Chain c;
  auto id = identity_map(c.L);
  for (Elem f = 0; f < c.L->size(); ++f) EXPECT_TRUE(bf_compatibility(id, c.bsub, f));
  auto fc = f_companion(c.bsub, c.at("4"));
  EXPECT_TRUE(bf_compatibility(fc.closure.map(), c.bsub, c.at("4")));
  // a2(2) = 3 is not below 2
  EXPECT_FALSE(bf_compatibility(c.a2.map(), c.bsub, c.at("2")));
}

TEST(Bridge, IdentityAndCounterexample) {
  Chain c;
  AdjointPair pair{c.bstar, c.bsub};
  auto id = bridge_check(pair, c.identity());
  EXPECT_TRUE(id.forward && id.backward);
  auto ra = bridge_check(pair, c.a);
  EXPECT_FALSE(ra.forward);
  EXPECT_FALSE(ra.backward);
  auto ra2 = bridge_check(pair, c.a2);
  EXPECT_TRUE(ra2.forward && ra2.backward);
}

TEST(BGfp, MatchesFCompanion) {
  Chain c;
  for (const char* f : {"top", "4", "3"}) {
    auto res = b_gfp(c.bsub, c.at(f));
    EXPECT_EQ(res.maps_enumerated, 462u);
    EXPECT_EQ(res.closure.map(), f_companion(c.bsub, c.at(f)).closure.map()) << f;
  }
  EXPECT_EQ(b_gfp(c.bsub, c.at("4")).closure.pre_fixed(), elems(c, {"4", "top"}));
}

TEST(BGfp, TopGivesConstantTop) {
  Chain c;
  EXPECT_EQ(b_gfp(c.bsub, c.at("top")).closure.map(), constant_map(c.L, c.at("top")));
}

TEST(BGfp, IdentityGivesMeetClosureOfTopAndF) {
  auto L = build_lattice({"bot", "p", "q", "top"},
                         {{"bot", "p"}, {"bot", "q"}, {"p", "top"}, {"q", "top"}});
  for (Elem f = 0; f < L->size(); ++f) {
    auto res = b_gfp(identity_map(L), f);
    std::vector<Elem> want{f, L->top()};
    std::sort(want.begin(), want.end());
    want.erase(std::unique(want.begin(), want.end()), want.end());
    EXPECT_EQ(res.closure.pre_fixed(), want);
  }
}

TEST(BGfp, TooLarge) {
  auto L = chain_lattice({"0", "1", "2", "3", "4", "5", "6", "7"});
  try {
    b_gfp(identity_map(L), L->top());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::LatticeTooLarge);
  }
}

TEST(BOperator, CharacterizationOnChain) {
  Chain c;
  auto maps = enumerate_monotone_maps(*c.L);
  const auto& L = *c.L;
  Elem f = c.at("4");
  // a sweep of inputs a and candidates a' drawn from the full enumeration
  for (std::size_t i = 0; i < maps.size(); i += 37) {
    auto Ba = b_operator(c.bsub, f, maps[i], maps);
    for (std::size_t j = 0; j < maps.size(); j += 5) {
      const auto& ap = maps[j];
      bool below = true, law = L.leq(ap[f], f);
      for (Elem x = 0; x < L.size(); ++x) {
        below = below && L.leq(ap[x], Ba[x]);
        law = law && L.leq(ap[c.bsub(x)], c.bsub(maps[i][x]));
      }
      EXPECT_EQ(below, law);
    }
  }
}

TEST(Duality, Examples) {
  Chain c;
  AdjointPair pair{c.bstar, c.bsub};
  EXPECT_TRUE(duality_check(pair, c.a2, c.at("4"), 0));
  EXPECT_TRUE(duality_check(pair, c.a2, c.at("4"), 10));
  EXPECT_TRUE(duality_check(pair, c.identity(), c.at("2"), 10));
  try {
    duality_check(pair, c.a, c.at("4"), 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::PreconditionFailed);
  }
  try {
    duality_check(pair, c.a2, c.at("2"), 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::PreconditionFailed);
  }
}
