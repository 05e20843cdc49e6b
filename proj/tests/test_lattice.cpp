#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "uptolab/gallery.hpp"
#include "uptolab/lattice.hpp"
#include "uptolab/lattice_io.hpp"

using namespace uptolab;

namespace {

LatticePtr six_chain() { return chain_lattice({"bot", "1", "2", "3", "4", "top"}); }

LatticePtr diamond() {
  return build_lattice({"bot", "a", "b", "top"},
                       {{"bot", "a"}, {"bot", "b"}, {"a", "top"}, {"b", "top"}});
}

MonotoneMap map_of(const LatticePtr& L, std::initializer_list<const char*> images) {
  std::vector<Elem> t;
  for (const char* s : images) t.push_back(L->at(s));
  return MonotoneMap(L, t);
}

MonotoneMap dashed(const LatticePtr& L) { return map_of(L, {"bot", "bot", "3", "3", "4", "top"}); }
MonotoneMap dotted(const LatticePtr& L) { return map_of(L, {"1", "1", "1", "3", "4", "top"}); }

template <class F>
Errc error_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return Errc::Parse;
}

}  // namespace

TEST(BuildLattice, SixChain) {
  auto L = six_chain();
  EXPECT_EQ(L->size(), 6u);
  EXPECT_EQ(L->name(L->top()), "top");
  EXPECT_EQ(L->name(L->bot()), "bot");
  EXPECT_EQ(L->join(L->at("2"), L->at("4")), L->at("4"));
  EXPECT_EQ(L->meet(L->at("2"), L->at("4")), L->at("2"));
}

TEST(BuildLattice, OnePoint) {
  auto L = build_lattice({"only"}, {});
  EXPECT_EQ(L->top(), L->bot());
  EXPECT_EQ(L->join(0, 0), 0u);
}

TEST(BuildLattice, Diamond) {
  auto L = diamond();
  Elem a = L->at("a"), b = L->at("b");
  EXPECT_FALSE(L->leq(a, b));
  EXPECT_FALSE(L->leq(b, a));
  EXPECT_EQ(L->join(a, b), L->top());
  EXPECT_EQ(L->meet(a, b), L->bot());
}

TEST(BuildLattice, Errors) {
  EXPECT_EQ(error_code([] { build_lattice({"x", "y"}, {{"x", "y"}, {"y", "x"}}); }),
            Errc::NotAPartialOrder);
  EXPECT_EQ(error_code([] { build_lattice({"x", "x"}, {}); }), Errc::NotAPartialOrder);
  // two incomparable maximal elements
  EXPECT_EQ(error_code([] { build_lattice({"bot", "p", "q"}, {{"bot", "p"}, {"bot", "q"}}); }),
            Errc::NotALattice);
  // p, q have two minimal upper bounds
  EXPECT_EQ(error_code([] {
              build_lattice({"bot", "p", "q", "r", "s", "top"},
                            {{"bot", "p"}, {"bot", "q"}, {"p", "r"}, {"q", "r"}, {"p", "s"},
                             {"q", "s"}, {"r", "top"}, {"s", "top"}});
            }),
            Errc::NotALattice);
  EXPECT_EQ(error_code([] { build_lattice({}, {}); }), Errc::NotALattice);
  EXPECT_EQ(error_code([] { build_lattice({"x"}, {{"x", "nope"}}); }), Errc::Parse);
}

TEST(BuildLattice, JoinTablesAgreeWithOrder) {
  for (auto L : {six_chain(), diamond(), powerset_lattice(3)}) {
    for (Elem x = 0; x < L->size(); ++x)
      for (Elem y = 0; y < L->size(); ++y) {
        Elem j = L->join(x, y);
        EXPECT_TRUE(L->leq(x, j) && L->leq(y, j));
        for (Elem z = 0; z < L->size(); ++z)
          if (L->leq(x, z) && L->leq(y, z)) {
            EXPECT_TRUE(L->leq(j, z));
          }
      }
  }
}

TEST(BigBounds, Examples) {
  auto D = diamond();
  std::vector<Elem> ab{D->at("a"), D->at("b")};
  EXPECT_EQ(D->big_bounds(ab), std::make_pair(D->top(), D->bot()));
  EXPECT_EQ(D->big_bounds({}), std::make_pair(D->bot(), D->top()));
  auto C = six_chain();
  std::vector<Elem> s{C->at("2"), C->at("4")};
  EXPECT_EQ(C->big_bounds(s), std::make_pair(C->at("4"), C->at("2")));
}

TEST(Fixpoint, CounterexampleChain) {
  auto L = six_chain();
  auto b = pointwise_join(constant_map(L, L->at("1")), dashed(L));
  for (auto m : {FixpointMethod::kleene, FixpointMethod::tarski}) EXPECT_EQ(lfp(b, m), L->at("1"));
  auto g = pointwise_meet(dotted(L), constant_map(L, L->at("4")));
  EXPECT_EQ(kleene_iterates(g, Extremum::greatest), (std::vector<Elem>{L->at("top"), L->at("4")}));
  EXPECT_EQ(gfp(g, FixpointMethod::tarski), L->at("4"));
}

TEST(Fixpoint, Identity) {
  auto L = diamond();
  auto id = identity_map(L);
  EXPECT_EQ(lfp(id), L->bot());
  EXPECT_EQ(gfp(id), L->top());
  EXPECT_EQ(lfp(id, FixpointMethod::tarski), L->bot());
}

TEST(AdjointOf, DashedGivesDotted) {
  auto L = six_chain();
  auto pair = adjoint_of(dashed(L), AdjointSide::right_of);
  EXPECT_EQ(pair.right, dotted(L));
  auto back = adjoint_of(dotted(L), AdjointSide::left_of);
  EXPECT_EQ(back.left, dashed(L));
}

TEST(AdjointOf, IdentitySelfAdjoint) {
  auto L = diamond();
  auto pair = adjoint_of(identity_map(L), AdjointSide::right_of);
  EXPECT_EQ(pair.right, identity_map(L));
}

TEST(AdjointOf, ConstantBottomOnDiamond) {
  auto L = diamond();
  auto pair = adjoint_of(constant_map(L, L->bot()), AdjointSide::right_of);
  EXPECT_EQ(pair.right, constant_map(L, L->top()));
  EXPECT_TRUE(is_adjunction(pair.left, pair.right));
}

TEST(AdjointOf, NoAdjoint) {
  auto L = diamond();
  // constant top does not preserve the empty join
  EXPECT_EQ(error_code([&] { adjoint_of(constant_map(L, L->top()), AdjointSide::right_of); }),
            Errc::NoAdjoint);
  // sends a and b to top but keeps bot: the meet of a and b is not preserved
  auto m = map_of(L, {"bot", "top", "top", "top"});
  EXPECT_EQ(error_code([&] { adjoint_of(m, AdjointSide::left_of); }), Errc::NoAdjoint);
  // on a chain a monotone map is a right adjoint iff it keeps top, so dashed has one
  auto C = six_chain();
  EXPECT_NO_THROW(adjoint_of(dashed(C), AdjointSide::left_of));
  auto capped = pointwise_meet(dotted(C), constant_map(C, C->at("4")));
  EXPECT_EQ(error_code([&] { adjoint_of(capped, AdjointSide::left_of); }), Errc::NoAdjoint);
}

TEST(MonotoneMap, RejectsNonMonotone) {
  auto L = six_chain();
  EXPECT_EQ(error_code([&] { MonotoneMap(L, {5, 0, 0, 0, 0, 0}); }), Errc::NotMonotone);
  EXPECT_EQ(error_code([&] { MonotoneMap(L, {0, 0}); }), Errc::NotMonotone);
}

TEST(PowerClosures, Identity) {
  auto L = diamond();
  auto pc = power_closures(identity_map(L));
  EXPECT_EQ(pc.up, identity_map(L));
  EXPECT_EQ(pc.down, identity_map(L));
}

TEST(PowerClosures, DashedOnChain) {
  auto L = six_chain();
  auto pc = power_closures(dashed(L));
  // orbit of 1 is {1, bot}; orbit of 2 is {2, 3}
  EXPECT_EQ(pc.up(L->at("1")), L->at("1"));
  EXPECT_EQ(pc.up(L->at("2")), L->at("3"));
  EXPECT_EQ(pc.down(L->at("1")), L->bot());
  EXPECT_EQ(pc.down(L->at("2")), L->at("2"));
  EXPECT_TRUE(classify_map(pc.up).up_closure);
  EXPECT_TRUE(classify_map(pc.down).down_closure);
}

TEST(ClosureFromSublattice, CounterexampleClosures) {
  auto L = six_chain();
  auto a = closure_from_sublattice(L, {L->at("top"), L->at("4"), L->at("3"), L->at("2")});
  EXPECT_EQ(a.map(), map_of(L, {"2", "2", "2", "3", "4", "top"}));
  auto a2 = closure_from_sublattice(L, {L->at("top"), L->at("4"), L->at("3")});
  EXPECT_EQ(a2.map(), map_of(L, {"3", "3", "3", "3", "4", "top"}));
  EXPECT_TRUE(pointwise_leq(a.map(), a2.map()));
}

TEST(ClosureFromSublattice, GaloisInsertion) {
  auto L = six_chain();
  auto a = closure_from_sublattice(L, {L->at("top"), L->at("4"), L->at("3"), L->at("2")});
  for (Elem x = 0; x < L->size(); ++x) EXPECT_EQ(a.gamma(a.alpha(x)), a(x));
  for (Elem k = 0; k < a.pre_fixed().size(); ++k) EXPECT_EQ(a.alpha(a.gamma(k)), k);
  EXPECT_EQ(a.abstract_lattice()->size(), 4u);
}

TEST(ClosureFromSublattice, AllElementsIsIdentity) {
  auto L = diamond();
  EXPECT_EQ(closure_from_sublattice(L, L->elements()).map(), identity_map(L));
}

TEST(ClosureFromSublattice, Errors) {
  auto L = diamond();
  EXPECT_EQ(error_code([&] { closure_from_sublattice(L, {L->at("a"), L->at("b"), L->top()}); }),
            Errc::NotMeetClosed);
  EXPECT_EQ(error_code([&] { closure_from_sublattice(L, {L->at("a")}); }), Errc::MissingTop);
  auto C = six_chain();
  EXPECT_EQ(error_code([&] { closure_from_map(dashed(C)); }), Errc::NotAClosure);
}

TEST(ClosureFromSublattice, InclusionReversesPre) {
  auto L = powerset_lattice(2);
  // Moore families of the 4-element powerset, compared pairwise
  std::vector<std::vector<Elem>> families;
  for (unsigned mask = 0; mask < 16; ++mask) {
    std::vector<Elem> A;
    for (Elem x = 0; x < 4; ++x)
      if ((mask >> x) & 1) A.push_back(x);
    try {
      closure_from_sublattice(L, A);
      families.push_back(A);
    } catch (const Error&) {
    }
  }
  ASSERT_FALSE(families.empty());
  for (const auto& A1 : families)
    for (const auto& A2 : families) {
      auto a1 = closure_from_sublattice(L, A1), a2 = closure_from_sublattice(L, A2);
      bool sub = std::includes(A1.begin(), A1.end(), A2.begin(), A2.end());
      EXPECT_EQ(pointwise_leq(a1.map(), a2.map()), sub);
    }
}

TEST(ClassifyMap, Examples) {
  auto L = six_chain();
  auto id = classify_map(identity_map(L));
  EXPECT_TRUE(id.monotone && id.up_closure && id.down_closure && id.preserves_joins &&
              id.preserves_meets);
  auto a = closure_from_sublattice(L, {L->at("top"), L->at("4"), L->at("3"), L->at("2")});
  EXPECT_TRUE(classify_map(a.map()).up_closure);
  auto d = classify_map(dashed(L));
  EXPECT_TRUE(d.preserves_joins);
  EXPECT_FALSE(d.up_closure);
  std::vector<Elem> bad{5, 0, 0, 0, 0, 0};
  EXPECT_FALSE(classify_map(*L, bad).monotone);
}

TEST(LatticeIo, ParsesFileAndMatchesGallery) {
  auto lf = load_lattice(std::string(UPTOLAB_DATA_DIR) + "/cex61.lat");
  auto g = parse_lattice_string(chain_counterexample_source());
  EXPECT_EQ(*lf.lattice, *g.lattice);
  EXPECT_EQ(lf.maps, g.maps);
  const auto& L = lf.lattice;
  EXPECT_EQ(lf.map("b"), dashed(L));
  EXPECT_EQ(lf.map("bsub"), dotted(L));
}

TEST(LatticeIo, Errors) {
  EXPECT_EQ(error_code([] { parse_lattice_string("elem a\nbogus x\n"); }), Errc::Parse);
  EXPECT_EQ(error_code([] { parse_lattice_string("elem a\ncover a b\n"); }), Errc::Parse);
  EXPECT_EQ(error_code([] { parse_lattice_string("elem a\nelem b\ncover a b\nmap m a b\n"); }),
            Errc::Parse);
  EXPECT_EQ(error_code([] {
              parse_lattice_string("elem a\nelem b\ncover a b\nmap m a a\nmap m a b\nmap m b b\n");
            }),
            Errc::Parse);
  auto lf = parse_lattice_string("elem a\nelem b\ncover a b\nmap m a b\nmap m b a\n");
  EXPECT_EQ(error_code([&] { lf.map("m"); }), Errc::NotMonotone);
  EXPECT_EQ(error_code([&] { lf.map("zz"); }), Errc::Parse);
  try {
    parse_lattice_string("elem a\n\nfrob\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find(":3:"), std::string::npos) << e.what();
  }
}
