// Seeded randomized law checks on lattices with at most 8 elements.

#include <gtest/gtest.h>

#include "uptolab/checker.hpp"
#include "uptolab/random.hpp"

using namespace uptolab;

namespace {

constexpr int kCases = 1000;
constexpr std::size_t kMaxSize = 8;

// a1 <= a2 pointwise, built from a Moore family containing Pre(a2).
ClosureOperator random_closure_below(Rng& rng, const ClosureOperator& a2) {
  return closure_from_sublattice(a2.lattice(), random_moore_family(rng, a2.lattice(), a2.pre_fixed()));
}

// A map g with g.h <= h.g, drawn from a pool biased towards such maps.
std::optional<MonotoneMap> commuting_with(Rng& rng, const MonotoneMap& h) {
  const auto& Lp = h.lattice();
  for (int attempt = 0; attempt < 40; ++attempt) {
    MonotoneMap g = [&] {
      switch (uniform_index(rng, 5)) {
        case 0: return h;
        case 1: return compose(h, h);
        case 2: return power_closures(h).up;
        case 3: return constant_map(Lp, Elem(uniform_index(rng, Lp->size())));
        default: return random_monotone(rng, Lp);
      }
    }();
    if (is_compatible(g, h)) return g;
  }
  return std::nullopt;
}

// As above with h.g <= g.h.
std::optional<MonotoneMap> commuted_by(Rng& rng, const MonotoneMap& h) {
  const auto& Lp = h.lattice();
  for (int attempt = 0; attempt < 40; ++attempt) {
    MonotoneMap g = [&] {
      switch (uniform_index(rng, 5)) {
        case 0: return h;
        case 1: return compose(h, h);
        case 2: return power_closures(h).down;
        case 3: return constant_map(Lp, Elem(uniform_index(rng, Lp->size())));
        default: return random_monotone(rng, Lp);
      }
    }();
    if (is_compatible(h, g)) return g;
  }
  return std::nullopt;
}

}  // namespace

TEST(Properties, KleeneEqualsTarski) {
  Rng rng(101);
  for (int k = 0; k < kCases; ++k) {
    auto L = random_lattice(rng, kMaxSize);
    auto f = random_monotone(rng, L);
    ASSERT_EQ(lfp(f, FixpointMethod::kleene), lfp(f, FixpointMethod::tarski));
    ASSERT_EQ(gfp(f, FixpointMethod::kleene), gfp(f, FixpointMethod::tarski));
  }
}

TEST(Properties, AdjunctionRoundTrips) {
  Rng rng(102);
  for (int k = 0; k < kCases; ++k) {
    auto L = random_lattice(rng, kMaxSize);
    auto [l, r] = random_adjoint_pair(rng, L);
    ASSERT_TRUE(is_adjunction(l, r));
    ASSERT_TRUE(classify_map(compose(r, l)).up_closure);
    ASSERT_TRUE(classify_map(compose(l, r)).down_closure);
    ASSERT_TRUE(classify_map(l).preserves_joins);
    ASSERT_TRUE(classify_map(r).preserves_meets);
  }
}

TEST(Properties, BridgeBiconditional) {
  Rng rng(103);
  int forward_true = 0;
  for (int k = 0; k < kCases; ++k) {
    auto L = random_lattice(rng, kMaxSize);
    auto pair = random_adjoint_pair(rng, L);
    auto a = random_closure(rng, L);
    bool fwd = pointwise_leq(compose(pair.left, a.map()), compose(a.map(), pair.left));
    bool bwd = pointwise_leq(compose(a.map(), pair.right), compose(pair.right, a.map()));
    ASSERT_EQ(fwd, bwd);
    forward_true += fwd;
  }
  // both outcomes must actually occur for the check to mean anything
  EXPECT_GT(forward_true, 0);
  EXPECT_LT(forward_true, kCases);
}

TEST(Properties, SufficientConditions) {
  Rng rng(104);
  for (int k = 0; k < kCases; ++k) {
    auto L = random_lattice(rng, kMaxSize);
    auto a = random_closure(rng, L);
    auto b = random_monotone(rng, L);
    if (is_compatible(a.map(), b)) {
      ASSERT_TRUE(is_sound(a.map(), b));
    }
    if (is_fully_complete(a.map(), b)) {
      ASSERT_TRUE(is_complete(a.map(), b));
    }
    auto r = law_report(a, b);
    ASSERT_EQ(r.compatible, r.em_lifting_exists);
    ASSERT_EQ(r.fully_complete, r.kl_extension_exists);
  }
}

TEST(Properties, SoundnessDownwardClosed) {
  Rng rng(105);
  int premise = 0;
  for (int k = 0; k < kCases; ++k) {
    auto L = random_lattice(rng, kMaxSize);
    auto a2 = random_closure(rng, L);
    auto a1 = random_closure_below(rng, a2);
    auto b = random_monotone(rng, L);
    ASSERT_TRUE(pointwise_leq(a1.map(), a2.map()));
    if (is_sound(a2.map(), b)) {
      ++premise;
      ASSERT_TRUE(is_sound(a1.map(), b));
    }
  }
  EXPECT_GT(premise, 0);
}

TEST(Properties, LocalCompletenessDownwardClosed) {
  Rng rng(106);
  int premise = 0;
  for (int k = 0; k < kCases; ++k) {
    auto L = random_lattice(rng, kMaxSize);
    auto a2 = random_closure(rng, L);
    auto a1 = random_closure_below(rng, a2);
    auto b = random_monotone(rng, L);
    Elem f = Elem(uniform_index(rng, L->size()));
    if (local_completeness(a2, b, f)) {
      ++premise;
      ASSERT_TRUE(local_completeness(a1, b, f));
    }
  }
  EXPECT_GT(premise, 0);
}

TEST(Properties, GlobalCompletenessIsLocalEverywhere) {
  Rng rng(107);
  for (int k = 0; k < kCases; ++k) {
    auto L = random_lattice(rng, kMaxSize);
    auto a = random_closure(rng, L);
    auto b = random_monotone(rng, L);
    bool all_local = true;
    for (Elem f : a.pre_fixed()) all_local = all_local && local_completeness(a, b, f);
    ASSERT_EQ(law_report(a, b).complete, all_local);
  }
}

TEST(Properties, Modularity) {
  Rng rng(108);
  int cases[7] = {};
  for (int k = 0; cases[2] < kCases || cases[5] < kCases; ++k) {
    ASSERT_LT(k, 50 * kCases) << "premises too rare";
    auto L = random_lattice(rng, kMaxSize);
    auto h = random_monotone(rng, L);
    auto id = identity_map(L);

    // 1. id.h <= h.id
    ASSERT_TRUE(is_compatible(id, h));
    ++cases[1];

    auto g1 = commuting_with(rng, h), g2 = commuting_with(rng, h);
    if (g1 && g2) {
      // 2. composition, 3. join
      ASSERT_TRUE(is_compatible(compose(*g1, *g2), h));
      ASSERT_TRUE(is_compatible(pointwise_join(*g1, *g2), h));
      // 4. up-power
      ASSERT_TRUE(is_compatible(power_closures(*g1).up, h));
      ++cases[2], ++cases[3], ++cases[4];
    }

    auto g = random_monotone(rng, L);
    auto h1 = commuted_by(rng, g), h2 = commuted_by(rng, g);
    if (h1 && h2) {
      // 5. meet of the right-hand maps, 6. down-power
      ASSERT_TRUE(is_compatible(g, pointwise_meet(*h1, *h2)));
      ASSERT_TRUE(is_compatible(g, power_closures(*h1).down));
      ++cases[5], ++cases[6];
    }
  }
  for (int law = 1; law <= 6; ++law) EXPECT_GE(cases[law], kCases) << "law " << law;
}

TEST(Properties, PowerClosuresAreClosures) {
  Rng rng(109);
  for (int k = 0; k < kCases; ++k) {
    auto L = random_lattice(rng, kMaxSize);
    auto pc = power_closures(random_monotone(rng, L));
    ASSERT_TRUE(classify_map(pc.up).up_closure);
    ASSERT_TRUE(classify_map(pc.down).down_closure);
  }
}

TEST(Properties, ClosureInclusionReversesPre) {
  Rng rng(110);
  for (int k = 0; k < kCases; ++k) {
    auto L = random_lattice(rng, kMaxSize);
    auto a1 = random_closure(rng, L), a2 = random_closure(rng, L);
    const auto &p1 = a1.pre_fixed(), &p2 = a2.pre_fixed();
    bool sub = std::includes(p1.begin(), p1.end(), p2.begin(), p2.end());
    ASSERT_EQ(pointwise_leq(a1.map(), a2.map()), sub);
    for (Elem x = 0; x < L->size(); ++x) ASSERT_EQ(a1.gamma(a1.alpha(x)), a1(x));
  }
}

TEST(Properties, CompanionIsGreatestCompatibleClosure) {
  Rng rng(111);
  for (int k = 0; k < kCases; ++k) {
    auto L = random_lattice(rng, kMaxSize);
    auto b = random_monotone(rng, L);
    auto omega = companion(b).closure;
    ASSERT_TRUE(is_compatible(omega.map(), b));
    auto a = random_closure(rng, L);
    if (is_compatible(a.map(), b)) {
      ASSERT_TRUE(pointwise_leq(a.map(), omega.map()));
    }
  }
}

TEST(Properties, FCompanionIsBfCompatible) {
  Rng rng(112);
  for (int k = 0; k < kCases; ++k) {
    auto L = random_lattice(rng, kMaxSize);
    auto r = random_right_adjoint(rng, L);
    Elem f = Elem(uniform_index(rng, L->size()));
    auto w = f_companion(r, f).closure;
    ASSERT_TRUE(bf_compatibility(w.map(), r, f));
    auto a = random_closure(rng, L);
    if (bf_compatible_raw(a.map(), r, f)) {
      ASSERT_TRUE(pointwise_leq(a.map(), w.map()));
    }
  }
}

TEST(Properties, BOperatorLemma) {
  Rng rng(113);
  int checked = 0;
  while (checked < kCases) {
    auto L = random_lattice(rng, 5);
    auto maps = enumerate_monotone_maps(*L);
    auto b = random_monotone(rng, L);
    Elem f = Elem(uniform_index(rng, L->size()));
    for (int s = 0; s < 20; ++s, ++checked) {
      const auto& a = maps[uniform_index(rng, maps.size())];
      const auto& ap = maps[uniform_index(rng, maps.size())];
      auto Ba = b_operator(b, f, a, maps);
      bool below = true, law = L->leq(ap[f], f);
      for (Elem x = 0; x < L->size(); ++x) {
        below = below && L->leq(ap[x], Ba[x]);
        law = law && L->leq(ap[b(x)], b(a[x]));
      }
      ASSERT_EQ(below, law);
    }
  }
}

TEST(Properties, BGfpMatchesFCompanionForRightAdjoints) {
  Rng rng(114);
  for (int k = 0; k < 200; ++k) {
    auto L = random_lattice(rng, 6);
    auto r = random_right_adjoint(rng, L);
    Elem f = Elem(uniform_index(rng, L->size()));
    ASSERT_EQ(b_gfp(r, f).closure.map(), f_companion(r, f).closure.map());
  }
}
