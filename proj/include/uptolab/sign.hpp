#ifndef UPTOLAB_SIGN_HPP
#define UPTOLAB_SIGN_HPP

// The eight-element domain of signs as a set of integer predicates closed
// under intersection.

#include <array>
#include <string>
#include <vector>

#include "uptolab/intpred.hpp"
#include "uptolab/lattice.hpp"

namespace uptolab {

enum class Sign : std::uint8_t { bot, zero, neg, pos, nonpos, nonneg, nonzero, top };

inline constexpr std::array<Sign, 8> kAllSigns{Sign::bot,    Sign::zero,   Sign::neg,     Sign::pos,
                                               Sign::nonpos, Sign::nonneg, Sign::nonzero, Sign::top};

inline IntPred concretize(Sign s) {
  switch (s) {
    case Sign::bot: return IntPred::empty();
    case Sign::zero: return IntPred::point(0);
    case Sign::neg: return IntPred::at_most(-1);
    case Sign::pos: return IntPred::at_least(1);
    case Sign::nonpos: return IntPred::at_most(0);
    case Sign::nonneg: return IntPred::at_least(0);
    case Sign::nonzero: return IntPred::at_most(-1) | IntPred::at_least(1);
    case Sign::top: return IntPred::all();
  }
  return IntPred::all();
}

inline bool sign_leq(Sign a, Sign b) { return concretize(a).subset_of(concretize(b)); }

/// Least sign whose concretization contains P.
inline Sign abstract_sign(const IntPred& p) {
  Sign best = Sign::top;
  for (Sign s : kAllSigns)
    if (p.subset_of(concretize(s)) && sign_leq(s, best)) best = s;
  return best;
}

inline Sign sign_join(Sign a, Sign b) { return abstract_sign(concretize(a) | concretize(b)); }
inline Sign sign_meet(Sign a, Sign b) { return abstract_sign(concretize(a) & concretize(b)); }

/// The closure s = concretize . abstract_sign on predicates.
inline IntPred sign_closure(const IntPred& p) { return concretize(abstract_sign(p)); }

inline std::string sign_name(Sign s) { return concretize(s).str(); }

/// The domain as a FiniteLattice, element k = kAllSigns[k].
inline LatticePtr sign_lattice() {
  std::vector<std::string> names;
  std::vector<std::vector<bool>> leq(8, std::vector<bool>(8));
  for (std::size_t i = 0; i < 8; ++i) {
    names.push_back(sign_name(kAllSigns[i]));
    for (std::size_t j = 0; j < 8; ++j) leq[i][j] = sign_leq(kAllSigns[i], kAllSigns[j]);
  }
  return std::make_shared<const FiniteLattice>(FiniteLattice::from_order(names, leq));
}

}  // namespace uptolab

#endif  // UPTOLAB_SIGN_HPP
