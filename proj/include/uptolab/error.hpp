#ifndef UPTOLAB_ERROR_HPP
#define UPTOLAB_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace uptolab {

enum class Errc {
  NotAPartialOrder,
  NotALattice,
  NotMonotone,
  NoAdjoint,
  NotMeetClosed,
  MissingTop,
  NotAClosure,
  DomainMismatch,
  NotARightAdjoint,
  LatticeTooLarge,
  PreconditionFailed,
  UnknownSymbol,
  UnknownState,
  NoConvergence,
  MalformedSystem,
  UnknownFixture,
  Parse,
};

inline std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::NotAPartialOrder: return "NotAPartialOrder";
    case Errc::NotALattice: return "NotALattice";
    case Errc::NotMonotone: return "NotMonotone";
    case Errc::NoAdjoint: return "NoAdjoint";
    case Errc::NotMeetClosed: return "NotMeetClosed";
    case Errc::MissingTop: return "MissingTop";
    case Errc::NotAClosure: return "NotAClosure";
    case Errc::DomainMismatch: return "DomainMismatch";
    case Errc::NotARightAdjoint: return "NotARightAdjoint";
    case Errc::LatticeTooLarge: return "LatticeTooLarge";
    case Errc::PreconditionFailed: return "PreconditionFailed";
    case Errc::UnknownSymbol: return "UnknownSymbol";
    case Errc::UnknownState: return "UnknownState";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::MalformedSystem: return "MalformedSystem";
    case Errc::UnknownFixture: return "UnknownFixture";
    case Errc::Parse: return "Parse";
  }
  return "Unknown";
}

/// Every recoverable failure in the library is reported through this type.
/// Violated internal invariants (theorems that must hold) throw
/// std::logic_error instead.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code), detail_(what) {}

  Errc code() const noexcept { return code_; }
  /// The message without the error-name prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

}  // namespace uptolab

#endif  // UPTOLAB_ERROR_HPP
