#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace invsemi {

// Every failure mode the library reports. Codes that carry witnesses store
// them in Error::args (unused slots are -1):
//   NotAssociative      (a, b, c)   with (ab)c != a(bc)
//   StarNotInvolutive   (a)         with (a*)* != a
//   StarNotAntihom      (a, b)      with (ab)* != b* a*
//   IndexOutOfRange     (i)         offending index or length
//   MixedParents                    subsets of different semigroups combined
//   EmptyList                       empty list of subsets
//   EmptyInput                      an input set that must be nonempty is empty
//   TooLarge            (n, cap)    enumeration guard tripped
//   NotSubsemigroup     (a, b)      witness pair with ab outside the set
//   NotInvSubsemigroup  (a[, b])    product or star witness
//   NotAGroup           (x)         element without identity/inverse, or star != inversion
//   NotRegularStar      (x)         x with x* not an inverse of x
//   NotInverse          (x)         x with |V(x)| != 1
//   NotCommutative      (a, b)      ab != ba
//   NotSemilattice      (x)         non-idempotent element, or a commutativity pair
//   InvalidReesSpec     (i, j)      sandwich entry violating its constraint
//   BadFile                         unreadable/ill-formed semigroup file
enum class ErrorCode {
  NotAssociative,
  StarNotInvolutive,
  StarNotAntihom,
  IndexOutOfRange,
  MixedParents,
  EmptyList,
  EmptyInput,
  TooLarge,
  NotSubsemigroup,
  NotInvSubsemigroup,
  NotAGroup,
  NotRegularStar,
  NotInverse,
  NotCommutative,
  NotSemilattice,
  InvalidReesSpec,
  BadFile,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::array<int, 3> args = {-1, -1, -1})
      : std::runtime_error(std::move(message)), code_(code), args_(args) {}

  ErrorCode code() const noexcept { return code_; }
  const std::array<int, 3>& args() const noexcept { return args_; }

 private:
  ErrorCode code_;
  std::array<int, 3> args_;
};

}  // namespace invsemi
