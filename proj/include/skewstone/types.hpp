// Basic vocabulary shared by every module: element indices, subset masks and
// the exception hierarchy.

#ifndef SKEWSTONE_TYPES_HPP_
#define SKEWSTONE_TYPES_HPP_

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace skewstone {

  // Elements of every finite carrier are dense indices 0..n-1.
  using Elem = std::uint32_t;

  // Subsets of a small carrier (at most 64 points) packed into a word.
  using Mask = std::uint64_t;

  inline constexpr Elem kUndefined = std::numeric_limits<Elem>::max();
  inline constexpr std::size_t kMaskBits = 64;

  // Base class of everything this library throws.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // The input cannot be interpreted as the object it claims to be: wrong table
  // dimensions, out-of-range indices and so on.  Distinct from a law failure.
  class StructuralError : public Error {
   public:
    using Error::Error;
  };

  // An exhaustive computation would exceed a configured size cap.
  class SizeLimitError : public Error {
   public:
    using Error::Error;
  };

  // A precondition on a well-formed input does not hold (not a congruence, not
  // an ideal, not right-handed, ...).  Carries the offending elements.
  class DomainError : public Error {
   public:
    DomainError(std::string const& what, std::vector<Elem> witness)
        : Error(what), _witness(std::move(witness)) {}
    explicit DomainError(std::string const& what) : Error(what) {}

    std::vector<Elem> const& witness() const noexcept {
      return _witness;
    }

   private:
    std::vector<Elem> _witness;
  };

  inline Mask bit(std::size_t i) noexcept {
    return Mask{1} << i;
  }

  inline bool has_bit(Mask m, std::size_t i) noexcept {
    return ((m >> i) & Mask{1}) != 0;
  }

  std::vector<Elem> mask_to_indices(Mask m);
  Mask indices_to_mask(std::vector<Elem> const& xs);

}  // namespace skewstone

#endif  // SKEWSTONE_TYPES_HPP_
