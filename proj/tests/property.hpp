// A minimal seeded property runner: a generator maps a seed to a case, the
// property returns an empty string on success or a description of the
// failure.  The first failing seed is reported so it can be replayed.

#ifndef SKEWSTONE_TESTS_PROPERTY_HPP_
#define SKEWSTONE_TESTS_PROPERTY_HPP_

#include <cstdint>
#include <optional>
#include <string>

namespace skewstone::testing {

  struct PropertyFailure {
    std::uint64_t seed;
    std::string   message;
  };

  template <typename Gen, typename Prop>
  std::optional<PropertyFailure>
  check_property(std::uint64_t first_seed, std::size_t runs, Gen&& gen, Prop&& prop) {
    for (std::uint64_t s = first_seed; s < first_seed + runs; ++s) {
      auto        value = gen(s);
      std::string why   = prop(value);
      if (!why.empty()) {
        return PropertyFailure{s, why};
      }
    }
    return std::nullopt;
  }

}  // namespace skewstone::testing

#endif  // SKEWSTONE_TESTS_PROPERTY_HPP_
