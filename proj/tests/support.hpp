// Shared fixtures for the test binaries: the small algebras used throughout,
// the seeded space corpus, and hand-mutated tables.

#ifndef SKEWSTONE_TESTS_SUPPORT_HPP_
#define SKEWSTONE_TESTS_SUPPORT_HPP_

#include <string>
#include <vector>

#include "skewstone/algebra.hpp"
#include "skewstone/space.hpp"

namespace skewstone::testing {

  struct NamedAlgebra {
    std::string name;
    SkewAlgebra algebra;
  };

  struct NamedSpace {
    std::string name;
    SkewSpace   space;
  };

  // Algebras with at most 5 elements: right-, left- and neither-handed.
  std::vector<NamedAlgebra> small_algebras();

  // The neither-handed pullback of 3 and its mirror over 2.
  SkewAlgebra three_by_mirror();

  // At least 200 seeded spaces with |E| <= 8 covering every band kind.
  std::vector<NamedSpace> generator_corpus();

  // Seeded spaces with product or mixed bands and fibers up to
  // max_side x max_side.
  std::vector<NamedSpace> rect_corpus(std::size_t count, Elem max_side, Elem max_base);

  struct Mutation {
    std::string name;
    SkewAlgebra algebra;
    // A law the mutated table must violate.
    std::string law;
  };

  // Twenty single-entry corruptions of valid tables.
  std::vector<Mutation> mutated_tables();

  // A copy of A with one table entry replaced.
  SkewAlgebra mutate(SkewAlgebra const& A, Op op, Elem x, Elem y, Elem value);

  // Independent evaluation of each axiom on a tuple, written from the
  // equations rather than through the law registry.
  bool oracle_law_holds(SkewAlgebra const& A, std::string const& law, std::vector<Elem> const& t);

}  // namespace skewstone::testing

#endif  // SKEWSTONE_TESTS_SUPPORT_HPP_
