// Lattice sections ℓ : A/D -> A of right-handed algebras and global sections
// of spaces, with the constructions turning one into the other.

#ifndef SKEWSTONE_LATTICE_SECTIONS_HPP_
#define SKEWSTONE_LATTICE_SECTIONS_HPP_

#include <optional>
#include <vector>

#include "skewstone/algebra.hpp"
#include "skewstone/ideals.hpp"
#include "skewstone/space.hpp"

namespace skewstone {

  struct LatticeSection {
    // choice[d] is the element picked in D-class d, with D-classes numbered
    // as the elements of quotient_by(A, D).
    std::vector<Elem> choice;

    bool operator==(LatticeSection const&) const = default;
  };

  struct GlobalSection {
    // points[b] lies over b.
    std::vector<Elem> points;

    bool operator==(GlobalSection const&) const = default;
  };

  // choice[d] ∈ d for every class, and choice preserves 0, ∧ and ∨.
  bool is_lattice_section(SkewAlgebra const& A, LatticeSection const& l);

  bool is_global_section(SkewSpace const& sp, GlobalSection const& s);

  // Depth-first search over D-classes in index order, trying elements of a
  // class in increasing order and propagating the values forced by ∧ and ∨.
  // Returns the first section found.  Throws DomainError unless A is right-
  // handed (or commutative).
  std::optional<LatticeSection> find_lattice_section(SkewAlgebra const& A);

  // The least point of every fiber.
  std::optional<GlobalSection> find_global_section(SkewSpace const& sp);

  // Glues the local sections N_d -> M_{ℓ(d)} of Sk(A) -> St(A).  Checks
  // M_{ℓ(d∧e)} = q⁻¹(N_d ∩ N_e) ∩ M_{ℓ(e)} for all d, e and that the result
  // is a global section; throws DomainError otherwise.
  GlobalSection global_from_lattice(SkewAlgebra const&    A,
                                    Spectrum const&       sk,
                                    LatticeSection const& l);

  // V ↦ s(V) on the dual of the spectrum, transported back to A along
  // a ↦ M_a.  Checks s(U) ∧ s(V) = s(U ∩ V), s(U) ∨ s(V) = s(U ∪ V) and the
  // section laws; throws DomainError otherwise.
  LatticeSection lattice_from_global(SkewAlgebra const&   A,
                                     Spectrum const&      sk,
                                     GlobalSection const& s);

  // A lattice section exists iff Sk(A) has a global section, and each
  // witness converts into a valid witness of the other kind.
  bool section_equivalence_check(SkewAlgebra const& A);

}  // namespace skewstone

#endif  // SKEWSTONE_LATTICE_SECTIONS_HPP_
