// Rectangular spaces as pairs of plain spaces over a common base, the
// decomposition of space morphisms into a partial identity followed by a
// total morphism, and the flags that single out the restricted classes of
// morphisms on either side.

#ifndef SKEWSTONE_VARIANTS_HPP_
#define SKEWSTONE_VARIANTS_HPP_

#include <vector>

#include "skewstone/morphisms.hpp"

namespace skewstone {

  ////////////////////////////////////////////////////////////////////////
  // Pairs
  ////////////////////////////////////////////////////////////////////////

  struct SpacePair {
    // Fiberwise quotient of E by R (points with equal ⋏-left factor).
    SkewSpace         left;
    // Fiberwise quotient of E by L (points with equal ⋏-right factor).
    SkewSpace         right;
    // Quotient maps E -> left.E and E -> right.E; empty for from-scratch
    // pairs.
    std::vector<Elem> to_left;
    std::vector<Elem> to_right;
  };

  // Points of each quotient are numbered by (base point, least member).
  // Throws DomainError if sp has no band.
  SpacePair to_pair(SkewSpace const& sp);

  // E = ⋃_b left_b × right_b ordered by (b, u, v), with
  // (u1, v1) ⋏ (u2, v2) = (u1, v2).  Throws DomainError if the bases differ.
  SkewSpace from_pair(SkewSpace const& left, SkewSpace const& right);

  // x ↦ (q_R(x), q_L(x)) is a band isomorphism sp -> from_pair(to_pair(sp)),
  // and to_pair(from_pair(P)) has the same fiber sizes as P.
  bool pair_roundtrip_check(SkewSpace const& sp);

  ////////////////////////////////////////////////////////////////////////
  // Space morphisms
  ////////////////////////////////////////////////////////////////////////

  struct MorphismDecomposition {
    // The restriction of the source to dom g -> dom h, points renumbered
    // in increasing order.
    SpaceRef      middle;
    // source -> middle.
    SpaceMorphism partial_identity;
    // middle -> target; total, hence a pullback square.
    SpaceMorphism total;
  };

  // Checks that total ∘ partial_identity = m and that both parts are valid.
  MorphismDecomposition decompose_morphism(SpaceMorphism const& m);

  struct SpaceMorphismFlags {
    bool total;
    bool semitotal;
    // dom g = p⁻¹(dom h).
    bool saturated;
    // For every U ⊆ B' and section S over h⁻¹(U) there is a section R over
    // U with S = g⁻¹(R).
    bool section_lifting;
    // g : dom g -> E' and h : dom h -> B' are bijections, i.e. m is a partial
    // identity up to isomorphism.
    bool partial_identity;
  };

  SpaceMorphismFlags classify_space_morphism(SpaceMorphism const& m);

  ////////////////////////////////////////////////////////////////////////
  // Homomorphisms
  ////////////////////////////////////////////////////////////////////////

  struct HomFlags {
    bool leq_cofinal;
    bool preceq_cofinal;
    // The image is a union of D-classes.
    bool D_saturated;
    // f is injective with image a ≤-ideal.
    bool leq_ideal_inclusion;
    // ⟨im f⟩≤ is closed downward under ⪯.
    bool image_ideal_preceq_closed;
  };

  HomFlags classify_hom(Homomorphism const& f);

  struct HomFactorization {
    // ⟨im f⟩≤ as a subalgebra of the target.
    AlgebraRef   middle;
    // Corestriction of f; ≤-cofinal.
    Homomorphism cofinal;
    // middle ↪ target; a ≤-ideal inclusion.
    Homomorphism inclusion;
  };

  // Checks inclusion ∘ cofinal = f and the two flags.
  HomFactorization hom_factorization(Homomorphism const& f);

  // The image of f in the target, sorted.
  std::vector<Elem> image_of(Homomorphism const& f);

}  // namespace skewstone

#endif  // SKEWSTONE_VARIANTS_HPP_
