// Homomorphisms of algebras, morphisms of spaces, and the two functors
// between them together with the comparison isomorphisms φ_A : A -> A_{Sk(A)}
// and ψ_p : p -> Sk(A_p).

#ifndef SKEWSTONE_MORPHISMS_HPP_
#define SKEWSTONE_MORPHISMS_HPP_

#include <optional>
#include <vector>

#include "skewstone/algebra.hpp"
#include "skewstone/ideals.hpp"
#include "skewstone/sections.hpp"
#include "skewstone/space.hpp"

namespace skewstone {

  ////////////////////////////////////////////////////////////////////////
  // Homomorphisms
  ////////////////////////////////////////////////////////////////////////

  struct Homomorphism {
    AlgebraRef        source;
    AlgebraRef        target;
    std::vector<Elem> map;
  };

  // Failures are named preserves_zero (no witness) and preserves_<op>
  // (witness x, y); a map of the wrong length or with out-of-range values
  // throws StructuralError.
  ValidationReport validate_hom(Homomorphism const& f);

  Homomorphism identity_hom(AlgebraRef A);

  // second ∘ first.
  Homomorphism compose(Homomorphism const& second, Homomorphism const& first);

  struct HomSearchOptions {
    // Branching steps of the backtracking search before giving up.
    double      max_steps   = 1e7;
    std::size_t max_results = 1000000;
  };

  // All homomorphisms A -> A' as maps, in lexicographic order.  Backtracks
  // over elements in index order, propagating forced values through the
  // four operations and keeping D-classes inside D-classes.  Throws
  // SizeLimitError when either limit of the options is exceeded.
  std::vector<std::vector<Elem>> enumerate_homs(SkewAlgebra const&      A,
                                                SkewAlgebra const&      target,
                                                HomSearchOptions const& options = {});

  // Some isomorphism A -> B, or nullopt.  Cheap invariants are compared
  // first; the search only pairs elements with equal invariant signatures.
  std::optional<std::vector<Elem>> find_algebra_isomorphism(SkewAlgebra const& A,
                                                            SkewAlgebra const& B);

  ////////////////////////////////////////////////////////////////////////
  // Space morphisms
  ////////////////////////////////////////////////////////////////////////

  // A commuting square of partial maps g : E ⇀ E', h : B ⇀ B'.
  struct SpaceMorphism {
    SpaceRef   source;
    SpaceRef   target;
    PartialMap g;
    PartialMap h;
  };

  // Failures: square (x with p'(g(x)) ≠ h(p(x)) or h undefined at p(x)),
  // domain (b ∈ dom h with no point of dom g above it), fiber_bijective
  // (b ∈ dom h), band (x, y) when both spaces carry bands.
  ValidationReport validate_space_morphism(SpaceMorphism const& m);

  SpaceMorphism identity_morphism(SpaceRef sp);

  // second ∘ first.
  SpaceMorphism compose(SpaceMorphism const& second, SpaceMorphism const& first);

  // Same g and h (sources and targets are compared by value).
  bool same_morphism(SpaceMorphism const& a, SpaceMorphism const& b);

  // All valid morphisms sp -> target, sorted by (h values, g values) with
  // undefined ordered after every point.  Structured enumeration: a partial
  // map h first, then an injection of E'_{h(b)} into E_b for each b.
  std::vector<SpaceMorphism> enumerate_space_morphisms(SpaceRef const& sp,
                                                       SpaceRef const& target,
                                                       std::size_t     max_count = 1000000);

  // Bijections h : B -> B' and g : E -> E' commuting with p and the bands,
  // or nullopt.  Fibers with bands are matched through their rectangular
  // factorisations.
  std::optional<SpaceMorphism> find_space_isomorphism(SpaceRef const& a, SpaceRef const& b);

  ////////////////////////////////////////////////////////////////////////
  // Functors
  ////////////////////////////////////////////////////////////////////////

  // For f : A -> A' with spectra sk_A and sk_A', the morphism
  // Sk(A') -> Sk(A) with h(P) = f⁻¹(P) when that is not all of A and
  // g⟨P, f(a)⟩ = ⟨f⁻¹(P), a⟩.  The result is validated.
  SpaceMorphism dual_of_hom(Homomorphism const& f,
                            Spectrum const&     sk_source,
                            Spectrum const&     sk_target);
  SpaceMorphism dual_of_hom(Homomorphism const& f);

  // For m : p -> p' with duals A_p and A_p', the homomorphism A_p' -> A_p
  // sending S to g⁻¹(S).  Checks p(g⁻¹(S)) = h⁻¹(p'(S)) and validity.
  Homomorphism hom_of_space_morphism(SpaceMorphism const& m,
                                     DualAlgebra const&   dual_source,
                                     DualAlgebra const&   dual_target);
  Homomorphism hom_of_space_morphism(SpaceMorphism const& m);

  struct PhiResult {
    Spectrum     spectrum;
    DualAlgebra  dual;
    // a ↦ M_a, from A to the dual of its spectrum.
    Homomorphism iso;
  };

  // Builds a ↦ M_a and checks that it is a bijective homomorphism; throws
  // DomainError with a witness otherwise.
  PhiResult phi_iso(SkewAlgebra const& A);

  struct PsiResult {
    DualAlgebra   dual;
    Spectrum      spectrum;
    // h(b) = {S : b ∉ p(S)}, g(y) = the class of {y}.
    SpaceMorphism iso;
  };

  // Builds ψ_p : p -> Sk(A_p) and checks that g and h are bijections, that
  // the square commutes, that y ∈ S iff g(y) ∈ M_S, and that g preserves the
  // band when p has one; throws DomainError with a witness otherwise.
  PsiResult psi_iso(SkewSpace const& sp);

}  // namespace skewstone

#endif  // SKEWSTONE_MORPHISMS_HPP_
