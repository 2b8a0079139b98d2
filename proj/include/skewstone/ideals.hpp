// Ideals, prime ideals and the congruences they generate; the skew spectrum
// Sk(A) -> St(A) of an algebra with its fiberwise band.

#ifndef SKEWSTONE_IDEALS_HPP_
#define SKEWSTONE_IDEALS_HPP_

#include <compare>
#include <optional>
#include <vector>

#include "skewstone/algebra.hpp"
#include "skewstone/sections.hpp"
#include "skewstone/space.hpp"

namespace skewstone {

  // A ⪯-downward closed, ∨-closed subset containing 0, as a sorted list.
  struct Ideal {
    std::vector<Elem> members;

    bool contains(Elem x) const;
    auto operator<=>(Ideal const&) const = default;
  };

  struct PrimeIdeal {
    Ideal       ideal;
    std::size_t index;
  };

  // First witness against the ideal laws: {0} if 0 is missing, (x, y) with
  // x ∈ I, y ⪯ x, y ∉ I, or (x, y) with x, y ∈ I and x ∨ y ∉ I.
  std::optional<std::vector<Elem>> ideal_violation(SkewAlgebra const&       A,
                                                   std::vector<Elem> const& members);

  // First witness against primality of an ideal: {} if I = A, otherwise
  // (a, b) with a ∧ b ∈ I but a, b ∉ I.
  std::optional<std::vector<Elem>> prime_violation(SkewAlgebra const& A,
                                                   Ideal const&       I);

  // All ideals in lexicographic order of member lists.  Ideals are unions of
  // D-classes and correspond to the principal ideals of A/D.
  std::vector<Ideal> enumerate_ideals(SkewAlgebra const& A);

  // All prime ideals in lexicographic order.  Computed as {a : t ≰ [a]} for
  // the atoms t of A/D; each is checked to be the kernel of a non-zero
  // {0, ∧, ∨}-map A -> 2.
  std::vector<PrimeIdeal> enumerate_prime_ideals(SkewAlgebra const& A);

  // x ~ y iff (x \ (x ∩ y)) ∨ (y \ (x ∩ y)) ∈ I.  Throws DomainError if I is
  // not an ideal, and checks that the result is a congruence for all four
  // operations whose zero class is I.
  Partition theta_congruence(SkewAlgebra const& A, Ideal const& I);

  // result[i] is the index of the prime ideal P_i / D among the primes of
  // A/D.  Checked to be a bijection.
  std::vector<std::size_t> prime_reflection_bijection(SkewAlgebra const& A);

  // c = (a ∧ b ∧ a) ∨ b ∨ (a ∧ b ∧ a): for a, b ∉ P, c θ_P a and c D b.
  Elem cut_across_witness(SkewAlgebra const& A, Elem a, Elem b);

  ////////////////////////////////////////////////////////////////////////
  // Spectrum
  ////////////////////////////////////////////////////////////////////////

  struct SpectrumPoint {
    Elem prime;
    // Least element of the θ_P-class; never in P.
    Elem rep;

    bool operator==(SpectrumPoint const&) const = default;
  };

  struct Spectrum {
    // B = prime ideals, E = points ordered by (prime, rep), with the band
    // ⟨P, a⟩ ⋏ ⟨P, b⟩ = ⟨P, a ∧ b⟩.
    SkewSpace                      space;
    std::vector<SpectrumPoint>     points;
    std::vector<Ideal>             primes;
    std::vector<Partition>         thetas;
    // point_of[P][a] is the point ⟨P, a⟩, or kUndefined when a ∈ P.
    std::vector<std::vector<Elem>> point_of;
  };

  Spectrum skew_spectrum(SkewAlgebra const& A);

  // M_a = {⟨P, a⟩ : a ∉ P}.
  Mask basic_copen(Spectrum const& sk, Elem a);

  // N_a = q(M_a) ⊆ St(A): the primes not containing a.
  Mask basic_base_copen(Spectrum const& sk, Elem a);

  ////////////////////////////////////////////////////////////////////////
  // Generated ideals
  ////////////////////////////////////////////////////////////////////////

  // Least ≤-downward closed, ∨-closed subset containing S (and 0).
  std::vector<Elem> leq_ideal_generated(SkewAlgebra const& A, std::vector<Elem> const& S);

  // Least ideal containing S.
  Ideal preceq_ideal_generated(SkewAlgebra const& A, std::vector<Elem> const& S);

  bool is_leq_cofinal(SkewAlgebra const& A, std::vector<Elem> const& S);
  bool is_preceq_cofinal(SkewAlgebra const& A, std::vector<Elem> const& S);

  // Closed under ≤ downward and under ∨ (both orders of arguments).
  bool is_leq_ideal(SkewAlgebra const& A, std::vector<Elem> const& S);

}  // namespace skewstone

#endif  // SKEWSTONE_IDEALS_HPP_
