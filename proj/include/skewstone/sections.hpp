// Sections of a finite skew Boolean space and the algebras built from them:
// the dual algebra of a (rectangular) space and the algebra of partial maps
// X ⇀ Y with operations lifted from a coherent family of rectangular bands.
//
// Subsets of E (and of B) are Masks, so everything here requires at most 64
// points; larger inputs raise SizeLimitError.

#ifndef SKEWSTONE_SECTIONS_HPP_
#define SKEWSTONE_SECTIONS_HPP_

#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "skewstone/algebra.hpp"
#include "skewstone/space.hpp"

namespace skewstone {

  // Throws SizeLimitError if E or B does not fit in a Mask.
  void require_mask_space(SkewSpace const& sp);

  // True iff p is injective on S.
  bool is_section(SkewSpace const& sp, Mask S);

  // p(S) as a subset of B.
  Mask project(SkewSpace const& sp, Mask S);

  // p⁻¹(U) for U ⊆ B.
  Mask preimage(SkewSpace const& sp, Mask U);

  // σ(S) = p⁻¹(p(S)).
  Mask saturate(SkewSpace const& sp, Mask S);

  // Lexicographic order on the sorted index lists of two subsets; ∅ is least.
  bool subset_lex_less(Mask a, Mask b) noexcept;

  // All sections in subset_lex_less order, so index 0 is ∅.  Throws
  // SizeLimitError if there are more than max_count of them.
  std::vector<Mask> enumerate_sections(SkewSpace const& sp,
                                       std::size_t      max_count = 4096);

  // An algebra whose elements are sections of a space; element i is
  // sections[i].
  struct DualAlgebra {
    SkewAlgebra                    algebra;
    std::vector<Mask>              sections;
    std::unordered_map<Mask, Elem> index;

    Elem index_of(Mask S) const;
  };

  // 0 = ∅, S ∧ R = σ(S) ∩ R, S ∨ R = S ∪ (R − σ(S)), S \ R = S − σ(R),
  // S ∩ R = S ∩ R.  Any band on sp is ignored.
  DualAlgebra dual_algebra_right(SkewSpace const& sp, std::size_t max_count = 4096);

  // Fiberwise: S ∧ R is s_b ⋏ r_b over p(S) ∩ p(R),
  // S ∨ R = (S − σ(R)) ∪ (R − σ(S)) ∪ (R ∧ S), S \ R = S − σ(R),
  // S ∩ R = S ∩ R.  Throws DomainError if sp has no band.
  DualAlgebra dual_algebra_rect(SkewSpace const& sp, std::size_t max_count = 4096);

  // dual_algebra_rect if sp has a band, dual_algebra_right otherwise.
  DualAlgebra dual_algebra(SkewSpace const& sp, std::size_t max_count = 4096);

  // Checks that S ↦ p(S) is onto the subsets of B, preserves 0, ∧ and ∨
  // (as ∩ and ∪), and that p(S) = p(R) exactly when S D R in the dual.
  bool reflection_check(SkewSpace const& sp);

  ////////////////////////////////////////////////////////////////////////
  // Partial maps
  ////////////////////////////////////////////////////////////////////////

  // A partial map between dense index sets, stored densely.
  class PartialMap {
   public:
    PartialMap() = default;
    // Everywhere undefined on a source of the given size.
    explicit PartialMap(Elem source_size);
    // values[x] = kUndefined outside the domain.
    explicit PartialMap(std::vector<Elem> values);
    // From aligned domain/value lists.  Throws StructuralError on repeated
    // or out-of-range domain points.
    PartialMap(Elem                     source_size,
               std::vector<Elem> const& domain,
               std::vector<Elem> const& values);

    static PartialMap identity(Elem n);

    Elem source_size() const noexcept {
      return static_cast<Elem>(_values.size());
    }
    bool defined(Elem x) const noexcept {
      return _values[x] != kUndefined;
    }
    Elem operator()(Elem x) const noexcept {
      return _values[x];
    }
    void set(Elem x, Elem v) {
      _values[x] = v;
    }
    bool total() const noexcept;

    std::vector<Elem>        domain() const;
    // Values on domain(), aligned.
    std::vector<Elem>        image_values() const;
    std::vector<Elem> const& values() const noexcept {
      return _values;
    }

    // this ∘ first: x ↦ this(first(x)).
    PartialMap after(PartialMap const& first) const;

    bool operator==(PartialMap const&) const = default;

   private:
    std::vector<Elem> _values;
  };

  // Coherent family of rectangular bands on partial maps with domain D:
  // family(D, f, g) returns f ⋏_D g, where f and g are total on D (values
  // outside D are ignored) and the result is again total on D.
  using BandFamily = std::function<PartialMap(Mask D, PartialMap const& f, PartialMap const& g)>;

  // The pointwise lift of a band on Y: (f ⋏_D g)(x) = f(x) ⋏ g(x).
  BandFamily pointwise_family(RectBand band);

  // Element i of the algebra is the partial map whose value at x is
  // (i / (m+1)^x) % (m+1) - 1, digit 0 meaning undefined; 0 is the empty map.
  struct PartialMapAlgebra {
    SkewAlgebra algebra;
    Elem        x_size;
    Elem        y_size;

    PartialMap decode(Elem code) const;
    Elem       encode(PartialMap const& f) const;
  };

  // P(X, Y) with
  //   f ∧ g = f|_{F∩G} ⋏ g|_{F∩G},
  //   f ∨ g = f|_{F−G} ∪ g|_{G−F} ∪ (g ∧ f),
  //   f \ g = f|_{F−G},  f ∩ g = f ∩ g (as graphs).
  // Throws SizeLimitError if (|Y|+1)^|X| exceeds max_count and DomainError if
  // the family fails coherence (witness D, x, f, g codes).
  PartialMapAlgebra partial_map_algebra(Elem              x_size,
                                        Elem              y_size,
                                        BandFamily const& family,
                                        std::size_t       max_count = 4096);

  PartialMapAlgebra partial_map_algebra(Elem            x_size,
                                        Elem            y_size,
                                        RectBand const& band,
                                        std::size_t     max_count = 4096);

  // Checks (f ⋏_D g)|_{D−{x}} = f|_{D−{x}} ⋏_{D−{x}} g|_{D−{x}} for every D ⊆ X,
  // x ∈ D and f, g total on D, which implies coherence for all D' ⊆ D.
  // Returns the first violation as (D, x, code f, code g).
  std::optional<std::vector<Elem>> coherence_violation(Elem              x_size,
                                                       Elem              y_size,
                                                       BandFamily const& family);

}  // namespace skewstone

#endif  // SKEWSTONE_SECTIONS_HPP_
