// Finite skew Boolean algebras with intersections, stored as operation tables.
//
// A SkewAlgebra is a carrier {0, ..., n-1} together with the tables of the
// four binary operations meet, join, relative complement and intersection and
// a designated zero.  Construction only checks that the tables are
// well-formed; whether the equational axioms hold is decided by
// validate_algebra, which reports every violated law with a witness.

#ifndef SKEWSTONE_ALGEBRA_HPP_
#define SKEWSTONE_ALGEBRA_HPP_

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "skewstone/types.hpp"

namespace skewstone {

  enum class Op { meet, join, diff, cap };

  std::string_view op_name(Op op) noexcept;

  class SkewAlgebra {
   public:
    // Throws StructuralError unless n >= 1, zero < n and every table has n*n
    // entries in range.  Tables are row-major: meet[x * n + y] = x ∧ y.
    SkewAlgebra(Elem                n,
                Elem                zero,
                std::vector<Elem>   meet,
                std::vector<Elem>   join,
                std::vector<Elem>   diff,
                std::vector<Elem>   cap);

    // Builds the tables by evaluating the given operations on all pairs.
    template <typename Meet, typename Join, typename Diff, typename Cap>
    static SkewAlgebra
    from_operations(Elem n, Elem zero, Meet&& m, Join&& j, Diff&& d, Cap&& c) {
      std::vector<Elem> mt(std::size_t(n) * n), jt(mt.size()), dt(mt.size()),
          ct(mt.size());
      for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
          std::size_t i = std::size_t(x) * n + y;
          mt[i]         = m(x, y);
          jt[i]         = j(x, y);
          dt[i]         = d(x, y);
          ct[i]         = c(x, y);
        }
      }
      return SkewAlgebra(n,
                         zero,
                         std::move(mt),
                         std::move(jt),
                         std::move(dt),
                         std::move(ct));
    }

    Elem size() const noexcept {
      return _n;
    }
    Elem zero() const noexcept {
      return _zero;
    }

    Elem meet(Elem x, Elem y) const noexcept {
      return _meet[std::size_t(x) * _n + y];
    }
    Elem join(Elem x, Elem y) const noexcept {
      return _join[std::size_t(x) * _n + y];
    }
    Elem diff(Elem x, Elem y) const noexcept {
      return _diff[std::size_t(x) * _n + y];
    }
    Elem cap(Elem x, Elem y) const noexcept {
      return _cap[std::size_t(x) * _n + y];
    }
    Elem apply(Op op, Elem x, Elem y) const noexcept;

    std::vector<Elem> const& table(Op op) const noexcept;

    bool operator==(SkewAlgebra const&) const = default;

   private:
    Elem              _n;
    Elem              _zero;
    std::vector<Elem> _meet;
    std::vector<Elem> _join;
    std::vector<Elem> _diff;
    std::vector<Elem> _cap;
  };

  using AlgebraRef = std::shared_ptr<SkewAlgebra const>;

  inline AlgebraRef share(SkewAlgebra a) {
    return std::make_shared<SkewAlgebra const>(std::move(a));
  }

  ////////////////////////////////////////////////////////////////////////
  // Partitions
  ////////////////////////////////////////////////////////////////////////

  // An equivalence relation on 0..n-1.  Block ids are assigned in order of
  // first occurrence, so block i is the block whose least element is the
  // i-th smallest block minimum; blocks are sorted.
  class Partition {
   public:
    Partition() = default;
    // Canonicalises arbitrary labels.
    explicit Partition(std::vector<Elem> const& labels);

    static Partition identity(Elem n);
    static Partition full(Elem n);

    Elem size() const noexcept {
      return static_cast<Elem>(_labels.size());
    }
    Elem block_count() const noexcept {
      return static_cast<Elem>(_blocks.size());
    }
    Elem label(Elem x) const noexcept {
      return _labels[x];
    }
    bool same(Elem x, Elem y) const noexcept {
      return _labels[x] == _labels[y];
    }
    // Least element of block b.
    Elem representative(Elem b) const noexcept {
      return _blocks[b].front();
    }
    std::vector<Elem> const& labels() const noexcept {
      return _labels;
    }
    std::vector<std::vector<Elem>> const& blocks() const noexcept {
      return _blocks;
    }

    bool refines(Partition const& coarser) const;

    bool operator==(Partition const&) const = default;

   private:
    std::vector<Elem>              _labels;
    std::vector<std::vector<Elem>> _blocks;
  };

  // Least equivalence containing both.
  Partition partition_join(Partition const& a, Partition const& b);

  // The partition of 0..n-1 described by an equivalence relation, labelling
  // each x by the least element related to it.  Throws DomainError naming
  // `what` (witness x, y) if rel is not an equivalence.
  Partition partition_from_relation(Elem                                 n,
                                    std::function<bool(Elem, Elem)> const& rel,
                                    std::string_view                     what);

  ////////////////////////////////////////////////////////////////////////
  // Validation
  ////////////////////////////////////////////////////////////////////////

  struct LawFailure {
    std::string       law;
    std::vector<Elem> witness;

    bool operator==(LawFailure const&) const = default;
  };

  struct ValidationReport {
    std::vector<LawFailure>  failures;
    // Consequences of the axioms that failed; reported but never fatal.
    std::vector<LawFailure>  warnings;
    // Checks that were not run because of size limits.
    std::vector<std::string> skipped;

    bool ok() const noexcept {
      return failures.empty();
    }
  };

  // An identity or quasi-identity checked by exhaustive substitution.
  struct Law {
    std::string_view name;
    unsigned         arity;
    // Derived laws are theorems of the theory and only produce warnings.
    bool derived;
    bool (*holds)(SkewAlgebra const&, std::span<Elem const>);
  };

  std::span<Law const> algebra_laws();
  Law const*           find_law(std::string_view name);

  struct ValidateOptions {
    // Hard cap on n for the O(n^3) checks.
    Elem max_size = 64;
    // The four-variable normality check is skipped above this size.
    Elem max_size_quartic = 32;
  };

  // Checks every law of algebra_laws() over all tuples in lexicographic
  // order, recording the first violating tuple of each law.  Throws
  // SizeLimitError if A.size() exceeds options.max_size.
  ValidationReport validate_algebra(SkewAlgebra const&     A,
                                    ValidateOptions const& options = {});

  ////////////////////////////////////////////////////////////////////////
  // Orders and Green's relations
  ////////////////////////////////////////////////////////////////////////

  // x ≤ y iff x ∧ y = y ∧ x = x.
  bool natural_leq(SkewAlgebra const& A, Elem x, Elem y);
  // x ≤ y iff x ∨ y = y ∨ x = y.
  bool natural_leq_by_join(SkewAlgebra const& A, Elem x, Elem y);
  // x ⪯ y iff x ∧ y ∧ x = x.
  bool natural_preceq(SkewAlgebra const& A, Elem x, Elem y);
  // x ⪯ y iff y ∨ x ∨ y = y.
  bool natural_preceq_by_join(SkewAlgebra const& A, Elem x, Elem y);

  struct GreenRelations {
    Partition D;
    Partition L;
    Partition R;
  };

  // Computes D, L and R from their defining equations and checks that each
  // is a congruence for ∧, ∨ and \; throws DomainError with a witness if not
  // (which only happens for invalid algebras).
  GreenRelations green_partitions(SkewAlgebra const& A);

  enum class OpSet : unsigned {
    meet = 1,
    join = 2,
    diff = 4,
    cap  = 8,
    lattice = meet | join | diff,
    all     = meet | join | diff | cap
  };

  constexpr bool contains(OpSet s, Op op) noexcept {
    return (static_cast<unsigned>(s) & (1u << static_cast<unsigned>(op))) != 0;
  }

  struct CongruenceViolation {
    Op   op;
    // x ~ x' but op(x, y) and op(x', y) (or op(y, x), op(y, x')) differ.
    Elem x;
    Elem x_prime;
    Elem y;
    bool on_left;
  };

  std::optional<CongruenceViolation>
  congruence_violation(SkewAlgebra const& A, Partition const& c, OpSet ops);

  ////////////////////////////////////////////////////////////////////////
  // Constructions
  ////////////////////////////////////////////////////////////////////////

  // A structure map together with the algebra it lands in.
  struct Quotient {
    SkewAlgebra       algebra;
    // map[x] is the block of x, i.e. the quotient element.
    std::vector<Elem> map;
  };

  enum class QuotientCap {
    // Use the induced ∩ when c is compatible with ∩, otherwise take the
    // greatest lower bound in the quotient.
    induced_or_glb,
    // Reject partitions that are not compatible with ∩.
    require_induced
  };

  // Block-indexed quotient with tables induced on least representatives.
  // Throws DomainError (witness x, x', y) if c is not a congruence for ∧, ∨
  // and \ (and ∩ under QuotientCap::require_induced).
  Quotient quotient_by(SkewAlgebra const& A,
                       Partition const&   c,
                       QuotientCap        cap = QuotientCap::induced_or_glb);

  // The ∩ table determined by ∧ as the greatest lower bound for ≤, or
  // nullopt if some pair has no greatest lower bound.
  std::optional<std::vector<Elem>> glb_table(Elem n, std::vector<Elem> const& meet);

  // The opposite algebra: ∧ and ∨ mirrored, \ and ∩ unchanged.
  SkewAlgebra mirror(SkewAlgebra const& A);

  // The subalgebra on a subset closed under all operations and containing 0.
  // Elements are renumbered in increasing order; the second component is the
  // inclusion map.  Throws DomainError if the subset is not closed.
  Quotient subalgebra(SkewAlgebra const& A, std::vector<Elem> const& members);

  struct FiberProduct {
    SkewAlgebra                        algebra;
    // Pairs (a, b) with f(a) = g(b), in lexicographic order.
    std::vector<std::pair<Elem, Elem>> pairs;
    std::vector<Elem>                  first;
    std::vector<Elem>                  second;
  };

  // Pullback of f : A -> C and g : B -> C where f and g preserve 0, ∧, ∨ and
  // \.  The operations are componentwise except ∩, which is the greatest
  // lower bound inside the pullback.
  FiberProduct fiber_product(SkewAlgebra const&       A,
                             std::vector<Elem> const& f,
                             SkewAlgebra const&       B,
                             std::vector<Elem> const& g);

  enum class Handedness { right, left, commutative, neither };

  std::string_view handedness_name(Handedness h) noexcept;
  Handedness       handedness(SkewAlgebra const& A);

  // Builds A/L, A/R, A/D and checks that a ↦ ([a]_R, [a]_L) is an
  // isomorphism onto A/R ×_{A/D} A/L.
  bool second_decomposition_check(SkewAlgebra const& A);

  ////////////////////////////////////////////////////////////////////////
  // Standard instances
  ////////////////////////////////////////////////////////////////////////

  namespace algebras {
    // {0}.
    SkewAlgebra trivial();
    // The right-handed algebra {0, 1, 2} with D-classes {0} and {1, 2}.
    SkewAlgebra three();
    // The Boolean algebra of subsets of a k-element set; element i is the
    // subset with characteristic bitmask i.
    SkewAlgebra boolean(unsigned k);
  }  // namespace algebras

}  // namespace skewstone

#endif  // SKEWSTONE_ALGEBRA_HPP_
