// Finite skew Boolean spaces: a surjection p : E -> B of finite sets,
// optionally with a rectangular band on every fiber.
//
// Points of E and B are dense indices.  The band, when present, is stored as
// a full |E| x |E| table whose entries are kUndefined off the fiber diagonal.

#ifndef SKEWSTONE_SPACE_HPP_
#define SKEWSTONE_SPACE_HPP_

#include <cstdint>
#include <memory>
#include <vector>

#include "skewstone/algebra.hpp"
#include "skewstone/types.hpp"

namespace skewstone {

  // A rectangular band on {0, ..., k-1}.
  struct RectBand {
    Elem              k = 0;
    std::vector<Elem> table;

    Elem operator()(Elem x, Elem y) const noexcept {
      return table[std::size_t(x) * k + y];
    }

    // x ⋏ y = y.
    static RectBand right(Elem m);
    // x ⋏ y = x.
    static RectBand left(Elem m);
    // Elements are pairs (u, v), u < kL, v < kR, numbered u * kR + v, with
    // (u1, v1) ⋏ (u2, v2) = (u1, v2).  product(1, m) is right(m) and
    // product(m, 1) is left(m).
    static RectBand product(Elem kL, Elem kR);
  };

  class SkewSpace {
   public:
    // The empty space.
    SkewSpace() = default;
    // A plain space.  Throws StructuralError if some p[x] >= B.
    SkewSpace(Elem B, std::vector<Elem> p);
    // A space with a band table of |E| * |E| entries, each a point of E or
    // kUndefined.  Whether the band is rectangular and defined exactly on
    // fibers is left to validate_space.
    SkewSpace(Elem B, std::vector<Elem> p, std::vector<Elem> band);

    // Builds the band from one RectBand per base point, identifying the i-th
    // point of a fiber (in increasing order) with band element i.
    static SkewSpace with_fiber_bands(Elem                         B,
                                      std::vector<Elem>            p,
                                      std::vector<RectBand> const& bands);

    Elem size_E() const noexcept {
      return static_cast<Elem>(_p.size());
    }
    Elem size_B() const noexcept {
      return _B;
    }
    Elem p(Elem x) const noexcept {
      return _p[x];
    }
    std::vector<Elem> const& projection() const noexcept {
      return _p;
    }
    // Points over b in increasing order.
    std::vector<Elem> const& fiber(Elem b) const noexcept {
      return _fibers[b];
    }
    // Position of x within its fiber.
    Elem fiber_position(Elem x) const noexcept {
      return _position[x];
    }

    bool has_band() const noexcept {
      return _has_band;
    }
    Elem band(Elem x, Elem y) const noexcept {
      return _band[std::size_t(x) * _p.size() + y];
    }
    std::vector<Elem> const& band_table() const noexcept {
      return _band;
    }

    // The same space without its band.
    SkewSpace plain() const;

    bool operator==(SkewSpace const& other) const {
      return _B == other._B && _p == other._p && _has_band == other._has_band
             && _band == other._band;
    }

   private:
    void index_fibers();

    Elem                           _B = 0;
    std::vector<Elem>              _p;
    std::vector<Elem>              _band;
    bool                           _has_band = false;
    std::vector<std::vector<Elem>> _fibers;
    std::vector<Elem>              _position;
  };

  using SpaceRef = std::shared_ptr<SkewSpace const>;

  inline SpaceRef share(SkewSpace s) {
    return std::make_shared<SkewSpace const>(std::move(s));
  }

  // Surjectivity of p and, if a band is present, definedness exactly on
  // pairs in a common fiber, closure within fibers, idempotency,
  // associativity and the rectangle identity x ⋏ y ⋏ z = x ⋏ z.
  ValidationReport validate_space(SkewSpace const& sp);

  // The fiber band over b as a RectBand on fiber positions.
  RectBand fiber_band(SkewSpace const& sp, Elem b);

  // (R-class, L-class) of every point within its fiber, classes numbered in
  // order of least point, where x R y iff x ⋏ y = y and y ⋏ x = x, and
  // x L y iff x ⋏ y = x and y ⋏ x = y.  Without a band the point at fiber
  // position i gets (i, 0).
  std::vector<std::pair<Elem, Elem>> band_coordinates(SkewSpace const& sp);

  ////////////////////////////////////////////////////////////////////////
  // Generators
  ////////////////////////////////////////////////////////////////////////

  enum class BandKind { none, right, left, product, mixed };

  struct RandomSpaceOptions {
    Elem     size_B    = 2;
    // Fibers have between 1 and max_fiber points.
    Elem     max_fiber = 2;
    BandKind band      = BandKind::none;
    // For BandKind::product every fiber is product(kL, kR).  For
    // BandKind::mixed the fiber over b is product(kL_b, kR_b) with
    // 1 <= kL_b <= kL and 1 <= kR_b <= kR drawn at random.  In both cases
    // max_fiber is ignored.
    Elem     kL = 1;
    Elem     kR = 1;
  };

  // Deterministic in (options, seed): fiber sizes are drawn first, then
  // points of E are shuffled so that fibers are not contiguous.
  SkewSpace random_space(RandomSpaceOptions const& options, std::uint64_t seed);

  // Every surjection from {0, ..., e-1} onto some {0, ..., B-1}, as plain
  // spaces.  With up_to_base_relabeling only restricted growth strings are
  // kept (fibers are numbered in order of their least point), which lists
  // each partition of E once.
  std::vector<SkewSpace> all_surjections(Elem e, bool up_to_base_relabeling = false);

}  // namespace skewstone

#endif  // SKEWSTONE_SPACE_HPP_
