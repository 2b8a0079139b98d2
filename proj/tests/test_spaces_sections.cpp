#include <algorithm>
#include <map>

#include "doctest.h"
#include "oracles.hpp"
#include "skewstone/sections.hpp"
#include "skewstone/space.hpp"
#include "support.hpp"

using namespace skewstone;
using namespace skewstone::testing;

TEST_SUITE("spaces_sections") {
  TEST_CASE("rectangular bands") {
    RectBand r = RectBand::right(3), l = RectBand::left(3), p = RectBand::product(2, 3);
    CHECK(r(0, 2) == 2);
    CHECK(l(0, 2) == 0);
    // (0, 1) ⋏ (1, 2) = (0, 2)
    CHECK(p(1, 5) == 2);
    CHECK(RectBand::product(1, 3).table == r.table);
    CHECK(RectBand::product(3, 1).table == l.table);
  }

  TEST_CASE("space validation") {
    CHECK(validate_space(SkewSpace(2, {0, 0, 1})).ok());
    ValidationReport r = validate_space(SkewSpace(3, {0, 0, 1}));
    REQUIRE_FALSE(r.ok());
    CHECK(r.failures.front().law == "surjective");
    CHECK_THROWS_AS(SkewSpace(1, {0, 1}), StructuralError);

    // Not a rectangular band: x ⋏ y = 0 on a two-point fiber.
    SkewSpace bad(1, {0, 0}, {0, 0, 0, 0});
    ValidationReport rb = validate_space(bad);
    REQUIRE_FALSE(rb.ok());
    CHECK(rb.failures.front().law == "band_idempotent");

    SkewSpace cross(2, {0, 1}, {0, 1, 1, 1});
    CHECK(validate_space(cross).failures.front().law == "band_defined");
  }

  TEST_CASE("every band kind of the corpus validates") {
    for (auto const& [name, sp] : generator_corpus()) {
      CAPTURE(name);
      CHECK(validate_space(sp).ok());
      CHECK(sp.size_E() <= 8);
    }
  }

  TEST_CASE("random_space is deterministic in the seed") {
    RandomSpaceOptions o;
    o.band   = BandKind::mixed;
    o.size_B = 3;
    o.kL = o.kR = 2;
    CHECK(random_space(o, 42) == random_space(o, 42));
    bool differs = false;
    for (std::uint64_t s = 1; s < 10 && !differs; ++s) {
      differs = !(random_space(o, s) == random_space(o, 42));
    }
    CHECK(differs);
  }

  TEST_CASE("band coordinates of a product fiber") {
    SkewSpace sp   = SkewSpace::with_fiber_bands(1, {0, 0, 0, 0}, {RectBand::product(2, 2)});
    auto      bc   = band_coordinates(sp);
    std::vector<std::pair<Elem, Elem>> want = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    CHECK(bc == want);
  }

  TEST_CASE("surjection counts") {
    // Ordered Bell numbers and Bell numbers.
    std::vector<std::size_t> fubini = {1, 1, 3, 13, 75, 541, 4683};
    std::vector<std::size_t> bell   = {1, 1, 2, 5, 15, 52, 203};
    for (Elem e = 0; e <= 6; ++e) {
      CAPTURE(e);
      CHECK(all_surjections(e).size() == fubini[e]);
      CHECK(all_surjections(e, true).size() == bell[e]);
    }
  }

  TEST_CASE("sections of a small space") {
    SkewSpace sp(2, {0, 0, 1});
    auto      s = enumerate_sections(sp);
    // (2 + 1) * (1 + 1)
    CHECK(s.size() == 6);
    CHECK(s.front() == 0);
    CHECK(std::is_sorted(s.begin(), s.end(), subset_lex_less));
    for (Mask m : s) {
      CHECK(is_section(sp, m));
    }
    CHECK_FALSE(is_section(sp, 0b011));
    CHECK(project(sp, 0b101) == 0b11);
    CHECK(preimage(sp, 0b01) == 0b011);
    CHECK(saturate(sp, 0b001) == 0b011);
  }

  TEST_CASE("section enumeration respects its cap") {
    CHECK_THROWS_AS(enumerate_sections(SkewSpace(1, {0, 0, 0}), 3), SizeLimitError);
  }

  TEST_CASE("dual of p : 2 -> 1 is three") {
    DualAlgebra d = dual_algebra_right(SkewSpace(1, {0, 0}));
    CHECK(d.algebra == algebras::three());
  }

  TEST_CASE("right dual matches the set oracle") {
    for (Elem e = 1; e <= 4; ++e) {
      for (auto const& sp : all_surjections(e, true)) {
        DualAlgebra d = dual_algebra_right(sp);
        CHECK(d.algebra == oracle_dual_right(sp, d.sections));
        CHECK(handedness(d.algebra) != Handedness::left);
        CHECK(validate_algebra(d.algebra).ok());
        CHECK(reflection_check(sp));
      }
    }
  }

  TEST_CASE("rect dual with right bands is the right dual") {
    for (auto const& [name, sp] : generator_corpus()) {
      if (name.rfind("right/", 0) != 0) {
        continue;
      }
      CAPTURE(name);
      CHECK(dual_algebra_rect(sp).algebra == dual_algebra_right(sp).algebra);
    }
  }

  TEST_CASE("rect dual with left bands is left-handed") {
    for (auto const& [name, sp] : generator_corpus()) {
      if (name.rfind("left/", 0) != 0) {
        continue;
      }
      CAPTURE(name);
      SkewAlgebra A = dual_algebra_rect(sp).algebra;
      CHECK(validate_algebra(A).ok());
      Handedness h = handedness(A);
      CHECK((h == Handedness::left || h == Handedness::commutative));
    }
  }

  TEST_CASE("rect dual requires a band") {
    CHECK_THROWS_AS(dual_algebra_rect(SkewSpace(1, {0, 0})), DomainError);
  }

  TEST_CASE("partial maps") {
    PartialMap f(3, {0, 2}, {1, 0});
    CHECK(f.defined(0));
    CHECK_FALSE(f.defined(1));
    CHECK(f(2) == 0);
    CHECK(f.domain() == std::vector<Elem>{0, 2});
    CHECK(f.image_values() == std::vector<Elem>{1, 0});
    CHECK_FALSE(f.total());
    PartialMap g(std::vector<Elem>{1, kUndefined});
    // g ∘ f: 0 -> 1 -> undefined, 2 -> 0 -> 1
    PartialMap gf = g.after(f);
    CHECK(gf.values() == std::vector<Elem>{kUndefined, kUndefined, 1});
    CHECK_THROWS_AS(PartialMap(2, {0, 0}, {1, 1}), StructuralError);
  }

  TEST_CASE("partial map algebras against the graph oracle") {
    for (Elem x = 0; x <= 3; ++x) {
      for (Elem y = 1; y <= 3; ++y) {
        CAPTURE(x);
        CAPTURE(y);
        PartialMapAlgebra r = partial_map_algebra(x, y, RectBand::right(y));
        CHECK(r.algebra == oracle_partial_maps(x, y, true));
        PartialMapAlgebra l = partial_map_algebra(x, y, RectBand::left(y));
        CHECK(l.algebra == oracle_partial_maps(x, y, false));
      }
    }
  }

  TEST_CASE("partial map algebras validate") {
    for (Elem x = 0; x <= 2; ++x) {
      for (Elem y = 1; y <= 2; ++y) {
        CAPTURE(x);
        CAPTURE(y);
        CHECK(validate_algebra(partial_map_algebra(x, y, RectBand::right(y)).algebra).ok());
      }
    }
    CHECK(validate_algebra(partial_map_algebra(2, 2, RectBand::product(2, 1)).algebra).ok());
  }

  TEST_CASE("encode and decode are inverse") {
    PartialMapAlgebra P = partial_map_algebra(3, 2, RectBand::right(2));
    CHECK(P.algebra.size() == 27);
    for (Elem c = 0; c < P.algebra.size(); ++c) {
      CHECK(P.encode(P.decode(c)) == c);
    }
    CHECK(P.decode(0).domain().empty());
  }

  TEST_CASE("an incoherent family is detected") {
    // On the full domain take the left factor, on smaller domains the right.
    BandFamily odd = [](Mask D, PartialMap const& f, PartialMap const& g) {
      return D == 0b11 ? f : g;
    };
    auto v = coherence_violation(2, 2, odd);
    REQUIRE(v);
    CHECK((*v)[0] == 0b11);
    CHECK_THROWS_AS(partial_map_algebra(2, 2, odd), DomainError);
    CHECK_FALSE(coherence_violation(2, 2, pointwise_family(RectBand::product(2, 1))));
  }

  TEST_CASE("partial map size cap") {
    CHECK_THROWS_AS(partial_map_algebra(4, 4, RectBand::right(4), 100), SizeLimitError);
  }
}
