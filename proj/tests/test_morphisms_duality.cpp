#include <algorithm>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "skewstone/morphisms.hpp"
#include "skewstone/variants.hpp"
#include "support.hpp"

using namespace skewstone;
using namespace skewstone::testing;

namespace {
  std::set<std::pair<std::vector<Elem>, std::vector<Elem>>>
  as_pairs(std::vector<SpaceMorphism> const& ms) {
    std::set<std::pair<std::vector<Elem>, std::vector<Elem>>> out;
    for (auto const& m : ms) {
      out.emplace(m.g.values(), m.h.values());
    }
    return out;
  }

  std::vector<SpaceRef> small_spaces() {
    std::vector<SpaceRef> out;
    for (Elem e = 0; e <= 3; ++e) {
      for (auto const& sp : all_surjections(e, true)) {
        out.push_back(share(sp));
      }
    }
    out.push_back(share(SkewSpace::with_fiber_bands(1, {0, 0}, {RectBand::left(2)})));
    out.push_back(share(SkewSpace::with_fiber_bands(1, {0, 0}, {RectBand::right(2)})));
    out.push_back(
        share(SkewSpace::with_fiber_bands(2, {0, 1, 0}, {RectBand::right(2), RectBand::right(1)})));
    return out;
  }
}  // namespace

TEST_SUITE("morphisms_duality") {
  TEST_CASE("homs of three into itself") {
    SkewAlgebra A     = algebras::three();
    auto        homs  = enumerate_homs(A, A);
    std::vector<std::vector<Elem>> want = {{0, 0, 0}, {0, 1, 2}, {0, 2, 1}};
    CHECK(homs == want);
  }

  TEST_CASE("hom enumeration agrees with brute force") {
    auto algs = small_algebras();
    for (auto const& [na, A] : algs) {
      for (auto const& [nb, B] : algs) {
        CAPTURE(na);
        CAPTURE(nb);
        CHECK(enumerate_homs(A, B) == oracle_homs(A, B));
      }
    }
  }

  TEST_CASE("hom enumeration respects its cap") {
    HomSearchOptions o;
    o.max_steps = 3;
    CHECK_THROWS_AS(enumerate_homs(algebras::boolean(2), algebras::boolean(2), o), SizeLimitError);
    HomSearchOptions r;
    r.max_results = 2;
    CHECK_THROWS_AS(enumerate_homs(algebras::three(), algebras::three(), r), SizeLimitError);
    CHECK(enumerate_homs(algebras::three(), algebras::three(), HomSearchOptions{10, 3}).size() == 3);
  }

  TEST_CASE("hom validation") {
    AlgebraRef A = share(algebras::three());
    CHECK(validate_hom({A, A, {0, 2, 1}}).ok());
    ValidationReport r = validate_hom({A, A, {1, 1, 1}});
    REQUIRE_FALSE(r.ok());
    CHECK(r.failures.front().law == "preserves_zero");
    ValidationReport r2 = validate_hom({A, A, {0, 1, 1}});
    REQUIRE_FALSE(r2.ok());
    CHECK_THROWS_AS(validate_hom({A, A, {0, 1}}), StructuralError);
  }

  TEST_CASE("algebra isomorphism search") {
    SkewAlgebra A = algebras::three();
    auto        f = find_algebra_isomorphism(A, A);
    REQUIRE(f);
    CHECK(find_algebra_isomorphism(A, mirror(A)) == std::nullopt);
    CHECK(find_algebra_isomorphism(algebras::boolean(2), algebras::three()) == std::nullopt);
    // 2x2 is the dual of the discrete two-point space.
    auto g = find_algebra_isomorphism(algebras::boolean(2),
                                      dual_algebra_right(SkewSpace(2, {0, 1})).algebra);
    CHECK(g);
  }

  TEST_CASE("space morphisms agree with brute force") {
    auto spaces = small_spaces();
    for (auto const& a : spaces) {
      for (auto const& b : spaces) {
        if (a->size_E() + b->size_E() > 5) {
          continue;
        }
        CAPTURE(a->size_E());
        CAPTURE(b->size_E());
        auto ms = enumerate_space_morphisms(a, b);
        CHECK(as_pairs(ms) == oracle_space_morphisms(*a, *b));
        for (auto const& m : ms) {
          CHECK(validate_space_morphism(m).ok());
        }
      }
    }
  }

  TEST_CASE("space morphism validation names the failure") {
    SpaceRef         a = share(SkewSpace(1, {0, 0}));
    SpaceRef         b = share(SkewSpace(1, {0}));
    SpaceMorphism    m{a, b, PartialMap(std::vector<Elem>{0, 0}), PartialMap(std::vector<Elem>{0})};
    ValidationReport r = validate_space_morphism(m);
    REQUIRE_FALSE(r.ok());
    CHECK(r.failures.front().law == "fiber_bijective");

    SpaceMorphism    m2{a, b, PartialMap(2), PartialMap(std::vector<Elem>{0})};
    CHECK(validate_space_morphism(m2).failures.front().law == "domain");
  }

  TEST_CASE("Sk(3) has three endomorphisms and they are the duals") {
    AlgebraRef A  = share(algebras::three());
    Spectrum   sk = skew_spectrum(*A);
    SpaceRef   s  = share(sk.space);
    auto       ms = enumerate_space_morphisms(s, s);
    CHECK(ms.size() == 3);
    std::set<std::pair<std::vector<Elem>, std::vector<Elem>>> duals;
    for (auto const& f : enumerate_homs(*A, *A)) {
      SpaceMorphism d = dual_of_hom({A, A, f}, sk, sk);
      duals.emplace(d.g.values(), d.h.values());
    }
    CHECK(duals == as_pairs(ms));
  }

  TEST_CASE("functors preserve identities and composition") {
    auto algs = small_algebras();
    std::vector<AlgebraRef> refs;
    for (auto const& [name, A] : algs) {
      refs.push_back(share(A));
    }
    for (auto const& A : refs) {
      SpaceMorphism id = dual_of_hom(identity_hom(A));
      CHECK(same_morphism(id, identity_morphism(id.source)));
    }
    for (auto const& A : refs) {
      for (auto const& B : refs) {
        auto fs = enumerate_homs(*A, *B);
        for (auto const& C : refs) {
          auto gs = enumerate_homs(*B, *C);
          for (std::size_t i = 0; i < fs.size(); i += 3) {
            for (std::size_t j = 0; j < gs.size(); j += 3) {
              Homomorphism f{A, B, fs[i]}, g{B, C, gs[j]};
              SpaceMorphism lhs = dual_of_hom(compose(g, f));
              SpaceMorphism rhs = compose(dual_of_hom(f), dual_of_hom(g));
              CHECK(same_morphism(lhs, rhs));
            }
          }
        }
      }
    }
  }

  TEST_CASE("phi and psi are isomorphisms") {
    for (auto const& [name, A] : small_algebras()) {
      CAPTURE(name);
      PhiResult phi = phi_iso(A);
      CHECK(validate_hom(phi.iso).ok());
    }
    for (auto const& sp : small_spaces()) {
      PsiResult psi = psi_iso(*sp);
      CHECK(validate_space_morphism(psi.iso).ok());
      CHECK(psi.iso.g.total());
      CHECK(psi.iso.h.total());
    }
  }

  TEST_CASE("hom of a space morphism round trips through dual_of_hom") {
    for (auto const& [name, A] : small_algebras()) {
      CAPTURE(name);
      AlgebraRef a = share(A);
      for (auto const& f : enumerate_homs(A, A)) {
        Homomorphism  h{a, a, f};
        SpaceMorphism d = dual_of_hom(h);
        Homomorphism  back = hom_of_space_morphism(d);
        CHECK(validate_hom(back).ok());
        CHECK(back.source->size() == A.size());
      }
    }
  }

  TEST_CASE("space isomorphisms") {
    SpaceRef a = share(SkewSpace(2, {0, 0, 1}));
    SpaceRef b = share(SkewSpace(2, {1, 0, 1}));
    auto     m = find_space_isomorphism(a, b);
    REQUIRE(m);
    CHECK(validate_space_morphism(*m).ok());
    CHECK_FALSE(find_space_isomorphism(a, share(SkewSpace(2, {0, 1, 1, 1}))));
    SpaceRef l = share(SkewSpace::with_fiber_bands(1, {0, 0}, {RectBand::left(2)}));
    SpaceRef r = share(SkewSpace::with_fiber_bands(1, {0, 0}, {RectBand::right(2)}));
    CHECK_FALSE(find_space_isomorphism(l, r));
  }
}
