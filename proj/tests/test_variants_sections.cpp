#include "doctest.h"
#include "oracles.hpp"
#include "skewstone/lattice_sections.hpp"
#include "skewstone/variants.hpp"
#include "support.hpp"

using namespace skewstone;
using namespace skewstone::testing;

TEST_SUITE("morphisms_duality") {
  TEST_CASE("pairs round trip") {
    for (auto const& [name, sp] : rect_corpus(40, 3, 2)) {
      CAPTURE(name);
      CHECK(pair_roundtrip_check(sp));
      SpacePair pr = to_pair(sp);
      CHECK_FALSE(pr.left.has_band());
      CHECK(pr.left.size_B() == sp.size_B());
    }
    CHECK_THROWS_AS(to_pair(SkewSpace(1, {0})), DomainError);
  }

  TEST_CASE("from_pair multiplies fibers") {
    SkewSpace l(2, {0, 0, 1}), r(2, {0, 1, 1, 1});
    SkewSpace e = from_pair(l, r);
    CHECK(e.size_E() == 2 * 1 + 1 * 3);
    CHECK(validate_space(e).ok());
    CHECK_THROWS_AS(from_pair(l, SkewSpace(1, {0})), DomainError);
  }

  TEST_CASE("decomposition of a space morphism") {
    SpaceRef      a = share(SkewSpace(2, {0, 0, 1}));
    SpaceRef      b = share(SkewSpace(1, {0}));
    SpaceMorphism m{a, b, PartialMap(3, {2}, {0}), PartialMap(2, {1}, {0})};
    REQUIRE(validate_space_morphism(m).ok());
    MorphismDecomposition d = decompose_morphism(m);
    CHECK(d.middle->size_E() == 1);
    CHECK(d.total.g.total());
    CHECK(d.total.h.total());
    CHECK(same_morphism(compose(d.total, d.partial_identity), m));
    SpaceMorphismFlags f = classify_space_morphism(d.partial_identity);
    CHECK(f.partial_identity);
  }

  TEST_CASE("dual of the zero endomorphism of three") {
    AlgebraRef         A = share(algebras::three());
    Homomorphism       z{A, A, {0, 0, 0}};
    SpaceMorphismFlags f = classify_space_morphism(dual_of_hom(z));
    CHECK_FALSE(f.total);
    CHECK_FALSE(f.semitotal);
    CHECK_FALSE(f.partial_identity);
    CHECK(f.saturated);
    CHECK(f.section_lifting);
    HomFlags h = classify_hom(z);
    CHECK(h.D_saturated);
    CHECK(h.image_ideal_preceq_closed);
    CHECK_FALSE(h.leq_cofinal);
  }

  TEST_CASE("factorization of homs") {
    auto algs = small_algebras();
    for (auto const& [na, A] : algs) {
      for (auto const& [nb, B] : algs) {
        AlgebraRef a = share(A), b = share(B);
        for (auto const& map : enumerate_homs(A, B)) {
          Homomorphism     f{a, b, map};
          HomFactorization fac = hom_factorization(f);
          CHECK(compose(fac.inclusion, fac.cofinal).map == map);
          CHECK(classify_hom(fac.cofinal).leq_cofinal);
          CHECK(classify_hom(fac.inclusion).leq_ideal_inclusion);
        }
      }
    }
  }

  TEST_CASE("image_of") {
    AlgebraRef A = share(algebras::boolean(2));
    AlgebraRef T = share(algebras::three());
    CHECK(image_of({A, T, {0, 1, 0, 1}}) == std::vector<Elem>{0, 1});
  }
}

TEST_SUITE("lattice_sections") {
  TEST_CASE("three has a lattice section") {
    SkewAlgebra A = algebras::three();
    auto        l = find_lattice_section(A);
    REQUIRE(l);
    CHECK(l->choice == std::vector<Elem>{0, 1});
    CHECK(is_lattice_section(A, *l));
    CHECK_FALSE(is_lattice_section(A, LatticeSection{{0, 0}}));
    CHECK(section_equivalence_check(A));
  }

  TEST_CASE("sections only in right-handed algebras") {
    CHECK_THROWS_AS(find_lattice_section(mirror(algebras::three())), DomainError);
    CHECK_THROWS_AS(find_lattice_section(three_by_mirror()), DomainError);
  }

  TEST_CASE("global sections") {
    SkewSpace sp(2, {1, 0, 0});
    auto      s = find_global_section(sp);
    REQUIRE(s);
    CHECK(s->points == std::vector<Elem>{1, 0});
    CHECK(is_global_section(sp, *s));
    CHECK_FALSE(is_global_section(sp, GlobalSection{{0, 1}}));
  }

  TEST_CASE("lattice and global sections convert into each other") {
    for (Elem e = 1; e <= 4; ++e) {
      for (auto const& sp : all_surjections(e, true)) {
        SkewAlgebra A  = dual_algebra_right(sp).algebra;
        Spectrum    sk = skew_spectrum(A);
        auto        l  = find_lattice_section(A);
        REQUIRE(l);
        GlobalSection  s  = global_from_lattice(A, sk, *l);
        CHECK(is_global_section(sk.space, s));
        LatticeSection l2 = lattice_from_global(A, sk, s);
        CHECK(is_lattice_section(A, l2));
        CHECK(section_equivalence_check(A));
      }
    }
  }

  TEST_CASE("lattice sections against brute force") {
    // Every choice function on D-classes checked directly.
    for (auto const& [name, A] : small_algebras()) {
      Handedness h = handedness(A);
      if (h != Handedness::right && h != Handedness::commutative) {
        continue;
      }
      CAPTURE(name);
      Partition         D = green_partitions(A).D;
      Quotient          q = quotient_by(A, D);
      std::size_t       found = 0;
      std::vector<std::size_t> pick(q.algebra.size(), 0);
      auto const&       blocks = D.blocks();
      while (true) {
        LatticeSection l;
        for (Elem d = 0; d < q.algebra.size(); ++d) {
          l.choice.push_back(blocks[d][pick[d]]);
        }
        found += is_lattice_section(A, l);
        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == blocks[i].size()) {
          pick[i++] = 0;
        }
        if (i == pick.size()) {
          break;
        }
      }
      CHECK(found > 0);
      CHECK(find_lattice_section(A).has_value());
    }
  }
}
