#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "skewstone/ideals.hpp"
#include "skewstone/sections.hpp"
#include "support.hpp"

using namespace skewstone;
using namespace skewstone::testing;

namespace {
  std::vector<std::vector<Elem>> members_of(std::vector<Ideal> const& is) {
    std::vector<std::vector<Elem>> out;
    for (auto const& i : is) {
      out.push_back(i.members);
    }
    return out;
  }

  std::vector<SkewAlgebra> oracle_corpus() {
    std::vector<SkewAlgebra> out;
    for (auto const& [name, A] : small_algebras()) {
      out.push_back(A);
    }
    out.push_back(algebras::boolean(3));
    out.push_back(dual_algebra_right(SkewSpace(2, {0, 0, 1})).algebra);
    out.push_back(dual_algebra_right(SkewSpace(2, {0, 1, 0, 1})).algebra);
    out.push_back(
        dual_algebra_rect(SkewSpace::with_fiber_bands(1, {0, 0, 0, 0}, {RectBand::product(2, 2)}))
            .algebra);
    return out;
  }
}  // namespace

TEST_SUITE("ideals_spectra") {
  TEST_CASE("ideals and primes agree with subset enumeration") {
    for (auto const& A : oracle_corpus()) {
      CAPTURE(A.size());
      auto ideals = enumerate_ideals(A);
      CHECK(members_of(ideals) == oracle_ideals(A));
      std::vector<Ideal> primes;
      for (auto const& p : enumerate_prime_ideals(A)) {
        primes.push_back(p.ideal);
      }
      CHECK(members_of(primes) == oracle_prime_ideals(A));
    }
  }

  TEST_CASE("ideal and prime witnesses") {
    SkewAlgebra A = algebras::three();
    CHECK(ideal_violation(A, {1}) == std::vector<Elem>{0});
    // 2 ⪯ 1 but 2 is missing.
    auto w = ideal_violation(A, {0, 1});
    REQUIRE(w);
    CHECK(*w == std::vector<Elem>{1, 2});
    CHECK_FALSE(ideal_violation(A, {0, 1, 2}));
    CHECK(prime_violation(A, Ideal{{0, 1, 2}}) == std::vector<Elem>{});
    CHECK_FALSE(prime_violation(A, Ideal{{0}}));

    SkewAlgebra B = algebras::boolean(2);
    auto        p = prime_violation(B, Ideal{{0}});
    REQUIRE(p);
    CHECK(B.meet((*p)[0], (*p)[1]) == 0);
  }

  TEST_CASE("prime ideals reflect to A/D") {
    for (auto const& A : oracle_corpus()) {
      CAPTURE(A.size());
      auto bij = prime_reflection_bijection(A);
      auto sorted = bij;
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t i = 0; i < sorted.size(); ++i) {
        CHECK(sorted[i] == i);
      }
    }
  }

  TEST_CASE("theta congruences") {
    for (auto const& A : oracle_corpus()) {
      CAPTURE(A.size());
      for (auto const& p : enumerate_prime_ideals(A)) {
        Partition t = theta_congruence(A, p.ideal);
        CHECK_FALSE(congruence_violation(A, t, OpSet::all));
        for (Elem x = 0; x < A.size(); ++x) {
          CHECK(t.same(x, A.zero()) == p.ideal.contains(x));
        }
        // A/θ_P has one nonzero D-class.
        for (Elem a = 0; a < A.size(); ++a) {
          for (Elem b = 0; b < A.size(); ++b) {
            if (p.ideal.contains(a) || p.ideal.contains(b)) {
              continue;
            }
            Elem c = cut_across_witness(A, a, b);
            CHECK(t.same(c, a));
            CHECK((oracle_preceq(A, c, b) && oracle_preceq(A, b, c)));
          }
        }
      }
    }
    CHECK_THROWS_AS(theta_congruence(algebras::three(), Ideal{{0, 1}}), DomainError);
  }

  TEST_CASE("spectra of 2x2 and three") {
    Spectrum s22 = skew_spectrum(algebras::boolean(2));
    CHECK(s22.space.size_E() == 2);
    CHECK(s22.space.size_B() == 2);
    Spectrum s3 = skew_spectrum(algebras::three());
    CHECK(s3.space.size_E() == 2);
    CHECK(s3.space.size_B() == 1);
    // The band of Sk(3) is right-handed: ⟨P, 1⟩ ⋏ ⟨P, 2⟩ = ⟨P, 1 ∧ 2⟩ = ⟨P, 2⟩.
    CHECK(s3.space.band(0, 1) == 1);
    Spectrum s1 = skew_spectrum(algebras::trivial());
    CHECK(s1.space.size_E() == 0);
    CHECK(s1.space.size_B() == 0);
  }

  TEST_CASE("spectrum sizes follow the primes") {
    for (auto const& A : oracle_corpus()) {
      CAPTURE(A.size());
      Spectrum sk = skew_spectrum(A);
      CHECK(validate_space(sk.space).ok());
      CHECK(sk.space.size_B() == oracle_prime_ideals(A).size());
      std::size_t points = 0;
      for (auto const& t : sk.thetas) {
        points += t.block_count() - 1;
      }
      CHECK(sk.space.size_E() == points);
      for (Elem x = 0; x < sk.space.size_E(); ++x) {
        SpectrumPoint const& pt = sk.points[x];
        CHECK(sk.point_of[pt.prime][pt.rep] == x);
        CHECK_FALSE(sk.primes[pt.prime].contains(pt.rep));
      }
    }
  }

  TEST_CASE("basic copen sets") {
    Spectrum sk = skew_spectrum(algebras::three());
    CHECK(basic_copen(sk, 0) == 0);
    CHECK(basic_copen(sk, 1) == 0b01);
    CHECK(basic_copen(sk, 2) == 0b10);
    CHECK(basic_base_copen(sk, 1) == 0b1);
    for (auto const& A : oracle_corpus()) {
      Spectrum s = skew_spectrum(A);
      for (Elem a = 0; a < A.size(); ++a) {
        CHECK(is_section(s.space, basic_copen(s, a)));
        CHECK(project(s.space, basic_copen(s, a)) == basic_base_copen(s, a));
      }
    }
  }

  TEST_CASE("generated ideals") {
    SkewAlgebra A = algebras::three();
    CHECK(leq_ideal_generated(A, {1}) == std::vector<Elem>{0, 1});
    CHECK(preceq_ideal_generated(A, {1}).members == std::vector<Elem>{0, 1, 2});
    CHECK_FALSE(is_leq_cofinal(A, {0, 1}));
    CHECK(is_preceq_cofinal(A, {0, 1}));
    CHECK(is_leq_ideal(A, {0, 1}));
    CHECK_FALSE(is_leq_ideal(algebras::boolean(2), {0, 3}));
  }
}
