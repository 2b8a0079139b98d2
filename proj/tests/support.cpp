#include "support.hpp"

#include <random>
#include <stdexcept>

#include "skewstone/sections.hpp"

namespace skewstone::testing {

  namespace {
    SkewAlgebra dual_of_projection(Elem B, std::vector<Elem> p) {
      return dual_algebra_right(SkewSpace(B, std::move(p))).algebra;
    }
  }  // namespace

  SkewAlgebra three_by_mirror() {
    SkewAlgebra a = algebras::three();
    return fiber_product(a, {0, 1, 1}, mirror(a), {0, 1, 1}).algebra;
  }

  std::vector<NamedAlgebra> small_algebras() {
    return {
        {"trivial", algebras::trivial()},
        {"2", algebras::boolean(1)},
        {"3", algebras::three()},
        {"3op", mirror(algebras::three())},
        {"2x2", algebras::boolean(2)},
        {"4", dual_of_projection(1, {0, 0, 0})},
        {"4op", mirror(dual_of_projection(1, {0, 0, 0}))},
        {"5", dual_of_projection(1, {0, 0, 0, 0})},
        {"3x3op", three_by_mirror()},
    };
  }

  std::vector<NamedSpace> generator_corpus() {
    std::vector<NamedSpace> out;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
      Elem const base = 1 + Elem(seed % 3);

      RandomSpaceOptions plain;
      plain.size_B    = base + 1;
      plain.max_fiber = 2;
      out.push_back({"plain/" + std::to_string(seed), random_space(plain, seed)});

      RandomSpaceOptions right = plain;
      right.band               = BandKind::right;
      right.size_B             = base;
      right.max_fiber          = 3;
      out.push_back({"right/" + std::to_string(seed), random_space(right, seed)});

      RandomSpaceOptions left = right;
      left.band               = BandKind::left;
      out.push_back({"left/" + std::to_string(seed), random_space(left, seed)});

      RandomSpaceOptions product;
      product.band   = BandKind::product;
      product.size_B = 1 + Elem(seed % 2);
      product.kL     = 1 + Elem(seed % 2);
      product.kR     = 1 + Elem((seed / 2) % 2);
      out.push_back({"product/" + std::to_string(seed), random_space(product, seed)});

      RandomSpaceOptions mixed;
      mixed.band   = BandKind::mixed;
      mixed.size_B = 2;
      mixed.kL     = 2;
      mixed.kR     = 2;
      out.push_back({"mixed/" + std::to_string(seed), random_space(mixed, seed)});
    }
    return out;
  }

  std::vector<NamedSpace> rect_corpus(std::size_t count, Elem max_side, Elem max_base) {
    std::vector<NamedSpace> out;
    std::mt19937_64         rng(20260101);
    for (std::uint64_t seed = 1; out.size() < count; ++seed) {
      RandomSpaceOptions o;
      o.band   = rng() % 2 ? BandKind::product : BandKind::mixed;
      o.size_B = 1 + Elem(rng() % max_base);
      o.kL     = 1 + Elem(rng() % max_side);
      o.kR     = 1 + Elem(rng() % max_side);
      out.push_back({"rect/" + std::to_string(seed), random_space(o, 1000 + seed)});
    }
    return out;
  }

  SkewAlgebra mutate(SkewAlgebra const& A, Op op, Elem x, Elem y, Elem value) {
    std::vector<Elem> t[4] = {
        A.table(Op::meet), A.table(Op::join), A.table(Op::diff), A.table(Op::cap)};
    t[static_cast<int>(op)][std::size_t(x) * A.size() + y] = value;
    return SkewAlgebra(A.size(), A.zero(), t[0], t[1], t[2], t[3]);
  }

  std::vector<Mutation> mutated_tables() {
    SkewAlgebra const three = algebras::three();
    SkewAlgebra const b1    = algebras::boolean(1);
    SkewAlgebra const b2    = algebras::boolean(2);
    SkewAlgebra const op3   = mirror(three);
    SkewAlgebra const four  = dual_of_projection(1, {0, 0, 0});
    return {
        {"3 meet(1,2)=1", mutate(three, Op::meet, 1, 2, 1), "absorption_meet_right"},
        {"3 join(1,2)=2", mutate(three, Op::join, 1, 2, 2), "absorption_meet_left"},
        {"3 diff(1,2)=1", mutate(three, Op::diff, 1, 2, 1), "complement_meet"},
        {"3 cap(1,2)=1", mutate(three, Op::cap, 1, 2, 1), "cap_lower_bound"},
        {"3 cap(1,1)=0", mutate(three, Op::cap, 1, 1, 0), "cap_idempotent"},
        {"3 meet(1,1)=2", mutate(three, Op::meet, 1, 1, 2), "meet_idempotent"},
        {"3 join(0,1)=0", mutate(three, Op::join, 0, 1, 0), "zero_join_neutral"},
        {"2x2 meet(1,2)=1", mutate(b2, Op::meet, 1, 2, 1), "complement_meet"},
        {"2x2 join(1,2)=1", mutate(b2, Op::join, 1, 2, 1), "distributive_left"},
        {"2x2 diff(3,1)=3", mutate(b2, Op::diff, 3, 1, 3), "complement_meet"},
        {"2x2 diff(3,1)=0", mutate(b2, Op::diff, 3, 1, 0), "complement_join"},
        {"2x2 cap(1,3)=0", mutate(b2, Op::cap, 1, 3, 0), "cap_commutative"},
        {"2x2 cap(3,3)=1", mutate(b2, Op::cap, 3, 3, 1), "cap_idempotent"},
        {"2x2 join(3,3)=1", mutate(b2, Op::join, 3, 3, 1), "join_idempotent"},
        {"2 diff(1,0)=0", mutate(b1, Op::diff, 1, 0, 0), "complement_join"},
        {"2 meet(1,1)=0", mutate(b1, Op::meet, 1, 1, 0), "meet_idempotent"},
        {"3op join(1,2)=1", mutate(op3, Op::join, 1, 2, 1), "absorption_meet_right"},
        {"3op cap(2,1)=2", mutate(op3, Op::cap, 2, 1, 2), "cap_lower_bound"},
        {"4 meet(2,3)=1", mutate(four, Op::meet, 2, 3, 1), "meet_associative"},
        {"4 diff(3,1)=1", mutate(four, Op::diff, 3, 1, 1), "complement_meet"},
    };
  }

  bool oracle_law_holds(SkewAlgebra const& A, std::string const& law, std::vector<Elem> const& t) {
    auto m   = [&](Elem a, Elem b) { return A.meet(a, b); };
    auto j   = [&](Elem a, Elem b) { return A.join(a, b); };
    auto d   = [&](Elem a, Elem b) { return A.diff(a, b); };
    auto c   = [&](Elem a, Elem b) { return A.cap(a, b); };
    auto leq = [&](Elem a, Elem b) { return m(a, b) == a && m(b, a) == a; };
    Elem x = t.size() > 0 ? t[0] : 0, y = t.size() > 1 ? t[1] : 0, z = t.size() > 2 ? t[2] : 0;
    Elem w = t.size() > 3 ? t[3] : 0, o = A.zero();

    if (law == "meet_idempotent") return m(x, x) == x;
    if (law == "join_idempotent") return j(x, x) == x;
    if (law == "meet_associative") return m(m(x, y), z) == m(x, m(y, z));
    if (law == "join_associative") return j(j(x, y), z) == j(x, j(y, z));
    if (law == "absorption_meet_left") return m(x, j(x, y)) == x;
    if (law == "absorption_meet_right") return m(j(y, x), x) == x;
    if (law == "absorption_join_left") return j(x, m(x, y)) == x;
    if (law == "absorption_join_right") return j(m(y, x), x) == x;
    if (law == "distributive_left") return m(x, j(y, z)) == j(m(x, y), m(x, z));
    if (law == "distributive_right") return m(j(y, z), x) == j(m(y, x), m(z, x));
    if (law == "zero_join_neutral") return j(o, x) == x && j(x, o) == x;
    if (law == "complement_meet") return m(d(x, y), m(m(x, y), x)) == o;
    if (law == "complement_join") return j(d(x, y), m(m(x, y), x)) == x;
    if (law == "cap_lower_bound") return leq(c(x, y), x) && leq(c(x, y), y);
    if (law == "cap_greatest") return !(leq(z, x) && leq(z, y)) || leq(z, c(x, y));
    if (law == "cap_commutative") return c(x, y) == c(y, x);
    if (law == "cap_associative") return c(c(x, y), z) == c(x, c(y, z));
    if (law == "cap_idempotent") return c(x, x) == x;
    if (law == "normal_meet") return m(m(m(x, y), z), w) == m(m(m(x, z), y), w);
    if (law == "regular_join") return j(j(j(j(x, y), x), z), x) == j(j(j(x, y), z), x);
    if (law == "meet_below_join") return leq(m(x, y), j(y, x));
    throw std::invalid_argument("unknown law " + law);
  }

}  // namespace skewstone::testing
