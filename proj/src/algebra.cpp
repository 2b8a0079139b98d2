#include "skewstone/algebra.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

namespace skewstone {

  std::vector<Elem> mask_to_indices(Mask m) {
    std::vector<Elem> out;
    for (std::size_t i = 0; i < kMaskBits; ++i) {
      if (has_bit(m, i)) {
        out.push_back(static_cast<Elem>(i));
      }
    }
    return out;
  }

  Mask indices_to_mask(std::vector<Elem> const& xs) {
    Mask m = 0;
    for (Elem x : xs) {
      if (x >= kMaskBits) {
        throw SizeLimitError("subset index " + std::to_string(x)
                             + " does not fit in a 64-bit mask");
      }
      m |= bit(x);
    }
    return m;
  }

  std::string_view op_name(Op op) noexcept {
    switch (op) {
      case Op::meet:
        return "meet";
      case Op::join:
        return "join";
      case Op::diff:
        return "diff";
      case Op::cap:
        return "cap";
    }
    return "?";
  }

  namespace {
    void check_table(std::string_view         name,
                     std::vector<Elem> const& t,
                     Elem                     n) {
      if (t.size() != std::size_t(n) * n) {
        throw StructuralError(std::string(name) + " table has "
                              + std::to_string(t.size()) + " entries, expected "
                              + std::to_string(std::size_t(n) * n));
      }
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] >= n) {
          throw StructuralError(std::string(name) + "[" + std::to_string(i / n)
                                + "][" + std::to_string(i % n)
                                + "] = " + std::to_string(t[i])
                                + " is out of range");
        }
      }
    }

    constexpr std::array<Op, 4> kOps = {Op::meet, Op::join, Op::diff, Op::cap};
  }  // namespace

  SkewAlgebra::SkewAlgebra(Elem              n,
                           Elem              zero,
                           std::vector<Elem> meet,
                           std::vector<Elem> join,
                           std::vector<Elem> diff,
                           std::vector<Elem> cap)
      : _n(n),
        _zero(zero),
        _meet(std::move(meet)),
        _join(std::move(join)),
        _diff(std::move(diff)),
        _cap(std::move(cap)) {
    if (n == 0) {
      throw StructuralError("an algebra needs at least the element 0");
    }
    if (zero >= n) {
      throw StructuralError("zero index " + std::to_string(zero)
                            + " is out of range");
    }
    check_table("meet", _meet, n);
    check_table("join", _join, n);
    check_table("diff", _diff, n);
    check_table("cap", _cap, n);
  }

  Elem SkewAlgebra::apply(Op op, Elem x, Elem y) const noexcept {
    return table(op)[std::size_t(x) * _n + y];
  }

  std::vector<Elem> const& SkewAlgebra::table(Op op) const noexcept {
    switch (op) {
      case Op::meet:
        return _meet;
      case Op::join:
        return _join;
      case Op::diff:
        return _diff;
      case Op::cap:
        break;
    }
    return _cap;
  }

  ////////////////////////////////////////////////////////////////////////
  // Partition
  ////////////////////////////////////////////////////////////////////////

  Partition::Partition(std::vector<Elem> const& labels) {
    std::vector<Elem> seen;
    _labels.resize(labels.size());
    for (std::size_t x = 0; x < labels.size(); ++x) {
      auto it = std::find(seen.begin(), seen.end(), labels[x]);
      Elem id;
      if (it == seen.end()) {
        id = static_cast<Elem>(seen.size());
        seen.push_back(labels[x]);
        _blocks.emplace_back();
      } else {
        id = static_cast<Elem>(it - seen.begin());
      }
      _labels[x] = id;
      _blocks[id].push_back(static_cast<Elem>(x));
    }
  }

  Partition Partition::identity(Elem n) {
    std::vector<Elem> labels(n);
    std::iota(labels.begin(), labels.end(), Elem{0});
    return Partition(labels);
  }

  Partition Partition::full(Elem n) {
    return Partition(std::vector<Elem>(n, 0));
  }

  bool Partition::refines(Partition const& coarser) const {
    for (auto const& block : _blocks) {
      for (Elem x : block) {
        if (!coarser.same(x, block.front())) {
          return false;
        }
      }
    }
    return true;
  }

  Partition partition_join(Partition const& a, Partition const& b) {
    std::vector<Elem> parent(a.size());
    std::iota(parent.begin(), parent.end(), Elem{0});
    auto find = [&parent](Elem x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x         = parent[x];
      }
      return x;
    };
    for (Partition const* p : {&a, &b}) {
      for (auto const& block : p->blocks()) {
        for (Elem x : block) {
          Elem rx = find(x), rb = find(block.front());
          if (rx != rb) {
            parent[std::max(rx, rb)] = std::min(rx, rb);
          }
        }
      }
    }
    std::vector<Elem> labels(a.size());
    for (Elem x = 0; x < a.size(); ++x) {
      labels[x] = find(x);
    }
    return Partition(labels);
  }

  Partition partition_from_relation(Elem                                   n,
                                    std::function<bool(Elem, Elem)> const& rel,
                                    std::string_view                       what) {
    std::vector<Elem> labels(n);
    for (Elem x = 0; x < n; ++x) {
      Elem y = 0;
      while (y < x && !rel(x, y)) {
        ++y;
      }
      labels[x] = y;
    }
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        if (rel(x, y) != (labels[x] == labels[y])) {
          throw DomainError(std::string(what) + " is not an equivalence",
                            {x, y});
        }
      }
    }
    return Partition(labels);
  }

  ////////////////////////////////////////////////////////////////////////
  // Orders
  ////////////////////////////////////////////////////////////////////////

  bool natural_leq(SkewAlgebra const& A, Elem x, Elem y) {
    return A.meet(x, y) == x && A.meet(y, x) == x;
  }

  bool natural_leq_by_join(SkewAlgebra const& A, Elem x, Elem y) {
    return A.join(x, y) == y && A.join(y, x) == y;
  }

  bool natural_preceq(SkewAlgebra const& A, Elem x, Elem y) {
    return A.meet(A.meet(x, y), x) == x;
  }

  bool natural_preceq_by_join(SkewAlgebra const& A, Elem x, Elem y) {
    return A.join(A.join(y, x), y) == y;
  }

  ////////////////////////////////////////////////////////////////////////
  // Laws
  ////////////////////////////////////////////////////////////////////////

  namespace {
    using Args = std::span<Elem const>;

    bool meet_idempotent(SkewAlgebra const& A, Args a) {
      return A.meet(a[0], a[0]) == a[0];
    }
    bool join_idempotent(SkewAlgebra const& A, Args a) {
      return A.join(a[0], a[0]) == a[0];
    }
    bool meet_associative(SkewAlgebra const& A, Args a) {
      return A.meet(A.meet(a[0], a[1]), a[2]) == A.meet(a[0], A.meet(a[1], a[2]));
    }
    bool join_associative(SkewAlgebra const& A, Args a) {
      return A.join(A.join(a[0], a[1]), a[2]) == A.join(a[0], A.join(a[1], a[2]));
    }
    // x ∧ (x ∨ y) = x
    bool absorption_meet_left(SkewAlgebra const& A, Args a) {
      return A.meet(a[0], A.join(a[0], a[1])) == a[0];
    }
    // (y ∨ x) ∧ x = x
    bool absorption_meet_right(SkewAlgebra const& A, Args a) {
      return A.meet(A.join(a[1], a[0]), a[0]) == a[0];
    }
    // x ∨ (x ∧ y) = x
    bool absorption_join_left(SkewAlgebra const& A, Args a) {
      return A.join(a[0], A.meet(a[0], a[1])) == a[0];
    }
    // (y ∧ x) ∨ x = x
    bool absorption_join_right(SkewAlgebra const& A, Args a) {
      return A.join(A.meet(a[1], a[0]), a[0]) == a[0];
    }
    // x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)
    bool distributive_left(SkewAlgebra const& A, Args a) {
      return A.meet(a[0], A.join(a[1], a[2]))
             == A.join(A.meet(a[0], a[1]), A.meet(a[0], a[2]));
    }
    // (y ∨ z) ∧ x = (y ∧ x) ∨ (z ∧ x)
    bool distributive_right(SkewAlgebra const& A, Args a) {
      return A.meet(A.join(a[1], a[2]), a[0])
             == A.join(A.meet(a[1], a[0]), A.meet(a[2], a[0]));
    }
    bool zero_join_neutral(SkewAlgebra const& A, Args a) {
      return A.join(A.zero(), a[0]) == a[0] && A.join(a[0], A.zero()) == a[0];
    }
    // (x \ y) ∧ (x ∧ y ∧ x) = 0
    bool complement_meet(SkewAlgebra const& A, Args a) {
      Elem xyx = A.meet(A.meet(a[0], a[1]), a[0]);
      return A.meet(A.diff(a[0], a[1]), xyx) == A.zero();
    }
    // (x \ y) ∨ (x ∧ y ∧ x) = x
    bool complement_join(SkewAlgebra const& A, Args a) {
      Elem xyx = A.meet(A.meet(a[0], a[1]), a[0]);
      return A.join(A.diff(a[0], a[1]), xyx) == a[0];
    }
    bool cap_lower_bound(SkewAlgebra const& A, Args a) {
      Elem c = A.cap(a[0], a[1]);
      return natural_leq(A, c, a[0]) && natural_leq(A, c, a[1]);
    }
    // z ≤ x and z ≤ y imply z ≤ x ∩ y
    bool cap_greatest(SkewAlgebra const& A, Args a) {
      if (!natural_leq(A, a[2], a[0]) || !natural_leq(A, a[2], a[1])) {
        return true;
      }
      return natural_leq(A, a[2], A.cap(a[0], a[1]));
    }
    bool cap_commutative(SkewAlgebra const& A, Args a) {
      return A.cap(a[0], a[1]) == A.cap(a[1], a[0]);
    }
    bool cap_associative(SkewAlgebra const& A, Args a) {
      return A.cap(A.cap(a[0], a[1]), a[2]) == A.cap(a[0], A.cap(a[1], a[2]));
    }
    bool cap_idempotent(SkewAlgebra const& A, Args a) {
      return A.cap(a[0], a[0]) == a[0];
    }
    // x ∧ y ∧ z ∧ w = x ∧ z ∧ y ∧ w
    bool normal_meet(SkewAlgebra const& A, Args a) {
      return A.meet(A.meet(A.meet(a[0], a[1]), a[2]), a[3])
             == A.meet(A.meet(A.meet(a[0], a[2]), a[1]), a[3]);
    }
    // a ∨ b ∨ a ∨ c ∨ a = a ∨ b ∨ c ∨ a
    bool regular_join(SkewAlgebra const& A, Args a) {
      Elem lhs = A.join(A.join(A.join(A.join(a[0], a[1]), a[0]), a[2]), a[0]);
      Elem rhs = A.join(A.join(A.join(a[0], a[1]), a[2]), a[0]);
      return lhs == rhs;
    }
    // x ∧ y ≤ y ∨ x
    bool meet_below_join(SkewAlgebra const& A, Args a) {
      return natural_leq(A, A.meet(a[0], a[1]), A.join(a[1], a[0]));
    }

    constexpr std::array<Law, 21> kLaws = {{
        {"meet_idempotent", 1, false, meet_idempotent},
        {"join_idempotent", 1, false, join_idempotent},
        {"meet_associative", 3, false, meet_associative},
        {"join_associative", 3, false, join_associative},
        {"absorption_meet_left", 2, false, absorption_meet_left},
        {"absorption_meet_right", 2, false, absorption_meet_right},
        {"absorption_join_left", 2, false, absorption_join_left},
        {"absorption_join_right", 2, false, absorption_join_right},
        {"distributive_left", 3, false, distributive_left},
        {"distributive_right", 3, false, distributive_right},
        {"zero_join_neutral", 1, false, zero_join_neutral},
        {"complement_meet", 2, false, complement_meet},
        {"complement_join", 2, false, complement_join},
        {"cap_lower_bound", 2, false, cap_lower_bound},
        {"cap_greatest", 3, false, cap_greatest},
        {"cap_commutative", 2, false, cap_commutative},
        {"cap_associative", 3, false, cap_associative},
        {"cap_idempotent", 1, false, cap_idempotent},
        {"normal_meet", 4, true, normal_meet},
        {"regular_join", 3, true, regular_join},
        {"meet_below_join", 2, true, meet_below_join},
    }};

    // First tuple (lexicographic) on which the law fails.
    std::optional<std::vector<Elem>> first_violation(SkewAlgebra const& A,
                                                     Law const&         law) {
      Elem const        n = A.size();
      std::vector<Elem> t(law.arity, 0);
      while (true) {
        if (!law.holds(A, t)) {
          return t;
        }
        std::size_t i = t.size();
        while (i > 0) {
          --i;
          if (++t[i] < n) {
            break;
          }
          t[i] = 0;
          if (i == 0) {
            return std::nullopt;
          }
        }
        if (t.empty()) {
          return std::nullopt;
        }
      }
    }
  }  // namespace

  std::span<Law const> algebra_laws() {
    return kLaws;
  }

  Law const* find_law(std::string_view name) {
    for (Law const& law : algebra_laws()) {
      if (law.name == name) {
        return &law;
      }
    }
    return nullptr;
  }

  ValidationReport validate_algebra(SkewAlgebra const&     A,
                                    ValidateOptions const& options) {
    if (A.size() > options.max_size) {
      throw SizeLimitError("algebra has " + std::to_string(A.size())
                           + " elements, the validation cap is "
                           + std::to_string(options.max_size));
    }
    ValidationReport report;
    for (Law const& law : algebra_laws()) {
      if (law.arity == 4 && A.size() > options.max_size_quartic) {
        report.skipped.emplace_back(law.name);
        continue;
      }
      if (auto w = first_violation(A, law)) {
        auto& sink = law.derived ? report.warnings : report.failures;
        sink.push_back({std::string(law.name), std::move(*w)});
      }
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Green's relations and congruences
  ////////////////////////////////////////////////////////////////////////

  std::optional<CongruenceViolation>
  congruence_violation(SkewAlgebra const& A, Partition const& c, OpSet ops) {
    for (Op op : kOps) {
      if (!contains(ops, op)) {
        continue;
      }
      for (auto const& block : c.blocks()) {
        Elem x = block.front();
        for (std::size_t k = 1; k < block.size(); ++k) {
          Elem xp = block[k];
          for (Elem y = 0; y < A.size(); ++y) {
            if (!c.same(A.apply(op, x, y), A.apply(op, xp, y))) {
              return CongruenceViolation{op, x, xp, y, true};
            }
            if (!c.same(A.apply(op, y, x), A.apply(op, y, xp))) {
              return CongruenceViolation{op, x, xp, y, false};
            }
          }
        }
      }
    }
    return std::nullopt;
  }

  GreenRelations green_partitions(SkewAlgebra const& A) {
    Elem const n = A.size();
    GreenRelations g{
        partition_from_relation(
            n,
            [&A](Elem x, Elem y) {
              return natural_preceq(A, x, y) && natural_preceq(A, y, x);
            },
            "D"),
        partition_from_relation(
            n,
            [&A](Elem x, Elem y) {
              return A.meet(x, y) == x && A.meet(y, x) == y;
            },
            "L"),
        partition_from_relation(
            n,
            [&A](Elem x, Elem y) {
              return A.meet(x, y) == y && A.meet(y, x) == x;
            },
            "R")};
    for (auto const* p : {&g.D, &g.L, &g.R}) {
      if (auto v = congruence_violation(A, *p, OpSet::lattice)) {
        throw DomainError("Green's relation is not a congruence for "
                              + std::string(op_name(v->op)),
                          {v->x, v->x_prime, v->y});
      }
    }
    return g;
  }

  ////////////////////////////////////////////////////////////////////////
  // Constructions
  ////////////////////////////////////////////////////////////////////////

  std::optional<std::vector<Elem>> glb_table(Elem n, std::vector<Elem> const& meet) {
    auto leq = [&](Elem x, Elem y) {
      return meet[std::size_t(x) * n + y] == x && meet[std::size_t(y) * n + x] == x;
    };
    std::vector<Elem> cap(std::size_t(n) * n);
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = x; y < n; ++y) {
        Elem best  = kUndefined;
        for (Elem z = 0; z < n; ++z) {
          if (leq(z, x) && leq(z, y) && (best == kUndefined || leq(best, z))) {
            best = z;
          }
        }
        if (best == kUndefined) {
          return std::nullopt;
        }
        for (Elem z = 0; z < n; ++z) {
          if (leq(z, x) && leq(z, y) && !leq(z, best)) {
            return std::nullopt;
          }
        }
        cap[std::size_t(x) * n + y] = best;
        cap[std::size_t(y) * n + x] = best;
      }
    }
    return cap;
  }

  Quotient quotient_by(SkewAlgebra const& A, Partition const& c, QuotientCap cap) {
    if (c.size() != A.size()) {
      throw StructuralError("partition size does not match the algebra");
    }
    if (auto v = congruence_violation(A, c, OpSet::lattice)) {
      throw DomainError("partition is not a congruence for "
                            + std::string(op_name(v->op)),
                        {v->x, v->x_prime, v->y});
    }
    auto cap_violation = congruence_violation(A, c, OpSet::cap);
    if (cap_violation && cap == QuotientCap::require_induced) {
      throw DomainError("partition is not a congruence for cap",
                        {cap_violation->x, cap_violation->x_prime, cap_violation->y});
    }

    Elem const        m = c.block_count();
    std::vector<Elem> tables[4];
    for (Op op : kOps) {
      auto& t = tables[static_cast<unsigned>(op)];
      t.resize(std::size_t(m) * m);
      for (Elem i = 0; i < m; ++i) {
        for (Elem j = 0; j < m; ++j) {
          t[std::size_t(i) * m + j]
              = c.label(A.apply(op, c.representative(i), c.representative(j)));
        }
      }
    }
    if (cap_violation) {
      auto glb = glb_table(m, tables[0]);
      if (!glb) {
        throw DomainError("quotient has no intersections");
      }
      tables[3] = std::move(*glb);
    }
    return Quotient{SkewAlgebra(m,
                                c.label(A.zero()),
                                std::move(tables[0]),
                                std::move(tables[1]),
                                std::move(tables[2]),
                                std::move(tables[3])),
                    c.labels()};
  }

  SkewAlgebra mirror(SkewAlgebra const& A) {
    return SkewAlgebra::from_operations(
        A.size(),
        A.zero(),
        [&A](Elem x, Elem y) { return A.meet(y, x); },
        [&A](Elem x, Elem y) { return A.join(y, x); },
        [&A](Elem x, Elem y) { return A.diff(x, y); },
        [&A](Elem x, Elem y) { return A.cap(x, y); });
  }

  Quotient subalgebra(SkewAlgebra const& A, std::vector<Elem> const& members) {
    std::vector<Elem> sorted = members;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<Elem> index(A.size(), kUndefined);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (sorted[i] >= A.size()) {
        throw StructuralError("subset member out of range");
      }
      index[sorted[i]] = static_cast<Elem>(i);
    }
    if (index[A.zero()] == kUndefined) {
      throw DomainError("subset does not contain 0", {A.zero()});
    }
    Elem const        m = static_cast<Elem>(sorted.size());
    std::vector<Elem> tables[4];
    for (Op op : kOps) {
      auto& t = tables[static_cast<unsigned>(op)];
      t.resize(std::size_t(m) * m);
      for (Elem i = 0; i < m; ++i) {
        for (Elem j = 0; j < m; ++j) {
          Elem r = A.apply(op, sorted[i], sorted[j]);
          if (index[r] == kUndefined) {
            throw DomainError("subset is not closed under "
                                  + std::string(op_name(op)),
                              {sorted[i], sorted[j]});
          }
          t[std::size_t(i) * m + j] = index[r];
        }
      }
    }
    return Quotient{SkewAlgebra(m,
                                index[A.zero()],
                                std::move(tables[0]),
                                std::move(tables[1]),
                                std::move(tables[2]),
                                std::move(tables[3])),
                    sorted};
  }

  FiberProduct fiber_product(SkewAlgebra const&       A,
                             std::vector<Elem> const& f,
                             SkewAlgebra const&       B,
                             std::vector<Elem> const& g) {
    if (f.size() != A.size() || g.size() != B.size()) {
      throw StructuralError("structure map size does not match its algebra");
    }
    FiberProduct out{SkewAlgebra(algebras::trivial()), {}, {}, {}};
    std::vector<Elem> index(std::size_t(A.size()) * B.size(), kUndefined);
    for (Elem a = 0; a < A.size(); ++a) {
      for (Elem b = 0; b < B.size(); ++b) {
        if (f[a] == g[b]) {
          index[std::size_t(a) * B.size() + b] = static_cast<Elem>(out.pairs.size());
          out.pairs.emplace_back(a, b);
          out.first.push_back(a);
          out.second.push_back(b);
        }
      }
    }
    Elem const m      = static_cast<Elem>(out.pairs.size());
    auto       lookup = [&](Elem a, Elem b) {
      Elem i = index[std::size_t(a) * B.size() + b];
      if (i == kUndefined) {
        throw DomainError("structure maps do not preserve the operations", {a, b});
      }
      return i;
    };
    std::vector<Elem> tables[3];
    for (Op op : {Op::meet, Op::join, Op::diff}) {
      auto& t = tables[static_cast<unsigned>(op)];
      t.resize(std::size_t(m) * m);
      for (Elem i = 0; i < m; ++i) {
        for (Elem j = 0; j < m; ++j) {
          auto [a1, b1]             = out.pairs[i];
          auto [a2, b2]             = out.pairs[j];
          t[std::size_t(i) * m + j] = lookup(A.apply(op, a1, a2), B.apply(op, b1, b2));
        }
      }
    }
    auto cap = glb_table(m, tables[0]);
    if (!cap) {
      throw DomainError("fiber product has no intersections");
    }
    out.algebra = SkewAlgebra(m,
                              lookup(A.zero(), B.zero()),
                              std::move(tables[0]),
                              std::move(tables[1]),
                              std::move(tables[2]),
                              std::move(*cap));
    return out;
  }

  std::string_view handedness_name(Handedness h) noexcept {
    switch (h) {
      case Handedness::right:
        return "right";
      case Handedness::left:
        return "left";
      case Handedness::commutative:
        return "commutative";
      case Handedness::neither:
        break;
    }
    return "neither";
  }

  Handedness handedness(SkewAlgebra const& A) {
    bool right = true, left = true, commutative = true;
    for (Elem x = 0; x < A.size(); ++x) {
      for (Elem y = 0; y < A.size(); ++y) {
        Elem xyx = A.meet(A.meet(x, y), x);
        right    = right && xyx == A.meet(y, x);
        left     = left && xyx == A.meet(x, y);
        commutative = commutative && A.meet(x, y) == A.meet(y, x);
      }
    }
    if (commutative) {
      return Handedness::commutative;
    }
    if (right) {
      return Handedness::right;
    }
    return left ? Handedness::left : Handedness::neither;
  }

  bool second_decomposition_check(SkewAlgebra const& A) {
    GreenRelations g  = green_partitions(A);
    Quotient       qD = quotient_by(A, g.D);
    Quotient       qR = quotient_by(A, g.R);
    Quotient       qL = quotient_by(A, g.L);

    auto to_d = [&](Partition const& p) {
      std::vector<Elem> m(p.block_count());
      for (Elem b = 0; b < p.block_count(); ++b) {
        m[b] = qD.map[p.representative(b)];
      }
      return m;
    };
    FiberProduct P = fiber_product(qR.algebra, to_d(g.R), qL.algebra, to_d(g.L));

    std::vector<Elem> phi(A.size());
    std::vector<bool> hit(P.algebra.size(), false);
    for (Elem a = 0; a < A.size(); ++a) {
      auto key = std::make_pair(qR.map[a], qL.map[a]);
      auto it  = std::lower_bound(P.pairs.begin(), P.pairs.end(), key);
      if (it == P.pairs.end() || *it != key) {
        return false;
      }
      phi[a] = static_cast<Elem>(it - P.pairs.begin());
      if (hit[phi[a]]) {
        return false;
      }
      hit[phi[a]] = true;
    }
    if (A.size() != P.algebra.size() || phi[A.zero()] != P.algebra.zero()) {
      return false;
    }
    for (Op op : kOps) {
      for (Elem x = 0; x < A.size(); ++x) {
        for (Elem y = 0; y < A.size(); ++y) {
          if (phi[A.apply(op, x, y)] != P.algebra.apply(op, phi[x], phi[y])) {
            return false;
          }
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Standard instances
  ////////////////////////////////////////////////////////////////////////

  namespace algebras {
    SkewAlgebra trivial() {
      return SkewAlgebra(1, 0, {0}, {0}, {0}, {0});
    }

    SkewAlgebra three() {
      return SkewAlgebra::from_operations(
          3,
          0,
          [](Elem x, Elem y) { return x == 0 || y == 0 ? Elem{0} : y; },
          [](Elem x, Elem y) { return x == 0 ? y : x; },
          [](Elem x, Elem y) { return y == 0 ? x : Elem{0}; },
          [](Elem x, Elem y) { return x == y ? x : Elem{0}; });
    }

    SkewAlgebra boolean(unsigned k) {
      if (k > 16) {
        throw SizeLimitError("boolean(k) is limited to k <= 16");
      }
      return SkewAlgebra::from_operations(
          Elem{1} << k,
          0,
          [](Elem x, Elem y) { return x & y; },
          [](Elem x, Elem y) { return x | y; },
          [](Elem x, Elem y) { return x & ~y; },
          [](Elem x, Elem y) { return x & y; });
    }
  }  // namespace algebras

}  // namespace skewstone
