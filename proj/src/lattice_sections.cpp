#include "skewstone/lattice_sections.hpp"

#include <algorithm>
#include <functional>

#include "skewstone/morphisms.hpp"
#include "skewstone/sections.hpp"

namespace skewstone {

  namespace {
    Mask all_base(SkewSpace const& sp) {
      return sp.size_B() == kMaskBits ? ~Mask{0} : bit(sp.size_B()) - 1;
    }

    void require_right_handed(SkewAlgebra const& A) {
      Handedness h = handedness(A);
      if (h != Handedness::right && h != Handedness::commutative) {
        throw DomainError("lattice sections are only searched in right-handed algebras");
      }
    }
  }  // namespace

  bool is_lattice_section(SkewAlgebra const& A, LatticeSection const& l) {
    GreenRelations const g = green_partitions(A);
    Quotient const       q = quotient_by(A, g.D);
    SkewAlgebra const&   Q = q.algebra;
    if (l.choice.size() != Q.size()) {
      return false;
    }
    for (Elem d = 0; d < Q.size(); ++d) {
      if (l.choice[d] >= A.size() || q.map[l.choice[d]] != d) {
        return false;
      }
    }
    if (l.choice[Q.zero()] != A.zero()) {
      return false;
    }
    for (Elem d = 0; d < Q.size(); ++d) {
      for (Elem e = 0; e < Q.size(); ++e) {
        if (l.choice[Q.meet(d, e)] != A.meet(l.choice[d], l.choice[e])
            || l.choice[Q.join(d, e)] != A.join(l.choice[d], l.choice[e])) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_global_section(SkewSpace const& sp, GlobalSection const& s) {
    if (s.points.size() != sp.size_B()) {
      return false;
    }
    for (Elem b = 0; b < sp.size_B(); ++b) {
      if (s.points[b] >= sp.size_E() || sp.p(s.points[b]) != b) {
        return false;
      }
    }
    return true;
  }

  std::optional<LatticeSection> find_lattice_section(SkewAlgebra const& A) {
    require_right_handed(A);
    GreenRelations const g = green_partitions(A);
    Quotient const       q = quotient_by(A, g.D);
    SkewAlgebra const&   Q = q.algebra;
    std::vector<Elem>    choice(Q.size(), kUndefined);
    std::vector<Elem>    trail, queue;

    auto assign = [&](Elem d, Elem a) {
      if (choice[d] != kUndefined) {
        return choice[d] == a;
      }
      choice[d] = a;
      trail.push_back(d);
      queue.push_back(d);
      return true;
    };
    auto propagate = [&] {
      while (!queue.empty()) {
        Elem d = queue.back();
        queue.pop_back();
        for (Elem e = 0; e < Q.size(); ++e) {
          if (choice[e] == kUndefined) {
            continue;
          }
          Elem a = choice[d], b = choice[e];
          if (!assign(Q.meet(d, e), A.meet(a, b)) || !assign(Q.meet(e, d), A.meet(b, a))
              || !assign(Q.join(d, e), A.join(a, b)) || !assign(Q.join(e, d), A.join(b, a))) {
            queue.clear();
            return false;
          }
        }
      }
      return true;
    };
    auto undo = [&](std::size_t mark) {
      while (trail.size() > mark) {
        choice[trail.back()] = kUndefined;
        trail.pop_back();
      }
    };

    std::function<bool()> descend = [&]() {
      auto it = std::find(choice.begin(), choice.end(), kUndefined);
      if (it == choice.end()) {
        return true;
      }
      Elem d = static_cast<Elem>(it - choice.begin());
      for (Elem a : g.D.blocks()[d]) {
        std::size_t mark = trail.size();
        if (assign(d, a) && propagate() && descend()) {
          return true;
        }
        undo(mark);
      }
      return false;
    };

    if (!assign(Q.zero(), A.zero()) || !propagate() || !descend()) {
      return std::nullopt;
    }
    LatticeSection l{std::move(choice)};
    if (!is_lattice_section(A, l)) {
      throw DomainError("lattice section search returned an invalid choice");
    }
    return l;
  }

  std::optional<GlobalSection> find_global_section(SkewSpace const& sp) {
    GlobalSection s;
    for (Elem b = 0; b < sp.size_B(); ++b) {
      if (sp.fiber(b).empty()) {
        return std::nullopt;
      }
      s.points.push_back(sp.fiber(b).front());
    }
    return s;
  }

  GlobalSection global_from_lattice(SkewAlgebra const&    A,
                                    Spectrum const&       sk,
                                    LatticeSection const& l) {
    if (!is_lattice_section(A, l)) {
      throw DomainError("not a lattice section");
    }
    GreenRelations const g = green_partitions(A);
    Quotient const       q = quotient_by(A, g.D);
    SkewAlgebra const&   Q = q.algebra;
    SkewSpace const&     sp = sk.space;

    std::vector<Mask> M(Q.size()), N(Q.size());
    for (Elem d = 0; d < Q.size(); ++d) {
      M[d] = basic_copen(sk, l.choice[d]);
      N[d] = basic_base_copen(sk, l.choice[d]);
    }
    for (Elem d = 0; d < Q.size(); ++d) {
      for (Elem e = 0; e < Q.size(); ++e) {
        if (M[Q.meet(d, e)] != (preimage(sp, N[d] & N[e]) & M[e])) {
          throw DomainError("local sections are not compatible", {d, e});
        }
      }
    }
    Mask glued = 0;
    for (Elem d = 0; d < Q.size(); ++d) {
      glued |= M[d];
    }
    if (!is_section(sp, glued) || project(sp, glued) != all_base(sp)) {
      throw DomainError("glued local sections do not form a global section");
    }
    GlobalSection s;
    s.points.resize(sp.size_B());
    for (Elem x : mask_to_indices(glued)) {
      s.points[sp.p(x)] = x;
    }
    return s;
  }

  LatticeSection lattice_from_global(SkewAlgebra const&   A,
                                     Spectrum const&      sk,
                                     GlobalSection const& s) {
    SkewSpace const& sp = sk.space;
    if (!is_global_section(sp, s)) {
      throw DomainError("not a global section");
    }
    DualAlgebra const  dual = dual_algebra(sp);
    SkewAlgebra const& D    = dual.algebra;
    auto s_of = [&](Mask V) {
      Mask out = 0;
      for (Elem b : mask_to_indices(V)) {
        out |= bit(s.points[b]);
      }
      return dual.index_of(out);
    };
    Elem const all = static_cast<Elem>(std::size_t(1) << sp.size_B());
    for (Mask U = 0; U < all; ++U) {
      for (Mask V = 0; V < all; ++V) {
        if (D.meet(s_of(U), s_of(V)) != s_of(U & V) || D.join(s_of(U), s_of(V)) != s_of(U | V)) {
          throw DomainError("V ↦ s(V) does not preserve ∧ and ∨",
                            {static_cast<Elem>(U), static_cast<Elem>(V)});
        }
      }
    }
    // a ↦ M_a identifies A with the dual; D-class d corresponds to N_a.
    std::vector<Elem> phi_inverse(D.size(), kUndefined);
    for (Elem a = 0; a < A.size(); ++a) {
      phi_inverse[dual.index_of(basic_copen(sk, a))] = a;
    }
    GreenRelations const g = green_partitions(A);
    Quotient const       q = quotient_by(A, g.D);
    LatticeSection       l;
    l.choice.resize(q.algebra.size());
    for (Elem d = 0; d < q.algebra.size(); ++d) {
      Elem a      = g.D.representative(d);
      l.choice[d] = phi_inverse[s_of(basic_base_copen(sk, a))];
    }
    if (!is_lattice_section(A, l)) {
      throw DomainError("transported section is not a lattice section");
    }
    return l;
  }

  bool section_equivalence_check(SkewAlgebra const& A) {
    require_right_handed(A);
    Spectrum const               sk = skew_spectrum(A);
    std::optional<LatticeSection> l  = find_lattice_section(A);
    std::optional<GlobalSection>  s  = find_global_section(sk.space);
    if (l.has_value() != s.has_value()) {
      return false;
    }
    if (l && !is_global_section(sk.space, global_from_lattice(A, sk, *l))) {
      return false;
    }
    if (s && !is_lattice_section(A, lattice_from_global(A, sk, *s))) {
      return false;
    }
    return true;
  }

}  // namespace skewstone
