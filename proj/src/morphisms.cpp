#include "skewstone/morphisms.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <string>
#include <tuple>

namespace skewstone {

  namespace {
    constexpr std::array<Op, 4> kOps = {Op::meet, Op::join, Op::diff, Op::cap};

    // Depth-first search for structure-preserving maps A -> T.  Values
    // forced by the operations are propagated eagerly, so a branch dies as
    // soon as two forced values disagree.
    class HomSearch {
     public:
      HomSearch(SkewAlgebra const& A, SkewAlgebra const& T)
          : _A(A), _T(T), _f(A.size(), kUndefined), _used(T.size(), false) {
        _gA = green_partitions(A);
        _gT = green_partitions(T);
      }

      // Restricts f(x) to targets v with allowed[x][v].
      void restrict(std::vector<std::vector<bool>> allowed) {
        _allowed = std::move(allowed);
      }
      void injective() {
        _injective = true;
      }
      // Throw SizeLimitError after this many branching steps.
      void budget(double nodes) {
        _budget = nodes;
      }

      // Calls visit(f) for each complete map; stops when visit returns false.
      template <typename Visit>
      void run(Visit&& visit) {
        if (assign(_A.zero(), _T.zero()) && propagate()) {
          descend(visit);
        }
      }

     private:
      bool assign(Elem x, Elem v) {
        if (_f[x] != kUndefined) {
          return _f[x] == v;
        }
        if ((!_allowed.empty() && !_allowed[x][v]) || (_injective && _used[v])) {
          return false;
        }
        _f[x]    = v;
        _used[v] = true;
        _trail.push_back(x);
        _queue.push_back(x);
        return true;
      }

      bool propagate() {
        while (!_queue.empty()) {
          Elem x = _queue.back();
          _queue.pop_back();
          for (Elem y = 0; y < _A.size(); ++y) {
            if (_f[y] == kUndefined) {
              continue;
            }
            for (Op op : kOps) {
              if (!assign(_A.apply(op, x, y), _T.apply(op, _f[x], _f[y]))
                  || !assign(_A.apply(op, y, x), _T.apply(op, _f[y], _f[x]))) {
                _queue.clear();
                return false;
              }
            }
          }
        }
        return true;
      }

      void undo(std::size_t mark) {
        while (_trail.size() > mark) {
          _used[_f[_trail.back()]] = false;
          _f[_trail.back()]        = kUndefined;
          _trail.pop_back();
        }
      }

      template <typename Visit>
      bool descend(Visit& visit) {
        Elem x = 0;
        while (x < _A.size() && _f[x] != kUndefined) {
          ++x;
        }
        if (x == _A.size()) {
          return visit(_f);
        }
        // Elements of one D-class go to one D-class.
        Elem anchor = kUndefined;
        for (Elem y : _gA.D.blocks()[_gA.D.label(x)]) {
          if (_f[y] != kUndefined) {
            anchor = _f[y];
            break;
          }
        }
        for (Elem v = 0; v < _T.size(); ++v) {
          if (anchor != kUndefined && !_gT.D.same(anchor, v)) {
            continue;
          }
          if (++_nodes > _budget) {
            throw SizeLimitError("homomorphism search exceeded "
                                 + std::to_string(static_cast<long long>(_budget)) + " steps");
          }
          std::size_t mark = _trail.size();
          if (assign(x, v) && propagate() && !descend(visit)) {
            return false;
          }
          undo(mark);
        }
        return true;
      }

      SkewAlgebra const&             _A;
      SkewAlgebra const&             _T;
      GreenRelations                 _gA;
      GreenRelations                 _gT;
      std::vector<Elem>              _f;
      std::vector<bool>              _used;
      std::vector<Elem>              _trail;
      std::vector<Elem>              _queue;
      std::vector<std::vector<bool>> _allowed;
      bool                           _injective = false;
      double                         _budget    = 1e300;
      double                         _nodes     = 0;
    };

    void check_map(std::vector<Elem> const& map, Elem n, Elem target_n) {
      if (map.size() != n) {
        throw StructuralError("map has " + std::to_string(map.size())
                              + " entries, expected " + std::to_string(n));
      }
      for (Elem v : map) {
        if (v >= target_n) {
          throw StructuralError("map value " + std::to_string(v) + " is out of range");
        }
      }
    }
  }  // namespace

  ValidationReport validate_hom(Homomorphism const& f) {
    SkewAlgebra const& A = *f.source;
    SkewAlgebra const& T = *f.target;
    check_map(f.map, A.size(), T.size());
    ValidationReport report;
    if (f.map[A.zero()] != T.zero()) {
      report.failures.push_back({"preserves_zero", {}});
    }
    for (Op op : kOps) {
      bool done = false;
      for (Elem x = 0; x < A.size() && !done; ++x) {
        for (Elem y = 0; y < A.size() && !done; ++y) {
          if (f.map[A.apply(op, x, y)] != T.apply(op, f.map[x], f.map[y])) {
            report.failures.push_back({"preserves_" + std::string(op_name(op)), {x, y}});
            done = true;
          }
        }
      }
    }
    return report;
  }

  Homomorphism identity_hom(AlgebraRef A) {
    std::vector<Elem> map(A->size());
    for (Elem x = 0; x < A->size(); ++x) {
      map[x] = x;
    }
    return Homomorphism{A, A, std::move(map)};
  }

  Homomorphism compose(Homomorphism const& second, Homomorphism const& first) {
    if (*first.target != *second.source) {
      throw StructuralError("homomorphisms are not composable");
    }
    std::vector<Elem> map(first.map.size());
    for (std::size_t x = 0; x < map.size(); ++x) {
      map[x] = second.map[first.map[x]];
    }
    return Homomorphism{first.source, second.target, std::move(map)};
  }

  std::vector<std::vector<Elem>> enumerate_homs(SkewAlgebra const&      A,
                                                SkewAlgebra const&      target,
                                                HomSearchOptions const& options) {
    std::vector<std::vector<Elem>> out;
    HomSearch                      search(A, target);
    search.budget(options.max_steps);
    search.run([&](std::vector<Elem> const& f) {
      if (out.size() >= options.max_results) {
        throw SizeLimitError("more than " + std::to_string(options.max_results)
                             + " homomorphisms");
      }
      out.push_back(f);
      return true;
    });
    std::sort(out.begin(), out.end());
    return out;
  }

  namespace {
    // Per-element invariants preserved by isomorphisms.
    std::vector<std::array<Elem, 5>> signatures(SkewAlgebra const& A) {
      GreenRelations const             g = green_partitions(A);
      std::vector<std::array<Elem, 5>> out(A.size());
      for (Elem x = 0; x < A.size(); ++x) {
        Elem below = 0, above = 0, pbelow = 0;
        for (Elem y = 0; y < A.size(); ++y) {
          below += natural_leq(A, y, x);
          above += natural_leq(A, x, y);
          pbelow += natural_preceq(A, y, x);
        }
        out[x] = {x == A.zero(),
                  static_cast<Elem>(g.D.blocks()[g.D.label(x)].size()),
                  below,
                  above,
                  pbelow};
      }
      return out;
    }
  }  // namespace

  std::optional<std::vector<Elem>> find_algebra_isomorphism(SkewAlgebra const& A,
                                                            SkewAlgebra const& B) {
    if (A.size() != B.size()) {
      return std::nullopt;
    }
    auto sa = signatures(A), sb = signatures(B);
    auto ca = sa, cb = sb;
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    if (ca != cb) {
      return std::nullopt;
    }
    std::vector<std::vector<bool>> allowed(A.size(), std::vector<bool>(B.size()));
    for (Elem x = 0; x < A.size(); ++x) {
      for (Elem v = 0; v < B.size(); ++v) {
        allowed[x][v] = sa[x] == sb[v];
      }
    }
    std::optional<std::vector<Elem>> found;
    HomSearch                        search(A, B);
    search.restrict(std::move(allowed));
    search.injective();
    search.run([&found](std::vector<Elem> const& f) {
      found = f;
      return false;
    });
    return found;
  }

  ////////////////////////////////////////////////////////////////////////
  // Space morphisms
  ////////////////////////////////////////////////////////////////////////

  ValidationReport validate_space_morphism(SpaceMorphism const& m) {
    SkewSpace const& S = *m.source;
    SkewSpace const& T = *m.target;
    if (m.g.source_size() != S.size_E() || m.h.source_size() != S.size_B()) {
      throw StructuralError("morphism maps do not match the source space");
    }
    for (Elem x = 0; x < S.size_E(); ++x) {
      if (m.g.defined(x) && m.g(x) >= T.size_E()) {
        throw StructuralError("g value out of range");
      }
    }
    for (Elem b = 0; b < S.size_B(); ++b) {
      if (m.h.defined(b) && m.h(b) >= T.size_B()) {
        throw StructuralError("h value out of range");
      }
    }

    ValidationReport report;
    for (Elem x = 0; x < S.size_E(); ++x) {
      if (m.g.defined(x) && (!m.h.defined(S.p(x)) || T.p(m.g(x)) != m.h(S.p(x)))) {
        report.failures.push_back({"square", {x}});
        break;
      }
    }
    for (Elem b = 0; b < S.size_B(); ++b) {
      if (!m.h.defined(b)) {
        continue;
      }
      std::vector<Elem> image;
      for (Elem x : S.fiber(b)) {
        if (m.g.defined(x)) {
          image.push_back(m.g(x));
        }
      }
      if (image.empty()) {
        report.failures.push_back({"domain", {b}});
        break;
      }
      std::sort(image.begin(), image.end());
      if (image != T.fiber(m.h(b))) {
        report.failures.push_back({"fiber_bijective", {b}});
        break;
      }
    }
    if (S.has_band() && T.has_band() && report.ok()) {
      bool done = false;
      for (Elem x = 0; x < S.size_E() && !done; ++x) {
        for (Elem y : S.fiber(S.p(x))) {
          if (!m.g.defined(x) || !m.g.defined(y)) {
            continue;
          }
          Elem xy = S.band(x, y);
          if (!m.g.defined(xy) || m.g(xy) != T.band(m.g(x), m.g(y))) {
            report.failures.push_back({"band", {x, y}});
            done = true;
            break;
          }
        }
      }
    }
    return report;
  }

  SpaceMorphism identity_morphism(SpaceRef sp) {
    Elem E = sp->size_E(), B = sp->size_B();
    return SpaceMorphism{sp, sp, PartialMap::identity(E), PartialMap::identity(B)};
  }

  SpaceMorphism compose(SpaceMorphism const& second, SpaceMorphism const& first) {
    if (*first.target != *second.source) {
      throw StructuralError("space morphisms are not composable");
    }
    return SpaceMorphism{first.source,
                         second.target,
                         second.g.after(first.g),
                         second.h.after(first.h)};
  }

  bool same_morphism(SpaceMorphism const& a, SpaceMorphism const& b) {
    return *a.source == *b.source && *a.target == *b.target && a.g == b.g && a.h == b.h;
  }

  std::vector<SpaceMorphism> enumerate_space_morphisms(SpaceRef const& sp,
                                                       SpaceRef const& target,
                                                       std::size_t     max_count) {
    SkewSpace const& S = *sp;
    SkewSpace const& T = *target;
    if (std::pow(double(T.size_B() + 1), double(S.size_B())) > double(max_count)) {
      throw SizeLimitError("too many base maps to enumerate");
    }
    std::vector<SpaceMorphism> out;
    PartialMap                 h(S.size_B());
    PartialMap                 g(S.size_E());

    // Chooses preimages for the points of T.fiber(h(b)) one by one.
    std::function<void(Elem, std::size_t)> lift = [&](Elem b, std::size_t k) {
      if (b == S.size_B()) {
        SpaceMorphism m{sp, target, g, h};
        if (validate_space_morphism(m).ok()) {
          out.push_back(std::move(m));
          if (out.size() > max_count) {
            throw SizeLimitError("too many space morphisms");
          }
        }
        return;
      }
      if (!h.defined(b) || k == T.fiber(h(b)).size()) {
        lift(b + 1, 0);
        return;
      }
      Elem y = T.fiber(h(b))[k];
      for (Elem x : S.fiber(b)) {
        if (!g.defined(x)) {
          g.set(x, y);
          lift(b, k + 1);
          g.set(x, kUndefined);
        }
      }
    };
    std::function<void(Elem)> choose_h = [&](Elem b) {
      if (b == S.size_B()) {
        lift(0, 0);
        return;
      }
      choose_h(b + 1);
      for (Elem v = 0; v < T.size_B(); ++v) {
        h.set(b, v);
        choose_h(b + 1);
      }
      h.set(b, kUndefined);
    };
    choose_h(0);
    std::sort(out.begin(), out.end(), [](SpaceMorphism const& a, SpaceMorphism const& b) {
      return std::tie(a.h.values(), a.g.values()) < std::tie(b.h.values(), b.g.values());
    });
    return out;
  }

  std::optional<SpaceMorphism> find_space_isomorphism(SpaceRef const& a, SpaceRef const& b) {
    SkewSpace const& S = *a;
    SkewSpace const& T = *b;
    if (S.size_B() != T.size_B() || S.size_E() != T.size_E()
        || S.has_band() != T.has_band()) {
      return std::nullopt;
    }
    auto cs = band_coordinates(S), ct = band_coordinates(T);
    auto shape = [](SkewSpace const& sp, auto const& c, Elem base) {
      Elem kR = 0, kL = 0;
      for (Elem x : sp.fiber(base)) {
        kR = std::max(kR, c[x].first + 1);
        kL = std::max(kL, c[x].second + 1);
      }
      return std::make_tuple(static_cast<Elem>(sp.fiber(base).size()), kR, kL);
    };
    PartialMap        g(S.size_E()), h(S.size_B());
    std::vector<bool> used(T.size_B(), false);
    for (Elem x = 0; x < S.size_B(); ++x) {
      auto want = shape(S, cs, x);
      Elem y    = 0;
      while (y < T.size_B() && (used[y] || shape(T, ct, y) != want)) {
        ++y;
      }
      if (y == T.size_B()) {
        return std::nullopt;
      }
      used[y] = true;
      h.set(x, y);
      for (Elem s : S.fiber(x)) {
        for (Elem t : T.fiber(y)) {
          if (cs[s] == ct[t]) {
            g.set(s, t);
          }
        }
        if (!g.defined(s)) {
          return std::nullopt;
        }
      }
    }
    SpaceMorphism m{a, b, std::move(g), std::move(h)};
    if (!validate_space_morphism(m).ok()) {
      return std::nullopt;
    }
    return m;
  }

  ////////////////////////////////////////////////////////////////////////
  // Functors
  ////////////////////////////////////////////////////////////////////////

  SpaceMorphism dual_of_hom(Homomorphism const& f,
                            Spectrum const&     sk_source,
                            Spectrum const&     sk_target) {
    SkewAlgebra const& A = *f.source;
    check_map(f.map, A.size(), f.target->size());
    PartialMap g(sk_target.space.size_E()), h(sk_target.space.size_B());
    for (Elem j = 0; j < sk_target.primes.size(); ++j) {
      Ideal Q;
      for (Elem a = 0; a < A.size(); ++a) {
        if (sk_target.primes[j].contains(f.map[a])) {
          Q.members.push_back(a);
        }
      }
      if (Q.members.size() == A.size()) {
        continue;
      }
      auto it = std::find(sk_source.primes.begin(), sk_source.primes.end(), Q);
      if (it == sk_source.primes.end()) {
        throw DomainError("preimage of a prime ideal is not prime", {j});
      }
      Elem i = static_cast<Elem>(it - sk_source.primes.begin());
      h.set(j, i);
      for (Elem a = 0; a < A.size(); ++a) {
        if (Q.contains(a)) {
          continue;
        }
        Elem x = sk_target.point_of[j][f.map[a]];
        Elem v = sk_source.point_of[i][a];
        if (g.defined(x) && g(x) != v) {
          throw DomainError("dual map is not well defined", {j, a});
        }
        g.set(x, v);
      }
    }
    SpaceMorphism m{share(sk_target.space), share(sk_source.space), std::move(g), std::move(h)};
    ValidationReport r = validate_space_morphism(m);
    if (!r.ok()) {
      throw DomainError("dual of a homomorphism fails " + r.failures.front().law,
                        r.failures.front().witness);
    }
    return m;
  }

  SpaceMorphism dual_of_hom(Homomorphism const& f) {
    return dual_of_hom(f, skew_spectrum(*f.source), skew_spectrum(*f.target));
  }

  Homomorphism hom_of_space_morphism(SpaceMorphism const& m,
                                     DualAlgebra const&   dual_source,
                                     DualAlgebra const&   dual_target) {
    SkewSpace const& S = *m.source;
    SkewSpace const& T = *m.target;
    require_mask_space(S);
    require_mask_space(T);
    std::vector<Elem> map(dual_target.sections.size());
    for (Elem s = 0; s < map.size(); ++s) {
      Mask const R   = dual_target.sections[s];
      Mask       pre = 0;
      for (Elem x = 0; x < S.size_E(); ++x) {
        if (m.g.defined(x) && has_bit(R, m.g(x))) {
          pre |= bit(x);
        }
      }
      Mask const pR    = project(T, R);
      Mask       h_pre = 0;
      for (Elem b = 0; b < S.size_B(); ++b) {
        if (m.h.defined(b) && has_bit(pR, m.h(b))) {
          h_pre |= bit(b);
        }
      }
      if (project(S, pre) != h_pre) {
        throw DomainError("p(g⁻¹(S)) differs from h⁻¹(p'(S))", {s});
      }
      map[s] = dual_source.index_of(pre);
    }
    Homomorphism f{share(dual_target.algebra), share(dual_source.algebra), std::move(map)};
    ValidationReport r = validate_hom(f);
    if (!r.ok()) {
      throw DomainError("g⁻¹ fails " + r.failures.front().law, r.failures.front().witness);
    }
    return f;
  }

  Homomorphism hom_of_space_morphism(SpaceMorphism const& m) {
    return hom_of_space_morphism(m, dual_algebra(*m.source), dual_algebra(*m.target));
  }

  PhiResult phi_iso(SkewAlgebra const& A) {
    Spectrum    sk   = skew_spectrum(A);
    DualAlgebra dual = dual_algebra_rect(sk.space);
    std::vector<Elem> map(A.size());
    std::vector<bool> hit(dual.algebra.size(), false);
    for (Elem a = 0; a < A.size(); ++a) {
      map[a] = dual.index_of(basic_copen(sk, a));
      if (hit[map[a]]) {
        throw DomainError("a ↦ M_a is not injective", {a});
      }
      hit[map[a]] = true;
    }
    if (A.size() != dual.algebra.size()) {
      throw DomainError("a ↦ M_a is not onto");
    }
    Homomorphism iso{share(A), share(dual.algebra), std::move(map)};
    ValidationReport r = validate_hom(iso);
    if (!r.ok()) {
      throw DomainError("a ↦ M_a fails " + r.failures.front().law, r.failures.front().witness);
    }
    return PhiResult{std::move(sk), std::move(dual), std::move(iso)};
  }

  PsiResult psi_iso(SkewSpace const& sp) {
    DualAlgebra dual = dual_algebra(sp);
    Spectrum    sk   = skew_spectrum(dual.algebra);
    if (sk.space.size_B() != sp.size_B() || sk.space.size_E() != sp.size_E()) {
      throw DomainError("spectrum of the dual has the wrong size");
    }
    PartialMap h(sp.size_B()), g(sp.size_E());
    for (Elem b = 0; b < sp.size_B(); ++b) {
      Ideal P;
      for (Elem s = 0; s < dual.sections.size(); ++s) {
        if (!has_bit(project(sp, dual.sections[s]), b)) {
          P.members.push_back(s);
        }
      }
      auto it = std::find(sk.primes.begin(), sk.primes.end(), P);
      if (it == sk.primes.end()) {
        throw DomainError("sections avoiding a base point do not form a prime", {b});
      }
      h.set(b, static_cast<Elem>(it - sk.primes.begin()));
    }
    for (Elem y = 0; y < sp.size_E(); ++y) {
      g.set(y, sk.point_of[h(sp.p(y))][dual.index_of(bit(y))]);
    }
    auto bijective = [](PartialMap const& f, Elem n) {
      std::vector<Elem> v = f.values();
      std::sort(v.begin(), v.end());
      return v.size() == n && std::adjacent_find(v.begin(), v.end()) == v.end()
             && (v.empty() || v.back() < n);
    };
    if (!bijective(h, sk.space.size_B()) || !bijective(g, sk.space.size_E())) {
      throw DomainError("ψ is not bijective");
    }
    for (Elem y = 0; y < sp.size_E(); ++y) {
      if (sk.space.p(g(y)) != h(sp.p(y))) {
        throw DomainError("ψ square does not commute", {y});
      }
      for (Elem s = 0; s < dual.sections.size(); ++s) {
        if (has_bit(dual.sections[s], y) != has_bit(basic_copen(sk, s), g(y))) {
          throw DomainError("y ∈ S differs from g(y) ∈ M_S", {y, s});
        }
      }
      if (sp.has_band()) {
        for (Elem z : sp.fiber(sp.p(y))) {
          if (g(sp.band(y, z)) != sk.space.band(g(y), g(z))) {
            throw DomainError("ψ does not preserve the band", {y, z});
          }
        }
      }
    }
    SpaceMorphism m{share(sp), share(sk.space), std::move(g), std::move(h)};
    return PsiResult{std::move(dual), std::move(sk), std::move(m)};
  }

}  // namespace skewstone
