#include "skewstone/variants.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace skewstone {

  ////////////////////////////////////////////////////////////////////////
  // Pairs
  ////////////////////////////////////////////////////////////////////////

  SpacePair to_pair(SkewSpace const& sp) {
    if (!sp.has_band()) {
      throw DomainError("to_pair needs a band");
    }
    auto const        coords = band_coordinates(sp);
    SpacePair         out;
    std::vector<Elem> pl, pr;
    out.to_left.resize(sp.size_E());
    out.to_right.resize(sp.size_E());
    for (Elem b = 0; b < sp.size_B(); ++b) {
      Elem const offL = static_cast<Elem>(pl.size());
      Elem const offR = static_cast<Elem>(pr.size());
      Elem       kL = 0, kR = 0;
      for (Elem x : sp.fiber(b)) {
        kL                = std::max(kL, coords[x].first + 1);
        kR                = std::max(kR, coords[x].second + 1);
        out.to_left[x]  = offL + coords[x].first;
        out.to_right[x] = offR + coords[x].second;
      }
      pl.insert(pl.end(), kL, b);
      pr.insert(pr.end(), kR, b);
    }
    out.left  = SkewSpace(sp.size_B(), std::move(pl));
    out.right = SkewSpace(sp.size_B(), std::move(pr));
    return out;
  }

  SkewSpace from_pair(SkewSpace const& left, SkewSpace const& right) {
    if (left.size_B() != right.size_B()) {
      throw DomainError("pair spaces have different bases",
                        {left.size_B(), right.size_B()});
    }
    std::vector<Elem>     p;
    std::vector<RectBand> bands;
    for (Elem b = 0; b < left.size_B(); ++b) {
      Elem kL = static_cast<Elem>(left.fiber(b).size());
      Elem kR = static_cast<Elem>(right.fiber(b).size());
      p.insert(p.end(), std::size_t(kL) * kR, b);
      bands.push_back(RectBand::product(kL, kR));
    }
    return SkewSpace::with_fiber_bands(left.size_B(), std::move(p), bands);
  }

  bool pair_roundtrip_check(SkewSpace const& sp) {
    SpacePair const P = to_pair(sp);
    SkewSpace const F = from_pair(P.left, P.right);
    if (F.size_E() != sp.size_E() || F.size_B() != sp.size_B()) {
      return false;
    }
    PartialMap g(sp.size_E());
    for (Elem x = 0; x < sp.size_E(); ++x) {
      Elem b  = sp.p(x);
      Elem u  = P.left.fiber_position(P.to_left[x]);
      Elem v  = P.right.fiber_position(P.to_right[x]);
      Elem kR = static_cast<Elem>(P.right.fiber(b).size());
      g.set(x, F.fiber(b)[u * kR + v]);
    }
    std::vector<Elem> image = g.values();
    std::sort(image.begin(), image.end());
    if (std::adjacent_find(image.begin(), image.end()) != image.end()) {
      return false;
    }
    SpaceMorphism m{share(sp), share(F), g, PartialMap::identity(sp.size_B())};
    if (!validate_space_morphism(m).ok()) {
      return false;
    }
    SpacePair const Q = to_pair(F);
    return Q.left.projection() == P.left.projection()
           && Q.right.projection() == P.right.projection();
  }

  ////////////////////////////////////////////////////////////////////////
  // Space morphisms
  ////////////////////////////////////////////////////////////////////////

  MorphismDecomposition decompose_morphism(SpaceMorphism const& m) {
    ValidationReport r = validate_space_morphism(m);
    if (!r.ok()) {
      throw DomainError("not a space morphism: " + r.failures.front().law,
                        r.failures.front().witness);
    }
    SkewSpace const&  S    = *m.source;
    std::vector<Elem> domg = m.g.domain(), domh = m.h.domain();
    std::vector<Elem> idx_g(S.size_E(), kUndefined), idx_h(S.size_B(), kUndefined);
    for (Elem i = 0; i < domg.size(); ++i) {
      idx_g[domg[i]] = i;
    }
    for (Elem j = 0; j < domh.size(); ++j) {
      idx_h[domh[j]] = j;
    }
    std::vector<Elem> p(domg.size());
    for (Elem i = 0; i < domg.size(); ++i) {
      p[i] = idx_h[S.p(domg[i])];
    }
    SkewSpace middle;
    if (S.has_band() && m.target->has_band()) {
      std::size_t const E = domg.size();
      std::vector<Elem> band(E * E, kUndefined);
      for (Elem i = 0; i < E; ++i) {
        for (Elem j = 0; j < E; ++j) {
          if (p[i] == p[j]) {
            band[i * E + j] = idx_g[S.band(domg[i], domg[j])];
          }
        }
      }
      middle = SkewSpace(static_cast<Elem>(domh.size()), std::move(p), std::move(band));
    } else {
      middle = SkewSpace(static_cast<Elem>(domh.size()), std::move(p));
    }
    SpaceRef mid = share(std::move(middle));

    PartialMap gt(mid->size_E()), ht(mid->size_B());
    for (Elem i = 0; i < domg.size(); ++i) {
      gt.set(i, m.g(domg[i]));
    }
    for (Elem j = 0; j < domh.size(); ++j) {
      ht.set(j, m.h(domh[j]));
    }
    MorphismDecomposition out{mid,
                              SpaceMorphism{m.source, mid, PartialMap(idx_g), PartialMap(idx_h)},
                              SpaceMorphism{mid, m.target, std::move(gt), std::move(ht)}};
    for (SpaceMorphism const* part : {&out.partial_identity, &out.total}) {
      ValidationReport pr = validate_space_morphism(*part);
      if (!pr.ok()) {
        throw DomainError("decomposition part fails " + pr.failures.front().law,
                          pr.failures.front().witness);
      }
    }
    if (!out.total.g.total() || !out.total.h.total()) {
      throw DomainError("second part of the decomposition is not total");
    }
    if (!same_morphism(compose(out.total, out.partial_identity), m)) {
      throw DomainError("decomposition does not compose back to the morphism");
    }
    return out;
  }

  SpaceMorphismFlags classify_space_morphism(SpaceMorphism const& m) {
    SkewSpace const& S = *m.source;
    SkewSpace const& T = *m.target;
    SpaceMorphismFlags flags{};
    flags.semitotal = m.h.total();
    flags.total     = flags.semitotal && m.g.total();
    flags.saturated = true;
    for (Elem x = 0; x < S.size_E(); ++x) {
      flags.saturated = flags.saturated && m.g.defined(x) == m.h.defined(S.p(x));
    }

    auto bijective_onto = [](PartialMap const& f, Elem n) {
      std::vector<Elem> v = f.image_values();
      std::sort(v.begin(), v.end());
      if (v.size() != n) {
        return false;
      }
      for (Elem i = 0; i < n; ++i) {
        if (v[i] != i) {
          return false;
        }
      }
      return true;
    };
    flags.partial_identity
        = bijective_onto(m.g, T.size_E()) && bijective_onto(m.h, T.size_B());

    // Group the sections of both spaces by the base set they lie over.
    std::map<Mask, std::vector<Mask>> source_over, target_over;
    for (Mask s : enumerate_sections(S)) {
      source_over[project(S, s)].push_back(s);
    }
    for (Mask r : enumerate_sections(T)) {
      target_over[project(T, r)].push_back(r);
    }
    flags.section_lifting = true;
    for (auto const& [U, targets] : target_over) {
      Mask V = 0;
      for (Elem b = 0; b < S.size_B(); ++b) {
        if (m.h.defined(b) && has_bit(U, m.h(b))) {
          V |= bit(b);
        }
      }
      std::set<Mask> lifts;
      for (Mask R : targets) {
        Mask pre = 0;
        for (Elem x = 0; x < S.size_E(); ++x) {
          if (m.g.defined(x) && has_bit(R, m.g(x))) {
            pre |= bit(x);
          }
        }
        lifts.insert(pre);
      }
      for (Mask s : source_over[V]) {
        if (lifts.count(s) == 0) {
          flags.section_lifting = false;
          return flags;
        }
      }
    }
    return flags;
  }

  ////////////////////////////////////////////////////////////////////////
  // Homomorphisms
  ////////////////////////////////////////////////////////////////////////

  std::vector<Elem> image_of(Homomorphism const& f) {
    std::vector<Elem> image = f.map;
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    return image;
  }

  HomFlags classify_hom(Homomorphism const& f) {
    SkewAlgebra const&     T     = *f.target;
    std::vector<Elem> const image = image_of(f);
    HomFlags               flags{};
    flags.leq_cofinal    = is_leq_cofinal(T, image);
    flags.preceq_cofinal = is_preceq_cofinal(T, image);

    std::vector<bool> in(T.size(), false);
    for (Elem y : image) {
      in[y] = true;
    }
    GreenRelations const g = green_partitions(T);
    flags.D_saturated      = true;
    for (Elem y = 0; y < T.size(); ++y) {
      if (in[y] != in[g.D.representative(g.D.label(y))]) {
        flags.D_saturated = false;
      }
    }
    flags.leq_ideal_inclusion = image.size() == f.map.size() && is_leq_ideal(T, image);

    std::vector<bool> J(T.size(), false);
    for (Elem y : leq_ideal_generated(T, image)) {
      J[y] = true;
    }
    flags.image_ideal_preceq_closed = true;
    for (Elem x = 0; x < T.size(); ++x) {
      for (Elem y = 0; y < T.size(); ++y) {
        if (J[x] && !J[y] && natural_preceq(T, y, x)) {
          flags.image_ideal_preceq_closed = false;
        }
      }
    }
    return flags;
  }

  HomFactorization hom_factorization(Homomorphism const& f) {
    SkewAlgebra const&      T = *f.target;
    std::vector<Elem> const J = leq_ideal_generated(T, image_of(f));
    Quotient                sub = subalgebra(T, J);
    AlgebraRef              mid = share(std::move(sub.algebra));
    std::vector<Elem>       corestricted(f.map.size());
    for (std::size_t x = 0; x < f.map.size(); ++x) {
      corestricted[x] = static_cast<Elem>(
          std::lower_bound(J.begin(), J.end(), f.map[x]) - J.begin());
    }
    HomFactorization out{mid,
                         Homomorphism{f.source, mid, std::move(corestricted)},
                         Homomorphism{mid, f.target, sub.map}};
    for (Homomorphism const* part : {&out.cofinal, &out.inclusion}) {
      ValidationReport r = validate_hom(*part);
      if (!r.ok()) {
        throw DomainError("factor fails " + r.failures.front().law,
                          r.failures.front().witness);
      }
    }
    if (compose(out.inclusion, out.cofinal).map != f.map) {
      throw DomainError("factorization does not compose back to f");
    }
    if (!classify_hom(out.cofinal).leq_cofinal
        || !classify_hom(out.inclusion).leq_ideal_inclusion) {
      throw DomainError("factorization parts have the wrong type");
    }
    return out;
  }

}  // namespace skewstone
