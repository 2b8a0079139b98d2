#include "skewstone/sections.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace skewstone {

  void require_mask_space(SkewSpace const& sp) {
    if (sp.size_E() > kMaskBits || sp.size_B() > kMaskBits) {
      throw SizeLimitError("sections are limited to spaces with at most 64 points");
    }
  }

  bool is_section(SkewSpace const& sp, Mask S) {
    Mask seen = 0;
    for (Elem x : mask_to_indices(S)) {
      if (has_bit(seen, sp.p(x))) {
        return false;
      }
      seen |= bit(sp.p(x));
    }
    return true;
  }

  Mask project(SkewSpace const& sp, Mask S) {
    Mask out = 0;
    for (; S != 0; S &= S - 1) {
      out |= bit(sp.p(static_cast<Elem>(std::countr_zero(S))));
    }
    return out;
  }

  Mask preimage(SkewSpace const& sp, Mask U) {
    Mask out = 0;
    for (Elem x = 0; x < sp.size_E(); ++x) {
      if (has_bit(U, sp.p(x))) {
        out |= bit(x);
      }
    }
    return out;
  }

  Mask saturate(SkewSpace const& sp, Mask S) {
    return preimage(sp, project(sp, S));
  }

  bool subset_lex_less(Mask a, Mask b) noexcept {
    // Compare sorted index lists: at the first differing position the list
    // with the smaller index wins, and a proper prefix is smaller.
    while (a != 0 && b != 0) {
      int ia = std::countr_zero(a), ib = std::countr_zero(b);
      if (ia != ib) {
        return ia < ib;
      }
      a &= a - 1;
      b &= b - 1;
    }
    return a == 0 && b != 0;
  }

  std::vector<Mask> enumerate_sections(SkewSpace const& sp, std::size_t max_count) {
    require_mask_space(sp);
    std::size_t count = 1;
    for (Elem b = 0; b < sp.size_B(); ++b) {
      count *= 1 + sp.fiber(b).size();
      if (count > max_count) {
        throw SizeLimitError("space has more than " + std::to_string(max_count)
                             + " sections");
      }
    }
    std::vector<Mask> out{0};
    out.reserve(count);
    for (Elem b = 0; b < sp.size_B(); ++b) {
      std::size_t const n = out.size();
      for (Elem x : sp.fiber(b)) {
        for (std::size_t i = 0; i < n; ++i) {
          out.push_back(out[i] | bit(x));
        }
      }
    }
    std::sort(out.begin(), out.end(), subset_lex_less);
    return out;
  }

  Elem DualAlgebra::index_of(Mask S) const {
    auto it = index.find(S);
    if (it == index.end()) {
      throw DomainError("subset is not a section of the space");
    }
    return it->second;
  }

  namespace {
    template <typename Meet, typename Join>
    DualAlgebra build_dual(SkewSpace const& sp,
                           std::size_t      max_count,
                           Meet&&           meet,
                           Join&&           join) {
      std::vector<Mask>              sections = enumerate_sections(sp, max_count);
      std::unordered_map<Mask, Elem> index;
      for (std::size_t i = 0; i < sections.size(); ++i) {
        index.emplace(sections[i], static_cast<Elem>(i));
      }
      std::vector<Mask> sat(sections.size());
      for (std::size_t i = 0; i < sections.size(); ++i) {
        sat[i] = saturate(sp, sections[i]);
      }
      auto idx = [&index](Mask S) { return index.at(S); };
      auto alg = SkewAlgebra::from_operations(
          static_cast<Elem>(sections.size()),
          0,
          [&](Elem i, Elem j) { return idx(meet(sections[i], sections[j], sat[i], sat[j])); },
          [&](Elem i, Elem j) { return idx(join(sections[i], sections[j], sat[i], sat[j])); },
          [&](Elem i, Elem j) { return idx(sections[i] & ~sat[j]); },
          [&](Elem i, Elem j) { return idx(sections[i] & sections[j]); });
      return DualAlgebra{std::move(alg), std::move(sections), std::move(index)};
    }

    // Fiberwise S ⋏ R over the base points both sections cover.
    Mask band_meet(SkewSpace const& sp, Mask S, Mask R, Mask satS, Mask satR) {
      Mask s = S & satR, r = R & satS, out = 0;
      while (s != 0) {
        Elem x = static_cast<Elem>(std::countr_zero(s));
        Mask y = r & preimage(sp, bit(sp.p(x)));
        out |= bit(sp.band(x, static_cast<Elem>(std::countr_zero(y))));
        s &= s - 1;
      }
      return out;
    }
  }  // namespace

  DualAlgebra dual_algebra_right(SkewSpace const& sp, std::size_t max_count) {
    return build_dual(
        sp,
        max_count,
        [](Mask, Mask R, Mask satS, Mask) { return satS & R; },
        [](Mask S, Mask R, Mask satS, Mask) { return S | (R & ~satS); });
  }

  DualAlgebra dual_algebra_rect(SkewSpace const& sp, std::size_t max_count) {
    if (!sp.has_band()) {
      throw DomainError("the rectangular dual needs a band");
    }
    return build_dual(
        sp,
        max_count,
        [&sp](Mask S, Mask R, Mask satS, Mask satR) {
          return band_meet(sp, S, R, satS, satR);
        },
        [&sp](Mask S, Mask R, Mask satS, Mask satR) {
          return (S & ~satR) | (R & ~satS) | band_meet(sp, R, S, satR, satS);
        });
  }

  DualAlgebra dual_algebra(SkewSpace const& sp, std::size_t max_count) {
    return sp.has_band() ? dual_algebra_rect(sp, max_count)
                         : dual_algebra_right(sp, max_count);
  }

  bool reflection_check(SkewSpace const& sp) {
    DualAlgebra const  dual = dual_algebra(sp);
    SkewAlgebra const& A    = dual.algebra;
    std::vector<Mask>  image(A.size());
    std::vector<bool>  hit(std::size_t(1) << sp.size_B(), false);
    for (Elem i = 0; i < A.size(); ++i) {
      image[i] = project(sp, dual.sections[i]);
      hit[image[i]] = true;
    }
    if (std::find(hit.begin(), hit.end(), false) != hit.end() || image[A.zero()] != 0) {
      return false;
    }
    for (Elem i = 0; i < A.size(); ++i) {
      for (Elem j = 0; j < A.size(); ++j) {
        if (image[A.meet(i, j)] != (image[i] & image[j])
            || image[A.join(i, j)] != (image[i] | image[j])) {
          return false;
        }
        bool d = natural_preceq(A, i, j) && natural_preceq(A, j, i);
        if (d != (image[i] == image[j])) {
          return false;
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Partial maps
  ////////////////////////////////////////////////////////////////////////

  PartialMap::PartialMap(Elem source_size) : _values(source_size, kUndefined) {}

  PartialMap::PartialMap(std::vector<Elem> values) : _values(std::move(values)) {}

  PartialMap::PartialMap(Elem                     source_size,
                         std::vector<Elem> const& domain,
                         std::vector<Elem> const& values)
      : _values(source_size, kUndefined) {
    if (domain.size() != values.size()) {
      throw StructuralError("partial map domain and values differ in length");
    }
    for (std::size_t i = 0; i < domain.size(); ++i) {
      if (domain[i] >= source_size) {
        throw StructuralError("partial map domain point "
                              + std::to_string(domain[i]) + " is out of range");
      }
      if (_values[domain[i]] != kUndefined) {
        throw StructuralError("partial map domain point "
                              + std::to_string(domain[i]) + " is repeated");
      }
      if (values[i] == kUndefined) {
        throw StructuralError("partial map value is undefined on its domain");
      }
      _values[domain[i]] = values[i];
    }
  }

  PartialMap PartialMap::identity(Elem n) {
    std::vector<Elem> v(n);
    for (Elem x = 0; x < n; ++x) {
      v[x] = x;
    }
    return PartialMap(std::move(v));
  }

  bool PartialMap::total() const noexcept {
    return std::find(_values.begin(), _values.end(), kUndefined) == _values.end();
  }

  std::vector<Elem> PartialMap::domain() const {
    std::vector<Elem> out;
    for (Elem x = 0; x < _values.size(); ++x) {
      if (defined(x)) {
        out.push_back(x);
      }
    }
    return out;
  }

  std::vector<Elem> PartialMap::image_values() const {
    std::vector<Elem> out;
    for (Elem v : _values) {
      if (v != kUndefined) {
        out.push_back(v);
      }
    }
    return out;
  }

  PartialMap PartialMap::after(PartialMap const& first) const {
    PartialMap out(first.source_size());
    for (Elem x = 0; x < first.source_size(); ++x) {
      if (first.defined(x) && first(x) < source_size()) {
        out._values[x] = _values[first(x)];
      } else if (first.defined(x)) {
        throw StructuralError("composed partial maps do not match");
      }
    }
    return out;
  }

  BandFamily pointwise_family(RectBand band) {
    return [band = std::move(band)](Mask D, PartialMap const& f, PartialMap const& g) {
      PartialMap out(f.source_size());
      for (Elem x = 0; x < f.source_size(); ++x) {
        if (has_bit(D, x)) {
          out.set(x, band(f(x), g(x)));
        }
      }
      return out;
    };
  }

  PartialMap PartialMapAlgebra::decode(Elem code) const {
    PartialMap f(x_size);
    for (Elem x = 0; x < x_size; ++x) {
      Elem digit = code % (y_size + 1);
      code /= y_size + 1;
      if (digit != 0) {
        f.set(x, digit - 1);
      }
    }
    return f;
  }

  Elem PartialMapAlgebra::encode(PartialMap const& f) const {
    Elem code = 0;
    for (Elem x = x_size; x-- > 0;) {
      code = code * (y_size + 1) + (f.defined(x) ? f(x) + 1 : 0);
    }
    return code;
  }

  namespace {
    std::size_t checked_power(Elem base, Elem exp, std::size_t cap) {
      std::size_t r = 1;
      for (Elem i = 0; i < exp; ++i) {
        r *= base;
        if (r > cap) {
          throw SizeLimitError("more than " + std::to_string(cap) + " partial maps");
        }
      }
      return r;
    }

    Mask domain_mask(PartialMap const& f) {
      Mask m = 0;
      for (Elem x = 0; x < f.source_size(); ++x) {
        if (f.defined(x)) {
          m |= bit(x);
        }
      }
      return m;
    }

    PartialMap restrict_to(PartialMap const& f, Mask D) {
      PartialMap out(f.source_size());
      for (Elem x = 0; x < f.source_size(); ++x) {
        if (has_bit(D, x) && f.defined(x)) {
          out.set(x, f(x));
        }
      }
      return out;
    }
  }  // namespace

  std::optional<std::vector<Elem>> coherence_violation(Elem              x_size,
                                                       Elem              y_size,
                                                       BandFamily const& family) {
    if (x_size > 16) {
      throw SizeLimitError("coherence is only checked for |X| <= 16");
    }
    PartialMapAlgebra const shape{algebras::trivial(), x_size, y_size};
    std::size_t const       total = checked_power(y_size + 1, x_size, 1u << 20);
    for (Elem f = 0; f < total; ++f) {
      PartialMap const F = shape.decode(f);
      Mask const       D = domain_mask(F);
      for (Elem g = 0; g < total; ++g) {
        PartialMap const G = shape.decode(g);
        if (domain_mask(G) != D) {
          continue;
        }
        PartialMap const whole = restrict_to(family(D, F, G), D);
        if (domain_mask(whole) != D) {
          return std::vector<Elem>{static_cast<Elem>(D), kUndefined, f, g};
        }
        for (Elem x = 0; x < x_size; ++x) {
          if (!has_bit(D, x)) {
            continue;
          }
          Mask const Dx   = D & ~bit(x);
          PartialMap part = restrict_to(family(Dx, restrict_to(F, Dx), restrict_to(G, Dx)), Dx);
          if (part != restrict_to(whole, Dx)) {
            return std::vector<Elem>{static_cast<Elem>(D), x, f, g};
          }
        }
      }
    }
    return std::nullopt;
  }

  PartialMapAlgebra partial_map_algebra(Elem              x_size,
                                        Elem              y_size,
                                        BandFamily const& family,
                                        std::size_t       max_count) {
    std::size_t const n = checked_power(y_size + 1, x_size, max_count);
    if (auto w = coherence_violation(x_size, y_size, family)) {
      throw DomainError("band family is not coherent", *w);
    }
    PartialMapAlgebra out{algebras::trivial(), x_size, y_size};
    std::vector<PartialMap> maps;
    std::vector<Mask>       dom;
    for (Elem c = 0; c < n; ++c) {
      maps.push_back(out.decode(c));
      dom.push_back(domain_mask(maps.back()));
    }
    auto meet = [&](Elem i, Elem j) {
      Mask const D = dom[i] & dom[j];
      return restrict_to(family(D, maps[i], maps[j]), D);
    };
    out.algebra = SkewAlgebra::from_operations(
        static_cast<Elem>(n),
        0,
        [&](Elem i, Elem j) { return out.encode(meet(i, j)); },
        [&](Elem i, Elem j) {
          PartialMap r = meet(j, i);
          for (Elem x = 0; x < x_size; ++x) {
            if (maps[i].defined(x) && !maps[j].defined(x)) {
              r.set(x, maps[i](x));
            } else if (maps[j].defined(x) && !maps[i].defined(x)) {
              r.set(x, maps[j](x));
            }
          }
          return out.encode(r);
        },
        [&](Elem i, Elem j) { return out.encode(restrict_to(maps[i], dom[i] & ~dom[j])); },
        [&](Elem i, Elem j) {
          PartialMap r(x_size);
          for (Elem x = 0; x < x_size; ++x) {
            if (maps[i].defined(x) && maps[i](x) == maps[j](x)) {
              r.set(x, maps[i](x));
            }
          }
          return out.encode(r);
        });
    return out;
  }

  PartialMapAlgebra partial_map_algebra(Elem            x_size,
                                        Elem            y_size,
                                        RectBand const& band,
                                        std::size_t     max_count) {
    if (band.k != y_size) {
      throw StructuralError("band size does not match |Y|");
    }
    return partial_map_algebra(x_size, y_size, pointwise_family(band), max_count);
  }

}  // namespace skewstone
