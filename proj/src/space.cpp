#include "skewstone/space.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace skewstone {

  RectBand RectBand::right(Elem m) {
    return product(1, m);
  }

  RectBand RectBand::left(Elem m) {
    return product(m, 1);
  }

  RectBand RectBand::product(Elem kL, Elem kR) {
    RectBand r;
    r.k = kL * kR;
    r.table.resize(std::size_t(r.k) * r.k);
    for (Elem x = 0; x < r.k; ++x) {
      for (Elem y = 0; y < r.k; ++y) {
        r.table[std::size_t(x) * r.k + y] = (x / kR) * kR + (y % kR);
      }
    }
    return r;
  }

  SkewSpace::SkewSpace(Elem B, std::vector<Elem> p) : _B(B), _p(std::move(p)) {
    index_fibers();
  }

  SkewSpace::SkewSpace(Elem B, std::vector<Elem> p, std::vector<Elem> band)
      : _B(B), _p(std::move(p)), _band(std::move(band)), _has_band(true) {
    std::size_t const E = _p.size();
    if (_band.size() != E * E) {
      throw StructuralError("band table has " + std::to_string(_band.size())
                            + " entries, expected " + std::to_string(E * E));
    }
    for (Elem v : _band) {
      if (v != kUndefined && v >= E) {
        throw StructuralError("band entry " + std::to_string(v) + " is out of range");
      }
    }
    index_fibers();
  }

  void SkewSpace::index_fibers() {
    _fibers.assign(_B, {});
    _position.resize(_p.size());
    for (Elem x = 0; x < _p.size(); ++x) {
      if (_p[x] >= _B) {
        throw StructuralError("p[" + std::to_string(x) + "] = " + std::to_string(_p[x])
                              + " is out of range");
      }
      _position[x] = static_cast<Elem>(_fibers[_p[x]].size());
      _fibers[_p[x]].push_back(x);
    }
  }

  SkewSpace SkewSpace::with_fiber_bands(Elem                         B,
                                        std::vector<Elem>            p,
                                        std::vector<RectBand> const& bands) {
    SkewSpace plain(B, p);
    if (bands.size() != B) {
      throw StructuralError("need one band per base point");
    }
    std::size_t const E = p.size();
    std::vector<Elem> band(E * E, kUndefined);
    for (Elem b = 0; b < B; ++b) {
      auto const& fib = plain.fiber(b);
      if (bands[b].k != fib.size()) {
        throw StructuralError("band over base point " + std::to_string(b)
                              + " does not match the fiber size");
      }
      for (Elem i = 0; i < fib.size(); ++i) {
        for (Elem j = 0; j < fib.size(); ++j) {
          band[std::size_t(fib[i]) * E + fib[j]] = fib[bands[b](i, j)];
        }
      }
    }
    return SkewSpace(B, std::move(p), std::move(band));
  }

  SkewSpace SkewSpace::plain() const {
    return SkewSpace(_B, _p);
  }

  ValidationReport validate_space(SkewSpace const& sp) {
    ValidationReport report;
    auto             fail = [&report](char const* law, std::vector<Elem> w) {
      report.failures.push_back({law, std::move(w)});
    };
    for (Elem b = 0; b < sp.size_B(); ++b) {
      if (sp.fiber(b).empty()) {
        fail("surjective", {b});
        break;
      }
    }
    if (!sp.has_band()) {
      return report;
    }
    Elem const E = sp.size_E();
    for (Elem x = 0; x < E; ++x) {
      for (Elem y = 0; y < E; ++y) {
        bool same = sp.p(x) == sp.p(y);
        Elem v    = sp.band(x, y);
        if (same != (v != kUndefined)) {
          fail("band_defined", {x, y});
          return report;
        }
        if (same && sp.p(v) != sp.p(x)) {
          fail("band_closed", {x, y});
          return report;
        }
      }
    }
    for (Elem x = 0; x < E; ++x) {
      if (sp.band(x, x) != x) {
        fail("band_idempotent", {x});
        break;
      }
    }
    bool assoc = true, rect = true;
    for (Elem b = 0; b < sp.size_B(); ++b) {
      for (Elem x : sp.fiber(b)) {
        for (Elem y : sp.fiber(b)) {
          for (Elem z : sp.fiber(b)) {
            Elem xy = sp.band(x, y);
            if (assoc && sp.band(xy, z) != sp.band(x, sp.band(y, z))) {
              fail("band_associative", {x, y, z});
              assoc = false;
            }
            if (rect && sp.band(xy, z) != sp.band(x, z)) {
              fail("band_rectangle", {x, y, z});
              rect = false;
            }
          }
        }
      }
    }
    return report;
  }

  RectBand fiber_band(SkewSpace const& sp, Elem b) {
    if (!sp.has_band()) {
      throw DomainError("space has no band");
    }
    auto const& fib = sp.fiber(b);
    RectBand    r;
    r.k = static_cast<Elem>(fib.size());
    r.table.resize(std::size_t(r.k) * r.k);
    for (Elem i = 0; i < r.k; ++i) {
      for (Elem j = 0; j < r.k; ++j) {
        r.table[std::size_t(i) * r.k + j] = sp.fiber_position(sp.band(fib[i], fib[j]));
      }
    }
    return r;
  }

  std::vector<std::pair<Elem, Elem>> band_coordinates(SkewSpace const& sp) {
    std::vector<std::pair<Elem, Elem>> out(sp.size_E());
    for (Elem b = 0; b < sp.size_B(); ++b) {
      auto const& fib = sp.fiber(b);
      if (!sp.has_band()) {
        for (Elem i = 0; i < fib.size(); ++i) {
          out[fib[i]] = {i, 0};
        }
        continue;
      }
      auto cls = [&](bool right) {
        return partition_from_relation(
            static_cast<Elem>(fib.size()),
            [&](Elem i, Elem j) {
              Elem x = fib[i], y = fib[j];
              return right ? sp.band(x, y) == y && sp.band(y, x) == x
                           : sp.band(x, y) == x && sp.band(y, x) == y;
            },
            right ? "fiber R" : "fiber L");
      };
      Partition R = cls(true), L = cls(false);
      for (Elem i = 0; i < fib.size(); ++i) {
        out[fib[i]] = {R.label(i), L.label(i)};
      }
    }
    return out;
  }

  SkewSpace random_space(RandomSpaceOptions const& o, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto            draw = [&rng](Elem hi) {
      return static_cast<Elem>(1 + rng() % hi);
    };
    if (o.band == BandKind::product || o.band == BandKind::mixed) {
      if (o.kL == 0 || o.kR == 0) {
        throw DomainError("product bands need kL, kR >= 1");
      }
    } else if (o.max_fiber == 0 && o.size_B > 0) {
      throw DomainError("max_fiber must be at least 1");
    }

    std::vector<RectBand> bands;
    std::vector<Elem>     slots;
    for (Elem b = 0; b < o.size_B; ++b) {
      RectBand band;
      switch (o.band) {
        case BandKind::product:
          band = RectBand::product(o.kL, o.kR);
          break;
        case BandKind::mixed: {
          Elem kL = draw(o.kL);
          band    = RectBand::product(kL, draw(o.kR));
          break;
        }
        case BandKind::left:
          band = RectBand::left(draw(o.max_fiber));
          break;
        case BandKind::right:
        case BandKind::none:
          band = RectBand::right(draw(o.max_fiber));
          break;
      }
      slots.insert(slots.end(), band.k, b);
      bands.push_back(std::move(band));
    }
    // Fisher-Yates with plain modular draws so the output does not depend on
    // the standard library's distribution implementations.
    for (std::size_t i = slots.size(); i > 1; --i) {
      std::swap(slots[i - 1], slots[rng() % i]);
    }
    if (o.band == BandKind::none) {
      return SkewSpace(o.size_B, std::move(slots));
    }
    return SkewSpace::with_fiber_bands(o.size_B, std::move(slots), bands);
  }

  std::vector<SkewSpace> all_surjections(Elem e, bool up_to_base_relabeling) {
    std::vector<SkewSpace> out;
    for (Elem B = 0; B <= e; ++B) {
      if (B == 0) {
        if (e == 0) {
          out.emplace_back();
        }
        continue;
      }
      std::vector<Elem> p(e, 0);
      while (true) {
        std::vector<bool> hit(B, false);
        bool              rgs = true;
        Elem              next = 0;
        for (Elem v : p) {
          if (v > next) {
            rgs = false;
          } else if (v == next) {
            ++next;
          }
          hit[v] = true;
        }
        bool onto = std::find(hit.begin(), hit.end(), false) == hit.end();
        if (onto && (rgs || !up_to_base_relabeling)) {
          out.emplace_back(B, p);
        }
        Elem i = e;
        while (i > 0 && ++p[i - 1] == B) {
          p[i - 1] = 0;
          --i;
        }
        if (i == 0) {
          break;
        }
      }
    }
    return out;
  }

}  // namespace skewstone
