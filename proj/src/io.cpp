#include "skewstone/io.hpp"

#include <fstream>
#include <sstream>

namespace skewstone {

  Json read_json_file(std::filesystem::path const& path) {
    std::ifstream in(path);
    if (!in) {
      throw ParseError("cannot read " + path.string());
    }
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      return parse_json(buf.str());
    } catch (ParseError const& e) {
      throw ParseError(path.string() + ": " + e.what());
    }
  }

  Json parse_json(std::string const& text) {
    try {
      return Json::parse(text);
    } catch (nlohmann::json::parse_error const& e) {
      throw ParseError(e.what());
    }
  }

  std::string dump(Json const& j) {
    return j.dump() + "\n";
  }

  void write_text_file(std::filesystem::path const& path, std::string const& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw ParseError("cannot write " + path.string());
    }
    out << text;
  }

  namespace {
    Json const& field(Json const& j, char const* key) {
      if (!j.is_object() || !j.contains(key)) {
        throw StructuralError(std::string("missing key \"") + key + "\"");
      }
      return j.at(key);
    }

    Elem as_index(Json const& v, char const* what) {
      if (!v.is_number_integer() || v.get<long long>() < 0
          || v.get<long long>() >= static_cast<long long>(kUndefined)) {
        throw StructuralError(std::string(what) + " must be a non-negative integer");
      }
      return v.get<Elem>();
    }

    std::vector<Elem> as_indices(Json const& v, char const* what) {
      if (!v.is_array()) {
        throw StructuralError(std::string(what) + " must be an array");
      }
      std::vector<Elem> out;
      for (auto const& x : v) {
        out.push_back(as_index(x, what));
      }
      return out;
    }

    std::vector<Elem> as_table(Json const& v, Elem n, char const* what) {
      if (!v.is_array() || v.size() != n) {
        throw StructuralError(std::string(what) + " must have " + std::to_string(n)
                              + " rows");
      }
      std::vector<Elem> out;
      for (auto const& row : v) {
        if (!row.is_array() || row.size() != n) {
          throw StructuralError(std::string(what) + " rows must have "
                                + std::to_string(n) + " entries");
        }
        for (auto const& x : row) {
          out.push_back(as_index(x, what));
        }
      }
      return out;
    }

    Json table_json(std::vector<Elem> const& t, Elem n) {
      Json rows = Json::array();
      for (Elem x = 0; x < n; ++x) {
        Json row = Json::array();
        for (Elem y = 0; y < n; ++y) {
          row.push_back(t[std::size_t(x) * n + y]);
        }
        rows.push_back(std::move(row));
      }
      return rows;
    }

    Json object_or_path(Json const& j, std::filesystem::path const& base_dir) {
      if (j.is_string()) {
        std::filesystem::path p = j.get<std::string>();
        return read_json_file(p.is_absolute() ? p : base_dir / p);
      }
      return j;
    }
  }  // namespace

  Json algebra_to_json(SkewAlgebra const& A) {
    Json j;
    j["n"]    = A.size();
    j["zero"] = A.zero();
    for (Op op : {Op::meet, Op::join, Op::diff, Op::cap}) {
      j[std::string(op_name(op))] = table_json(A.table(op), A.size());
    }
    return j;
  }

  SkewAlgebra algebra_from_json(Json const& j) {
    Elem n = as_index(field(j, "n"), "n");
    if (n == 0) {
      throw StructuralError("n must be at least 1");
    }
    return SkewAlgebra(n,
                       as_index(field(j, "zero"), "zero"),
                       as_table(field(j, "meet"), n, "meet"),
                       as_table(field(j, "join"), n, "join"),
                       as_table(field(j, "diff"), n, "diff"),
                       as_table(field(j, "cap"), n, "cap"));
  }

  Json space_to_json(SkewSpace const& sp) {
    Json j;
    j["E"] = sp.size_E();
    j["B"] = sp.size_B();
    j["p"] = sp.projection();
    if (sp.has_band()) {
      Json rows = Json::array();
      for (Elem x = 0; x < sp.size_E(); ++x) {
        Json row = Json::array();
        for (Elem y = 0; y < sp.size_E(); ++y) {
          Elem v = sp.band(x, y);
          row.push_back(v == kUndefined ? Json(nullptr) : Json(v));
        }
        rows.push_back(std::move(row));
      }
      j["band"] = std::move(rows);
    }
    return j;
  }

  SkewSpace space_from_json(Json const& j) {
    Elem              E = as_index(field(j, "E"), "E");
    Elem              B = as_index(field(j, "B"), "B");
    std::vector<Elem> p = as_indices(field(j, "p"), "p");
    if (p.size() != E) {
      throw StructuralError("p must have E entries");
    }
    if (!j.contains("band") || j.at("band").is_null()) {
      return SkewSpace(B, std::move(p));
    }
    Json const& rows = j.at("band");
    if (!rows.is_array() || rows.size() != E) {
      throw StructuralError("band must have E rows");
    }
    std::vector<Elem> band;
    for (auto const& row : rows) {
      if (!row.is_array() || row.size() != E) {
        throw StructuralError("band rows must have E entries");
      }
      for (auto const& v : row) {
        band.push_back(v.is_null() ? kUndefined : as_index(v, "band"));
      }
    }
    return SkewSpace(B, std::move(p), std::move(band));
  }

  bool looks_like_algebra(Json const& j) {
    return j.is_object() && j.contains("meet");
  }

  bool looks_like_space(Json const& j) {
    return j.is_object() && j.contains("p");
  }

  Json labeling_to_json(Spectrum const& sk) {
    Json points = Json::array();
    for (SpectrumPoint const& pt : sk.points) {
      Json o;
      o["prime"] = pt.prime;
      o["rep"]   = pt.rep;
      points.push_back(std::move(o));
    }
    Json j;
    j["points"] = std::move(points);
    return j;
  }

  Json sections_to_json(std::vector<Mask> const& sections) {
    Json list = Json::array();
    for (Mask s : sections) {
      list.push_back(mask_to_indices(s));
    }
    Json j;
    j["sections"] = std::move(list);
    return j;
  }

  Json partial_map_to_json(PartialMap const& f) {
    Json j;
    j["domain"] = f.domain();
    j["values"] = f.image_values();
    return j;
  }

  PartialMap partial_map_from_json(Json const& j, Elem source_size) {
    return PartialMap(source_size,
                      as_indices(field(j, "domain"), "domain"),
                      as_indices(field(j, "values"), "values"));
  }

  Json hom_to_json(Homomorphism const& f, bool with_objects) {
    Json j;
    j["map"] = f.map;
    if (with_objects) {
      j["source"] = algebra_to_json(*f.source);
      j["target"] = algebra_to_json(*f.target);
    }
    return j;
  }

  Homomorphism hom_from_json(Json const& j, std::filesystem::path const& base_dir) {
    AlgebraRef source = share(algebra_from_json(object_or_path(field(j, "source"), base_dir)));
    AlgebraRef target = share(algebra_from_json(object_or_path(field(j, "target"), base_dir)));
    std::vector<Elem> map = as_indices(field(j, "map"), "map");
    if (map.size() != source->size()) {
      throw StructuralError("map must have one entry per source element");
    }
    for (Elem v : map) {
      if (v >= target->size()) {
        throw StructuralError("map value out of range");
      }
    }
    return Homomorphism{source, target, std::move(map)};
  }

  Json space_morphism_to_json(SpaceMorphism const& m, bool with_objects) {
    Json j;
    j["g"] = partial_map_to_json(m.g);
    j["h"] = partial_map_to_json(m.h);
    if (with_objects) {
      j["source"] = space_to_json(*m.source);
      j["target"] = space_to_json(*m.target);
    }
    return j;
  }

  SpaceMorphism space_morphism_from_json(Json const& j, std::filesystem::path const& base_dir) {
    SpaceRef source = share(space_from_json(object_or_path(field(j, "source"), base_dir)));
    SpaceRef target = share(space_from_json(object_or_path(field(j, "target"), base_dir)));
    PartialMap g = partial_map_from_json(field(j, "g"), source->size_E());
    PartialMap h = partial_map_from_json(field(j, "h"), source->size_B());
    for (Elem x : g.domain()) {
      if (g(x) >= target->size_E()) {
        throw StructuralError("g value out of range");
      }
    }
    for (Elem b : h.domain()) {
      if (h(b) >= target->size_B()) {
        throw StructuralError("h value out of range");
      }
    }
    return SpaceMorphism{source, target, std::move(g), std::move(h)};
  }

  Json lattice_section_to_json(LatticeSection const& l) {
    Json j;
    j["choice"] = l.choice;
    return j;
  }

  std::string algebra_to_dot(SkewAlgebra const& A) {
    std::ostringstream out;
    out << "digraph algebra {\n";
    for (Elem x = 0; x < A.size(); ++x) {
      out << "  " << x << ";\n";
    }
    for (Elem x = 0; x < A.size(); ++x) {
      for (Elem y = 0; y < A.size(); ++y) {
        if (x == y || !natural_leq(A, x, y)) {
          continue;
        }
        bool covers = true;
        for (Elem z = 0; z < A.size() && covers; ++z) {
          covers = z == x || z == y || !natural_leq(A, x, z) || !natural_leq(A, z, y);
        }
        if (covers) {
          out << "  " << x << " -> " << y << ";\n";
        }
      }
    }
    out << "}\n";
    return out.str();
  }

  std::string space_to_dot(SkewSpace const& sp) {
    std::ostringstream out;
    out << "digraph space {\n";
    for (Elem x = 0; x < sp.size_E(); ++x) {
      out << "  e" << x << ";\n";
    }
    for (Elem b = 0; b < sp.size_B(); ++b) {
      out << "  b" << b << " [shape=box];\n";
    }
    for (Elem x = 0; x < sp.size_E(); ++x) {
      out << "  e" << x << " -> b" << sp.p(x) << ";\n";
    }
    out << "}\n";
    return out.str();
  }

}  // namespace skewstone
