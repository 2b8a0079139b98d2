// JSON interchange for every object the command line reads or writes, and
// Graphviz export.
//
// Algebras: {"n", "zero", "meet", "join", "diff", "cap"} with row-major
// tables.  Spaces: {"E", "B", "p", "band"} with null band entries off the
// fibers; "band" is omitted for plain spaces.  Partial maps:
// {"domain", "values"} aligned by position.  Output is compact with keys in
// the order listed, followed by a newline.

#ifndef SKEWSTONE_IO_HPP_
#define SKEWSTONE_IO_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "skewstone/algebra.hpp"
#include "skewstone/ideals.hpp"
#include "skewstone/lattice_sections.hpp"
#include "skewstone/morphisms.hpp"
#include "skewstone/space.hpp"

namespace skewstone {

  using Json = nlohmann::ordered_json;

  // Unreadable files and malformed JSON text.
  class ParseError : public Error {
   public:
    using Error::Error;
  };

  Json        read_json_file(std::filesystem::path const& path);
  Json        parse_json(std::string const& text);
  std::string dump(Json const& j);
  void        write_text_file(std::filesystem::path const& path, std::string const& text);

  // Shape errors (missing keys, wrong types, bad dimensions) throw
  // StructuralError.
  Json        algebra_to_json(SkewAlgebra const& A);
  SkewAlgebra algebra_from_json(Json const& j);

  Json      space_to_json(SkewSpace const& sp);
  SkewSpace space_from_json(Json const& j);

  bool looks_like_algebra(Json const& j);
  bool looks_like_space(Json const& j);

  Json labeling_to_json(Spectrum const& sk);
  Json sections_to_json(std::vector<Mask> const& sections);

  Json       partial_map_to_json(PartialMap const& f);
  PartialMap partial_map_from_json(Json const& j, Elem source_size);

  Json hom_to_json(Homomorphism const& f, bool with_objects);
  // "source" and "target" are inline algebra objects or file paths,
  // resolved relative to base_dir.
  Homomorphism hom_from_json(Json const& j, std::filesystem::path const& base_dir);

  Json          space_morphism_to_json(SpaceMorphism const& m, bool with_objects);
  SpaceMorphism space_morphism_from_json(Json const& j, std::filesystem::path const& base_dir);

  Json lattice_section_to_json(LatticeSection const& l);

  // Hasse diagram of the natural partial order, edges from smaller to larger.
  std::string algebra_to_dot(SkewAlgebra const& A);
  // Bipartite graph with an edge from each point of E to its base point.
  std::string space_to_dot(SkewSpace const& sp);

}  // namespace skewstone

#endif  // SKEWSTONE_IO_HPP_
