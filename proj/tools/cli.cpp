#include "cli.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "skewstone/io.hpp"
#include "skewstone/lattice_sections.hpp"
#include "skewstone/sections.hpp"
#include "skewstone/variants.hpp"

namespace skewstone::cli {

  namespace {
    namespace fs = std::filesystem;

    // A check failed on well-formed input; maps to exit code 1.
    class CheckFailed : public Error {
     public:
      using Error::Error;
    };

    struct Config {
      std::string   input;
      std::string   input2;
      std::string   out_dir;
      std::string   format;
      std::uint64_t seed     = 1;
      Elem          max_size = 256;
      bool          verbose  = false;
      // generate
      Elem        base      = 2;
      Elem        max_fiber = 2;
      std::string band      = "none";
      Elem        kL        = 2;
      Elem        kR        = 2;
      Elem        count     = 1;
    };

    std::string witness_text(std::vector<Elem> const& w) {
      std::string s = "(";
      for (std::size_t i = 0; i < w.size(); ++i) {
        s += (i ? ", " : "") + std::to_string(w[i]);
      }
      return s + ")";
    }

    void merge_into(ValidationReport& r, ValidationReport const& more) {
      r.failures.insert(r.failures.end(), more.failures.begin(), more.failures.end());
      r.warnings.insert(r.warnings.end(), more.warnings.begin(), more.warnings.end());
      r.skipped.insert(r.skipped.end(), more.skipped.begin(), more.skipped.end());
    }

    Json report_json(ValidationReport const& r) {
      auto list = [](std::vector<LawFailure> const& fs) {
        Json a = Json::array();
        for (auto const& f : fs) {
          Json o;
          o["law"]     = f.law;
          o["witness"] = f.witness;
          a.push_back(std::move(o));
        }
        return a;
      };
      Json j;
      j["ok"]       = r.ok();
      j["failures"] = list(r.failures);
      j["warnings"] = list(r.warnings);
      j["skipped"]  = r.skipped;
      return j;
    }

    void print_report(ValidationReport const& r,
                      std::string const&      kind,
                      Config const&           cfg,
                      std::ostream&           out) {
      if (cfg.format == "json") {
        out << dump(report_json(r));
        return;
      }
      for (auto const& f : r.failures) {
        out << "FAIL " << f.law << " " << witness_text(f.witness) << "\n";
      }
      for (auto const& f : r.warnings) {
        out << "warning " << f.law << " " << witness_text(f.witness) << "\n";
      }
      for (auto const& s : r.skipped) {
        out << "skipped " << s << "\n";
      }
      out << (r.ok() ? "ok: valid " : "invalid ") << kind << "\n";
    }

    SkewAlgebra load_valid_algebra(Json const& j, Config const& cfg) {
      SkewAlgebra      A = algebra_from_json(j);
      ValidationReport r = validate_algebra(A, {cfg.max_size, 32});
      if (!r.ok()) {
        throw CheckFailed("input is not a valid algebra: " + r.failures.front().law + " "
                          + witness_text(r.failures.front().witness));
      }
      return A;
    }

    SkewSpace load_valid_space(Json const& j) {
      SkewSpace        sp = space_from_json(j);
      ValidationReport r  = validate_space(sp);
      if (!r.ok()) {
        throw CheckFailed("input is not a valid space: " + r.failures.front().law + " "
                          + witness_text(r.failures.front().witness));
      }
      return sp;
    }

    void write_outputs(Config const&                                           cfg,
                       std::vector<std::pair<std::string, std::string>> const& files) {
      fs::create_directories(cfg.out_dir);
      for (auto const& [name, text] : files) {
        write_text_file(fs::path(cfg.out_dir) / name, text);
      }
    }

    ////////////////////////////////////////////////////////////////////
    // Commands
    ////////////////////////////////////////////////////////////////////

    int cmd_validate(Config const& cfg, std::ostream& out) {
      Json j = read_json_file(cfg.input);
      if (looks_like_algebra(j)) {
        ValidationReport r = validate_algebra(algebra_from_json(j), {cfg.max_size, 32});
        print_report(r, "algebra", cfg, out);
        return r.ok() ? 0 : 1;
      }
      if (looks_like_space(j)) {
        ValidationReport r = validate_space(space_from_json(j));
        print_report(r, "space", cfg, out);
        return r.ok() ? 0 : 1;
      }
      fs::path base = fs::path(cfg.input).parent_path();
      if (j.is_object() && j.contains("map")) {
        Homomorphism     f = hom_from_json(j, base);
        ValidationReport r = validate_algebra(*f.source, {cfg.max_size, 32});
        merge_into(r, validate_algebra(*f.target, {cfg.max_size, 32}));
        if (r.ok()) {
          r = validate_hom(f);
        }
        print_report(r, "homomorphism", cfg, out);
        return r.ok() ? 0 : 1;
      }
      if (j.is_object() && j.contains("g")) {
        SpaceMorphism    m = space_morphism_from_json(j, base);
        ValidationReport r = validate_space(*m.source);
        merge_into(r, validate_space(*m.target));
        if (r.ok()) {
          r = validate_space_morphism(m);
        }
        print_report(r, "space morphism", cfg, out);
        return r.ok() ? 0 : 1;
      }
      throw StructuralError("input is not an algebra, space, homomorphism or space morphism");
    }

    int cmd_spectrum(Config const& cfg, std::ostream& out) {
      SkewAlgebra A  = load_valid_algebra(read_json_file(cfg.input), cfg);
      Spectrum    sk = skew_spectrum(A);
      std::string space = dump(space_to_json(sk.space));
      if (!cfg.out_dir.empty()) {
        write_outputs(cfg, {{"space.json", space}, {"labeling.json", dump(labeling_to_json(sk))}});
      }
      if (cfg.format == "text") {
        out << "E=" << sk.space.size_E() << " B=" << sk.space.size_B() << "\n";
      } else {
        out << space;
      }
      return 0;
    }

    int cmd_dualize(Config const& cfg, std::ostream& out) {
      SkewSpace   sp   = load_valid_space(read_json_file(cfg.input));
      DualAlgebra dual = dual_algebra(sp);
      std::string alg  = dump(algebra_to_json(dual.algebra));
      if (!cfg.out_dir.empty()) {
        write_outputs(cfg,
                      {{"algebra.json", alg}, {"sections.json", dump(sections_to_json(dual.sections))}});
      }
      out << alg;
      return 0;
    }

    int cmd_roundtrip(Config const& cfg, std::ostream& out) {
      Json j = read_json_file(cfg.input);
      try {
        if (looks_like_algebra(j)) {
          SkewAlgebra A   = load_valid_algebra(j, cfg);
          PhiResult   phi = phi_iso(A);
          if (cfg.format == "json") {
            Json o;
            o["isomorphic"] = true;
            o["map"]        = phi.iso.map;
            out << dump(o);
          } else {
            out << "isomorphic, |A|=" << A.size() << "\n";
          }
          return 0;
        }
        if (looks_like_space(j)) {
          SkewSpace sp  = load_valid_space(j);
          PsiResult psi = psi_iso(sp);
          if (cfg.format == "json") {
            out << dump(space_morphism_to_json(psi.iso, false));
          } else {
            out << "isomorphic, |E|=" << sp.size_E() << ", |B|=" << sp.size_B() << "\n";
          }
          return 0;
        }
      } catch (DomainError const& e) {
        out << "counterexample: " << e.what() << " " << witness_text(e.witness()) << "\n";
        return 1;
      }
      throw StructuralError("input is neither an algebra nor a space");
    }

    int cmd_homs(Config const& cfg, std::ostream& out) {
      AlgebraRef A = share(load_valid_algebra(read_json_file(cfg.input), cfg));
      AlgebraRef T = share(load_valid_algebra(read_json_file(cfg.input2), cfg));
      Spectrum   skA = skew_spectrum(*A), skT = skew_spectrum(*T);
      auto       maps = enumerate_homs(*A, *T);

      Json rows = Json::array();
      std::ostringstream text;
      text << "map leq_cofinal preceq_cofinal D_saturated leq_ideal_inclusion "
              "image_ideal_preceq_closed | total semitotal section_lifting "
              "partial_identity saturated\n";
      for (auto const& map : maps) {
        Homomorphism       f{A, T, map};
        HomFlags           hf = classify_hom(f);
        SpaceMorphismFlags sf = classify_space_morphism(dual_of_hom(f, skA, skT));
        Json               row;
        row["map"] = map;
        Json flags;
        flags["leq_cofinal"]               = hf.leq_cofinal;
        flags["preceq_cofinal"]            = hf.preceq_cofinal;
        flags["D_saturated"]               = hf.D_saturated;
        flags["leq_ideal_inclusion"]       = hf.leq_ideal_inclusion;
        flags["image_ideal_preceq_closed"] = hf.image_ideal_preceq_closed;
        row["flags"] = std::move(flags);
        Json dual;
        dual["total"]            = sf.total;
        dual["semitotal"]        = sf.semitotal;
        dual["section_lifting"]  = sf.section_lifting;
        dual["partial_identity"] = sf.partial_identity;
        dual["saturated"]        = sf.saturated;
        row["dual"] = std::move(dual);
        rows.push_back(std::move(row));

        text << Json(map).dump() << " " << hf.leq_cofinal << " " << hf.preceq_cofinal << " "
             << hf.D_saturated << " " << hf.leq_ideal_inclusion << " "
             << hf.image_ideal_preceq_closed << " | " << sf.total << " " << sf.semitotal << " "
             << sf.section_lifting << " " << sf.partial_identity << " " << sf.saturated << "\n";
      }
      if (cfg.format == "json") {
        Json j;
        j["homs"] = std::move(rows);
        out << dump(j);
      } else {
        out << text.str();
      }
      return 0;
    }

    int cmd_decompose(Config const& cfg, std::ostream& out) {
      Json j    = read_json_file(cfg.input);
      fs::path base = fs::path(cfg.input).parent_path();
      if (j.is_object() && j.contains("g")) {
        SpaceMorphism    m = space_morphism_from_json(j, base);
        ValidationReport r = validate_space_morphism(m);
        if (!r.ok()) {
          throw CheckFailed("input is not a space morphism: " + r.failures.front().law);
        }
        MorphismDecomposition d = decompose_morphism(m);
        std::string first  = dump(space_morphism_to_json(d.partial_identity, true));
        std::string second = dump(space_morphism_to_json(d.total, true));
        if (!cfg.out_dir.empty()) {
          write_outputs(cfg, {{"partial_identity.json", first}, {"pullback.json", second}});
        }
        out << first << second;
        return 0;
      }
      if (j.is_object() && j.contains("map")) {
        Homomorphism     f = hom_from_json(j, base);
        ValidationReport r = validate_hom(f);
        if (!r.ok()) {
          throw CheckFailed("input is not a homomorphism: " + r.failures.front().law + " "
                            + witness_text(r.failures.front().witness));
        }
        HomFactorization fac    = hom_factorization(f);
        std::string      first  = dump(hom_to_json(fac.cofinal, true));
        std::string      second = dump(hom_to_json(fac.inclusion, true));
        if (!cfg.out_dir.empty()) {
          write_outputs(cfg, {{"cofinal.json", first}, {"inclusion.json", second}});
        }
        out << first << second;
        return 0;
      }
      throw StructuralError("input is neither a homomorphism nor a space morphism");
    }

    int cmd_section(Config const& cfg, std::ostream& out) {
      Json j = read_json_file(cfg.input);
      if (looks_like_algebra(j)) {
        SkewAlgebra A = load_valid_algebra(j, cfg);
        Handedness  h = handedness(A);
        if (h != Handedness::right && h != Handedness::commutative) {
          throw CheckFailed("lattice sections are only searched in right-handed algebras");
        }
        auto l = find_lattice_section(A);
        out << (l ? dump(lattice_section_to_json(*l)) : std::string("none\n"));
        return 0;
      }
      if (looks_like_space(j)) {
        auto s = find_global_section(load_valid_space(j));
        if (s) {
          Json o;
          o["points"] = s->points;
          out << dump(o);
        } else {
          out << "none\n";
        }
        return 0;
      }
      throw StructuralError("input is neither an algebra nor a space");
    }

    int cmd_generate(Config const& cfg, std::ostream& out) {
      RandomSpaceOptions o;
      o.size_B    = cfg.base;
      o.max_fiber = cfg.max_fiber;
      o.kL        = cfg.kL;
      o.kR        = cfg.kR;
      if (cfg.band == "none") {
        o.band = BandKind::none;
      } else if (cfg.band == "right") {
        o.band = BandKind::right;
      } else if (cfg.band == "left") {
        o.band = BandKind::left;
      } else if (cfg.band == "product") {
        o.band = BandKind::product;
      } else {
        o.band = BandKind::mixed;
      }
      for (Elem i = 0; i < cfg.count; ++i) {
        SkewSpace   sp    = random_space(o, cfg.seed + i);
        std::string space = dump(space_to_json(sp));
        if (cfg.out_dir.empty()) {
          out << space;
          continue;
        }
        char name[32];
        std::snprintf(name, sizeof name, "%04u", static_cast<unsigned>(i));
        write_outputs(cfg,
                      {{std::string("space_") + name + ".json", space},
                       {std::string("algebra_") + name + ".json",
                        dump(algebra_to_json(dual_algebra(sp).algebra))}});
        out << (fs::path(cfg.out_dir) / (std::string("space_") + name + ".json")).string() << "\n";
      }
      return 0;
    }

    int cmd_export_dot(Config const& cfg, std::ostream& out) {
      Json j = read_json_file(cfg.input);
      if (looks_like_algebra(j)) {
        out << algebra_to_dot(algebra_from_json(j));
        return 0;
      }
      if (looks_like_space(j)) {
        out << space_to_dot(space_from_json(j));
        return 0;
      }
      throw StructuralError("input is neither an algebra nor a space");
    }
  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite Stone duality for skew Boolean algebras with intersections",
                 "skewstone"};
    app.require_subcommand(1);
    app.fallthrough();
    Config cfg;
    app.add_flag("-v,--verbose", cfg.verbose, "Report the command and its running time on stderr");

    auto add_format = [&cfg](CLI::App* sub, std::string def) {
      cfg.format = def;
      sub->add_option("--format", cfg.format, "Output format")
          ->check(CLI::IsMember({"json", "dot", "text"}))
          ->capture_default_str();
    };
    auto add_max_size = [&cfg](CLI::App* sub) {
      sub->add_option("--max-size", cfg.max_size, "Size cap for exhaustive validation")
          ->check(CLI::PositiveNumber)
          ->capture_default_str();
    };
    auto add_out = [&cfg](CLI::App* sub) {
      sub->add_option("--out", cfg.out_dir, "Directory for output files");
    };

    std::vector<std::pair<CLI::App*, int (*)(Config const&, std::ostream&)>> commands;
    auto add = [&](char const* name, char const* help, int (*fn)(Config const&, std::ostream&)) {
      CLI::App* sub = app.add_subcommand(name, help);
      commands.emplace_back(sub, fn);
      return sub;
    };

    CLI::App* validate = add("validate", "Check the axioms of an algebra or space", cmd_validate);
    validate->add_option("input", cfg.input, "Algebra or space JSON")->required();
    add_max_size(validate);
    add_format(validate, "text");

    CLI::App* spectrum = add("spectrum", "Skew spectrum of an algebra", cmd_spectrum);
    spectrum->add_option("input", cfg.input, "Algebra JSON")->required();
    add_max_size(spectrum);
    add_out(spectrum);
    add_format(spectrum, "json");

    CLI::App* dualize = add("dualize", "Algebra of sections of a space", cmd_dualize);
    dualize->add_option("input", cfg.input, "Space JSON")->required();
    add_out(dualize);

    CLI::App* roundtrip = add("roundtrip", "Verify A ≅ A_Sk(A) or p ≅ Sk(A_p)", cmd_roundtrip);
    roundtrip->add_option("input", cfg.input, "Algebra or space JSON")->required();
    add_max_size(roundtrip);
    add_format(roundtrip, "text");

    CLI::App* homs = add("homs", "Enumerate and classify homomorphisms", cmd_homs);
    homs->add_option("source", cfg.input, "Source algebra JSON")->required();
    homs->add_option("target", cfg.input2, "Target algebra JSON")->required();
    add_max_size(homs);
    add_format(homs, "text");

    CLI::App* decompose = add("decompose", "Split a morphism into its two canonical parts", cmd_decompose);
    decompose->add_option("input", cfg.input, "Homomorphism or space morphism JSON")->required();
    add_out(decompose);

    CLI::App* section = add("section", "Lattice section of an algebra or global section of a space", cmd_section);
    section->add_option("input", cfg.input, "Algebra or space JSON")->required();
    add_max_size(section);

    CLI::App* generate = add("generate", "Write seeded random spaces and their duals", cmd_generate);
    generate->add_option("--seed", cfg.seed, "Seed of the first instance")->capture_default_str();
    generate->add_option("--base", cfg.base, "Number of base points")->capture_default_str();
    generate->add_option("--max-fiber", cfg.max_fiber, "Largest fiber")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    generate->add_option("--band", cfg.band, "Fiber bands")
        ->check(CLI::IsMember({"none", "right", "left", "product", "mixed"}))
        ->capture_default_str();
    generate->add_option("--kl", cfg.kL, "Left factor size for product and mixed bands")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    generate->add_option("--kr", cfg.kR, "Right factor size for product and mixed bands")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    generate->add_option("--count", cfg.count, "Number of instances")->capture_default_str();
    add_out(generate);

    CLI::App* dot = add("export-dot", "Graphviz rendering of an algebra or space", cmd_export_dot);
    dot->add_option("input", cfg.input, "Algebra or space JSON")->required();
    add_format(dot, "dot");

    std::vector<char const*> argv{"skewstone"};
    for (auto const& a : args) {
      argv.push_back(a.c_str());
    }
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::CallForHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::ParseError const& e) {
      app.exit(e, out, err);
      return 2;
    }

    try {
      for (auto const& [sub, fn] : commands) {
        if (sub->parsed()) {
          auto start = std::chrono::steady_clock::now();
          int  code  = fn(cfg, out);
          if (cfg.verbose) {
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start);
            err << sub->get_name() << ": exit " << code << " after " << ms.count() << " ms\n";
          }
          return code;
        }
      }
    } catch (ParseError const& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    } catch (StructuralError const& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    } catch (DomainError const& e) {
      err << "error: " << e.what() << " " << witness_text(e.witness()) << "\n";
      return 1;
    } catch (Error const& e) {
      err << "error: " << e.what() << "\n";
      return 1;
    } catch (fs::filesystem_error const& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    }
    return 2;
  }

}  // namespace skewstone::cli
