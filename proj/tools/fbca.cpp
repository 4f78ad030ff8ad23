#include "fbca/cuts.hpp"
#include "fbca/ea.hpp"
#include "fbca/engine.hpp"
#include "fbca/fuzz.hpp"
#include "fbca/io.hpp"
#include "fbca/presentation.hpp"
#include "fbca/suite.hpp"
#include "fbca/trivext.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace fbca;
using nlohmann::json;

namespace {

void emit(const std::string &out, const std::string &text) {
  if (out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
  } else {
    std::ofstream f(out);
    if (!f) throw ParseError("cannot write " + out);
    f << text;
  }
}

std::vector<int> arrows_by_name(const Quiver &q, const std::string &csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string name;
  while (std::getline(ss, name, ',')) {
    int a = q.arrow_index(name);
    if (a < 0) throw ParseError("unknown arrow: " + name);
    out.push_back(a);
  }
  return out;
}

std::string presentation_text(const Presentation &P) {
  std::string out = "quiver: " + std::to_string(P.quiver.vertices.size()) + " vertices, " +
                    std::to_string(P.quiver.arrows.size()) + " arrows\nrelations:\n";
  for (const Relation &r : P.relations)
    out += "  [" + rel_kind_name(r.kind) + "] " + display_relation(P.quiver, r) + "\n";
  return out;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"fractional Brauer configurations of type S: presentations, trivial "
               "extensions, admissible cuts"};
  app.require_subcommand(1);

  std::string in_file, in_file2, out_file, format = "text", arrows_csv, fixtures = "fixtures";
  uint64_t seed = 0, count = 1;
  size_t cap = 1000000;

  auto add_common = [&](CLI::App *c) {
    c->add_option("--out", out_file, "write output to file");
    c->add_option("--format", format, "json|dot|text");
  };

  auto *c_check = app.add_subcommand("check-fbc", "verify axioms (f1)-(f6) and type S");
  c_check->add_option("file", in_file)->required();
  add_common(c_check);

  auto *c_present = app.add_subcommand("present", "presentation of the f-BCA");
  bool primed = false;
  c_present->add_option("file", in_file)->required();
  c_present->add_flag("--primed", primed, "use the R1'/R2' generating set");
  add_common(c_present);

  auto *c_ea = app.add_subcommand("ea", "the f-BC E_A of a monomial algebra");
  c_ea->add_option("file", in_file)->required();
  add_common(c_ea);

  auto *c_te = app.add_subcommand("trivext", "trivial extension quiver, presentation, report");
  c_te->add_option("file", in_file)->required();
  add_common(c_te);

  auto *c_dim = app.add_subcommand("dim", "dimension of a presented algebra");
  c_dim->add_option("file", in_file)->required();
  add_common(c_dim);

  auto *c_member = app.add_subcommand("member", "ideal membership of a path");
  std::string path_csv;
  c_member->add_option("file", in_file)->required();
  c_member->add_option("--path", path_csv, "comma-separated arrow names, traversal order")
      ->required();
  add_common(c_member);

  auto *c_iso = app.add_subcommand("iso", "search for a presentation isomorphism");
  c_iso->add_option("file1", in_file)->required();
  c_iso->add_option("file2", in_file2)->required();
  c_iso->add_option("--cap", cap, "search node budget");
  add_common(c_iso);

  auto *c_cuts = app.add_subcommand("cuts", "special cycle classes and cutting sets");
  c_cuts->add_option("file", in_file)->required();
  add_common(c_cuts);

  auto *c_cut = app.add_subcommand("cut", "cut algebra for a set of arrows");
  c_cut->add_option("file", in_file)->required();
  c_cut->add_option("--arrows", arrows_csv, "comma-separated arrow names")->required();
  add_common(c_cut);

  auto *c_rt = app.add_subcommand("roundtrip", "Theorem 5.4 round trip for a monomial algebra");
  c_rt->add_option("file", in_file)->required();
  add_common(c_rt);

  auto *c_rtf = app.add_subcommand("roundtrip-fbc", "Theorem 5.5 round trip for an admissible cut");
  c_rtf->add_option("file", in_file)->required();
  c_rtf->add_option("--arrows", arrows_csv, "comma-separated arrow names")->required();
  add_common(c_rtf);

  auto *c_fuzz = app.add_subcommand("fuzz", "generate seeded random monomial algebras");
  c_fuzz->add_option("--seed", seed);
  c_fuzz->add_option("--count", count);
  add_common(c_fuzz);

  auto *c_suite = app.add_subcommand("suite", "aggregate verification suite");
  c_suite->add_option("--fixtures", fixtures, "fixture directory");
  c_suite->add_option("--seed", seed);
  uint64_t suite_fuzz = 0;
  c_suite->add_option("--count", suite_fuzz, "number of fuzzed instances");
  add_common(c_suite);

  auto *c_dot = app.add_subcommand("dot", "DOT export of the quiver of any input file");
  c_dot->add_option("file", in_file)->required();
  add_common(c_dot);

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_check->parsed()) {
      Fbc E = fbc_from_json(load_json_file(in_file));
      AxiomReport rep = check_axioms(E);
      std::string text = rep.summary();
      bool sym = false, type_s = false;
      if (rep.all_pass()) {
        sym = is_symmetric(E);
        text += std::string("symmetric: ") + (sym ? "yes" : "no") + "\n";
        text += std::string("trivial degree: ") + (has_trivial_degree(E) ? "yes" : "no") + "\n";
        FbcQuiver Q = build_quiver(E);
        if (sym) {
          auto sf7 = check_sf7(E, Q);
          type_s = sf7.ok;
          text += std::string("(sf7): ") + (sf7.ok ? "holds" : "fails: " + sf7.witness) + "\n";
        }
        auto f7 = check_f7(E, Q);
        if (!sym) type_s = f7.ok;
        text += std::string("(f7): ") + (f7.ok ? "holds" : "fails: " + f7.witness) + "\n";
        text += std::string("type S: ") + (type_s ? "yes" : "no") + "\n";
      }
      emit(out_file, text);
      return rep.all_pass() ? 0 : 1;
    }
    if (c_present->parsed()) {
      Fbc E = fbc_from_json(load_json_file(in_file));
      Presentation P = presentation(E, primed);
      emit(out_file, format == "json" ? presentation_to_json(P).dump(2)
           : format == "dot"          ? quiver_to_dot(P.quiver, "Q_E")
                                      : presentation_text(P));
      return 0;
    }
    if (c_ea->parsed()) {
      AlgebraInput in = algebra_from_json(load_json_file(in_file));
      MonomialAlgebra A = make_monomial_algebra(in.quiver, in.generators);
      emit(out_file, fbc_to_json(build_ea(A).fbc).dump(2));
      return 0;
    }
    if (c_te->parsed()) {
      AlgebraInput in = algebra_from_json(load_json_file(in_file));
      MonomialAlgebra A = make_monomial_algebra(in.quiver, in.generators);
      TeQuiver tq = te_quiver(A);
      Theorem43Report rep = verify_theorem_4_3(A);
      if (format == "dot") {
        emit(out_file, quiver_to_dot(tq.quiver, "Q_T(A)"));
      } else if (format == "json") {
        json j;
        j["quiver"] = algebra_to_json(tq.quiver, {});
        j["dual_arrows"] = json::array();
        for (size_t a = 0; a < tq.dual_of.size(); ++a)
          if (tq.dual_of[a] >= 0) j["dual_arrows"].push_back(tq.quiver.arrows[a].name);
        j["presentation"] = presentation_to_json(presentation(build_ea(A).fbc));
        j["report"] = json::array();
        for (const auto &it : rep.items)
          j["report"].push_back(json{{"check", it.check}, {"pass", it.pass}});
        emit(out_file, j.dump(2));
      } else {
        emit(out_file, quiver_to_dot(tq.quiver, "Q_T(A)") +
                           presentation_text(presentation(build_ea(A).fbc)) + rep.summary());
      }
      return rep.all_pass() ? 0 : 1;
    }
    if (c_dim->parsed()) {
      Presentation P = presentation_from_json(load_json_file(in_file));
      emit(out_file, std::to_string(PathSpaceModel(P).dimension()) + "\n");
      return 0;
    }
    if (c_member->parsed()) {
      Presentation P = presentation_from_json(load_json_file(in_file));
      std::vector<std::string> names;
      std::stringstream ss(path_csv);
      std::string n;
      while (std::getline(ss, n, ',')) names.push_back(n);
      Path p = path_from_names(P.quiver, names);
      bool in = PathSpaceModel(P).path_in_ideal(p);
      emit(out_file, std::string(in ? "in-ideal" : "not-in-ideal") + "\n");
      return 0;
    }
    if (c_iso->parsed()) {
      Presentation P1 = presentation_from_json(load_json_file(in_file));
      Presentation P2 = presentation_from_json(load_json_file(in_file2));
      IsoResult r = presentations_isomorphic(P1, P2, nullptr, nullptr, cap);
      std::string text;
      if (r.found) {
        text = "isomorphic\n";
        for (size_t v = 0; v < r.vertex_map.size(); ++v)
          text += "  " + P1.quiver.vertices[v] + " -> " + P2.quiver.vertices[r.vertex_map[v]] + "\n";
        for (size_t a = 0; a < r.arrow_map.size(); ++a)
          text += "  " + P1.quiver.arrows[a].name + " -> " + P2.quiver.arrows[r.arrow_map[a]].name + "\n";
      } else {
        text = r.budget_exhausted ? "unknown (budget exhausted)\n" : "not isomorphic\n";
      }
      emit(out_file, text);
      return r.found ? 0 : 1;
    }
    if (c_cuts->parsed()) {
      Fbc E = fbc_from_json(load_json_file(in_file));
      FbcQuiver Q = build_quiver(E);
      auto classes = special_cycle_classes(E, Q);
      std::string text = "t = " + std::to_string(classes.size()) + "\n";
      for (const auto &c : classes) {
        text += "class:";
        for (auto it = c.rep.rbegin(); it != c.rep.rend(); ++it)
          text += " " + Q.quiver.arrows[*it].label;
        text += "\n";
      }
      for (const auto &cs : enumerate_cutting_sets(classes)) {
        text += cs.admissible ? (cs.exact ? "  admissible " : "  admissible(non-exact) ")
                              : "  non-admissible ";
        text += "{";
        for (size_t i = 0; i < cs.arrows.size(); ++i)
          text += (i ? "," : "") + Q.quiver.arrows[cs.arrows[i]].label;
        text += "}\n";
      }
      emit(out_file, text);
      return 0;
    }
    if (c_cut->parsed() || c_rtf->parsed()) {
      Fbc E = fbc_from_json(load_json_file(in_file));
      FbcQuiver Q = build_quiver(E);
      std::vector<int> D = arrows_by_name(Q.quiver, arrows_csv);
      if (c_rtf->parsed()) {
        Report rep = verify_theorem_5_5(E, D);
        emit(out_file, rep.summary());
        return rep.all_pass() ? 0 : 1;
      }
      CutResult cut = cut_algebra(presentation(E), D);
      if (cut.monomial) {
        Presentation P = cut_presentation(cut);
        emit(out_file, format == "json" ? presentation_to_json(P).dump(2)
             : format == "dot"          ? quiver_to_dot(P.quiver, "Q_cut")
                                        : "monomial, dim " + std::to_string(cut.dim) + "\n" +
                                              presentation_text(P));
        return 0;
      }
      emit(out_file, "NonMonomial: dim " + std::to_string(cut.dim) +
                         ", dependent pair " + cut.witness + "\n");
      return 1;
    }
    if (c_rt->parsed()) {
      AlgebraInput in = algebra_from_json(load_json_file(in_file));
      MonomialAlgebra A = make_monomial_algebra(in.quiver, in.generators);
      Report rep = verify_theorem_5_4(A);
      emit(out_file, rep.summary());
      return rep.all_pass() ? 0 : 1;
    }
    if (c_fuzz->parsed()) {
      FuzzConfig cfg;
      cfg.seed = seed;
      json arr = json::array();
      for (uint64_t i = 0; i < count; ++i) {
        MonomialAlgebra A = generate_monomial_algebra(cfg, i);
        arr.push_back(algebra_to_json(A.quiver, A.generators));
      }
      emit(out_file, arr.dump(2));
      return 0;
    }
    if (c_suite->parsed()) {
      FuzzConfig cfg;
      cfg.seed = seed;
      SuiteResult res = run_suite(fixtures, cfg, suite_fuzz);
      emit(out_file, format == "json" ? res.json_report.dump(2) : res.report.summary());
      return res.pass ? 0 : 1;
    }
    if (c_dot->parsed()) {
      json j = load_json_file(in_file);
      Quiver q;
      if (j.contains("angles"))
        q = build_quiver(fbc_from_json(j)).quiver;
      else
        q = algebra_from_json(j).quiver;
      emit(out_file, quiver_to_dot(q));
      return 0;
    }
  } catch (const ParseError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BoundCapExceeded &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const NotFiniteDimensional &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ResampleBudgetExceeded &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
