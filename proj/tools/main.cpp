#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "hellylat/errors.hpp"
#include "io.hpp"
#include "suites.hpp"

using namespace hellylat;
using json = nlohmann::json;

namespace {

struct Globals {
  std::uint64_t seed = cli::kDefaultSeed;
  std::size_t cap = cli::kDefaultCap;
  std::string format = "json";
  std::string out;
  bool no_timing = false;
};

std::string text_line(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string render(const json& j, const std::string& format) {
  if (format == "json") return j.dump(2) + "\n";
  std::string s;
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) s += k + ": " + text_line(v) + "\n";
  } else {
    s = text_line(j) + "\n";
  }
  return s;
}

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out);
  if (!f) throw InputError("cannot write '" + g.out + "'");
  f << text;
}

FinitePoset load_poset(const std::string& source, std::size_t cap) {
  // A catalog spec such as "boolean:3", or a JSON file.
  std::ifstream probe(source);
  if (source != "-" && !probe.good()) return generate(io::catalog_spec_from_text(source), cap);
  const auto j = io::load_json(source);
  if (j.contains("kind")) return generate(io::catalog_spec_from_json(j), cap);
  return io::poset_from_json(j);
}

json parse_inline_or_file(const std::string& s) {
  if (!s.empty() && (s.front() == '{' || s.front() == '[')) return io::parse_json(s);
  return io::load_json(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Helly lattice workbench"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_option("--cap", g.cap, "Enumeration cap")->capture_default_str();
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--out", g.out, "Write output to a file");
  app.add_flag("--no-timing", g.no_timing, "Report millis as 0");

  // analyze
  auto* analyze_cmd = app.add_subcommand("analyze", "Profile a poset (JSON file or catalog spec)");
  std::string analyze_src;
  analyze_cmd->add_option("poset", analyze_src, "Poset JSON file, '-' or catalog spec")->required();

  // generate
  auto* gen_cmd = app.add_subcommand("generate", "Generate a catalog poset");
  std::string gen_spec;
  gen_cmd->add_option("spec", gen_spec, "e.g. boolean:3, subspace:2,3, product(chain:1;chain:2), or a JSON file")
      ->required();

  // garside
  auto* gar_cmd = app.add_subcommand("garside", "Braid normal forms");
  int strands = 3;
  std::vector<std::string> words;
  gar_cmd->add_option("--strands,-n", strands, "Number of strands")->capture_default_str();
  gar_cmd->add_option("words", words, "Words like s1,s2,-s1 (one or two)")->required()->expected(1, 2);

  // affine
  auto* aff_cmd = app.add_subcommand("affine", "Operations on the affine version of a lattice");
  std::string aff_base, aff_op = "leq", aff_x, aff_y;
  std::int64_t aff_denom = 1;
  aff_cmd->add_option("--base", aff_base, "Lattice: JSON file or catalog spec")->required();
  aff_cmd->add_option("--denom", aff_denom, "Step group (1/denom)Z")->capture_default_str();
  aff_cmd->add_option("--op", aff_op, "leq, join, meet, distance, superiors")
      ->check(CLI::IsMember({"leq", "join", "meet", "distance", "superiors"}))
      ->capture_default_str();
  aff_cmd->add_option("x", aff_x, "Point JSON (inline or file)")->required();
  aff_cmd->add_option("y", aff_y, "Second point");

  // helly
  auto* hel_cmd = app.add_subcommand("helly", "Helly checks on a graph");
  std::string hel_graph;
  std::size_t hel_radius = 2;
  hel_cmd->add_option("graph", hel_graph, "Graph JSON file")->required();
  hel_cmd->add_option("--radius", hel_radius, "Largest ball radius")->capture_default_str();

  // coxeter
  auto* cox_cmd = app.add_subcommand("coxeter", "Thin Coxeter complexes on Z^n");
  std::string cox_family = "A_extended", cox_op = "compare", cox_u, cox_v;
  cox_cmd->add_option("--family", cox_family, "A_extended or C")->capture_default_str();
  cox_cmd->add_option("--op", cox_op, "compare, reduce, type, local")
      ->check(CLI::IsMember({"compare", "reduce", "type", "local"}))
      ->capture_default_str();
  cox_cmd->add_option("u", cox_u, "Point like 1,0,2")->required();
  cox_cmd->add_option("v", cox_v, "Second point (compare)");

  // numeric
  auto* num_cmd = app.add_subcommand("numeric", "Evaluate the link loop length");

  // suite
  auto* suite_cmd = app.add_subcommand("suite", "Run acceptance suites");
  std::string suite_name = "all";
  bool list = false;
  suite_cmd->add_option("name", suite_name, "Suite name or 'all'")->capture_default_str();
  suite_cmd->add_flag("--list", list, "List registered suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*analyze_cmd) {
      const auto p = load_poset(analyze_src, g.cap);
      auto out = io::to_json(analyze(p), p);
      const auto prof = analyze(p);
      if (prof.bounded() && prof.graded) {
        if (auto w = find_bowtie(p)) {
          out["bowtie"] = {p.id(w->a), p.id(w->b), p.id(w->c), p.id(w->d)};
        } else {
          out["bowtie"] = nullptr;
        }
      }
      emit(g, render(out, g.format));
      return 0;
    }
    if (*gen_cmd) {
      emit(g, render(io::to_json(load_poset(gen_spec, g.cap)), "json"));
      return 0;
    }
    if (*gar_cmd) {
      const garside::SimplesLattice ctx(strands);
      std::vector<garside::BraidElement> els;
      json out = json::object();
      for (std::size_t i = 0; i < words.size(); ++i) {
        els.push_back(garside::normal_form(ctx, garside::parse_word(ctx, words[i])));
        out["x" + std::to_string(i + 1)] = io::to_json(ctx, els.back());
      }
      if (els.size() == 2) {
        out["product"] = io::to_json(ctx, garside::multiply(ctx, els[0], els[1]));
        out["x1_prefix_of_x2"] = garside::prefix_leq(ctx, els[0], els[1]);
      }
      emit(g, render(out, g.format));
      return 0;
    }
    if (*aff_cmd) {
      const affine::AffineContext ctx(load_poset(aff_base, g.cap), aff_denom);
      const auto x = io::mpoint_from_json(ctx, parse_inline_or_file(aff_x));
      json out = {{"x", io::to_json(ctx, x)}};
      if (aff_op == "superiors") {
        json sup = json::array();
        for (const auto& s : affine::elementary_superiors(ctx, x)) sup.push_back(io::to_json(ctx, s));
        out["superiors"] = sup;
      } else {
        if (aff_y.empty()) throw InputError("affine --op " + aff_op + " needs two points");
        const auto y = io::mpoint_from_json(ctx, parse_inline_or_file(aff_y));
        out["y"] = io::to_json(ctx, y);
        if (aff_op == "leq") out["leq"] = affine::leq(ctx, x, y);
        if (aff_op == "join") out["join"] = io::to_json(ctx, affine::join(ctx, x, y));
        if (aff_op == "meet") out["meet"] = io::to_json(ctx, affine::meet(ctx, x, y));
        if (aff_op == "distance") out["distance"] = io::rational_text(affine::distance(ctx, x, y));
      }
      emit(g, render(out, g.format));
      return 0;
    }
    if (*hel_cmd) {
      const auto graph = io::graph_from_json(io::load_json(hel_graph));
      HellyWindow w;
      for (std::size_t v = 0; v < graph.size(); ++v) w.core.push_back(v);
      w.max_radius = hel_radius;
      const auto balls = helly_check(graph, w, g.cap);
      std::vector<std::vector<std::size_t>> cliques;
      const auto cl = clique_helly_check(graph, g.cap, &cliques);
      json out = {{"balls_helly", balls.pass}, {"clique_helly", cl.pass},
                  {"maximal_cliques", cliques.size()}};
      if (!balls.pass) {
        const auto fam = window_family(w);
        json v = json::array();
        for (auto i : balls.violation)
          v.push_back({{"center", graph.id(fam[i].center)}, {"radius", fam[i].radius}});
        out["ball_violation"] = v;
      }
      emit(g, render(out, g.format));
      return balls.pass && cl.pass ? 0 : 1;
    }
    if (*cox_cmd) {
      const auto fam = io::family_from_text(cox_family);
      const auto u = io::point_from_text(cox_u);
      json out = {{"u", io::to_json(fam, u)}};
      if (cox_op == "compare") {
        if (cox_v.empty()) throw InputError("coxeter --op compare needs two points");
        const auto v = io::point_from_text(cox_v);
        static const char* names[] = {"less", "greater", "equal", "incomparable"};
        out["v"] = io::to_json(fam, v);
        out["result"] = names[static_cast<int>(coxeter::compare(fam, u, v))];
      } else if (cox_op == "reduce") {
        const auto r = coxeter::reduce_to_fundamental(fam, u);
        out["reduced"] = r.reduced;
        if (fam == coxeter::Family::a_extended) {
          out["witness"] = r.a_witness;
        } else {
          json moves = json::array();
          for (const auto& m : r.c_witness) {
            if (m.kind == coxeter::CMove::Kind::reflect) {
              moves.push_back({{"reflect", m.i}, {"k", m.k}});
            } else {
              moves.push_back({{"swap", m.i}});
            }
          }
          out["witness"] = moves;
        }
      } else if (cox_op == "type") {
        if (fam == coxeter::Family::a_extended) {
          out["height"] = coxeter::height(u);
          out["building_type"] = coxeter::building_type(u);
        } else {
          out["type"] = coxeter::c_type(u);
        }
      } else {
        if (fam == coxeter::Family::a_extended) {
          out["local_poset"] = io::to_json(coxeter::local_poset_a(u));
        } else {
          const auto lp = coxeter::local_poset_c(u);
          out["below"] = io::to_json(lp.below);
          out["above"] = io::to_json(lp.above);
          out["product_certificate"] = lp.product_certificate;
        }
      }
      emit(g, render(out, g.format));
      return 0;
    }
    if (*num_cmd) {
      const auto v = cli::loop_length_value();
      emit(g, render({{"value", v.value}, {"ratio_to_2pi", v.ratio_to_2pi},
                      {"less_than_2pi", v.less_than_2pi}},
                     g.format));
      return v.less_than_2pi ? 0 : 1;
    }
    if (*suite_cmd) {
      if (list) {
        json out = json::array();
        for (const auto& s : cli::registry())
          out.push_back({{"suite", s.name}, {"theorem", s.theorem}, {"budget_s", s.budget_seconds}});
        emit(g, render(out, g.format));
        return 0;
      }
      if (suite_name != "all") cli::find_suite(suite_name);
      const auto reports = cli::run_suite(suite_name, {g.seed, g.cap});
      bool ok = true;
      std::string text;
      json arr = json::array();
      for (const auto& r : reports) {
        ok = ok && r.status == cli::Status::pass;
        const auto j = cli::to_json(r, !g.no_timing);
        if (j["witness"].contains("warning"))
          std::cerr << "warning: " << r.suite << ": " << text_line(j["witness"]["warning"]) << "\n";
        arr.push_back(j);
        text += cli::status_name(r.status) + " " + r.suite + " (" + std::to_string(j["millis"].get<std::int64_t>()) + " ms)\n";
      }
      emit(g, g.format == "json" ? arr.dump(2) + "\n" : text);
      return ok ? 0 : 1;
    }
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
