// qra: command-line front end.

#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qra/approx.hpp"
#include "qra/constructions.hpp"
#include "qra/homological.hpp"
#include "qra/io.hpp"
#include "qra/orbit.hpp"

using namespace qra;
using json = nlohmann::ordered_json;

namespace {

struct Options {
  bool json = false;
  bool dot = false;
  std::size_t cutoff = 12;
  std::uint64_t seed = 1;
  std::uint32_t field = 0;
};

/// Assertion failures turn the exit code to 1 without being errors.
struct Outcome {
  json report;
  bool checks_passed = true;
  std::string dot;
};

std::string digest(const std::string& path) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char c : read_file(path)) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex << h;
  return out.str();
}

json dims_json(const Representation& m) { return json(m.dims()); }

json module_json(const Representation& m) {
  json j;
  j["name"] = m.name();
  j["dims"] = dims_json(m);
  j["dim"] = m.total_dim();
  return j;
}

json algebra_json(const BoundQuiverAlgebra& a) {
  json j;
  j["name"] = a.name();
  j["dim"] = a.dim();
  j["vertices"] = a.num_vertices();
  j["vertex_names"] = a.quiver().vertices();
  json arrows = json::array();
  for (const auto& ar : a.quiver().arrows())
    arrows.push_back({{"label", ar.label}, {"source", a.quiver().vertex(ar.source)}, {"target", a.quiver().vertex(ar.target)}});
  j["arrows"] = arrows;
  json rels = json::array();
  for (const auto& r : a.relations()) rels.push_back(format_relation(a.quiver(), r));
  j["relations"] = rels;
  j["cartan"] = cartan_matrix(a);
  return j;
}

std::string names_of(const EndAlgebra& e, const std::vector<std::size_t>& idx) {
  std::string s;
  for (auto i : idx) s += (s.empty() ? "" : " + ") + e.parts[i].name();
  return s;
}

void print_text(const json& j, const std::string& indent = "") {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it->is_object()) {
      std::cout << indent << it.key() << ":\n";
      print_text(*it, indent + "  ");
    } else {
      std::cout << indent << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
    }
  }
}

AlgebraPtr algebra_arg(const std::string& path, json& inputs) {
  inputs[path] = digest(path);
  return load_algebra(path);
}

Representation module_arg(const std::string& path, const AlgebraPtr& a, json& inputs) {
  inputs[path] = digest(path);
  return load_representation(path, a);
}

std::vector<Representation> list_arg(const std::string& path, const AlgebraPtr& a, json& inputs) {
  inputs[path] = digest(path);
  for (const auto& f : read_list(path)) inputs[f] = digest(f);
  return load_list(path, a);
}

std::size_t vertex_arg(const BoundQuiverAlgebra& a, const std::string& v) {
  auto i = a.quiver().find_vertex(v);
  if (!i) throw Error("unknown_vertex", "unknown vertex '" + v + "'");
  return *i;
}

void write_algebra(const std::string& out, const BoundQuiverAlgebra& a, json& r) {
  if (out.empty()) return;
  write_file(out, to_alg_text(a));
  r["written"] = out;
}

json sequence_json(const EndAlgebra& e, const ApproximatingSequence& s, const FMReport& f) {
  json j;
  j["m0"] = names_of(e, s.m0_summands);
  j["m0_dims"] = dims_json(s.m0);
  j["m1_dims"] = dims_json(s.m1);
  json ks = json::array();
  for (const auto& k : s.kernel_summands)
    ks.push_back({{"dims", dims_json(k.module)}, {"part", k.part ? json(e.parts[*k.part].name()) : json(nullptr)}});
  j["kernel_summands"] = ks;
  j["kernel_in_add"] = s.kernel_in_add;
  j["multiplicities_top"] = s.multiplicity;
  j["multiplicities_deletion"] = s.deletion_multiplicity;
  j["oracles_agree"] = s.oracles_agree;
  j["hom_exact"] = f.hom_exact;
  j["projective_cover"] = f.projective_cover;
  j["right_minimal"] = f.right_minimal;
  j["fm_resolution"] = f.fm_resolution;
  j["minimality_consistent"] = f.minimality_consistent;
  if (f.witness) j["witness"] = e.parts[*f.witness].name();
  return j;
}

json certificate_json(const AlgebraPtr& a, const GeneratorCertificate& c) {
  json j;
  j["summands"] = c.summands;
  j["end_dim"] = c.end_dim;
  j["generator_cogenerator"] = c.generator_cogenerator;
  json mp = json::array(), mi = json::array();
  for (auto v : c.missing_projectives) mp.push_back(a->quiver().vertex(v));
  for (auto v : c.missing_injectives) mi.push_back(a->quiver().vertex(v));
  j["missing_projectives"] = mp;
  j["missing_injectives"] = mi;
  j["gldim_end"] = c.gldim.value;
  j["gldim_per_simple"] = c.gldim.per_simple;
  j["inconclusive"] = c.inconclusive;
  j["repdim_bound"] = c.repdim_bound ? json(*c.repdim_bound) : json(nullptr);
  json sc = json::array();
  for (const auto& s : c.spot_checks)
    sc.push_back({{"module", s.name},
                  {"exact", s.exact},
                  {"kernel_in_add", s.kernel_in_add},
                  {"fm_resolution", s.fm_resolution},
                  {"oracles_agree", s.oracles_agree},
                  {"minimality", s.minimality},
                  {"error", s.error}});
  j["spot_checks"] = sc;
  j["warnings"] = c.warnings;
  j["accepted"] = c.accepted;
  return j;
}

std::vector<std::size_t> vertex_list(const BoundQuiverAlgebra& a, const std::string& spec) {
  std::vector<std::size_t> out;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.push_back(vertex_arg(a, tok));
  return out;
}

OrbitAlgebra orbit_from(const AlgebraPtr& b, const std::string& auto_path, std::size_t power, int window, json& inputs) {
  inputs[auto_path] = digest(auto_path);
  auto rep = std::make_shared<const Repetitive>(b);
  LazyAuto f = load_automorphism(auto_path, *rep);
  return orbit_algebra(b, f, power, window);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qra: representations of bound quiver algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.json, "emit the report as JSON");
  app.add_flag("--dot", opt.dot, "emit DOT for algebra outputs");
  app.add_option("--cutoff", opt.cutoff, "resolution length cutoff")->check(CLI::PositiveNumber);
  app.add_option("--seed", opt.seed, "seed for randomized steps");
  app.add_option("--field", opt.field, "prime modulus (default: from the first algebra file)");

  std::map<std::string, std::function<Outcome()>> run;
  std::string alg, alg2, xrep, yrep, list, tests, out, out2, autof, vertex, vertices, mode = "tilted";
  std::size_t layers = 2, power = 1;
  int window = 16, layer = -1;
  bool inverse = false;
  std::vector<std::string> all_algs;

  auto sub = [&](const std::string& name, const std::string& help) {
    CLI::App* s = app.add_subcommand(name, help);
    return s;
  };
  auto need_alg = [&](CLI::App* s) { s->add_option("algebra", alg, "algebra file")->required()->check(CLI::ExistingFile); };

  {
    auto s = sub("info", "dimension, quiver, Cartan matrix");
    need_alg(s);
    run["info"] = [&] {
      Outcome o;
      auto a = algebra_arg(alg, o.report["inputs"]);
      o.report["algebra"] = algebra_json(*a);
      if (opt.dot) o.dot = emit_dot(*a);
      return o;
    };
  }
  {
    auto s = sub("hom", "dimension of Hom(X, Y)");
    need_alg(s);
    s->add_option("x", xrep)->required()->check(CLI::ExistingFile);
    s->add_option("y", yrep)->required()->check(CLI::ExistingFile);
    run["hom"] = [&] {
      Outcome o;
      auto a = algebra_arg(alg, o.report["inputs"]);
      auto x = module_arg(xrep, a, o.report["inputs"]);
      auto y = module_arg(yrep, a, o.report["inputs"]);
      o.report["hom_dim"] = hom_dim(x, y);
      return o;
    };
  }
  {
    auto s = sub("loewy", "radical and socle series");
    need_alg(s);
    s->add_option("x", xrep)->required()->check(CLI::ExistingFile);
    run["loewy"] = [&] {
      Outcome o;
      auto a = algebra_arg(alg, o.report["inputs"]);
      auto x = module_arg(xrep, a, o.report["inputs"]);
      auto l = loewy_data(x);
      o.report["module"] = module_json(x);
      o.report["loewy_length"] = l.loewy_length;
      o.report["radical_layers"] = layer_string(a->quiver(), l.radical_layers);
      o.report["socle_layers"] = layer_string(a->quiver(), l.socle_layers);
      return o;
    };
  }
  {
    auto s = sub("resolve", "minimal projective resolution");
    need_alg(s);
    s->add_option("x", xrep)->required()->check(CLI::ExistingFile);
    run["resolve"] = [&] {
      Outcome o;
      auto a = algebra_arg(alg, o.report["inputs"]);
      auto x = module_arg(xrep, a, o.report["inputs"]);
      auto r = minimal_resolution(x, opt.cutoff);
      json terms = json::array();
      for (const auto& c : r.covers) {
        json vs = json::array();
        for (auto v : c.vertices) vs.push_back("P(" + a->quiver().vertex(v) + ")");
        terms.push_back(vs);
      }
      json syz = json::array();
      for (const auto& m : r.syzygies) syz.push_back(dims_json(m));
      o.report["projective_terms"] = terms;
      o.report["syzygy_dims"] = syz;
      o.report["projdim"] = r.projdim;
      o.report["truncated"] = r.truncated;
      o.report["exact"] = r.exact;
      o.checks_passed = r.exact;
      return o;
    };
  }
  {
    auto s = sub("gldim", "global dimension");
    need_alg(s);
    run["gldim"] = [&] {
      Outcome o;
      auto a = algebra_arg(alg, o.report["inputs"]);
      auto g = gldim(a, opt.cutoff);
      o.report["gldim"] = g.value;
      o.report["per_simple"] = g.per_simple;
      o.report["truncated"] = g.truncated;
      return o;
    };
  }
  {
    auto s = sub("tau", "Auslander-Reiten translate");
    need_alg(s);
    s->add_option("x", xrep)->required()->check(CLI::ExistingFile);
    s->add_flag("--inverse", inverse, "compute the inverse translate");
    s->add_option("-o,--out", out, "write the result as .rep");
    run["tau"] = [&] {
      Outcome o;
      auto a = algebra_arg(alg, o.report["inputs"]);
      auto x = module_arg(xrep, a, o.report["inputs"]);
      auto t = tau(x, inverse);
      o.report["module"] = module_json(x);
      o.report["result"] = module_json(t);
      if (!out.empty()) {
        write_file(out, to_rep_text(t, (inverse ? "TauInv" : "Tau") + x.name()));
        o.report["written"] = out;
      }
      return o;
    };
  }
  auto construction = [&](const std::string& name, const std::string& help, std::function<BoundQuiverAlgebra(const AlgebraPtr&, json&)> make) {
    auto s = sub(name, help);
    need_alg(s);
    s->add_option("-o,--out", out, "write the result as .alg");
    return std::make_pair(s, [&, make] {
      Outcome o;
      auto a = algebra_arg(alg, o.report["inputs"]);
      BoundQuiverAlgebra r = make(a, o.report);
      o.report["result"] = algebra_json(r);
      write_algebra(out, r, o.report);
      if (opt.dot) o.dot = emit_dot(r);
      return o;
    });
  };
  {
    auto [s, f] = construction("trivext", "trivial extension T(B)", [](const AlgebraPtr& a, json& r) {
      StructAlgebra t = trivial_extension(*a);
      r["symmetric"] = check_symmetric(t).symmetric;
      return presentation_from_struct(t).algebra;
    });
    (void)s;
    run["trivext"] = f;
  }
  {
    auto [s, f] = construction("duplicate", "duplicated algebra", [](const AlgebraPtr& a, json&) {
      return presentation_from_struct(duplicated(*a)).algebra;
    });
    (void)s;
    run["duplicate"] = f;
  }
  {
    auto [s, f] = construction("replicate", "replicated algebra: a window of n layers of the repetitive category", [&](const AlgebraPtr& a, json&) {
      return presentation_from_struct(replicated(*a, layers)).algebra;
    });
    s->add_option("layers", layers, "number of layers")->required()->check(CLI::PositiveNumber);
    run["replicate"] = f;
  }
  {
    auto s = sub("reflect", "reflections S_i+ and T_i+ at a sink");
    need_alg(s);
    s->add_option("vertex", vertex)->required();
    s->add_option("-o,--out", out, "write S_i+ B as .alg");
    s->add_option("--out-t", out2, "write T_i+ B as .alg");
    run["reflect"] = [&] {
      Outcome o;
      auto a = algebra_arg(alg, o.report["inputs"]);
      auto r = reflect_sink(*a, vertex_arg(*a, vertex));
      o.report["s_plus"] = algebra_json(r.s_plus);
      o.report["t_plus"] = algebra_json(r.t_plus);
      write_algebra(out, r.s_plus, o.report);
      if (!out2.empty()) {
        write_file(out2, to_alg_text(r.t_plus));
        o.report["written_t"] = out2;
      }
      if (opt.dot) o.dot = emit_dot(r.s_plus);
      return o;
    };
  }
  {
    auto s = sub("opext", "one-point extension B[M]");
    need_alg(s);
    s->add_option("module", xrep)->required()->check(CLI::ExistingFile);
    s->add_option("--vertex", vertex, "name of the new vertex")->default_val("w");
    s->add_option("-o,--out", out, "write the result as .alg");
    run["opext"] = [&] {
      Outcome o;
      auto a = algebra_arg(alg, o.report["inputs"]);
      auto m = module_arg(xrep, a, o.report["inputs"]);
      auto r = one_point_extension(a, m, vertex.empty() ? "w" : vertex);
      o.report["result"] = algebra_json(r);
      write_algebra(out, r, o.report);
      if (opt.dot) o.dot = emit_dot(r);
      return o;
    };
  }
  {
    auto s = sub("orbit", "orbit algebra of the repetitive category");
    need_alg(s);
    s->add_option("automorphism", autof)->required()->check(CLI::ExistingFile);
    s->add_option("--power", power, "use the power r of the automorphism")->check(CLI::PositiveNumber);
    s->add_option("--window", window, "largest power of the automorphism used")->check(CLI::PositiveNumber);
    s->add_option("-o,--out", out, "write the result as .alg");
    run["orbit"] = [&] {
      Outcome o;
      auto b = algebra_arg(alg, o.report["inputs"]);
      auto orb = orbit_from(b, autof, power, window, o.report["inputs"]);
      const auto& a = *orb.algebra();
      o.report["result"] = algebra_json(a);
      o.report["selfinjective"] = check_selfinjective(orb.algebra());
      o.report["symmetric"] = check_symmetric(orb.structure()).symmetric;
      write_algebra(out, a, o.report);
      if (opt.dot) o.dot = emit_dot(a);
      return o;
    };
  }
  {
    auto s = sub("pushdown", "push a module on a window of the repetitive category down to an orbit algebra");
    need_alg(s);
    s->add_option("automorphism", autof)->required()->check(CLI::ExistingFile);
    s->add_option("module", xrep, "module over the window, or over B with --layer")->required()->check(CLI::ExistingFile);
    s->add_option("--layers", layers, "number of layers of the window")->check(CLI::PositiveNumber);
    s->add_option("--layer", layer, "place a B-module into this layer of the window");
    s->add_option("--power", power)->check(CLI::PositiveNumber);
    s->add_option("--window", window)->check(CLI::PositiveNumber);
    s->add_option("-o,--out", out, "write the result as .rep");
    run["pushdown"] = [&] {
      Outcome o;
      auto b = algebra_arg(alg, o.report["inputs"]);
      auto orb = orbit_from(b, autof, power, window, o.report["inputs"]);
      auto w = make_window(b, layers);
      Representation m;
      if (layer >= 0) {
        if (layer >= static_cast<int>(layers)) throw Error("bad_argument", "layer outside the window");
        std::vector<std::size_t> vs;
        for (std::size_t i = 0; i < b->num_vertices(); ++i) vs.push_back(w.vertex({layer, i}));
        auto sub_alg = std::make_shared<const BoundQuiverAlgebra>(full_subalgebra(*w.algebra, vs, b->name()));
        auto base = module_arg(xrep, b, o.report["inputs"]);
        std::vector<Matrix> maps = base.maps();
        Representation shifted(sub_alg, base.dims(), maps, base.name());
        m = extend_by_zero(shifted, w.algebra);
      } else {
        m = module_arg(xrep, w.algebra, o.report["inputs"]);
      }
      auto f = pushdown(w, m, orb);
      o.report["orbit_algebra"] = orb.algebra()->name();
      o.report["result"] = module_json(f);
      if (!out.empty()) {
        write_file(out, to_rep_text(f, "F" + m.name()));
        o.report["written"] = out;
      }
      return o;
    };
  }
  {
    auto s = sub("approx", "minimal add(M)-approximating sequence");
    need_alg(s);
    s->add_option("generator", list, ".list of the summands of M")->required()->check(CLI::ExistingFile);
    s->add_option("x", xrep)->required()->check(CLI::ExistingFile);
    run["approx"] = [&] {
      Outcome o;
      auto a = algebra_arg(alg, o.report["inputs"]);
      auto e = end_algebra(list_arg(list, a, o.report["inputs"]));
      auto x = module_arg(xrep, a, o.report["inputs"]);
      auto seq = approximating_sequence(e, x);
      auto f = verify_fm_resolution(e, seq);
      o.report["module"] = module_json(x);
      o.report["sequence"] = sequence_json(e, seq, f);
      o.checks_passed = seq.oracles_agree && f.minimality_consistent && seq.kernel_in_add;
      return o;
    };
  }
  {
    auto s = sub("endalg", "endomorphism algebra of M");
    need_alg(s);
    s->add_option("generator", list)->required()->check(CLI::ExistingFile);
    s->add_option("-o,--out", out, "write the presentation as .alg");
    run["endalg"] = [&] {
      Outcome o;
      auto a = algebra_arg(alg, o.report["inputs"]);
      auto e = end_algebra(list_arg(list, a, o.report["inputs"]));
      json names = json::array();
      for (const auto& p : e.parts) names.push_back(p.name());
      o.report["summands"] = names;
      o.report["dim"] = e.dim();
      o.report["hom_table"] = e.hom_table();
      o.report["presentation"] = algebra_json(*e.algebra);
      o.report["warnings"] = e.warnings;
      write_algebra(out, *e.algebra, o.report);
      if (opt.dot) o.dot = emit_dot(*e.algebra);
      return o;
    };
  }
  {
    auto s = sub("slicecheck", "checkable slice axioms");
    need_alg(s);
    s->add_option("candidates", list)->required()->check(CLI::ExistingFile);
    s->add_option("--vertices", vertices, "comma-separated vertices of a convex subalgebra to check over");
    run["slicecheck"] = [&] {
      Outcome o;
      auto a = algebra_arg(alg, o.report["inputs"]);
      auto mods = list_arg(list, a, o.report["inputs"]);
      AlgebraPtr over = a;
      if (!vertices.empty()) {
        auto vs = vertex_list(*a, vertices);
        over = std::make_shared<const BoundQuiverAlgebra>(full_subalgebra(*a, vs, a->name() + "_sub"));
        for (auto& m : mods) {
          auto r = restrict_to_quotient(m, vs, over);
          if (r.module.total_dim() != m.total_dim())
            throw Error("bad_argument", "candidate " + m.name() + " is not supported on the given vertices");
          m = r.module;
        }
      }
      auto rep = verify_slice(over, mods);
      o.report["sincere"] = rep.sincere;
      json unc = json::array();
      for (auto v : rep.uncovered_vertices) unc.push_back(over->quiver().vertex(v));
      o.report["uncovered_vertices"] = unc;
      o.report["tau_disjoint"] = rep.tau_disjoint;
      if (rep.tau_witness)
        o.report["tau_witness"] = mods[rep.tau_witness->first].name() + " = tau " + mods[rep.tau_witness->second].name();
      o.report["indecomposable"] = rep.all_indecomposable;
      o.report["convexity"] = rep.convexity;
      return o;
    };
  }
  {
    auto s = sub("checkgen", "Auslander generator certificate");
    need_alg(s);
    s->add_option("generator", list)->required()->check(CLI::ExistingFile);
    s->add_option("--tests", tests, ".list of modules for approximating-sequence spot checks")->check(CLI::ExistingFile);
    run["checkgen"] = [&] {
      Outcome o;
      auto a = algebra_arg(alg, o.report["inputs"]);
      auto m = list_arg(list, a, o.report["inputs"]);
      std::vector<Representation> t;
      if (!tests.empty()) t = list_arg(tests, a, o.report["inputs"]);
      auto c = check_auslander_generator(a, m, opt.cutoff, t);
      o.report["certificate"] = certificate_json(a, c);
      o.checks_passed = c.accepted;
      return o;
    };
  }
  {
    auto s = sub("isoalg", "isomorphism of two presented algebras");
    s->add_option("a", alg)->required()->check(CLI::ExistingFile);
    s->add_option("b", alg2)->required()->check(CLI::ExistingFile);
    run["isoalg"] = [&] {
      Outcome o;
      auto a = algebra_arg(alg, o.report["inputs"]);
      auto b = algebra_arg(alg2, o.report["inputs"]);
      auto w = presentations_isomorphic(*a, *b);
      o.report["isomorphic"] = w.has_value();
      if (w) {
        json vm, am;
        for (std::size_t v = 0; v < w->vertex_map.size(); ++v) vm[a->quiver().vertex(v)] = b->quiver().vertex(w->vertex_map[v]);
        for (std::size_t x = 0; x < w->arrow_map.size(); ++x)
          am[a->quiver().arrow(x).label] = {{"arrow", b->quiver().arrow(w->arrow_map[x]).label},
                                            {"scale", w->arrow_scale[x].signed_value()}};
        o.report["vertex_map"] = vm;
        o.report["arrow_map"] = am;
      }
      return o;
    };
  }
  {
    auto s = sub("isomod", "isomorphism of two modules");
    need_alg(s);
    s->add_option("x", xrep)->required()->check(CLI::ExistingFile);
    s->add_option("y", yrep)->required()->check(CLI::ExistingFile);
    run["isomod"] = [&] {
      Outcome o;
      auto a = algebra_arg(alg, o.report["inputs"]);
      auto x = module_arg(xrep, a, o.report["inputs"]);
      auto y = module_arg(yrep, a, o.report["inputs"]);
      auto r = module_iso(x, y);
      o.report["isomorphic"] = r.isomorphic;
      if (r.witness) {
        json blocks = json::array();
        for (const auto& b : r.witness->blocks) blocks.push_back(format_matrix(b));
        o.report["witness"] = blocks;
      }
      return o;
    };
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  json report;
  report["command"] = cmd;
  std::vector<std::string> args(argv + 1, argv + argc);
  report["argv"] = args;
  try {
    if (opt.field) {
      field::set_modulus(opt.field);
    } else if (!alg.empty()) {
      auto h = peek_algebra_header(read_file(alg));
      if (h.field) field::set_modulus(*h.field);
    }
    set_seed(opt.seed);
    Outcome o = run.at(cmd)();
    if (!o.report.contains("inputs")) o.report["inputs"] = json::object();
    for (auto it = o.report.begin(); it != o.report.end(); ++it) report[it.key()] = *it;
    report["checks_passed"] = o.checks_passed;
    if (opt.dot && !opt.json) {
      if (o.dot.empty()) throw Error("bad_argument", "--dot: command '" + cmd + "' has no algebra output");
      std::cout << o.dot;
    } else if (opt.json) {
      if (!o.dot.empty()) report["dot"] = o.dot;
      std::cout << report.dump(2) << "\n";
    } else {
      print_text(report);
    }
    return o.checks_passed ? 0 : 1;
  } catch (const Error& e) {
    json err;
    err["command"] = cmd;
    err["error"] = {{"kind", e.kind()}, {"message", e.what()}};
    if (opt.json)
      std::cout << err.dump(2) << "\n";
    else
      std::cerr << "error [" << e.kind() << "]: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    json err;
    err["command"] = cmd;
    err["error"] = {{"kind", "internal"}, {"message", e.what()}};
    if (opt.json)
      std::cout << err.dump(2) << "\n";
    else
      std::cerr << "error [internal]: " << e.what() << "\n";
    return 1;
  }
}
