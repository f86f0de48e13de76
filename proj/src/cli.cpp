#include "qcw/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcw/ar.hpp"
#include "qcw/catalog.hpp"
#include "qcw/cluster.hpp"
#include "qcw/forms.hpp"
#include "qcw/graphviz.hpp"
#include "qcw/table.hpp"
#include "qcw/tilting.hpp"

namespace qcw {

namespace {

using nlohmann::ordered_json;

struct Options {
  std::string quiver_path, spec, property, kind, seed_search, format = "table";
  bool all = false;
  int depth = 0;
  Int root_cap = 6;
  Int bound = 4;
};

std::vector<std::string> split_spec(const std::string& spec) {
  std::vector<std::string> names;
  std::string cur;
  for (char c : spec) {
    if (c == ',' || c == '+') {
      if (!cur.empty()) names.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) names.push_back(cur);
  return names;
}

std::string join_names(const std::vector<std::string>& names) {
  std::string out;
  for (const std::string& n : names) out += (out.empty() ? "" : "+") + n;
  return out;
}

std::vector<std::string> summand_names(const Catalog& cat, const TiltingModule& T) {
  std::vector<std::string> out;
  for (int t : T.idx) out.push_back(cat.names[t]);
  return out;
}

ARComponent knit_full(const Quiver& q) { return knit_preprojective(q, 1000); }

ordered_json vec_json(const IntVec& v) { return ordered_json(v); }

int run_roots(const Options& o, const Quiver& q, std::ostream& out) {
  UnitForm uq = euler_unit_form(euler_matrix(q));
  RootSet rs = enumerate_positive_roots(uq, o.root_cap);
  if (o.format == "json") {
    ordered_json j;
    j["quiver"] = q.name;
    j["roots"] = ordered_json::array();
    for (const IntVec& r : rs.roots) j["roots"].push_back({{"root", vec_json(r)}, {"q", form_eval(uq, r)}});
    out << j.dump(2) << "\n";
  } else {
    Table t;
    t.header = {"root", "q"};
    for (const IntVec& r : rs.roots) t.rows.push_back({vec_to_string(r), std::to_string(form_eval(uq, r))});
    out << format_table(t);
    out << rs.roots.size() << " positive roots\n";
  }
  return 0;
}

int run_tilt(const Options& o, const Quiver& q, std::ostream& out) {
  Catalog cat = build_catalog(q);
  if (o.spec.empty()) {
    std::vector<TiltingModule> all = enumerate_tilting(cat);
    if (o.format == "json") {
      ordered_json j;
      j["quiver"] = q.name;
      j["tilting_modules"] = ordered_json::array();
      for (const TiltingModule& T : all) j["tilting_modules"].push_back(summand_names(cat, T));
      out << j.dump(2) << "\n";
    } else {
      Table t;
      t.header = {"#", "summands"};
      for (size_t i = 0; i < all.size(); ++i)
        t.rows.push_back({std::to_string(i + 1), join_names(summand_names(cat, all[i]))});
      out << format_table(t);
      out << all.size() << " tilting modules\n";
    }
    return 0;
  }
  TiltingModule T = tilting_from_names(cat, split_spec(o.spec));
  ClusterSet cs = cluster_dim_vectors(cat, T);
  if (o.format == "json") {
    ordered_json j;
    j["quiver"] = q.name;
    j["tilting"] = summand_names(cat, T);
    j["modules"] = ordered_json::array();
    for (const ClusterRecord& r : cs.records)
      j["modules"].push_back({{"name", cat.names[r.index]},
                              {"dim", vec_json(cat.dims[r.index])},
                              {"tag", tag_name(r.tag)},
                              {"hom", vec_json(r.hom_vector)},
                              {"ext", vec_json(r.ext_vector)}});
    j["counts"] = {{"torsion-free", cs.cls.torsion_free.size()},
                   {"mixed", cs.cls.mixed.size()},
                   {"torsion", cs.cls.torsion.size()}};
    out << j.dump(2) << "\n";
  } else {
    Table t;
    t.header = {"module", "dim", "tag", "dim Hom(T,-)", "dim Ext^1(T,-)"};
    for (const ClusterRecord& r : cs.records)
      t.rows.push_back({cat.names[r.index], vec_to_string(cat.dims[r.index]), tag_name(r.tag),
                        vec_to_string(r.hom_vector), vec_to_string(r.ext_vector)});
    out << format_table(t);
    out << "torsion-free: " << cs.cls.torsion_free.size() << "  mixed: " << cs.cls.mixed.size()
        << "  torsion: " << cs.cls.torsion.size() << "\n";
  }
  return 0;
}

int run_seed_search(const Options& o, const Quiver& q, std::ostream& out, std::ostream& err) {
  std::ifstream in(o.seed_search);
  if (!in) {
    err << "input error: cannot open pattern file " << o.seed_search << "\n";
    return 2;
  }
  ordered_json pj = ordered_json::parse(in);
  std::vector<IntVec> vectors;
  for (const auto& v : pj.at("vectors")) vectors.push_back(v.get<IntVec>());
  std::vector<Int> values = pj.at("values").get<std::vector<Int>>();
  PatternMatch pm = find_value_pattern(q, vectors, values);
  if (o.format == "json") {
    ordered_json j;
    j["found"] = pm.found;
    if (pm.found) {
      ordered_json arrows = ordered_json::array();
      for (const Arrow& a : pm.quiver.arrows)
        arrows.push_back(pm.quiver.labels[a.src] + "->" + pm.quiver.labels[a.tgt]);
      j["orientation"] = arrows;
      j["tilting"] = pm.summands;
      j["permutation"] = pm.perm;
    }
    out << j.dump(2) << "\n";
  } else if (pm.found) {
    out << "match found\n";
    out << "orientation:";
    for (const Arrow& a : pm.quiver.arrows)
      out << " " << pm.quiver.labels[a.src] << "->" << pm.quiver.labels[a.tgt];
    out << "\ntilting: " << join_names(pm.summands) << "\n";
    out << "coordinate permutation:";
    for (int p : pm.perm) out << " " << p;
    out << "\n";
  } else {
    out << "no orientation and tilting module matches the pattern\n";
  }
  return pm.found ? 0 : 1;
}

int run_cluster(const Options& o, const Quiver& q, std::ostream& out, std::ostream& err) {
  if (!o.seed_search.empty()) return run_seed_search(o, q, out, err);
  if (o.spec.empty()) {
    err << "input error: cluster needs a tilting module spec (or --seed-search)\n";
    return 2;
  }
  Catalog cat = build_catalog(q);
  TiltingModule T = tilting_from_names(cat, split_spec(o.spec));
  ClusterSet cs = cluster_dim_vectors(cat, T);
  if (o.format == "json") {
    ordered_json j;
    j["quiver"] = q.name;
    j["tilting"] = summand_names(cat, T);
    j["records"] = ordered_json::array();
    for (const ClusterRecord& r : cs.records)
      j["records"].push_back({{"name", cat.names[r.index]},
                              {"dim", vec_json(cat.dims[r.index])},
                              {"g", vec_json(r.g_image)},
                              {"abs_g", vec_json(r.abs_image)},
                              {"tag", tag_name(r.tag)},
                              {"q_B", r.qb_value}});
    out << j.dump(2) << "\n";
  } else {
    Table t;
    t.header = {"module", "dim", "g(dim)", "abs g(dim)", "tag", "q_B"};
    for (const ClusterRecord& r : cs.records)
      t.rows.push_back({cat.names[r.index], vec_to_string(cat.dims[r.index]), vec_to_string(r.g_image),
                        vec_to_string(r.abs_image), tag_name(r.tag), std::to_string(r.qb_value)});
    out << format_table(t);
  }
  return 0;
}

ordered_json report_json(const CheckReport& rep) {
  return {{"property", rep.property},
          {"pass", rep.pass},
          {"checked", rep.checked},
          {"failures", rep.failures},
          {"notes", rep.notes}};
}

void report_text(const CheckReport& rep, const std::string& label, std::ostream& out) {
  out << label << ": " << (rep.pass ? "pass" : "FAIL") << " (" << rep.checked << " checked)\n";
  for (const std::string& f : rep.failures) out << "  failure: " << f << "\n";
  for (const std::string& n : rep.notes) out << "  note: " << n << "\n";
}

int run_verify(const Options& o, const Quiver& q, std::ostream& out, std::ostream& err) {
  if (o.property == "prop7") {
    UnitForm uq = euler_unit_form(euler_matrix(q));
    CheckReport rep = check_abs_fibers(uq);
    if (o.format == "json")
      out << report_json(rep).dump(2) << "\n";
    else
      report_text(rep, "form of " + q.name, out);
    return rep.pass ? 0 : 1;
  }
  if (o.property == "regular-witness") {
    std::vector<std::string> names = split_spec(o.spec);
    if (names.size() != 2) {
      err << "input error: regular-witness needs a spec with one preprojective and one preinjective summand\n";
      return 2;
    }
    RegularWitness w = find_regular_witness(q, names[0], names[1], o.bound);
    if (o.format == "json") {
      ordered_json j{{"property", o.property},
                     {"found", w.found},
                     {"inconclusive", w.inconclusive},
                     {"notes", w.notes}};
      if (w.found) {
        j["dim"] = vec_json(w.dim);
        j["description"] = w.description;
        j["hom"] = w.hom_total;
        j["ext"] = w.ext_total;
      }
      out << j.dump(2) << "\n";
    } else {
      if (w.found)
        out << "witness: " << w.description << ", dim " << vec_to_string(w.dim) << ", dim Hom(T,R) = "
            << w.hom_total << ", dim Ext^1(T,R) = " << w.ext_total << "\n";
      else
        out << "inconclusive: no witness found\n";
      for (const std::string& n : w.notes) out << "  note: " << n << "\n";
    }
    return w.found ? 0 : 1;
  }

  Catalog cat = build_catalog(q);
  std::vector<TiltingModule> tiltings;
  if (!o.spec.empty())
    tiltings.push_back(tilting_from_names(cat, split_spec(o.spec)));
  else if (o.all)
    tiltings = enumerate_tilting(cat);
  else {
    err << "input error: verify " << o.property << " needs a tilting spec or --all\n";
    return 2;
  }

  bool needs_component = o.property == "lemmas234" || o.property == "prop4";
  ARComponent comp;
  if (needs_component) comp = knit_full(q);

  std::map<std::pair<int, int>, PairCheckResult> pair_cache;
  bool all_pass = true;
  ordered_json jreports = ordered_json::array();
  for (const TiltingModule& T : tiltings) {
    ClusterSet cs = cluster_dim_vectors(cat, T);
    CheckReport rep;
    if (o.property == "separation")
      rep = check_separation(cat, cs);
    else if (o.property == "lemmas234")
      rep = check_torsion_lemmas(cat, cs, comp);
    else if (o.property == "prop4")
      rep = check_root_correspondence(cat, cs, comp);
    else if (o.property == "prop5")
      rep = check_endo_formula(cat, cs);
    else if (o.property == "prop6")
      rep = check_mixed_pairs(cat, cs, &pair_cache);
    else if (o.property == "thm1")
      rep = check_dim_injectivity(cat, cs);
    else if (o.property == "thm2b")
      rep = check_value_law(cat, cs);
    else if (o.property == "thm2c-proxy")
      rep = check_brick_proxy(cat, cs);
    all_pass = all_pass && rep.pass;
    if (o.format == "json") {
      ordered_json jr = report_json(rep);
      jr["tilting"] = summand_names(cat, T);
      jreports.push_back(jr);
    } else {
      report_text(rep, "T = " + join_names(summand_names(cat, T)), out);
    }
  }
  if (o.format == "json") {
    ordered_json j{{"property", o.property}, {"pass", all_pass}, {"reports", jreports}};
    out << j.dump(2) << "\n";
  } else {
    out << "overall: " << (all_pass ? "pass" : "FAIL") << "\n";
  }
  return all_pass ? 0 : 1;
}

int run_graph(const Options& o, const Quiver& q, std::ostream& out, std::ostream& err) {
  if (o.kind == "ar") {
    UnitForm uq = euler_unit_form(euler_matrix(q));
    if (is_positive_definite(uq)) {
      Catalog cat = build_catalog(q);
      ARComponent comp = knit_full(q);
      std::vector<std::string> names;
      for (const ARNode& nd : comp.nodes) {
        int ci = cat.index_of_dim(nd.dim);
        names.push_back(ci >= 0 ? cat.names[ci] : "");
      }
      out << ar_component_dot(comp, names);
    } else {
      int depth = o.depth > 0 ? o.depth : 4;
      out << ar_component_dot(knit_preprojective(q, depth));
    }
    return 0;
  }
  // kind == "re"
  if (o.spec.empty()) {
    err << "input error: graph re needs a tilting module spec\n";
    return 2;
  }
  Catalog cat = build_catalog(q);
  TiltingModule T = tilting_from_names(cat, split_spec(o.spec));
  ClusterSet cs = cluster_dim_vectors(cat, T);
  ARComponent comp = knit_full(q);
  ExchangeForm ef = exchange_form(cat, cs, comp);
  out << bigraph_dot(ef.graph, true);
  return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"quiver and cluster dimension-vector workbench"};
  app.name("qcw");
  Options o;

  auto add_common = [&](CLI::App* sub, bool with_spec) {
    sub->add_option("quiver", o.quiver_path, "quiver description file")->required();
    if (with_spec) sub->add_option("spec", o.spec, "tilting module summands, e.g. P(1),P(2)");
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"table", "json"}));
  };

  CLI::App* roots = app.add_subcommand("roots", "positive roots of the quiver form");
  add_common(roots, false);
  roots->add_option("--root-cap", o.root_cap, "coordinate guard for the root search");

  CLI::App* tilt = app.add_subcommand("tilt", "tilting modules / torsion classification");
  add_common(tilt, true);

  CLI::App* cluster = app.add_subcommand("cluster", "cluster dimension vector table");
  add_common(cluster, true);
  cluster->add_option("--seed-search", o.seed_search, "pattern file: search orientations and tilting modules");

  CLI::App* verify = app.add_subcommand("verify", "run a verification property");
  verify->add_option("quiver", o.quiver_path, "quiver description file")->required();
  verify
      ->add_option("property", o.property, "property to verify")
      ->required()
      ->check(CLI::IsMember({"separation", "lemmas234", "prop4", "prop5", "prop6", "thm1", "thm2b",
                             "thm2c-proxy", "prop7", "regular-witness"}));
  verify->add_option("spec", o.spec, "tilting module summands");
  verify->add_flag("--all", o.all, "run over every tilting module");
  verify->add_option("--bound", o.bound, "dimension bound for the witness search");
  verify->add_option("--format", o.format, "output format")->check(CLI::IsMember({"table", "json"}));

  CLI::App* graph = app.add_subcommand("graph", "DOT export");
  graph->add_option("quiver", o.quiver_path, "quiver description file")->required();
  graph->add_option("kind", o.kind, "graph kind")->required()->check(CLI::IsMember({"ar", "re"}));
  graph->add_option("spec", o.spec, "tilting module summands");
  graph->add_option("--depth", o.depth, "knitting depth for infinite components");

  app.require_subcommand(1);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    std::vector<CLI::App*> subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs[0]->help());
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    Quiver q = parse_quiver_file(o.quiver_path);
    if (roots->parsed()) return run_roots(o, q, out);
    if (tilt->parsed()) return run_tilt(o, q, out);
    if (cluster->parsed()) return run_cluster(o, q, out, err);
    if (verify->parsed()) return run_verify(o, q, out, err);
    if (graph->parsed()) return run_graph(o, q, out, err);
    err << "usage error: no subcommand\n";
    return 2;
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace qcw
