#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>

#include "graphlie/catalog.hpp"
#include "graphlie/derivations.hpp"
#include "graphlie/errors.hpp"
#include "graphlie/graph.hpp"
#include "graphlie/lg_format.hpp"
#include "graphlie/lie_algebra.hpp"
#include "graphlie/morphisms.hpp"
#include "graphlie/substructures.hpp"

namespace graphlie::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  bool json = false;
  std::string target;
  std::size_t max_size = 0;
  bool all = false;
  bool basis = false;
  std::size_t m = 0;
  std::size_t n = 0;
  std::string labeling = "single";
  bool check = false;
  std::string edge;
  std::string output;
  bool emit = false;
  bool verify_all = false;
  bool list = false;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

// A path that exists is read as .lg; otherwise the name is looked up in the catalog.
LabeledDigraph load_target(const std::string& target) {
  if (std::filesystem::exists(target)) return read_lg_file(target);
  const auto names = catalog::names();
  if (std::find(names.begin(), names.end(), target) != names.end()) return catalog::get(target).graph;
  throw UsageError(target + ": no such file or catalog entry");
}

Json rational_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return q.get_str();
}

Json matrix_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json map_json(const GradedLinearMap& f) {
  Json j;
  j["source_basis"] = {{"g-1", f.source().vertices()}, {"g-2", f.source().labels()}};
  j["target_basis"] = {{"g-1", f.target().vertices()}, {"g-2", f.target().labels()}};
  j["block_minus_one"] = matrix_json(f.minus_one());
  j["block_minus_two"] = matrix_json(f.minus_two());
  return j;
}

std::string span_text(const std::vector<std::string>& names) {
  std::string s = "<";
  for (std::size_t k = 0; k < names.size(); ++k) s += (k ? "," : "") + names[k];
  return s + ">";
}

std::vector<std::string> vertex_names(const LabeledDigraph& g, const std::vector<std::size_t>& idx) {
  std::vector<std::string> out;
  for (auto v : idx) out.push_back(g.vertices()[v]);
  return out;
}

Json report_json(const LabeledDigraph& g, const SubstructureReport& r) {
  Json j;
  j["vertices"] = vertex_names(g, r.vertices);
  std::vector<std::string> labels;
  for (auto l : r.labels) labels.push_back(g.labels()[l]);
  j["labels"] = labels;
  j["is_subalgebra"] = r.is_subalgebra;
  j["is_graph_ideal"] = r.is_graph_ideal();
  j["graph_ideal_criterion"] = r.graph_ideal_criterion;
  j["ideal_by_closure"] = r.ideal_by_closure;
  j["non_graph_ideal"] = r.non_graph_ideal();
  j["trivial"] = r.is_trivial();
  j["triviality"] = to_string(r.triviality);
  return j;
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

// ---- verbs ----------------------------------------------------------------

int cmd_verify(const Options& opt, std::ostream& out) {
  const LabeledDigraph g = load_target(opt.target);
  const AxiomReport report = verify_axioms(build_lie(g));
  if (opt.json) {
    Json checks = Json::array();
    for (const auto* c : report.checks())
      checks.push_back({{"name", c->name}, {"passed", c->passed}, {"witness", c->witness}, {"detail", c->detail}});
    emit_json(out, {{"passed", report.all_passed()}, {"checks", checks}});
  } else {
    for (const auto* c : report.checks()) {
      out << std::left << std::setw(24) << c->name << (c->passed ? "PASS" : "FAIL");
      if (!c->detail.empty()) out << "  " << c->detail;
      out << '\n';
    }
  }
  return report.all_passed() ? kExitOk : kExitCheckFailed;
}

int cmd_info(const Options& opt, std::ostream& out) {
  const LabeledDigraph g = load_target(opt.target);
  const LieAlgebra alg = build_lie(g);
  const Stratification strata = stratification(alg);
  Json relations = Json::array();
  for (std::size_t i = 0; i < alg.n(); ++i)
    for (std::size_t j = i + 1; j < alg.n(); ++j)
      for (std::size_t l = 0; l < alg.m(); ++l)
        if (const int s = alg.s(i, j, l))
          relations.push_back(
              {{"left", alg.vertices()[i]}, {"right", alg.vertices()[j]}, {"result", alg.labels()[l]}, {"sign", s}});
  if (opt.json) {
    emit_json(out, {{"dim", alg.dim()},
                    {"generators", strata.minus_one},
                    {"strata", {{"g-1", strata.minus_one}, {"g-2", strata.minus_two}}},
                    {"relations", relations}});
    return kExitOk;
  }
  out << "dim " << alg.dim() << " (g-1: " << alg.n() << ", g-2: " << alg.m() << ")\n";
  out << "g-1 " << span_text(strata.minus_one) << '\n';
  out << "g-2 " << span_text(strata.minus_two) << '\n';
  for (const auto& r : relations)
    out << "[" << r["left"].get<std::string>() << ", " << r["right"].get<std::string>()
        << "] = " << (r["sign"].get<int>() < 0 ? "-" : "") << r["result"].get<std::string>() << '\n';
  return kExitOk;
}

int cmd_components(const Options& opt, std::ostream& out) {
  const LabeledDigraph g = load_target(opt.target);
  const auto comps = components(g);
  const std::size_t spectral = component_count_spectral(g);
  const bool agree = spectral == comps.size();
  const auto ideals = component_ideals(g);
  if (opt.json) {
    Json list = Json::array();
    for (std::size_t c = 0; c < comps.size(); ++c)
      list.push_back({{"vertices", vertex_names(g, comps[c])}, {"ideal", report_json(g, ideals[c])}});
    emit_json(out, {{"union_find_count", comps.size()},
                    {"laplacian_nullity", spectral},
                    {"agree", agree},
                    {"components", list}});
  } else {
    out << "components " << comps.size() << "  laplacian nullity " << spectral << (agree ? "  OK" : "  MISMATCH")
        << '\n';
    for (std::size_t c = 0; c < comps.size(); ++c) {
      out << span_text(ideals[c].span_names(g)) << "  graph-ideal=" << (ideals[c].is_graph_ideal() ? "yes" : "no");
      if (ideals[c].is_trivial()) out << "  trivial (" << to_string(ideals[c].triviality) << ")";
      out << '\n';
    }
  }
  return agree ? kExitOk : kExitCheckFailed;
}

int cmd_ideals(const Options& opt, std::ostream& out) {
  const LabeledDigraph g = load_target(opt.target);
  std::optional<std::size_t> cap;
  if (opt.max_size > 0) cap = opt.max_size;
  const auto reports = enumerate_substructures(g, cap);
  bool consistent = true;
  for (const auto& r : reports)
    if (r.graph_ideal_criterion && !r.ideal_by_closure) consistent = false;

  if (opt.json) {
    Json list = Json::array();
    for (const auto& r : reports)
      if (opt.all || !r.is_trivial()) list.push_back(report_json(g, r));
    emit_json(out, list);
    return consistent ? kExitOk : kExitCheckFailed;
  }
  std::size_t subalgebras = 0;
  std::size_t ideals = 0;
  for (const auto& r : reports) {
    if (!opt.all && r.is_trivial()) continue;
    subalgebras += r.is_subalgebra;
    ideals += r.is_graph_ideal();
    out << std::left << std::setw(28) << span_text(r.span_names(g)) << " subalgebra=" << (r.is_subalgebra ? "yes" : "no")
        << " graph-ideal=" << (r.is_graph_ideal() ? "yes" : "no");
    if (r.non_graph_ideal()) out << " non-graph-ideal";
    if (r.is_trivial()) out << " trivial(" << to_string(r.triviality) << ")";
    out << '\n';
  }
  out << (opt.all ? "" : "nontrivial ") << "subalgebras: " << subalgebras << ", graph-ideals: " << ideals << '\n';
  return consistent ? kExitOk : kExitCheckFailed;
}

int cmd_der0(const Options& opt, std::ostream& out) {
  const LabeledDigraph g = load_target(opt.target);
  const DerivationSpace space = der0(build_lie(g));
  if (opt.json) {
    Json j{{"dimension", space.dimension}};
    if (opt.basis) {
      Json basis = Json::array();
      for (const auto& d : space.basis)
        basis.push_back({{"block_minus_one", matrix_json(d.minus_one())}, {"block_minus_two", matrix_json(d.minus_two())}});
      j["basis"] = basis;
    }
    emit_json(out, j);
    return kExitOk;
  }
  out << "dim Der0 = " << space.dimension << '\n';
  if (opt.basis)
    for (std::size_t k = 0; k < space.basis.size(); ++k)
      out << "D" << k + 1 << ": g-1 " << to_string(space.basis[k].minus_one()) << "  g-2 "
          << to_string(space.basis[k].minus_two()) << '\n';
  return kExitOk;
}

int cmd_kmn(const Options& opt, std::ostream& out) {
  if (opt.m == 0 || opt.n == 0) throw UsageError("kmn: --m and --n must be positive");
  if (opt.labeling != "single" && opt.labeling != "distinct")
    throw UsageError("kmn: --labeling must be 'single' or 'distinct'");
  const Labeling labeling = opt.labeling == "single" ? Labeling::Single : Labeling::Distinct;
  const std::size_t dim = der0(build_lie(build_kmn(opt.m, opt.n, labeling))).dimension;

  std::optional<std::size_t> formula;
  std::string formula_note;
  if (opt.check) {
    try {
      formula = kmn_dimension_formula(opt.m, opt.n, labeling);
    } catch (const PreconditionError& e) {
      formula_note = e.what();
    }
  }
  const bool ok = !formula || *formula == dim;
  if (opt.json) {
    Json j{{"m", opt.m}, {"n", opt.n}, {"labeling", opt.labeling}, {"dimension", dim}};
    if (opt.check) {
      j["formula"] = formula ? Json(*formula) : Json(nullptr);
      if (!formula_note.empty()) j["formula_note"] = formula_note;
      j["match"] = formula ? Json(ok) : Json(nullptr);
    }
    emit_json(out, j);
  } else if (!opt.check) {
    out << "dim=" << dim << '\n';
  } else if (formula) {
    out << "dim=" << dim << " formula=" << *formula << (ok ? " OK" : " MISMATCH") << '\n';
  } else {
    out << "dim=" << dim << " formula=n/a (" << formula_note << ")\n";
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_reverse(const Options& opt, std::ostream& out) {
  const LabeledDigraph g = load_target(opt.target);
  const auto colon = opt.edge.find(':');
  if (colon == std::string::npos) throw UsageError("reverse: --edge must be TAIL:HEAD");
  const auto tail = g.vertex_index(opt.edge.substr(0, colon));
  const auto head = g.vertex_index(opt.edge.substr(colon + 1));
  const IsomorphismOutcome outcome = reversal_isomorphism(g, tail, head);

  const bool ok = verified(outcome);
  const auto& graph = ok ? std::get<VerifiedIsomorphism>(outcome).target_graph
                         : std::get<Counterexample>(outcome).target_graph;
  const auto& map = ok ? std::get<VerifiedIsomorphism>(outcome).map : std::get<Counterexample>(outcome).candidate;
  const std::string lg = serialize_lg(graph);
  if (!opt.output.empty()) {
    std::ofstream file(opt.output);
    if (!file) throw UsageError(opt.output + ": cannot write");
    file << lg;
  }

  Json j{{"verified", ok}, {"map", map_json(map)}};
  if (!ok) {
    const auto& report = std::get<Counterexample>(outcome).report;
    if (report.witness)
      j["witness"] = {map.source().basis_name(report.witness->first), map.source().basis_name(report.witness->second)};
  }
  if (opt.json) {
    j["graph"] = lg;
    emit_json(out, j);
  } else {
    if (opt.output.empty()) out << lg;
    out << (ok ? "verified" : "FAILED") << "  g-1 " << to_string(map.minus_one()) << "  g-2 "
        << to_string(map.minus_two()) << '\n';
    if (j.contains("witness"))
      out << "witness " << j["witness"][0].get<std::string>() << ", " << j["witness"][1].get<std::string>() << '\n';
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_orientations(const Options& opt, std::ostream& out) {
  const LabeledDigraph g = load_target(opt.target);
  if (g.edge_count() > 20) throw UsageError("orientations: more than 20 edges");
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::optional<unsigned long long> first_failure;
  for (unsigned long long mask = 0; mask < (1ULL << g.edge_count()); ++mask) {
    std::vector<std::size_t> subset;
    for (std::size_t k = 0; k < g.edge_count(); ++k)
      if (mask & (1ULL << k)) subset.push_back(k);
    if (verified(orientation_isomorphism(g, subset))) {
      ++passed;
    } else {
      ++failed;
      if (!first_failure) first_failure = mask;
    }
  }
  if (opt.json) {
    Json j{{"orientations", passed + failed}, {"verified", passed}, {"failed", failed}};
    if (first_failure) j["first_failure_mask"] = *first_failure;
    emit_json(out, j);
  } else {
    out << "orientations " << passed + failed << "  verified " << passed << "  failed " << failed << '\n';
  }
  return failed == 0 ? kExitOk : kExitCheckFailed;
}

int cmd_catalog(const Options& opt, std::ostream& out) {
  if (opt.list || (opt.target.empty() && !opt.verify_all)) {
    if (opt.json) {
      emit_json(out, catalog::names());
    } else {
      for (const auto& name : catalog::names()) out << name << '\n';
    }
    return kExitOk;
  }
  if (opt.verify_all) {
    Json entries = Json::array();
    std::size_t misses = 0;
    if (!opt.json)
      out << std::left << std::setw(16) << "entry" << std::setw(32) << "algebra" << std::setw(8) << "found"
          << std::setw(8) << "misses" << "extras\n";
    for (const auto& name : catalog::names()) {
      const auto entry = catalog::get(name);
      const auto report = catalog::verify_entry(entry);
      misses += report.misses.size();
      if (opt.json) {
        Json findings = Json::array();
        for (const auto& f : report.findings)
          findings.push_back(
              {{"span", f.span}, {"expected_graph_ideal", f.expected_graph_ideal}, {"problem", f.problem}});
        entries.push_back({{"name", name},
                           {"passed", report.passed()},
                           {"findings", findings},
                           {"misses", report.misses},
                           {"extras", report.extras}});
      } else {
        out << std::left << std::setw(16) << name << std::setw(32) << entry.title << std::setw(8)
            << report.findings.size() - report.misses.size() << std::setw(8) << report.misses.size()
            << report.extras.size() << '\n';
        for (const auto& f : report.findings)
          if (!f.problem.empty()) out << "  MISS " << f.problem << '\n';
      }
    }
    if (opt.json)
      emit_json(out, {{"misses", misses}, {"entries", entries}});
    else
      out << "total misses: " << misses << '\n';
    return misses == 0 ? kExitOk : kExitCheckFailed;
  }

  const auto entry = catalog::get(opt.target);
  const std::string lg = serialize_lg(entry.graph);
  if (!opt.output.empty()) {
    std::ofstream file(opt.output);
    if (!file) throw UsageError(opt.output + ": cannot write");
    file << lg;
    return kExitOk;
  }
  if (opt.json) {
    emit_json(out, {{"name", entry.name},
                    {"title", entry.title},
                    {"source", entry.source},
                    {"graph", lg},
                    {"expected_subalgebras", entry.expected_subalgebras},
                    {"expected_graph_ideals", entry.expected_graph_ideals}});
  } else if (opt.emit) {
    out << lg;
  } else {
    out << "# " << entry.name << ": " << entry.title << " (" << entry.source << ")\n" << lg;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lie algebras of labeled directed graphs", "graphlie"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "Emit a single JSON document");

  auto* verify = app.add_subcommand("verify", "Check the Lie algebra axioms of Lie(G)");
  verify->add_option("file", opt.target, ".lg file or catalog name")->required();
  verify->add_flag("--json", opt.json);

  auto* info = app.add_subcommand("info", "Print the strata and brackets of Lie(G)");
  info->add_option("file", opt.target)->required();
  info->add_flag("--json", opt.json);

  auto* comps = app.add_subcommand("components", "Connected components, Laplacian nullity, component ideals");
  comps->add_option("file", opt.target)->required();
  comps->add_flag("--json", opt.json);

  auto* ideals = app.add_subcommand("ideals", "Subalgebras and graph-ideals from induced subgraphs");
  ideals->add_option("file", opt.target)->required();
  ideals->add_option("--max-size", opt.max_size, "Largest vertex subset to try (default: all)");
  ideals->add_flag("--all", opt.all, "Include trivial subspaces");
  ideals->add_flag("--json", opt.json);

  auto* der = app.add_subcommand("der0", "Dimension (and basis) of the degree-0 derivations");
  der->add_option("file", opt.target)->required();
  der->add_flag("--basis", opt.basis);
  der->add_flag("--json", opt.json);

  auto* kmn = app.add_subcommand("kmn", "Der0 of the complete bipartite graph K_{m,n}");
  kmn->add_option("--m", opt.m)->required();
  kmn->add_option("--n", opt.n)->required();
  kmn->add_option("--labeling", opt.labeling, "single | distinct");
  kmn->add_flag("--check", opt.check, "Compare with the closed-form dimension");
  kmn->add_flag("--json", opt.json);

  auto* reverse = app.add_subcommand("reverse", "Reverse one uniquely labeled edge and build the isomorphism");
  reverse->add_option("file", opt.target)->required();
  reverse->add_option("--edge", opt.edge, "TAIL:HEAD")->required();
  reverse->add_option("--output,-o", opt.output, "Write the reversed graph here");
  reverse->add_flag("--json", opt.json);

  auto* orient = app.add_subcommand("orientations", "Verify isomorphisms for every orientation");
  orient->add_option("file", opt.target)->required();
  orient->add_flag("--json", opt.json);

  auto* cat = app.add_subcommand("catalog", "Named graphs of the low-dimensional 2-step algebras");
  cat->add_option("name", opt.target);
  cat->add_flag("--emit", opt.emit, "Print the .lg text only");
  cat->add_option("--output,-o", opt.output, "Write the .lg text here");
  cat->add_flag("--verify-all", opt.verify_all, "Check every entry's expected subalgebras and graph-ideals");
  cat->add_flag("--list", opt.list);
  cat->add_flag("--json", opt.json);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(opt, out);
    if (info->parsed()) return cmd_info(opt, out);
    if (comps->parsed()) return cmd_components(opt, out);
    if (ideals->parsed()) return cmd_ideals(opt, out);
    if (der->parsed()) return cmd_der0(opt, out);
    if (kmn->parsed()) return cmd_kmn(opt, out);
    if (reverse->parsed()) return cmd_reverse(opt, out);
    if (orient->parsed()) return cmd_orientations(opt, out);
    if (cat->parsed()) return cmd_catalog(opt, out);
  } catch (const ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace graphlie::cli
