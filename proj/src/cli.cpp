// Copyright 2026 The covercraft Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "covercraft/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "covercraft/evidence.hpp"
#include "covercraft/graph.hpp"
#include "covercraft/matroid.hpp"
#include "covercraft/parity.hpp"
#include "covercraft/report.hpp"
#include "covercraft/rng.hpp"
#include "covercraft/suites.hpp"

namespace covercraft {

namespace {

using nlohmann::json;

long element_limit_from_env() {
  const char* env = std::getenv("COVERCRAFT_LIMIT");
  if (!env) return kDefaultElementLimit;
  long value = std::strtol(env, nullptr, 10);
  if (value < 1) throw std::invalid_argument("COVERCRAFT_LIMIT must be positive");
  return value;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    if (token.empty()) throw std::invalid_argument("empty entry in integer list");
    out.push_back(std::stoi(token));
  }
  return out;
}

void emit(std::ostream& out, const json& j, const std::string& format) {
  if (format == "text") {
    if (j.contains("items")) {
      for (const json& it : j.at("items"))
        out << (it.at("pass").get<bool>() ? "PASS " : "FAIL ")
            << it.at("name").get<std::string>() << "\n";
      out << (j.at("pass").get<bool>() ? "PASS" : "FAIL") << " suite "
          << j.at("suite").get<std::string>() << "\n";
    } else {
      for (const auto& [key, value] : j.items()) {
        if (key == "schema") continue;
        out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
            << "\n";
      }
    }
    return;
  }
  out << j.dump(2) << "\n";
}

struct GlobalOptions {
  int max_cosets = 0;
  long long node_limit = 10'000'000;
  double time_limit_sec = 300.0;
  int threads = 1;
  std::uint64_t seed = 1;
  std::string format = "json";

  SearchBudget budget() const { return SearchBudget{max_cosets, node_limit, time_limit_sec}; }
  SuiteConfig suite_config() const { return SuiteConfig{seed, threads, budget()}; }
};

int status_exit(SearchStatus status) {
  return status == SearchStatus::kComplete ? kExitOk : kExitBudget;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"covercraft: coverings of finite abelian groups and vector spaces"};
  app.require_subcommand(1);
  GlobalOptions opt;
  app.add_option("--max-cosets", opt.max_cosets, "cap on cover sizes (0 = automatic)");
  app.add_option("--node-limit", opt.node_limit, "search node budget");
  app.add_option("--time-limit-sec", opt.time_limit_sec, "search time budget in seconds");
  app.add_option("--threads", opt.threads, "worker count (never affects results)");
  app.add_option("--seed", opt.seed, "seed for sampled suites");
  app.add_option("--format", opt.format, "output format: json or text")
      ->check(CLI::IsMember({"json", "text"}));

  // group
  CLI::App* group = app.add_subcommand("group", "abelian group covering invariants");
  group->require_subcommand(1);
  std::string group_spec;
  CLI::App* group_phi = group->add_subcommand("phi", "minimal cover of G minus the identity");
  group_phi->add_option("spec", group_spec)->required();
  std::string fmin_mode = "cosets";
  CLI::App* group_fmin = group->add_subcommand("fmin", "minimal irredundant trivial-intersection cover");
  group_fmin->add_option("spec", group_spec)->required();
  group_fmin->add_option("--mode", fmin_mode)->check(CLI::IsMember({"cosets", "subgroups"}));
  CLI::App* group_gmin = group->add_subcommand("gmin", "subgroup-only minimal cover");
  group_gmin->add_option("spec", group_spec)->required();
  int blocking_n = 0, blocking_p = 0;
  CLI::App* group_blocking = group->add_subcommand("blocking", "affine blocking number");
  group_blocking->add_option("--n", blocking_n)->required();
  group_blocking->add_option("--p", blocking_p)->required();

  // cover
  CLI::App* cover = app.add_subcommand("cover", "audit a coset system");
  cover->require_subcommand(1);
  std::string cover_file;
  CLI::App* cover_audit = cover->add_subcommand("audit", "audit a JSON coset system");
  cover_audit->add_option("file", cover_file)->required();

  // ajt
  CLI::App* ajt = app.add_subcommand("ajt", "nowhere-zero image tests for square matrices");
  ajt->require_subcommand(1);
  std::string ajt_file;
  CLI::App* ajt_check = ajt->add_subcommand("check", "check one matrix by every route");
  ajt_check->add_option("file", ajt_file)->required();
  int scan_q = 0, scan_n = 0, scan_count = 100;
  CLI::App* ajt_scan = ajt->add_subcommand("scan", "seeded random-matrix agreement scan");
  ajt_scan->add_option("--q", scan_q)->required();
  ajt_scan->add_option("--n", scan_n)->required();
  ajt_scan->add_option("--count", scan_count);

  // hyperplane
  CLI::App* hyper = app.add_subcommand("hyperplane", "hyperplane covering questions");
  hyper->require_subcommand(1);
  std::string hyper_file;
  CLI::App* hyper_check = hyper->add_subcommand("cover-check", "do the normals' hyperplanes cover the space");
  hyper_check->add_option("file", hyper_file)->required();
  int hyper_n = 0, hyper_q = 0;
  bool hyper_affine = false, hyper_all = false;
  CLI::App* hyper_min = hyper->add_subcommand("min", "minimal irredundant trivial-intersection cover");
  hyper_min->add_option("--n", hyper_n)->required();
  hyper_min->add_option("--q", hyper_q)->required();
  hyper_min->add_flag("--affine", hyper_affine);
  hyper_min->add_flag("--all", hyper_all, "collect every minimal system");
  CLI::App* hyper_ratio = hyper->add_subcommand("ratio", "codimension ratio report for an affine system");
  hyper_ratio->add_option("file", hyper_file)->required();

  // basis
  CLI::App* basis = app.add_subcommand("basis", "basis combination questions");
  basis->require_subcommand(1);
  std::string basis_file, basis_target;
  int basis_count = 1;
  CLI::App* basis_additive = basis->add_subcommand("additive", "zero-one representability");
  basis_additive->add_option("file", basis_file)->required();
  basis_additive->add_option("--target", basis_target)->required();
  CLI::App* basis_nz = basis->add_subcommand("nowhere-zero", "nowhere-zero combination over stacked bases");
  basis_nz->add_option("file", basis_file)->required();
  basis_nz->add_option("--bases", basis_count)->required();
  basis_nz->add_option("--target", basis_target)->required();
  CLI::App* basis_cover = basis->add_subcommand("to-affine-cover", "turn an unreachable target into an affine covering");
  basis_cover->add_option("file", basis_file)->required();
  basis_cover->add_option("--bases", basis_count)->required();
  basis_cover->add_option("--target", basis_target)->required();

  // matroid
  CLI::App* matroid = app.add_subcommand("matroid", "linear matroid packing");
  matroid->require_subcommand(1);
  std::string matroid_file, matroid_subset;
  int matroid_k = 0;
  CLI::App* matroid_rank = matroid->add_subcommand("rank", "rank of a column subset");
  matroid_rank->add_option("file", matroid_file)->required();
  matroid_rank->add_option("--subset", matroid_subset);
  CLI::App* matroid_pack = matroid->add_subcommand("pack", "disjoint base packing");
  matroid_pack->add_option("file", matroid_file)->required();
  matroid_pack->add_option("--subset", matroid_subset);
  matroid_pack->add_option("--k", matroid_k, "find a subset packing k bases");

  // graph
  CLI::App* graph_cmd = app.add_subcommand("graph", "coloring and flow reductions");
  graph_cmd->require_subcommand(1);
  std::string graph_file, flow_group;
  int color_q = 0;
  CLI::App* graph_color = graph_cmd->add_subcommand("color", "colorability by all routes");
  graph_color->add_option("--q", color_q)->required();
  graph_color->add_option("file", graph_file)->required();
  CLI::App* graph_flow = graph_cmd->add_subcommand("flow", "nowhere-zero flow existence");
  graph_flow->add_option("--group", flow_group)->required();
  graph_flow->add_option("file", graph_file)->required();

  // suite / evidence
  std::string suite_name, suite_out;
  CLI::App* suite_cmd = app.add_subcommand("suite", "run a named acceptance bundle");
  suite_cmd->add_option("name", suite_name)->required();
  suite_cmd->add_option("--out", suite_out, "also write the report to a file");
  std::string evidence_from;
  CLI::App* evidence_cmd = app.add_subcommand("evidence", "consolidated conjecture evidence");
  evidence_cmd->add_option("--from", evidence_from, "read cached suite reports from a directory");

  // Global options may appear after any subcommand.
  auto enable_fallthrough = [](auto&& self, CLI::App* a) -> void {
    a->fallthrough();
    for (CLI::App* sub : a->get_subcommands({})) self(self, sub);
  };
  enable_fallthrough(enable_fallthrough, &app);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitInvalidInput;
  }

  try {
    long limit = element_limit_from_env();

    if (group_phi->parsed()) {
      FiniteAbelianGroup g = parse_group(group_spec, limit);
      CoverSearchResult r = phi(g, opt.budget());
      emit(out, search_result_to_json("phi", g, r), opt.format);
      return status_exit(r.status);
    }
    if (group_fmin->parsed() || group_gmin->parsed()) {
      CoverMode mode = (group_gmin->parsed() || fmin_mode == "subgroups")
                           ? CoverMode::kSubgroups
                           : CoverMode::kCosets;
      FiniteAbelianGroup g = parse_group(group_spec, limit);
      CoverSearchResult r = min_trivial_intersection_cover(g, mode, opt.budget());
      const char* invariant = mode == CoverMode::kSubgroups ? "g" : "f";
      emit(out, search_result_to_json(invariant, g, r), opt.format);
      return status_exit(r.status);
    }
    if (group_blocking->parsed()) {
      BlockingResult r = blocking_number(blocking_n, blocking_p, opt.budget());
      json j{{"schema", kSchemaVersion}, {"invariant", "blocking"},
             {"n", blocking_n},          {"p", blocking_p},
             {"value", r.value},         {"witness_points", r.witness_points},
             {"nodes_expanded", r.nodes_expanded}, {"status", to_string(r.status)}};
      emit(out, j, opt.format);
      return status_exit(r.status);
    }

    if (cover_audit->parsed()) {
      json request = json::parse(read_input(cover_file));
      AuditRequest parsed = parse_audit_request(request, limit);
      CoverReport report = audit(parsed.system, parsed.target);
      json j = cover_report_to_json(report);
      j["schema"] = kSchemaVersion;
      j["group"] = parsed.system.group.spec_string();
      emit(out, j, opt.format);
      return kExitOk;
    }

    if (ajt_check->parsed()) {
      MatrixGF m = parse_matrix(read_input(ajt_file));
      if (m.rows() != m.cols()) throw std::invalid_argument("AJT needs a square matrix");
      auto witness = ajt_brute(m);
      json methods{{"brute", witness.has_value()}};
      bool agree = true;
      int q = m.field().q();
      bool odd_prime = m.field().prime_field() && q > 2;
      if (odd_prime && m.rows() <= kCubeSetLimit) {
        bool parity = ajt_parity(m);
        bool cube = ajt_cube(m);
        methods["parity"] = parity;
        methods["cube"] = cube;
        agree = (parity == witness.has_value()) && (cube == witness.has_value());
      } else {
        methods["parity"] = nullptr;
        methods["cube"] = nullptr;
      }
      json j{{"schema", kSchemaVersion}, {"ajt", witness.has_value()},
             {"methods", methods},       {"methods_agree", agree}};
      if (witness) j["witness"] = witness->e;
      if (odd_prime && m.rows() <= kCubeSetLimit) {
        std::vector<VectorGF> rows;
        for (int r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
        j["row_cube"] = cube_set_to_json(cube_set(GroupPn{q, m.rows()}, rows));
      }
      emit(out, j, opt.format);
      return agree ? kExitOk : kExitCounterexample;
    }
    if (ajt_scan->parsed()) {
      FieldSpec f = field_make(scan_q);
      bool odd_prime = f.prime_field() && scan_q > 2;
      if (!odd_prime) throw std::invalid_argument("ajt scan needs an odd prime q");
      Rng rng(opt.seed);
      long disagreements = 0, ajt_count = 0;
      for (int trial = 0; trial < scan_count; ++trial) {
        int n = 1 + rng.below(scan_n);
        std::vector<int> e(static_cast<std::size_t>(n) * n);
        for (int& x : e) x = rng.below(scan_q);
        MatrixGF m(f, n, n, e);
        bool brute = ajt_brute(m).has_value();
        if (ajt_parity(m) != brute || ajt_cube(m) != brute) ++disagreements;
        if (brute) ++ajt_count;
      }
      json j{{"schema", kSchemaVersion}, {"scan", "ajt"},
             {"q", scan_q},              {"max_n", scan_n},
             {"count", scan_count},      {"seed", opt.seed},
             {"ajt_instances", ajt_count}, {"disagreements", disagreements}};
      emit(out, j, opt.format);
      return disagreements == 0 ? kExitOk : kExitCounterexample;
    }

    if (hyper_check->parsed()) {
      MatrixGF m = parse_matrix(read_input(hyper_file));
      FieldSpec f = m.field();
      int n = m.cols();
      long points = 1;
      for (int i = 0; i < n; ++i) {
        if (points > limit / f.q())
          throw std::invalid_argument("point count exceeds the element limit");
        points *= f.q();
      }
      std::vector<VectorGF> normals;
      for (int r = 0; r < m.rows(); ++r) normals.push_back(m.row(r));
      bool naive = true;
      for (long idx = 0; idx < points && naive; ++idx) {
        VectorGF pt = point_at(f, n, idx);
        bool on_some = false;
        for (const VectorGF& x : normals)
          if (scalar_product(x, pt) == 0) on_some = true;
        if (!on_some) naive = false;
      }
      json j{{"schema", kSchemaVersion}, {"covered", naive}};
      bool agree = true;
      if (f.prime_field() && f.q() > 2 && m.rows() <= kCubeSetLimit) {
        GroupPn g{f.q(), n};
        bool product = cover_product_zero(g, normals);
        bool parity = parity_cover_check(g, normals);
        j["product_zero"] = product;
        j["parity"] = parity;
        agree = product == naive && parity == naive;
      } else {
        j["product_zero"] = nullptr;
        j["parity"] = nullptr;
      }
      j["methods_agree"] = agree;
      emit(out, j, opt.format);
      return agree ? kExitOk : kExitCounterexample;
    }
    if (hyper_min->parsed()) {
      HyperplaneCoverResult r =
          min_hyperplane_cover(hyper_n, hyper_q, hyper_affine, opt.budget(), hyper_all);
      json j{{"schema", kSchemaVersion},
             {"invariant", hyper_affine ? "l" : "h"},
             {"n", hyper_n},
             {"q", hyper_q},
             {"nodes_expanded", r.nodes_expanded},
             {"status", to_string(r.status)}};
      if (r.attained) {
        j["value"] = r.value;
        json w = json::array();
        for (const AffineHyperplane& h : r.witness) w.push_back(affine_hyperplane_to_json(h));
        j["witness"] = w;
        if (hyper_all) j["minimal_system_count"] = r.all_minimal.size();
      } else if (r.unattainable) {
        j["value"] = "unattainable";
      } else {
        j["value"] = nullptr;
        j["lower_bound"] = r.value;
      }
      emit(out, j, opt.format);
      return status_exit(r.status);
    }
    if (hyper_ratio->parsed()) {
      std::istringstream in(read_input(hyper_file));
      std::vector<AffineHyperplane> system = read_affine_system(in);
      HyperplaneRatioReport report = hyperplane_ratio_report(system);
      json j{{"schema", kSchemaVersion},
             {"k", report.k},
             {"codimension", report.codimension},
             {"covers", report.covers},
             {"irredundant", report.irredundant},
             {"theorem_applies", report.theorem_applies},
             {"bound_holds", report.bound_holds}};
      emit(out, j, opt.format);
      // the bound is asserted only where the hypothesis applies
      if (report.theorem_applies && report.covers && report.irredundant &&
          !report.bound_holds)
        return kExitCounterexample;
      return kExitOk;
    }

    if (basis_additive->parsed()) {
      MatrixGF m = parse_matrix(read_input(basis_file));
      std::vector<VectorGF> vectors;
      for (int r = 0; r < m.rows(); ++r) vectors.push_back(m.row(r));
      VectorGF target = gf_vector(m.field(), parse_int_list(basis_target));
      auto subset = zero_one_representable(vectors, target);
      json j{{"schema", kSchemaVersion}, {"representable", subset.has_value()}};
      j["subset"] = subset ? json(*subset) : json(nullptr);
      emit(out, j, opt.format);
      return kExitOk;
    }
    if (basis_nz->parsed() || basis_cover->parsed()) {
      MatrixGF m = parse_matrix(read_input(basis_file));
      if (basis_count < 1 || m.rows() != basis_count * m.cols())
        throw std::invalid_argument("stacked bases need rows = k * n");
      int n = m.cols();
      std::vector<MatrixGF> bases;
      for (int b = 0; b < basis_count; ++b) {
        std::vector<VectorGF> rows;
        for (int r = 0; r < n; ++r) rows.push_back(m.row(b * n + r));
        bases.push_back(MatrixGF::from_rows(rows));
      }
      VectorGF target = gf_vector(m.field(), parse_int_list(basis_target));
      if (basis_nz->parsed()) {
        auto coeff = nowhere_zero_combination(bases, target);
        json j{{"schema", kSchemaVersion}, {"exists", coeff.has_value()}};
        j["coefficients"] = coeff ? json(*coeff) : json(nullptr);
        emit(out, j, opt.format);
        return kExitOk;
      }
      auto instance = bases_to_affine_cover(bases, target);
      if (!instance) {
        err << "target admits a nowhere-zero combination; nothing to cover\n";
        return kExitInvalidInput;
      }
      json j{{"schema", kSchemaVersion},
             {"dim_u", instance->dim_u},
             {"blocking_indices", instance->blocking_indices},
             {"covers", instance->covers},
             {"irredundant", instance->irredundant},
             {"particular_solution", instance->particular_solution.e}};
      j["cover_ratio"] =
          instance->cover_ratio ? json(*instance->cover_ratio) : json(nullptr);
      j["k_ratio"] = instance->k_ratio ? json(*instance->k_ratio) : json(nullptr);
      emit(out, j, opt.format);
      return kExitOk;
    }

    if (matroid_rank->parsed() || matroid_pack->parsed()) {
      LinearMatroid m = matroid_from_matrix(parse_matrix(read_input(matroid_file)));
      std::vector<int> subset;
      if (matroid_subset.empty()) {
        subset.resize(m.ground.size());
        for (std::size_t i = 0; i < m.ground.size(); ++i) subset[i] = static_cast<int>(i);
      } else {
        subset = parse_int_list(matroid_subset);
      }
      if (matroid_rank->parsed()) {
        json j{{"schema", kSchemaVersion}, {"rank", rank_subset(m, subset)},
               {"subset", subset}};
        emit(out, j, opt.format);
        return kExitOk;
      }
      if (matroid_k > 0) {
        auto x = packing_subset(m, matroid_k);
        json j{{"schema", kSchemaVersion}, {"k", matroid_k},
               {"found", x.has_value()}};
        j["subset"] = x ? json(*x) : json(nullptr);
        emit(out, j, opt.format);
        return kExitOk;
      }
      PackingResult r = max_disjoint_bases(m, subset);
      json j{{"schema", kSchemaVersion}, {"value", r.value}, {"bases", r.packing.bases}};
      emit(out, j, opt.format);
      return kExitOk;
    }

    if (graph_color->parsed()) {
      std::istringstream in(read_input(graph_file));
      Graph g = read_graph(in);
      auto coloring = colorable_naive(g, color_q);
      json j{{"schema", kSchemaVersion}, {"q", color_q},
             {"colorable", coloring.has_value()}};
      j["coloring"] = coloring ? json(*coloring) : json(nullptr);
      bool agree = true;
      bool prime_power = true;
      try {
        field_make(color_q);
      } catch (const std::invalid_argument&) {
        prime_power = false;
      }
      long points = 1;
      bool small_enough = true;
      for (int i = 0; i < g.vertex_count() && small_enough; ++i) {
        if (points > limit / std::max(color_q, 1)) small_enough = false;
        points *= color_q;
      }
      if (prime_power && small_enough) {
        bool cover = colorable_via_cover(g, color_q);
        j["cover"] = cover;
        agree = agree && cover == coloring.has_value();
      } else {
        j["cover"] = nullptr;
      }
      auto factors = factorize(std::max(color_q, 1));
      bool odd_prime = factors.size() == 1 && factors[0].second == 1 && color_q > 2;
      if (odd_prime && g.edge_count() <= kCubeSetLimit && small_enough) {
        bool parity = colorable_via_parity(g, color_q);
        j["parity"] = parity;
        agree = agree && parity == coloring.has_value();
      } else {
        j["parity"] = nullptr;
      }
      j["methods_agree"] = agree;
      emit(out, j, opt.format);
      return agree ? kExitOk : kExitCounterexample;
    }
    if (graph_flow->parsed()) {
      std::istringstream in(read_input(graph_file));
      Graph g = read_graph(in);
      FiniteAbelianGroup a = parse_group(flow_group, limit);
      FlowSpace space = flow_space(g, a);
      auto witness = nz_flow_exists(g, a);
      json j{{"schema", kSchemaVersion},
             {"group", a.spec_string()},
             {"dimension", space.dimension()},
             {"flow_count", space.flow_count()},
             {"nowhere_zero", witness.has_value()}};
      if (witness) {
        json w = json::array();
        for (const GroupElement& e : *witness) w.push_back(e.coords);
        j["witness"] = w;
      } else {
        j["witness"] = nullptr;
        // Edge minimality is reported, never asserted: the bound it feeds
        // has no closed form at this scale.
        bool edge_minimal = true;
        for (int drop = 0; drop < g.edge_count(); ++drop) {
          std::vector<std::pair<int, int>> kept;
          for (int e = 0; e < g.edge_count(); ++e)
            if (e != drop) kept.push_back(g.edges()[static_cast<std::size_t>(e)]);
          Graph smaller(g.vertex_count(), kept, /*normalize_orientation=*/false);
          if (!nz_flow_exists(smaller, a).has_value()) edge_minimal = false;
        }
        j["edge_minimal"] = edge_minimal;
        j["edge_count"] = g.edge_count();
        j["flow_group_order"] = space.flow_count();
      }
      emit(out, j, opt.format);
      return kExitOk;
    }

    if (suite_cmd->parsed()) {
      json report = run_suite(suite_name, opt.suite_config());
      if (!suite_out.empty()) {
        std::ofstream file(suite_out);
        if (!file) throw std::invalid_argument("cannot open output file: " + suite_out);
        file << report.dump(2) << "\n";
      }
      emit(out, report, opt.format);
      return report.at("pass").get<bool>() ? kExitOk : kExitCounterexample;
    }
    if (evidence_cmd->parsed()) {
      std::optional<std::string> from;
      if (!evidence_from.empty()) from = evidence_from;
      json report = evidence_report(opt.suite_config(), from);
      emit(out, report, opt.format);
      for (const auto& [name, entry] : report.at("entries").items()) {
        std::string status = entry.value("status", "");
        if (status.find("counterexample found") != std::string::npos)
          return kExitCounterexample;
      }
      return kExitOk;
    }
  } catch (const BudgetExhausted& e) {
    err << e.what() << "\n";
    return kExitBudget;
  } catch (const json::exception& e) {
    err << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return kExitInvalidInput;
  }

  err << "no command executed\n";
  return kExitInvalidInput;
}

}  // namespace covercraft
