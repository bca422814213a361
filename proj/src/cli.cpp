#include "gcond/cli.hpp"

#include "gcond/alternating.hpp"
#include "gcond/errors.hpp"
#include "gcond/generators.hpp"
#include "gcond/graph_io.hpp"
#include "gcond/identities.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace gcond::cli {

namespace {

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(csv);
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

nlohmann::ordered_json marking_to_json(const MarkedSelection& m) {
  nlohmann::ordered_json j;
  j["A"] = m.a;
  j["B"] = m.b;
  j["A1"] = std::vector<VertexId>(m.a1.begin(), m.a1.end());
  j["A2"] = std::vector<VertexId>(m.a2.begin(), m.a2.end());
  j["AK"] = std::vector<VertexId>(m.ak.begin(), m.ak.end());
  j["AH"] = std::vector<VertexId>(m.ah.begin(), m.ah.end());
  return j;
}

struct VerifyArgs {
  std::string identity;
  std::string graph_file;
  std::string marked_csv;   // prop4
  std::string a_csv, b_csv, a1_csv, ah_csv;
  size_t vertex_cap = 24;
  std::string format = "table";
  bool allow_degenerate_k = false;
};

IdentityReport dispatch_verify(const VerifyArgs& va, const PlaneGraph& g) {
  EnumerationLimits limits{va.vertex_cap};
  if (va.identity == "prop4") {
    auto marked = split_list(va.marked_csv);
    if (marked.size() != 4)
      throw std::invalid_argument("prop4 needs --marked a,b,c,d");
    return verify_prop_four_vertices(g, marked[0], marked[1], marked[2], marked[3],
                                     limits);
  }

  MarkedSelection m;
  m.a = split_list(va.a_csv);
  m.b = split_list(va.b_csv);

  if (va.identity == "pfaffian") {
    auto ah = split_list(va.ah_csv);
    m.ah = VertexSet(ah.begin(), ah.end());
    for (const auto& v : m.a)
      if (!m.ah.count(v)) m.ak.insert(v);
    for (const auto& v : m.ah)
      if (std::find(m.a.begin(), m.a.end(), v) == m.a.end())
        throw std::invalid_argument("--AH entry " + v + " is not in --A");
    return verify_pfaffian_identity(g, m, limits);
  }
  if (va.identity == "determinant") return verify_determinant_identity(g, m, limits);

  auto a1 = split_list(va.a1_csv);
  m.a1 = VertexSet(a1.begin(), a1.end());
  for (const auto& v : m.a1)
    if (std::find(m.a.begin(), m.a.end(), v) == m.a.end())
      throw std::invalid_argument("--A1 entry " + v + " is not in --A");
  for (const auto& v : m.a)
    if (!m.a1.count(v)) m.a2.insert(v);

  if (va.identity == "even-partition")
    return verify_even_partition(g, m, limits, va.allow_degenerate_k);
  if (va.identity == "odd-partition")
    return verify_odd_partition(g, m, limits, va.allow_degenerate_k);
  if (va.identity == "bipartite-balanced")
    return verify_bipartite_balanced(g, m, limits);
  if (va.identity == "bipartite-offset")
    return verify_bipartite_offset(g, m, limits);
  throw std::invalid_argument("unknown identity: " + va.identity);
}

// ---- campaign ----

struct CampaignConfig {
  std::string identity;
  size_t trials = 100;
  uint64_t seed = 1;
  size_t max_vertices = 16;
  std::string weights = "random";
  int k = 2;
  int size = 4;
  size_t vertex_cap = 24;
  unsigned workers = 1;
  std::string format = "table";
  std::string counterexample_dir = "counterexamples";
};

struct TrialOutcome {
  enum Kind { pass, skip, fail, error } kind = skip;
  std::string detail;
  PlaneGraph graph;
  MarkedSelection marking;
  IdentityReport report;
};

uint64_t trial_seed(uint64_t seed, size_t trial) {
  uint64_t x = seed + 0x9E3779B97F4A7C15ULL * (trial + 1);
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  return x;
}

int even_in_range(RandomSource& rng, int lo, int hi) {
  lo += lo % 2;
  if (hi < lo) return lo;
  int steps = (hi - lo) / 2 + 1;
  return lo + 2 * static_cast<int>(rng.below(steps));
}

PlaneGraph build_host(const CampaignConfig& cfg, RandomSource& rng) {
  const int maxv = static_cast<int>(cfg.max_vertices);
  const int k = cfg.k;
  // the pfaffian and determinant identities are unweighted statements
  bool unit = cfg.weights == "unit" || cfg.identity == "pfaffian" ||
              cfg.identity == "determinant";
  WeightMode wm = unit ? WeightMode::unit : WeightMode::random_rational;
  auto weighted = [&](PlaneGraph g) { return apply_weights(g, wm, 5, rng); };

  const std::string& id = cfg.identity;
  if (id == "odd-partition") {
    switch (rng.below(3)) {
      case 0: {
        int n = even_in_range(rng, std::max(2 * k + 2, 6), maxv) - 1;
        return weighted(make_fan(n));
      }
      case 1: {
        int n = even_in_range(rng, std::max(2 * k + 2, 6), maxv) - 1;
        return weighted(make_cycle(n));
      }
      default: {
        int n = even_in_range(rng, std::max(2 * k + 2, 6), maxv) - 1;
        RandomSource sub(rng.next());
        return weighted(make_random_outerplanar(n, sub));
      }
    }
  }
  if (id == "bipartite-offset") {
    int n = even_in_range(rng, 2 * k + 2, maxv - k);
    std::vector<int> odd_positions;
    for (int p = 1; p <= n - 2; p += 2) odd_positions.push_back(p);
    RandomSource sub(rng.next());
    sub.shuffle(odd_positions);
    odd_positions.resize(k);
    std::sort(odd_positions.begin(), odd_positions.end());
    return weighted(make_pendant_path(n, odd_positions));
  }
  if (id == "bipartite-balanced" || id == "determinant") {
    switch (rng.below(3)) {
      case 0: {
        int span = std::max(1, maxv / 2 - 1);
        int cols = 2 + static_cast<int>(rng.below(span));
        return weighted(make_grid(2, cols));
      }
      case 1: return weighted(make_cycle(even_in_range(rng, 2 * k + 2, maxv)));
      default: return weighted(make_path(even_in_range(rng, 2 * k + 2, maxv)));
    }
  }
  // even-partition and pfaffian share the even-host families.
  switch (rng.below(3)) {
    case 0: {
      int rows = 2 + static_cast<int>(rng.below(2));
      int span = std::max(1, maxv / rows - 1);
      int cols = 2 + static_cast<int>(rng.below(span));
      if (rows * cols > maxv) cols = std::max(2, maxv / rows);
      if ((rows * cols) % 2 != 0) --cols;
      return weighted(make_grid(rows, std::max(2, cols)));
    }
    case 1: return weighted(make_cycle(even_in_range(rng, std::max(2 * k + 2, 4), maxv)));
    default: {
      int n = even_in_range(rng, std::max(2 * k + 2, 4), maxv);
      RandomSource sub(rng.next());
      return weighted(make_random_outerplanar(n, sub));
    }
  }
}

TrialOutcome run_trial(const CampaignConfig& cfg, size_t trial) {
  TrialOutcome out;
  RandomSource rng(trial_seed(cfg.seed, trial));
  EnumerationLimits limits{cfg.vertex_cap};
  try {
    PlaneGraph g = build_host(cfg, rng);
    if (g.vertex_count() > cfg.max_vertices)
      throw HypothesisError("no host family fits the vertex bound");
    out.graph = g;

    std::vector<MarkedSelection> markings;
    const std::string& id = cfg.identity;
    if (id == "pfaffian") {
      markings = search_unique_matching_markings(g, cfg.size,
                                                 UniqueSearchMode::pfaffian, 64, limits);
    } else if (id == "determinant") {
      markings = search_unique_matching_markings(g, cfg.size,
                                                 UniqueSearchMode::determinant, 64,
                                                 limits);
    } else {
      MarkingMode mode = MarkingMode::even_partition;
      if (id == "odd-partition") mode = MarkingMode::odd_partition;
      if (id == "bipartite-balanced") mode = MarkingMode::bipartite_balanced;
      if (id == "bipartite-offset") mode = MarkingMode::bipartite_offset;
      markings = sample_partition_markings(g, mode, cfg.k, rng, 32);
    }
    if (markings.empty()) {
      out.kind = TrialOutcome::skip;
      out.detail = "no marking satisfies the hypotheses";
      return out;
    }
    const MarkedSelection& m = markings[rng.below(markings.size())];
    out.marking = m;

    if (id == "prop4") {
      auto face = face_vertices(g);
      out.report = verify_prop_four_vertices(g, face[0], face[1], face[2], face[3],
                                             limits);
    } else if (id == "even-partition") {
      out.report = verify_even_partition(g, m, limits);
    } else if (id == "odd-partition") {
      out.report = verify_odd_partition(g, m, limits);
    } else if (id == "bipartite-balanced") {
      out.report = verify_bipartite_balanced(g, m, limits);
    } else if (id == "bipartite-offset") {
      out.report = verify_bipartite_offset(g, m, limits);
    } else if (id == "pfaffian") {
      out.report = verify_pfaffian_identity(g, m, limits);
    } else if (id == "determinant") {
      out.report = verify_determinant_identity(g, m, limits);
    } else {
      throw std::invalid_argument("unknown identity: " + id);
    }
    out.kind = out.report.pass ? TrialOutcome::pass : TrialOutcome::fail;
    if (!out.report.pass) out.detail = "lhs != rhs";
  } catch (const HypothesisError& e) {
    out.kind = TrialOutcome::skip;
    out.detail = e.what();
  } catch (const std::exception& e) {
    out.kind = TrialOutcome::error;
    out.detail = e.what();
  }
  return out;
}

int run_campaign(const CampaignConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<TrialOutcome> results(cfg.trials);
  std::atomic<size_t> cursor{0};
  auto worker = [&]() {
    for (;;) {
      size_t i = cursor.fetch_add(1);
      if (i >= cfg.trials) return;
      results[i] = run_trial(cfg, i);
    }
  };
  unsigned workers = std::max(1u, cfg.workers);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  size_t passes = 0, skips = 0, errors = 0;
  std::optional<size_t> first_fail;
  for (size_t i = 0; i < results.size(); ++i) {
    switch (results[i].kind) {
      case TrialOutcome::pass: ++passes; break;
      case TrialOutcome::skip: ++skips; break;
      case TrialOutcome::error: ++errors; break;
      case TrialOutcome::fail:
        if (!first_fail) first_fail = i;
        break;
    }
  }

  std::string bundle_path;
  if (first_fail) {
    const TrialOutcome& f = results[*first_fail];
    std::filesystem::create_directories(cfg.counterexample_dir);
    bundle_path = cfg.counterexample_dir + "/counterexample-" + cfg.identity +
                  "-trial" + std::to_string(*first_fail) + ".json";
    // The bundle is itself a graph file (the parser ignores the extra
    // fields), so it can be replayed with `verify` directly.
    auto bundle = nlohmann::ordered_json::parse(graph_to_text(f.graph));
    bundle["identity"] = cfg.identity;
    bundle["trial"] = *first_fail;
    bundle["seed"] = cfg.seed;
    bundle["marking"] = marking_to_json(f.marking);
    bundle["report"] = nlohmann::ordered_json::parse(render_structured(f.report));
    std::ofstream bf(bundle_path);
    bf << bundle.dump(2) << "\n";
    err << "counterexample found at trial " << *first_fail << "; bundle written to "
        << bundle_path << "\n";
  }

  size_t fails = cfg.trials - passes - skips - errors;
  if (cfg.format == "structured") {
    nlohmann::ordered_json j;
    j["identity"] = cfg.identity;
    j["seed"] = cfg.seed;
    j["trials"] = cfg.trials;
    j["passes"] = passes;
    j["hypothesis_skips"] = skips;
    j["counterexamples"] = fails;
    j["errors"] = errors;
    if (first_fail) j["counterexample_bundle"] = bundle_path;
    out << j.dump(2) << "\n";
  } else {
    out << "campaign: " << cfg.identity << "\n"
        << "trials: " << cfg.trials << "\n"
        << "passes: " << passes << "\n"
        << "hypothesis skips: " << skips << "\n"
        << "counterexamples: " << fails << "\n";
    if (errors) out << "errors: " << errors << "\n";
    if (first_fail) out << "bundle: " << bundle_path << "\n";
  }
  if (first_fail) return kExitIdentityFail;
  if (errors) {
    for (const auto& r : results)
      if (r.kind == TrialOutcome::error) {
        err << "trial error: " << r.detail << "\n";
        break;
      }
    return kExitError;
  }
  return kExitPass;
}

// ---- paths ----

int run_paths(const std::string& graph_file, const std::string& a_csv,
              const std::string& ah_csv, bool with_nests, size_t vertex_cap,
              const std::string& format, std::ostream& out) {
  PlaneGraph g = load_graph_file(graph_file);
  EnumerationLimits limits{vertex_cap};
  MarkedSelection m;
  m.a = split_list(a_csv);
  auto ah = split_list(ah_csv);
  m.ah = VertexSet(ah.begin(), ah.end());
  for (const auto& v : m.a)
    if (!m.ah.count(v)) m.ak.insert(v);

  auto order_check = check_cyclic_order(g, m.a);
  if (!order_check.ok) throw HypothesisError(order_check.message);

  PlaneGraph h = delete_vertices(g, m.ak);
  auto h_matchings = enumerate_matchings(h, limits);
  if (h_matchings.size() != 1)
    throw HypothesisError("H = G-AK has " + std::to_string(h_matchings.size()) +
                          " matchings; need exactly one");
  const Matching& mh = h_matchings[0];

  nlohmann::ordered_json j;
  j["A"] = m.a;
  j["AH"] = std::vector<VertexId>(m.ah.begin(), m.ah.end());
  auto render_path = [](const AlternatingPath& p) {
    std::string s = p.from;
    VertexId cur = p.from;
    for (size_t t = 0; t < p.edges.size(); ++t) {
      cur = (p.edges[t].u == cur) ? p.edges[t].v : p.edges[t].u;
      s += p.in_matching[t] ? " =" : " -";
      s += " " + cur;
    }
    return s;
  };

  std::ostringstream table;
  table << "H matching:";
  for (const auto& e : mh.edges) table << " " << e.u << "-" << e.v;
  table << "\n";

  auto pairs = nlohmann::ordered_json::array();
  const size_t n = m.a.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t jx = i + 1; jx < n; ++jx) {
      auto paths = enumerate_alternating_paths(g, mh, m.a[i], m.a[jx], limits);
      table << "paths " << m.a[i] << " .. " << m.a[jx] << ": " << paths.size() << "\n";
      nlohmann::ordered_json pj;
      pj["from"] = m.a[i];
      pj["to"] = m.a[jx];
      auto arr = nlohmann::ordered_json::array();
      for (const auto& p : paths) {
        table << "  " << render_path(p) << "\n";
        arr.push_back(render_path(p));
      }
      pj["paths"] = arr;
      pairs.push_back(pj);
    }
  j["pairs"] = pairs;

  if (with_nests) {
    auto census = enumerate_nests(g, mh, m.a, limits);
    Rational signed_sum(0);
    for (const auto& nest : census.non_intersecting) signed_sum += nest.sign();
    for (const auto& nest : census.intersecting) signed_sum += nest.sign();
    Rational mk = count_matchings(delete_vertices(g, m.ah), limits);
    table << "nests: non-intersecting " << census.non_intersecting.size()
          << ", intersecting " << census.intersecting.size() << ", signed sum "
          << to_string(signed_sum) << ", M(K) = " << to_string(mk) << "\n";
    j["nests"] = {{"non_intersecting", census.non_intersecting.size()},
                  {"intersecting", census.intersecting.size()},
                  {"signed_sum", to_string(signed_sum)},
                  {"M(K)", to_string(mk)}};
  }

  if (format == "structured")
    out << j.dump(2) << "\n";
  else
    out << table.str();
  return kExitPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact perfect-matching counts and graphical condensation "
               "identity checks"};
  app.require_subcommand(1);

  // count
  auto* count_cmd = app.add_subcommand("count", "print M(G) for a graph file");
  std::string count_file;
  size_t count_cap = 24;
  count_cmd->add_option("graph", count_file, "graph file")->required();
  count_cmd->add_option("--vertex-cap", count_cap, "enumeration vertex cap");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "check one identity on one instance");
  VerifyArgs va;
  verify_cmd->add_option("identity", va.identity,
                         "prop4 | even-partition | odd-partition | "
                         "bipartite-balanced | bipartite-offset | pfaffian | "
                         "determinant")
      ->required();
  verify_cmd->add_option("graph", va.graph_file, "graph file")->required();
  verify_cmd->add_option("--marked", va.marked_csv, "a,b,c,d for prop4");
  verify_cmd->add_option("--A", va.a_csv, "marked a_1..a_k, comma separated");
  verify_cmd->add_option("--B", va.b_csv, "marked b_1..b_k, comma separated");
  verify_cmd->add_option("--A1", va.a1_csv, "subset A1 of A (A2 is the rest)");
  verify_cmd->add_option("--AH", va.ah_csv, "subset AH of A (AK is the rest)");
  verify_cmd->add_option("--vertex-cap", va.vertex_cap, "enumeration vertex cap");
  verify_cmd->add_option("--format", va.format, "table | structured")
      ->check(CLI::IsMember({"table", "structured"}));
  verify_cmd->add_flag("--allow-degenerate-k", va.allow_degenerate_k,
                       "skip the 2 <= k <= n range check");

  // campaign
  auto* campaign_cmd = app.add_subcommand("campaign",
                                          "seeded batch verification over "
                                          "generated instances");
  CampaignConfig cfg;
  campaign_cmd->add_option("--identity", cfg.identity, "identity to verify")->required();
  campaign_cmd->add_option("--trials", cfg.trials, "number of trials");
  campaign_cmd->add_option("--seed", cfg.seed, "campaign seed");
  campaign_cmd->add_option("--max-vertices", cfg.max_vertices, "host size bound");
  campaign_cmd->add_option("--weights", cfg.weights, "unit | random")
      ->check(CLI::IsMember({"unit", "random"}));
  campaign_cmd->add_option("--k", cfg.k, "marked pairs per side");
  campaign_cmd->add_option("--size", cfg.size, "|A| for pfaffian, 2n for determinant");
  campaign_cmd->add_option("--vertex-cap", cfg.vertex_cap, "enumeration cap");
  campaign_cmd->add_option("--workers", cfg.workers, "concurrent trial workers");
  campaign_cmd->add_option("--format", cfg.format, "table | structured")
      ->check(CLI::IsMember({"table", "structured"}));
  campaign_cmd->add_option("--counterexample-dir", cfg.counterexample_dir,
                           "where failure bundles go");

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "emit a generated instance");
  std::string gen_family = "grid";
  InstanceSpec spec;
  std::string gen_weights = "unit";
  std::string gen_out_file;
  std::string gen_marking_mode = "none";
  gen_cmd->add_option("--family", gen_family,
                      "grid | cycle | path | ladder | aztec | fan | outerplanar")
      ->check(CLI::IsMember({"grid", "cycle", "path", "ladder", "aztec", "fan",
                             "outerplanar"}));
  gen_cmd->add_option("--rows", spec.rows, "grid rows");
  gen_cmd->add_option("--cols", spec.cols, "grid cols");
  gen_cmd->add_option("--n", spec.n, "size for cycle/path/ladder/fan/outerplanar");
  gen_cmd->add_option("--order", spec.order, "aztec diamond order");
  gen_cmd->add_option("--weights", gen_weights, "unit | random")
      ->check(CLI::IsMember({"unit", "random"}));
  gen_cmd->add_option("--seed", spec.seed, "generation seed");
  gen_cmd->add_option("--range", spec.weight_range, "random weights drawn from 1..range");
  gen_cmd->add_option("--marking-mode", gen_marking_mode,
                      "none | even-partition | odd-partition | bipartite-balanced | "
                      "bipartite-offset | pfaffian | determinant")
      ->check(CLI::IsMember({"none", "even-partition", "odd-partition",
                             "bipartite-balanced", "bipartite-offset", "pfaffian",
                             "determinant"}));
  gen_cmd->add_option("--k", spec.marking_k, "marked pairs per side");
  gen_cmd->add_option("--size", spec.marking_size, "|A| for pfaffian/determinant modes");
  gen_cmd->add_option("-o,--output", gen_out_file, "output file (default stdout)");

  // paths
  auto* paths_cmd = app.add_subcommand("paths",
                                       "dump alternating paths and nests for "
                                       "a pfaffian-style marking");
  std::string paths_file, paths_a, paths_ah, paths_format = "table";
  bool paths_nests = false;
  size_t paths_cap = 24;
  paths_cmd->add_option("graph", paths_file, "graph file")->required();
  paths_cmd->add_option("--A", paths_a, "marked a_1..a_n")->required();
  paths_cmd->add_option("--AH", paths_ah, "subset AH of A");
  paths_cmd->add_flag("--nests", paths_nests, "also enumerate nests");
  paths_cmd->add_option("--vertex-cap", paths_cap, "enumeration cap");
  paths_cmd->add_option("--format", paths_format, "table | structured")
      ->check(CLI::IsMember({"table", "structured"}));

  std::vector<std::string> argv(args);
  std::reverse(argv.begin(), argv.end());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitParse;
  }

  try {
    if (count_cmd->parsed()) {
      PlaneGraph g = load_graph_file(count_file);
      out << to_string(count_matchings(g, EnumerationLimits{count_cap})) << "\n";
      return kExitPass;
    }
    if (verify_cmd->parsed()) {
      PlaneGraph g = load_graph_file(va.graph_file);
      IdentityReport rep = dispatch_verify(va, g);
      out << (va.format == "structured" ? render_structured(rep) : render_table(rep));
      return rep.pass ? kExitPass : kExitIdentityFail;
    }
    if (campaign_cmd->parsed()) return run_campaign(cfg, out, err);
    if (gen_cmd->parsed()) {
      if (gen_family == "grid") spec.family = Family::grid;
      if (gen_family == "cycle") spec.family = Family::cycle;
      if (gen_family == "path") spec.family = Family::path;
      if (gen_family == "ladder") spec.family = Family::ladder;
      if (gen_family == "aztec") spec.family = Family::aztec_diamond;
      if (gen_family == "fan") spec.family = Family::fan;
      if (gen_family == "outerplanar") spec.family = Family::random_outerplanar;
      spec.weight_mode = gen_weights == "unit" ? WeightMode::unit
                                               : WeightMode::random_rational;
      if (gen_marking_mode == "even-partition") spec.marking_mode = MarkingMode::even_partition;
      if (gen_marking_mode == "odd-partition") spec.marking_mode = MarkingMode::odd_partition;
      if (gen_marking_mode == "bipartite-balanced")
        spec.marking_mode = MarkingMode::bipartite_balanced;
      if (gen_marking_mode == "bipartite-offset")
        spec.marking_mode = MarkingMode::bipartite_offset;
      if (gen_marking_mode == "pfaffian") spec.marking_mode = MarkingMode::pfaffian;
      if (gen_marking_mode == "determinant") spec.marking_mode = MarkingMode::determinant;

      auto [g, markings] = generate(spec);
      std::string text = graph_to_text(g);
      if (spec.marking_mode != MarkingMode::none) {
        auto j = nlohmann::ordered_json::parse(text);
        auto arr = nlohmann::ordered_json::array();
        for (const auto& m : markings) arr.push_back(marking_to_json(m));
        j["markings"] = arr;
        text = j.dump(2) + "\n";
      }
      if (gen_out_file.empty()) {
        out << text;
      } else {
        std::ofstream f(gen_out_file);
        if (!f) throw ParseError("cannot write " + gen_out_file);
        f << text;
      }
      return kExitPass;
    }
    if (paths_cmd->parsed())
      return run_paths(paths_file, paths_a, paths_ah, paths_nests, paths_cap,
                       paths_format, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const HypothesisError& e) {
    err << "hypothesis violation: " << e.what() << "\n";
    return kExitHypothesis;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace gcond::cli
