// vmrank: command-line front end for the vertex-model lab.
//
// Exit codes: 0 all checks passed, 1 an asserted identity failed,
// 2 malformed input, 3 a guard was exceeded.
#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "vmrank/vmrank.hpp"

namespace {

using namespace vmrank;

constexpr int kExitPass = 0;
constexpr int kExitAssertion = 1;
constexpr int kExitInput = 2;
constexpr int kExitGuard = 3;

struct Config {
  std::string format = "tsv";
  std::uint64_t seed = 1;
  int max_permutation_degree = 5;
  std::size_t frontier_guard = 20;
  int catalog_vertices = 2;
  std::optional<int> catalog_edges;
  std::string model;
  int colors = 2;
  int max_degree = 16;
};

Config config;

VertexModel load_model() {
  const std::string& choice = config.model;
  const int n = config.colors, d = config.max_degree;
  if (choice.empty() || choice == "random") return random_model(n, d, config.seed);
  if (choice == "ones") return ones_model(n, d);
  if (choice == "matchings") return matchings_model(d);
  if (choice == "parity") return parity_model(d);
  return io::model_from_json(io::read_document(choice));
}

InvariantOracle oracle(const VertexModel& y) {
  ContractionOptions options;
  options.frontier_guard = config.frontier_guard;
  return partition_oracle(y, options);
}

void require_degree(int m, const char* what) {
  if (m < 0) throw InputError(std::string(what) + " must be nonnegative");
  if (m > config.max_permutation_degree) {
    throw GuardViolation(std::string(what) + " = " + std::to_string(m) + " exceeds --max-permutation-degree " +
                         std::to_string(config.max_permutation_degree));
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, sep);)
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<int> parse_indices(const std::string& text) {
  std::vector<int> out;
  for (const auto& item : split(text, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || used == 0) throw InputError("not an integer list: '" + text + "'");
    out.push_back(value);
  }
  return out;
}

FragmentCatalog catalog_for(int arity, int default_edges) {
  const CatalogBounds bounds{config.catalog_vertices, config.catalog_edges.value_or(default_edges)};
  CatalogGuard guard;
  guard.max_edges = std::max(guard.max_edges, 2 * (arity / 2) + 2);
  return enumerate_fragments(arity, bounds, guard);
}

std::string catalog_parameters(const FragmentCatalog& cat) {
  return "V*=" + std::to_string(cat.bounds.max_vertices) + " E*=" + std::to_string(cat.bounds.max_edges) +
         " size=" + std::to_string(cat.items.size());
}

int emit(const Report& report) {
  std::cout << (config.format == "json" ? report.to_json() : report.to_tsv());
  for (const auto& row : report.rows()) {
    if (!row.pass) {
      std::cerr << "assertion failed: " << row.experiment << " [" << row.parameters << "] " << row.lhs
                << " != " << row.rhs << '\n';
      return kExitAssertion;
    }
  }
  return kExitPass;
}

// ---------------------------------------------------------------------------

int cmd_eval(const std::string& graph_path, bool brute) {
  const VertexModel y = load_model();
  const MultiGraph g = io::graph_from_json(io::read_document(graph_path));
  ContractionOptions options;
  options.frontier_guard = config.frontier_guard;
  const GaussianRational value = brute ? partition_function(y, g) : partition_function_contracted(y, g, options);
  if (config.format == "json") {
    std::cout << nlohmann::ordered_json{{"value", value.to_string()}}.dump() << '\n';
  } else {
    std::cout << value << '\n';
  }
  return kExitPass;
}

int cmd_tensor(const std::string& fragment_path) {
  const VertexModel y = load_model();
  const Fragment f = io::fragment_from_json(io::read_document(fragment_path));
  const FragmentTensor t = fragment_tensor(y, f);
  std::vector<int> phi(static_cast<std::size_t>(f.arity()), 0);
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  if (config.format != "json") std::cout << "phi\tvalue\n";
  for (std::size_t index = 0; index < t.entries().size(); ++index) {
    std::string key;
    for (std::size_t i = 0; i < phi.size(); ++i) key += (i ? "," : "") + std::to_string(phi[i] + 1);
    if (config.format == "json") {
      entries.push_back({{"phi", key}, {"value", t[index].to_string()}});
    } else {
      std::cout << (key.empty() ? "()" : key) << '\t' << t[index] << '\n';
    }
    for (std::size_t i = phi.size(); i-- > 0;) {
      if (++phi[i] < y.colors()) break;
      phi[i] = 0;
    }
  }
  if (config.format == "json") {
    std::cout << nlohmann::ordered_json{{"colors", t.colors()}, {"arity", t.arity()}, {"entries", entries}}.dump(2)
              << '\n';
  }
  return kExitPass;
}

int cmd_connmat(int k) {
  const VertexModel y = load_model();
  const FragmentCatalog cat = catalog_for(k, CatalogBounds{}.max_edges);
  const ExactMatrix c = connection_matrix(oracle(y), cat.items);
  if (config.format == "json") {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < c.rows(); ++r) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (std::size_t col = 0; col < c.cols(); ++col) row.push_back(c(r, col).to_string());
      rows.push_back(row);
    }
    std::cout << nlohmann::ordered_json{{"arity", k}, {"size", c.rows()}, {"matrix", rows}}.dump() << '\n';
  } else {
    for (std::size_t r = 0; r < c.rows(); ++r) {
      for (std::size_t col = 0; col < c.cols(); ++col) std::cout << (col ? "\t" : "") << c(r, col);
      std::cout << '\n';
    }
  }
  return kExitPass;
}

int cmd_rank(int k) {
  const VertexModel y = load_model();
  const FragmentCatalog cat = catalog_for(k, CatalogBounds{}.max_edges);
  const RankBoundReport r = rank_bound_check(y, cat);
  const std::string params = "n=" + std::to_string(y.colors()) + " k=" + std::to_string(k) + " " + catalog_parameters(cat);
  Report report;
  report.add({"rank_bound", params, std::to_string(r.rank), "<=" + std::to_string(r.bound), r.rank <= r.bound});
  report.add({"gram_identity", params, "C", r.gram_identity ? "T^T T" : "not T^T T", r.gram_identity});
  return emit(report);
}

int cmd_mnd(int n, const std::string& d_list) {
  require_degree(n, "n");
  std::vector<GaussianRational> ds;
  for (const auto& item : split(d_list, ',')) ds.push_back(GaussianRational::parse(item));
  if (ds.empty()) throw InputError("empty d list");
  Report report;
  for (const auto& d : ds) {
    const std::size_t formula = m_rank_formula(n, d);
    const std::size_t computed = rank(m_matrix(n, d, config.max_permutation_degree));
    report.add({"mnd", "n=" + std::to_string(n) + " d=" + d.to_string(), std::to_string(computed),
                std::to_string(formula), computed == formula});
  }
  if (config.format == "json") return emit(report);
  std::cout << "d\tcomputed_rank\tformula_rank\tmatch\n";
  int status = kExitPass;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    const auto& row = report.rows()[i];
    std::cout << ds[i] << '\t' << row.lhs << '\t' << row.rhs << '\t' << (row.pass ? "ok" : "MISMATCH") << '\n';
    if (!row.pass && status == kExitPass) {
      std::cerr << "assertion failed: rank of M_" << n << "(" << ds[i] << ") is " << row.lhs << ", formula gives "
                << row.rhs << '\n';
      status = kExitAssertion;
    }
  }
  return status;
}

int cmd_charsum(int n) {
  Report report;
  for (const auto& lambda : partitions_of(n)) {
    const Polynomial lhs = char_sum_lhs(lambda), rhs = char_sum_rhs(lambda);
    report.add({"charsum", lambda.to_string(), lhs.to_string(), rhs.to_string(), lhs == rhs});
  }
  if (config.format == "json") return emit(report);
  std::cout << "lambda\tlhs\trhs\tmatch\n";
  int status = kExitPass;
  for (const auto& row : report.rows()) {
    std::cout << row.parameters << '\t' << row.lhs << '\t' << row.rhs << '\t' << (row.pass ? "ok" : "MISMATCH") << '\n';
    if (!row.pass && status == kExitPass) {
      std::cerr << "assertion failed: character sum for " << row.parameters << '\n';
      status = kExitAssertion;
    }
  }
  return status;
}

struct CriterionArgs {
  int instances = 50;
  std::optional<int> u_size;
  int max_vertices = 5;
  int max_edges = 5;
  std::string graph;
  std::string u_set;
  std::string targets;
};

int cmd_criterion(const CriterionArgs& args) {
  const VertexModel y = load_model();
  const auto f = oracle(y);
  const int n = y.colors();
  Report report;
  auto record = [&](const std::string& params, const MultiGraph& g, const std::vector<int>& u, const std::vector<int>& s) {
    require_degree(static_cast<int>(u.size()), "|U|");
    const GaussianRational sum = criterion_sum(f, g, u, s);
    const bool asserted = static_cast<int>(u.size()) >= n + 1;
    report.add({"criterion", params + " |U|=" + std::to_string(u.size()), sum.to_string(), asserted ? "0" : "n/a",
                !asserted || sum.is_zero()});
  };
  if (!args.graph.empty()) {
    const MultiGraph g = io::graph_from_json(io::read_document(args.graph));
    const std::vector<int> u = parse_indices(args.u_set), s = parse_indices(args.targets);
    if (u.size() != s.size()) throw InputError("--u and --s must have the same length");
    record("graph=" + args.graph, g, u, s);
    return emit(report);
  }
  if (args.instances < 0) throw InputError("--instances must be nonnegative");
  std::mt19937_64 rng(config.seed);
  const int u_size = args.u_size.value_or(n + 1);
  for (int t = 0; t < args.instances; ++t) {
    const CriterionInstance inst = random_criterion_instance(rng, u_size, args.max_vertices, args.max_edges);
    record("seed=" + std::to_string(config.seed) + " instance=" + std::to_string(t) + " V=" +
               std::to_string(inst.graph.vertex_count()) + " E=" + std::to_string(inst.graph.edge_count()),
           inst.graph, inst.u_set, inst.targets);
  }
  return emit(report);
}

int cmd_glueid(const std::string& fragment_path, int m, const std::string& rho_text, const std::string& sigma_text) {
  require_degree(m, "m");
  const VertexModel y = load_model();
  const auto f = oracle(y);
  const Fragment x = io::fragment_from_json(io::read_document(fragment_path));
  std::vector<Permutation> rhos, sigmas;
  if (!rho_text.empty()) rhos.push_back(Permutation::parse_one_based(rho_text));
  if (!sigma_text.empty()) sigmas.push_back(Permutation::parse_one_based(sigma_text));
  if (rhos.empty()) rhos = all_permutations(m);
  if (sigmas.empty()) sigmas = all_permutations(m);
  Report report;
  for (const auto& rho : rhos)
    for (const auto& sigma : sigmas) {
      const IdentityResult r = glue_identity_check(f, x, rho, sigma);
      report.add({"glueid",
                  "k=" + std::to_string(x.arity() / 2) + " m=" + std::to_string(rho.size()) + " rho=" +
                      rho.to_string_one_based() + " sigma=" + sigma.to_string_one_based(),
                  r.lhs.to_string(), r.rhs.to_string(), r.holds()});
    }
  return emit(report);
}

int cmd_kernelq() {
  const VertexModel y = load_model();
  const int n = y.colors();
  const int k = n + 1;
  require_degree(k, "k = n+1");
  const FragmentCatalog cat = catalog_for(2 * k, 2 * k + 2);
  const auto f = oracle(y);
  const LinearCombo q = antisymmetrizer(k);
  Report report;
  for (std::size_t i = 0; i < cat.items.size(); ++i) {
    const GaussianRational value = glue_value(f, q, cat.items[i]);
    report.add({"kernelq", "n=" + std::to_string(n) + " k=" + std::to_string(k) + " " + catalog_parameters(cat) +
                               " H=" + std::to_string(i),
                value.to_string(), "0", value.is_zero()});
  }
  return emit(report);
}

int cmd_catalog(int k) {
  const FragmentCatalog cat = catalog_for(k, CatalogBounds{}.max_edges);
  if (config.format == "json") {
    nlohmann::ordered_json items = nlohmann::ordered_json::array();
    for (const auto& f : cat.items) items.push_back(io::to_json(f));
    std::cout << nlohmann::ordered_json{{"arity", k},
                                        {"max_vertices", cat.bounds.max_vertices},
                                        {"max_edges", cat.bounds.max_edges},
                                        {"items", items}}
                     .dump()
              << '\n';
    return kExitPass;
  }
  std::cout << "index\tunlabeled\tedges\tfree_loops\tfragment\n";
  for (std::size_t i = 0; i < cat.items.size(); ++i) {
    const Fragment& f = cat.items[i];
    std::cout << i << '\t' << f.unlabeled_count() << '\t' << f.graph().edge_count() << '\t' << f.graph().free_loops()
              << '\t' << io::to_json(f).dump() << '\n';
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact vertex-model partition functions, connection matrices and symmetric-group identities"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", config.format, "Output format")->check(CLI::IsMember({"tsv", "json"}));
  app.add_option("--seed", config.seed, "Seed for random models and random instances");
  app.add_option("--max-permutation-degree", config.max_permutation_degree,
                 "Largest m for which S_m is enumerated");
  app.add_option("--frontier-guard", config.frontier_guard, "Largest frontier of the contraction evaluator");
  app.add_option("--catalog-vertices", config.catalog_vertices, "Catalog bound V* on unlabeled vertices");
  app.add_option("--catalog-edges", config.catalog_edges, "Catalog bound E* on edges");
  app.add_option("--model", config.model,
                 "Model JSON file, or one of random|ones|matchings|parity (default random)");
  app.add_option("--n", config.colors, "Colors of a built-in model")->check(CLI::PositiveNumber);
  app.add_option("--max-degree", config.max_degree, "Degree bound D of a built-in model")->check(CLI::NonNegativeNumber);

  int status = kExitPass;

  std::string model_path, graph_path;
  bool brute = false;
  auto* eval = app.add_subcommand("eval", "Print p_y(G) for a model file and a graph file");
  eval->add_option("model", model_path, "Model JSON file (or built-in name)")->required();
  eval->add_option("graph", graph_path, "Graph JSON file")->required();
  eval->add_flag("--brute", brute, "Use brute-force enumeration instead of contraction");
  eval->callback([&] {
    config.model = model_path;
    status = cmd_eval(graph_path, brute);
  });

  std::string fragment_path;
  auto* tensor = app.add_subcommand("tensor", "Print the boundary tensor of a fragment");
  tensor->add_option("fragment", fragment_path, "Fragment JSON file")->required();
  tensor->callback([&] { status = cmd_tensor(fragment_path); });

  int k = 1;
  auto* connmat = app.add_subcommand("connmat", "Print C_{p_y,k} over a generated catalog");
  connmat->add_option("--k", k, "Arity")->check(CLI::NonNegativeNumber);
  connmat->callback([&] { status = cmd_connmat(k); });

  auto* rank_cmd = app.add_subcommand("rank", "Check rank(C_{p_y,k}) <= n^k and the Gram factorization");
  rank_cmd->add_option("--k", k, "Arity")->check(CLI::NonNegativeNumber);
  rank_cmd->callback([&] { status = cmd_rank(k); });

  int n = 0;
  std::string d_list;
  auto* mnd = app.add_subcommand("mnd", "Compare rank M_n(d) with the predicted rank");
  mnd->add_option("n", n, "Permutation degree")->required();
  mnd->add_option("d", d_list, "Comma-separated values of d, e.g. 0,1,2,1/2")->required();
  mnd->callback([&] { status = cmd_mnd(n, d_list); });

  auto* charsum = app.add_subcommand("charsum", "Compare both sides of the character-sum identity for every shape of n");
  charsum->add_option("n", n, "Size of the shapes")->required()->check(CLI::NonNegativeNumber);
  charsum->callback([&] { status = cmd_charsum(n); });

  CriterionArgs criterion_args;
  auto* criterion = app.add_subcommand("criterion", "Signed pinning sums over S_U (random or explicit instances)");
  criterion->add_option("--instances", criterion_args.instances, "Random instances");
  criterion->add_option("--u-size", criterion_args.u_size, "|U| (default n+1)");
  criterion->add_option("--max-vertices", criterion_args.max_vertices, "Vertices of random graphs");
  criterion->add_option("--max-edges", criterion_args.max_edges, "Edges of random graphs");
  criterion->add_option("--graph", criterion_args.graph, "Graph JSON file for an explicit instance");
  criterion->add_option("--u", criterion_args.u_set, "Explicit U, 0-based vertex list");
  criterion->add_option("--s", criterion_args.targets, "Explicit s(u) for each u in U");
  criterion->callback([&] { status = cmd_criterion(criterion_args); });

  int m = 2;
  std::string rho, sigma;
  auto* glueid = app.add_subcommand("glueid", "Check f(x^(m) P_rho . P_sigma) against the orbit product of tau");
  glueid->add_option("fragment", fragment_path, "Fragment JSON file of arity 2k")->required();
  glueid->add_option("--m", m, "Tensor power");
  glueid->add_option("--rho", rho, "rho as 1-based images (default: all of S_m)");
  glueid->add_option("--sigma", sigma, "sigma as 1-based images (default: all of S_m)");
  glueid->callback([&] { status = cmd_glueid(fragment_path, m, rho, sigma); });

  auto* kernelq = app.add_subcommand("kernelq", "Check that the antisymmetrizer on n+1 strands is in the kernel");
  kernelq->callback([&] { status = cmd_kernelq(); });

  auto* catalog = app.add_subcommand("catalog", "List the generated fragment catalog");
  catalog->add_option("--k", k, "Arity")->check(CLI::NonNegativeNumber);
  catalog->callback([&] { status = cmd_catalog(k); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInput;
  } catch (const GuardViolation& e) {
    std::cerr << "guard violation: " << e.what() << '\n';
    return kExitGuard;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::domain_error& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  }
  return status;
}
