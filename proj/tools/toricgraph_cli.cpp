#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "toricgraph/enumerate.hpp"
#include "toricgraph/json_io.hpp"
#include "toricgraph/oracle.hpp"

using namespace toric;

namespace {

struct RunConfig {
  EnumCaps caps;
  long long pair_budget = 2'000'000;
  long long lp_budget = 200'000;
  long long time_budget_seconds = 0;  // 0 = unlimited
  std::string cache_dir;
  unsigned long long random_seed = 0;

  std::string fingerprint() const {
    std::ostringstream s;
    s << caps.max_cycle_len << ':' << caps.max_blocks << ':' << caps.candidate_budget << ':'
      << caps.cycle_budget << ':' << pair_budget << ':' << lp_budget << ':' << random_seed;
    return s.str();
  }
};

std::string read_file_or_stdin(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path);
  if (!in) throw error(errc::bad_argument, "cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Binomial load_binomial(const Graph& g, const std::string& path) {
  return binomial_from_json(g, json::parse(read_file_or_stdin(path)));
}

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    std::ofstream out(out_path);
    if (!out) throw error(errc::bad_argument, "cannot write " + out_path);
    out << text;
  }
}

// cache keyed by (graph bytes, subcommand, config fingerprint); a hit replays
// the stored output byte for byte
class Cache {
 public:
  Cache(const RunConfig& cfg, const std::string& subcommand, const std::string& graph_bytes) {
    if (cfg.cache_dir.empty() || graph_bytes.empty()) return;
    key_ = json{{"subcommand", subcommand},
                {"config", cfg.fingerprint()},
                {"graph", graph_bytes}};
    std::filesystem::create_directories(cfg.cache_dir);
    std::ostringstream name;
    name << std::hex << fnv1a(subcommand + '\0' + cfg.fingerprint() + '\0' + graph_bytes)
         << ".json";
    path_ = cfg.cache_dir + "/" + name.str();
  }

  bool lookup(std::string& out) const {
    if (path_.empty()) return false;
    std::ifstream in(path_);
    if (!in) return false;
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded() || j["key"] != key_) return false;
    out = j["output"].get<std::string>();
    return true;
  }

  void store(const std::string& out) const {
    if (path_.empty()) return;
    std::ofstream f(path_);
    f << json{{"key", key_}, {"output", out}};
  }

 private:
  json key_;
  std::string path_;
};

void enforce_deadline(const RunConfig& cfg, std::chrono::steady_clock::time_point start) {
  if (cfg.time_budget_seconds <= 0) return;
  auto elapsed =
      std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now() - start);
  if (elapsed.count() > cfg.time_budget_seconds)
    throw error(errc::time_budget, "time budget exceeded");
}

json verify_graph(const Graph& g, const RunConfig& cfg) {
  auto start = std::chrono::steady_clock::now();
  BasisReport s_circ = enumerate_circuits(g, cfg.caps);
  BasisReport s_grav = enumerate_graver(g, cfg.caps);
  BasisReport s_ugb = enumerate_ugb(g, cfg.caps);
  enforce_deadline(cfg, start);

  BinomialSet o_grav = graver_oracle(incidence_matrix(g), cfg.pair_budget);
  enforce_deadline(cfg, start);
  BinomialSet o_circ = circuits_from_graver(o_grav);
  BinomialSet o_ugb;
  long long lp_agreements = 0;
  for (const auto& b : o_grav) {
    bool lp = ugb_membership_lp(b, o_grav, cfg.lp_budget);
    if (lp) o_ugb.push_back(b);
    lp_agreements += lp == in_ugb_structural(g, b);
    enforce_deadline(cfg, start);
  }

  auto diff = [](const std::vector<Binomial>& a, const std::vector<Binomial>& b) {
    json only = json::array();
    for (const auto& x : a)
      if (std::find(b.begin(), b.end(), x) == b.end()) only.push_back(binomial_to_json(x));
    return only;
  };
  auto compare_sets = [&](const std::string& name, const std::vector<Binomial>& structural,
                          const std::vector<Binomial>& oracle, json& out) {
    out[name] = json{{"structural", structural.size()},
                     {"oracle", oracle.size()},
                     {"equal", structural == oracle},
                     {"structural_only", diff(structural, oracle)},
                     {"oracle_only", diff(oracle, structural)}};
    return structural == oracle;
  };

  json out;
  bool ok = true;
  ok &= compare_sets("circuits", s_circ.binomials(), o_circ, out);
  ok &= compare_sets("graver", s_grav.binomials(), o_grav, out);
  ok &= compare_sets("ugb", s_ugb.binomials(), o_ugb, out);
  out["lp_mixedness_agreement"] =
      json{{"agree", lp_agreements},
           {"total", o_grav.size()},
           {"all", lp_agreements == static_cast<long long>(o_grav.size())}};
  ok &= lp_agreements == static_cast<long long>(o_grav.size());
  out["match"] = ok;
  return out;
}

json bench_graph(const Graph& g, const RunConfig& cfg, int repeat) {
  json runs = json::array();
  double serial_best = 0, parallel_best = 0;
  size_t count = 0;
  for (int r = 0; r < repeat; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    BasisReport ser = enumerate_graver_serial(g, cfg.caps);
    auto t1 = std::chrono::steady_clock::now();
    BasisReport par = enumerate_graver(g, cfg.caps);
    auto t2 = std::chrono::steady_clock::now();
    if (ser.binomials() != par.binomials())
      throw error(errc::bad_argument, "serial and parallel enumerations disagree");
    double sms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    double pms = std::chrono::duration<double, std::milli>(t2 - t1).count();
    serial_best = r == 0 ? sms : std::min(serial_best, sms);
    parallel_best = r == 0 ? pms : std::min(parallel_best, pms);
    count = par.elements.size();
    runs.push_back(json{{"serial_ms", sms}, {"parallel_ms", pms}});
  }
  return json{{"elements", count},
              {"serial_ms", serial_best},
              {"parallel_ms", parallel_best},
              {"speedup", parallel_best > 0 ? serial_best / parallel_best : 0.0},
              {"runs", runs}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"circuits, Graver bases, and universal Groebner bases of graph toric ideals"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand

  RunConfig cfg;
  std::string out_path, hist_path;
  if (const char* env = std::getenv("TORICGRAPH_CACHE_DIR")) cfg.cache_dir = env;
  app.add_option("--out", out_path, "write the result to a file instead of stdout");
  app.add_option("--max-cycle-len", cfg.caps.max_cycle_len, "cycle length cap (0 = 2m)");
  app.add_option("--max-blocks", cfg.caps.max_blocks, "blocks per candidate cap (0 = n)");
  app.add_option("--candidate-budget", cfg.caps.candidate_budget, "candidate assembly budget");
  app.add_option("--cycle-budget", cfg.caps.cycle_budget, "stored cycle budget");
  app.add_option("--threads", cfg.caps.threads, "enumeration threads (0 = OpenMP default)");
  app.add_option("--pair-budget", cfg.pair_budget, "Buchberger S-pair budget");
  app.add_option("--lp-budget", cfg.lp_budget, "simplex pivot budget");
  app.add_option("--time-budget", cfg.time_budget_seconds,
                 "wall-clock seconds for verify (0 = off)");
  app.add_option("--cache-dir", cfg.cache_dir, "cache directory (env TORICGRAPH_CACHE_DIR)");
  app.add_option("--seed", cfg.random_seed, "random seed (part of the cache key)");

  std::string graph_path, binomial_path;
  int kn_n = 0, fam_s = 0, fam_l = 0, bench_repeat = 1;
  bool as_json = false;

  CLI::App* cmd_blocks = app.add_subcommand("blocks", "block decomposition of a graph");
  cmd_blocks->add_option("graph", graph_path)->required();
  bool with_true_degrees = false;
  CLI::App* cmd_circuits = app.add_subcommand("circuits", "enumerate the circuit set");
  cmd_circuits->add_option("graph", graph_path)->required();
  cmd_circuits->add_option("--hist", hist_path, "write a degree histogram CSV");
  cmd_circuits->add_flag("--true-degrees", with_true_degrees,
                         "annotate each circuit with its lattice-index true degree");
  CLI::App* cmd_graver = app.add_subcommand("graver", "enumerate the Graver basis");
  cmd_graver->add_option("graph", graph_path)->required();
  cmd_graver->add_option("--hist", hist_path, "write a degree histogram CSV");
  CLI::App* cmd_ugb = app.add_subcommand("ugb", "enumerate the universal Groebner basis");
  cmd_ugb->add_option("graph", graph_path)->required();
  cmd_ugb->add_option("--hist", hist_path, "write a degree histogram CSV");
  CLI::App* cmd_classify = app.add_subcommand("classify", "classify one binomial");
  cmd_classify->add_option("graph", graph_path)->required();
  cmd_classify->add_option("binomial", binomial_path)->required();
  CLI::App* cmd_verify =
      app.add_subcommand("verify", "structural sets against the algebraic oracle");
  cmd_verify->add_option("graph", graph_path)->required();
  CLI::App* cmd_kn = app.add_subcommand("kn", "emit the complete graph K_n");
  cmd_kn->add_option("n", kn_n)->required();
  cmd_kn->add_flag("--json", as_json, "emit graph JSON instead of an edge list");
  CLI::App* cmd_family = app.add_subcommand("family", "emit the attached-cycles family graph");
  cmd_family->add_option("s", fam_s)->required();
  cmd_family->add_option("l", fam_l)->required();
  cmd_family->add_flag("--json", as_json, "emit graph JSON instead of an edge list");
  CLI::App* cmd_truedeg = app.add_subcommand("truedeg", "true degree of a circuit");
  cmd_truedeg->add_option("graph", graph_path)->required();
  cmd_truedeg->add_option("binomial", binomial_path)->required();
  CLI::App* cmd_bench = app.add_subcommand("bench", "serial vs parallel enumeration timing");
  cmd_bench->add_option("graph", graph_path)->required();
  cmd_bench->add_option("--repeat", bench_repeat, "repetitions (best time wins)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    std::string output;
    if (cmd_kn->parsed()) {
      Graph g = complete_graph(kn_n);
      write_output(as_json ? graph_to_json(g).dump(2) : format_edge_list(g), out_path);
      return 0;
    }
    if (cmd_family->parsed()) {
      Graph g = family_graph(fam_s, fam_l);
      write_output(as_json ? graph_to_json(g).dump(2) : format_edge_list(g), out_path);
      return 0;
    }

    std::string graph_bytes = read_file_or_stdin(graph_path);
    size_t first = graph_bytes.find_first_not_of(" \t\r\n");
    Graph g = (first != std::string::npos && graph_bytes[first] == '{')
                  ? graph_from_json(json::parse(graph_bytes))
                  : parse_graph(graph_bytes);

    std::string sub = app.get_subcommands().front()->get_name();
    if (with_true_degrees) sub += "+truedeg";
    // --hist writes a side file the cache would not replay
    bool cacheable = (cmd_blocks->parsed() || cmd_circuits->parsed() || cmd_graver->parsed() ||
                      cmd_ugb->parsed() || cmd_verify->parsed()) &&
                     hist_path.empty();
    Cache cache(cfg, sub, cacheable ? graph_bytes : "");
    bool verify_failed = false;

    if (cacheable && cache.lookup(output)) {
      if (cmd_verify->parsed()) verify_failed = !json::parse(output)["match"].get<bool>();
      write_output(output, out_path);
      return verify_failed ? 4 : 0;
    }

    if (cmd_blocks->parsed()) {
      output = block_decomposition_to_json(block_decomposition(g)).dump(2);
    } else if (cmd_circuits->parsed() || cmd_graver->parsed() || cmd_ugb->parsed()) {
      BasisReport r = cmd_circuits->parsed()  ? enumerate_circuits(g, cfg.caps)
                      : cmd_graver->parsed() ? enumerate_graver(g, cfg.caps)
                                             : enumerate_ugb(g, cfg.caps);
      if (with_true_degrees)
        for (auto& t : r.elements)
          if (t.kind != CircuitKind::NotACircuit) t.true_degree = true_degree(g, t.b);
      if (!hist_path.empty()) write_output(degree_histogram_csv(degree_stats(r)), hist_path);
      output = report_to_json(r).dump(2);
    } else if (cmd_classify->parsed()) {
      output = classification_to_json(g, load_binomial(g, binomial_path)).dump(2);
    } else if (cmd_truedeg->parsed()) {
      Binomial b = load_binomial(g, binomial_path);
      LatticeIndexResult r = circuit_index(g, b);
      output = json{{"degree", b.degree()},
                    {"rank", r.rank},
                    {"index", r.index.get_str()},
                    {"true_degree", true_degree(g, b).get_str()}}
                   .dump(2);
    } else if (cmd_verify->parsed()) {
      json v = verify_graph(g, cfg);
      verify_failed = !v["match"].get<bool>();
      output = v.dump(2);
    } else if (cmd_bench->parsed()) {
      output = bench_graph(g, cfg, bench_repeat).dump(2);
    }

    if (cacheable) cache.store(output);
    write_output(output, out_path);
    return verify_failed ? 4 : 0;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.budget() ? 3 : 2;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
