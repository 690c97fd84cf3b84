#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "pqdist/constructions.hpp"
#include "pqdist/errors.hpp"
#include "pqdist/generate.hpp"
#include "pqdist/report.hpp"
#include "pqdist/search.hpp"
#include "pqdist/spherical.hpp"
#include "pqdist/tables.hpp"

namespace fs = std::filesystem;
using namespace pqdist;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kTier = 2, kIo = 3, kMalformed = 4 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  int p = -1;
  int q = -1;
  std::string branch = "both";
  int max_order = kMaxOrder;
  int workers = 0;
  std::string checkpoint_dir;
  std::string out;
  std::string format = "json";
  bool resume = false;
  bool allow_long = false;
  bool quiet = false;
};

void emit(const Config& c, const std::string& text) {
  if (c.out.empty() || c.out == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw IoError("cannot open " + c.out);
  f << text;
  if (!f) throw IoError("cannot write " + c.out);
}

std::vector<int> parse_branches(const std::string& s) {
  if (s == "both" || s.empty()) return {};
  if (s == "+1" || s == "1") return {1};
  if (s == "-1") return {-1};
  throw DomainError("--branch must be +1, -1 or both");
}

ClassifyOptions options_of(const Config& c) {
  ClassifyOptions o;
  o.workers = c.workers > 0 ? c.workers : std::max(1u, std::thread::hardware_concurrency());
  o.max_order = c.max_order;
  o.allow_long = c.allow_long;
  o.checkpoint_dir = c.checkpoint_dir;
  o.resume = c.resume;
  o.branches = parse_branches(c.branch);
  if (!c.quiet) o.progress = [](const std::string& s) { std::cerr << s << "\n"; };
  return o;
}

void need_cell(const Config& c) {
  if (c.p < 0 || c.q < 0) throw DomainError("--p and --q are required and must be >= 0");
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string format_sets(const Config& c, const std::vector<ClassifiedSet>& sets, const std::string& json,
                        const std::string& name) {
  if (c.format == "json") return json;
  if (c.format == "graph6") return sets_graph6(sets);
  if (c.format == "dot") return sets_dot(sets, name);
  if (c.format == "csv") return sets_csv(sets);
  throw DomainError("unknown --format " + c.format);
}

int cmd_classify(const Config& c) {
  need_cell(c);
  auto t0 = std::chrono::steady_clock::now();
  RunStamp st{utc_now(), 0};
  CellResult cell = classify(c.p, c.q, options_of(c));
  st.elapsed_seconds = seconds_since(t0);
  std::string name = "cell_" + std::to_string(c.p) + "_" + std::to_string(c.q);
  emit(c, format_sets(c, cell.winners, classify_report_json(cell, st), name));
  if (!c.quiet)
    std::cerr << "(" << c.p << "," << c.q << ") -> " << cell_label(cell.max_order, cell.infinite, cell.winners.size())
              << "\n";
  return kOk;
}

int cmd_spherical(const Config& c) {
  need_cell(c);
  auto t0 = std::chrono::steady_clock::now();
  RunStamp st{utc_now(), 0};
  SphericalResult res = classify_spherical(c.p, c.q, options_of(c));
  st.elapsed_seconds = seconds_since(t0);
  std::string name = "sphere_" + std::to_string(c.p) + "_" + std::to_string(c.q);
  emit(c, format_sets(c, spherical_sets(res), spherical_report_json(res, st), name));
  if (!c.quiet)
    std::cerr << "(" << c.p << "," << c.q << ") -> " << cell_label(res.max_order, res.infinite, res.winners.size())
              << "\n";
  return kOk;
}

int cmd_check_graph(const Config& c, const std::string& g6) {
  need_cell(c);
  Graph g = graph6_decode(g6);
  std::vector<int> br = parse_branches(c.branch);
  if (br.empty()) br = {1, -1};
  emit(c, check_graph_json(g, c.p, c.q, br));
  return kOk;
}

int cmd_verify_tables(const Config& c, const std::string& tier_name, const std::string& which) {
  Tier tier;
  if (tier_name == "small") {
    tier = Tier::Small;
  } else if (tier_name == "medium") {
    tier = Tier::Medium;
  } else if (tier_name == "full") {
    tier = Tier::Full;
  } else {
    throw DomainError("--tier must be small, medium or full");
  }
  ClassifyOptions opt = options_of(c);
  opt.branches.clear();
  CellCache cache;
  std::ostringstream out;
  bool all = true;
  auto line = [&](const char* table, const TableCell& e, const std::string& got) {
    bool ok = !e.compared || got == e.label();
    all = all && ok;
    std::ostringstream l;
    l << table << " (" << e.p << "," << e.q << ") expected " << e.label() << " got " << got << " "
      << (e.compared ? (ok ? "PASS" : "FAIL") : "SKIP (not compared)") << "\n";
    out << l.str();
    if (!c.quiet) std::cerr << l.str();
  };
  if (which == "1" || which == "both")
    for (const auto& e : table1()) {
      if (e.tier > tier) continue;
      const CellResult& cell = cell_result(e.p, e.q, opt, cache);
      line("table1", e, cell_label(cell.max_order, cell.infinite, cell.winners.size()));
    }
  if (which == "2" || which == "both")
    for (const auto& e : table2()) {
      if (e.tier > tier) continue;
      SphericalResult r = classify_spherical(e.p, e.q, opt, &cache);
      line("table2", e, cell_label(r.max_order, r.infinite, r.winners.size()));
    }
  emit(c, out.str());
  return all ? kOk : kMismatch;
}

int cmd_construct(const Config& c, const std::string& family, int n) {
  PointSet x;
  IntegerMatrix pattern;
  if (family == "twentytwo") {
    x = construct_22point();
    pattern = johnson_family_pattern(6);
  } else if (family == "family-pq1") {
    x = construct_family_pq1(n);
    pattern = family_pq1_pattern(n);
  } else if (family == "johnson") {
    x = construct_johnson_family(n);
    pattern = johnson_family_pattern(n);
  } else {
    throw DomainError("unknown family " + family + " (twentytwo, family-pq1, johnson)");
  }
  DistanceCheck dc = distance_values(x);
  bool ok = dc.all_rational && dc.values == std::vector<Rational>{Rational(2), Rational(4)} &&
            distance_pattern(x, 4) == pattern;
  if (family == "family-pq1")
    for (const auto& pt : x.exact) {
      QuadraticNumber s = QuadraticNumber::rational(0);
      for (int k = 0; k < n; ++k) s = x.field.add(s, pt[static_cast<size_t>(k)]);
      ok = ok && s == QuadraticNumber::rational(2);
    }
  EmbeddingDimension dim = embedding_dimension(distance_matrix(x));
  if (c.format == "csv") {
    emit(c, point_set_csv(x));
  } else if (c.format == "json") {
    emit(c, point_set_json(x));
  } else {
    throw DomainError("construct supports --format json or csv");
  }
  std::cerr << family << ": " << x.size() << " points, embedding dimension (" << dim.p << "," << dim.q
            << "), verification " << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? kOk : kMismatch;
}

int cmd_generate(const Config& c, int n) {
  if (n < 1 || n > 10) throw DomainError("--n must be in 1..10");
  std::string out;
  generate_all(n, [&](const Graph& g) { out += graph6_encode(g) + "\n"; });
  emit(c, out);
  return kOk;
}

int cmd_checkpoint(const Config& c, const std::string& action) {
  if (c.checkpoint_dir.empty()) throw DomainError("--checkpoint-dir (or PQDIST_CHECKPOINT_DIR) is required");
  fs::path root(c.checkpoint_dir);
  if (!fs::exists(root)) throw IoError("no checkpoint directory " + root.string());
  std::vector<fs::path> cells;
  for (const auto& e : fs::directory_iterator(root))
    if (e.is_directory() && e.path().filename().string().rfind("cell_", 0) == 0) {
      if (c.p >= 0 && e.path().filename() != "cell_p" + std::to_string(c.p) + "_q" + std::to_string(c.q)) continue;
      cells.push_back(e.path());
    }
  std::sort(cells.begin(), cells.end());
  std::ostringstream out;
  for (const auto& cell : cells) {
    if (action == "clear") {
      fs::remove_all(cell);
      out << "removed " << cell.string() << "\n";
      continue;
    }
    std::vector<fs::path> buckets;
    for (const auto& e : fs::directory_iterator(cell))
      if (e.is_directory()) buckets.push_back(e.path());
    std::sort(buckets.begin(), buckets.end());
    for (const auto& b : buckets) {
      std::vector<SearchLevel> levels = checkpoint_load(b.string());
      out << cell.filename().string() << "/" << b.filename().string() << " branch " << levels.front().key.branch
          << " lambda " << levels.front().key.lambda.to_string();
      for (const auto& l : levels) out << " n" << l.n << ":" << l.L.size() << "/" << l.Lprime.size();
      out << (action == "verify" ? " OK" : "") << "\n";
    }
  }
  if (action != "list" && action != "verify" && action != "clear")
    throw DomainError("checkpoint action must be list, verify or clear");
  emit(c, out.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pqdist: largest 2-indefinite-distance sets in R^{p,q}"};
  app.require_subcommand(1);
  Config cfg;
  if (const char* env = std::getenv("PQDIST_CHECKPOINT_DIR")) cfg.checkpoint_dir = env;

  auto cell_flags = [&](CLI::App* sc) {
    sc->add_option("--p", cfg.p, "positive dimension")->check(CLI::NonNegativeNumber);
    sc->add_option("--q", cfg.q, "negative dimension")->check(CLI::NonNegativeNumber);
    sc->add_option("--branch", cfg.branch, "+1, -1 or both");
  };
  auto run_flags = [&](CLI::App* sc) {
    sc->add_option("--max-order", cfg.max_order, "largest order to extend to")->check(CLI::Range(3, kMaxOrder));
    sc->add_option("--workers", cfg.workers, "worker threads (default: hardware)")->check(CLI::PositiveNumber);
    sc->add_option("--checkpoint-dir", cfg.checkpoint_dir, "checkpoint root (env PQDIST_CHECKPOINT_DIR)");
    sc->add_flag("--resume", cfg.resume, "resume from checkpoints");
    sc->add_flag("--allow-long", cfg.allow_long, "allow base orders above 10");
    sc->add_flag("--quiet", cfg.quiet, "no progress on stderr");
  };
  auto out_flags = [&](CLI::App* sc) {
    sc->add_option("--out", cfg.out, "output path (default stdout)");
    sc->add_option("--format", cfg.format, "json, graph6, dot or csv");
  };

  auto* classify_cmd = app.add_subcommand("classify", "largest proper sets of a cell");
  cell_flags(classify_cmd);
  run_flags(classify_cmd);
  out_flags(classify_cmd);

  auto* spherical_cmd = app.add_subcommand("spherical", "largest proper spherical sets of a cell");
  cell_flags(spherical_cmd);
  run_flags(spherical_cmd);
  out_flags(spherical_cmd);

  std::string g6;
  auto* check_cmd = app.add_subcommand("check-graph", "candidate distances and types of one graph");
  check_cmd->add_option("--graph6", g6, "graph in graph6")->required();
  cell_flags(check_cmd);
  out_flags(check_cmd);

  std::string tier = "small", which = "both";
  auto* verify_cmd = app.add_subcommand("verify-tables", "compare against the embedded tables");
  verify_cmd->add_option("--tier", tier, "small, medium or full");
  verify_cmd->add_option("--table", which, "1, 2 or both");
  run_flags(verify_cmd);
  out_flags(verify_cmd);

  std::string family;
  int n = 7;
  auto* construct_cmd = app.add_subcommand("construct", "explicit coordinate constructions");
  construct_cmd->add_option("family", family, "twentytwo, family-pq1 or johnson")->required();
  construct_cmd->add_option("--n,--p", n, "family parameter");
  out_flags(construct_cmd);

  int gen_n = 0;
  auto* generate_cmd = app.add_subcommand("generate", "all graphs of an order in graph6");
  generate_cmd->add_option("--n", gen_n, "order")->required();
  out_flags(generate_cmd);

  std::string action = "list";
  auto* checkpoint_cmd = app.add_subcommand("checkpoint", "inspect or clear checkpoints");
  checkpoint_cmd->add_option("action", action, "list, verify or clear");
  checkpoint_cmd->add_option("--checkpoint-dir", cfg.checkpoint_dir, "checkpoint root");
  checkpoint_cmd->add_option("--p", cfg.p, "restrict to one cell");
  checkpoint_cmd->add_option("--q", cfg.q, "restrict to one cell");
  out_flags(checkpoint_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kMalformed;
  }

  try {
    if (*classify_cmd) return cmd_classify(cfg);
    if (*spherical_cmd) return cmd_spherical(cfg);
    if (*check_cmd) return cmd_check_graph(cfg, g6);
    if (*verify_cmd) return cmd_verify_tables(cfg, tier, which);
    if (*construct_cmd) return cmd_construct(cfg, family, n);
    if (*generate_cmd) return cmd_generate(cfg, gen_n);
    if (*checkpoint_cmd) return cmd_checkpoint(cfg, action);
  } catch (const TierExceededError& e) {
    std::cerr << "tier refusal: " << e.what() << "\n";
    return kTier;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kIo;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kIo;
  } catch (const Graph6Error& e) {
    std::cerr << "malformed graph6: " << e.what() << "\n";
    return kMalformed;
  } catch (const DegenerateRelationError& e) {
    std::cerr << e.what() << "\n";
    return kMalformed;
  } catch (const CheckpointError& e) {
    std::cerr << "checkpoint error: " << e.what() << "\n";
    return kMalformed;
  } catch (const DomainError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kMalformed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMismatch;
  }
  return kOk;
}
