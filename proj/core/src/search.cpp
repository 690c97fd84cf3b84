#include "pqdist/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "json_util.hpp"
#include "pqdist/errors.hpp"
#include "pqdist/generate.hpp"
#include "pqdist/sturm.hpp"

namespace fs = std::filesystem;

namespace pqdist {

namespace {

using KeySet = std::unordered_set<CanonicalKey, CanonicalKeyHash>;

template <typename Fn>
void run_workers(int workers, Fn fn) {
  if (workers <= 1) {
    fn(0);
    return;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back([&fn, w] { fn(w); });
  for (auto& t : pool) t.join();
}

bool lambda_less(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  return alg_compare(a, b) == Ordering::Less;
}

std::uint64_t degree_signature(const std::array<int, kMaxOrder>& deg, int n, std::uint32_t removed_row, int removed) {
  std::array<int, kMaxOrder> d{};
  int k = 0;
  for (int v = 0; v < n; ++v) {
    if (v == removed) continue;
    d[static_cast<size_t>(k++)] = deg[static_cast<size_t>(v)] - static_cast<int>((removed_row >> v) & 1u);
  }
  std::sort(d.begin(), d.begin() + k);
  std::uint64_t h = 1469598103934665603ull;
  for (int i = 0; i < k; ++i) {
    h ^= static_cast<std::uint64_t>(d[static_cast<size_t>(i)] + 1);
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t degree_signature(const Graph& g) {
  std::array<int, kMaxOrder> deg{};
  for (int v = 0; v < g.order(); ++v) deg[static_cast<size_t>(v)] = g.degree(v);
  return degree_signature(deg, g.order(), 0u, -1);
}

void log(const ClassifyOptions& opt, const std::string& msg) {
  if (opt.progress) opt.progress(msg);
}

}  // namespace

bool same_key(const LambdaKey& x, const LambdaKey& y) {
  return x.branch == y.branch && alg_equal(x.lambda, y.lambda);
}

std::vector<LambdaCandidate> candidate_lambdas(const RelationSpectrum& s, int p, int q, int branch,
                                                bool* boundary) {
  std::vector<LambdaCandidate> out;
  if (boundary) *boundary = false;
  int total = 0;
  for (const auto& r : s.roots) total += r.multiplicity;
  int below = 0;
  for (const auto& r : s.roots) {
    const int above = total - below - r.multiplicity;
    const int pos = branch > 0 ? below : above;
    const int neg = branch > 0 ? above : below;
    const bool fits = pos <= p && neg <= q;
    Ordering half = alg_compare(r.value, Rational(-1, 2));
    if (half == Ordering::Equal) {
      if (fits && boundary) *boundary = true;
    } else if (half == Ordering::Greater && fits && alg_compare(r.value, Rational(0)) != Ordering::Equal) {
      out.push_back({LambdaKey{r.value, branch}, pos == p && neg == q});
    }
    below += r.multiplicity;
  }
  return out;
}

std::vector<LambdaCandidate> candidate_lambdas(const Graph& g, int p, int q, int branch) {
  if (g.is_complete() || g.is_edgeless()) throw DegenerateRelationError("degenerate: single relation");
  return candidate_lambdas(relation_spectrum(g), p, q, branch);
}

BaseLevel build_base_level(int p, int q, const std::vector<int>& branches, int workers) {
  const int n = p + q + 3;
  struct Item {
    CanonicalKey key;
    int branch;
    AlgebraicNumber lambda;
    bool proper;
  };
  std::vector<std::vector<Item>> items(static_cast<size_t>(std::max(1, workers)));
  std::vector<std::vector<std::pair<Graph, int>>> bnd(items.size());
  std::vector<std::uint64_t> examined(items.size(), 0);
  run_workers(workers, [&](int w) {
    auto& mine = items[static_cast<size_t>(w)];
    generate_all(
        n,
        [&](const Graph& g) {
          ++examined[static_cast<size_t>(w)];
          if (g.is_complete() || g.is_edgeless()) return;
          RelationSpectrum s = relation_spectrum(g);
          CanonicalKey key = pack_graph(g);
          for (int br : branches) {
            bool boundary = false;
            auto cands = candidate_lambdas(s, p, q, br, &boundary);
            if (boundary && cands.empty()) bnd[static_cast<size_t>(w)].emplace_back(g, br);
            for (auto& c : cands) mine.push_back({key, br, std::move(c.key.lambda), c.proper});
          }
        },
        std::max(1, workers), w);
  });

  std::vector<Item> all;
  BaseLevel out;
  for (size_t w = 0; w < items.size(); ++w) {
    for (auto& it : items[w]) all.push_back(std::move(it));
    for (auto& b : bnd[w]) out.boundary.push_back(std::move(b));
    out.graphs_examined += examined[w];
  }
  std::sort(all.begin(), all.end(), [](const Item& a, const Item& b) {
    if (a.key != b.key) return a.key < b.key;
    if (a.branch != b.branch) return a.branch > b.branch;
    return lambda_less(a.lambda, b.lambda);
  });
  std::sort(out.boundary.begin(), out.boundary.end(), [](const auto& a, const auto& b) {
    CanonicalKey ka = pack_graph(a.first), kb = pack_graph(b.first);
    if (ka != kb) return ka < kb;
    return a.second > b.second;
  });

  struct Build {
    LambdaKey key;
    std::vector<CanonicalKey> L, Lp;
  };
  std::vector<Build> builds;
  std::multimap<std::pair<int, double>, size_t> index;
  for (auto& it : all) {
    const double x = it.lambda.approx();
    const double tol = 1e-9 * std::max(1.0, std::fabs(x));
    size_t found = builds.size();
    for (auto at = index.lower_bound({it.branch, x - tol}); at != index.end(); ++at) {
      if (at->first.first != it.branch || at->first.second > x + tol) break;
      if (alg_equal(builds[at->second].key.lambda, it.lambda)) {
        found = at->second;
        break;
      }
    }
    if (found == builds.size()) {
      builds.push_back({LambdaKey{it.lambda, it.branch}, {}, {}});
      index.insert({{it.branch, x}, found});
    } else if (!it.lambda.is_rational()) {
      auto& k = builds[found].key.lambda;
      if (!k.is_rational()) k.poly = gcd(k.poly, it.lambda.poly);
    }
    builds[found].L.push_back(it.key);
    if (it.proper) builds[found].Lp.push_back(it.key);
  }
  for (auto& b : builds) {
    b.key.lambda = minimal_form(b.key.lambda);
    SearchLevel lvl;
    lvl.n = n;
    lvl.key = b.key;
    lvl.L = std::move(b.L);
    lvl.Lprime = std::move(b.Lp);
    for (auto* v : {&lvl.L, &lvl.Lprime}) {
      std::sort(v->begin(), v->end());
      v->erase(std::unique(v->begin(), v->end()), v->end());
    }
    out.buckets.push_back(std::move(lvl));
  }
  std::sort(out.buckets.begin(), out.buckets.end(), [](const SearchLevel& a, const SearchLevel& b) {
    if (a.key.branch != b.key.branch) return a.key.branch > b.key.branch;
    return lambda_less(a.key.lambda, b.key.lambda);
  });
  return out;
}

SearchLevel extend_level(const SearchLevel& level, int workers, ExtendStats* stats) {
  SearchLevel next;
  next.n = level.n + 1;
  next.key = level.key;
  if (level.L.empty()) return next;
  if (level.n >= kMaxOrder) throw DomainError("extend_level: order cap reached");
  KeySet in_l(level.L.begin(), level.L.end());
  KeySet in_lp(level.Lprime.begin(), level.Lprime.end());
  std::unordered_set<std::uint64_t> degs, hashes;
  for (const auto& k : level.L) {
    Graph g = unpack_graph(k);
    degs.insert(degree_signature(g));
    hashes.insert(invariant_hash(g));
  }
  const int n = level.n;
  const size_t w_count = static_cast<size_t>(std::max(1, workers));
  std::vector<std::vector<std::pair<CanonicalKey, bool>>> found(w_count);
  std::vector<std::uint64_t> tried(w_count, 0);
  run_workers(workers, [&](int w) {
    auto& out = found[static_cast<size_t>(w)];
    std::vector<Graph> dels(static_cast<size_t>(n));
    for (size_t gi = static_cast<size_t>(w); gi < level.L.size(); gi += w_count) {
      const Graph g = unpack_graph(level.L[gi]);
      const bool parent_prime = in_lp.count(level.L[gi]) > 0;
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        ++tried[static_cast<size_t>(w)];
        Graph h = g.add_vertex(mask);
        std::array<int, kMaxOrder> deg{};
        for (int v = 0; v <= n; ++v) deg[static_cast<size_t>(v)] = h.degree(v);
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
          ok = degs.count(degree_signature(deg, n + 1, h.row(i), i)) > 0;
        if (!ok) continue;
        for (int i = 0; i < n && ok; ++i) {
          dels[static_cast<size_t>(i)] = h.delete_vertex(i);
          ok = hashes.count(invariant_hash(dels[static_cast<size_t>(i)])) > 0;
        }
        if (!ok) continue;
        bool prime = parent_prime;
        for (int i = 0; i < n && ok; ++i) {
          CanonicalKey k = canonical_form(dels[static_cast<size_t>(i)]);
          ok = in_l.count(k) > 0;
          if (ok && !prime) prime = in_lp.count(k) > 0;
        }
        if (!ok) continue;
        out.emplace_back(canonical_form(h), prime);
      }
    }
  });
  std::vector<std::pair<CanonicalKey, bool>> all;
  for (auto& f : found) all.insert(all.end(), f.begin(), f.end());
  std::sort(all.begin(), all.end());
  for (size_t i = 0; i < all.size();) {
    size_t j = i;
    bool prime = false;
    for (; j < all.size() && all[j].first == all[i].first; ++j)
      if (all[j].second) prime = true;
    next.L.push_back(all[i].first);
    if (prime) next.Lprime.push_back(all[i].first);
    i = j;
  }
  if (stats)
    for (auto t : tried) stats->extensions_tried += t;
  return next;
}

Verification verify_representable(const Graph& g, const LambdaKey& key, int p, int q) {
  if (g.is_complete() || g.is_edgeless()) throw DegenerateRelationError("degenerate: single relation");
  Signature s = relation_signature(relation_spectrum(g), key.branch, key.lambda);
  Verification v;
  v.dim = {s.positives, s.negatives};
  v.representable = v.dim.p <= p && v.dim.q <= q;
  v.proper = v.dim.p == p && v.dim.q == q;
  return v;
}

std::string checkpoint_bucket_dir(const std::string& root, int p, int q, int branch, int bucket_index) {
  std::ostringstream os;
  os << root << "/cell_p" << p << "_q" << q << "/branch" << (branch > 0 ? "+1" : "-1") << "_lambda"
     << bucket_index;
  return os.str();
}

namespace {

void write_g6(const fs::path& path, const std::vector<CanonicalKey>& keys) {
  std::ofstream f(path);
  if (!f) throw CheckpointError("cannot write " + path.string());
  for (const auto& k : keys) f << graph6_encode(unpack_graph(k)) << '\n';
  if (!f) throw CheckpointError("write failed " + path.string());
}

std::vector<CanonicalKey> read_g6(const fs::path& path) {
  std::ifstream f(path);
  if (!f) throw CheckpointError("missing level file " + path.string());
  std::vector<CanonicalKey> out;
  std::string line;
  std::ptrdiff_t record = 0;
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    try {
      out.push_back(canonical_form(graph6_decode(line)));
    } catch (const Graph6Error& e) {
      throw CheckpointError(path.filename().string() + ": " + e.what(), record);
    }
    ++record;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

void checkpoint_save(const std::string& dir, int p, int q, int bucket_index, const std::vector<SearchLevel>& levels) {
  if (levels.empty()) return;
  fs::path d = dir;
  std::error_code ec;
  fs::create_directories(d, ec);
  if (ec) throw CheckpointError("cannot create " + d.string());
  Json m;
  m["schema"] = 1;
  m["p"] = p;
  m["q"] = q;
  m["bucket"] = bucket_index;
  m["branch"] = levels.front().key.branch;
  m["lambda"] = algebraic_to_json(levels.front().key.lambda);
  Json lv = Json::array();
  for (const auto& l : levels) {
    write_g6(d / ("L_" + std::to_string(l.n) + ".g6"), l.L);
    write_g6(d / ("Lprime_" + std::to_string(l.n) + ".g6"), l.Lprime);
    lv.push_back({{"n", l.n}, {"L", l.L.size()}, {"Lprime", l.Lprime.size()}});
  }
  m["levels"] = lv;
  fs::path tmp = d / "manifest.json.tmp";
  {
    std::ofstream f(tmp);
    if (!f) throw CheckpointError("cannot write manifest");
    f << m.dump(2) << '\n';
  }
  fs::rename(tmp, d / "manifest.json", ec);
  if (ec) throw CheckpointError("cannot finalize manifest");
}

std::vector<SearchLevel> checkpoint_load(const std::string& bucket_dir) {
  fs::path d = bucket_dir;
  std::ifstream f(d / "manifest.json");
  if (!f) throw CheckpointError("missing manifest in " + bucket_dir);
  Json m;
  try {
    m = Json::parse(f);
  } catch (const std::exception& e) {
    throw CheckpointError(std::string("corrupt manifest: ") + e.what());
  }
  LambdaKey key;
  try {
    key.branch = m.at("branch").get<int>();
    key.lambda = algebraic_from_json(m.at("lambda"));
  } catch (const std::exception& e) {
    throw CheckpointError(std::string("corrupt manifest: ") + e.what());
  }
  if (!key.lambda.is_rational() &&
      (key.lambda.poly.degree() < 1 || sturm_count(key.lambda.poly, key.lambda.lo, key.lambda.hi) != 1))
    throw CheckpointError("manifest lambda interval is not isolating");
  std::vector<SearchLevel> out;
  std::ptrdiff_t idx = 0;
  for (const auto& l : m.at("levels")) {
    SearchLevel s;
    s.key = key;
    s.n = l.at("n").get<int>();
    s.L = read_g6(d / ("L_" + std::to_string(s.n) + ".g6"));
    s.Lprime = read_g6(d / ("Lprime_" + std::to_string(s.n) + ".g6"));
    if (s.L.size() != l.at("L").get<size_t>() || s.Lprime.size() != l.at("Lprime").get<size_t>())
      throw CheckpointError("level size mismatch", idx);
    out.push_back(std::move(s));
    ++idx;
  }
  return out;
}

namespace {

struct LoadedCell {
  std::vector<std::vector<SearchLevel>> buckets;
  std::uint64_t graphs_examined = 0;
  std::vector<std::pair<Graph, int>> boundary;
};

LoadedCell load_cell(const std::string& root, int p, int q, const std::vector<int>& branches) {
  fs::path index = fs::path(root) / ("cell_p" + std::to_string(p) + "_q" + std::to_string(q)) / "index.json";
  std::ifstream f(index);
  if (!f) return {};
  Json j;
  try {
    j = Json::parse(f);
  } catch (const std::exception& e) {
    throw CheckpointError(std::string("corrupt index: ") + e.what());
  }
  if (j.value("p", -1) != p || j.value("q", -1) != q) throw CheckpointError("checkpoint belongs to another cell");
  LoadedCell out;
  try {
    out.graphs_examined = j.value("graphs_examined", std::uint64_t{0});
    for (const auto& b : j.value("boundary", Json::array())) {
      int br = b.at("branch").get<int>();
      if (std::find(branches.begin(), branches.end(), br) != branches.end())
        out.boundary.emplace_back(graph6_decode(b.at("graph6").get<std::string>()), br);
    }
  } catch (const std::exception& e) {
    throw CheckpointError(std::string("corrupt index: ") + e.what());
  }
  std::ptrdiff_t rec = 0;
  for (const auto& b : j.at("buckets")) {
    int br = b.at("branch").get<int>();
    if (std::find(branches.begin(), branches.end(), br) == branches.end()) {
      ++rec;
      continue;
    }
    auto levels = checkpoint_load(checkpoint_bucket_dir(root, p, q, br, b.at("index").get<int>()));
    AlgebraicNumber want = algebraic_from_json(b.at("lambda"));
    if (levels.empty() || !alg_equal(levels.front().key.lambda, want))
      throw CheckpointError("lambda mismatch between index and bucket", rec);
    out.buckets.push_back(std::move(levels));
    ++rec;
  }
  return out;
}

void save_index(const std::string& root, int p, int q, const std::vector<std::vector<SearchLevel>>& buckets,
                const BaseLevel& base) {
  fs::path dir = fs::path(root) / ("cell_p" + std::to_string(p) + "_q" + std::to_string(q));
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw CheckpointError("cannot create " + dir.string());
  Json j;
  j["schema"] = 1;
  j["p"] = p;
  j["q"] = q;
  Json arr = Json::array();
  for (size_t i = 0; i < buckets.size(); ++i)
    arr.push_back({{"index", i}, {"branch", buckets[i].front().key.branch},
                   {"lambda", algebraic_to_json(buckets[i].front().key.lambda)}});
  j["buckets"] = arr;
  j["graphs_examined"] = base.graphs_examined;
  Json bd = Json::array();
  for (const auto& [g, br] : base.boundary) bd.push_back({{"graph6", graph6_encode(g)}, {"branch", br}});
  j["boundary"] = bd;
  std::ofstream f(dir / "index.json");
  if (!f) throw CheckpointError("cannot write index");
  f << j.dump(2) << '\n';
}

bool set_less(const ClassifiedSet& a, const ClassifiedSet& b) {
  CanonicalKey ka = pack_graph(a.graph), kb = pack_graph(b.graph);
  if (ka != kb) return ka < kb;
  if (a.key.branch != b.key.branch) return a.key.branch > b.key.branch;
  return lambda_less(a.key.lambda, b.key.lambda);
}

}  // namespace

std::vector<ClassifiedSet> proper_sets_at(const CellResult& cell, int n) {
  std::vector<ClassifiedSet> out;
  if (n >= cell.p + cell.q + 3) {
    for (const auto& levels : cell.levels)
      for (const auto& lvl : levels) {
        if (lvl.n != n) continue;
        for (const auto& k : lvl.Lprime) {
          Graph g = unpack_graph(k);
          Verification v = verify_representable(g, lvl.key, cell.p, cell.q);
          if (v.proper) out.push_back({g, lvl.key, v.dim});
        }
      }
  } else if (n == cell.p + cell.q + 2) {
    for (const auto& h : cell.critical_points)
      out.push_back({canonical_graph(h.graph), LambdaKey{minimal_form(h.range.lo), h.branch}, {cell.p, cell.q}});
  }
  std::sort(out.begin(), out.end(), set_less);
  return out;
}

CellResult classify(int p, int q, const ClassifyOptions& opt) {
  if (p < 0 || q < 0) throw DomainError("classify: negative dimension");
  const int base = p + q + 3;
  if (base > 10 && !opt.allow_long)
    throw TierExceededError("cell (" + std::to_string(p) + "," + std::to_string(q) +
                            ") needs graphs of order " + std::to_string(base) + "; pass allow_long");
  std::vector<int> branches = opt.branches;
  if (branches.empty()) branches = p == q ? std::vector<int>{1} : std::vector<int>{1, -1};
  auto wanted = [&](int br) { return std::find(branches.begin(), branches.end(), br) != branches.end(); };

  CellResult cell;
  cell.p = p;
  cell.q = q;
  auto keep = [&](std::vector<ScanHit> hits, bool points) {
    std::vector<ScanHit> out;
    for (auto& h : hits)
      if (wanted(h.branch) && h.range.is_point == points) out.push_back(std::move(h));
    return out;
  };
  if (p + q + 1 >= 2) cell.open_ranges = keep(scan_small_orders(p, q, p + q + 1), false);
  cell.critical_points = keep(scan_small_orders(p, q, p + q + 2), true);
  log(opt, "scan: " + std::to_string(cell.open_ranges.size()) + " open ranges at order " +
               std::to_string(p + q + 1) + ", " + std::to_string(cell.critical_points.size()) +
               " critical points at order " + std::to_string(p + q + 2));

  if (base <= opt.max_order) {
    std::vector<std::vector<SearchLevel>> buckets;
    if (opt.resume && !opt.checkpoint_dir.empty()) {
      LoadedCell lc = load_cell(opt.checkpoint_dir, p, q, branches);
      buckets = std::move(lc.buckets);
      cell.graphs_examined = lc.graphs_examined;
      cell.boundary = std::move(lc.boundary);
    }
    if (buckets.empty()) {
      BaseLevel bl = build_base_level(p, q, branches, opt.workers);
      for (auto& b : bl.buckets) buckets.push_back({std::move(b)});
      if (!opt.checkpoint_dir.empty()) save_index(opt.checkpoint_dir, p, q, buckets, bl);
      cell.graphs_examined = bl.graphs_examined;
      cell.boundary = std::move(bl.boundary);
      log(opt, "base level n=" + std::to_string(base) + ": " + std::to_string(bl.graphs_examined) +
                   " graphs, " + std::to_string(buckets.size()) + " lambda buckets");
    } else {
      log(opt, "resumed " + std::to_string(buckets.size()) + " lambda buckets from checkpoint");
    }
    for (size_t bi = 0; bi < buckets.size(); ++bi) {
      auto& levels = buckets[bi];
      ExtendStats st;
      while (!levels.back().Lprime.empty() && levels.back().n < opt.max_order) {
        SearchLevel nx = extend_level(levels.back(), opt.workers, &st);
        levels.push_back(std::move(nx));
        if (!opt.checkpoint_dir.empty())
          checkpoint_save(checkpoint_bucket_dir(opt.checkpoint_dir, p, q, levels.front().key.branch,
                                                static_cast<int>(bi)),
                          p, q, static_cast<int>(bi), levels);
        log(opt, "bucket " + std::to_string(bi) + " n=" + std::to_string(levels.back().n) + ": |L|=" +
                     std::to_string(levels.back().L.size()) + " |L'|=" + std::to_string(levels.back().Lprime.size()));
      }
      if (!opt.checkpoint_dir.empty() && levels.size() == 1)
        checkpoint_save(checkpoint_bucket_dir(opt.checkpoint_dir, p, q, levels.front().key.branch,
                                              static_cast<int>(bi)),
                        p, q, static_cast<int>(bi), levels);
      cell.extensions_tried += st.extensions_tried;
      BucketTrace tr;
      tr.key = levels.front().key;
      for (const auto& l : levels) tr.levels.push_back({l.n, l.L.size(), l.Lprime.size()});
      cell.traces.push_back(std::move(tr));
    }
    cell.levels = std::move(buckets);
  }

  int top = 0;
  for (const auto& levels : cell.levels)
    for (const auto& l : levels)
      if (!l.Lprime.empty()) top = std::max(top, l.n);
  for (int n = top; n >= base && cell.winners.empty(); --n) {
    cell.winners = proper_sets_at(cell, n);
    if (cell.winners.empty()) {
      for (const auto& levels : cell.levels)
        for (const auto& l : levels)
          if (l.n == n)
            for (const auto& k : l.Lprime) {
              Graph g = unpack_graph(k);
              cell.rejected.push_back({g, l.key, verify_representable(g, l.key, p, q).dim});
            }
    } else {
      cell.max_order = n;
    }
  }
  if (cell.winners.empty() && !cell.critical_points.empty()) {
    cell.max_order = p + q + 2;
    cell.winners = proper_sets_at(cell, p + q + 2);
  }
  if (cell.winners.empty() && !cell.open_ranges.empty()) {
    cell.max_order = p + q + 1;
    cell.infinite = true;
    cell.families = cell.open_ranges;
  }
  return cell;
}

}  // namespace pqdist
