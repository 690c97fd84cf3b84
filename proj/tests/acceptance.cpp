#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include <Eigen/Dense>

#include "pqdist/constructions.hpp"
#include "pqdist/generate.hpp"
#include "pqdist/report.hpp"
#include "pqdist/spherical.hpp"
#include "pqdist/tables.hpp"

using namespace pqdist;

namespace {

using Clock = std::chrono::steady_clock;

int g_failed = 0;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Criterion {
  int id;
  std::string title;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

int report(const Criterion& c, double elapsed) {
  std::ostringstream line;
  line << (c.failures.empty() ? "PASS " : "FAIL ") << c.id << " " << c.title;
  line.setf(std::ios::fixed);
  line.precision(1);
  line << " [" << elapsed << " s]";
  if (!c.failures.empty()) line << ": " << c.failures.front();
  std::cout << line.str() << "\n";
  for (const auto& n : c.notes) std::cout << "    " << n << "\n";
  for (std::size_t i = 1; i < c.failures.size(); ++i) std::cout << "    also: " << c.failures[i] << "\n";
  std::cout.flush();
  if (!c.failures.empty()) ++g_failed;
  return c.failures.empty() ? 0 : 1;
}

DissimilarityMatrix set_matrix(const ClassifiedSet& s) {
  return DissimilarityMatrix::from_relation(s.graph, Rational(s.key.branch), s.key.b());
}

RationalMatrix relation_matrix(const Graph& g, const Rational& a, const Rational& b) {
  const auto n = static_cast<std::size_t>(g.order());
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) m(i, j) = g.adjacent(static_cast<int>(i), static_cast<int>(j)) ? a : b;
  return m;
}

std::string cell_name(int p, int q) { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

class Runner {
 public:
  CellCache cache;
  ClassifyOptions opt;

  const CellResult& cell(int p, int q) { return cell_result(p, q, opt, cache); }

  void compare_table1(Criterion& c, const TableCell& t) {
    auto t0 = Clock::now();
    const CellResult& r = cell(t.p, t.q);
    std::string got = cell_label(r.max_order, r.infinite, r.winners.size());
    std::ostringstream note;
    note << cell_name(t.p, t.q) << " -> " << got << " (expected " << t.label() << ", " << seconds_since(t0) << " s)";
    c.notes.push_back(note.str());
    c.expect(got == t.label(), cell_name(t.p, t.q) + " gave " + got + ", expected " + t.label());
  }

  SphericalResult compare_table2(Criterion& c, const TableCell& t) {
    auto t0 = Clock::now();
    SphericalResult r = classify_spherical(t.p, t.q, opt, &cache);
    std::string got = cell_label(r.max_order, r.infinite, r.winners.size());
    std::ostringstream note;
    note << "spherical " << cell_name(t.p, t.q) << " -> " << got << " (expected " << t.label() << ", "
         << seconds_since(t0) << " s)";
    c.notes.push_back(note.str());
    c.expect(got == t.label(), "spherical " + cell_name(t.p, t.q) + " gave " + got + ", expected " + t.label());
    return r;
  }
};

const TableCell& find_cell(const std::vector<TableCell>& table, int p, int q) {
  for (const auto& t : table)
    if (t.p == p && t.q == q) return t;
  throw std::logic_error("cell not in table");
}

bool has_root(const std::vector<ClassifiedSet>& sets, const AlgebraicNumber& lambda) {
  for (const auto& s : sets)
    if (alg_equal(s.key.lambda, lambda)) return true;
  return false;
}

void criterion1(Runner& run) {
  Criterion c{1, "ambient classification, small tier"};
  auto t0 = Clock::now();
  for (const auto& t : table1())
    if (t.tier == Tier::Small && t.compared) run.compare_table1(c, t);
  c.expect(scan_small_orders(1, 1, 4).empty(), "(1,1) has a proper 4-point set");
  const CellResult& r11 = run.cell(1, 1);
  bool base_empty = true;
  for (const auto& levels : r11.levels)
    for (const auto& l : levels)
      if (l.n == 5 && !l.Lprime.empty()) base_empty = false;
  c.expect(base_empty, "(1,1) base level n=5 is not empty");
  double el = seconds_since(t0);
  c.expect(el < 1800.0, "runtime above 30 minutes");
  report(c, el);
}

void criterion2(Runner& run) {
  Criterion c{2, "spherical classification, small tier"};
  auto t0 = Clock::now();
  for (auto [p, q] : {std::pair{2, 1}, {3, 1}, {3, 2}, {4, 1}, {2, 2}}) {
    SphericalResult r = run.compare_table2(c, find_cell(table2(), p, q));
    if (p == 2 && q == 1) {
      c.expect(r.infinite && !r.families.empty(), "(2,1) has no witness family");
      Graph witness = graph6_decode("C@");
      bool found = false;
      for (const auto& f : r.families) {
        if (canonical_form(f.hit.graph) != canonical_form(witness) || f.hit.branch != 1) continue;
        if (f.type != 2) continue;
        const auto& range = f.hit.range;
        if (!range.is_point && alg_equal(range.lo, AlgebraicNumber::from_rational(0)) && range.hi &&
            alg_equal(*range.hi, AlgebraicNumber::from_rational(make_rational(1, 3)))) {
          found = true;
          c.notes.push_back("(2,1) witness family C@, a=1, lambda in (0, 1/3), type 2, flag infinite");
        }
      }
      c.expect(found, "(2,1) witness family C@ on lambda in (0, 1/3) missing");
    }
    if (p == 4 && q == 1) {
      Graph flagged = graph6_decode("I??GhLF`w");
      bool found = false;
      for (const auto& con : r.contributions)
        for (const auto& e : con.excluded)
          if (canonical_form(e.set.graph) == canonical_form(flagged) && e.type == 3) {
            found = true;
            c.notes.push_back("(4,1) excluded " + graph6_encode(e.set.graph) + " of type 3 from " +
                              cell_name(con.source_p, con.source_q));
          }
      c.expect(found, "(4,1) exclusion of the type 3 graph I??GhLF`w not identified");
    }
  }
  report(c, seconds_since(t0));
}

void criterion3(Runner& run) {
  Criterion c{3, "exact lambda checks"};
  auto t0 = Clock::now();
  AlgebraicNumber phi = isolate_roots_in(IntPolynomial{-1, 1, 1}, 0, 1).at(0);
  const CellResult& r31 = run.cell(3, 1);
  for (const auto& w : r31.winners)
    c.expect(alg_equal(w.key.lambda, phi) && w.key.branch == 1, "(3,1) winner " + graph6_encode(w.graph) +
                                                                     " has lambda " + w.key.lambda.to_string());
  c.expect(r31.winners.size() == 3, "(3,1) winner count");
  AlgebraicNumber hept = isolate_roots(IntPolynomial{-1, -2, 1, 1}).at(1);
  const CellResult& r22 = run.cell(2, 2);
  c.expect(r22.winners.size() == 1 && alg_equal(r22.winners[0].key.lambda, hept), "(2,2) lambda");
  const CellResult& r21 = run.cell(2, 1);
  std::vector<AlgebraicNumber> want = {AlgebraicNumber::from_rational(make_rational(1, 5))};
  for (const IntPolynomial& p :
       {IntPolynomial{-1, 1, 5}, IntPolynomial{1, -5, 3, 5}, IntPolynomial{-1, 5, 5}, IntPolynomial{-1, 8, 5},
        IntPolynomial{-4, -8, 5, 5}, IntPolynomial{-3, -5, 7, 5}, IntPolynomial{3, 9, 5}})
    want.push_back(isolate_roots(p).at(1));
  c.expect(r21.winners.size() == want.size(), "(2,1) winner count");
  for (const auto& w : want) c.expect(has_root(r21.winners, w), "(2,1) missing lambda " + w.to_string());
  std::set<std::size_t> used;
  for (const auto& s : r21.winners)
    for (std::size_t i = 0; i < want.size(); ++i)
      if (alg_equal(s.key.lambda, want[i])) used.insert(i);
  c.expect(used.size() == want.size(), "(2,1) lambdas are not pairwise matched");
  report(c, seconds_since(t0));
}

void criterion4() {
  Criterion c{4, "explicit constructions"};
  auto t0 = Clock::now();
  PointSet x = construct_22point();
  DistanceCheck dv = distance_values(x);
  c.expect(x.size() == 22, "22-point set size");
  c.expect(dv.all_rational && dv.values == std::vector<Rational>{2, 4}, "22-point distances are not {4, 2}");
  c.expect(embedding_dimension(distance_matrix(x)) == EmbeddingDimension{6, 1}, "22-point dimension");
  for (int n = 7; n <= 10; ++n) {
    PointSet y = construct_family_pq1(n);
    DistanceCheck dy = distance_values(y);
    c.expect(static_cast<int>(y.size()) == n * (n + 3) / 2, "family size at n=" + std::to_string(n));
    c.expect(dy.all_rational && dy.values == std::vector<Rational>{2, 4}, "family distances at n=" + std::to_string(n));
    c.expect(embedding_dimension(distance_matrix(y)) == EmbeddingDimension{n, 1}, "family dimension at n=" + std::to_string(n));
    c.expect(distance_pattern(y, 4) == family_pq1_pattern(n), "family pattern at n=" + std::to_string(n));
  }
  double el = seconds_since(t0);
  c.expect(el < 60.0, "fixtures took longer than one minute");
  report(c, el);
}

void criterion5(Runner& run, Tier tier) {
  Criterion c{5, "medium/full tiers"};
  if (tier == Tier::Small) {
    std::cout << "SKIP 5 medium/full tiers (run with --tier medium or --tier full)\n";
    return;
  }
  auto t0 = Clock::now();
  run.opt.allow_long = true;
  for (const auto& t : table1())
    if (t.tier != Tier::Small && t.tier <= tier && t.compared) run.compare_table1(c, t);
  for (const auto& t : table2())
    if (t.tier != Tier::Small && t.tier <= tier && t.compared) run.compare_table2(c, t);
  c.title += tier == Tier::Medium ? " (medium)" : " (medium and full)";
  report(c, seconds_since(t0));
}

Signature float_signature(const IntegerMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.rows());
  Eigen::MatrixXd f(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      f(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).get_d();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(f);
  Signature s;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (es.eigenvalues()(k) > 1e-9) ++s.positives;
    if (es.eigenvalues()(k) < -1e-9) ++s.negatives;
  }
  return s;
}

void criterion6(Runner& run) {
  Criterion c{6, "property suites"};
  auto t0 = Clock::now();
  std::mt19937 rng(20240611);

  int mismatches = 0;
  std::uniform_int_distribution<int> size(1, 8), entry(-4, 4);
  for (int t = 0; t < 1000; ++t) {
    const auto n = static_cast<std::size_t>(size(rng));
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = (rng() % 4 == 0) ? 0 : entry(rng);
    if (!(signature(m) == float_signature(m))) ++mismatches;
  }
  c.expect(mismatches == 0, std::to_string(mismatches) + " exact/float signature mismatches");
  c.notes.push_back("signature vs float oracle: 1000 matrices");

  int gower_bad = 0;
  std::uniform_int_distribution<int> gsize(2, 7), num(-9, 9);
  for (int t = 0; t < 200; ++t) {
    const auto n = static_cast<std::size_t>(gsize(rng));
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) m(i, j) = m(j, i) = make_rational(num(rng), 1 + static_cast<long>(rng() % 3));
    std::vector<Rational> ell(n), uni(n, make_rational(1, static_cast<long>(n)));
    Rational s = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) s += ell[i] = make_rational(num(rng), 1 + static_cast<long>(rng() % 4));
    ell[n - 1] = 1 - s;
    if (!(signature(f_matrix(m, ell)) == signature(f_matrix(m, uni)))) ++gower_bad;
  }
  c.expect(gower_bad == 0, std::to_string(gower_bad) + " centering-weight invariance failures");
  c.notes.push_back("centering-weight invariance: 200 cases");

  int formula_bad = 0, formula_cases = 0;
  std::vector<std::vector<Graph>> graphs(8);
  for (int n = 1; n <= 7; ++n) graphs[static_cast<std::size_t>(n)] = generate_all(n);
  for (int n = 2; n <= 7; ++n)
    for (const Graph& g : graphs[static_cast<std::size_t>(n)])
      for (int branch : {1, -1})
        for (Rational b : {make_rational(1, 3), make_rational(-1, 3), make_rational(1, 2)}) {
          RationalMatrix m = relation_matrix(g, branch, b);
          std::vector<Rational> uni(m.rows(), make_rational(1, n));
          if (!(centered_signature(m) == signature(f_matrix(m, uni)))) ++formula_bad;
          ++formula_cases;
        }
  c.expect(formula_bad == 0, std::to_string(formula_bad) + " centered-signature formula failures");
  c.notes.push_back("centered-signature formula: " + std::to_string(formula_cases) + " cases, orders 2..7");

  int witnesses = 0;
  for (const auto& [pq, cell] : run.cache)
    for (const auto& w : cell.winners) {
      DissimilarityMatrix d = set_matrix(w);
      try {
        auto idx = principal_witness(d);
        c.expect(static_cast<int>(idx.size()) == w.dim.p + w.dim.q + 1 &&
                     embedding_dimension(d.principal(idx)) == w.dim,
                 "witness for " + graph6_encode(w.graph));
      } catch (const Error& e) {
        c.expect(false, "no witness for " + graph6_encode(w.graph) + ": " + e.what());
      }
      ++witnesses;
    }
  c.notes.push_back("principal-submatrix witness: " + std::to_string(witnesses) + " winners");

  const std::size_t expected[] = {1, 1, 2, 4, 11, 34, 156, 1044};
  for (int n = 1; n <= 7; ++n) {
    std::set<CanonicalKey> orderly, brute;
    for (const auto& g : graphs[static_cast<std::size_t>(n)]) orderly.insert(canonical_form(g));
    for (const auto& g : generate_brute_force(n)) brute.insert(canonical_form(g));
    c.expect(graphs[static_cast<std::size_t>(n)].size() == expected[n] && orderly == brute,
             "generation mismatch at n=" + std::to_string(n));
    for (const auto& g : graphs[static_cast<std::size_t>(n)])
      if (!(graph6_decode(graph6_encode(g)) == g)) c.expect(false, "graph6 round-trip " + graph6_encode(g));
  }
  c.notes.push_back("generation counts vs brute force and graph6 round-trip: n <= 7");

  int t2 = 0, non = 0;
  for (int n = 4; n <= 6; ++n)
    for (const Graph& g : graphs[static_cast<std::size_t>(n)]) {
      if (g.is_complete() || g.is_edgeless()) continue;
      for (long a : {1L, -1L})
        for (Rational b : {make_rational(1, 5), make_rational(3, 10), make_rational(-1, 5), make_rational(2, 1)}) {
          auto d = DissimilarityMatrix::from_relation(g, Rational(a), AlgebraicNumber::from_rational(b));
          EmbeddingDimension dim = embedding_dimension(d);
          bool type2 = classify_type(d) == 2;
          bool sph = is_spherical_in_embedding(d);
          if (type2 != sph) c.expect(false, "type 2 vs spherical for " + graph6_encode(g));
          if (!type2) {
            ++non;
            continue;
          }
          ++t2;
          SphericalPlacement pl = spherical_radius(d);
          bool flips = pl.below == Signature{dim.p, dim.q + 1} && pl.above == Signature{dim.p + 1, dim.q} &&
                       gram_signature(d, pl.a_below) == pl.below && gram_signature(d, pl.a_above) == pl.above;
          if (!flips) c.expect(false, "no signature flip around critical a for " + graph6_encode(g));
        }
    }
  c.notes.push_back("type 2 iff spherical: " + std::to_string(t2) + " spherical, " + std::to_string(non) +
                    " non-spherical, flips checked on both sides");

  auto k = k_integrality({1, make_rational(1, 2)});
  c.expect(k.size() == 2 && k[0] == -1 && k[1] == 2, "K for (1, 1/2) is not (-1, 2)");
  report(c, seconds_since(t0));
}

void criterion7() {
  Criterion c{7, "determinism across worker counts"};
  auto t0 = Clock::now();
  auto run = [](int workers) {
    ClassifyOptions o;
    o.workers = workers;
    return classify_report_json(classify(2, 2, o), {utc_now(), 0.0});
  };
  std::string one = run(1);
  std::string eight = run(8);
  c.expect(strip_timestamp(one) == strip_timestamp(eight), "(2,2) reports differ between 1 and 8 workers");
  report(c, seconds_since(t0));
}

Tier parse_tier(const std::string& s) {
  if (s == "medium") return Tier::Medium;
  if (s == "full") return Tier::Full;
  return Tier::Small;
}

}  // namespace

int main(int argc, char** argv) {
  Tier tier = Tier::Small;
  if (const char* env = std::getenv("PQDIST_ACCEPTANCE_TIER")) tier = parse_tier(env);
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--tier") tier = parse_tier(argv[i + 1]);
  Runner run;
  criterion1(run);
  criterion2(run);
  criterion3(run);
  criterion4();
  criterion5(run, tier);
  criterion6(run);
  criterion7();
  return g_failed == 0 ? 0 : 1;
}
