#include "pqdist/report.hpp"

#include <algorithm>
#include <ctime>
#include <sstream>

#include "json_util.hpp"
#include "pqdist/errors.hpp"

namespace pqdist {

namespace {

Json dim_json(const EmbeddingDimension& d) { return Json::array({d.p, d.q}); }

Json range_json(const LambdaRange& range, int branch) {
  Json j;
  LambdaRange r = range;
  r.lo = minimal_form(r.lo);
  if (r.hi) r.hi = minimal_form(*r.hi);
  if (r.is_point) {
    j["lambda"] = algebraic_to_json(r.lo);
    j["b"] = algebraic_to_json(minimal_form(b_of_lambda(r.lo, branch)));
    return j;
  }
  j["lambda_lo"] = algebraic_to_json(r.lo);
  j["lambda_hi"] = r.hi ? algebraic_to_json(*r.hi) : Json("inf");
  j["b_lo"] = algebraic_to_json(minimal_form(b_of_lambda(r.lo, branch)));
  j["b_hi"] = r.hi ? algebraic_to_json(minimal_form(b_of_lambda(*r.hi, branch)))
                   : algebraic_to_json(AlgebraicNumber::from_rational(Rational(branch)));
  return j;
}

Json set_json(const ClassifiedSet& s) {
  Json j;
  DissimilarityMatrix d = DissimilarityMatrix::from_relation(s.graph, Rational(s.key.branch), s.key.b());
  EmbeddingDimension dim = embedding_dimension(d);
  int type = classify_type(d);
  j["graph6"] = graph6_encode(s.graph);
  j["order"] = s.graph.order();
  j["branch"] = s.key.branch;
  j["a"] = std::to_string(s.key.branch);
  j["b"] = algebraic_to_json(s.key.b());
  j["lambda"] = algebraic_to_json(s.key.lambda);
  j["embedding_dimension"] = dim_json(dim);
  j["type"] = type;
  j["spherical"] = type == 2;
  j["spherical_by_negation"] = dim.p == dim.q && type == 3;
  if (type == 2 || (dim.p == dim.q && type == 3)) {
    SphericalPlacement pl = spherical_radius(type == 2 ? d : negated(d));
    j["radius_a"] = algebraic_to_json(pl.a);
    j["radius"] = algebraic_to_json(pl.r);
  } else {
    j["radius_a"] = nullptr;
    j["radius"] = nullptr;
  }
  j["minimal_sphere"] = type == 2 ? dim_json(dim) : dim_json(minimal_spherical_dimension(d).sphere);
  j["witness"] = principal_witness(d);
  return j;
}

Json hit_json(const ScanHit& h) {
  Json j;
  j["graph6"] = graph6_encode(h.graph);
  j["order"] = h.graph.order();
  j["branch"] = h.branch;
  j["range"] = range_json(h.range, h.branch);
  return j;
}

Json stamp_json(const RunStamp& s) {
  Json j;
  j["started_utc"] = s.started_utc;
  j["elapsed_seconds"] = s.elapsed_seconds;
  return j;
}

}  // namespace

std::string utc_now() {
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string cell_label(int order, bool infinite, std::size_t count) {
  return std::to_string(order) + "_" + (infinite ? std::string("∞") : std::to_string(count));
}

std::string classify_report_json(const CellResult& cell, const RunStamp& stamp) {
  Json j;
  j["schema"] = kReportSchema;
  j["kind"] = "classify";
  j["cell"] = Json::array({cell.p, cell.q});
  j["max_order"] = cell.max_order;
  j["infinite"] = cell.infinite;
  j["count"] = cell.infinite ? Json(nullptr) : Json(cell.winners.size());
  j["label"] = cell_label(cell.max_order, cell.infinite, cell.winners.size());
  std::vector<std::string> g6;
  for (const auto& w : cell.winners) {
    std::string s = graph6_encode(w.graph);
    if (std::find(g6.begin(), g6.end(), s) == g6.end()) g6.push_back(s);
  }
  j["distinct_graphs"] = g6.size();
  Json win = Json::array();
  for (const auto& w : cell.winners) win.push_back(set_json(w));
  j["winners"] = win;
  Json fam = Json::array();
  for (const auto& h : cell.families) fam.push_back(hit_json(h));
  j["families"] = fam;
  Json search;
  search["base_order"] = cell.p + cell.q + 3;
  search["open_ranges"] = cell.open_ranges.size();
  search["critical_points"] = cell.critical_points.size();
  search["graphs_examined"] = cell.graphs_examined;
  search["extensions_tried"] = cell.extensions_tried;
  Json buckets = Json::array();
  for (const auto& t : cell.traces) {
    Json b;
    b["branch"] = t.key.branch;
    b["lambda"] = algebraic_to_json(t.key.lambda);
    Json lv = Json::array();
    for (const auto& l : t.levels) lv.push_back(Json{{"n", l.n}, {"L", l.L}, {"Lprime", l.Lprime}});
    b["levels"] = lv;
    buckets.push_back(b);
  }
  search["buckets"] = buckets;
  j["search"] = search;
  Json rej = Json::array();
  for (const auto& r : cell.rejected)
    rej.push_back(Json{{"graph6", graph6_encode(r.graph)},
                       {"branch", r.key.branch},
                       {"lambda", algebraic_to_json(r.key.lambda)},
                       {"embedding_dimension", dim_json(r.dim)}});
  j["rejected"] = rej;
  Json diag = Json::array();
  for (const auto& [g, br] : cell.boundary)
    diag.push_back(Json{{"graph6", graph6_encode(g)}, {"branch", br}, {"lambda", "-1/2"}});
  j["diagnostics"] = Json{{"boundary", diag}};
  j["timestamp"] = stamp_json(stamp);
  return j.dump(2) + "\n";
}

std::string spherical_report_json(const SphericalResult& res, const RunStamp& stamp) {
  Json j;
  j["schema"] = kReportSchema;
  j["kind"] = "spherical";
  j["cell"] = Json::array({res.p, res.q});
  j["max_order"] = res.max_order;
  j["infinite"] = res.infinite;
  j["count"] = res.infinite ? Json(nullptr) : Json(res.winners.size());
  j["label"] = cell_label(res.max_order, res.infinite, res.winners.size());
  auto entry = [](const SphericalSet& s) {
    Json e;
    e["graph6"] = graph6_encode(s.set.graph);
    e["order"] = s.set.graph.order();
    e["source_cell"] = Json::array({s.source_p, s.source_q});
    e["branch"] = s.set.key.branch;
    e["lambda"] = algebraic_to_json(s.set.key.lambda);
    e["b"] = algebraic_to_json(s.set.key.b());
    e["type"] = s.type;
    e["negated"] = s.negated;
    return e;
  };
  Json win = Json::array();
  for (const auto& s : res.winners) {
    Json e = entry(s);
    DissimilarityMatrix d = DissimilarityMatrix::from_relation(s.set.graph, Rational(s.set.key.branch), s.set.key.b());
    if (s.negated) d = negated(d);
    MinimalSphere ms = minimal_spherical_dimension(d);
    e["sphere"] = dim_json(ms.sphere);
    e["radius_a"] = algebraic_to_json(ms.a);
    if (ms.a.is_rational()) {
      e["radius"] = algebraic_to_json(AlgebraicNumber::from_rational(ms.a.lo / 2));
    } else {
      e["radius"] = algebraic_to_json(mobius(ms.a, 1, 0, 0, 2));
    }
    win.push_back(e);
  }
  j["winners"] = win;
  Json fam = Json::array();
  for (const auto& f : res.families) {
    Json e = hit_json(f.hit);
    e["source_cell"] = Json::array({f.source_p, f.source_q});
    e["type"] = f.type;
    e["negated"] = f.negated;
    fam.push_back(e);
  }
  j["families"] = fam;
  Json contrib = Json::array();
  for (const auto& c : res.contributions) {
    Json e;
    e["source_cell"] = Json::array({c.source_p, c.source_q});
    e["types"] = c.types;
    e["order"] = c.order;
    e["infinite"] = c.infinite;
    e["sets"] = c.sets.size();
    e["families"] = c.families.size();
    Json ex = Json::array();
    for (const auto& s : c.excluded) ex.push_back(entry(s));
    e["excluded"] = ex;
    contrib.push_back(e);
  }
  j["contributions"] = contrib;
  j["timestamp"] = stamp_json(stamp);
  return j.dump(2) + "\n";
}

std::string check_graph_json(const Graph& g, int p, int q, const std::vector<int>& branches) {
  if (g.order() < 2 || g.is_complete() || g.is_edgeless())
    throw DegenerateRelationError("degenerate: single relation");
  Json j;
  j["schema"] = kReportSchema;
  j["kind"] = "check-graph";
  j["graph6"] = graph6_encode(g);
  j["order"] = g.order();
  j["cell"] = Json::array({p, q});
  RelationSpectrum s = relation_spectrum(g);
  Json spec = Json::array();
  for (const auto& r : s.roots)
    spec.push_back(Json{{"mu", algebraic_to_json(r.value)}, {"multiplicity", r.multiplicity}});
  j["spectrum"] = spec;
  Json cands = Json::array();
  const AlgebraicNumber half = AlgebraicNumber::from_rational(Rational(-1, 2));
  for (int br : branches) {
    for (const auto& r : s.roots) {
      if (alg_compare(r.value, half) != Ordering::Greater || alg_sign(IntPolynomial{0, 1}, r.value) == 0) continue;
      AlgebraicNumber lam = minimal_form(r.value);
      Signature sig = relation_signature(s, br, lam);
      Json c;
      c["branch"] = br;
      c["lambda"] = algebraic_to_json(lam);
      c["b"] = algebraic_to_json(b_of_lambda(lam, br));
      c["embedding_dimension"] = Json::array({sig.positives, sig.negatives});
      bool proper = sig == Signature{p, q};
      c["proper"] = proper;
      if (proper) {
        DissimilarityMatrix d = DissimilarityMatrix::from_relation(g, Rational(br), b_of_lambda(lam, br));
        int type = classify_type(d);
        c["type"] = type;
        c["spherical"] = type == 2;
        c["spherical_by_negation"] = p == q && type == 3;
        MinimalSphere ms = minimal_spherical_dimension(type == 3 && p == q ? negated(d) : d);
        c["sphere"] = dim_json(ms.sphere);
        c["radius_a"] = algebraic_to_json(ms.a);
      }
      cands.push_back(c);
    }
  }
  j["candidates"] = cands;
  Json ranges = Json::array();
  for (const auto& h : scan_graph(g, p, q))
    if (std::find(branches.begin(), branches.end(), h.branch) != branches.end() && !h.range.is_point)
      ranges.push_back(hit_json(h));
  j["open_ranges"] = ranges;
  return j.dump(2) + "\n";
}

std::string strip_timestamp(const std::string& report) {
  Json j = Json::parse(report);
  j.erase("timestamp");
  return j.dump(2) + "\n";
}

std::vector<ClassifiedSet> spherical_sets(const SphericalResult& res) {
  std::vector<ClassifiedSet> out;
  for (const auto& s : res.winners) out.push_back(s.set);
  return out;
}

std::string sets_graph6(const std::vector<ClassifiedSet>& sets) {
  std::string out;
  for (const auto& s : sets) out += graph6_encode(s.graph) + "\n";
  return out;
}

std::string sets_dot(const std::vector<ClassifiedSet>& sets, const std::string& name) {
  std::ostringstream out;
  int k = 0;
  for (const auto& s : sets) {
    out << "graph \"" << name << "_" << k++ << "\" {\n";
    out << "  label=\"" << graph6_encode(s.graph) << " a=" << s.key.branch << " b=" << s.key.b().decimal(10)
        << "\";\n";
    for (int v = 0; v < s.graph.order(); ++v) out << "  " << v << ";\n";
    for (int u = 0; u < s.graph.order(); ++u)
      for (int v = u + 1; v < s.graph.order(); ++v)
        if (s.graph.adjacent(u, v)) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
  }
  return out.str();
}

std::string sets_csv(const std::vector<ClassifiedSet>& sets) {
  std::ostringstream out;
  out << "graph6,order,branch,lambda,b,p,q\n";
  for (const auto& s : sets)
    out << graph6_encode(s.graph) << "," << s.graph.order() << "," << s.key.branch << ","
        << s.key.lambda.decimal(15) << "," << s.key.b().decimal(15) << "," << s.dim.p << "," << s.dim.q << "\n";
  return out.str();
}

}  // namespace pqdist
