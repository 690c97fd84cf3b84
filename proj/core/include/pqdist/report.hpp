#pragma once

#include <string>
#include <vector>

#include "pqdist/search.hpp"
#include "pqdist/spherical.hpp"

namespace pqdist {

inline constexpr int kReportSchema = 1;

struct RunStamp {
  std::string started_utc;
  double elapsed_seconds = 0;
};

/// Current time as YYYY-MM-DDTHH:MM:SSZ.
std::string utc_now();

/// Report bodies are deterministic; all timing sits in the "timestamp" object.
std::string classify_report_json(const CellResult& cell, const RunStamp& stamp);
std::string spherical_report_json(const SphericalResult& res, const RunStamp& stamp);
/// Throws DegenerateRelationError for complete or edgeless graphs.
std::string check_graph_json(const Graph& g, int p, int q, const std::vector<int>& branches);

/// Report with the "timestamp" member removed.
std::string strip_timestamp(const std::string& report);

std::vector<ClassifiedSet> spherical_sets(const SphericalResult& res);

std::string sets_graph6(const std::vector<ClassifiedSet>& sets);
std::string sets_dot(const std::vector<ClassifiedSet>& sets, const std::string& name);
std::string sets_csv(const std::vector<ClassifiedSet>& sets);

/// "order_count" with ∞ for infinite cells.
std::string cell_label(int order, bool infinite, std::size_t count);

}  // namespace pqdist
