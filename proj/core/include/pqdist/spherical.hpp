#pragma once

#include <map>
#include <utility>
#include <vector>

#include "pqdist/algebraic.hpp"
#include "pqdist/embedding.hpp"
#include "pqdist/search.hpp"

namespace pqdist {

/// Gram matrix of the set on S_{p,q} of radius r is (-D + aJ)/2 with a = 2r.
struct SphericalPlacement {
  EmbeddingDimension target;
  AlgebraicNumber a;
  AlgebraicNumber r;
  /// sign(-D + a'J) at rational a' on either side of a.
  Rational a_below;
  Rational a_above;
  Signature below;
  Signature above;
};

/// sign(-D + aJ) for rational a.
Signature gram_signature(const DissimilarityMatrix& d, const Rational& a);

bool is_spherical_in_embedding(const DissimilarityMatrix& d);

/// Throws DomainError unless D is Type (2).
SphericalPlacement spherical_radius(const DissimilarityMatrix& d);

struct MinimalSphere {
  EmbeddingDimension sphere;
  int type = 0;
  AlgebraicNumber a;  // witness with sign(-D + aJ) = sphere
};

MinimalSphere minimal_spherical_dimension(const DissimilarityMatrix& d);

/// -D for a relation matrix: a and b negated.
DissimilarityMatrix negated(const DissimilarityMatrix& d);

struct SphericalSet {
  ClassifiedSet set;
  int source_p = 0;
  int source_q = 0;
  int type = 0;          // type of the classified representative
  bool negated = false;  // the qualifying set is -D (p = q cells)
};

struct SphericalFamily {
  ScanHit hit;  // range restricted to one type
  int source_p = 0;
  int source_q = 0;
  int type = 0;
  bool negated = false;
};

struct SphericalContribution {
  int source_p = 0;
  int source_q = 0;
  std::vector<int> types;
  int order = 0;  // 0 when nothing qualifies
  bool infinite = false;
  std::vector<SphericalSet> sets;
  std::vector<SphericalFamily> families;
  std::vector<SphericalSet> excluded;  // larger sets of the cell dropped by type
};

struct SphericalResult {
  int p = 0;
  int q = 0;
  int max_order = 0;
  bool infinite = false;
  std::vector<SphericalSet> winners;
  std::vector<SphericalFamily> families;
  std::vector<SphericalContribution> contributions;
};

using CellCache = std::map<std::pair<int, int>, CellResult>;

/// Cached classify.
const CellResult& cell_result(int p, int q, const ClassifyOptions& opt, CellCache& cache);

SphericalResult classify_spherical(int p, int q, const ClassifyOptions& opt = {},
                                   CellCache* cache = nullptr);

}  // namespace pqdist
