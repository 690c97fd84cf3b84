#pragma once

#include <string>
#include <vector>

namespace pqdist {

enum class Tier { Small = 0, Medium = 1, Full = 2 };

/// Expected table entry: order_count, with count 0 meaning infinitely many.
struct TableCell {
  int p = 0;
  int q = 0;
  int order = 0;
  int count = 0;
  Tier tier = Tier::Small;
  bool compared = true;  // false: entry kept for display only

  bool infinite() const { return count == 0; }
  std::string label() const {
    return std::to_string(order) + "_" + (count == 0 ? std::string("∞") : std::to_string(count));
  }
};

inline Tier tier_of(int p, int q) {
  if (p + q <= 5 || (p == 5 && q == 0)) return Tier::Small;
  if (p + q <= 6) return Tier::Medium;
  return Tier::Full;
}

/// Largest proper sets.
inline const std::vector<TableCell>& table1() {
  static const std::vector<TableCell> t = {
      {1, 0, 3, 1, Tier::Small},   {2, 0, 5, 1, Tier::Small},  {3, 0, 6, 6, Tier::Small},
      {4, 0, 10, 1, Tier::Small},  {5, 0, 16, 1, Tier::Small}, {6, 0, 27, 1, Tier::Medium},
      {7, 0, 29, 1, Tier::Full},   {1, 1, 3, 0, Tier::Small},  {2, 1, 5, 8, Tier::Small},
      {3, 1, 7, 3, Tier::Small},   {4, 1, 10, 2, Tier::Small}, {5, 1, 13, 3, Tier::Medium},
      {6, 1, 22, 1, Tier::Full},   {2, 2, 7, 1, Tier::Small},  {3, 2, 8, 3, Tier::Small},
      {4, 2, 10, 3, Tier::Medium}, {5, 2, 13, 1, Tier::Full},  {3, 3, 9, 14, Tier::Medium},
      {4, 3, 12, 1, Tier::Full},
  };
  return t;
}

/// Largest proper spherical sets.
inline const std::vector<TableCell>& table2() {
  static const std::vector<TableCell> t = {
      {1, 0, 3, 1, Tier::Small, false},
      {2, 0, 5, 1, Tier::Small},   {3, 0, 6, 6, Tier::Small},  {4, 0, 10, 1, Tier::Small},
      {5, 0, 16, 1, Tier::Small},  {6, 0, 27, 1, Tier::Medium}, {7, 0, 28, 1, Tier::Full},
      {1, 1, 3, 0, Tier::Small},   {2, 1, 4, 0, Tier::Small},  {3, 1, 7, 3, Tier::Small},
      {4, 1, 10, 1, Tier::Small},  {5, 1, 13, 3, Tier::Medium}, {6, 1, 22, 1, Tier::Full},
      {2, 2, 7, 1, Tier::Small},   {3, 2, 8, 3, Tier::Small},  {4, 2, 10, 3, Tier::Medium},
      {5, 2, 13, 1, Tier::Full},   {3, 3, 9, 14, Tier::Medium}, {4, 3, 11, 3, Tier::Full},
  };
  return t;
}

}  // namespace pqdist
