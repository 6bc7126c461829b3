#pragma once

// su(n) Young diagrams with at most n-1 rows: spread, maximal hook length,
// admissibility for a given h, enumeration and growth classification.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace qzm {

class YoungDiagram {
 public:
  YoungDiagram() = default;
  /// Parts m_1 >= m_2 >= ... >= m_i >= 1; trailing zeros are dropped.
  /// Throws InvalidParameter on increasing or negative parts.
  explicit YoungDiagram(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int boxes() const;
  /// m_j, 1-based; zero beyond the last row.
  int part(int j) const;

  int spread() const;
  int max_hook() const;
  /// rows <= n-1 and spread <= h.
  bool admissible(int n, int h) const;

  std::string to_string() const;  // "(2,1)", "()" for the empty diagram
  nlohmann::json to_json(int n, int h) const;

  friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;
  /// Box count first, then lexicographic on parts.
  friend bool operator<(const YoungDiagram& a, const YoungDiagram& b);

 private:
  std::vector<int> parts_;
};

/// All admissible diagrams (empty included), ascending in diagram order.
std::vector<YoungDiagram> enumerate_diagrams(int n, int h);

/// Closed form sum_{i=0}^{n-1} C(h-1, i).
long long count_diagrams(int n, int h);

/// m_1 <= k.
bool is_unitary(const YoungDiagram& y, int k);

enum class Growth { Diagram, StandardRuleViolation, SpreadViolation, RowOverflow };
std::string to_string(Growth g);

struct GrowthResult {
  Growth kind = Growth::Diagram;
  std::optional<YoungDiagram> grown;  // set iff kind == Diagram
};

/// Classifies Y + one box in row j (1 <= j <= n).
GrowthResult grow(const YoungDiagram& y, int j, int n, int h);

/// Rows of boxes, one line per row; the empty diagram renders as "∅".
std::string render(const YoungDiagram& y);
/// Inverse of render.
YoungDiagram parse_rendered(const std::string& text);

}  // namespace qzm
