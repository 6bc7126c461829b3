#include "qzm/diagrams.hpp"

#include <algorithm>
#include <sstream>

#include "qzm/errors.hpp"

namespace qzm {

namespace {

const char* const kBox = "[]";
const char* const kEmpty = "∅";

void extend(std::vector<int>& cur, int max_rows, int h, std::vector<YoungDiagram>& out) {
  out.emplace_back(cur);
  if (static_cast<int>(cur.size()) >= max_rows) return;
  const int rows_after = static_cast<int>(cur.size()) + 1;
  const int cap = cur.empty() ? h - 1 : cur.back();
  for (int m = 1; m <= cap; ++m) {
    const int first = cur.empty() ? m : cur.front();
    if (first + rows_after > h) break;
    cur.push_back(m);
    extend(cur, max_rows, h, out);
    cur.pop_back();
  }
}

}  // namespace

YoungDiagram::YoungDiagram(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t t = 0; t < parts_.size(); ++t) {
    if (parts_[t] < 0) throw InvalidParameter("negative diagram part");
    if (t > 0 && parts_[t] > parts_[t - 1]) throw InvalidParameter("diagram parts must be weakly decreasing");
    if (parts_[t] == 0) throw InvalidParameter("zero part before a nonzero one");
  }
}

int YoungDiagram::boxes() const {
  int s = 0;
  for (int m : parts_) s += m;
  return s;
}

int YoungDiagram::part(int j) const {
  if (j < 1) throw InvalidParameter("row index must be >= 1");
  return j <= rows() ? parts_[static_cast<std::size_t>(j - 1)] : 0;
}

int YoungDiagram::spread() const { return empty() ? 0 : rows() + parts_.front(); }

int YoungDiagram::max_hook() const { return empty() ? 0 : rows() + parts_.front() - 1; }

bool YoungDiagram::admissible(int n, int h) const { return rows() <= n - 1 && spread() <= h; }

std::string YoungDiagram::to_string() const {
  std::string s = "(";
  for (std::size_t t = 0; t < parts_.size(); ++t) {
    if (t) s += ",";
    s += std::to_string(parts_[t]);
  }
  return s + ")";
}

nlohmann::json YoungDiagram::to_json(int n, int h) const {
  nlohmann::json j;
  j["parts"] = parts_;
  j["boxes"] = boxes();
  j["spread"] = spread();
  j["max_hook"] = max_hook();
  j["unitary"] = is_unitary(*this, h - n);
  return j;
}

bool operator<(const YoungDiagram& a, const YoungDiagram& b) {
  if (a.boxes() != b.boxes()) return a.boxes() < b.boxes();
  return a.parts_ < b.parts_;
}

std::vector<YoungDiagram> enumerate_diagrams(int n, int h) {
  if (n < 2) throw InvalidParameter("n must be >= 2");
  if (h < n + 1) throw InvalidParameter("h must be >= n+1");
  std::vector<YoungDiagram> out;
  std::vector<int> cur;
  extend(cur, n - 1, h, out);
  std::sort(out.begin(), out.end());
  return out;
}

long long count_diagrams(int n, int h) {
  if (n < 2) throw InvalidParameter("n must be >= 2");
  if (h < n + 1) throw InvalidParameter("h must be >= n+1");
  long long total = 0;
  long long binom = 1;  // C(h-1, i)
  for (int i = 0; i <= n - 1; ++i) {
    total += binom;
    binom = binom * (h - 1 - i) / (i + 1);
  }
  return total;
}

bool is_unitary(const YoungDiagram& y, int k) { return y.part(1) <= k; }

std::string to_string(Growth g) {
  switch (g) {
    case Growth::Diagram: return "Diagram";
    case Growth::StandardRuleViolation: return "StandardRuleViolation";
    case Growth::SpreadViolation: return "SpreadViolation";
    case Growth::RowOverflow: return "RowOverflow";
  }
  return "?";
}

GrowthResult grow(const YoungDiagram& y, int j, int n, int h) {
  if (j < 1 || j > n) throw InvalidParameter("row index out of range");
  if (j == n) return {Growth::RowOverflow, std::nullopt};
  if (j > y.rows() + 1) return {Growth::StandardRuleViolation, std::nullopt};
  if (j >= 2 && y.part(j) == y.part(j - 1)) return {Growth::StandardRuleViolation, std::nullopt};
  std::vector<int> parts = y.parts();
  if (j > y.rows())
    parts.push_back(1);
  else
    ++parts[static_cast<std::size_t>(j - 1)];
  YoungDiagram g(std::move(parts));
  if (g.spread() > h) return {Growth::SpreadViolation, std::nullopt};
  return {Growth::Diagram, g};
}

std::string render(const YoungDiagram& y) {
  if (y.empty()) return kEmpty;
  std::string s;
  for (std::size_t t = 0; t < y.parts().size(); ++t) {
    if (t) s += "\n";
    for (int b = 0; b < y.parts()[t]; ++b) s += kBox;
  }
  return s;
}

YoungDiagram parse_rendered(const std::string& text) {
  if (text == kEmpty) return YoungDiagram();
  std::vector<int> parts;
  std::istringstream in(text);
  std::string line;
  const std::string box = kBox;
  while (std::getline(in, line)) {
    if (line.size() % box.size() != 0) throw InvalidParameter("malformed diagram row: " + line);
    for (std::size_t p = 0; p < line.size(); p += box.size())
      if (line.compare(p, box.size(), box) != 0) throw InvalidParameter("malformed diagram row: " + line);
    parts.push_back(static_cast<int>(line.size() / box.size()));
  }
  return YoungDiagram(std::move(parts));
}

}  // namespace qzm
