#include "qcw/table.hpp"

#include <algorithm>

namespace qcw {

std::string format_table(const Table& t) {
  size_t cols = t.header.size();
  for (const auto& r : t.rows) cols = std::max(cols, r.size());
  std::vector<size_t> width(cols, 0);
  auto widen = [&](const std::vector<std::string>& row) {
    for (size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  };
  widen(t.header);
  for (const auto& r : t.rows) widen(r);

  std::string out;
  auto emit = [&](const std::vector<std::string>& row) {
    for (size_t c = 0; c < row.size(); ++c) {
      if (c) out += "  ";
      out += row[c];
      if (c + 1 < row.size()) out.append(width[c] - row[c].size(), ' ');
    }
    out += '\n';
  };
  if (!t.header.empty()) {
    emit(t.header);
    size_t total = 0;
    for (size_t c = 0; c < cols; ++c) total += width[c] + (c ? 2 : 0);
    out.append(total, '-');
    out += '\n';
  }
  for (const auto& r : t.rows) emit(r);
  return out;
}

}  // namespace qcw
