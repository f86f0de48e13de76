#pragma once

#include <string>
#include <vector>

namespace qcw {

// Plain text column alignment for CLI tables.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string format_table(const Table& t);

}  // namespace qcw
