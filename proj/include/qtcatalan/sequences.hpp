#pragma once

#include <string>
#include <vector>

namespace qtcatalan {

// Text form shared by area sequences, depth sequences and reading words:
// comma-separated integers in parentheses, e.g. "(0,1,2,1,1,2,0,1,1)".
inline std::string format_sequence(const std::vector<int>& entries) {
  std::string out = "(";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(entries[i]);
  }
  out += ')';
  return out;
}

}  // namespace qtcatalan
