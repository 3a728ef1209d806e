#include "lapdom/graph6.hpp"

#include <vector>

namespace lapdom {

namespace {

constexpr char kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

[[noreturn]] void malformed(const std::string& why) {
  throw GraphError("malformed graph6 string: " + why);
}

int sextet(char c) {
  if (c < 63 || c > 126) malformed("byte " + std::to_string(static_cast<int>(c)) + " outside 63..126");
  return c - kBias;
}

std::uint64_t read_bits(std::string_view text, std::size_t& pos, int groups) {
  std::uint64_t value = 0;
  for (int i = 0; i < groups; ++i) {
    if (pos >= text.size()) malformed("truncated size field");
    value = (value << 6) | static_cast<std::uint64_t>(sextet(text[pos++]));
  }
  return value;
}

void write_bits(std::string& out, std::uint64_t value, int groups) {
  for (int i = groups - 1; i >= 0; --i) {
    out.push_back(static_cast<char>(((value >> (6 * i)) & 63) + kBias));
  }
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) malformed("empty input");

  std::size_t pos = 0;
  std::uint64_t n = 0;
  if (text[0] != '~') {
    n = read_bits(text, pos, 1);
  } else if (text.size() > 1 && text[1] == '~') {
    pos = 2;
    n = read_bits(text, pos, 6);
  } else {
    pos = 1;
    n = read_bits(text, pos, 3);
  }

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) {
    malformed("expected " + std::to_string(bytes) + " adjacency bytes for n = " +
              std::to_string(n) + ", found " + std::to_string(text.size() - pos));
  }

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = sextet(text[pos + k / 6]);
      if ((byte >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  }
  // Padding bits must be zero.
  for (; k < bytes * 6; ++k) {
    if ((sextet(text[pos + k / 6]) >> (5 - k % 6)) & 1) malformed("nonzero padding bits");
  }
  return Graph(static_cast<std::size_t>(n), edges);
}

std::string emit_graph6(const Graph& g) {
  const std::uint64_t n = g.order();
  if (n > kGraph6MaxOrder) throw GraphError("graph too large for graph6");
  std::string out;
  if (n <= 62) {
    write_bits(out, n, 1);
  } else if (n <= 258047) {
    out.push_back('~');
    write_bits(out, n, 3);
  } else {
    out.append("~~");
    write_bits(out, n, 6);
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

}  // namespace lapdom
