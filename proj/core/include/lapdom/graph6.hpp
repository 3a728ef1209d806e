#pragma once

#include <string>
#include <string_view>

#include "lapdom/graph.hpp"

namespace lapdom {

/// Largest order representable in graph6 (36-bit size field).
inline constexpr std::uint64_t kGraph6MaxOrder = 68719476735ull;

/// Decodes one graph6 string. An optional ">>graph6<<" header and trailing
/// newline are accepted. Throws GraphError on malformed input.
Graph parse_graph6(std::string_view text);

std::string emit_graph6(const Graph& g);

}  // namespace lapdom
