#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "lapdom/cli/graph_spec.hpp"
#include "lapdom/verify.hpp"

namespace lapdom::cli {

/// Both approximation ratios of one graph, exactly.
struct RatioRecord {
  std::string graph_id;
  std::size_t n = 0;
  std::size_t m = 0;
  std::optional<std::size_t> gamma;
  std::optional<std::size_t> m01;
  std::optional<std::size_t> m2n;
  /// gamma / m[0,1), when m[0,1) > 0.
  std::optional<Rational> ratio_lower;
  /// m[2,n] / gamma.
  std::optional<Rational> ratio_upper;
};

inline constexpr const char* kRatioCsvHeader = "graph_id,n,m,gamma,m01,m2n,ratio_lower,ratio_upper";

/// Fills the ratios from the counts that are present.
RatioRecord make_ratio_record(std::string graph_id, std::size_t n, std::size_t m, std::optional<std::size_t> gamma,
                              std::optional<std::size_t> m01, std::optional<std::size_t> m2n);

/// Computes gamma and the counts directly; quantities beyond the caps stay empty.
RatioRecord ratio_record(const NamedGraph& g, const VerifyConfig& config = {});
RatioRecord ratio_record(const TheoremReport& report);

/// "p/q" for every value, including integers; empty when absent.
std::string ratio_string(const std::optional<Rational>& q);

std::string csv_field(std::string_view text);
/// One row in kRatioCsvHeader order, without a newline.
std::string csv_row(const RatioRecord& r);

void to_json(nlohmann::json& j, const RatioRecord& r);

}  // namespace lapdom::cli
