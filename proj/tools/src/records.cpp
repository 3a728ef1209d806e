#include "lapdom/cli/records.hpp"

#include "lapdom/report.hpp"

namespace lapdom::cli {

namespace {

std::string optional_count(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : std::string(); }

}  // namespace

RatioRecord make_ratio_record(std::string graph_id, std::size_t n, std::size_t m, std::optional<std::size_t> gamma,
                              std::optional<std::size_t> m01, std::optional<std::size_t> m2n) {
  RatioRecord r{std::move(graph_id), n, m, gamma, m01, m2n, std::nullopt, std::nullopt};
  if (gamma && m01 && *m01 > 0) r.ratio_lower = fraction(*gamma, *m01);
  if (gamma && m2n && *gamma > 0) r.ratio_upper = fraction(*m2n, *gamma);
  return r;
}

RatioRecord ratio_record(const NamedGraph& g, const VerifyConfig& config) {
  const std::size_t n = g.graph.order();
  std::optional<std::size_t> gamma;
  std::optional<std::size_t> m01;
  std::optional<std::size_t> m2n;
  try {
    gamma = domination_number(g.graph, config.domination).set.size();
  } catch (const CapExceeded&) {
  }
  try {
    const ExactSpectrum s(g.graph, MatrixVariant::laplacian, config.exact);
    m01 = s.count(Interval::zero_one()).count;
    if (n >= 2) m2n = s.count(Interval::two_n()).count;
  } catch (const CapExceeded&) {
  }
  return make_ratio_record(g.id, n, g.graph.size(), gamma, m01, m2n);
}

RatioRecord ratio_record(const TheoremReport& report) {
  return make_ratio_record(report.graph_id, report.n, report.m, report.gamma, report.m01, report.m2n);
}

std::string ratio_string(const std::optional<Rational>& q) {
  if (!q) return {};
  return q->get_num().get_str() + "/" + q->get_den().get_str();
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\n") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_row(const RatioRecord& r) {
  return csv_field(r.graph_id) + "," + std::to_string(r.n) + "," + std::to_string(r.m) + "," +
         optional_count(r.gamma) + "," + optional_count(r.m01) + "," + optional_count(r.m2n) + "," +
         ratio_string(r.ratio_lower) + "," + ratio_string(r.ratio_upper);
}

void to_json(nlohmann::json& j, const RatioRecord& r) {
  const auto count = [](const std::optional<std::size_t>& v) -> nlohmann::json {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
  };
  const auto rational = [](const std::optional<Rational>& q) -> nlohmann::json {
    return q ? nlohmann::json(ratio_string(q)) : nlohmann::json(nullptr);
  };
  j = {{"graph_id", r.graph_id},
       {"n", r.n},
       {"m", r.m},
       {"gamma", count(r.gamma)},
       {"m01", count(r.m01)},
       {"m2n", count(r.m2n)},
       {"ratio_lower", rational(r.ratio_lower)},
       {"ratio_upper", rational(r.ratio_upper)}};
}

}  // namespace lapdom::cli
