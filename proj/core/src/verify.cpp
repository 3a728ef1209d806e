#include "lapdom/verify.hpp"

#include <algorithm>
#include <functional>

namespace lapdom {

namespace {

Rational rat(std::size_t v) { return Rational(static_cast<unsigned long>(v)); }
Rational truth(bool b) { return Rational(b ? 1 : 0); }

Rational ceil_div(std::size_t a, std::size_t b) { return rat((a + b - 1) / b); }

Graph complete_graph_k2() { return make_graph(2, {{0, 1}}); }

template <typename T>
struct Outcome {
  std::optional<T> value;
  std::string reason;
  bool computed = false;
};

template <typename T>
const Outcome<T>& evaluate(Outcome<T>& slot, const std::function<T()>& compute) {
  if (!slot.computed) {
    slot.computed = true;
    try {
      slot.value.emplace(compute());
    } catch (const CapExceeded& e) {
      slot.reason = e.what();
    }
  }
  return slot;
}

/// Count of the spectrum in the interval, or the reason it is undefined.
std::optional<std::size_t> count_in(const ExactSpectrum& s, const Interval& interval) {
  try {
    return s.count(interval.resolve(s.order()));
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

std::string empty_interval_reason(const Interval& interval, std::size_t n) {
  return "interval " + interval.to_string() + " is empty for n = " + std::to_string(n);
}

class Builder {
 public:
  explicit Builder(std::vector<Check>& out) : out_(out) {}

  void compare(std::string name, Relation r, Rational lhs, Rational rhs) {
    out_.push_back(Check::compare(std::move(name), r, std::move(lhs), std::move(rhs)));
  }
  void skip(std::string name, std::string reason) { out_.push_back(Check::skip(std::move(name), std::move(reason))); }

 private:
  std::vector<Check>& out_;
};

}  // namespace

std::string to_string(Relation r) {
  switch (r) {
    case Relation::le: return "<=";
    case Relation::lt: return "<";
    case Relation::ge: return ">=";
    case Relation::eq: return "==";
    case Relation::iff: return "<=>";
    case Relation::interlace: return "within +1 of";
  }
  return "?";
}

Check Check::compare(std::string name, Relation relation, Rational lhs, Rational rhs) {
  Check c;
  c.name = std::move(name);
  c.relation = relation;
  c.lhs = std::move(lhs);
  c.rhs = std::move(rhs);
  c.equality = c.lhs == c.rhs;
  switch (relation) {
    case Relation::le: c.holds = c.lhs <= c.rhs; break;
    case Relation::lt: c.holds = c.lhs < c.rhs; break;
    case Relation::ge: c.holds = c.lhs >= c.rhs; break;
    case Relation::eq:
    case Relation::iff: c.holds = c.equality; break;
    case Relation::interlace: c.holds = c.rhs <= c.lhs && c.lhs <= c.rhs + 1; break;
  }
  return c;
}

Check Check::skip(std::string name, std::string reason) {
  Check c;
  c.name = std::move(name);
  c.skipped_reason = std::move(reason);
  return c;
}

std::size_t TheoremReport::count_skipped() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.skipped(); }));
}

std::size_t TheoremReport::count_failed() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.failed(); }));
}

struct GraphFacts::Cache {
  Outcome<ExactSpectrum> spectrum;
  Outcome<ExactSpectrum> signless;
  std::optional<Graph> complement;
  Outcome<ExactSpectrum> complement_spectrum;
  Outcome<std::size_t> gamma;
  Outcome<std::size_t> complement_gamma;
  Outcome<std::size_t> matching;
};

GraphFacts::GraphFacts(Graph g, VerifyConfig config)
    : graph_(std::move(g)), config_(config), cls_(classify(graph_)), cache_(std::make_unique<Cache>()) {}

GraphFacts::~GraphFacts() = default;
GraphFacts::GraphFacts(GraphFacts&&) noexcept = default;

const ExactSpectrum* GraphFacts::spectrum() const {
  const auto& o = evaluate<ExactSpectrum>(cache_->spectrum, [&] {
    return ExactSpectrum(graph_, MatrixVariant::laplacian, config_.exact);
  });
  return o.value ? &*o.value : nullptr;
}

const ExactSpectrum* GraphFacts::signless_spectrum() const {
  const auto& o = evaluate<ExactSpectrum>(cache_->signless, [&] {
    return ExactSpectrum(graph_, MatrixVariant::signless, config_.exact);
  });
  return o.value ? &*o.value : nullptr;
}

const Graph& GraphFacts::complement_graph() const {
  if (!cache_->complement) cache_->complement.emplace(complement(graph_));
  return *cache_->complement;
}

const ExactSpectrum* GraphFacts::complement_spectrum() const {
  const auto& o = evaluate<ExactSpectrum>(cache_->complement_spectrum, [&] {
    return ExactSpectrum(complement_graph(), MatrixVariant::laplacian, config_.exact);
  });
  return o.value ? &*o.value : nullptr;
}

const std::optional<std::size_t>& GraphFacts::gamma() const {
  return evaluate<std::size_t>(cache_->gamma, [&] {
    return domination_number(graph_, config_.domination).set.size();
  }).value;
}

const std::optional<std::size_t>& GraphFacts::complement_gamma() const {
  return evaluate<std::size_t>(cache_->complement_gamma, [&] {
    return domination_number(complement_graph(), config_.domination).set.size();
  }).value;
}

const std::optional<std::size_t>& GraphFacts::matching() const {
  return evaluate<std::size_t>(cache_->matching, [&] { return matching_number(graph_, config_.matching); }).value;
}

std::string GraphFacts::spectrum_reason() const { return cache_->spectrum.reason; }
std::string GraphFacts::signless_reason() const { return cache_->signless.reason; }
std::string GraphFacts::complement_spectrum_reason() const { return cache_->complement_spectrum.reason; }
std::string GraphFacts::gamma_reason() const { return cache_->gamma.reason; }
std::string GraphFacts::complement_gamma_reason() const { return cache_->complement_gamma.reason; }
std::string GraphFacts::matching_reason() const { return cache_->matching.reason; }

std::vector<Check> check_core_bounds(const GraphFacts& f) {
  std::vector<Check> out;
  Builder b(out);
  const std::vector<std::string> names = {"m01_le_gamma", "gamma_le_m2n", "m01_le_gamma_le_m2n", "m01_le_m2n"};
  const ExactSpectrum* s = f.spectrum();
  const auto& gamma = f.gamma();
  if (!s || !gamma) {
    const std::string reason = !s ? f.spectrum_reason() : f.gamma_reason();
    for (const auto& name : names) b.skip(name, reason);
    return out;
  }
  const std::size_t m01 = *count_in(*s, Interval::zero_one());
  b.compare(names[0], Relation::le, rat(m01), rat(*gamma));
  if (!f.cls().isolate_free) {
    for (std::size_t i = 1; i < names.size(); ++i) b.skip(names[i], "graph has an isolated vertex");
    return out;
  }
  const std::size_t m2n = *count_in(*s, Interval::two_n());
  b.compare(names[1], Relation::le, rat(*gamma), rat(m2n));
  Check sandwich = Check::compare(names[2], Relation::le, rat(m01), rat(m2n));
  sandwich.holds = m01 <= *gamma && *gamma <= m2n;
  sandwich.equality = m01 == *gamma && *gamma == m2n;
  out.push_back(std::move(sandwich));
  b.compare(names[3], Relation::le, rat(m01), rat(m2n));
  return out;
}

std::vector<Check> check_matching_bounds(const GraphFacts& f) {
  std::vector<Check> out;
  Builder b(out);
  const ExactSpectrum* s = f.spectrum();
  const auto& beta = f.matching();
  const std::size_t n = f.graph().order();

  if (!s || !beta) {
    const std::string reason = !s ? f.spectrum_reason() : f.matching_reason();
    b.skip("matching_le_m2n", reason);
    b.skip("matching_le_open_m2n", reason);
  } else if (const auto m2n = count_in(*s, Interval::two_n()); !m2n) {
    b.skip("matching_le_m2n", empty_interval_reason(Interval::two_n(), n));
    b.skip("matching_le_open_m2n", empty_interval_reason(Interval::two_n(), n));
  } else {
    b.compare("matching_le_m2n", Relation::le, rat(*beta), rat(*m2n));
    if (!f.cls().connected) {
      b.skip("matching_le_open_m2n", "graph is disconnected");
    } else if (n <= 2 * *beta) {
      b.skip("matching_le_open_m2n", "n <= 2 * matching number");
    } else {
      b.compare("matching_le_open_m2n", Relation::le, rat(*beta), rat(*count_in(*s, Interval::open_two_n())));
    }
  }

  if (!f.cls().isolate_free) {
    b.skip("gamma_le_matching", "graph has an isolated vertex");
  } else if (!f.gamma() || !beta) {
    b.skip("gamma_le_matching", !f.gamma() ? f.gamma_reason() : f.matching_reason());
  } else {
    b.compare("gamma_le_matching", Relation::le, rat(*f.gamma()), rat(*beta));
  }
  return out;
}

std::vector<Check> check_tree_intervals(const GraphFacts& f) {
  std::vector<Check> out;
  Builder b(out);
  const std::vector<std::string> names = {"m12_ge_half_n_minus_gamma", "m02_ge_half_n", "m02_le_n_minus_gamma"};
  if (!f.cls().is_tree) {
    for (const auto& name : names) b.skip(name, "graph is not a tree");
    return out;
  }
  const ExactSpectrum* s = f.spectrum();
  const auto& gamma = f.gamma();
  if (!s || !gamma) {
    const std::string reason = !s ? f.spectrum_reason() : f.gamma_reason();
    for (const auto& name : names) b.skip(name, reason);
    return out;
  }
  const std::size_t n = f.graph().order();
  const Rational half = ceil_div(n, 2);
  b.compare(names[0], Relation::ge, rat(*count_in(*s, Interval::one_two())), half - rat(*gamma));
  const std::size_t m02 = *count_in(*s, Interval::zero_two());
  b.compare(names[1], Relation::ge, rat(m02), half);
  if (!f.cls().isolate_free) {
    b.skip(names[2], "graph has an isolated vertex");
  } else {
    b.compare(names[2], Relation::le, rat(m02), rat(n) - rat(*gamma));
  }
  return out;
}

std::vector<Check> check_nordhaus_gaddum(const GraphFacts& f) {
  std::vector<Check> out;
  Builder b(out);
  const std::size_t n = f.graph().order();
  const ExactSpectrum* s = f.spectrum();
  const std::vector<std::string> spectral = {"complement_rule_m01", "m01_sum_with_complement",
                                             "m01_sum_equality_iff_complete_or_empty",
                                             "m01_product_with_complement", "m01_times_top_lt_n"};
  if (!s) {
    for (const auto& name : spectral) b.skip(name, f.spectrum_reason());
  } else {
    const std::size_t m01 = *count_in(*s, Interval::zero_one());
    const std::size_t top = *count_in(*s, Interval::top());
    // The Laplacian spectrum of the complement is {0} and n - mu for the
    // other eigenvalues mu, so m_{co-G}[0,1) = m_G(n-1,n] + 1.
    const std::size_t by_rule = top + 1;
    std::size_t cm01 = by_rule;
    if (const ExactSpectrum* cs = f.complement_spectrum()) {
      cm01 = *count_in(*cs, Interval::zero_one());
      b.compare(spectral[0], Relation::eq, rat(cm01), rat(by_rule));
    } else {
      b.skip(spectral[0], f.complement_spectrum_reason());
    }
    const std::size_t sum = m01 + cm01;
    b.compare(spectral[1], Relation::le, rat(sum), rat(n + 1));
    const bool structural = f.graph().size() == 0 || 2 * f.graph().size() == n * (n - 1);
    b.compare(spectral[2], Relation::iff, truth(sum == n + 1), truth(structural));
    b.compare(spectral[3], Relation::le, rat(m01 * cm01), rat(n));
    b.compare(spectral[4], Relation::lt, rat(m01 * top), rat(n));
  }

  const auto& gamma = f.gamma();
  const auto& cgamma = f.complement_gamma();
  if (!gamma || !cgamma) {
    const std::string reason = !gamma ? f.gamma_reason() : f.complement_gamma_reason();
    b.skip("gamma_sum_with_complement", reason);
    b.skip("gamma_product_with_complement", reason);
  } else {
    b.compare("gamma_sum_with_complement", Relation::le, rat(*gamma + *cgamma), rat(n + 1));
    b.compare("gamma_product_with_complement", Relation::le, rat(*gamma * *cgamma), rat(n));
  }
  return out;
}

std::vector<Check> check_gallai(const GraphFacts& f) {
  std::vector<Check> out;
  Builder b(out);
  const Graph& g = f.graph();
  const std::size_t n = g.order();
  const std::size_t delta = f.cls().max_degree;
  const ExactSpectrum* s = f.spectrum();
  const auto& gamma = f.gamma();

  std::optional<std::size_t> m01;
  std::optional<std::size_t> m1n;
  if (s) {
    m01 = count_in(*s, Interval::zero_one());
    m1n = count_in(*s, Interval::one_n());
    b.compare("m01_plus_m1n_eq_n", Relation::eq, rat(*m01 + *m1n), rat(n));
  } else {
    b.skip("m01_plus_m1n_eq_n", f.spectrum_reason());
  }

  if (!gamma) {
    for (const char* name : {"gamma_plus_epsilon_eq_n", "epsilon_le_m1n", "gamma_eq_m01_iff_epsilon_eq_m1n"}) {
      b.skip(name, f.gamma_reason());
    }
    if (s) {
      b.compare("m1n_ge_max_degree", Relation::ge, rat(*m1n), rat(delta));
    } else {
      b.skip("m1n_ge_max_degree", f.spectrum_reason());
    }
    b.skip("gamma_plus_max_degree_le_n", f.gamma_reason());
    return out;
  }

  const std::size_t epsilon = n - *gamma;
  if (n <= f.config().epsilon_brute_force_cap) {
    b.compare("gamma_plus_epsilon_eq_n", Relation::eq, rat(*gamma + brute_force_epsilon(g, n)), rat(n));
  } else {
    b.skip("gamma_plus_epsilon_eq_n", "spanning-forest enumeration is limited to n <= " +
                                          std::to_string(f.config().epsilon_brute_force_cap));
  }
  if (s) {
    b.compare("epsilon_le_m1n", Relation::le, rat(epsilon), rat(*m1n));
    b.compare("gamma_eq_m01_iff_epsilon_eq_m1n", Relation::iff, truth(*gamma == *m01), truth(epsilon == *m1n));
    b.compare("m1n_ge_max_degree", Relation::ge, rat(*m1n), rat(delta));
  } else {
    for (const char* name : {"epsilon_le_m1n", "gamma_eq_m01_iff_epsilon_eq_m1n", "m1n_ge_max_degree"}) {
      b.skip(name, f.spectrum_reason());
    }
  }
  b.compare("gamma_plus_max_degree_le_n", Relation::le, rat(*gamma + delta), rat(n));
  return out;
}

std::vector<Check> check_diameter(const GraphFacts& f) {
  std::vector<Check> out;
  Builder b(out);
  if (!f.cls().connected) {
    b.skip("diameter_bound_m2n", "graph is disconnected");
    b.skip("diameter_bound_gamma", "graph is disconnected");
    return out;
  }
  const Rational bound = fraction(1 + *diameter(f.graph()), 3);
  const ExactSpectrum* s = f.spectrum();
  if (!s) {
    b.skip("diameter_bound_m2n", f.spectrum_reason());
  } else if (const auto m2n = count_in(*s, Interval::two_n()); !m2n) {
    b.skip("diameter_bound_m2n", empty_interval_reason(Interval::two_n(), f.graph().order()));
  } else {
    b.compare("diameter_bound_m2n", Relation::le, bound, rat(*m2n));
  }
  if (const auto& gamma = f.gamma()) {
    b.compare("diameter_bound_gamma", Relation::le, bound, rat(*gamma));
  } else {
    b.skip("diameter_bound_gamma", f.gamma_reason());
  }
  return out;
}

std::vector<Check> check_ratios(const GraphFacts& f) {
  std::vector<Check> out;
  Builder b(out);
  const GraphClass& cls = f.cls();
  const std::size_t n = f.graph().order();
  const bool is_path = cls.is_tree && cls.max_degree <= 2;
  const std::size_t c = cls.cyclomatic;

  const auto skip_all = [&](const std::string& reason) {
    for (const char* name : {"tree_ratio_ge_1", "tree_ratio_lt_2", "cyclic_ratio_ge_1", "cyclic_ratio_le_c_plus_1",
                             "path_m2n_le_half_n"}) {
      b.skip(name, reason);
    }
  };
  if (!cls.isolate_free) {
    skip_all("graph has an isolated vertex");
    return out;
  }
  const ExactSpectrum* s = f.spectrum();
  const auto& gamma = f.gamma();
  if (!s || !gamma) {
    skip_all(!s ? f.spectrum_reason() : f.gamma_reason());
    return out;
  }
  const std::size_t m2n = *count_in(*s, Interval::two_n());
  const Rational ratio = fraction(m2n, *gamma);

  if (cls.is_tree) {
    b.compare("tree_ratio_ge_1", Relation::ge, ratio, 1);
    b.compare("tree_ratio_lt_2", Relation::lt, ratio, 2);
  } else {
    b.skip("tree_ratio_ge_1", "graph is not a tree");
    b.skip("tree_ratio_lt_2", "graph is not a tree");
  }
  if (cls.connected && c >= 1) {
    b.compare("cyclic_ratio_ge_1", Relation::ge, ratio, 1);
    b.compare("cyclic_ratio_le_c_plus_1", Relation::le, ratio, rat(c + 1));
  } else {
    const std::string reason = cls.connected ? "graph is acyclic" : "graph is disconnected";
    b.skip("cyclic_ratio_ge_1", reason);
    b.skip("cyclic_ratio_le_c_plus_1", reason);
  }
  if (is_path) {
    b.compare("path_m2n_le_half_n", Relation::le, rat(m2n), rat(n / 2));
  } else {
    b.skip("path_m2n_le_half_n", "graph is not a path");
  }
  return out;
}

std::vector<Check> check_signless(const GraphFacts& f) {
  std::vector<Check> out;
  Builder b(out);
  const ExactSpectrum* s = f.signless_spectrum();
  const auto& gamma = f.gamma();
  if (!s || !gamma) {
    const std::string reason = !s ? f.signless_reason() : f.gamma_reason();
    b.skip("signless_m01_le_gamma", reason);
    b.skip("signless_gamma_le_m2n", reason);
    return out;
  }
  b.compare("signless_m01_le_gamma", Relation::le, rat(*count_in(*s, Interval::zero_one())), rat(*gamma));
  if (!f.cls().isolate_free) {
    b.skip("signless_gamma_le_m2n", "graph has an isolated vertex");
  } else {
    // Signless eigenvalues reach 2 * max degree, beyond n; count all of them >= 2.
    const std::size_t top = std::max(f.graph().order(), 2 * f.cls().max_degree);
    const Interval upper = Interval::closed(Endpoint::fixed(2), Endpoint::fixed(rat(top)));
    b.compare("signless_gamma_le_m2n", Relation::le, rat(*gamma), rat(*count_in(*s, upper)));
  }
  return out;
}

std::vector<Check> check_domination(const GraphFacts& f) {
  std::vector<Check> out;
  Builder b(out);
  const Graph& g = f.graph();
  const auto& gamma = f.gamma();
  const std::vector<std::string> names = {"gamma_le_greedy", "tree_program_eq_search", "epn_certificate_valid",
                                          "star_forest_valid"};
  if (!gamma) {
    for (const auto& name : names) b.skip(name, f.gamma_reason());
    return out;
  }
  b.compare(names[0], Relation::le, rat(*gamma), rat(greedy_domination(g).set.size()));

  if (!f.cls().is_forest) {
    b.skip(names[1], "graph is not a forest");
  } else if (g.order() > std::min(f.config().domination.search_cap, kDefaultDominationCap)) {
    b.skip(names[1], "search limited to n <= " + std::to_string(f.config().domination.search_cap));
  } else {
    b.compare(names[1], Relation::eq, rat(domination_number_tree(g)),
              rat(domination_number_search(g, f.config().domination).set.size()));
  }

  if (!f.cls().isolate_free) {
    b.skip(names[2], "graph has an isolated vertex");
    b.skip(names[3], "graph has an isolated vertex");
    return out;
  }
  std::optional<DominationCertificate> cert;
  try {
    cert = min_dominating_set_with_epn(g, f.config().domination);
  } catch (const CapExceeded& e) {
    b.skip(names[2], e.what());
    b.skip(names[3], e.what());
    return out;
  }
  Check valid = Check::compare(names[2], Relation::eq, rat(cert->set.size()), rat(*gamma));
  valid.holds = valid.holds && !validate_certificate(g, *cert).has_value() && cert->epn.has_value();
  out.push_back(std::move(valid));
  const StarForest forest = star_forest(g, *cert);
  Check stars = Check::compare(names[3], Relation::eq, rat(forest.stars.size()), rat(*gamma));
  stars.holds = stars.holds && !validate_star_forest(g, *cert, forest).has_value();
  out.push_back(std::move(stars));
  return out;
}

namespace {

/// m[a,n] with the convention that it is 0 for a > n.
std::size_t count_from(const ExactSpectrum& s, const Rational& a) {
  if (a > rat(s.order())) return 0;
  return s.count(Interval::closed(Endpoint::fixed(a), Endpoint::order()).resolve(s.order()));
}

Check interlace(const ExactSpectrum& base, const ExactSpectrum& plus, const Rational& a) {
  return Check::compare("edge_interlace", Relation::interlace, rat(count_from(plus, a)), rat(count_from(base, a)));
}

}  // namespace

Check check_edge_interlace(const Graph& g, Edge e, const Rational& a, const ExactConfig& config) {
  if (a < 0) throw std::invalid_argument("interlacing threshold must be nonnegative");
  const Graph plus = g.with_edge(e);
  return interlace(ExactSpectrum(g, MatrixVariant::laplacian, config),
                   ExactSpectrum(plus, MatrixVariant::laplacian, config), a);
}

namespace {

std::vector<Check> product_checks(const Graph& g, const ExactSpectrum* sg, const Graph& h, const VerifyConfig& config) {
  std::vector<Check> out;
  Builder b(out);
  const std::size_t order = g.order() * h.order();
  const bool trivial_factor = g.order() == 1 || h.order() == 1;
  const std::size_t build_cap = std::max(config.exact.exact_cap, config.domination.search_cap);
  std::optional<Graph> product;
  if (order <= build_cap || (trivial_factor && order <= kDefaultVertexLimit)) {
    product.emplace(cartesian_product(g, h));
  }
  const std::string too_large = "product on " + std::to_string(order) + " vertices exceeds the exact caps";

  std::optional<ExactSpectrum> own_g;
  std::optional<ExactSpectrum> sh;
  std::string factor_reason;
  try {
    if (!sg) sg = &own_g.emplace(g, MatrixVariant::laplacian, config.exact);
    sh.emplace(h, MatrixVariant::laplacian, config.exact);
  } catch (const CapExceeded& e) {
    factor_reason = e.what();
    sg = nullptr;
  }
  const auto ra = sg ? resolved_spectrum(g, *sg) : resolved_spectrum(g, MatrixVariant::laplacian, config.exact);
  const auto rb = sh ? resolved_spectrum(h, *sh) : resolved_spectrum(h, MatrixVariant::laplacian, config.exact);
  const ProductCount composed = product_count(ra, rb, Interval::zero_one());

  std::optional<std::size_t> direct;
  std::string direct_reason = too_large;
  if (product) {
    try {
      direct = ExactSpectrum(*product, MatrixVariant::laplacian, config.exact).count(Interval::zero_one()).count;
    } catch (const CapExceeded& e) {
      direct_reason = e.what();
    }
  }
  if (!direct) {
    b.skip("product_direct_eq_composed", direct_reason);
  } else if (composed.borderline > 0) {
    b.skip("product_direct_eq_composed", std::to_string(composed.borderline) + " borderline eigenvalue sums");
  } else {
    b.compare("product_direct_eq_composed", Relation::eq, rat(*direct), rat(composed.count));
  }

  if (sg && sh) {
    const std::size_t bound = sg->count(Interval::zero_one()).count * sh->count(Interval::zero_one()).count;
    // Borderline pairs are counted as if inside, so the bound is conservative.
    const std::size_t lhs = direct ? *direct : composed.count + composed.borderline;
    b.compare("product_m01_le_factor_product", Relation::le, rat(lhs), rat(bound));
  } else {
    b.skip("product_m01_le_factor_product", factor_reason);
  }

  const char* product_gamma = "gamma_product_le_gamma_of_product";
  if (!classify(g).is_tree && !classify(h).is_tree) {
    b.skip(product_gamma, "neither factor is a tree");
  } else if (!product) {
    b.skip(product_gamma, too_large);
  } else {
    try {
      const std::size_t lhs = domination_number(g, config.domination).set.size() *
                              domination_number(h, config.domination).set.size();
      b.compare(product_gamma, Relation::le, rat(lhs), rat(domination_number(*product, config.domination).set.size()));
    } catch (const CapExceeded& e) {
      b.skip(product_gamma, e.what());
    }
  }
  return out;
}

}  // namespace

std::vector<Check> check_product(const Graph& g, const Graph& h, const VerifyConfig& config) {
  return product_checks(g, nullptr, h, config);
}

TheoremReport verify_all(const Graph& g, std::string graph_id, const VerifyConfig& config) {
  const GraphFacts facts(g, config);
  TheoremReport report;
  report.graph_id = std::move(graph_id);
  report.n = g.order();
  report.m = g.size();
  report.cls = facts.cls();

  const auto append = [&](std::vector<Check> more) {
    for (auto& c : more) report.checks.push_back(std::move(c));
  };
  append(check_core_bounds(facts));
  append(check_matching_bounds(facts));
  append(check_tree_intervals(facts));
  append(check_nordhaus_gaddum(facts));
  append(check_gallai(facts));
  append(check_diameter(facts));
  append(check_ratios(facts));
  if (config.signless) append(check_signless(facts));
  append(check_domination(facts));

  std::optional<Edge> non_edge;
  for (Vertex u = 0; u < g.order() && !non_edge; ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) {
        non_edge = Edge{u, v};
        break;
      }
    }
  }
  std::optional<ExactSpectrum> plus;
  std::string plus_reason = "graph is complete";
  if (non_edge && facts.spectrum()) {
    try {
      plus.emplace(g.with_edge(*non_edge), MatrixVariant::laplacian, config.exact);
    } catch (const CapExceeded& e) {
      plus_reason = e.what();
    }
  } else if (non_edge) {
    plus_reason = facts.spectrum_reason();
  }
  for (unsigned long a : {1UL, 2UL}) {
    const std::string name = "edge_interlace_a" + std::to_string(a);
    if (!plus) {
      report.checks.push_back(Check::skip(name, plus_reason));
      continue;
    }
    Check c = interlace(*facts.spectrum(), *plus, Rational(a));
    c.name = name;
    report.checks.push_back(std::move(c));
  }
  if (config.products) append(product_checks(g, facts.spectrum(), complete_graph_k2(), config));

  report.all_pass = report.count_failed() == 0;
  report.gamma = facts.gamma();
  if (const ExactSpectrum* s = facts.spectrum()) {
    report.m01 = count_in(*s, Interval::zero_one());
    report.m2n = count_in(*s, Interval::two_n());
  }
  return report;
}

}  // namespace lapdom
