#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lapdom/domination.hpp"
#include "lapdom/float_spectrum.hpp"
#include "lapdom/graph.hpp"
#include "lapdom/spectral.hpp"

namespace lapdom {

enum class Relation {
  le,        // lhs <= rhs
  lt,        // lhs <  rhs
  ge,        // lhs >= rhs
  eq,        // lhs == rhs
  iff,       // truth values 0/1 agree
  interlace  // rhs <= lhs <= rhs + 1
};

/// One verified inequality. Skipped checks carry a reason and no values.
struct Check {
  std::string name;
  Relation relation = Relation::le;
  Rational lhs;
  Rational rhs;
  bool holds = false;
  bool equality = false;
  std::optional<std::string> skipped_reason;

  bool skipped() const { return skipped_reason.has_value(); }
  bool failed() const { return !skipped() && !holds; }

  static Check compare(std::string name, Relation relation, Rational lhs, Rational rhs);
  static Check skip(std::string name, std::string reason);
};

struct TheoremReport {
  std::string graph_id;
  std::size_t n = 0;
  std::size_t m = 0;
  GraphClass cls;
  std::vector<Check> checks;
  /// Every check that ran held. A false value is an artifact defect (FATAL).
  bool all_pass = true;

  // Headline quantities, when computable.
  std::optional<std::size_t> gamma;
  std::optional<std::size_t> m01;
  std::optional<std::size_t> m2n;

  std::size_t count_skipped() const;
  std::size_t count_failed() const;
};

struct VerifyConfig {
  ExactConfig exact;
  DominationConfig domination;
  MatchingConfig matching;
  std::size_t epsilon_brute_force_cap = kDefaultEpsilonBruteForceCap;
  /// Run the G x K_2 product checks inside verify_all.
  bool products = true;
  bool signless = true;
};

/// Lazily computed spectral and combinatorial quantities for one graph,
/// shared by the checkers. Quantities that exceed a cap are reported as
/// absent with a reason.
class GraphFacts {
 public:
  GraphFacts(Graph g, VerifyConfig config = {});
  ~GraphFacts();
  GraphFacts(GraphFacts&&) noexcept;

  const Graph& graph() const { return graph_; }
  const GraphClass& cls() const { return cls_; }
  const VerifyConfig& config() const { return config_; }

  const ExactSpectrum* spectrum() const;
  const ExactSpectrum* signless_spectrum() const;
  const Graph& complement_graph() const;
  const ExactSpectrum* complement_spectrum() const;
  const std::optional<std::size_t>& gamma() const;
  const std::optional<std::size_t>& complement_gamma() const;
  const std::optional<std::size_t>& matching() const;

  /// Why the corresponding quantity is absent.
  std::string spectrum_reason() const;
  std::string signless_reason() const;
  std::string complement_spectrum_reason() const;
  std::string gamma_reason() const;
  std::string complement_gamma_reason() const;
  std::string matching_reason() const;

 private:
  struct Cache;
  Graph graph_;
  VerifyConfig config_;
  GraphClass cls_;
  std::unique_ptr<Cache> cache_;
};

/// m[0,1) <= gamma for every graph; gamma <= m[2,n] and the sandwich
/// forms when isolate-free.
std::vector<Check> check_core_bounds(const GraphFacts& facts);
/// beta_1 <= m[2,n], the connected strict variant, and gamma <= beta_1.
std::vector<Check> check_matching_bounds(const GraphFacts& facts);
/// Interval bounds specific to trees.
std::vector<Check> check_tree_intervals(const GraphFacts& facts);
/// Sum and product bounds over G and its complement, plus the complement rule.
std::vector<Check> check_nordhaus_gaddum(const GraphFacts& facts);
/// m[0,1) + m[1,n] = n, gamma + epsilon = n and its consequences, and the
/// maximum-degree bounds.
std::vector<Check> check_gallai(const GraphFacts& facts);
std::vector<Check> check_diameter(const GraphFacts& facts);
/// m[2,n]/gamma for trees, c-cyclic graphs and paths.
std::vector<Check> check_ratios(const GraphFacts& facts);
std::vector<Check> check_signless(const GraphFacts& facts);
/// Greedy bound, certificate validity, star forest, tree-solver agreement.
std::vector<Check> check_domination(const GraphFacts& facts);

/// m_G[a,n] <= m_{G+e}[a,n] <= m_G[a,n] + 1. Throws GraphError if e is
/// already an edge and std::invalid_argument if a < 0.
Check check_edge_interlace(const Graph& g, Edge e, const Rational& a, const ExactConfig& config = {});

/// m[0,1) of G x H directly and composed from the factor spectra, the
/// product bound, and gamma(G) gamma(H) <= gamma(G x H) when a factor is a tree.
std::vector<Check> check_product(const Graph& g, const Graph& h, const VerifyConfig& config = {});

/// Every applicable checker, in a fixed order.
TheoremReport verify_all(const Graph& g, std::string graph_id, const VerifyConfig& config = {});

std::string to_string(Relation r);

}  // namespace lapdom
