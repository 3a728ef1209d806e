#include "lapdom/cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lapdom/cli/records.hpp"
#include "lapdom/domination.hpp"
#include "lapdom/float_spectrum.hpp"
#include "lapdom/graph6.hpp"
#include "lapdom/report.hpp"

namespace lapdom::cli {

namespace {

using nlohmann::json;

/// Column-aligned text table.
class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& out) const {
    std::vector<std::size_t> width;
    for (const auto& row : rows_) {
      width.resize(std::max(width.size(), row.size()));
      for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    for (const auto& row : rows_) {
      std::string line;
      for (std::size_t i = 0; i < row.size(); ++i) {
        line += row[i];
        if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
      }
      out << line << '\n';
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string optional_count(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : "-"; }

std::string dash_if_empty(std::string s) { return s.empty() ? "-" : s; }

std::string join(std::span<const Vertex> values, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

std::vector<Interval> default_intervals() {
  return {Interval::zero_one(), Interval::one_n(), Interval::two_n(),
          Interval::zero_two(), Interval::one_two(), Interval::top()};
}

std::string rational_text(const Rational& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Drops checks not matching any filter and recomputes the verdict.
void filter_checks(TheoremReport& report, const std::vector<std::string>& filters) {
  if (filters.empty()) return;
  std::erase_if(report.checks, [&](const Check& c) {
    return std::none_of(filters.begin(), filters.end(),
                        [&](const std::string& f) { return c.name.find(f) != std::string::npos; });
  });
  report.all_pass = report.count_failed() == 0;
}

struct Tally {
  std::size_t graphs = 0;
  std::size_t fatal_graphs = 0;
  std::size_t checks = 0;
  std::size_t skipped = 0;
  std::size_t failed = 0;

  void add(const TheoremReport& r) {
    ++graphs;
    if (!r.all_pass) ++fatal_graphs;
    checks += r.checks.size();
    skipped += r.count_skipped();
    failed += r.count_failed();
  }

  std::string line() const {
    return "summary: graphs=" + std::to_string(graphs) + " pass=" + std::to_string(graphs - fatal_graphs) +
           " fatal=" + std::to_string(fatal_graphs) + " checks=" + std::to_string(checks) +
           " ran=" + std::to_string(checks - skipped) + " skipped=" + std::to_string(skipped) +
           " failed=" + std::to_string(failed);
  }
};

void print_check(std::ostream& out, const Check& c) {
  out << "  " << std::left << std::setw(40) << c.name << std::right;
  if (c.skipped()) {
    out << "skipped: " << *c.skipped_reason << '\n';
    return;
  }
  if (c.relation == Relation::interlace) {
    out << rational_text(c.lhs) << " in [" << rational_text(c.rhs) << ", " << rational_text(c.rhs + 1) << "]  ";
  } else {
    out << rational_text(c.lhs) << ' ' << to_string(c.relation) << ' ' << rational_text(c.rhs) << "  ";
  }
  out << (c.holds ? "holds" : "FAILS") << (c.equality ? " (equality)" : "") << '\n';
}

struct FamilyRow {
  RatioRecord record;
  std::size_t parameter = 0;
  bool expected = true;
  std::string expectation;
};

FamilyRow family_row(const std::string& family, std::size_t p, const VerifyConfig& config) {
  const NamedGraph g = parse_graph_spec(family + ":" + std::to_string(p));
  FamilyRow row{ratio_record(g, config), p, true, ""};
  const RatioRecord& r = row.record;
  const auto is = [](const std::optional<std::size_t>& v, std::size_t want) { return v && *v == want; };
  if (family == "tk") {
    row.expected = is(r.m01, 24 * p) && is(r.gamma, 25 * p) && r.ratio_lower == Rational(25, 24);
    row.expectation = "m01 = 24k, gamma = 25k, ratio_lower = 25/24";
  } else if (family == "path") {
    const std::size_t n = p;
    row.expected = is(r.gamma, (n + 2) / 3) && (n < 2 || (r.m2n && *r.m2n <= n / 2)) &&
                   (!r.ratio_upper || *r.ratio_upper <= Rational(3, 2));
    row.expectation = "gamma = ceil(n/3), m2n <= floor(n/2), ratio_upper <= 3/2";
  } else {
    row.expected = is(r.gamma, 1) && is(r.m2n, 1) && r.ratio_upper == Rational(1);
    row.expectation = "gamma = 1, m2n = 1, ratio_upper = 1";
  }
  return row;
}

}  // namespace

OutputFormat parse_output_format(std::string_view text) {
  if (text == "json") return OutputFormat::json;
  if (text == "csv") return OutputFormat::csv;
  if (text == "table") return OutputFormat::table;
  throw std::invalid_argument("unknown format '" + std::string(text) + "' (json, csv or table)");
}

SearchTarget parse_search_target(std::string_view text) {
  if (text == "max-ratio-lower") return SearchTarget::max_ratio_lower;
  if (text == "max-ratio-upper") return SearchTarget::max_ratio_upper;
  if (text == "equality") return SearchTarget::equality;
  throw std::invalid_argument("unknown search target '" + std::string(text) +
                              "' (max-ratio-lower, max-ratio-upper or equality)");
}

int cmd_spectrum(const SpectrumOptions& o, std::ostream& out, std::ostream& err) {
  const NamedGraph g = parse_graph_spec(o.spec);
  std::vector<Interval> intervals;
  for (const auto& text : o.intervals) intervals.push_back(Interval::parse(text));
  if (intervals.empty()) intervals = default_intervals();

  std::optional<ExactSpectrum> spectrum;
  try {
    spectrum.emplace(g.graph, o.variant, o.exact);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  struct Row {
    std::string interval;
    std::optional<ExactCount> count;
  };
  std::vector<Row> rows;
  for (const auto& iv : intervals) {
    Row row{iv.to_string(), std::nullopt};
    try {
      row.count = spectrum->count(iv);
    } catch (const std::invalid_argument&) {
      // Empty for this order, e.g. [2,n] with n = 1.
    }
    rows.push_back(std::move(row));
  }
  std::vector<Eigenvalue> values;
  if (o.show_spectrum) values = resolved_spectrum(g.graph, o.variant, o.exact);

  const auto count_text = [](const Row& r) { return r.count ? std::to_string(r.count->count) : std::string(); };
  const auto method_text = [](const Row& r) { return r.count ? to_string(r.count->method) : std::string(); };

  switch (o.format) {
    case OutputFormat::json: {
      json j = {{"graph_id", g.id}, {"n", g.graph.order()}, {"m", g.graph.size()}, {"variant", to_string(o.variant)}};
      j["counts"] = json::array();
      for (const auto& r : rows) {
        j["counts"].push_back({{"interval", r.interval},
                               {"count", r.count ? json(r.count->count) : json(nullptr)},
                               {"method", r.count ? json(to_string(r.count->method)) : json(nullptr)}});
      }
      if (o.show_spectrum) {
        j["spectrum"] = json::array();
        for (const auto& v : values) {
          j["spectrum"].push_back({{"approx", v.approx}, {"exact", v.exact ? rational_json(*v.exact) : json(nullptr)}});
        }
      }
      out << j.dump() << '\n';
      break;
    }
    case OutputFormat::csv:
      out << "graph_id,variant,interval,count,method\n";
      for (const auto& r : rows) {
        out << csv_field(g.id) << ',' << to_string(o.variant) << ',' << csv_field(r.interval) << ',' << count_text(r)
            << ',' << method_text(r) << '\n';
      }
      break;
    case OutputFormat::table: {
      out << g.id << ": n=" << g.graph.order() << " m=" << g.graph.size() << " " << to_string(o.variant) << '\n';
      Table t({"interval", "count", "method"});
      for (const auto& r : rows) t.add({r.interval, dash_if_empty(count_text(r)), dash_if_empty(method_text(r))});
      t.print(out);
      if (o.show_spectrum) {
        out << "spectrum:";
        for (const auto& v : values) {
          out << ' ';
          if (v.exact) {
            out << rational_text(*v.exact);
          } else {
            out << std::setprecision(10) << v.approx;
          }
        }
        out << '\n';
      }
      break;
    }
  }
  return kExitPass;
}

int cmd_gamma(const GammaOptions& o, std::ostream& out, std::ostream& err) {
  const NamedGraph g = parse_graph_spec(o.spec);
  DominationCertificate cert;
  std::optional<std::size_t> greedy;
  std::optional<StarForest> forest;
  const bool isolate_free = classify(g.graph).isolate_free;
  try {
    cert = domination_number(g.graph, o.domination);
    if (o.greedy) greedy = greedy_domination(g.graph).set.size();
    if ((o.certificate || o.star_forest) && isolate_free) cert = min_dominating_set_with_epn(g.graph, o.domination);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (o.star_forest) {
    if (!isolate_free) {
      err << "error: a star forest needs a graph without isolated vertices\n";
      return kExitUsage;
    }
    forest = star_forest(g.graph, cert);
    if (const auto problem = validate_star_forest(g.graph, cert, *forest)) {
      err << "FATAL: invalid star forest: " << *problem << '\n';
      return kExitFatal;
    }
  }
  if (const auto problem = validate_certificate(g.graph, cert)) {
    err << "FATAL: invalid certificate: " << *problem << '\n';
    return kExitFatal;
  }

  const std::size_t gamma = cert.set.size();
  switch (o.format) {
    case OutputFormat::json: {
      json j = {{"graph_id", g.id}, {"n", g.graph.order()}, {"m", g.graph.size()}, {"gamma", gamma}};
      if (greedy) j["greedy"] = *greedy;
      if (o.certificate) {
        j["set"] = cert.set;
        j["epn"] = cert.epn ? json(*cert.epn) : json(nullptr);
      }
      if (forest) {
        j["stars"] = json::array();
        for (const auto& s : forest->stars) j["stars"].push_back({{"center", s.center}, {"leaves", s.leaves}});
      }
      out << j.dump() << '\n';
      break;
    }
    case OutputFormat::csv:
      out << "graph_id,n,m,gamma,greedy,set\n";
      out << csv_field(g.id) << ',' << g.graph.order() << ',' << g.graph.size() << ',' << gamma << ','
          << (greedy ? std::to_string(*greedy) : "") << ',' << (o.certificate ? join(cert.set) : "") << '\n';
      break;
    case OutputFormat::table:
      out << "gamma " << gamma << '\n';
      if (greedy) out << "greedy " << *greedy << '\n';
      if (o.certificate) {
        out << "set " << join(cert.set) << '\n';
        if (cert.epn) {
          out << "epn";
          for (const auto& [u, v] : *cert.epn) out << ' ' << u << "->" << v;
          out << '\n';
        }
      }
      if (forest) {
        out << forest->stars.size() << " stars covering " << forest->center_of.size() << " vertices\n";
        for (const auto& s : forest->stars) out << "  " << s.center << ": " << join(s.leaves) << '\n';
      }
      break;
  }
  return kExitPass;
}

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  Tally tally;
  if (o.format == OutputFormat::csv) out << kRatioCsvHeader << ",all_pass,checks,skipped,failed\n";
  if (o.format == OutputFormat::table) {
    out << std::left << std::setw(32) << "graph_id" << std::right << std::setw(6) << "n" << std::setw(7) << "m"
        << std::setw(7) << "gamma" << std::setw(6) << "m01" << std::setw(6) << "m2n" << "  status  ran/skipped/failed\n";
  }
  process_corpus<TheoremReport>(
      o.corpus,
      [&](const NamedGraph& g) {
        TheoremReport r = verify_all(g.graph, g.id, o.verify);
        filter_checks(r, o.checks);
        return r;
      },
      [&](const NamedGraph&, TheoremReport&& r) {
        tally.add(r);
        switch (o.format) {
          case OutputFormat::json:
            out << json(r).dump() << '\n';
            break;
          case OutputFormat::csv:
            out << csv_row(ratio_record(r)) << ',' << (r.all_pass ? "true" : "false") << ',' << r.checks.size()
                << ',' << r.count_skipped() << ',' << r.count_failed() << '\n';
            break;
          case OutputFormat::table:
            out << std::left << std::setw(32) << r.graph_id << std::right << std::setw(6) << r.n << std::setw(7)
                << r.m << std::setw(7) << optional_count(r.gamma) << std::setw(6) << optional_count(r.m01)
                << std::setw(6) << optional_count(r.m2n) << "  " << (r.all_pass ? "PASS  " : "FATAL ") << "  "
                << r.checks.size() - r.count_skipped() << '/' << r.count_skipped() << '/' << r.count_failed()
                << '\n';
            for (const auto& c : r.checks) {
              if (o.details || c.failed()) print_check(out, c);
            }
            break;
        }
      });
  (o.format == OutputFormat::table ? out : err) << tally.line() << '\n';
  return tally.fatal_graphs == 0 ? kExitPass : kExitFatal;
}

int cmd_family(const FamilyOptions& o, std::ostream& out, std::ostream& err) {
  if (o.family != "tk" && o.family != "path" && o.family != "star") {
    throw std::invalid_argument("unknown family '" + o.family + "' (tk, path or star)");
  }
  if (o.from > o.to) throw std::invalid_argument("empty range");
  if (o.family == "tk" && o.from < 1) throw std::invalid_argument("tk needs k >= 1");
  if (o.family == "star" && o.from < 2) throw std::invalid_argument("star needs n >= 2");
  if (o.family == "path" && o.from < 1) throw std::invalid_argument("path needs n >= 1");

  std::vector<FamilyRow> rows;
  for (std::size_t p = o.from; p <= o.to; ++p) rows.push_back(family_row(o.family, p, o.verify));
  const std::size_t failures =
      static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const FamilyRow& r) { return !r.expected; }));
  const auto gap = [](const RatioRecord& r) -> std::optional<std::size_t> {
    if (!r.gamma || !r.m01 || *r.gamma < *r.m01) return std::nullopt;
    return *r.gamma - *r.m01;
  };

  switch (o.format) {
    case OutputFormat::json:
      for (const auto& row : rows) {
        json j = row.record;
        const auto g = gap(row.record);
        j["gamma_minus_m01"] = g ? json(*g) : json(nullptr);
        j["expected"] = row.expected;
        out << j.dump() << '\n';
      }
      break;
    case OutputFormat::csv:
      out << kRatioCsvHeader << '\n';
      for (const auto& row : rows) out << csv_row(row.record) << '\n';
      break;
    case OutputFormat::table: {
      Table t({"graph_id", "n", "m", "gamma", "m01", "m2n", "gamma-m01", "ratio_lower", "ratio_upper", "expected"});
      for (const auto& row : rows) {
        const RatioRecord& r = row.record;
        t.add({r.graph_id, std::to_string(r.n), std::to_string(r.m), optional_count(r.gamma), optional_count(r.m01),
               optional_count(r.m2n), optional_count(gap(r)), dash_if_empty(ratio_string(r.ratio_lower)),
               dash_if_empty(ratio_string(r.ratio_upper)), row.expected ? "ok" : "FAIL"});
      }
      t.print(out);
      out << "expectation: " << rows.front().expectation << '\n';
      break;
    }
  }
  if (failures > 0) {
    err << "FATAL: " << failures << " rows violate " << rows.front().expectation << '\n';
    return kExitFatal;
  }
  return kExitPass;
}

int cmd_search(const SearchOptions& o, std::ostream& out, std::ostream&) {
  struct Hit {
    RatioRecord record;
    std::string graph6;
    bool is_tree = false;
  };
  const Rational tree_threshold(25, 24);
  std::optional<Rational> best;
  std::vector<Hit> hits;
  std::size_t graphs = 0;
  std::size_t trees = 0;
  std::size_t trees_above = 0;
  std::size_t trees_above_one = 0;

  const auto value_of = [&](const RatioRecord& r) -> std::optional<Rational> {
    switch (o.target) {
      case SearchTarget::max_ratio_lower: return r.ratio_lower;
      case SearchTarget::max_ratio_upper: return r.ratio_upper;
      case SearchTarget::equality:
        if (r.gamma && r.m01 && *r.gamma == *r.m01) return Rational(1);
        return std::nullopt;
    }
    return std::nullopt;
  };

  process_corpus<Hit>(
      o.corpus,
      [&](const NamedGraph& g) {
        return Hit{ratio_record(g, o.verify), emit_graph6(g.graph), classify(g.graph).is_tree};
      },
      [&](const NamedGraph&, Hit&& hit) {
        ++graphs;
        if (hit.is_tree) {
          ++trees;
          if (hit.record.ratio_lower && *hit.record.ratio_lower > tree_threshold) ++trees_above;
          if (hit.record.ratio_lower && *hit.record.ratio_lower > 1) ++trees_above_one;
        }
        const auto v = value_of(hit.record);
        if (!v) return;
        if (!best || *v > *best) {
          best = *v;
          hits.clear();
        }
        if (*v == *best) hits.push_back(std::move(hit));
      });

  std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) {
    return std::tie(a.graph6, a.record.graph_id) < std::tie(b.graph6, b.record.graph_id);
  });
  const std::size_t total_hits = hits.size();
  if (o.limit > 0 && hits.size() > o.limit) hits.resize(o.limit);
  const std::string target = o.target == SearchTarget::max_ratio_lower   ? "max-ratio-lower"
                             : o.target == SearchTarget::max_ratio_upper ? "max-ratio-upper"
                                                                         : "equality";

  switch (o.format) {
    case OutputFormat::json: {
      json j = {{"target", target},
                {"graphs", graphs},
                {"trees", trees},
                {"trees_ratio_lower_above_25_24", trees_above},
                {"trees_ratio_lower_above_1", trees_above_one},
                {"best", best && o.target != SearchTarget::equality ? json(ratio_string(best)) : json(nullptr)},
                {"attaining", total_hits}};
      j["graphs_attaining"] = json::array();
      for (const auto& h : hits) {
        json rec = h.record;
        rec["graph6"] = h.graph6;
        j["graphs_attaining"].push_back(std::move(rec));
      }
      out << j.dump() << '\n';
      break;
    }
    case OutputFormat::csv:
      out << kRatioCsvHeader << '\n';
      for (const auto& h : hits) out << csv_row(h.record) << '\n';
      break;
    case OutputFormat::table: {
      out << "target " << target << '\n' << "graphs " << graphs << '\n';
      if (o.target != SearchTarget::equality) out << "best " << (best ? ratio_string(best) : "-") << '\n';
      out << "attaining " << total_hits << '\n';
      if (trees > 0) {
        out << "trees " << trees << ", ratio_lower > 1: " << trees_above_one << ", ratio_lower > 25/24: " << trees_above
            << '\n';
      }
      Table t({"graph6", "graph_id", "n", "gamma", "m01", "m2n", "ratio_lower", "ratio_upper"});
      for (const auto& h : hits) {
        const RatioRecord& r = h.record;
        t.add({h.graph6, r.graph_id, std::to_string(r.n), optional_count(r.gamma), optional_count(r.m01),
               optional_count(r.m2n), dash_if_empty(ratio_string(r.ratio_lower)),
               dash_if_empty(ratio_string(r.ratio_upper))});
      }
      if (!hits.empty()) t.print(out);
      break;
    }
  }
  return kExitPass;
}

namespace {

struct CommonFlags {
  std::string format = "table";
  std::uint64_t seed = 1;
  std::size_t jobs = 1;
  std::size_t exact_cap = kDefaultExactCap;
  std::size_t domination_cap = kDefaultDominationCap;
  std::string output;
};

void add_common(CLI::App* sub, CommonFlags& flags) {
  sub->add_option("--format", flags.format, "Output format: json, csv or table")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  sub->add_option("--seed", flags.seed, "Seed of the random corpus");
  sub->add_option("--jobs", flags.jobs, "Worker threads")->check(CLI::PositiveNumber);
  sub->add_option("--exact-cap", flags.exact_cap, "Largest non-tree matrix for exact counting");
  sub->add_option("--domination-cap", flags.domination_cap, "Largest non-forest graph for exact domination")
      ->check(CLI::Range(1, 64));
  sub->add_option("--output", flags.output, "Write results to this file instead of stdout");
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  std::size_t used = 0;
  try {
    if (dots == std::string::npos) {
      const std::size_t v = std::stoul(text, &used);
      if (used == text.size()) return {v, v};
    } else {
      const std::string a = text.substr(0, dots);
      const std::string b = text.substr(dots + 2);
      std::size_t used_b = 0;
      const std::size_t lo = std::stoul(a, &used);
      const std::size_t hi = std::stoul(b, &used_b);
      if (used == a.size() && used_b == b.size()) return {lo, hi};
    }
  } catch (const std::exception&) {
  }
  throw std::invalid_argument("bad range '" + text + "' (expected A..B)");
}

struct CorpusFlags {
  std::vector<std::string> specs;
  std::string family;
  std::string range;
  std::optional<std::size_t> trees;
  std::size_t trees_min = 1;
  std::size_t random = 0;
  std::size_t n_min = 1;
  std::size_t n_max = 16;
  std::vector<double> p = {0.3};
  std::string graph6;
};

void add_corpus(CLI::App* sub, CorpusFlags& flags) {
  sub->add_option("graphs", flags.specs, "Graph specs");
  sub->add_option("--family", flags.family, "Family name for --range (path, cycle, star, k, empty, tk)");
  sub->add_option("--range", flags.range, "Parameter range A..B for --family");
  sub->add_option("--trees", flags.trees, "Every labeled tree up to this order");
  sub->add_option("--trees-min", flags.trees_min, "Smallest tree order for --trees");
  sub->add_option("--random", flags.random, "Number of Erdos-Renyi graphs");
  sub->add_option("--n-min", flags.n_min, "Smallest random order");
  sub->add_option("--n-max", flags.n_max, "Largest random order");
  sub->add_option("--p", flags.p, "Edge probabilities, cycled across random graphs")->delimiter(',');
  sub->add_option("--graph6", flags.graph6, "File with one graph6 string per line");
}

CorpusConfig make_corpus(const CorpusFlags& f, const CommonFlags& c) {
  CorpusConfig corpus;
  corpus.specs = f.specs;
  if (!f.family.empty()) {
    if (f.range.empty()) throw std::invalid_argument("--family needs --range");
    corpus.family = f.family;
    std::tie(corpus.family_from, corpus.family_to) = parse_range(f.range);
  }
  corpus.trees_max = f.trees;
  corpus.trees_min = f.trees_min;
  corpus.random_count = f.random;
  corpus.random_n_min = f.n_min;
  corpus.random_n_max = f.n_max;
  corpus.random_p = f.p;
  corpus.seed = c.seed;
  if (!f.graph6.empty()) corpus.graph6_file = f.graph6;
  corpus.jobs = c.jobs;
  return corpus;
}

VerifyConfig make_verify_config(const CommonFlags& c) {
  VerifyConfig v;
  v.exact.exact_cap = c.exact_cap;
  v.domination.search_cap = c.domination_cap;
  return v;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"lapdom: Laplacian eigenvalue distribution and domination"};
  app.require_subcommand(1);
  app.footer(kGraphSpecGrammar);

  CommonFlags common;
  CorpusFlags corpus;

  SpectrumOptions spectrum;
  std::string variant = "laplacian";
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Exact eigenvalue counts of one graph");
  spectrum_cmd->add_option("graph", spectrum.spec, "Graph spec")->required();
  spectrum_cmd->add_option("--interval", spectrum.intervals, "Interval such as [0,1) or (n-1,n]; repeatable");
  spectrum_cmd->add_option("--variant", variant, "laplacian or signless")
      ->check(CLI::IsMember({"laplacian", "signless"}));
  spectrum_cmd->add_flag("--show-spectrum", spectrum.show_spectrum, "Print the eigenvalues");
  add_common(spectrum_cmd, common);

  GammaOptions gamma;
  auto* gamma_cmd = app.add_subcommand("gamma", "Domination number and certificates");
  gamma_cmd->add_option("graph", gamma.spec, "Graph spec")->required();
  gamma_cmd->add_flag("--greedy", gamma.greedy, "Also report the greedy upper bound");
  gamma_cmd->add_flag("--certificate", gamma.certificate, "Print a minimum dominating set with private neighbors");
  gamma_cmd->add_flag("--star-forest", gamma.star_forest, "Print the spanning star forest");
  add_common(gamma_cmd, common);

  VerifyOptions verify;
  std::vector<std::string> checks;
  bool no_products = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run every applicable bound on a corpus");
  add_corpus(verify_cmd, corpus);
  verify_cmd->add_option("--checks", checks, "Keep checks whose name contains one of these")->delimiter(',');
  verify_cmd->add_flag("--details", verify.details, "List every check in table format");
  verify_cmd->add_flag("--no-products", no_products, "Skip the G x K_2 product checks");
  add_common(verify_cmd, common);

  FamilyOptions family;
  std::string family_range = "1..4";
  auto* family_cmd = app.add_subcommand("family", "Table of gamma, counts and ratios over a family");
  family_cmd->add_option("family", family.family, "tk, path or star")->required();
  family_cmd->add_option("--range", family_range, "Parameter range A..B (k for tk, n otherwise)");
  add_common(family_cmd, common);

  SearchOptions search;
  std::string target = "max-ratio-lower";
  auto* search_cmd = app.add_subcommand("search", "Extremal ratio and equality cases over a corpus");
  add_corpus(search_cmd, corpus);
  search_cmd->add_option("--target", target, "max-ratio-lower, max-ratio-upper or equality")
      ->check(CLI::IsMember({"max-ratio-lower", "max-ratio-upper", "equality"}));
  search_cmd->add_option("--limit", search.limit, "List at most this many attaining graphs (0 = all)");
  add_common(search_cmd, common);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  std::ofstream file;
  if (!common.output.empty()) {
    file.open(common.output);
    if (!file) {
      err << "error: cannot write " << common.output << '\n';
      return kExitUsage;
    }
  }
  std::ostream& sink = common.output.empty() ? out : file;

  try {
    const OutputFormat format = parse_output_format(common.format);
    const VerifyConfig config = make_verify_config(common);
    int code = kExitPass;
    if (*spectrum_cmd) {
      spectrum.variant = variant == "signless" ? MatrixVariant::signless : MatrixVariant::laplacian;
      spectrum.format = format;
      spectrum.exact = config.exact;
      code = cmd_spectrum(spectrum, sink, err);
    } else if (*gamma_cmd) {
      gamma.format = format;
      gamma.domination = config.domination;
      code = cmd_gamma(gamma, sink, err);
    } else if (*verify_cmd) {
      verify.corpus = make_corpus(corpus, common);
      verify.checks = checks;
      verify.format = format;
      verify.verify = config;
      verify.verify.products = !no_products;
      code = cmd_verify(verify, sink, err);
    } else if (*family_cmd) {
      std::tie(family.from, family.to) = parse_range(family_range);
      family.format = format;
      family.verify = config;
      code = cmd_family(family, sink, err);
    } else if (*search_cmd) {
      search.corpus = make_corpus(corpus, common);
      search.target = parse_search_target(target);
      search.format = format;
      search.verify = config;
      code = cmd_search(search, sink, err);
    }
    sink.flush();
    if (!sink) {
      err << "error: failed writing output\n";
      return kExitUsage;
    }
    return code;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace lapdom::cli
