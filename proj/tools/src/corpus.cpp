#include "lapdom/cli/corpus.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include "lapdom/generators.hpp"
#include "lapdom/graph6.hpp"

namespace lapdom::cli {

namespace {

std::string format_probability(double p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

}  // namespace

std::string random_graph_spec(const CorpusConfig& config, std::size_t index) {
  if (config.random_p.empty()) throw std::invalid_argument("random corpus needs at least one edge probability");
  if (config.random_n_min > config.random_n_max) throw std::invalid_argument("random corpus has n-min > n-max");
  const auto lo = [](std::uint64_t v) { return static_cast<std::uint32_t>(v); };
  const auto hi = [](std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); };
  std::seed_seq seq{lo(config.seed), hi(config.seed), lo(index), hi(index)};
  std::mt19937_64 rng(seq);
  const std::size_t span = config.random_n_max - config.random_n_min + 1;
  const std::size_t n = config.random_n_min + static_cast<std::size_t>(rng() % span);
  const std::uint64_t graph_seed = rng();
  const double p = config.random_p[index % config.random_p.size()];
  return "er:" + std::to_string(n) + "," + format_probability(p) + "," + std::to_string(graph_seed);
}

void for_each_corpus_graph(const CorpusConfig& config, const std::function<void(NamedGraph&&)>& visit) {
  for (const auto& spec : config.specs) visit(parse_graph_spec(spec));

  if (config.family) {
    for (std::size_t i = config.family_from; i <= config.family_to; ++i) {
      visit(parse_graph_spec(*config.family + ":" + std::to_string(i)));
    }
  }

  if (config.trees_max) {
    for (std::size_t n = std::max<std::size_t>(1, config.trees_min); n <= *config.trees_max; ++n) {
      std::size_t index = 0;
      enumerate_labeled_trees(
          n,
          [&](const Graph& t) {
            visit({"tree:" + std::to_string(n) + ":" + std::to_string(index++), t});
            return true;
          },
          std::max(n, kDefaultTreeEnumerationCap));
    }
  }

  for (std::size_t i = 0; i < config.random_count; ++i) {
    const std::string spec = random_graph_spec(config, i);
    NamedGraph g = parse_graph_spec(spec);
    visit(std::move(g));
  }

  if (config.graph6_file) {
    std::ifstream in(*config.graph6_file);
    if (!in) throw IoError("cannot read " + *config.graph6_file);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      try {
        visit({*config.graph6_file + ":" + std::to_string(line_no), parse_graph6(line)});
      } catch (const GraphError& e) {
        throw IoError(*config.graph6_file + ":" + std::to_string(line_no) + ": " + e.what());
      }
    }
    if (in.bad()) throw IoError("error reading " + *config.graph6_file);
  }
}

}  // namespace lapdom::cli
