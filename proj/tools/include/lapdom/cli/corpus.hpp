#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "lapdom/cli/graph_spec.hpp"

namespace lapdom::cli {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Where the graphs of a sweep come from. Sources are concatenated in the
/// order specs, family, trees, random, graph6 file.
struct CorpusConfig {
  std::vector<std::string> specs;

  /// Family member for every parameter in [family_from, family_to].
  std::optional<std::string> family;
  std::size_t family_from = 1;
  std::size_t family_to = 0;

  /// Every labeled tree with trees_min <= n <= trees_max.
  std::optional<std::size_t> trees_max;
  std::size_t trees_min = 1;

  /// random_count graphs G(n, p) with n uniform in [random_n_min,
  /// random_n_max] and p cycling through random_p.
  std::size_t random_count = 0;
  std::size_t random_n_min = 1;
  std::size_t random_n_max = 16;
  std::vector<double> random_p = {0.3};
  std::uint64_t seed = 1;

  /// One graph6 string per line; blank lines are ignored.
  std::optional<std::string> graph6_file;

  std::size_t jobs = 1;
};

/// Spec of the i-th random graph: "er:n,p,seed" with a per-graph seed.
std::string random_graph_spec(const CorpusConfig& config, std::size_t index);

/// Visits every corpus graph in deterministic order.
void for_each_corpus_graph(const CorpusConfig& config, const std::function<void(NamedGraph&&)>& visit);

/// Applies `work` to every corpus graph on up to config.jobs threads and
/// hands the results to `emit` in corpus order.
template <typename R>
void process_corpus(const CorpusConfig& config, const std::function<R(const NamedGraph&)>& work,
                    const std::function<void(const NamedGraph&, R&&)>& emit) {
  const std::size_t jobs = std::max<std::size_t>(1, config.jobs);
  const std::size_t chunk = jobs == 1 ? 1 : 256 * jobs;
  std::vector<NamedGraph> buffer;

  const auto flush = [&] {
    if (buffer.empty()) return;
    std::vector<std::optional<R>> results(buffer.size());
    std::vector<std::exception_ptr> errors(buffer.size());
    if (jobs == 1) {
      for (std::size_t i = 0; i < buffer.size(); ++i) results[i].emplace(work(buffer[i]));
    } else {
      std::atomic<std::size_t> next{0};
      const auto worker = [&] {
        for (std::size_t i = next++; i < buffer.size(); i = next++) {
          try {
            results[i].emplace(work(buffer[i]));
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      };
      std::vector<std::thread> pool;
      for (std::size_t t = 0; t < std::min(jobs, buffer.size()); ++t) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }
    for (std::size_t i = 0; i < buffer.size(); ++i) {
      if (errors[i]) std::rethrow_exception(errors[i]);
      emit(buffer[i], std::move(*results[i]));
    }
    buffer.clear();
  };

  for_each_corpus_graph(config, [&](NamedGraph&& g) {
    buffer.push_back(std::move(g));
    if (buffer.size() >= chunk) flush();
  });
  flush();
}

}  // namespace lapdom::cli
