#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lapdom/cli/corpus.hpp"
#include "lapdom/spectral.hpp"
#include "lapdom/verify.hpp"

namespace lapdom::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFatal = 2;

enum class OutputFormat { json, csv, table };

OutputFormat parse_output_format(std::string_view text);

struct SpectrumOptions {
  std::string spec;
  /// Defaults to the six intervals the bounds use.
  std::vector<std::string> intervals;
  MatrixVariant variant = MatrixVariant::laplacian;
  bool show_spectrum = false;
  OutputFormat format = OutputFormat::table;
  ExactConfig exact;
};

struct GammaOptions {
  std::string spec;
  bool greedy = false;
  bool certificate = false;
  bool star_forest = false;
  OutputFormat format = OutputFormat::table;
  DominationConfig domination;
};

struct VerifyOptions {
  CorpusConfig corpus;
  /// Keep only checks whose name contains one of these substrings.
  std::vector<std::string> checks;
  /// Print every check in table format.
  bool details = false;
  OutputFormat format = OutputFormat::table;
  VerifyConfig verify;
};

struct FamilyOptions {
  std::string family;
  std::size_t from = 1;
  std::size_t to = 4;
  OutputFormat format = OutputFormat::table;
  VerifyConfig verify;
};

enum class SearchTarget { max_ratio_lower, max_ratio_upper, equality };

SearchTarget parse_search_target(std::string_view text);

struct SearchOptions {
  CorpusConfig corpus;
  SearchTarget target = SearchTarget::max_ratio_lower;
  /// Attaining graphs listed; 0 lists all.
  std::size_t limit = 0;
  OutputFormat format = OutputFormat::table;
  VerifyConfig verify;
};

int cmd_spectrum(const SpectrumOptions& options, std::ostream& out, std::ostream& err);
int cmd_gamma(const GammaOptions& options, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err);
int cmd_family(const FamilyOptions& options, std::ostream& out, std::ostream& err);
int cmd_search(const SearchOptions& options, std::ostream& out, std::ostream& err);

/// Full command line without the program name. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lapdom::cli
