#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "frobq/genfrac.hpp"

namespace frobq {

/// A ring file or built-in: characteristic, variable names and relations.
struct RingDescription {
  std::string name;
  std::uint32_t p = 0;
  std::vector<std::string> variables;
  std::vector<std::string> relations;
};

/// Error in a ring file, with its 1-based line number.
class RingFileError : public Error {
 public:
  RingFileError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Parses the line format: "char <p>", "vars <name> ...", any number of
/// "rel <polynomial>", '#' starts a comment.
RingDescription parse_ring_description(std::string_view text);
RingDescription read_ring_file(const std::filesystem::path& path);

/// REG, TWOPLANES, NILLINE, FERMAT3 or CROSS (case-insensitive). `p`
/// overrides the default characteristic.
RingDescription builtin_ring(std::string_view name,
                             std::optional<std::uint32_t> p = std::nullopt);
std::vector<std::string> builtin_ring_names();

/// Validates the description and builds S/J. Throws InvalidArgument for a
/// non-prime characteristic and ParseError for bad relations.
QuotientRing make_quotient_ring(const RingDescription& desc);
QuotientRing load_ring(const std::filesystem::path& path);

struct SurveyConfig {
  std::size_t samples = 50;
  std::uint64_t seed = 1;
  /// Elements are homogeneous of degree drawn from [1, max_degree].
  std::uint32_t max_degree = 1;
  /// Subsystem length; nullopt cycles through 1, ..., dim R.
  std::optional<std::size_t> length;
  std::uint32_t e_max = 4;
  std::uint32_t lookahead = 2;
  std::uint32_t n_max = 3;
  /// Random draws allowed per requested sample before giving up.
  std::size_t attempts_per_sample = 200;
};

struct Sampling {
  std::vector<SequenceSpec> sequences;
  std::size_t attempts = 0;
  std::size_t rejected = 0;
};

/// Pseudo-random subsystems of parameters; deterministic for a fixed seed,
/// and the first k samples do not depend on the requested sample count.
/// Throws InvalidArgument when dim R = 0 and BudgetExceeded when the retry
/// budget runs out.
Sampling sample_parameter_ideals(const QuotientRing& ring, const SurveyConfig& cfg);

struct QRecord {
  std::vector<std::string> generators;
  std::vector<std::string> closure;
  bool stabilized = false;
  bool certified_lower = false;
  std::uint32_t e_star = 0;
  std::uint32_t window = 0;
  /// "found", "not-found", "unstabilized" or "error".
  std::string status;
  std::uint32_t q_exponent = 0;
  std::uint64_t q = 0;
  std::string error;
};

struct QReport {
  std::string ring;
  std::uint32_t p = 0;
  int dimension = 0;
  SurveyConfig config;
  std::size_t attempts = 0;
  std::size_t rejected = 0;
  std::vector<QRecord> records;
  /// Over records with status "found".
  std::optional<std::uint32_t> max_q_exponent;
  std::map<std::uint32_t, std::size_t> histogram;
  std::size_t indeterminate = 0;
  std::size_t failures = 0;

  nlohmann::ordered_json to_json() const;
};

QRecord q_record(const Ideal& a, const QuotientRing& ring, const ClosureOptions& options);

/// Frobenius closure and Q(a) for every sampled subsystem of parameters.
QReport survey_uniform_q(const QuotientRing& ring, const SurveyConfig& cfg,
                         std::string ring_name = "");

struct SuiteResult {
  bool passed = false;
  /// Some check could not be decided (budget, unstabilized chain).
  bool indeterminate = false;
  nlohmann::ordered_json report;
};

/// Dispatches a named check: "gy", "huneke", "br21" (identities of
/// verify_gy_suite), "fixedq" (torsion exponents of sampled fractions) or
/// "nil" (the nilpotent-ideal bound for Q). `nilpotent` is the ideal used by
/// "nil"; when absent the nilradical generators are taken from the
/// variables that are nilpotent modulo J.
SuiteResult run_suite(std::string_view name, const QuotientRing& ring,
                      const std::optional<SequenceSpec>& x, const SurveyConfig& cfg,
                      const std::optional<Ideal>& nilpotent = std::nullopt);

std::vector<std::string> suite_names();

/// A system of parameters passing is_usd_bounded(n_max): the variables when
/// they qualify, otherwise the first sampled full system that does.
std::optional<SequenceSpec> find_usd_system(const QuotientRing& ring,
                                            const SurveyConfig& cfg);

nlohmann::ordered_json to_json(const SuiteReport& report);
std::vector<std::string> ideal_strings(const Ideal& ideal);

}  // namespace frobq
