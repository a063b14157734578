#pragma once

#include <nlohmann/json.hpp>

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace weylnorm {

inline constexpr int kSchemaVersion = 1;

enum class CheckStatus { pass, fail, skipped };

std::string to_string(CheckStatus s);

/// One instance of a relation, e.g. relation "tits.braid" at indices {1, 2}.
/// Indices are 1-based node numbers.
struct RelationCheck {
  std::string relation_id;
  std::vector<int> indices;
  CheckStatus status = CheckStatus::pass;
  std::string note;
};

RelationCheck make_check(std::string relation_id, std::vector<int> indices, bool holds,
                         std::string note = {});

struct VerificationReport {
  std::string suite;
  std::string subject;  // e.g. "G2 adjoint"
  std::vector<RelationCheck> checks;

  void add(std::string relation_id, std::vector<int> indices, bool holds, std::string note = {});
  void skip(std::string relation_id, std::vector<int> indices, std::string note);
  void merge(const VerificationReport& other);
  /// Orders by (relation_id, indices).
  void sort();

  std::size_t count(CheckStatus s) const;
  bool all_pass() const { return count(CheckStatus::fail) == 0; }
  /// Entries with the given relation id.
  std::vector<RelationCheck> family(const std::string& relation_id) const;

  nlohmann::json to_json() const;
  std::string to_text() const;
};

/// A deferred relation check producing one report entry.
using CheckTask = std::function<RelationCheck()>;

/// Evaluates tasks on `threads` workers and returns a sorted report.
VerificationReport run_checks(std::string suite, std::string subject,
                              const std::vector<CheckTask>& tasks, unsigned threads);

}  // namespace weylnorm
