#include "weylnorm/report.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "weylnorm/parallel.hpp"

namespace weylnorm {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

RelationCheck make_check(std::string relation_id, std::vector<int> indices, bool holds, std::string note) {
  return {std::move(relation_id), std::move(indices), holds ? CheckStatus::pass : CheckStatus::fail,
          std::move(note)};
}

void VerificationReport::add(std::string relation_id, std::vector<int> indices, bool holds,
                             std::string note) {
  checks.push_back({std::move(relation_id), std::move(indices),
                    holds ? CheckStatus::pass : CheckStatus::fail, std::move(note)});
}

void VerificationReport::skip(std::string relation_id, std::vector<int> indices, std::string note) {
  checks.push_back({std::move(relation_id), std::move(indices), CheckStatus::skipped, std::move(note)});
}

void VerificationReport::merge(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

void VerificationReport::sort() {
  std::stable_sort(checks.begin(), checks.end(), [](const RelationCheck& a, const RelationCheck& b) {
    return std::tie(a.relation_id, a.indices) < std::tie(b.relation_id, b.indices);
  });
}

std::size_t VerificationReport::count(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [s](const RelationCheck& c) { return c.status == s; }));
}

std::vector<RelationCheck> VerificationReport::family(const std::string& relation_id) const {
  std::vector<RelationCheck> out;
  for (const auto& c : checks)
    if (c.relation_id == relation_id) out.push_back(c);
  return out;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json items = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json item = {{"relation_id", c.relation_id}, {"indices", c.indices}, {"status", to_string(c.status)}};
    if (!c.note.empty()) item["note"] = c.note;
    items.push_back(std::move(item));
  }
  return {{"schema_version", kSchemaVersion},
          {"suite", suite},
          {"subject", subject},
          {"passed", count(CheckStatus::pass)},
          {"failed", count(CheckStatus::fail)},
          {"skipped", count(CheckStatus::skipped)},
          {"checks", std::move(items)}};
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << suite << " on " << subject << ": " << count(CheckStatus::pass) << " pass, "
     << count(CheckStatus::fail) << " fail, " << count(CheckStatus::skipped) << " skipped\n";
  for (const auto& c : checks) {
    os << "  " << (c.status == CheckStatus::pass ? "ok  " : c.status == CheckStatus::fail ? "FAIL" : "skip")
       << " " << c.relation_id << " (";
    for (std::size_t k = 0; k < c.indices.size(); ++k) os << (k ? "," : "") << c.indices[k];
    os << ")";
    if (!c.note.empty()) os << "  " << c.note;
    os << "\n";
  }
  return os.str();
}

VerificationReport run_checks(std::string suite, std::string subject,
                              const std::vector<CheckTask>& tasks, unsigned threads) {
  std::vector<RelationCheck> results(tasks.size());
  parallel_for(tasks.size(), threads, [&](std::size_t k) { results[k] = tasks[k](); });
  VerificationReport report{std::move(suite), std::move(subject), std::move(results)};
  report.sort();
  return report;
}

}  // namespace weylnorm
