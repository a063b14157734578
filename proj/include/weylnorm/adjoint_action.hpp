#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "weylnorm/chevalley.hpp"
#include "weylnorm/galois_ext.hpp"
#include "weylnorm/report.hpp"
#include "weylnorm/tits.hpp"

namespace weylnorm {

enum class LiftKind { tits, unitary };
enum class GenKind { e, f };

std::string to_string(LiftKind k);
/// "tits" | "unitary"; throws ConfigError otherwise.
LiftKind parse_lift_kind(const std::string& s);

/// g x g^{-1}, or A sigma(x) A^{-1} when g = (A, 1).
ExactMatrix conj_generator(const GroupElement& g, const ExactMatrix& x);

/// Closed form of sdot_i x_j sdot_i^{-1} for x = e or f. With `tilde` the
/// generators are e~ = -e, f~ = f and the image of e~_j (resp. f~_j) is returned.
ExactMatrix bracket_rhs_tits(const Representation& rep, int i, int j, GenKind kind, bool tilde = false);

/// Closed form of sigma_i (i x_j) sigma_i^{-1} for x = e or f.
ExactMatrix bracket_rhs_unitary(const Representation& rep, int i, int j, GenKind kind);

struct ActionEntry {
  LiftKind lift = LiftKind::tits;
  bool tilde = false;
  int i = 0;
  int j = 0;
  GenKind gen = GenKind::e;
  /// |a_ij|, the number of nested brackets (0 when i = j).
  int depth = 0;
  /// Scalar in front of the iterated bracket, e.g. "-1/2".
  std::string coefficient;
  ExactMatrix expected;
  ExactMatrix actual;
  bool match = false;
};

struct ActionTable {
  std::vector<ActionEntry> entries;

  bool all_match() const;
  VerificationReport to_report(const std::string& subject) const;
  nlohmann::json to_json(bool with_matrices = false) const;
  std::string to_text() const;
};

struct ActionOptions {
  bool tits = true;
  bool unitary = true;
  bool tilde = true;
};

ActionTable verify_action_tables(const Representation& rep, const TitsElements& t, const UnitaryLifts& u,
                                 ActionOptions opts = {}, unsigned threads = 1);

/// [h_k, sdot_i(e_j)] = (a_kj - a_ki a_ij) sdot_i(e_j) and the analogue for f_j.
VerificationReport verify_weight_consistency(const Representation& rep, const TitsElements& t,
                                             unsigned threads = 1);

}  // namespace weylnorm
