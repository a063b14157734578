#pragma once

#include <nlohmann/json.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "weylnorm/chevalley.hpp"
#include "weylnorm/tits.hpp"

namespace weylnorm {

/// Diagonal matrices d with d^2 = 1 given by characters
/// chi_s(w) = (-1)^{<x(w), s>} of the lattice L spanned by the weights, where
/// x(w) are the coordinates of w in a fixed Z-basis of L.
struct TorusTwoTorsion {
  /// Z-basis of L (rows, fundamental-weight coordinates).
  std::vector<IntVector> lattice_basis;
  /// elements[k] corresponds to characters[k]; characters are listed in
  /// lexicographic order, so elements[0] is the identity.
  std::vector<ExactMatrix> elements;
  std::vector<std::vector<int>> characters;
  /// The characters with a single nonzero entry.
  std::vector<ExactMatrix> generators;

  std::size_t order() const { return elements.size(); }
};

TorusTwoTorsion torus_two_torsion(const Representation& rep);

/// Row-style Hermite normal form of the lattice spanned by `vectors`:
/// nonzero rows in echelon form with positive pivots.
std::vector<IntVector> lattice_basis(const std::vector<IntVector>& vectors);

enum class SplitStatus { split_with_witness, no_two_torsion_section };
enum class Isogeny { adjoint, simply_connected };
enum class CwwVerdict { split, non_split, not_covered };

std::string to_string(SplitStatus s);
std::string to_string(Isogeny i);
std::string to_string(CwwVerdict v);
Isogeny isogeny_of(RepKind kind);

struct CwwResult {
  CwwVerdict verdict = CwwVerdict::not_covered;
  std::string note;
  bool low_rank = false;
};

/// Splitting verdict of the classification theorem for simple groups.
CwwResult cww_oracle(CartanType type, int rank, Isogeny isogeny);

struct SplitReport {
  std::string type_label;
  int rank = 0;
  std::string rep;
  SplitStatus status = SplitStatus::no_two_torsion_section;
  /// Index into TorusTwoTorsion::elements per node when split.
  std::vector<std::size_t> witness;
  std::vector<std::vector<int>> witness_characters;
  std::vector<std::vector<int>> witness_diagonals;
  std::size_t two_torsion_order = 0;
  std::uint64_t search_space = 0;
  std::uint64_t relations_checked = 0;
  CwwResult cww;

  bool agrees_with_cww() const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

inline constexpr std::uint64_t kDefaultSearchCap = std::uint64_t{1} << 20;

/// Exhaustive search, in lexicographic order of (t_1, ..., t_n), for
/// g_i = sdot_i t_i with g_i^2 = 1 and all braid relations. Throws
/// CapExceeded when |T[2]|^rank > cap. A witness is re-verified before it
/// is returned.
SplitReport split_search(const Representation& rep, const TitsElements& t,
                         std::uint64_t cap = kDefaultSearchCap, unsigned threads = 1);

}  // namespace weylnorm
