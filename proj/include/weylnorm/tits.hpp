#pragma once

#include <nlohmann/json.hpp>

#include <cstddef>
#include <cstdint>
#include <vector>

#include "weylnorm/chevalley.hpp"
#include "weylnorm/group_element.hpp"
#include "weylnorm/report.hpp"

namespace weylnorm {

/// s_i := exp(f_i) exp(-e_i) exp(f_i). The second form
/// exp(-e_i) exp(f_i) exp(-e_i) is computed too; throws ConsistencyError if
/// they differ.
ExactMatrix tits_lift(const Representation& rep, int i);

struct TitsElements {
  std::vector<ExactMatrix> sdot;
  std::vector<ExactMatrix> sdot_inv;
  /// zeta[i] = sdot[i]^2.
  std::vector<ExactMatrix> zeta;

  int rank() const { return static_cast<int>(sdot.size()); }
};

TitsElements make_tits_elements(const Representation& rep);

/// Squares, commutation and order of the zeta_i, the conjugation rule
/// sdot_i zeta_j = zeta_i^{-a_ji} zeta_j sdot_i, braid relations of length
/// m_ij, plus det = +-1, sdot^4 = 1, integrality in the adjoint case and the
/// weight-space permutation property.
VerificationReport verify_tits_presentation(const Representation& rep, const TitsElements& t,
                                            unsigned threads = 1);

/// sdot_i h_k sdot_i^{-1} = s_i(h_k) = h_k - a_ki h_i for every (i, k).
VerificationReport verify_normalizer_action(const Representation& rep, const TitsElements& t,
                                            unsigned threads = 1);

/// The three expressions for sdot_i and sdot_i^2 = exp(i pi h_i), with the
/// middle exponential taken from interpolation on the h_i spectrum.
VerificationReport verify_lift_identities(const Representation& rep, const TitsElements& t,
                                          unsigned threads = 1);

enum class EnumerationStatus { complete, cap_exceeded };

struct FiniteGroupTable {
  EnumerationStatus status = EnumerationStatus::complete;
  std::vector<GroupElement> elements;
  /// words[k] lists generator indices whose product is elements[k]; BFS
  /// order makes each word a shortest one.
  std::vector<std::vector<int>> words;

  std::size_t order() const { return elements.size(); }
  nlohmann::json to_json(bool with_matrices = false) const;
};

inline constexpr std::size_t kDefaultEnumerationCap = std::size_t{1} << 16;

/// BFS closure of the generators under right multiplication. Stops with
/// status cap_exceeded as soon as more than `cap` elements are found.
FiniteGroupTable enumerate_group(const std::vector<GroupElement>& gens,
                                 std::size_t cap = kDefaultEnumerationCap, unsigned threads = 1);
FiniteGroupTable enumerate_group(const std::vector<ExactMatrix>& gens,
                                 std::size_t cap = kDefaultEnumerationCap, unsigned threads = 1);

/// Permutation of the distinct weights of `rep` induced by a matrix mapping
/// weight spaces to weight spaces; empty if the matrix does not.
std::vector<std::size_t> weight_permutation(const Representation& rep, const ExactMatrix& g);

/// Number of distinct weight permutations realized by the table elements.
std::size_t weyl_image_order(const Representation& rep, const FiniteGroupTable& table);

}  // namespace weylnorm
