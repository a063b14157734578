#pragma once

#include <nlohmann/json.hpp>

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace weylnorm {

using IntVector = std::vector<int>;
using IntMatrix = std::vector<std::vector<int>>;

enum class CartanType : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// Parses "A".."G" (case-insensitive); throws ConfigError otherwise.
CartanType parse_cartan_type(const std::string& s);
char to_char(CartanType t);

/// Cartan matrix a_ij = <alpha_i^vee, alpha_j> of a simple type.
///
/// Nodes follow Bourbaki numbering. For G2 the long root is node 1, so that
/// a_12 = -1 and a_21 = -3.
struct CartanMatrix {
  CartanType type = CartanType::A;
  int rank = 0;
  IntMatrix a;

  int operator()(int i, int j) const { return a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  std::string label() const { return std::string(1, to_char(type)) + std::to_string(rank); }
};

/// Throws ConfigError for an invalid (type, rank) pair.
CartanMatrix build_cartan(CartanType type, int rank);

/// Checks a_ii = 2, off-diagonal signs and the finite-type product bound.
bool satisfies_cartan_axioms(const IntMatrix& a);

/// m_ij from the product a_ij * a_ji; throws std::invalid_argument for i == j.
int coxeter_m(const CartanMatrix& c, int i, int j);

/// s_i applied to h = sum_k h[k] h_k (coroot basis): s_i(h_k) = h_k - a_ki h_i.
IntVector weyl_reflect_cartan(const CartanMatrix& c, int i, const IntVector& h);

/// Root system in simple-root coordinates.
class RootSystem {
 public:
  explicit RootSystem(CartanMatrix cartan);

  const CartanMatrix& cartan() const { return cartan_; }
  int rank() const { return cartan_.rank; }

  /// Positive roots sorted by (height, coordinates), then their negatives in the same order.
  const std::vector<IntVector>& roots() const { return roots_; }
  std::size_t num_positive() const { return roots_.size() / 2; }
  const IntVector& positive(std::size_t k) const { return roots_[k]; }

  std::optional<std::size_t> index_of(const IntVector& root) const;
  bool is_root(const IntVector& v) const { return index_of(v).has_value(); }
  bool is_positive_index(std::size_t idx) const { return idx < num_positive(); }
  std::size_t simple_index(int i) const;

  /// <alpha, alpha_i^vee> = sum_j alpha_j a_ij.
  int pairing(const IntVector& alpha, int i) const;
  /// Weight vector (<alpha, alpha_i^vee>)_i.
  IntVector weight(const IntVector& alpha) const;
  /// s_i(alpha) = alpha - <alpha, alpha_i^vee> alpha_i.
  IntVector reflect(int i, const IntVector& alpha) const;
  /// s_i as a permutation of root indices.
  const std::vector<std::size_t>& reflection_permutation(int i) const {
    return reflection_perms_[static_cast<std::size_t>(i)];
  }

  /// Invariant form with the shortest simple root normalized to (a,a) = 2.
  long inner(const IntVector& x, const IntVector& y) const;
  /// d_i = (alpha_i, alpha_i) / 2.
  const IntVector& symmetrizer() const { return symmetrizer_; }

  /// Coroot of alpha in the simple-coroot basis {h_k}.
  IntVector coroot(const IntVector& alpha) const;

 private:
  CartanMatrix cartan_;
  std::vector<IntVector> roots_;
  std::map<IntVector, std::size_t> index_;
  std::vector<std::vector<std::size_t>> reflection_perms_;
  IntVector symmetrizer_;
};

/// Closure of the simple roots under simple reflections. Throws ConfigError
/// when the iteration cap is hit (input is not of finite type).
RootSystem generate_roots(const CartanMatrix& c);

int height(const IntVector& root);

/// |W| as a product of orbit sizes along a chain of parabolic subgroups.
std::uint64_t weyl_group_order(const RootSystem& rs, std::uint64_t cap = UINT64_MAX);

/// Enumerates W as root permutations (element 0 is the identity).
std::vector<std::vector<std::size_t>> weyl_group_permutations(const RootSystem& rs,
                                                              std::uint64_t cap);

nlohmann::json roots_summary_json(const RootSystem& rs);

}  // namespace weylnorm
