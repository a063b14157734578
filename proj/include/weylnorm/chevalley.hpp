#pragma once

#include <nlohmann/json.hpp>

#include <cstddef>
#include <string>
#include <vector>

#include "weylnorm/exact_matrix.hpp"
#include "weylnorm/rootsystem.hpp"

namespace weylnorm {

/// Chevalley structure constants [e_a, e_b] = N(a, b) e_{a+b}, indexed by
/// root index in RootSystem::roots(). Signs follow the extraspecial-pair
/// convention (every extraspecial N positive, positive roots ordered by
/// height then coordinates) and are therefore convention-dependent.
class StructureConstants {
 public:
  explicit StructureConstants(const RootSystem& rs);

  /// Zero when a + b is not a root.
  int operator()(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t num_roots() const { return table_.size(); }
  std::size_t defined_pairs() const;
  int max_abs() const;

 private:
  std::vector<std::vector<int>> table_;
};

StructureConstants structure_constants(const RootSystem& rs);

/// Problems with the table (antisymmetry, |N| = p+1, the cyclic and
/// N(-a,-b) = -N(a,b) rules); empty when consistent.
std::vector<std::string> check_structure_constants(const RootSystem& rs,
                                                   const StructureConstants& n);

enum class RepKind { adjoint, defining, sl2 };

std::string to_string(RepKind k);
/// "adjoint" | "defining" | "sl2"; throws ConfigError otherwise.
RepKind parse_rep_kind(const std::string& s);

/// Images of the Chevalley generators in a finite-dimensional representation.
/// Every h[i] is diagonal with integer entries recorded in `weights`, and the
/// generator matrices are rational.
struct Representation {
  RepKind kind = RepKind::adjoint;
  CartanMatrix cartan;
  std::size_t dim = 0;
  std::vector<ExactMatrix> e;
  std::vector<ExactMatrix> f;
  std::vector<ExactMatrix> h;
  /// weights[b][i] = eigenvalue of h_i on basis vector b.
  std::vector<IntVector> weights;
  std::vector<std::string> basis_labels;

  int rank() const { return cartan.rank; }
  std::string label() const { return to_string(kind); }
  std::string describe() const { return cartan.label() + " " + label(); }
};

/// Checks [h_i,e_j] = a_ij e_j, [h_i,f_j] = -a_ij f_j, [e_i,f_j] = delta_ij h_j,
/// [h_i,h_j] = 0 and ad_{e_i}^{1-a_ij} e_j = ad_{f_i}^{1-a_ij} f_j = 0.
/// Returns one line per violated identity.
std::vector<std::string> check_serre_relations(const Representation& rep);

/// Adjoint representation on the Chevalley basis: positive root vectors,
/// then h_1..h_n, then negative root vectors.
Representation adjoint_rep(const RootSystem& rs);
/// Defining representation of SL(n+1) (type A) or Sp(2n) (type C).
Representation defining_rep(CartanType type, int rank);
/// The 2-dimensional representation of sl2.
Representation sl2_rep();

/// Dispatches on kind; throws ConfigError for unsupported combinations.
Representation make_representation(CartanType type, int rank, RepKind kind);

/// sum_{k} t^k X^k / k!, truncated where X^k vanishes. Throws
/// std::invalid_argument if X is not nilpotent.
ExactMatrix exp_nilpotent(const ExactMatrix& x, const CycloNum& t = CycloNum(1));

/// exp(i*pi*k*h_i/4): diagonal with z^{k*w} on each basis vector of weight w.
ExactMatrix exp_ih_quarter(const Representation& rep, int i, long k);

/// exp(i*pi*k*(sum_j c_j h_j)/4).
ExactMatrix exp_h_combination(const Representation& rep, const IntVector& coeffs, long k);

/// Integer linear combination sum_j c_j h_j.
ExactMatrix h_combination(const Representation& rep, const IntVector& coeffs);

/// exp(i*pi*k*X/4) for X diagonalizable with integer spectrum contained in
/// `spectrum`, as the Lagrange polynomial p with p(m) = z^{k*m}. Throws
/// std::invalid_argument when prod (X - m) != 0.
ExactMatrix exp_semisimple_interp(const ExactMatrix& x, std::vector<int> spectrum, long k);

/// Distinct eigenvalues of h_i in `rep`, ascending.
std::vector<int> h_spectrum(const Representation& rep, int i);

nlohmann::json to_json(const Representation& rep);

}  // namespace weylnorm
