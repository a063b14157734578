#pragma once

#include <nlohmann/json.hpp>

#include <cstddef>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "weylnorm/cyclotomic.hpp"

namespace weylnorm {

/// Matrix over Q(z8) in canonical sparse form: each row holds its nonzero
/// entries sorted by column, and no stored entry is zero. Values are
/// immutable once built; every operation returns a new matrix.
class ExactMatrix {
 public:
  using Entry = std::pair<std::size_t, CycloNum>;  // (column, value)
  using Triplet = std::tuple<std::size_t, std::size_t, CycloNum>;

  /// Density above which products go through the dense kernel.
  static constexpr double kDenseThreshold = 0.25;

  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);

  static ExactMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static ExactMatrix identity(std::size_t n);
  static ExactMatrix diagonal(std::span<const CycloNum> diag);
  /// Triplets may come in any order; duplicates are summed and zeros dropped.
  static ExactMatrix from_triplets(std::size_t rows, std::size_t cols,
                                   std::vector<Triplet> triplets);
  /// Row-major dense input.
  static ExactMatrix from_dense(std::size_t rows, std::size_t cols,
                                std::span<const CycloNum> values);
  /// Small integer matrices, mostly for tests.
  static ExactMatrix from_rows(const std::vector<std::vector<CycloNum>>& rows);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows() == cols_; }
  std::size_t nnz() const;
  double density() const;

  std::span<const Entry> row(std::size_t r) const { return rows_.at(r); }
  CycloNum at(std::size_t r, std::size_t c) const;
  std::vector<CycloNum> to_dense() const;
  std::vector<Triplet> triplets() const;

  bool is_zero() const { return nnz() == 0; }
  bool is_identity() const;
  bool is_diagonal() const;
  /// Every entry rational (fixed by conjugation).
  bool is_real() const;
  bool has_integer_entries() const;
  /// Exactly one nonzero per row and per column.
  bool is_monomial() const;

  ExactMatrix operator-() const;
  ExactMatrix transpose() const;
  /// Entrywise complex conjugation.
  ExactMatrix conj() const;
  ExactMatrix scaled(const CycloNum& s) const;
  ExactMatrix pow(unsigned k) const;
  /// Gauss-Jordan inverse; throws std::domain_error if singular.
  ExactMatrix inverse() const;
  CycloNum determinant() const;
  CycloNum trace() const;

  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator*(const CycloNum& s, const ExactMatrix& a) { return a.scaled(s); }
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

  std::size_t hash() const;

  /// Human-readable rendering, one row per line, entries as z^k polynomials.
  std::string to_string() const;

 private:
  friend ExactMatrix mul_sparse(const ExactMatrix&, const ExactMatrix&);
  friend ExactMatrix mul_dense(const ExactMatrix&, const ExactMatrix&);

  std::size_t cols_ = 0;
  std::vector<std::vector<Entry>> rows_;
};

/// Row-by-row sparse accumulation kernel.
ExactMatrix mul_sparse(const ExactMatrix& a, const ExactMatrix& b);
/// Dense triple-loop kernel; result converted back to canonical sparse form.
ExactMatrix mul_dense(const ExactMatrix& a, const ExactMatrix& b);

/// Lie bracket [a, b] = ab - ba.
ExactMatrix bracket(const ExactMatrix& a, const ExactMatrix& b);

/// Product of a sequence of matrices, left to right.
ExactMatrix product(std::span<const ExactMatrix> factors);

/// Serialization: {"rows", "cols", "entries": [[r, c, [c0n,c0d,...,c3n,c3d]], ...]}
/// with entries in row-major order.
nlohmann::json to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::json to_json(const CycloNum& x);
CycloNum cyclo_from_json(const nlohmann::json& j);

struct ExactMatrixHash {
  std::size_t operator()(const ExactMatrix& m) const { return m.hash(); }
};

}  // namespace weylnorm
