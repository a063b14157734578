#include "weylnorm/exact_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace weylnorm {

namespace {

void require_same_shape(const ExactMatrix& a, const ExactMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument(std::string(op) + ": shape mismatch");
}

std::vector<ExactMatrix::Entry> add_rows(std::span<const ExactMatrix::Entry> x,
                                         std::span<const ExactMatrix::Entry> y,
                                         bool subtract) {
  std::vector<ExactMatrix::Entry> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, subtract ? -y[j].second : y[j].second);
      ++j;
    } else {
      CycloNum v = subtract ? x[i].second - y[j].second : x[i].second + y[j].second;
      if (!v.is_zero()) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.rows_[i].emplace_back(i, CycloNum(1));
  return m;
}

ExactMatrix ExactMatrix::diagonal(std::span<const CycloNum> diag) {
  ExactMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i)
    if (!diag[i].is_zero()) m.rows_[i].emplace_back(i, diag[i]);
  return m;
}

ExactMatrix ExactMatrix::from_triplets(std::size_t rows, std::size_t cols,
                                       std::vector<Triplet> triplets) {
  ExactMatrix m(rows, cols);
  std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
    return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
  });
  for (auto& [r, c, v] : triplets) {
    if (r >= rows || c >= cols) throw std::out_of_range("ExactMatrix::from_triplets: index");
    auto& row = m.rows_[r];
    if (!row.empty() && row.back().first == c) {
      row.back().second += v;
    } else {
      row.emplace_back(c, std::move(v));
    }
  }
  for (auto& row : m.rows_)
    std::erase_if(row, [](const Entry& e) { return e.second.is_zero(); });
  return m;
}

ExactMatrix ExactMatrix::from_dense(std::size_t rows, std::size_t cols,
                                    std::span<const CycloNum> values) {
  if (values.size() != rows * cols) throw std::invalid_argument("ExactMatrix::from_dense: size");
  ExactMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (!values[r * cols + c].is_zero()) m.rows_[r].emplace_back(c, values[r * cols + c]);
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<CycloNum>>& rows) {
  const std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  std::vector<CycloNum> flat;
  for (const auto& r : rows) {
    if (r.size() != ncols) throw std::invalid_argument("ExactMatrix::from_rows: ragged input");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return from_dense(rows.size(), ncols, flat);
}

std::size_t ExactMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

double ExactMatrix::density() const {
  if (rows() == 0 || cols_ == 0) return 0.0;
  return static_cast<double>(nnz()) / static_cast<double>(rows() * cols_);
}

CycloNum ExactMatrix::at(std::size_t r, std::size_t c) const {
  const auto& row = rows_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry& e, std::size_t col) { return e.first < col; });
  if (it != row.end() && it->first == c) return it->second;
  return {};
}

std::vector<CycloNum> ExactMatrix::to_dense() const {
  std::vector<CycloNum> out(rows() * cols_);
  for (std::size_t r = 0; r < rows(); ++r)
    for (const auto& [c, v] : rows_[r]) out[r * cols_ + c] = v;
  return out;
}

std::vector<ExactMatrix::Triplet> ExactMatrix::triplets() const {
  std::vector<Triplet> out;
  for (std::size_t r = 0; r < rows(); ++r)
    for (const auto& [c, v] : rows_[r]) out.emplace_back(r, c, v);
  return out;
}

bool ExactMatrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows(); ++r) {
    const auto& row = rows_[r];
    if (row.size() != 1 || row[0].first != r || row[0].second != CycloNum(1)) return false;
  }
  return true;
}

bool ExactMatrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows(); ++r)
    for (const auto& e : rows_[r])
      if (e.first != r) return false;
  return true;
}

bool ExactMatrix::is_real() const {
  for (const auto& row : rows_)
    for (const auto& e : row)
      if (!e.second.is_rational()) return false;
  return true;
}

bool ExactMatrix::has_integer_entries() const {
  for (const auto& row : rows_)
    for (const auto& e : row)
      for (int k = 0; k < 4; ++k)
        if (e.second.coeff(k).get_den() != 1) return false;
  return true;
}

bool ExactMatrix::is_monomial() const {
  if (!is_square()) return false;
  std::vector<bool> seen(cols_, false);
  for (const auto& row : rows_) {
    if (row.size() != 1 || seen[row[0].first]) return false;
    seen[row[0].first] = true;
  }
  return true;
}

ExactMatrix ExactMatrix::operator-() const {
  ExactMatrix m = *this;
  for (auto& row : m.rows_)
    for (auto& e : row) e.second = -e.second;
  return m;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix m(cols_, rows());
  for (std::size_t r = 0; r < rows(); ++r)
    for (const auto& [c, v] : rows_[r]) m.rows_[c].emplace_back(r, v);
  return m;
}

ExactMatrix ExactMatrix::conj() const {
  ExactMatrix m = *this;
  for (auto& row : m.rows_)
    for (auto& e : row) e.second = e.second.conj();
  return m;
}

ExactMatrix ExactMatrix::scaled(const CycloNum& s) const {
  if (s.is_zero()) return zero(rows(), cols_);
  ExactMatrix m = *this;
  for (auto& row : m.rows_)
    for (auto& e : row) e.second *= s;
  return m;
}

ExactMatrix ExactMatrix::pow(unsigned k) const {
  if (!is_square()) throw std::invalid_argument("ExactMatrix::pow: not square");
  ExactMatrix result = identity(rows());
  ExactMatrix base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

ExactMatrix ExactMatrix::inverse() const {
  if (!is_square()) throw std::invalid_argument("ExactMatrix::inverse: not square");
  const std::size_t n = rows();
  // Sparse Gauss-Jordan on [A | I], rows kept as sorted entry lists.
  std::vector<std::vector<Entry>> left = rows_;
  std::vector<std::vector<Entry>> right(n);
  for (std::size_t i = 0; i < n; ++i) right[i].emplace_back(i, CycloNum(1));
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    for (std::size_t r = col; r < n; ++r) {
      if (!left[r].empty() && left[r].front().first == col) {
        if (pivot == n || left[r].size() < left[pivot].size()) pivot = r;
      }
    }
    if (pivot == n) throw std::domain_error("ExactMatrix::inverse: singular matrix");
    std::swap(left[pivot], left[col]);
    std::swap(right[pivot], right[col]);
    CycloNum inv = left[col].front().second.inverse();
    if (inv != CycloNum(1)) {
      for (auto& e : left[col]) e.second *= inv;
      for (auto& e : right[col]) e.second *= inv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      CycloNum factor;
      auto it = std::lower_bound(left[r].begin(), left[r].end(), col,
                                 [](const Entry& e, std::size_t c) { return e.first < c; });
      if (it == left[r].end() || it->first != col) continue;
      factor = it->second;
      std::vector<Entry> lscaled;
      for (const auto& e : left[col]) lscaled.emplace_back(e.first, e.second * factor);
      std::vector<Entry> rscaled;
      for (const auto& e : right[col]) rscaled.emplace_back(e.first, e.second * factor);
      left[r] = add_rows(left[r], lscaled, true);
      right[r] = add_rows(right[r], rscaled, true);
    }
  }
  ExactMatrix m(n, n);
  m.rows_ = std::move(right);
  return m;
}

CycloNum ExactMatrix::determinant() const {
  if (!is_square()) throw std::invalid_argument("ExactMatrix::determinant: not square");
  const std::size_t n = rows();
  std::vector<std::vector<Entry>> work = rows_;
  CycloNum det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    for (std::size_t r = col; r < n; ++r)
      if (!work[r].empty() && work[r].front().first == col) {
        pivot = r;
        break;
      }
    if (pivot == n) return {};
    if (pivot != col) {
      std::swap(work[pivot], work[col]);
      det = -det;
    }
    const CycloNum p = work[col].front().second;
    det *= p;
    const CycloNum pinv = p.inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (work[r].empty() || work[r].front().first != col) continue;
      CycloNum factor = work[r].front().second * pinv;
      std::vector<Entry> scaled;
      for (const auto& e : work[col]) scaled.emplace_back(e.first, e.second * factor);
      work[r] = add_rows(work[r], scaled, true);
    }
  }
  return det;
}

CycloNum ExactMatrix::trace() const {
  if (!is_square()) throw std::invalid_argument("ExactMatrix::trace: not square");
  CycloNum t;
  for (std::size_t r = 0; r < rows(); ++r) t += at(r, r);
  return t;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_shape(a, b, "ExactMatrix::operator+");
  ExactMatrix m(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) m.rows_[r] = add_rows(a.row(r), b.row(r), false);
  return m;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_shape(a, b, "ExactMatrix::operator-");
  ExactMatrix m(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) m.rows_[r] = add_rows(a.row(r), b.row(r), true);
  return m;
}

ExactMatrix mul_sparse(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: dimension mismatch");
  ExactMatrix m(a.rows(), b.cols());
  std::vector<CycloNum> acc(b.cols());
  std::vector<char> touched(b.cols(), 0);
  std::vector<std::size_t> cols;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    cols.clear();
    for (const auto& [k, av] : a.rows_[r]) {
      for (const auto& [c, bv] : b.rows_[k]) {
        if (!touched[c]) {
          touched[c] = 1;
          cols.push_back(c);
          acc[c] = av * bv;
        } else {
          acc[c] += av * bv;
        }
      }
    }
    std::sort(cols.begin(), cols.end());
    auto& out = m.rows_[r];
    for (std::size_t c : cols) {
      if (!acc[c].is_zero()) out.emplace_back(c, std::move(acc[c]));
      acc[c] = CycloNum();
      touched[c] = 0;
    }
  }
  return m;
}

ExactMatrix mul_dense(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: dimension mismatch");
  const std::size_t n = a.rows();
  const std::size_t k = a.cols();
  const std::size_t p = b.cols();
  const std::vector<CycloNum> da = a.to_dense();
  const std::vector<CycloNum> db = b.to_dense();
  std::vector<CycloNum> dc(n * p);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < k; ++l) {
      const CycloNum& x = da[i * k + l];
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < p; ++j) {
        const CycloNum& y = db[l * p + j];
        if (!y.is_zero()) dc[i * p + j] += x * y;
      }
    }
  }
  return ExactMatrix::from_dense(n, p, dc);
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.density() > ExactMatrix::kDenseThreshold && b.density() > ExactMatrix::kDenseThreshold)
    return mul_dense(a, b);
  return mul_sparse(a, b);
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  return a.cols_ == b.cols_ && a.rows_ == b.rows_;
}

std::size_t ExactMatrix::hash() const {
  std::size_t seed = rows();
  hash_combine(seed, cols_);
  for (std::size_t r = 0; r < rows(); ++r)
    for (const auto& [c, v] : rows_[r]) {
      hash_combine(seed, r * 1000003U + c);
      hash_combine(seed, v.hash());
    }
  return seed;
}

std::string ExactMatrix::to_string() const {
  std::vector<std::string> cells(rows() * cols_);
  std::size_t width = 1;
  for (std::size_t r = 0; r < rows(); ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      cells[r * cols_ + c] = at(r, c).to_string();
      width = std::max(width, cells[r * cols_ + c].size());
    }
  std::ostringstream os;
  for (std::size_t r = 0; r < rows(); ++r) {
    os << "[";
    for (std::size_t c = 0; c < cols_; ++c) {
      const auto& s = cells[r * cols_ + c];
      os << (c ? "  " : "") << std::string(width - s.size(), ' ') << s;
    }
    os << "]\n";
  }
  return os.str();
}

ExactMatrix bracket(const ExactMatrix& a, const ExactMatrix& b) { return a * b - b * a; }

ExactMatrix product(std::span<const ExactMatrix> factors) {
  if (factors.empty()) throw std::invalid_argument("product: empty factor list");
  ExactMatrix out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) out = out * factors[i];
  return out;
}

nlohmann::json to_json(const CycloNum& x) {
  nlohmann::json arr = nlohmann::json::array();
  for (int k = 0; k < 4; ++k) {
    const mpq_class& q = x.coeff(k);
    if (!q.get_num().fits_slong_p() || !q.get_den().fits_slong_p())
      throw std::overflow_error("to_json: coefficient exceeds 64-bit range");
    arr.push_back(q.get_num().get_si());
    arr.push_back(q.get_den().get_si());
  }
  return arr;
}

CycloNum cyclo_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 8) throw std::invalid_argument("cyclo_from_json: need 8 integers");
  std::array<mpq_class, 4> c;
  for (std::size_t k = 0; k < 4; ++k) {
    long den = j[2 * k + 1].get<long>();
    if (den == 0) throw std::invalid_argument("cyclo_from_json: zero denominator");
    c[k] = mpq_class(j[2 * k].get<long>(), den);
  }
  return CycloNum(c[0], c[1], c[2], c[3]);
}

nlohmann::json to_json(const ExactMatrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [r, c, v] : m.triplets()) entries.push_back({r, c, to_json(v)});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

ExactMatrix matrix_from_json(const nlohmann::json& j) {
  std::vector<ExactMatrix::Triplet> t;
  for (const auto& e : j.at("entries"))
    t.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>(), cyclo_from_json(e.at(2)));
  return ExactMatrix::from_triplets(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>(),
                                    std::move(t));
}

}  // namespace weylnorm
