#include "weylnorm/chevalley.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "weylnorm/errors.hpp"

namespace weylnorm {

namespace {

IntVector add(const IntVector& x, const IntVector& y) {
  IntVector out(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) out[k] = x[k] + y[k];
  return out;
}

IntVector sub(const IntVector& x, const IntVector& y) {
  IntVector out(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) out[k] = x[k] - y[k];
  return out;
}

IntVector scale(const IntVector& x, int s) {
  IntVector out(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) out[k] = s * x[k];
  return out;
}

// Largest p with beta - p*alpha a root.
int string_below(const RootSystem& rs, const IntVector& alpha, const IntVector& beta) {
  int p = 0;
  while (rs.is_root(sub(beta, scale(alpha, p + 1)))) ++p;
  return p;
}

std::string vec_label(const IntVector& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
  os << "]";
  return os.str();
}

ExactMatrix diagonal_from_ints(const std::vector<int>& d) {
  std::vector<CycloNum> diag;
  diag.reserve(d.size());
  for (int x : d) diag.emplace_back(static_cast<long>(x));
  return ExactMatrix::diagonal(diag);
}

void fill_weights(Representation& rep) {
  rep.weights.assign(rep.dim, IntVector(static_cast<std::size_t>(rep.rank()), 0));
  for (int i = 0; i < rep.rank(); ++i) {
    const ExactMatrix& h = rep.h[static_cast<std::size_t>(i)];
    if (!h.is_diagonal() || !h.has_integer_entries() || !h.is_real())
      throw ConsistencyError("representation: h_" + std::to_string(i + 1) + " is not integral diagonal");
    for (std::size_t b = 0; b < rep.dim; ++b)
      rep.weights[b][static_cast<std::size_t>(i)] =
          static_cast<int>(h.at(b, b).coeff(0).get_num().get_si());
  }
}

void verify_or_throw(const Representation& rep) {
  for (const auto& m : rep.e)
    if (!m.is_real()) throw ConsistencyError("representation: non-real generator");
  for (const auto& m : rep.f)
    if (!m.is_real()) throw ConsistencyError("representation: non-real generator");
  auto failures = check_serre_relations(rep);
  if (!failures.empty())
    throw ConsistencyError("representation " + rep.describe() + ": " + failures.front());
}

}  // namespace

StructureConstants::StructureConstants(const RootSystem& rs) {
  const auto& roots = rs.roots();
  const std::size_t npos = rs.num_positive();
  const std::size_t total = roots.size();
  auto negate = [&](std::size_t idx) { return idx < npos ? idx + npos : idx - npos; };
  auto sum_index = [&](std::size_t a, std::size_t b) { return rs.index_of(add(roots[a], roots[b])); };
  auto norm = [&](std::size_t a) { return mpq_class(rs.inner(roots[a], roots[a])); };

  std::map<std::pair<std::size_t, std::size_t>, mpq_class> positive_table;
  std::function<mpq_class(std::size_t, std::size_t)> value = [&](std::size_t a, std::size_t b) -> mpq_class {
    if (!sum_index(a, b)) return 0;
    const bool pa = a < npos;
    const bool pb = b < npos;
    if (pa && pb) {
      auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
      auto it = positive_table.find(key);
      if (it == positive_table.end())
        throw ConsistencyError("structure_constants: lower-height value requested before definition");
      return a < b ? it->second : mpq_class(-it->second);
    }
    if (!pa && !pb) return -value(negate(a), negate(b));
    if (!pa) return -value(b, a);
    // a positive, b negative; c = -(a+b) closes the triangle a + b + c = 0.
    const std::size_t c = negate(*sum_index(a, b));
    if (c < npos) return norm(c) / norm(b) * value(c, a);
    return -(norm(c) / norm(a)) * value(negate(b), negate(c));
  };

  for (std::size_t xi = 0; xi < npos; ++xi) {
    if (height(roots[xi]) == 1) continue;
    std::vector<std::pair<std::size_t, std::size_t>> special;
    for (std::size_t r = 0; r < npos; ++r) {
      auto s = rs.index_of(sub(roots[xi], roots[r]));
      if (s && *s < npos && r < *s) special.emplace_back(r, *s);
    }
    if (special.empty()) throw ConsistencyError("structure_constants: positive root without decomposition");
    const auto [r1, s1] = special.front();
    const mpq_class extra(string_below(rs, roots[r1], roots[s1]) + 1);
    positive_table[{r1, s1}] = extra;
    for (std::size_t k = 1; k < special.size(); ++k) {
      const auto [r, s] = special[k];
      // Four-term identity on r1 + s1 - r - s = 0.
      mpq_class t1 = 0;
      mpq_class t2 = 0;
      if (auto d = rs.index_of(sub(roots[s1], roots[r])))
        t1 = value(s1, negate(r)) * value(r1, negate(s)) / norm(*d);
      if (auto d = rs.index_of(sub(roots[r1], roots[r])))
        t2 = value(negate(r), r1) * value(s1, negate(s)) / norm(*d);
      positive_table[{r, s}] = norm(xi) / extra * (t1 + t2);
    }
  }

  table_.assign(total, std::vector<int>(total, 0));
  for (std::size_t a = 0; a < total; ++a)
    for (std::size_t b = 0; b < total; ++b) {
      mpq_class v = value(a, b);
      if (v.get_den() != 1 || !v.get_num().fits_sint_p())
        throw ConsistencyError("structure_constants: non-integral constant");
      table_[a][b] = static_cast<int>(v.get_num().get_si());
    }
}

std::size_t StructureConstants::defined_pairs() const {
  std::size_t n = 0;
  for (const auto& row : table_)
    for (int v : row)
      if (v != 0) ++n;
  return n;
}

int StructureConstants::max_abs() const {
  int m = 0;
  for (const auto& row : table_)
    for (int v : row) m = std::max(m, std::abs(v));
  return m;
}

StructureConstants structure_constants(const RootSystem& rs) {
  StructureConstants n(rs);
  auto problems = check_structure_constants(rs, n);
  if (!problems.empty()) throw ConsistencyError("structure_constants: " + problems.front());
  return n;
}

std::vector<std::string> check_structure_constants(const RootSystem& rs,
                                                   const StructureConstants& n) {
  std::vector<std::string> out;
  const auto& roots = rs.roots();
  const std::size_t total = roots.size();
  const std::size_t npos = rs.num_positive();
  auto negate = [&](std::size_t idx) { return idx < npos ? idx + npos : idx - npos; };
  for (std::size_t a = 0; a < total; ++a)
    for (std::size_t b = 0; b < total; ++b) {
      const auto sum = rs.index_of(add(roots[a], roots[b]));
      const std::string where = vec_label(roots[a]) + "," + vec_label(roots[b]);
      if (!sum) {
        if (n(a, b) != 0) out.push_back("nonzero N on non-root sum " + where);
        continue;
      }
      if (n(a, b) != -n(b, a)) out.push_back("antisymmetry " + where);
      if (n(negate(a), negate(b)) != -n(a, b)) out.push_back("N(-a,-b) = -N(a,b) " + where);
      if (std::abs(n(a, b)) != string_below(rs, roots[a], roots[b]) + 1) out.push_back("|N| = p+1 " + where);
      const std::size_t c = negate(*sum);
      const long na = rs.inner(roots[a], roots[a]);
      const long nb = rs.inner(roots[b], roots[b]);
      const long nc = rs.inner(roots[c], roots[c]);
      // N(a,b)/(c,c) = N(b,c)/(a,a) = N(c,a)/(b,b)
      if (n(a, b) * na != n(b, c) * nc || n(a, b) * nb != n(c, a) * nc) out.push_back("cyclic rule " + where);
    }
  return out;
}

std::string to_string(RepKind k) {
  switch (k) {
    case RepKind::adjoint: return "adjoint";
    case RepKind::defining: return "defining";
    case RepKind::sl2: return "sl2";
  }
  return "?";
}

RepKind parse_rep_kind(const std::string& s) {
  if (s == "adjoint") return RepKind::adjoint;
  if (s == "defining") return RepKind::defining;
  if (s == "sl2") return RepKind::sl2;
  throw ConfigError("rep: expected adjoint, defining or sl2; got '" + s + "'");
}

std::vector<std::string> check_serre_relations(const Representation& rep) {
  std::vector<std::string> out;
  const int n = rep.rank();
  auto at = [](const std::vector<ExactMatrix>& v, int i) -> const ExactMatrix& { return v[static_cast<std::size_t>(i)]; };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const std::string idx = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
      const CycloNum aij(static_cast<long>(rep.cartan(i, j)));
      if (bracket(at(rep.h, i), at(rep.e, j)) != aij * at(rep.e, j)) out.push_back("[h_i,e_j] = a_ij e_j " + idx);
      if (bracket(at(rep.h, i), at(rep.f, j)) != -(aij * at(rep.f, j))) out.push_back("[h_i,f_j] = -a_ij f_j " + idx);
      const ExactMatrix ef = bracket(at(rep.e, i), at(rep.f, j));
      if (i == j ? ef != at(rep.h, j) : !ef.is_zero()) out.push_back("[e_i,f_j] = delta_ij h_j " + idx);
      if (!bracket(at(rep.h, i), at(rep.h, j)).is_zero()) out.push_back("[h_i,h_j] = 0 " + idx);
      if (i == j) continue;
      ExactMatrix xe = at(rep.e, j);
      ExactMatrix xf = at(rep.f, j);
      for (int k = 0; k < 1 - rep.cartan(i, j); ++k) {
        xe = bracket(at(rep.e, i), xe);
        xf = bracket(at(rep.f, i), xf);
      }
      if (!xe.is_zero()) out.push_back("ad_{e_i}^{1-a_ij} e_j = 0 " + idx);
      if (!xf.is_zero()) out.push_back("ad_{f_i}^{1-a_ij} f_j = 0 " + idx);
    }
  }
  return out;
}

Representation adjoint_rep(const RootSystem& rs) {
  const StructureConstants n = structure_constants(rs);
  const auto& roots = rs.roots();
  const std::size_t npos = rs.num_positive();
  const int r = rs.rank();
  const std::size_t nr = static_cast<std::size_t>(r);
  auto basis_of_root = [&](std::size_t idx) { return idx < npos ? idx : idx + nr; };
  auto basis_of_h = [&](int i) { return npos + static_cast<std::size_t>(i); };

  Representation rep;
  rep.kind = RepKind::adjoint;
  rep.cartan = rs.cartan();
  rep.dim = roots.size() + nr;
  rep.basis_labels.resize(rep.dim);
  for (std::size_t k = 0; k < roots.size(); ++k) rep.basis_labels[basis_of_root(k)] = "e" + vec_label(roots[k]);
  for (int i = 0; i < r; ++i) rep.basis_labels[basis_of_h(i)] = "h" + std::to_string(i + 1);

  for (int i = 0; i < r; ++i) {
    const std::size_t si = rs.simple_index(i);
    for (int sign : {1, -1}) {
      const std::size_t alpha = sign > 0 ? si : si + npos;
      std::vector<ExactMatrix::Triplet> t;
      for (int k = 0; k < r; ++k)  // [e_{+-a_i}, h_k] = -+a_ki e_{+-a_i}
        t.emplace_back(basis_of_root(alpha), basis_of_h(k), CycloNum(static_cast<long>(-sign * rs.cartan()(k, i))));
      for (std::size_t b = 0; b < roots.size(); ++b) {
        if (b == (alpha < npos ? alpha + npos : alpha - npos)) {
          t.emplace_back(basis_of_h(i), basis_of_root(b), CycloNum(static_cast<long>(sign)));
        } else if (auto s = rs.index_of(add(roots[alpha], roots[b]))) {
          t.emplace_back(basis_of_root(*s), basis_of_root(b), CycloNum(static_cast<long>(n(alpha, b))));
        }
      }
      (sign > 0 ? rep.e : rep.f).push_back(ExactMatrix::from_triplets(rep.dim, rep.dim, std::move(t)));
    }
    std::vector<int> diag(rep.dim, 0);
    for (std::size_t b = 0; b < roots.size(); ++b) diag[basis_of_root(b)] = rs.pairing(roots[b], i);
    rep.h.push_back(diagonal_from_ints(diag));
  }
  fill_weights(rep);
  verify_or_throw(rep);
  return rep;
}

Representation defining_rep(CartanType type, int rank) {
  const CartanMatrix cartan = build_cartan(type, rank);
  Representation rep;
  rep.kind = RepKind::defining;
  rep.cartan = cartan;
  auto unit = [](std::size_t d, std::size_t i, std::size_t j) {
    return ExactMatrix::from_triplets(d, d, {{i, j, CycloNum(1)}});
  };
  const std::size_t n = static_cast<std::size_t>(rank);
  if (type == CartanType::A) {
    rep.dim = n + 1;
    for (std::size_t i = 0; i < n; ++i) {
      rep.e.push_back(unit(rep.dim, i, i + 1));
      rep.f.push_back(unit(rep.dim, i + 1, i));
    }
    for (std::size_t b = 0; b < rep.dim; ++b) rep.basis_labels.push_back("v" + std::to_string(b + 1));
  } else if (type == CartanType::C) {
    // Basis v_1..v_n, v_{-n}..v_{-1}; v_{-k} sits at index 2n-k.
    rep.dim = 2 * n;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      ExactMatrix e = unit(rep.dim, i, i + 1) - unit(rep.dim, 2 * n - 2 - i, 2 * n - 1 - i);
      rep.f.push_back(e.transpose());
      rep.e.push_back(std::move(e));
    }
    rep.e.push_back(unit(rep.dim, n - 1, n));
    rep.f.push_back(unit(rep.dim, n, n - 1));
    for (std::size_t b = 0; b < n; ++b) rep.basis_labels.push_back("v" + std::to_string(b + 1));
    for (std::size_t b = n; b > 0; --b) rep.basis_labels.push_back("v-" + std::to_string(b));
  } else {
    throw ConfigError("rep: defining representation implemented for types A and C only");
  }
  for (std::size_t i = 0; i < n; ++i) rep.h.push_back(bracket(rep.e[i], rep.f[i]));
  fill_weights(rep);
  verify_or_throw(rep);
  return rep;
}

Representation sl2_rep() {
  Representation rep = defining_rep(CartanType::A, 1);
  rep.kind = RepKind::sl2;
  return rep;
}

Representation make_representation(CartanType type, int rank, RepKind kind) {
  switch (kind) {
    case RepKind::adjoint: return adjoint_rep(generate_roots(build_cartan(type, rank)));
    case RepKind::defining: return defining_rep(type, rank);
    case RepKind::sl2:
      if (type != CartanType::A || rank != 1) throw ConfigError("rep: sl2 requires --type A --rank 1");
      return sl2_rep();
  }
  throw ConfigError("rep: unknown kind");
}

ExactMatrix exp_nilpotent(const ExactMatrix& x, const CycloNum& t) {
  if (!x.is_square()) throw std::invalid_argument("exp_nilpotent: not square");
  const std::size_t n = x.rows();
  ExactMatrix result = ExactMatrix::identity(n);
  const ExactMatrix tx = x.scaled(t);
  ExactMatrix term = ExactMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    term = (term * tx).scaled(CycloNum::rational(1, static_cast<long>(k)));
    if (term.is_zero()) return result;
    result = result + term;
  }
  if ((x.pow(static_cast<unsigned>(n))).is_zero()) return result;
  throw std::invalid_argument("exp_nilpotent: matrix is not nilpotent");
}

ExactMatrix exp_ih_quarter(const Representation& rep, int i, long k) {
  IntVector c(static_cast<std::size_t>(rep.rank()), 0);
  c[static_cast<std::size_t>(i)] = 1;
  return exp_h_combination(rep, c, k);
}

ExactMatrix exp_h_combination(const Representation& rep, const IntVector& coeffs, long k) {
  std::vector<CycloNum> diag;
  diag.reserve(rep.dim);
  for (std::size_t b = 0; b < rep.dim; ++b) {
    long w = 0;
    for (int j = 0; j < rep.rank(); ++j)
      w += static_cast<long>(coeffs[static_cast<std::size_t>(j)]) * rep.weights[b][static_cast<std::size_t>(j)];
    diag.push_back(CycloNum::zeta_power(k * w));
  }
  return ExactMatrix::diagonal(diag);
}

ExactMatrix h_combination(const Representation& rep, const IntVector& coeffs) {
  ExactMatrix out = ExactMatrix::zero(rep.dim, rep.dim);
  for (int j = 0; j < rep.rank(); ++j)
    if (coeffs[static_cast<std::size_t>(j)] != 0)
      out = out + rep.h[static_cast<std::size_t>(j)].scaled(CycloNum(static_cast<long>(coeffs[static_cast<std::size_t>(j)])));
  return out;
}

ExactMatrix exp_semisimple_interp(const ExactMatrix& x, std::vector<int> spectrum, long k) {
  if (!x.is_square()) throw std::invalid_argument("exp_semisimple_interp: not square");
  std::sort(spectrum.begin(), spectrum.end());
  spectrum.erase(std::unique(spectrum.begin(), spectrum.end()), spectrum.end());
  if (spectrum.empty()) throw std::invalid_argument("exp_semisimple_interp: empty spectrum");
  const std::size_t n = x.rows();
  const ExactMatrix id = ExactMatrix::identity(n);
  std::vector<ExactMatrix> shifted;
  for (int m : spectrum) shifted.push_back(x - id.scaled(CycloNum(static_cast<long>(m))));
  if (!product(shifted).is_zero())
    throw std::invalid_argument("exp_semisimple_interp: spectrum does not annihilate the matrix");
  ExactMatrix result = ExactMatrix::zero(n, n);
  for (std::size_t a = 0; a < spectrum.size(); ++a) {
    ExactMatrix basis = id;
    long denom = 1;
    for (std::size_t b = 0; b < spectrum.size(); ++b) {
      if (a == b) continue;
      basis = basis * shifted[b];
      denom *= spectrum[a] - spectrum[b];
    }
    const CycloNum coeff = CycloNum::zeta_power(k * spectrum[a]) * CycloNum::rational(1, denom);
    result = result + basis.scaled(coeff);
  }
  return result;
}

std::vector<int> h_spectrum(const Representation& rep, int i) {
  std::set<int> s;
  for (const auto& w : rep.weights) s.insert(w[static_cast<std::size_t>(i)]);
  return {s.begin(), s.end()};
}

nlohmann::json to_json(const Representation& rep) {
  nlohmann::json gens = nlohmann::json::array();
  for (int i = 0; i < rep.rank(); ++i) {
    const auto u = static_cast<std::size_t>(i);
    gens.push_back({{"index", i + 1}, {"e", to_json(rep.e[u])}, {"f", to_json(rep.f[u])}, {"h", to_json(rep.h[u])}});
  }
  return {{"type", std::string(1, to_char(rep.cartan.type))},
          {"rank", rep.rank()},
          {"rep", rep.label()},
          {"dim", rep.dim},
          {"basis", rep.basis_labels},
          {"weights", rep.weights},
          {"generators", std::move(gens)}};
}

}  // namespace weylnorm
