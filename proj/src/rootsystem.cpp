#include "weylnorm/rootsystem.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

#include "weylnorm/errors.hpp"

namespace weylnorm {

namespace {

constexpr std::size_t kMaxRoots = 1U << 14;

void link(IntMatrix& a, int i, int j, int aij, int aji) {
  a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = aij;
  a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = aji;
}

IntVector unit(int n, int i) {
  IntVector v(static_cast<std::size_t>(n), 0);
  v[static_cast<std::size_t>(i)] = 1;
  return v;
}

IntVector negated(IntVector v) {
  for (int& x : v) x = -x;
  return v;
}

IntVector compute_symmetrizer(const IntMatrix& a) {
  const std::size_t n = a.size();
  // d_i a_ij = d_j a_ji; propagate rationals along the (connected) diagram.
  std::vector<long> num(n, 0);
  std::vector<long> den(n, 1);
  num[0] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && a[i][j] != 0 && num[i] != 0 && num[j] == 0) {
          num[j] = num[i] * a[i][j];
          den[j] = den[i] * a[j][i];
          if (den[j] < 0) {
            num[j] = -num[j];
            den[j] = -den[j];
          }
          long g = std::gcd(num[j], den[j]);
          num[j] /= g;
          den[j] /= g;
          changed = true;
        }
  }
  long l = 1;
  for (std::size_t i = 0; i < n; ++i) l = std::lcm(l, den[i]);
  IntVector d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = static_cast<int>(num[i] * (l / den[i]));
  int g = 0;
  for (int x : d) g = std::gcd(g, x);
  for (int& x : d) x /= g;
  return d;
}

std::uint64_t parabolic_order(const CartanMatrix& c, std::vector<int> nodes) {
  if (nodes.empty()) return 1;
  const int j = nodes.back();
  const std::size_t n = static_cast<std::size_t>(c.rank);
  // Orbit of the fundamental weight w_j under the parabolic subgroup on `nodes`;
  // its stabilizer is the parabolic subgroup on nodes \ {j}.
  IntVector start(n, 0);
  start[static_cast<std::size_t>(j)] = 1;
  std::set<IntVector> seen{start};
  std::deque<IntVector> queue{start};
  while (!queue.empty()) {
    IntVector lam = std::move(queue.front());
    queue.pop_front();
    for (int i : nodes) {
      const int li = lam[static_cast<std::size_t>(i)];
      if (li == 0) continue;
      IntVector next = lam;
      for (std::size_t k = 0; k < n; ++k) next[k] -= li * c.a[k][static_cast<std::size_t>(i)];
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  nodes.pop_back();
  return seen.size() * parabolic_order(c, std::move(nodes));
}

}  // namespace

CartanType parse_cartan_type(const std::string& s) {
  if (s.size() == 1) {
    char ch = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    if (ch >= 'A' && ch <= 'G') return static_cast<CartanType>(ch);
  }
  throw ConfigError("type: expected one of A, B, C, D, E, F, G; got '" + s + "'");
}

char to_char(CartanType t) { return static_cast<char>(t); }

CartanMatrix build_cartan(CartanType type, int rank) {
  const std::string where = std::string("type ") + to_char(type) + " rank " + std::to_string(rank);
  bool ok = false;
  switch (type) {
    case CartanType::A: ok = rank >= 1; break;
    case CartanType::B:
    case CartanType::C: ok = rank >= 2; break;
    case CartanType::D: ok = rank >= 4; break;
    case CartanType::E: ok = rank >= 6 && rank <= 8; break;
    case CartanType::F: ok = rank == 4; break;
    case CartanType::G: ok = rank == 2; break;
  }
  if (!ok) throw ConfigError("rank: invalid rank for " + where);

  CartanMatrix c{type, rank, IntMatrix(static_cast<std::size_t>(rank), IntVector(static_cast<std::size_t>(rank), 0))};
  for (int i = 0; i < rank; ++i) c.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
  const int n = rank;
  switch (type) {
    case CartanType::A:
      for (int i = 0; i + 1 < n; ++i) link(c.a, i, i + 1, -1, -1);
      break;
    case CartanType::B:
      for (int i = 0; i + 2 < n; ++i) link(c.a, i, i + 1, -1, -1);
      link(c.a, n - 2, n - 1, -1, -2);  // alpha_n short
      break;
    case CartanType::C:
      for (int i = 0; i + 2 < n; ++i) link(c.a, i, i + 1, -1, -1);
      link(c.a, n - 2, n - 1, -2, -1);  // alpha_n long
      break;
    case CartanType::D:
      for (int i = 0; i + 2 < n; ++i) link(c.a, i, i + 1, -1, -1);
      link(c.a, n - 3, n - 1, -1, -1);
      break;
    case CartanType::E:
      link(c.a, 0, 2, -1, -1);
      link(c.a, 1, 3, -1, -1);
      for (int i = 2; i + 1 < n; ++i) link(c.a, i, i + 1, -1, -1);
      break;
    case CartanType::F:
      link(c.a, 0, 1, -1, -1);
      link(c.a, 1, 2, -1, -2);  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      link(c.a, 2, 3, -1, -1);
      break;
    case CartanType::G:
      link(c.a, 0, 1, -1, -3);
      break;
  }
  return c;
}

bool satisfies_cartan_axioms(const IntMatrix& a) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n || a[i][i] != 2) return false;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a[i][j] > 0) return false;
      if ((a[i][j] == 0) != (a[j][i] == 0)) return false;
      const int p = a[i][j] * a[j][i];
      if (p < 0 || p > 3) return false;
    }
  }
  return true;
}

int coxeter_m(const CartanMatrix& c, int i, int j) {
  if (i == j) throw std::invalid_argument("coxeter_m: requires i != j");
  switch (c(i, j) * c(j, i)) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: throw std::invalid_argument("coxeter_m: product outside {0,1,2,3}");
  }
}

IntVector weyl_reflect_cartan(const CartanMatrix& c, int i, const IntVector& h) {
  IntVector out = h;
  int delta = 0;
  for (int k = 0; k < c.rank; ++k) delta += h[static_cast<std::size_t>(k)] * c(k, i);
  out[static_cast<std::size_t>(i)] -= delta;
  return out;
}

int height(const IntVector& root) { return std::accumulate(root.begin(), root.end(), 0); }

RootSystem::RootSystem(CartanMatrix cartan) : cartan_(std::move(cartan)) {
  if (!satisfies_cartan_axioms(cartan_.a)) throw ConfigError("cartan: matrix violates Cartan axioms");
  const int n = cartan_.rank;
  std::set<IntVector> found;
  std::deque<IntVector> queue;
  for (int i = 0; i < n; ++i) {
    found.insert(unit(n, i));
    queue.push_back(unit(n, i));
  }
  while (!queue.empty()) {
    IntVector r = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      IntVector s = reflect(i, r);
      if (found.insert(s).second) {
        if (found.size() > kMaxRoots) throw ConfigError("roots: closure did not terminate (not of finite type)");
        queue.push_back(std::move(s));
      }
    }
  }
  std::vector<IntVector> pos;
  for (const auto& r : found)
    if (height(r) > 0) pos.push_back(r);
  std::sort(pos.begin(), pos.end(), [](const IntVector& x, const IntVector& y) {
    const int hx = height(x);
    const int hy = height(y);
    return hx != hy ? hx < hy : x < y;
  });
  if (pos.size() * 2 != found.size()) throw ConsistencyError("roots: not split into +/- halves");
  roots_ = pos;
  for (const auto& r : pos) roots_.push_back(negated(r));
  for (std::size_t k = 0; k < roots_.size(); ++k) index_.emplace(roots_[k], k);
  for (int i = 0; i < n; ++i) {
    std::vector<std::size_t> perm(roots_.size());
    for (std::size_t k = 0; k < roots_.size(); ++k) perm[k] = *index_of(reflect(i, roots_[k]));
    reflection_perms_.push_back(std::move(perm));
  }
  symmetrizer_ = compute_symmetrizer(cartan_.a);
}

std::optional<std::size_t> RootSystem::index_of(const IntVector& root) const {
  auto it = index_.find(root);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t RootSystem::simple_index(int i) const { return *index_of(unit(rank(), i)); }

int RootSystem::pairing(const IntVector& alpha, int i) const {
  int s = 0;
  for (int j = 0; j < rank(); ++j) s += alpha[static_cast<std::size_t>(j)] * cartan_(i, j);
  return s;
}

IntVector RootSystem::weight(const IntVector& alpha) const {
  IntVector w(static_cast<std::size_t>(rank()));
  for (int i = 0; i < rank(); ++i) w[static_cast<std::size_t>(i)] = pairing(alpha, i);
  return w;
}

IntVector RootSystem::reflect(int i, const IntVector& alpha) const {
  IntVector out = alpha;
  out[static_cast<std::size_t>(i)] -= pairing(alpha, i);
  return out;
}

long RootSystem::inner(const IntVector& x, const IntVector& y) const {
  long s = 0;
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j)
      s += static_cast<long>(x[static_cast<std::size_t>(i)]) * y[static_cast<std::size_t>(j)] *
           cartan_(i, j) * symmetrizer_[static_cast<std::size_t>(i)];
  return s;
}

IntVector RootSystem::coroot(const IntVector& alpha) const {
  const long norm = inner(alpha, alpha);
  IntVector out(static_cast<std::size_t>(rank()));
  for (int i = 0; i < rank(); ++i) {
    const long v = 2L * alpha[static_cast<std::size_t>(i)] * symmetrizer_[static_cast<std::size_t>(i)];
    if (v % norm != 0) throw ConsistencyError("coroot: non-integral coefficient");
    out[static_cast<std::size_t>(i)] = static_cast<int>(v / norm);
  }
  return out;
}

RootSystem generate_roots(const CartanMatrix& c) { return RootSystem(c); }

std::uint64_t weyl_group_order(const RootSystem& rs, std::uint64_t cap) {
  std::vector<int> nodes(static_cast<std::size_t>(rs.rank()));
  std::iota(nodes.begin(), nodes.end(), 0);
  const std::uint64_t order = parabolic_order(rs.cartan(), nodes);
  if (order > cap) throw CapExceeded("weyl_group_order: |W| exceeds cap");
  return order;
}

std::vector<std::vector<std::size_t>> weyl_group_permutations(const RootSystem& rs,
                                                              std::uint64_t cap) {
  std::vector<std::size_t> id(rs.roots().size());
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<std::size_t>> elements{id};
  std::set<std::vector<std::size_t>> seen{id};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (int i = 0; i < rs.rank(); ++i) {
      const auto& s = rs.reflection_permutation(i);
      std::vector<std::size_t> next(id.size());
      for (std::size_t k = 0; k < id.size(); ++k) next[k] = s[elements[head][k]];
      if (seen.insert(next).second) {
        if (elements.size() >= cap) throw CapExceeded("weyl_group_permutations: |W| exceeds cap");
        elements.push_back(std::move(next));
      }
    }
  }
  return elements;
}

nlohmann::json roots_summary_json(const RootSystem& rs) {
  return {{"type", std::string(1, to_char(rs.cartan().type))},
          {"rank", rs.rank()},
          {"cartan", rs.cartan().a},
          {"num_roots", rs.roots().size()},
          {"weyl_order", weyl_group_order(rs)}};
}

}  // namespace weylnorm
