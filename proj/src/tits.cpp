#include "weylnorm/tits.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "weylnorm/errors.hpp"
#include "weylnorm/parallel.hpp"

namespace weylnorm {
namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

ExactMatrix alternating(const ExactMatrix& a, const ExactMatrix& b, int length) {
  ExactMatrix out = a;
  for (int k = 1; k < length; ++k) out = out * (k % 2 ? b : a);
  return out;
}

bool is_pm_one(const CycloNum& d) { return d == CycloNum(1) || d == CycloNum(-1); }

// diag(prod_k p_k^{w_k}) separates every pair of distinct weights.
ExactMatrix generic_torus_element(const Representation& rep) {
  static constexpr long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  std::vector<CycloNum> diag;
  for (const auto& w : rep.weights) {
    mpq_class v = 1;
    for (std::size_t k = 0; k < w.size(); ++k) {
      mpz_class p = primes[k % std::size(primes)] + static_cast<long>(k / std::size(primes)) * 41;
      mpz_class num = 1;
      for (int e = 0; e < std::abs(w[k]); ++e) num *= p;
      v *= w[k] >= 0 ? mpq_class(num) : mpq_class(1, 1) / mpq_class(num);
    }
    diag.emplace_back(v);
  }
  return ExactMatrix::diagonal(diag);
}

std::vector<IntVector> distinct_weights(const Representation& rep) {
  std::set<IntVector> s(rep.weights.begin(), rep.weights.end());
  return {s.begin(), s.end()};
}

IntVector reflect_weight(const CartanMatrix& c, int i, const IntVector& w) {
  IntVector out = w;
  for (int k = 0; k < c.rank; ++k) out[idx(k)] -= w[idx(i)] * c(k, i);
  return out;
}

std::string render_h(const IntVector& coeffs) {
  std::string out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const int c = coeffs[k];
    if (c == 0) continue;
    out += out.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    if (std::abs(c) != 1) out += std::to_string(std::abs(c));
    out += "h_" + std::to_string(k + 1);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

ExactMatrix tits_lift(const Representation& rep, int i) {
  const auto& e = rep.e.at(idx(i));
  const auto& f = rep.f.at(idx(i));
  const ExactMatrix ef = exp_nilpotent(f);
  const ExactMatrix ee = exp_nilpotent(e, CycloNum(-1));
  const ExactMatrix first = ef * ee * ef;
  const ExactMatrix second = ee * ef * ee;
  if (first != second)
    throw ConsistencyError("tits_lift: the two product forms differ at node " + std::to_string(i + 1));
  return first;
}

TitsElements make_tits_elements(const Representation& rep) {
  TitsElements t;
  for (int i = 0; i < rep.rank(); ++i) {
    t.sdot.push_back(tits_lift(rep, i));
    const ExactMatrix ef = exp_nilpotent(rep.f[idx(i)], CycloNum(-1));
    t.sdot_inv.push_back(ef * exp_nilpotent(rep.e[idx(i)]) * ef);
    t.zeta.push_back(t.sdot.back() * t.sdot.back());
  }
  return t;
}

VerificationReport verify_tits_presentation(const Representation& rep, const TitsElements& t,
                                            unsigned threads) {
  const int n = rep.rank();
  const auto& c = rep.cartan;
  std::vector<CheckTask> tasks;
  for (int i = 0; i < n; ++i) {
    const auto u = idx(i);
    tasks.emplace_back([&, i, u] {
      return make_check("tits.sq", {i + 1}, t.zeta[u] == exp_ih_quarter(rep, i, 4));
    });
    tasks.emplace_back([&, i, u] {
      return make_check("tits.theta_sq", {i + 1}, (t.zeta[u] * t.zeta[u]).is_identity());
    });
    tasks.emplace_back([&, i, u] {
      return make_check("tits.inverse", {i + 1}, (t.sdot[u] * t.sdot_inv[u]).is_identity());
    });
    tasks.emplace_back([&, i, u] {
      return make_check("tits.order4", {i + 1}, t.sdot[u].pow(4).is_identity());
    });
    tasks.emplace_back([&, i, u] {
      return make_check("tits.det", {i + 1}, is_pm_one(t.sdot[u].determinant()));
    });
    if (rep.kind == RepKind::adjoint)
      tasks.emplace_back([&, i, u] {
        return make_check("tits.integral", {i + 1}, t.sdot[u].has_integer_entries());
      });
    tasks.emplace_back([&, i, u] {
      const ExactMatrix d = generic_torus_element(rep);
      return make_check("tits.torus", {i + 1}, (t.sdot[u] * d * t.sdot_inv[u]).is_diagonal());
    });
    tasks.emplace_back([&, i, u] {
      const auto weights = distinct_weights(rep);
      const auto perm = weight_permutation(rep, t.sdot[u]);
      bool ok = perm.size() == weights.size();
      for (std::size_t w = 0; ok && w < weights.size(); ++w)
        ok = weights[perm[w]] == reflect_weight(c, i, weights[w]);
      return make_check("tits.weight_map", {i + 1}, ok);
    });
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto u = idx(i), v = idx(j);
      if (i == j) {
        tasks.emplace_back([i] {
          return RelationCheck{"tits.braid", {i + 1, i + 1}, CheckStatus::skipped, "not a relation"};
        });
        continue;
      }
      if (i < j)
        tasks.emplace_back([&, i, j, u, v] {
          return make_check("tits.theta_commute", {i + 1, j + 1}, t.zeta[u] * t.zeta[v] == t.zeta[v] * t.zeta[u]);
        });
      tasks.emplace_back([&, i, j, u, v] {
        const ExactMatrix zp = t.zeta[u].pow(static_cast<unsigned>(-c(j, i)));
        return make_check("tits.ad", {i + 1, j + 1}, t.sdot[u] * t.zeta[v] == zp * t.zeta[v] * t.sdot[u]);
      });
      if (i < j)
        tasks.emplace_back([&, i, j, u, v] {
          const int m = coxeter_m(c, i, j);
          return make_check("tits.braid", {i + 1, j + 1},
                       alternating(t.sdot[u], t.sdot[v], m) == alternating(t.sdot[v], t.sdot[u], m),
                       "m=" + std::to_string(m));
        });
    }
  }
  return run_checks("tits", rep.describe(), tasks, threads);
}

VerificationReport verify_normalizer_action(const Representation& rep, const TitsElements& t,
                                            unsigned threads) {
  const int n = rep.rank();
  std::vector<CheckTask> tasks;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      tasks.emplace_back([&, i, k] {
        IntVector hk(idx(n), 0);
        hk[idx(k)] = 1;
        const IntVector image = weyl_reflect_cartan(rep.cartan, i, hk);
        const ExactMatrix lhs = t.sdot[idx(i)] * rep.h[idx(k)] * t.sdot_inv[idx(i)];
        const std::string note = "s_" + std::to_string(i + 1) + "(h_" + std::to_string(k + 1) + ") = " + render_h(image);
        return make_check("dtt.action", {i + 1, k + 1}, lhs == h_combination(rep, image), note);
      });
  return run_checks("normalizer", rep.describe(), tasks, threads);
}

VerificationReport verify_lift_identities(const Representation& rep, const TitsElements& t,
                                          unsigned threads) {
  std::vector<CheckTask> tasks;
  for (int i = 0; i < rep.rank(); ++i) {
    const auto u = idx(i);
    tasks.emplace_back([&, i, u] {
      const ExactMatrix ef = exp_nilpotent(rep.f[u]);
      const ExactMatrix ee = exp_nilpotent(rep.e[u], CycloNum(-1));
      return make_check("lift.product_forms", {i + 1}, ef * ee * ef == ee * ef * ee && t.sdot[u] == ef * ee * ef);
    });
    tasks.emplace_back([&, i, u] {
      const ExactMatrix x = exp_semisimple_interp(rep.e[u] + rep.f[u], h_spectrum(rep, i), 2);
      const ExactMatrix form3 = exp_ih_quarter(rep, i, 1) * x * exp_ih_quarter(rep, i, -1);
      return make_check("lift.quarter_conjugate", {i + 1}, t.sdot[u] == form3);
    });
    tasks.emplace_back([&, i, u] {
      return make_check("lift.square", {i + 1}, t.sdot[u] * t.sdot[u] == exp_ih_quarter(rep, i, 4));
    });
  }
  return run_checks("lift", rep.describe(), tasks, threads);
}

nlohmann::json FiniteGroupTable::to_json(bool with_matrices) const {
  nlohmann::json els = nlohmann::json::array();
  for (std::size_t k = 0; k < elements.size(); ++k) {
    nlohmann::json item = {{"word", words[k]}, {"flag", elements[k].flag ? 1 : 0}};
    if (with_matrices) item["linear"] = weylnorm::to_json(elements[k].linear);
    els.push_back(std::move(item));
  }
  return {{"status", status == EnumerationStatus::complete ? "complete" : "cap_exceeded"},
          {"order", elements.size()},
          {"elements", std::move(els)}};
}

FiniteGroupTable enumerate_group(const std::vector<GroupElement>& gens, std::size_t cap, unsigned threads) {
  if (gens.empty()) throw std::invalid_argument("enumerate_group: no generators");
  const std::size_t n = gens.front().dim();
  for (const auto& g : gens)
    if (g.dim() != n || !g.linear.is_square()) throw std::invalid_argument("enumerate_group: dimension mismatch");

  FiniteGroupTable table;
  std::unordered_map<GroupElement, std::size_t, GroupElementHash> seen;
  table.elements.push_back(GroupElement::identity(n));
  table.words.emplace_back();
  seen.emplace(table.elements.front(), 0);

  std::vector<std::size_t> frontier{0};
  while (!frontier.empty()) {
    // Products are computed in parallel; insertion is sequential in
    // (frontier position, generator) order so the result is schedule-free.
    std::vector<GroupElement> products(frontier.size() * gens.size());
    parallel_for(products.size(), threads, [&](std::size_t k) {
      products[k] = table.elements[frontier[k / gens.size()]] * gens[k % gens.size()];
    });
    std::vector<std::size_t> next;
    for (std::size_t k = 0; k < products.size(); ++k) {
      if (seen.count(products[k])) continue;
      if (table.elements.size() >= cap) {
        table.status = EnumerationStatus::cap_exceeded;
        return table;
      }
      auto word = table.words[frontier[k / gens.size()]];
      word.push_back(static_cast<int>(k % gens.size()));
      seen.emplace(products[k], table.elements.size());
      next.push_back(table.elements.size());
      table.elements.push_back(std::move(products[k]));
      table.words.push_back(std::move(word));
    }
    frontier = std::move(next);
  }
  return table;
}

FiniteGroupTable enumerate_group(const std::vector<ExactMatrix>& gens, std::size_t cap, unsigned threads) {
  std::vector<GroupElement> g;
  for (const auto& m : gens) g.push_back({m, false});
  return enumerate_group(g, cap, threads);
}

std::vector<std::size_t> weight_permutation(const Representation& rep, const ExactMatrix& g) {
  const auto weights = distinct_weights(rep);
  std::map<IntVector, std::size_t> pos;
  for (std::size_t k = 0; k < weights.size(); ++k) pos.emplace(weights[k], k);
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> perm(weights.size(), unset);
  for (std::size_t r = 0; r < g.rows(); ++r) {
    const std::size_t target = pos.at(rep.weights[r]);
    for (const auto& [col, value] : g.row(r)) {
      std::size_t& slot = perm[pos.at(rep.weights[col])];
      if (slot == unset) slot = target;
      else if (slot != target) return {};
    }
  }
  std::vector<bool> hit(weights.size(), false);
  for (auto p : perm) {
    if (p == unset || hit[p]) return {};
    hit[p] = true;
  }
  return perm;
}

std::size_t weyl_image_order(const Representation& rep, const FiniteGroupTable& table) {
  std::set<std::vector<std::size_t>> images;
  for (const auto& g : table.elements) {
    auto p = weight_permutation(rep, g.linear);
    if (p.empty()) throw ConsistencyError("weyl_image_order: element does not permute weight spaces");
    images.insert(std::move(p));
  }
  return images.size();
}

}  // namespace weylnorm
