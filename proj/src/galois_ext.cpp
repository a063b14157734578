#include "weylnorm/galois_ext.hpp"

#include <stdexcept>

#include "weylnorm/errors.hpp"

namespace weylnorm {

GroupElement GroupElement::inverse() const {
  const ExactMatrix inv = linear.inverse();
  return {flag ? inv.conj() : inv, flag};
}

std::size_t GroupElement::hash() const {
  std::size_t h = linear.hash();
  hash_combine(h, flag ? 0x51ULL : 0x17ULL);
  return h;
}

std::string GroupElement::to_string() const {
  return linear.to_string() + (flag ? "(gamma)\n" : "");
}

GroupElement gprod(const GroupElement& x, const GroupElement& y) {
  if (x.linear.cols() != y.linear.rows()) throw std::invalid_argument("gprod: dimension mismatch");
  return {x.flag ? x.linear * y.linear.conj() : x.linear * y.linear, x.flag != y.flag};
}

GroupElement gproduct(std::span<const GroupElement> word) {
  if (word.empty()) throw std::invalid_argument("gproduct: empty word");
  GroupElement out = word.front();
  for (std::size_t k = 1; k < word.size(); ++k) out = out * word[k];
  return out;
}

GroupElement gproduct(std::initializer_list<GroupElement> word) {
  return gproduct(std::span<const GroupElement>(word.begin(), word.size()));
}

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

GroupElement alternating(const GroupElement& a, const GroupElement& b, int length) {
  GroupElement out = a;
  for (int k = 1; k < length; ++k) out = out * (k % 2 ? b : a);
  return out;
}

bool all_equal(const std::vector<GroupElement>& xs) {
  for (std::size_t k = 1; k < xs.size(); ++k)
    if (xs[k] != xs.front()) return false;
  return true;
}

bool unitary(const ExactMatrix& a, const ExactMatrix& form) { return a.conj().transpose() * form * a == form; }

// Basis of the right null space of a dense rational matrix.
std::vector<std::vector<mpq_class>> null_space(std::vector<std::vector<mpq_class>> m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[row], m[p]);
    const mpq_class inv = 1 / m[row][c];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      const mpq_class f = m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  std::vector<std::vector<mpq_class>> basis;
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<mpq_class> v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

bool positive_definite(const ExactMatrix& h) {
  // Leading principal minors of each weight block; h is block diagonal.
  const std::size_t n = h.rows();
  std::size_t start = 0;
  while (start < n) {
    std::size_t end = start + 1;
    for (std::size_t r = start; r < end; ++r)
      for (const auto& [c, v] : h.row(r)) end = std::max(end, c + 1);
    for (std::size_t k = start + 1; k <= end; ++k) {
      std::vector<CycloNum> block;
      for (std::size_t r = start; r < k; ++r)
        for (std::size_t c = start; c < k; ++c) block.push_back(h.at(r, c));
      const CycloNum det = ExactMatrix::from_dense(k - start, k - start, block).determinant();
      if (!det.is_rational() || det.coeff(0) <= 0) return false;
    }
    start = end;
  }
  return true;
}

}  // namespace

ExactMatrix invariant_hermitian_form(const Representation& rep) {
  const std::size_t n = rep.dim;
  // Unknowns: H(a, b) for a, b of equal weight.
  std::vector<std::vector<long>> var(n, std::vector<long>(n, -1));
  std::vector<std::pair<std::size_t, std::size_t>> unknowns;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (rep.weights[a] == rep.weights[b]) {
        var[a][b] = static_cast<long>(unknowns.size());
        unknowns.emplace_back(a, b);
      }
  const std::size_t m = unknowns.size();
  std::vector<std::vector<mpq_class>> eqs;
  auto add_pair = [&](const ExactMatrix& x, const ExactMatrix& y) {
    // (x^T H)(a, b) - (H y)(a, b) = sum_c x(c, a) H(c, b) - sum_c H(a, c) y(c, b).
    const ExactMatrix xt = x.transpose();
    const ExactMatrix yt = y.transpose();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        std::vector<mpq_class> eq(m, 0);
        bool any = false;
        for (const auto& [c, v] : xt.row(a))
          if (var[c][b] >= 0) {
            eq[static_cast<std::size_t>(var[c][b])] += v.coeff(0);
            any = true;
          }
        for (const auto& [c, v] : yt.row(b))
          if (var[a][c] >= 0) {
            eq[static_cast<std::size_t>(var[a][c])] -= v.coeff(0);
            any = true;
          }
        if (any) eqs.push_back(std::move(eq));
      }
  };
  for (int i = 0; i < rep.rank(); ++i) {
    add_pair(rep.e[static_cast<std::size_t>(i)], rep.f[static_cast<std::size_t>(i)]);
    add_pair(rep.f[static_cast<std::size_t>(i)], rep.e[static_cast<std::size_t>(i)]);
  }
  // Hermitian: H(a, b) = H(b, a) for a rational form.
  for (std::size_t k = 0; k < m; ++k) {
    const auto [a, b] = unknowns[k];
    if (a < b) {
      std::vector<mpq_class> eq(m, 0);
      eq[k] = 1;
      eq[static_cast<std::size_t>(var[b][a])] = -1;
      eqs.push_back(std::move(eq));
    }
  }
  const auto basis = null_space(std::move(eqs), m);
  if (basis.size() != 1) throw ConsistencyError("invariant_hermitian_form: solution space has dimension " + std::to_string(basis.size()));
  const mpq_class scale = basis[0][static_cast<std::size_t>(var[0][0])];
  if (scale == 0) throw ConsistencyError("invariant_hermitian_form: degenerate form");
  std::vector<ExactMatrix::Triplet> trips;
  for (std::size_t k = 0; k < m; ++k)
    trips.emplace_back(unknowns[k].first, unknowns[k].second, CycloNum(mpq_class(basis[0][k] / scale)));
  ExactMatrix h = ExactMatrix::from_triplets(n, n, std::move(trips));
  if (!positive_definite(h)) throw ConsistencyError("invariant_hermitian_form: form is not positive definite");
  return h;
}

UnitaryLifts make_unitary_lifts(const Representation& rep, const TitsElements& t) {
  UnitaryLifts u;
  for (int i = 0; i < rep.rank(); ++i) {
    const auto& s = t.sdot.at(idx(i));
    const ExactMatrix plus = exp_ih_quarter(rep, i, 1);
    const ExactMatrix minus = exp_ih_quarter(rep, i, -1);
    const ExactMatrix a = minus * s * plus;
    const ExactMatrix abar = plus * s * minus;
    const auto spec = h_spectrum(rep, i);
    const ExactMatrix x = rep.e[idx(i)] + rep.f[idx(i)];
    if (a != exp_semisimple_interp(x, spec, 2) || abar != exp_semisimple_interp(x, spec, -2))
      throw ConsistencyError("make_unitary_lifts: computation paths disagree at node " + std::to_string(i + 1));
    u.sigma.push_back({a, true});
    u.sigma_bar.push_back({abar, true});
    u.xi.push_back({exp_ih_quarter(rep, i, 4), false});
  }
  return u;
}

VerificationReport verify_wu_presentation(const Representation& rep, const UnitaryLifts& u,
                                          unsigned threads) {
  const int n = rep.rank();
  const auto& c = rep.cartan;
  const GroupElement one = GroupElement::identity(rep.dim);
  const auto& s = u.sigma;
  const auto& sb = u.sigma_bar;
  const ExactMatrix form = invariant_hermitian_form(rep);
  const std::string form_note = form.is_identity() ? "standard form" : "invariant form";
  std::vector<CheckTask> tasks;
  for (int i = 0; i < n; ++i) {
    const auto a = idx(i);
    tasks.emplace_back([&, i, a] { return make_check("wu.sigma_sq", {i + 1}, (u.sigma[a] * u.sigma[a]).is_identity()); });
    tasks.emplace_back([&, i, a] {
      return make_check("wu.sigma_bar_sq", {i + 1}, (u.sigma_bar[a] * u.sigma_bar[a]).is_identity());
    });
    tasks.emplace_back([&, i, a] {
      return make_check("wu.eta", {i + 1},
                        u.sigma[a] * u.sigma_bar[a] == u.xi[a] && u.sigma_bar[a] * u.sigma[a] == u.xi[a]);
    });
    tasks.emplace_back([&, i, a] { return make_check("wu.cons1_sq", {i + 1}, (u.xi[a] * u.xi[a]).is_identity()); });
    tasks.emplace_back([&, i, a] {
      return make_check("wu.unitary", {i + 1}, unitary(s[a].linear, form) && unitary(sb[a].linear, form), form_note);
    });
    tasks.emplace_back([&, i, a] {
      return make_check("wu.flags", {i + 1}, u.sigma[a].flag && u.sigma_bar[a].flag && !u.xi[a].flag);
    });
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const auto a = idx(i), b = idx(j);
      const int aij = c(i, j), aji = c(j, i);
      const int m = coxeter_m(c, i, j);
      const std::vector<int> ij{i + 1, j + 1};
      tasks.emplace_back([&, a, b, aji, ij] {
        GroupElement eta_pow = one;
        for (int k = 0; k < -aji; ++k) eta_pow = eta_pow * u.xi[a];
        const bool s = u.sigma[a] * u.xi[b] == u.xi[b] * eta_pow * u.sigma[a];
        const bool sb = u.sigma_bar[a] * u.xi[b] == u.xi[b] * eta_pow * u.sigma_bar[a];
        return make_check("wu.eta_conj", ij, s && sb, aji == 0 ? "a=0 case via the completion lemma" : "");
      });
      tasks.emplace_back([&, a, b, m, ij] {
        return make_check("wu.mrel", ij, alternating(u.sigma[a], u.sigma[b], m) == alternating(u.sigma_bar[b], u.sigma_bar[a], m),
                          "m=" + std::to_string(m));
      });
      if (i < j)
        tasks.emplace_back([&, a, b, ij] {
          return make_check("wu.cons1", ij, u.xi[a] * u.xi[b] == u.xi[b] * u.xi[a]);
        });
      if (aij == 0)
        tasks.emplace_back([&, a, b, ij] {
          const GroupElement eta_j = u.sigma[b] * u.sigma_bar[b];
          return make_check("wu.cons3", ij,
                            u.sigma[a] * eta_j == eta_j * u.sigma[a] && u.sigma_bar[a] * eta_j == eta_j * u.sigma_bar[a]);
        });
      if (aij == -1 || aij == -3) {
        tasks.emplace_back([&, a, b, ij] {
          return make_check("wu.tripl", ij,
                            gproduct({u.sigma_bar[a], u.sigma_bar[b], u.sigma_bar[a]}) ==
                                gproduct({u.sigma[a], u.sigma[b], u.sigma[a]}));
        });
        if (m == 4)
          tasks.emplace_back([ij] {
            return RelationCheck{"wu.lll2", ij, CheckStatus::skipped,
                                 "m=4: alternating words of even length do not satisfy this identity"};
          });
        else
          tasks.emplace_back([&, a, b, m, ij] {
            const GroupElement w = alternating(u.sigma[a], u.sigma[b], m);
            return make_check("wu.lll2", ij,
                              w == alternating(u.sigma_bar[a], u.sigma_bar[b], m) &&
                                  w == alternating(u.sigma[b], u.sigma[a], m),
                              "m=" + std::to_string(m));
          });
      }
      if (aij == 0 && i < j)
        tasks.emplace_back([&, a, b, ij] {
          return make_check("wu.cor_a0", ij,
                            u.sigma[a] * u.sigma[b] == u.sigma_bar[b] * u.sigma_bar[a] &&
                                u.sigma[b] * u.sigma[a] == u.sigma_bar[a] * u.sigma_bar[b]);
        });
      if (aij == -1 && aji == -1 && i < j)
        tasks.emplace_back([&, a, b, ij] {
          return make_check("wu.cor_a1", ij,
                            all_equal({gproduct({s[b], s[a], s[b]}), gproduct({sb[b], sb[a], sb[b]}),
                                       gproduct({s[a], s[b], s[a]}), gproduct({sb[a], sb[b], sb[a]})}));
        });
      if (aji == -2)
        tasks.emplace_back([&, a, b, ij] {
          return make_check("wu.cor_b2", ij,
                            all_equal({gproduct({s[a], s[b], s[a], s[b]}), gproduct({s[a], sb[b], s[a], sb[b]}),
                                       gproduct({sb[b], sb[a], sb[b], sb[a]}), gproduct({s[b], sb[a], s[b], sb[a]})}));
        });
      if (aji == -3)
        tasks.emplace_back([&, a, b, ij] {
          return make_check(
              "wu.cor_g2", ij,
              all_equal({gproduct({s[a], s[b], s[a], s[b], s[a], s[b]}), gproduct({sb[a], sb[b], sb[a], s[b], s[a], s[b]}),
                         gproduct({sb[a], sb[b], sb[a], sb[b], sb[a], sb[b]}),
                         gproduct({sb[b], sb[a], sb[b], sb[a], sb[b], sb[a]}),
                         gproduct({sb[b], sb[a], sb[b], s[a], s[b], s[a]}), gproduct({s[b], s[a], s[b], s[a], s[b], s[a]})}));
        });
    }
  }
  return run_checks("wu", rep.describe(), tasks, threads);
}

VerificationReport verify_section6_lemmas(const Representation& rep, const UnitaryLifts& u,
                                          unsigned threads) {
  const int n = rep.rank();
  const auto& c = rep.cartan;
  const GroupElement g = GroupElement::gamma(rep.dim);
  const auto& s = u.sigma;
  std::vector<CheckTask> tasks;
  for (int i = 0; i < n; ++i) {
    const auto a = idx(i);
    tasks.emplace_back([&, i, a] { return make_check("lemma.sk", {i + 1}, (u.sigma[a] * u.sigma[a]).is_identity()); });
    tasks.emplace_back([&, i] { return make_check("lemma.compact", {i + 1}, exp_ih_quarter(rep, i, 8).is_identity()); });
    tasks.emplace_back([&, i, a] {
      return make_check("lemma.r2", {i + 1}, gproduct({g, u.sigma[a], g}) == u.xi[a] * u.sigma[a]);
    });
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const auto a = idx(i), b = idx(j);
      const int aij = c(i, j), aji = c(j, i);
      const std::vector<int> ij{i + 1, j + 1};
      if (aij == 0) {
        tasks.emplace_back([&, a, b, ij] {
          return make_check("lemma.sk1", ij, s[a] * s[b] == gproduct({g, s[b], s[a], g}));
        });
        tasks.emplace_back([&, a, b, ij] {
          IntVector sum(idx(n), 0);
          sum[a] = sum[b] = 1;
          const GroupElement e{exp_h_combination(rep, sum, 4), false};
          return make_check("lemma.r1", ij, s[a] * s[b] == e * s[b] * s[a] && s[a] * s[b] == s[b] * s[a] * e);
        });
        tasks.emplace_back([&, a, b, ij] {
          IntVector sum(idx(n), 0);
          sum[a] = sum[b] = 1;
          const GroupElement e{exp_h_combination(rep, sum, 4), false};
          return make_check("lemma.r2_pair", ij, gproduct({g, s[a], s[b], g}) == e * s[a] * s[b]);
        });
      }
      if (aij == -1 && aji == -1)
        tasks.emplace_back([&, a, b, ij] {
          return make_check("lemma.triple", ij, gproduct({s[a], s[b], s[a]}) == gproduct({g, s[b], s[a], s[b], g}));
        });
      if (aji == -2)
        tasks.emplace_back([&, a, b, ij] {
          return make_check("lemma.fourmove", ij,
                            gproduct({s[a], s[b], s[a], s[b]}) == gproduct({g, s[b], s[a], s[b], s[a], g}));
        });
      if (aji == -3)
        tasks.emplace_back([&, a, b, ij] {
          return make_check("lemma.sixmove", ij,
                            gproduct({s[a], s[b], s[a], s[b], s[a], s[b]}) ==
                                gproduct({g, s[b], s[a], s[b], s[a], s[b], s[a], g}));
        });
    }
  }
  return run_checks("lemma", rep.describe(), tasks, threads);
}

VerificationReport verify_m_intersection(const Representation& rep, const TitsElements& t,
                                         const UnitaryLifts& u, unsigned threads) {
  std::vector<CheckTask> tasks;
  for (int i = 0; i < rep.rank(); ++i) {
    const auto a = idx(i);
    tasks.emplace_back([&, i, a] { return make_check("m.zeta_xi", {i + 1}, t.zeta[a] == u.xi[a].linear && !u.xi[a].flag); });
    tasks.emplace_back([&, i, a] { return make_check("m.real", {i + 1}, t.zeta[a].is_real()); });
    tasks.emplace_back([&, i, a] { return make_check("m.diagonal", {i + 1}, t.zeta[a].is_diagonal()); });
    tasks.emplace_back([&, i, a] { return make_check("m.order2", {i + 1}, (u.xi[a] * u.xi[a]).is_identity()); });
  }
  return run_checks("m", rep.describe(), tasks, threads);
}

VerificationReport verify_extension_quotient(const Representation& rep, const UnitaryLifts& u,
                                             std::size_t cap, unsigned threads) {
  VerificationReport report{"quotient", rep.describe(), {}};
  const auto w = weyl_group_order(RootSystem(rep.cartan));
  const std::uint64_t bound = (std::uint64_t{1} << rep.rank()) * w;
  if (bound > cap) {
    report.skip("quotient.order", {}, "estimated order " + std::to_string(bound) + " exceeds cap");
    report.skip("quotient.surjects", {}, "estimated order " + std::to_string(bound) + " exceeds cap");
    return report;
  }
  std::vector<GroupElement> gens = u.sigma;
  gens.insert(gens.end(), u.sigma_bar.begin(), u.sigma_bar.end());
  const auto image = enumerate_group(gens, cap, threads);
  const auto kernel = enumerate_group(u.xi, cap, threads);
  const std::size_t weyl = weyl_image_order(rep, image);
  report.add("quotient.surjects", {}, weyl == w,
             "image in W has order " + std::to_string(weyl) + " of " + std::to_string(w));
  report.add("quotient.order", {}, image.order() == kernel.order() * w,
             "order " + std::to_string(image.order()) + " = " + std::to_string(kernel.order()) + " * " + std::to_string(w));
  for (const auto& x : kernel.elements)
    if (!x.linear.is_diagonal() || !(x * x).is_identity()) {
      report.add("quotient.kernel_exponent2", {}, false);
      return report;
    }
  report.add("quotient.kernel_exponent2", {}, true, "kernel order " + std::to_string(kernel.order()));
  return report;
}

}  // namespace weylnorm
