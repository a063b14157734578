#include "weylnorm/splitting.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>

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

// Coordinates of v in an echelon basis; throws if v is not in the lattice.
std::vector<long> coordinates(const std::vector<IntVector>& basis, const IntVector& v) {
  std::vector<long> rest(v.begin(), v.end());
  std::vector<long> x;
  for (const auto& b : basis) {
    const auto p = static_cast<std::size_t>(std::find_if(b.begin(), b.end(), [](int c) { return c != 0; }) - b.begin());
    if (rest[p] % b[p] != 0) throw ConsistencyError("coordinates: vector outside the lattice");
    const long c = rest[p] / b[p];
    for (std::size_t k = 0; k < rest.size(); ++k) rest[k] -= c * b[k];
    x.push_back(c);
  }
  if (std::any_of(rest.begin(), rest.end(), [](long r) { return r != 0; }))
    throw ConsistencyError("coordinates: vector outside the lattice");
  return x;
}

std::uint64_t saturating_pow(std::uint64_t base, int exp, std::uint64_t limit) {
  std::uint64_t out = 1;
  for (int k = 0; k < exp; ++k) {
    if (base != 0 && out > limit / base) return limit + 1;
    out *= base;
  }
  return out;
}

struct Search {
  const CartanMatrix& cartan;
  // candidates[i] = the t-indices k with (sdot_i t_k)^2 = 1, and their products.
  std::vector<std::vector<std::size_t>> candidates;
  std::vector<std::vector<ExactMatrix>> lifts;

  // Depth-first scan; `chosen` holds positions into candidates.
  bool extend(std::vector<std::size_t>& chosen, std::uint64_t& checks) const {
    const std::size_t i = chosen.size();
    if (i == candidates.size()) return true;
    for (std::size_t p = 0; p < candidates[i].size(); ++p) {
      bool ok = true;
      for (std::size_t j = 0; ok && j < i; ++j) {
        const int m = coxeter_m(cartan, static_cast<int>(j), static_cast<int>(i));
        const ExactMatrix& a = lifts[j][chosen[j]];
        const ExactMatrix& b = lifts[i][p];
        ++checks;
        ok = alternating(a, b, m) == alternating(b, a, m);
      }
      if (!ok) continue;
      chosen.push_back(p);
      if (extend(chosen, checks)) return true;
      chosen.pop_back();
    }
    return false;
  }
};

}  // namespace

std::vector<IntVector> lattice_basis(const std::vector<IntVector>& vectors) {
  if (vectors.empty()) return {};
  std::vector<std::vector<long>> rows;
  for (const auto& v : vectors) rows.emplace_back(v.begin(), v.end());
  const std::size_t cols = rows.front().size();
  std::size_t top = 0;
  for (std::size_t c = 0; c < cols && top < rows.size(); ++c) {
    // Euclid on column c among rows top.. until one nonzero remains.
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t r = top; r < rows.size(); ++r)
        if (rows[r][c] != 0 && (!best || std::labs(rows[r][c]) < std::labs(rows[*best][c]))) best = r;
      if (!best) break;
      std::swap(rows[top], rows[*best]);
      bool reduced = true;
      for (std::size_t r = top + 1; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        const long q = rows[r][c] / rows[top][c];
        for (std::size_t k = 0; k < cols; ++k) rows[r][k] -= q * rows[top][k];
        if (rows[r][c] != 0) reduced = false;
      }
      if (reduced) break;
    }
    if (top < rows.size() && rows[top][c] != 0) {
      if (rows[top][c] < 0)
        for (auto& x : rows[top]) x = -x;
      for (std::size_t r = 0; r < top; ++r) {
        const long q = rows[r][c] >= 0 ? rows[r][c] / rows[top][c] : -((-rows[r][c] + rows[top][c] - 1) / rows[top][c]);
        for (std::size_t k = 0; k < cols; ++k) rows[r][k] -= q * rows[top][k];
      }
      ++top;
    }
  }
  std::vector<IntVector> basis;
  for (std::size_t r = 0; r < top; ++r) basis.emplace_back(rows[r].begin(), rows[r].end());
  return basis;
}

TorusTwoTorsion torus_two_torsion(const Representation& rep) {
  TorusTwoTorsion t;
  t.lattice_basis = lattice_basis(rep.weights);
  const std::size_t r = t.lattice_basis.size();
  std::vector<std::vector<long>> coords;
  for (const auto& w : rep.weights) coords.push_back(coordinates(t.lattice_basis, w));
  for (std::size_t code = 0; code < (std::size_t{1} << r); ++code) {
    std::vector<int> s(r);
    for (std::size_t k = 0; k < r; ++k) s[k] = static_cast<int>((code >> (r - 1 - k)) & 1U);
    std::vector<CycloNum> diag;
    for (const auto& x : coords) {
      long parity = 0;
      for (std::size_t k = 0; k < r; ++k) parity += x[k] * s[k];
      diag.emplace_back(parity % 2 == 0 ? 1 : -1);
    }
    t.elements.push_back(ExactMatrix::diagonal(diag));
    if (std::count(s.begin(), s.end(), 1) == 1) t.generators.push_back(t.elements.back());
    t.characters.push_back(std::move(s));
  }
  // Generators in the order of the basis vectors.
  std::reverse(t.generators.begin(), t.generators.end());
  return t;
}

std::string to_string(SplitStatus s) {
  return s == SplitStatus::split_with_witness ? "split_with_witness" : "no_two_torsion_section";
}

std::string to_string(Isogeny i) { return i == Isogeny::adjoint ? "adjoint" : "simply_connected"; }

std::string to_string(CwwVerdict v) {
  switch (v) {
    case CwwVerdict::split: return "split";
    case CwwVerdict::non_split: return "non_split";
    case CwwVerdict::not_covered: return "not_covered";
  }
  return "?";
}

Isogeny isogeny_of(RepKind kind) { return kind == RepKind::adjoint ? Isogeny::adjoint : Isogeny::simply_connected; }

CwwResult cww_oracle(CartanType type, int rank, Isogeny isogeny) {
  build_cartan(type, rank);
  const bool adj = isogeny == Isogeny::adjoint;
  CwwResult r;
  switch (type) {
    case CartanType::A: {
      const int center = adj ? 1 : rank + 1;
      r.verdict = center % 2 ? CwwVerdict::split : CwwVerdict::non_split;
      r.note = "|Z| = " + std::to_string(center);
      if (rank == 1 || rank == 3) {
        r.low_rank = true;
        r.note += rank == 1 ? "; A1 = B1 = C1" : "; A3 = D3";
      }
      return r;
    }
    case CartanType::B:
      if (!adj) return {CwwVerdict::not_covered, "spin form has no implemented representation", false};
      r.verdict = CwwVerdict::split;
      if (rank == 2) r = {CwwVerdict::split, "B2 = C2", true};
      return r;
    case CartanType::C:
      if (adj && rank == 2) return {CwwVerdict::split, "B2 = C2: adjoint C2 is adjoint B2", true};
      return {CwwVerdict::non_split, "", rank == 2};
    case CartanType::D:
      if (!adj) return {CwwVerdict::not_covered, "spin form has no implemented representation", false};
      return {CwwVerdict::split, "", false};
    case CartanType::E:
      if (!adj && rank != 8) return {CwwVerdict::not_covered, "simply connected form has no implemented representation", false};
      return {CwwVerdict::non_split, "", false};
    case CartanType::F: return {CwwVerdict::non_split, "", false};
    case CartanType::G: return {CwwVerdict::split, "", false};
  }
  return r;
}

bool SplitReport::agrees_with_cww() const {
  if (cww.verdict == CwwVerdict::not_covered) return true;
  return (status == SplitStatus::split_with_witness) == (cww.verdict == CwwVerdict::split);
}

nlohmann::json SplitReport::to_json() const {
  nlohmann::json w = nlohmann::json::array();
  for (std::size_t i = 0; i < witness.size(); ++i)
    w.push_back({{"node", i + 1},
                 {"torus_index", witness[i]},
                 {"character", witness_characters[i]},
                 {"diagonal", witness_diagonals[i]}});
  return {{"schema_version", kSchemaVersion},
          {"type", type_label},
          {"rank", rank},
          {"rep", rep},
          {"status", to_string(status)},
          {"two_torsion_order", two_torsion_order},
          {"search_space", search_space},
          {"relations_checked", relations_checked},
          {"witness", std::move(w)},
          {"cww", {{"expected", to_string(cww.verdict)}, {"note", cww.note}, {"low_rank", cww.low_rank}}},
          {"agrees_with_cww", agrees_with_cww()}};
}

std::string SplitReport::to_text() const {
  std::ostringstream os;
  os << type_label << rank << " " << rep << ": " << to_string(status) << " (|T[2]| = " << two_torsion_order
     << ", search space " << search_space << ", " << relations_checked << " relation checks)\n";
  for (std::size_t i = 0; i < witness.size(); ++i) {
    os << "  g_" << i + 1 << " = sdot_" << i + 1 << " * diag(";
    for (std::size_t k = 0; k < witness_diagonals[i].size(); ++k) os << (k ? "," : "") << witness_diagonals[i][k];
    os << ")\n";
  }
  os << "  expected: " << to_string(cww.verdict);
  if (!cww.note.empty()) os << " (" << cww.note << ")";
  if (cww.low_rank) os << " [low rank]";
  os << (agrees_with_cww() ? "  agrees" : "  DISAGREES") << "\n";
  return os.str();
}

SplitReport split_search(const Representation& rep, const TitsElements& t, std::uint64_t cap, unsigned threads) {
  const int n = rep.rank();
  SplitReport report;
  report.type_label = std::string(1, to_char(rep.cartan.type));
  report.rank = n;
  report.rep = rep.label();
  report.cww = cww_oracle(rep.cartan.type, n, isogeny_of(rep.kind));

  // The group order is computed from the weights before any matrix is built.
  const std::size_t r = lattice_basis(rep.weights).size();
  const std::uint64_t t2 = r < 63 ? (std::uint64_t{1} << r) : ~std::uint64_t{0};
  report.two_torsion_order = static_cast<std::size_t>(t2);
  report.search_space = saturating_pow(t2, n, cap);
  if (r >= 63 || report.search_space > cap)
    throw CapExceeded("split_search: search space |T[2]|^rank = " + std::to_string(t2) + "^" + std::to_string(n) +
                      " exceeds cap " + std::to_string(cap));

  const TorusTwoTorsion torus = torus_two_torsion(rep);
  Search search{rep.cartan, {}, {}};
  std::uint64_t square_checks = 0;
  for (int i = 0; i < n; ++i) {
    std::vector<std::size_t> ks;
    std::vector<ExactMatrix> gs;
    for (std::size_t k = 0; k < torus.order(); ++k) {
      ExactMatrix g = t.sdot[idx(i)] * torus.elements[k];
      ++square_checks;
      if ((g * g).is_identity()) {
        ks.push_back(k);
        gs.push_back(std::move(g));
      }
    }
    search.candidates.push_back(std::move(ks));
    search.lifts.push_back(std::move(gs));
  }

  // Partition over the first generator's candidates; the smallest successful
  // partition wins and counts match a sequential scan.
  const std::size_t parts = n > 0 ? search.candidates[0].size() : 0;
  std::vector<std::optional<std::vector<std::size_t>>> found(parts);
  std::vector<std::uint64_t> checks(parts, 0);
  parallel_for(parts, threads, [&](std::size_t p) {
    std::vector<std::size_t> chosen{p};
    if (search.extend(chosen, checks[p])) found[p] = std::move(chosen);
  });
  report.relations_checked = square_checks;
  std::optional<std::vector<std::size_t>> witness;
  for (std::size_t p = 0; p < parts; ++p) {
    report.relations_checked += checks[p];
    if (found[p]) {
      witness = found[p];
      break;
    }
  }
  if (!witness) return report;

  std::vector<ExactMatrix> g;
  for (int i = 0; i < n; ++i) {
    const std::size_t k = search.candidates[idx(i)][(*witness)[idx(i)]];
    report.witness.push_back(k);
    report.witness_characters.push_back(torus.characters[k]);
    std::vector<int> diag;
    for (std::size_t b = 0; b < rep.dim; ++b) diag.push_back(torus.elements[k].at(b, b) == CycloNum(1) ? 1 : -1);
    report.witness_diagonals.push_back(std::move(diag));
    g.push_back(t.sdot[idx(i)] * torus.elements[k]);
  }
  for (int i = 0; i < n; ++i) {
    if (!(g[idx(i)] * g[idx(i)]).is_identity()) throw ConsistencyError("split_search: witness fails g^2 = 1");
    for (int j = i + 1; j < n; ++j) {
      const int m = coxeter_m(rep.cartan, i, j);
      if (alternating(g[idx(i)], g[idx(j)], m) != alternating(g[idx(j)], g[idx(i)], m))
        throw ConsistencyError("split_search: witness fails a braid relation");
    }
  }
  report.status = SplitStatus::split_with_witness;
  return report;
}

}  // namespace weylnorm
