#include "weylnorm/adjoint_action.hpp"

#include <sstream>
#include <stdexcept>

#include "weylnorm/errors.hpp"
#include "weylnorm/parallel.hpp"

namespace weylnorm {
namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

long factorial(int k) {
  long out = 1;
  for (int t = 2; t <= k; ++t) out *= t;
  return out;
}

// [x, [x, ... [x, y]]] with k copies of x.
ExactMatrix iterated(const ExactMatrix& x, ExactMatrix y, int k) {
  for (int t = 0; t < k; ++t) y = bracket(x, y);
  return y;
}

const ExactMatrix& gen(const Representation& rep, GenKind kind, int i) {
  return kind == GenKind::e ? rep.e[idx(i)] : rep.f[idx(i)];
}

std::string rational_string(long num, long den) {
  const mpq_class q(num, den);
  return mpq_class(q).get_str();
}

std::string coefficient_tits(const Representation& rep, int i, int j, GenKind kind, bool tilde) {
  if (i == j) return tilde ? "1" : "-1";
  const int k = -rep.cartan(i, j);
  if (k == 0) return "1";
  const long sign = (!tilde && kind == GenKind::e && k % 2) ? -1 : 1;
  return rational_string(sign, factorial(k));
}

std::string coefficient_unitary(const Representation& rep, int i, int j) {
  if (i == j) return "-i";
  const int k = -rep.cartan(i, j);
  if (k == 0) return "-i";
  return rational_string(-1, factorial(k));
}

const char* gen_name(GenKind g) { return g == GenKind::e ? "e" : "f"; }

}  // namespace

std::string to_string(LiftKind k) { return k == LiftKind::tits ? "tits" : "unitary"; }

LiftKind parse_lift_kind(const std::string& s) {
  if (s == "tits") return LiftKind::tits;
  if (s == "unitary") return LiftKind::unitary;
  throw ConfigError("lift: expected tits or unitary, got '" + s + "'");
}

ExactMatrix conj_generator(const GroupElement& g, const ExactMatrix& x) {
  if (g.linear.cols() != x.rows() || !x.is_square()) throw std::invalid_argument("conj_generator: dimension mismatch");
  const ExactMatrix& a = g.linear;
  return a * (g.flag ? x.conj() : x) * a.inverse();
}

ExactMatrix bracket_rhs_tits(const Representation& rep, int i, int j, GenKind kind, bool tilde) {
  // e~ = -e, f~ = f.
  auto tgen = [&](GenKind g, int k) { return (tilde && g == GenKind::e) ? -gen(rep, g, k) : gen(rep, g, k); };
  if (i == j) {
    const GenKind other = kind == GenKind::e ? GenKind::f : GenKind::e;
    return tilde ? tgen(other, i) : -gen(rep, other, i);
  }
  const int k = -rep.cartan(i, j);
  if (k == 0) return tgen(kind, j);
  const ExactMatrix nested = iterated(tgen(kind, i), tgen(kind, j), k);
  const long sign = (!tilde && kind == GenKind::e && k % 2) ? -1 : 1;
  return nested.scaled(CycloNum::rational(sign, factorial(k)));
}

ExactMatrix bracket_rhs_unitary(const Representation& rep, int i, int j, GenKind kind) {
  const CycloNum im = CycloNum::imag();
  if (i == j) {
    const GenKind other = kind == GenKind::e ? GenKind::f : GenKind::e;
    return gen(rep, other, i).scaled(-im);
  }
  const int k = -rep.cartan(i, j);
  if (k == 0) return gen(rep, kind, j).scaled(-im);
  const ExactMatrix nested = iterated(gen(rep, kind, i).scaled(im), gen(rep, kind, j).scaled(im), k);
  return nested.scaled(CycloNum::rational(-1, factorial(k)));
}

bool ActionTable::all_match() const {
  for (const auto& e : entries)
    if (!e.match) return false;
  return true;
}

VerificationReport ActionTable::to_report(const std::string& subject) const {
  VerificationReport r{"action", subject, {}};
  for (const auto& e : entries) {
    std::string id = "action." + to_string(e.lift) + (e.tilde ? "_tilde." : ".") + gen_name(e.gen);
    r.add(std::move(id), {e.i + 1, e.j + 1}, e.match, "coefficient " + e.coefficient);
  }
  r.sort();
  return r;
}

nlohmann::json ActionTable::to_json(bool with_matrices) const {
  nlohmann::json items = nlohmann::json::array();
  for (const auto& e : entries) {
    nlohmann::json item = {{"lift", to_string(e.lift)}, {"tilde", e.tilde},     {"i", e.i + 1},
                           {"j", e.j + 1},              {"gen", gen_name(e.gen)}, {"coefficient", e.coefficient},
                           {"depth", e.depth},          {"match", e.match}};
    if (with_matrices) {
      item["expected"] = weylnorm::to_json(e.expected);
      item["actual"] = weylnorm::to_json(e.actual);
    }
    items.push_back(std::move(item));
  }
  return {{"schema_version", kSchemaVersion}, {"all_match", all_match()}, {"entries", std::move(items)}};
}

std::string ActionTable::to_text() const {
  std::ostringstream os;
  for (const auto& e : entries) {
    const std::string g = std::string(e.tilde ? "~" : "") + gen_name(e.gen);
    const std::string x = e.lift == LiftKind::unitary ? "i" + g : g;
    const std::string lift = e.lift == LiftKind::unitary ? "sigma" : "sdot";
    os << (e.match ? "ok    " : "FAIL  ") << lift << "_" << e.i + 1 << " " << x << "_" << e.j + 1 << " " << lift
       << "_" << e.i + 1 << "^-1 = ";
    if (e.i == e.j) {
      const std::string other = std::string(e.tilde ? "~" : "") + (e.gen == GenKind::e ? "f" : "e");
      os << (e.lift == LiftKind::unitary ? "-i" : e.tilde ? "" : "-") << other << "_" << e.i + 1;
    } else if (e.expected.is_zero() && e.actual.is_zero()) {
      os << "0";
    } else if (e.coefficient == "1" || e.coefficient == "-i") {
      os << (e.coefficient == "1" ? "" : "-i") << g << "_" << e.j + 1;
    } else {
      os << e.coefficient << " ad(" << x << "_" << e.i + 1 << ")^" << e.depth << " " << x << "_" << e.j + 1;
    }
    os << "\n";
  }
  return os.str();
}

ActionTable verify_action_tables(const Representation& rep, const TitsElements& t, const UnitaryLifts& u,
                                 ActionOptions opts, unsigned threads) {
  const int n = rep.rank();
  std::vector<ActionEntry> entries;
  for (int pass = 0; pass < 3; ++pass) {
    if ((pass == 0 && !opts.tits) || (pass == 1 && !opts.tilde) || (pass == 2 && !opts.unitary)) continue;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (GenKind g : {GenKind::e, GenKind::f}) {
          ActionEntry e;
          e.lift = pass == 2 ? LiftKind::unitary : LiftKind::tits;
          e.tilde = pass == 1;
          e.i = i;
          e.j = j;
          e.gen = g;
          entries.push_back(std::move(e));
        }
  }
  parallel_for(entries.size(), threads, [&](std::size_t k) {
    ActionEntry& e = entries[k];
    const ExactMatrix& x = gen(rep, e.gen, e.j);
    e.depth = e.i == e.j ? 0 : -rep.cartan(e.i, e.j);
    if (e.lift == LiftKind::tits) {
      const ExactMatrix arg = (e.tilde && e.gen == GenKind::e) ? -x : x;
      e.actual = t.sdot[idx(e.i)] * arg * t.sdot_inv[idx(e.i)];
      e.expected = bracket_rhs_tits(rep, e.i, e.j, e.gen, e.tilde);
      e.coefficient = coefficient_tits(rep, e.i, e.j, e.gen, e.tilde);
    } else {
      e.actual = conj_generator(u.sigma[idx(e.i)], x.scaled(CycloNum::imag()));
      e.expected = bracket_rhs_unitary(rep, e.i, e.j, e.gen);
      e.coefficient = coefficient_unitary(rep, e.i, e.j);
    }
    e.match = e.actual == e.expected;
  });
  return {std::move(entries)};
}

VerificationReport verify_weight_consistency(const Representation& rep, const TitsElements& t, unsigned threads) {
  const int n = rep.rank();
  const auto& c = rep.cartan;
  std::vector<CheckTask> tasks;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (GenKind g : {GenKind::e, GenKind::f})
        tasks.emplace_back([&, i, j, g] {
          const ExactMatrix y = t.sdot[idx(i)] * gen(rep, g, j) * t.sdot_inv[idx(i)];
          bool ok = true;
          for (int k = 0; ok && k < n; ++k) {
            long w = c(k, j) - c(k, i) * c(i, j);
            if (g == GenKind::f) w = -w;
            ok = bracket(rep.h[idx(k)], y) == y.scaled(CycloNum(w));
          }
          return make_check(std::string("action.weight.") + gen_name(g), {i + 1, j + 1}, ok);
        });
  return run_checks("weight", rep.describe(), tasks, threads);
}

}  // namespace weylnorm
