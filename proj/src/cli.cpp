#include "weylnorm/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <ostream>

#include "weylnorm/adjoint_action.hpp"
#include "weylnorm/errors.hpp"
#include "weylnorm/galois_ext.hpp"
#include "weylnorm/rootsystem.hpp"
#include "weylnorm/splitting.hpp"
#include "weylnorm/tits.hpp"

namespace weylnorm {
namespace {

struct Built {
  Representation rep;
  TitsElements tits;
  UnitaryLifts unitary;
};

Built build(const RunConfig& cfg) {
  Built b{make_representation(parse_cartan_type(cfg.type_label), cfg.rank, parse_rep_kind(cfg.rep)), {}, {}};
  b.tits = make_tits_elements(b.rep);
  b.unitary = make_unitary_lifts(b.rep, b.tits);
  return b;
}

void emit(std::ostream& out, const RunConfig& cfg, const nlohmann::json& j, const std::string& text) {
  if (cfg.json) out << j.dump(2) << "\n";
  else out << text;
}

int finish(std::ostream& out, const RunConfig& cfg, VerificationReport report) {
  report.sort();
  emit(out, cfg, report.to_json(), report.to_text());
  return report.all_pass() ? kExitPass : kExitMathFailure;
}

VerificationReport tits_suite(const Built& b, unsigned threads) {
  VerificationReport r{"tits-verify", b.rep.describe(), {}};
  r.merge(verify_tits_presentation(b.rep, b.tits, threads));
  r.merge(verify_normalizer_action(b.rep, b.tits, threads));
  r.merge(verify_lift_identities(b.rep, b.tits, threads));
  return r;
}

VerificationReport unitary_suite(const Built& b, unsigned threads) {
  VerificationReport r{"u-verify", b.rep.describe(), {}};
  r.merge(verify_wu_presentation(b.rep, b.unitary, threads));
  r.merge(verify_section6_lemmas(b.rep, b.unitary, threads));
  r.merge(verify_m_intersection(b.rep, b.tits, b.unitary, threads));
  return r;
}

int cmd_roots(const RunConfig& cfg, std::ostream& out) {
  const RootSystem rs = generate_roots(build_cartan(parse_cartan_type(cfg.type_label), cfg.rank));
  nlohmann::json j = roots_summary_json(rs);
  j["schema_version"] = kSchemaVersion;
  std::string text = rs.cartan().label() + ": " + std::to_string(rs.roots().size()) + " roots, |W| = " +
                     std::to_string(j["weyl_order"].get<std::uint64_t>()) + "\n";
  for (int i = 0; i < rs.rank(); ++i) {
    text += "  ";
    for (int k = 0; k < rs.rank(); ++k) text += (k ? " " : "") + std::to_string(rs.cartan()(i, k));
    text += "\n";
  }
  emit(out, cfg, j, text);
  return kExitPass;
}

int cmd_rep_dump(const RunConfig& cfg, std::ostream& out) {
  const Representation rep = make_representation(parse_cartan_type(cfg.type_label), cfg.rank, parse_rep_kind(cfg.rep));
  nlohmann::json j = to_json(rep);
  j["schema_version"] = kSchemaVersion;
  std::string text = rep.describe() + ", dim " + std::to_string(rep.dim) + "\n";
  for (int i = 0; i < rep.rank(); ++i) {
    const auto u = static_cast<std::size_t>(i);
    text += "e_" + std::to_string(i + 1) + " =\n" + rep.e[u].to_string() + "f_" + std::to_string(i + 1) + " =\n" +
            rep.f[u].to_string() + "h_" + std::to_string(i + 1) + " =\n" + rep.h[u].to_string();
  }
  emit(out, cfg, j, text);
  return kExitPass;
}

int cmd_adjoint_table(const RunConfig& cfg, std::ostream& out) {
  const Built b = build(cfg);
  ActionOptions opts;
  opts.tits = cfg.lift == "tits" && !cfg.tilde;
  opts.tilde = cfg.lift == "tits" && cfg.tilde;
  opts.unitary = cfg.lift == "unitary";
  const ActionTable table = verify_action_tables(b.rep, b.tits, b.unitary, opts, cfg.threads);
  nlohmann::json j = table.to_json(cfg.with_matrices);
  j["subject"] = b.rep.describe();
  j["lift"] = cfg.lift;
  emit(out, cfg, j, b.rep.describe() + " (" + cfg.lift + (cfg.tilde ? ", tilde" : "") + ")\n" + table.to_text());
  return table.all_match() ? kExitPass : kExitMathFailure;
}

int cmd_split(const RunConfig& cfg, std::ostream& out) {
  const Representation rep = make_representation(parse_cartan_type(cfg.type_label), cfg.rank, parse_rep_kind(cfg.rep));
  const std::uint64_t cap = cfg.cap.value_or(kDefaultSearchCap);
  // Checked before the lifts are built so that oversized cases fail fast.
  const std::size_t r = lattice_basis(rep.weights).size();
  if (r * static_cast<std::size_t>(rep.rank()) >= 64 ||
      (std::uint64_t{1} << (r * static_cast<std::size_t>(rep.rank()))) > cap)
    throw CapExceeded("split-check: search space 2^" + std::to_string(r * static_cast<std::size_t>(rep.rank())) +
                      " exceeds cap " + std::to_string(cap));
  const TitsElements t = make_tits_elements(rep);
  const SplitReport report = split_search(rep, t, cap, cfg.threads);
  emit(out, cfg, report.to_json(), report.to_text());
  return report.agrees_with_cww() ? kExitPass : kExitMathFailure;
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
  const Built b = build(cfg);
  std::vector<GroupElement> gens;
  if (cfg.lift == "tits") {
    for (const auto& s : b.tits.sdot) gens.push_back({s, false});
  } else {
    gens = b.unitary.sigma;
    gens.insert(gens.end(), b.unitary.sigma_bar.begin(), b.unitary.sigma_bar.end());
  }
  const FiniteGroupTable table = enumerate_group(gens, cfg.cap.value_or(kDefaultEnumerationCap), cfg.threads);
  nlohmann::json j = table.to_json(cfg.with_matrices);
  j["schema_version"] = kSchemaVersion;
  j["subject"] = b.rep.describe();
  j["generators"] = cfg.lift;
  std::string text = b.rep.describe() + " <" + cfg.lift + " lifts>: ";
  if (table.status == EnumerationStatus::cap_exceeded) {
    text += "group larger than cap " + std::to_string(cfg.cap.value_or(kDefaultEnumerationCap)) + "\n";
    emit(out, cfg, j, text);
    return kExitCapExceeded;
  }
  const std::size_t weyl = weyl_image_order(b.rep, table);
  j["weyl_image_order"] = weyl;
  text += "order " + std::to_string(table.order()) + ", image in W of order " + std::to_string(weyl) + "\n";
  emit(out, cfg, j, text);
  return kExitPass;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const Built b = build(cfg);
  VerificationReport r{"verify", b.rep.describe(), {}};
  r.merge(tits_suite(b, cfg.threads));
  r.merge(unitary_suite(b, cfg.threads));
  r.merge(verify_action_tables(b.rep, b.tits, b.unitary, {}, cfg.threads).to_report(b.rep.describe()));
  r.merge(verify_weight_consistency(b.rep, b.tits, cfg.threads));
  r.merge(verify_extension_quotient(b.rep, b.unitary, cfg.cap.value_or(kDefaultEnumerationCap), cfg.threads));
  return finish(out, cfg, std::move(r));
}

}  // namespace

unsigned default_threads() {
  if (const char* env = std::getenv("WEYLNORM_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 1024) return static_cast<unsigned>(v);
  }
  return 1;
}

void validate(const RunConfig& cfg) {
  auto flagged = [](const char* flag, auto fn) {
    try {
      return fn();
    } catch (const ConfigError& e) {
      throw ConfigError(std::string(flag) + ": " + e.what());
    }
  };
  const CartanType type = flagged("--type", [&] { return parse_cartan_type(cfg.type_label); });
  flagged("--rank", [&] { return build_cartan(type, cfg.rank); });
  const RepKind kind = flagged("--rep", [&] { return parse_rep_kind(cfg.rep); });
  if (kind == RepKind::defining && type != CartanType::A && type != CartanType::C)
    throw ConfigError("--rep: defining representation is implemented for types A and C only");
  if (kind == RepKind::sl2 && (type != CartanType::A || cfg.rank != 1))
    throw ConfigError("--rep: sl2 requires --type A --rank 1");
  if (cfg.threads == 0) throw ConfigError("--threads: must be at least 1");
  if (cfg.cap && *cfg.cap == 0) throw ConfigError("--cap: must be positive");
  if (cfg.lift != "tits" && cfg.lift != "unitary") throw ConfigError("--lift: expected tits or unitary");
  if (cfg.tilde && cfg.lift != "tits") throw ConfigError("--tilde: only defined for --lift tits");
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Tits and unitary Weyl group extensions over Q(z8)", "weylnorm"};
  app.require_subcommand(1);
  RunConfig cfg;
  cfg.threads = default_threads();
  std::uint64_t cap = 0;

  auto common = [&](CLI::App* sub, bool with_rep) {
    sub->add_option("--type", cfg.type_label, "Cartan type A..G")->required();
    sub->add_option("--rank", cfg.rank, "rank")->required();
    if (with_rep) sub->add_option("--rep", cfg.rep, "adjoint | defining | sl2");
    sub->add_flag("--json", cfg.json, "JSON output");
    sub->add_option("--threads", cfg.threads, "worker threads (default WEYLNORM_THREADS or 1)");
    sub->add_option("--cap", cap, "enumeration or search cap");
  };
  auto* roots = app.add_subcommand("roots", "root system summary");
  common(roots, false);
  auto* dump = app.add_subcommand("rep-dump", "generator matrices of a representation");
  common(dump, true);
  auto* tits = app.add_subcommand("tits-verify", "Tits presentation and normalizer action");
  common(tits, true);
  auto* uver = app.add_subcommand("u-verify", "unitary extension presentation and lemmas");
  common(uver, true);
  auto* table = app.add_subcommand("adjoint-table", "adjoint action of the lifts on generators");
  common(table, true);
  table->add_option("--lift", cfg.lift, "tits | unitary");
  table->add_flag("--tilde", cfg.tilde, "use e~ = -e, f~ = f");
  table->add_flag("--matrices", cfg.with_matrices, "include matrices in JSON output");
  auto* split = app.add_subcommand("split-check", "search for a splitting by 2-torsion lifts");
  common(split, true);
  auto* enumerate = app.add_subcommand("enumerate", "enumerate the group generated by the lifts");
  common(enumerate, true);
  enumerate->add_option("--lift", cfg.lift, "tits | unitary");
  enumerate->add_flag("--matrices", cfg.with_matrices, "include matrices in JSON output");
  auto* verify = app.add_subcommand("verify", "run every verification suite");
  common(verify, true);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitPass : kExitConfigError;
  }
  for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();
  if (cap != 0) cfg.cap = cap;

  try {
    validate(cfg);
    if (cfg.command == "roots") return cmd_roots(cfg, out);
    if (cfg.command == "rep-dump") return cmd_rep_dump(cfg, out);
    if (cfg.command == "adjoint-table") return cmd_adjoint_table(cfg, out);
    if (cfg.command == "split-check") return cmd_split(cfg, out);
    if (cfg.command == "enumerate") return cmd_enumerate(cfg, out);
    if (cfg.command == "verify") return cmd_verify(cfg, out);
    const Built b = build(cfg);
    if (cfg.command == "tits-verify") return finish(out, cfg, tits_suite(b, cfg.threads));
    if (cfg.command == "u-verify") return finish(out, cfg, unitary_suite(b, cfg.threads));
    throw ConfigError("unknown command " + cfg.command);
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << "\n";
    return kExitMathFailure;
  }
}

}  // namespace weylnorm
