#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "weylnorm/adjoint_action.hpp"
#include "weylnorm/cli.hpp"
#include "weylnorm/errors.hpp"
#include "weylnorm/galois_ext.hpp"
#include "weylnorm/splitting.hpp"
#include "weylnorm/tits.hpp"

namespace py = pybind11;
using namespace weylnorm;

namespace {

Representation rep_of(const std::string& type, int rank, const std::string& rep) {
  return make_representation(parse_cartan_type(type), rank, parse_rep_kind(rep));
}

std::vector<std::vector<std::string>> entries(const ExactMatrix& m) {
  std::vector<std::vector<std::string>> out(m.rows(), std::vector<std::string>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m.at(r, c).to_string();
  return out;
}

std::string verify_json(const std::string& type, int rank, const std::string& rep, const std::string& suite,
                        unsigned threads) {
  const Representation r = rep_of(type, rank, rep);
  const TitsElements t = make_tits_elements(r);
  VerificationReport out{suite, r.describe(), {}};
  if (suite == "tits") {
    out.merge(verify_tits_presentation(r, t, threads));
    out.merge(verify_normalizer_action(r, t, threads));
    out.merge(verify_lift_identities(r, t, threads));
  } else {
    const UnitaryLifts u = make_unitary_lifts(r, t);
    if (suite == "unitary") {
      out.merge(verify_wu_presentation(r, u, threads));
      out.merge(verify_section6_lemmas(r, u, threads));
      out.merge(verify_m_intersection(r, t, u, threads));
    } else if (suite == "action") {
      out.merge(verify_action_tables(r, t, u, {}, threads).to_report(r.describe()));
    } else {
      throw ConfigError("suite: expected tits, unitary or action");
    }
  }
  out.sort();
  return out.to_json().dump();
}

}  // namespace

PYBIND11_MODULE(_weylnorm, m) {
  m.doc() = "Exact Tits and unitary Weyl group extensions over Q(z8)";
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);
  m.attr("SCHEMA_VERSION") = kSchemaVersion;

  m.def(
      "run_cli",
      [](std::vector<std::string> args) {
        args.insert(args.begin(), "weylnorm");
        std::ostringstream out, err;
        int code;
        {
          py::gil_scoped_release release;
          code = run_cli(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));

  m.def(
      "roots_json",
      [](const std::string& type, int rank) {
        return roots_summary_json(generate_roots(build_cartan(parse_cartan_type(type), rank))).dump();
      },
      py::arg("type"), py::arg("rank"));

  m.def(
      "cartan_matrix", [](const std::string& type, int rank) { return build_cartan(parse_cartan_type(type), rank).a; },
      py::arg("type"), py::arg("rank"));

  m.def(
      "generators",
      [](const std::string& type, int rank, const std::string& rep) {
        const Representation r = rep_of(type, rank, rep);
        py::dict d;
        py::list e, f, h;
        for (int i = 0; i < r.rank(); ++i) {
          const auto u = static_cast<std::size_t>(i);
          e.append(entries(r.e[u]));
          f.append(entries(r.f[u]));
          h.append(entries(r.h[u]));
        }
        d["e"] = e;
        d["f"] = f;
        d["h"] = h;
        d["weights"] = r.weights;
        return d;
      },
      py::arg("type"), py::arg("rank"), py::arg("rep") = "adjoint");

  m.def(
      "tits_lifts",
      [](const std::string& type, int rank, const std::string& rep) {
        const Representation r = rep_of(type, rank, rep);
        std::vector<std::vector<std::vector<std::string>>> out;
        for (const auto& s : make_tits_elements(r).sdot) out.push_back(entries(s));
        return out;
      },
      py::arg("type"), py::arg("rank"), py::arg("rep") = "adjoint");

  m.def(
      "unitary_lifts",
      [](const std::string& type, int rank, const std::string& rep) {
        const Representation r = rep_of(type, rank, rep);
        std::vector<std::vector<std::vector<std::string>>> out;
        for (const auto& s : make_unitary_lifts(r, make_tits_elements(r)).sigma) out.push_back(entries(s.linear));
        return out;
      },
      py::arg("type"), py::arg("rank"), py::arg("rep") = "adjoint");

  m.def(
      "verify_json",
      [](const std::string& type, int rank, const std::string& rep, const std::string& suite, unsigned threads) {
        py::gil_scoped_release release;
        return verify_json(type, rank, rep, suite, threads);
      },
      py::arg("type"), py::arg("rank"), py::arg("rep") = "adjoint", py::arg("suite") = "tits",
      py::arg("threads") = 1);

  m.def(
      "split_json",
      [](const std::string& type, int rank, const std::string& rep, std::uint64_t cap, unsigned threads) {
        py::gil_scoped_release release;
        const Representation r = rep_of(type, rank, rep);
        return split_search(r, make_tits_elements(r), cap, threads).to_json().dump();
      },
      py::arg("type"), py::arg("rank"), py::arg("rep") = "adjoint", py::arg("cap") = kDefaultSearchCap,
      py::arg("threads") = 1);

  m.def(
      "tits_group_order",
      [](const std::string& type, int rank, const std::string& rep, std::size_t cap) -> py::object {
        const Representation r = rep_of(type, rank, rep);
        const auto table = enumerate_group(make_tits_elements(r).sdot, cap);
        if (table.status == EnumerationStatus::cap_exceeded) return py::none();
        return py::int_(table.order());
      },
      py::arg("type"), py::arg("rank"), py::arg("rep") = "adjoint", py::arg("cap") = kDefaultEnumerationCap);
}
