#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <optional>
#include <string>
#include <vector>

#include "typea/error.hpp"
#include "typea/oracle.hpp"
#include "typea/serialize.hpp"

namespace py = pybind11;
using namespace typea;

namespace {

py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

GroupKind kind_of(const std::string& name) {
  const auto kind = parse_group_kind(name);
  if (!kind) throw InvalidParameter("unknown group kind '" + name + "'");
  return *kind;
}

struct Target {
  GroupSpec group;
  OrbitSpec orbit;
};

// Same defaults as the command line: linear kinds take n from the orbit and
// complex kinds pair the orbit with itself.
Target resolve(const std::string& kind_name, const std::vector<int>& orbit, std::optional<int> n,
               std::optional<int> p, std::optional<int> q, std::optional<std::vector<int>> orbit2) {
  const GroupKind kind = kind_of(kind_name);
  const Diagram first(orbit);
  if (orbit2 && !is_complex(kind)) throw InvalidParameter("orbit2 is only meaningful for gl-c and sl-c");
  if (is_unitary(kind)) {
    if (!p || !q) throw InvalidParameter(kind_name + " needs p and q");
    if (n && *n != *p + *q) throw DegreeMismatch("n must equal p + q");
    return {GroupSpec::unitary(kind, *p, *q), OrbitSpec::single(first)};
  }
  if (p || q) throw InvalidParameter(kind_name + " is parameterized by n, not (p, q)");
  const GroupSpec group = GroupSpec::linear(kind, n.value_or(first.size()));
  if (is_complex(kind)) return {group, OrbitSpec::pair(first, orbit2 ? Diagram(*orbit2) : first)};
  return {group, OrbitSpec::single(first)};
}

std::vector<int> parts(const Diagram& d) { return d.parts(); }

}  // namespace

PYBIND11_MODULE(_typea, m) {
  m.doc() = "Exact counts and parameters of special unipotent representations of type-A groups";
  py::register_exception<Error>(m, "TypeAError", PyExc_ValueError);

  m.def(
      "count",
      [](const std::string& g, const std::vector<int>& o, std::optional<int> n, std::optional<int> p,
         std::optional<int> q, std::optional<std::vector<int>> o2) {
        const auto t = resolve(g, o, n, p, q, o2);
        return count_unipotent(t.group, t.orbit).count;
      },
      py::arg("group"), py::arg("orbit"), py::kw_only(), py::arg("n") = py::none(), py::arg("p") = py::none(),
      py::arg("q") = py::none(), py::arg("orbit2") = py::none(), "Number of special unipotent representations attached to the orbit.");

  m.def(
      "count_result",
      [](const std::string& g, const std::vector<int>& o, std::optional<int> n, std::optional<int> p,
         std::optional<int> q, std::optional<std::vector<int>> o2) {
        const auto t = resolve(g, o, n, p, q, o2);
        return to_python(to_json(count_unipotent(t.group, t.orbit)));
      },
      py::arg("group"), py::arg("orbit"), py::kw_only(), py::arg("n") = py::none(), py::arg("p") = py::none(),
      py::arg("q") = py::none(), py::arg("orbit2") = py::none(), "Count with coset signature and method, as a dict.");

  m.def(
      "enumerate_parameters",
      [](const std::string& g, const std::vector<int>& o, std::optional<int> n) {
        const auto t = resolve(g, o, n, std::nullopt, std::nullopt, std::nullopt);
        return to_python(to_json(enumerate_parameters(t.group, t.orbit.first)));
      },
      py::arg("group"), py::arg("orbit"), py::kw_only(), py::arg("n") = py::none(),
      "Explicit parameters for gl-r and sl-r, as a dict.");

  m.def(
      "coh",
      [](const std::string& g, const std::vector<int>& o, std::optional<int> n, std::optional<int> p,
         std::optional<int> q, std::optional<std::vector<int>> o2) {
        const auto t = resolve(g, o, n, p, q, o2);
        return to_python(to_json(coherent_module(t.group, t.orbit)));
      },
      py::arg("group"), py::arg("orbit"), py::kw_only(), py::arg("n") = py::none(), py::arg("p") = py::none(),
      py::arg("q") = py::none(), py::arg("orbit2") = py::none(), "Coherent continuation module, as a dict.");

  m.def(
      "cell",
      [](const std::string& g, const std::vector<int>& o, std::optional<std::vector<int>> o2) {
        const GroupKind kind = kind_of(g);
        const Diagram first(o);
        const OrbitSpec orbit = is_complex(kind) ? OrbitSpec::pair(first, o2 ? Diagram(*o2) : first)
                                                 : OrbitSpec::single(first);
        std::vector<std::vector<int>> out;
        for (const auto& d : cell_rep(kind, orbit).labels) out.push_back(parts(d));
        return out;
      },
      py::arg("group"), py::arg("orbit"), py::kw_only(), py::arg("orbit2") = py::none(),
      "Cell representation labels.");

  m.def(
      "character_value",
      [](const std::vector<int>& label, const std::vector<int>& cycle_type) {
        return typea::character_value(Diagram(label), Diagram(cycle_type));
      },
      py::arg("label"), py::arg("cycle_type"));
  m.def(
      "character_table", [](int n) { return to_python(to_json(*typea::character_table(n))); }, py::arg("n"));
  m.def(
      "hook_dimension", [](const std::vector<int>& label) { return typea::hook_dimension(Diagram(label)); },
      py::arg("label"));
  m.def(
      "lr_coefficient",
      [](const std::vector<int>& l, const std::vector<int>& mu, const std::vector<int>& nu) {
        return typea::lr_coefficient(Diagram(l), Diagram(mu), Diagram(nu));
      },
      py::arg("lam"), py::arg("mu"), py::arg("nu"));
  m.def(
      "transpose", [](const std::vector<int>& d) { return parts(typea::transpose(Diagram(d))); }, py::arg("d"));
  m.def(
      "verify_counting_equality",
      [](int p, int q, const std::vector<int>& o) {
        const auto eq = typea::verify_counting_equality(p, q, Diagram(o));
        return std::make_pair(eq.su, eq.u_tilde);
      },
      py::arg("p"), py::arg("q"), py::arg("orbit"), "(count for SU(p,q), count for U~(p,q)).");
  m.def(
      "verify",
      [](int max_size) {
        oracle::VerificationReport report;
        {
          py::gil_scoped_release release;
          report = oracle::run_verification(max_size);
        }
        return to_python(to_json(report));
      },
      py::arg("max_size") = 8, "Runs every oracle sweep; returns the report as a dict.");
  m.def(
      "set_cache_dir",
      [](std::optional<std::filesystem::path> dir) { character_cache().set_directory(std::move(dir)); },
      py::arg("path"), "Directory for on-disk character tables, or None.");
}
