#include <map>
#include <string>
#include <utility>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "trichain/bid_catalog.hpp"
#include "trichain/chain_model.hpp"
#include "trichain/closed_form.hpp"
#include "trichain/errors.hpp"
#include "trichain/extremal.hpp"

namespace py = pybind11;
using namespace trichain;

namespace {

// Indices are passed from Python either as a catalog name or as an Index.
IndexDescriptor resolve(const py::object& index) {
  if (py::isinstance<py::str>(index)) return catalog_index(index.cast<std::string>());
  return index.cast<IndexDescriptor>();
}

py::dict census_dict(const EdgeTypeVector& e) {
  py::dict edges;
  for (int slot = 0; slot < kDegreePairCount; ++slot) {
    edges[py::make_tuple(degree_pair(slot).first, degree_pair(slot).second)] =
        e.counts[static_cast<std::size_t>(slot)];
  }
  py::dict vertices;
  for (int d = kMinDegree; d <= kMaxFamilyDegree; ++d) vertices[py::int_(d)] = e.vertices.at(d);
  py::dict out;
  out["edges"] = edges;
  out["vertices"] = vertices;
  return out;
}

std::vector<std::vector<int>> as_lists(const std::vector<LengthVector>& vs) {
  std::vector<std::vector<int>> out;
  for (const auto& v : vs) out.push_back(v.entries());
  return out;
}

py::dict extremal_dict(const ExtremalResult& r) {
  py::dict d;
  d["n"] = r.n;
  d["index"] = r.index;
  d["min"] = r.exact_min ? py::object(py::int_(std::stoll(*r.exact_min))) : py::float_(r.min_value);
  d["max"] = r.exact_max ? py::object(py::int_(std::stoll(*r.exact_max))) : py::float_(r.max_value);
  d["argmin"] = as_lists(r.argmin);
  d["argmax"] = as_lists(r.argmax);
  d["count"] = r.search_space;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Triangular chain graphs and bond-incident-degree indices";
  py::register_exception<Error>(m, "TrichainError", PyExc_ValueError);

  py::class_<IndexDescriptor>(m, "Index")
      .def(py::init([](std::string name, const std::map<std::pair<int, int>, double>& table) {
             ThetaTable t{};
             std::array<bool, kDegreePairCount> seen{};
             for (const auto& [pair, w] : table) {
               const int slot = degree_pair_slot(pair.first, pair.second);
               t[static_cast<std::size_t>(slot)] = w;
               seen[static_cast<std::size_t>(slot)] = true;
             }
             for (bool s : seen) {
               if (!s) throw InputError("custom index needs all ten pairs 2 <= a <= b <= 5");
             }
             return IndexDescriptor(std::move(name), t);
           }),
           py::arg("name"), py::arg("table"))
      .def_property_readonly("name", &IndexDescriptor::name)
      .def_property_readonly("integer_valued", &IndexDescriptor::integer_valued)
      .def("theta", &IndexDescriptor::theta, py::arg("a"), py::arg("b"))
      .def("__repr__", [](const IndexDescriptor& i) { return "<Index " + i.name() + ">"; });

  m.def("catalog_names", &catalog_names);
  m.def("catalog_index", [](const std::string& name) { return catalog_index(name); });

  m.def("validate_length_vector", [](const std::vector<int>& entries) {
    const auto r = validate_length_vector(entries);
    py::dict d;
    d["valid"] = r.valid;
    d["violations"] = r.violations;
    d["n"] = r.triangles;
    d["s"] = r.segments;
    return d;
  });
  m.def("turns_from_length_vector", [](std::vector<int> v) {
    return turns_from_length_vector(LengthVector(std::move(v))).steps();
  });
  m.def("length_vector_from_turns", [](int n, std::vector<int> steps) {
    return length_vector_from_turns(TurnSequence(n, std::move(steps))).entries();
  });
  m.def("canonicalize",
        [](std::vector<int> v) { return canonicalize(LengthVector(std::move(v))).entries(); });

  m.def("build_chain_graph", [](std::vector<int> v) {
    const auto g = build_chain_graph(LengthVector(std::move(v)));
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : g.edges()) edges.emplace_back(e.u, e.v);
    std::vector<std::vector<int>> triangles;
    for (const auto& t : g.triangles()) triangles.push_back({t[0], t[1], t[2]});
    py::dict d;
    d["vertex_count"] = g.vertex_count();
    d["edges"] = edges;
    d["triangles"] = triangles;
    d["degrees"] = std::vector<int>(g.degrees().begin(), g.degrees().end());
    d["in_family"] = g.in_family();
    return d;
  });
  m.def("edge_type_counts", [](std::vector<int> v) {
    return census_dict(edge_type_counts_direct(build_chain_graph(LengthVector(std::move(v)))));
  });
  m.def("closed_edge_counts",
        [](std::vector<int> v) { return census_dict(closed_edge_counts(LengthVector(std::move(v)))); });
  m.def("closed_vertex_counts", [](std::vector<int> v) {
    return closed_vertex_counts(LengthVector(std::move(v))).counts;
  });

  m.def("direct_index", [](std::vector<int> v, const py::object& index) {
    return direct_bid_index(build_chain_graph(LengthVector(std::move(v))), resolve(index));
  });
  m.def("closed_form_index", [](std::vector<int> v, const py::object& index) {
    return ti_closed_form(LengthVector(std::move(v)), resolve(index));
  });
  m.def("compute_lambdas", [](const py::object& index, int n) {
    return compute_lambdas(resolve(index), n).as_array();
  });
  m.def("phi", [](std::vector<int> v, const py::object& index) {
    const auto p = phi(LengthVector(std::move(v)), resolve(index));
    return py::make_tuple(p.total, p.per_segment);
  });
  m.def("multiplicative_sum_zagreb", [](std::vector<int> v) {
    const auto p = multiplicative_sum_zagreb(build_chain_graph(LengthVector(std::move(v))));
    return py::make_tuple(p.ln_value, py::int_(py::str(p.exact_product.str())));
  });

  m.def("enumerate_length_vectors", [](int n) { return as_lists(enumerate_length_vectors(n)); });
  m.def("special_chain", [](const std::string& kind, int n) {
    return as_lists(special_chain(parse_family(kind), n).vectors);
  });
  m.def("brute_force_extremal", [](int n, const py::object& index) {
    return extremal_dict(brute_force_extremal(n, resolve(index)));
  });
  m.def("verify_claims", [](int n_from, int n_to) {
    const auto r = verify_claims(n_from, n_to);
    py::list claims;
    for (const auto& c : r.claims) {
      py::dict d;
      d["id"] = c.id;
      d["n"] = c.n ? py::object(py::int_(*c.n)) : py::object(py::none());
      d["status"] = std::string(to_string(c.status));
      d["expected"] = c.expected;
      d["observed"] = c.observed;
      claims.append(d);
    }
    py::dict out;
    out["from"] = r.n_from;
    out["to"] = r.n_to;
    out["overall"] = r.all_pass() ? "pass" : "fail";
    out["claims"] = claims;
    return out;
  });
  m.def("to_dot",
        [](std::vector<int> v) { return to_dot(build_chain_graph(LengthVector(std::move(v)))); });
}
