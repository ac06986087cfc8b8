// pybind11 bindings for the clustering core. Matrices cross the
// boundary as numpy float64 arrays; +inf marks absent edges.

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "asymclust/harness.hpp"
#include "asymclust/io.hpp"
#include "asymclust/methods.hpp"
#include "asymclust/paths.hpp"
#include "asymclust/ultrametric.hpp"
#include "asymclust/values.hpp"

namespace py = pybind11;
using namespace asymclust;

namespace {

SquareMatrix matrix_from_array(const py::array_t<double>& array) {
  if (array.ndim() != 2 || array.shape(0) != array.shape(1)) {
    throw Error(errc::dimension_mismatch, "expected a square 2-d array");
  }
  const auto view = array.unchecked<2>();
  const std::size_t n = static_cast<std::size_t>(array.shape(0));
  SquareMatrix m(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = view(static_cast<py::ssize_t>(i), static_cast<py::ssize_t>(j));
  return m;
}

py::array_t<double> matrix_to_array(const SquareMatrix& m) {
  const std::size_t n = m.size();
  py::array_t<double> array({n, n});
  auto view = array.mutable_unchecked<2>();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      view(static_cast<py::ssize_t>(i), static_cast<py::ssize_t>(j)) = m(i, j);
  return array;
}

MethodId method_from_name(const std::string& name) {
  const auto method = parse_method(name);
  if (!method) {
    throw Error(errc::bad_params, "unknown method '" + name + "'");
  }
  return *method;
}

Partition partition_from_blocks(const std::vector<std::vector<std::size_t>>& blocks,
                                std::size_t n) {
  return Partition::validate(blocks, n);
}

}  // namespace

PYBIND11_MODULE(_asymclust, m) {
  m.doc() = "Hierarchical clustering of directed dissimilarity networks";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<Error>(m, "ValidationError", PyExc_ValueError);

  py::class_<Network>(m, "Network")
      .def(py::init([](std::vector<std::string> labels, py::array_t<double> dissim) {
             return Network::validate(std::move(labels), matrix_from_array(dissim));
           }),
           py::arg("labels"), py::arg("dissim"))
      .def_property_readonly("labels", &Network::labels)
      .def_property_readonly("n", &Network::size)
      .def("dissim", [](const Network& net) { return matrix_to_array(net.dissim()); })
      .def("__eq__", [](const Network& a, const Network& b) { return a == b; })
      .def("__len__", &Network::size)
      .def("__repr__", [](const Network& net) {
        return "<Network of " + std::to_string(net.size()) + " nodes>";
      });

  py::class_<Ultrametric>(m, "Ultrametric")
      .def(py::init([](std::vector<std::string> labels, py::array_t<double> values) {
             return Ultrametric::validate(std::move(labels), matrix_from_array(values));
           }),
           py::arg("labels"), py::arg("values"))
      .def_property_readonly("labels", &Ultrametric::labels)
      .def("values", [](const Ultrametric& u) { return matrix_to_array(u.values()); })
      .def("__eq__", [](const Ultrametric& a, const Ultrametric& b) { return a == b; })
      .def("__len__", &Ultrametric::size);

  py::class_<Merge>(m, "Merge")
      .def_readonly("height", &Merge::height)
      .def_readonly("left", &Merge::left)
      .def_readonly("right", &Merge::right)
      .def_readonly("id", &Merge::id)
      .def("__repr__", [](const Merge& merge) {
        return "Merge(height=" + format_value(merge.height) + ", left=" +
               std::to_string(merge.left) + ", right=" + std::to_string(merge.right) +
               ", id=" + std::to_string(merge.id) + ")";
      });

  py::class_<Dendrogram>(m, "Dendrogram")
      .def_property_readonly("leaves", &Dendrogram::leaves)
      .def_property_readonly("merges", &Dendrogram::merges)
      .def_property_readonly("complete", &Dendrogram::complete)
      .def("cut",
           [](const Dendrogram& d, Value delta) { return cut(d, delta).blocks(); },
           py::arg("delta"))
      .def("newick", [](const Dendrogram& d) { return to_newick(d); })
      .def("merge_list", [](const Dendrogram& d) { return to_merge_list(d); })
      .def("to_ultrametric", [](const Dendrogram& d) { return to_ultrametric(d); });

  py::class_<AxiomReport>(m, "AxiomReport")
      .def_readonly("predicate", &AxiomReport::predicate)
      .def_readonly("passed", &AxiomReport::pass)
      .def_readonly("witness", &AxiomReport::witness)
      .def_readonly("witness_nodes", &AxiomReport::witness_nodes)
      .def_readonly("witness_values", &AxiomReport::witness_values)
      .def("__bool__", [](const AxiomReport& report) { return report.pass; })
      .def("__repr__", [](const AxiomReport& report) { return report_line(report); });

  m.def("cluster",
        [](const std::string& method, const Network& net) {
          return cluster(method_from_name(method), net);
        },
        py::arg("method"), py::arg("net"),
        "Run one of: single-linkage, reciprocal, nonreciprocal, unilateral");
  m.def("to_dendrogram", [](const Ultrametric& u) { return to_dendrogram(u); });

  m.def("separation", &separation);
  m.def("min_loop_cost", &min_loop_cost);
  m.def("is_symmetric", &is_symmetric);
  m.def("max_symmetrize", &max_symmetrize);
  m.def("min_symmetrize", &min_symmetrize);
  m.def("min_chain_cost", [](const Network& net) { return matrix_to_array(min_chain_cost(net)); });
  m.def("brute_force_min_chain_cost",
        [](const Network& net) { return matrix_to_array(brute_force_min_chain_cost(net)); });

  m.def("canonical_network",
        [](std::size_t n, Value alpha, Value beta, std::vector<std::size_t> perm) {
          return canonical_network({n, alpha, beta, std::move(perm)});
        },
        py::arg("n"), py::arg("alpha"), py::arg("beta"),
        py::arg("perm") = std::vector<std::size_t>{});
  m.def("permute", &permute, py::arg("net"), py::arg("perm"));
  m.def("quotient",
        [](const Network& net, const std::vector<std::vector<std::size_t>>& blocks) {
          return quotient(net, partition_from_blocks(blocks, net.size()));
        },
        py::arg("net"), py::arg("blocks"));
  m.def("random_network", &random_network, py::arg("n"), py::arg("density") = 1.0,
        py::arg("seed") = 0);

  m.def("delta_partition",
        [](const Network& net, std::size_t x, std::size_t xp, Value delta) {
          return delta_partition(net, x, xp, delta).blocks();
        },
        py::arg("net"), py::arg("x"), py::arg("xp"), py::arg("delta"));
  m.def("canonical_embedding", &canonical_embedding, py::arg("net"), py::arg("alpha"));

  m.def("check_influence",
        [](const Ultrametric& u, const Network& net, const std::string& variant) {
          if (variant == "p1") return check_influence(u, net, InfluenceVariant::loop_cost);
          if (variant == "p1'" || variant == "p1p")
            return check_influence(u, net, InfluenceVariant::separation);
          throw Error(errc::bad_params, "variant must be 'p1' or 'p1p'");
        },
        py::arg("u"), py::arg("net"), py::arg("variant") = "p1");
  m.def("check_sandwich",
        [](const Ultrametric& u, const Network& net, const std::string& variant) {
          if (variant == "thm3") return check_sandwich(u, net, SandwichVariant::nonreciprocal_reciprocal);
          if (variant == "thm6") return check_sandwich(u, net, SandwichVariant::unilateral_reciprocal);
          throw Error(errc::bad_params, "variant must be 'thm3' or 'thm6'");
        },
        py::arg("u"), py::arg("net"), py::arg("variant") = "thm3");
  m.def("is_dissimilarity_reducing",
        [](const std::vector<std::size_t>& mapping, const Network& src, const Network& dst) {
          return is_dissimilarity_reducing(NodeMap{mapping}, src, dst);
        },
        py::arg("mapping"), py::arg("src"), py::arg("dst"));

  m.def("parse_network_csv",
        [](const std::string& text) { return parse_network(text, InputFormat::matrix); });
  m.def("parse_network_edges",
        [](const std::string& text) { return parse_network(text, InputFormat::edges); });
  m.def("write_network_csv",
        [](const Network& net) { return write_matrix_csv(net.labels(), net.dissim()); });
}
