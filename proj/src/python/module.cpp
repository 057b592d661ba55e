#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "biextra/aut.hpp"
#include "biextra/classify.hpp"
#include "biextra/dent_space.hpp"
#include "biextra/extraspecial.hpp"
#include "biextra/group.hpp"
#include "biextra/serialize.hpp"
#include "biextra/verify.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace {

biextra::Group build(const std::string& expr) { return biextra::parse_expression(expr); }

std::string type_str(const biextra::Group& g) {
  return std::string(1, biextra::form_type_char(biextra::classify(g).type));
}

}  // namespace

PYBIND11_MODULE(_biextra, m) {
  m.doc() = "biextraspecial group calculator core";

  py::class_<biextra::Group>(m, "Group")
      .def_property_readonly("name", &biextra::Group::name)
      .def_property_readonly("rank", &biextra::Group::rank)
      .def_property_readonly("order", &biextra::Group::order)
      .def_property_readonly("q_order", &biextra::Group::q_order)
      .def_property_readonly("type", &type_str)
      .def("__repr__", [](const biextra::Group& g) {
        return "<Group " + biextra::classify(g).text() + ">";
      });

  m.def("construct", &build, py::arg("expr"),
        "Construct a group from a descriptor or composition expression.");

  m.def(
      "group_type",
      [](const std::string& expr) {
        const biextra::GroupDescriptor d = biextra::classify(build(expr));
        return py::make_tuple(d.rank, std::string(1, biextra::form_type_char(d.type)));
      },
      py::arg("expr"), "Classify an expression; returns (rank, type).");

  m.def(
      "dent_table_json",
      [](const std::string& expr) {
        return json(biextra::dent_table(biextra::DentSpace::enumerate(build(expr)))).dump();
      },
      py::arg("expr"), "Dent table of the group, as a JSON string.");

  m.def(
      "gram",
      [](const std::string& expr) {
        const biextra::DentSpace ds = biextra::DentSpace::enumerate(build(expr));
        const biextra::QuadraticSpace& space = ds.space();
        std::vector<int> qvals;
        std::vector<std::vector<int>> rows;
        for (int i = 0; i < space.dim(); ++i) {
          qvals.push_back(space.basis_q_values().bit(i));
          std::vector<int> row;
          for (int k = 0; k < space.dim(); ++k)
            row.push_back(space.gram()[static_cast<std::size_t>(i)].bit(k));
          rows.push_back(std::move(row));
        }
        return py::make_tuple(qvals, rows);
      },
      py::arg("expr"), "Basis q-values and Gram matrix of the dent space.");

  m.def(
      "rt_summary",
      [](const std::string& expr) {
        const biextra::Group g = build(expr);
        const auto rt = biextra::ExtraspecialSubgroup::centralizer(g);
        py::dict d;
        d["order"] = rt.order();
        d["center_order"] = rt.center().size();
        d["quotient_type"] =
            std::string(1, biextra::form_type_char(rt.quotient_space().type()));
        py::dict h;
        for (const auto& [order, count] : rt.order_histogram())
          h[py::int_(order)] = count;
        d["order_histogram"] = h;
        return d;
      },
      py::arg("expr"), "Order, center and order histogram of the involution centralizer.");

  m.def(
      "out_report",
      [](const std::string& expr) {
        const biextra::OutReport rep = biextra::out_structure(build(expr));
        py::dict d;
        d["kernel"] = rep.kernel_order;
        d["image"] = rep.image_order;
        d["total"] = rep.total_order;
        d["split"] = std::string(biextra::split_status_str(rep.split));
        return d;
      },
      py::arg("expr"), "Outer automorphism structure: kernel, image, total, split flag.");

  m.def(
      "out_json",
      [](const std::string& expr) { return json(biextra::out_structure(build(expr))).dump(); },
      py::arg("expr"), "Outer automorphism report as a JSON string.");

  m.def(
      "decompose_json",
      [](const std::string& expr) {
        const biextra::Group g = build(expr);
        return json(biextra::decomposition_report(g, biextra::decompose(g))).dump();
      },
      py::arg("expr"), "Decomposition into rank-2 pieces, as a JSON string.");

  m.def(
      "isom_certificate_json",
      [](const std::string& source, const std::string& target, std::uint64_t seed) {
        return json(biextra::certify(biextra::build_isomorphism(build(source), build(target)),
                                     seed))
            .dump();
      },
      py::arg("source"), py::arg("target"), py::arg("seed") = 0,
      "Build and certify an isomorphism; raises ValueError when the types differ.");

  m.def(
      "fingerprint_json",
      [](const std::string& expr) { return json(biextra::fingerprint(build(expr))).dump(); },
      py::arg("expr"), "Classification fingerprint as a JSON string.");

  m.def(
      "axioms_passed",
      [](const std::string& expr, std::uint64_t seed) {
        return biextra::verify_axioms(build(expr), seed).all_passed();
      },
      py::arg("expr"), py::arg("seed") = 0, "Run the defining-axiom catalog.");

  m.def(
      "axioms_json",
      [](const std::string& expr, std::uint64_t seed) {
        return json(biextra::verify_axioms(build(expr), seed)).dump();
      },
      py::arg("expr"), py::arg("seed") = 0, "Defining-axiom report as a JSON string.");

  m.def(
      "verify_suite_json",
      [](int rank, std::uint64_t seed) { return json(biextra::verify_suite(rank, seed)).dump(); },
      py::arg("rank"), py::arg("seed") = 0,
      "Run the full invariant suite for both types at a rank; JSON report.");
}
