#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "baire/bars.hpp"
#include "baire/cantor.hpp"
#include "baire/catalog.hpp"
#include "baire/config.hpp"
#include "baire/nbhd.hpp"
#include "baire/seq.hpp"
#include "baire/tree.hpp"
#include "baire/wire.hpp"

namespace py = pybind11;
using namespace baire;

namespace {

std::string seq_repr(const FiniteSeq& a) {
  std::string out = "FiniteSeq([";
  for (Nat i = 0; i < a.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(a.at(i));
  }
  return out + "])";
}

InductiveAlgebra<py::object> make_algebra(py::function on_leaf, py::function on_node) {
  InductiveAlgebra<py::object> alg;
  alg.on_leaf = [on_leaf](const FiniteSeq& path, Nat value) -> py::object { return on_leaf(path, value); };
  alg.on_node = [on_node](const FiniteSeq& path, const std::map<Nat, py::object>& support,
                          const py::object& fallback) -> py::object {
    py::dict d;
    for (const auto& [n, r] : support) d[py::int_(n)] = r;
    return on_node(path, d, fallback);
  };
  return alg;
}

}  // namespace

PYBIND11_MODULE(_baire, m) {
  m.doc() = "Decision trees, neighbourhood functions, and bar constructions on Baire space";

  py::register_exception<LeafHasNoChildren>(m, "LeafHasNoChildrenError");
  py::register_exception<DepthBudgetExceeded>(m, "DepthBudgetExceededError");
  py::register_exception<FuelExhausted>(m, "FuelExhaustedError");
  py::register_exception<DominationViolated>(m, "DominationViolatedError");
  py::register_exception<NonUniformDefault>(m, "NonUniformDefaultError");
  py::register_exception<NotBarWithinDepth>(m, "NotBarWithinDepthError");
  py::register_exception<PremiseViolated>(m, "PremiseViolatedError");
  py::register_exception<Overflow>(m, "OverflowError_");
  py::register_exception<ParseError>(m, "WireParseError");

  m.def("sg", &sg);
  m.def("monus", &monus);

  py::class_<FiniteSeq>(m, "FiniteSeq")
      .def(py::init<>())
      .def(py::init<std::vector<Nat>>())
      .def("__len__", &FiniteSeq::size)
      .def("__getitem__", [](const FiniteSeq& a, Nat i) {
        if (i >= a.size()) throw py::index_error();
        return a.at(i);
      })
      .def("__eq__", [](const FiniteSeq& a, const FiniteSeq& b) { return a == b; })
      .def("__add__", &FiniteSeq::operator+)
      .def("__repr__", &seq_repr)
      .def("append", &FiniteSeq::append)
      .def("prefix", &FiniteSeq::prefix)
      .def("is_prefix_of", &FiniteSeq::is_prefix_of)
      .def("items", [](const FiniteSeq& a) { return a.items(); });
  py::implicitly_convertible<py::list, FiniteSeq>();
  py::implicitly_convertible<py::tuple, FiniteSeq>();

  py::class_<Stream>(m, "Stream")
      .def_static("eventually_periodic", &Stream::eventually_periodic, py::arg("prefix"), py::arg("period"))
      .def_static("oracle", [](std::function<Nat(Nat)> fn) { return Stream::oracle(std::move(fn)); })
      .def_static("zeros", &Stream::zeros)
      .def_static("constant", &Stream::constant)
      .def("at", &Stream::at)
      .def("is_eventually_periodic", &Stream::is_eventually_periodic)
      .def("prefix", &Stream::ep_prefix)
      .def("period", &Stream::ep_period);

  m.def("take", &take, py::arg("stream"), py::arg("n"));
  m.def("extend", &extend, py::arg("prefix"), py::arg("stream"));

  py::class_<EvalResult>(m, "EvalResult")
      .def_readonly("value", &EvalResult::value)
      .def_readonly("consumed", &EvalResult::consumed)
      .def("__eq__", [](const EvalResult& a, const EvalResult& b) { return a == b; })
      .def("__repr__", [](const EvalResult& r) {
        return "EvalResult(value=" + std::to_string(r.value) + ", consumed=" + std::to_string(r.consumed) + ")";
      });

  py::class_<BrouwerTree>(m, "BrouwerTree")
      .def_static("leaf", &BrouwerTree::leaf)
      .def_static("node", &BrouwerTree::node, py::arg("children"), py::arg("default_child"))
      .def_static("from_json", [](const std::string& text) { return wire::parse_tree(wire::parse_text(text)); })
      .def("to_json", [](const BrouwerTree& t) { return wire::dumps(wire::tree_json(t)); })
      .def("is_leaf", &BrouwerTree::is_leaf)
      .def("leaf_value", &BrouwerTree::leaf_value)
      .def("child", &BrouwerTree::child)
      .def("depth", &BrouwerTree::depth)
      .def("__eq__", [](const BrouwerTree& a, const BrouwerTree& b) { return a == b; });

  m.def("eval", [](const BrouwerTree& t, const Stream& s) { return eval(t, s); });
  m.def("neighborhood_value", &neighborhood_value);
  m.def("is_secured", &is_secured);
  m.def("trim", &trim);
  m.def("bar_recursor", [](const BrouwerTree& t, py::function on_leaf, py::function on_node) {
    return bar_recursor<py::object>(t, make_algebra(std::move(on_leaf), std::move(on_node)));
  });

  py::class_<PointwiseFn>(m, "PointwiseFn")
      .def(py::init([](std::string name, std::function<Nat(const Stream&)> value,
                       std::function<Nat(const Stream&)> modulus) {
             return PointwiseFn{std::move(name), std::move(value), std::move(modulus)};
           }),
           py::arg("name"), py::arg("value"), py::arg("modulus"))
      .def_readonly("name", &PointwiseFn::name)
      .def("value", [](const PointwiseFn& f, const Stream& s) { return f.value(s); })
      .def("modulus", [](const PointwiseFn& f, const Stream& s) { return f.modulus(s); });

  m.def("head", &catalog::head);
  m.def("sum2", &catalog::sum2);
  m.def("constant_fn", &catalog::constant);
  m.def("index_fn", &catalog::index);

  py::class_<CheckReport> report(m, "CheckReport");
  py::enum_<CheckReport::Kind>(report, "Kind")
      .value("NONE", CheckReport::Kind::None)
      .value("BARRING", CheckReport::Kind::Barring)
      .value("CONSTANCY", CheckReport::Kind::Constancy);
  report.def_readonly("passed", &CheckReport::passed)
      .def_readonly("kind", &CheckReport::kind)
      .def_readonly("at", &CheckReport::at)
      .def_readonly("extension", &CheckReport::extension)
      .def_readonly("depth", &CheckReport::depth)
      .def_readonly("alphabet", &CheckReport::alphabet);

  py::class_<NeighborhoodFn>(m, "NeighborhoodFn")
      .def_static("from_tree", &NeighborhoodFn::from_tree)
      .def_static("from_json", [](const std::string& text) { return wire::parse_gamma(wire::parse_text(text)); })
      .def("apply", &NeighborhoodFn::apply);

  m.def("to_neighborhood", &to_neighborhood);
  m.def("check_k0", &check_k0, py::arg("gamma"), py::arg("depth"), py::arg("alphabet"));
  m.def("modulus_from_k0", &modulus_from_k0, py::arg("gamma"), py::arg("stream"), py::arg("fuel"));
  m.def("induced_eval", &induced_eval, py::arg("gamma"), py::arg("stream"), py::arg("fuel"));
  m.def("k0_from_modulus", &k0_from_modulus);
  m.def("saturate", &saturate);

  py::class_<CBarFn>(m, "CBarFn")
      .def_static("from_function",
                  [](std::function<Nat(const FiniteSeq&)> delta) { return CBarFn::from_function(std::move(delta)); })
      .def_static("from_json", [](const std::string& text) { return wire::parse_delta(wire::parse_text(text)); })
      .def("__call__", [](const CBarFn& d, const FiniteSeq& a) { return d(a); })
      .def("certified_stable", &CBarFn::certified_stable);

  m.def("delta_from_function", &delta_from_function);
  m.def("eval_k1", &eval_k1, py::arg("delta"), py::arg("stream"), py::arg("fuel"), py::arg("alphabet") = 4);
  m.def("upgrade_dominated", &upgrade_dominated, py::arg("tree"), py::arg("gamma"));

  py::class_<TruthTable>(m, "TruthTable")
      .def(py::init([](Nat arity, std::vector<Nat> outputs) { return TruthTable{arity, std::move(outputs)}; }),
           py::arg("arity"), py::arg("outputs"))
      .def_readonly("arity", &TruthTable::arity)
      .def_readonly("outputs", &TruthTable::outputs)
      .def("at", &TruthTable::at);

  m.def("tree_from_uniform", &tree_from_uniform);
  m.def("uniform_modulus", &uniform_modulus);
  m.def("is_binary_tree", &is_binary_tree);
  m.def("fan_bound", [](std::function<bool(const FiniteSeq&)> decide, Nat max_depth) {
    return fan_bound(DetachablePredicate{"", std::move(decide)}, max_depth);
  });
  m.def("cset_to_delta", [](std::function<bool(const FiniteSeq&)> decide) {
    return cset_to_delta(DetachablePredicate{"", std::move(decide)});
  });
  m.def("delta_to_cset", [](const CBarFn& delta) { return delta_to_cset(delta).decide; });
  m.def("gamma_embed", &gamma_embed);
  m.def("gamma_embed_seq", &gamma_embed_seq);

  py::class_<BarVerdict>(m, "BarVerdict")
      .def_readonly("passed", &BarVerdict::passed)
      .def_readonly("witness", &BarVerdict::witness)
      .def_readonly("branching", &BarVerdict::branching)
      .def_readonly("depth", &BarVerdict::depth);

  m.def("is_bar", [](std::function<bool(const FiniteSeq&)> decide, Nat branching, Nat depth) {
    return is_bar(BarPredicate::detachable(std::move(decide)), branching, depth);
  });
  m.def("monotone_closure", [](std::function<bool(const FiniteSeq&)> decide) {
    return monotone_closure(BarPredicate::detachable(std::move(decide))).decide;
  });
  m.def("tree_from_cbar", &tree_from_cbar, py::arg("delta"), py::arg("branching"), py::arg("fuel"));
  m.def("bar_from_relation", [](std::function<std::optional<Nat>(const FiniteSeq&)> secured) {
    return bar_from_relation(LocalRelation{std::move(secured)}).decide;
  });
  m.def("refine_relation",
        [](std::function<std::optional<Nat>(const FiniteSeq&)> secured, Nat branching, Nat fuel) {
          return refine_relation(LocalRelation{std::move(secured)}, branching, fuel);
        },
        py::arg("secured_value"), py::arg("branching"), py::arg("fuel"));

  py::enum_<Disjunct>(m, "Disjunct").value("Left", Disjunct::Left).value("Right", Disjunct::Right);

  py::class_<GadgetReport>(m, "GadgetReport")
      .def_readonly("bar", &GadgetReport::bar)
      .def_readonly("subset", &GadgetReport::subset)
      .def_readonly("inductive", &GadgetReport::inductive)
      .def_readonly("disjunct", &GadgetReport::disjunct)
      .def_readonly("horizon", &GadgetReport::horizon);

  m.def("llpo_gadget", [](const FiniteSeq& alpha, const FiniteSeq& beta) {
    return llpo_gadget(LlpoInstance{alpha, beta});
  });

  m.def("canonicalize", &wire::canonicalize);
  m.def("depth_cap", &config::depth_cap);
  m.def("set_depth_cap", &config::set_depth_cap);
}
