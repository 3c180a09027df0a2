#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <sstream>

#include "wbar/bisimplicial.hpp"
#include "wbar/bundle.hpp"
#include "wbar/errors.hpp"
#include "wbar/homology.hpp"
#include "wbar/loop_group.hpp"
#include "wbar/wbar.hpp"

namespace py = pybind11;
using namespace wbar;

namespace {

// Groups handed to Python keep their Cayley table alive through shared_ptr,
// so a Wbar object can hold on to its simplicial group.
struct PyGroup {
    std::shared_ptr<const FiniteGroup> G;
    std::shared_ptr<const DiscreteSimplicialGroup> K;

    explicit PyGroup(FiniteGroup g)
        : G(std::make_shared<const FiniteGroup>(std::move(g))), K(std::make_shared<const DiscreteSimplicialGroup>(G)) {}
};

struct PyWbar {
    std::shared_ptr<const DiscreteSimplicialGroup> K;
    Wbar W;
    PyWbar(const PyGroup& g, const TauDescriptor& tau) : K(g.K), W(*K, tau) {}
};

TauDescriptor as_tau(const std::string& s) { return TauDescriptor::parse(s); }

py::dict verdict_dict(const Verdict& v) {
    py::dict d;
    d["map"] = v.map;
    d["max_degree"] = v.max_degree;
    d["checked"] = v.checked;
    d["passed"] = v.passed;
    d["counterexample"] = v.counterexample ? py::cast(*v.counterexample) : py::none();
    return d;
}

py::list homology_list(const std::vector<HomologyGroup>& H) {
    py::list out;
    for (const auto& h : H) {
        py::list torsion;
        for (const auto& t : h.torsion) torsion.append(py::int_(py::str(t.str())));
        out.append(py::make_tuple(h.betti, torsion));
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Simplicial groups, W-bar and its tau-subcomplexes";

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<InvalidInput>(m, "InvalidInput", base.ptr());
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());
    py::register_exception<InsufficientTruncation>(m, "InsufficientTruncation", base.ptr());
    auto vf = py::register_exception<VerificationFailure>(m, "VerificationFailure", base.ptr());
    py::register_exception<NotSimplicial>(m, "NotSimplicial", vf.ptr());

    py::class_<OrdinalMap>(m, "OrdinalMap")
        .def(py::init<std::vector<int>, int>(), py::arg("values"), py::arg("codomain_size"))
        .def_static("identity", &OrdinalMap::identity)
        .def_property_readonly("values", &OrdinalMap::values)
        .def_property_readonly("source_dim", &OrdinalMap::source_dim)
        .def_property_readonly("target_dim", &OrdinalMap::target_dim)
        .def("is_injective", &OrdinalMap::is_injective)
        .def("is_surjective", &OrdinalMap::is_surjective)
        .def("__call__", &OrdinalMap::operator())
        .def("__eq__", [](const OrdinalMap& a, const OrdinalMap& b) { return a == b; })
        .def("__hash__", [](const OrdinalMap& f) { return py::hash(py::make_tuple(py::tuple(py::cast(f.values())), f.codomain_size())); })
        .def("__repr__", &OrdinalMap::str);
    m.def("compose", &compose, py::arg("f"), py::arg("g"), "g after f");
    m.def("coface", &coface, py::arg("i"), py::arg("n"));
    m.def("codegeneracy", &codegeneracy, py::arg("i"), py::arg("n"));
    m.def("enumerate_maps", &enumerate_maps, py::arg("m"), py::arg("n"));
    m.def("count_maps", &count_maps, py::arg("m"), py::arg("n"));

    py::class_<PyGroup>(m, "Group")
        .def_static("builtin", [](const std::string& label) { return PyGroup(FiniteGroup::builtin(label)); })
        .def_static("from_table", [](std::vector<std::vector<Element>> t, std::string name) {
            return PyGroup(FiniteGroup(std::move(t), std::move(name)));
        }, py::arg("table"), py::arg("name") = "G")
        .def_static("from_permutations", [](const std::vector<std::vector<int>>& gens, std::string name) {
            return PyGroup(FiniteGroup::from_permutations(gens, std::move(name)));
        }, py::arg("generators"), py::arg("name") = "G")
        .def_property_readonly("order", [](const PyGroup& g) { return g.G->order(); })
        .def_property_readonly("name", [](const PyGroup& g) { return g.G->name(); })
        .def("multiply", [](const PyGroup& g, Element a, Element b) { return g.G->multiply(a, b); })
        .def("inverse", [](const PyGroup& g, Element a) { return g.G->inverse(a); })
        .def("commute", [](const PyGroup& g, Element a, Element b) { return g.G->commute(a, b); })
        .def("is_abelian", [](const PyGroup& g) { return g.G->is_abelian(); })
        .def("admissible", [](const PyGroup& g, const std::string& tau, const std::vector<Element>& tuple) {
            return tuple_admissible(as_tau(tau), *g.G, tuple);
        }, py::arg("tau"), py::arg("tuple"))
        .def("__repr__", [](const PyGroup& g) { return "<Group " + g.G->name() + " of order " + std::to_string(g.G->order()) + ">"; });

    py::class_<PyWbar>(m, "Wbar")
        .def(py::init([](const PyGroup& g, const std::string& tau) { return std::make_unique<PyWbar>(g, as_tau(tau)); }),
             py::arg("group"), py::arg("tau") = "free")
        .def("simplices", [](const PyWbar& w, int k) { return w.W.simplices(k); })
        .def("count", [](const PyWbar& w, int k) { return w.W.count(k); })
        .def("member", [](const PyWbar& w, int k, const Wbar::Simplex& x) { return w.W.member(k, x); })
        .def("face", [](const PyWbar& w, int k, int i, const Wbar::Simplex& x) { return w.W.face(k, i, x); })
        .def("degeneracy", [](const PyWbar& w, int k, int i, const Wbar::Simplex& x) { return w.W.degeneracy(k, i, x); })
        .def("homology", [](const PyWbar& w, int truncation, int i_max) {
            return homology_list(model_homology(w.W, truncation, i_max));
        }, py::arg("truncation"), py::arg("i_max"));

    m.def("wbar_counts", [](const PyGroup& g, const std::string& tau, int k_max) {
        return wbar_counts(*g.K, as_tau(tau), k_max);
    }, py::arg("group"), py::arg("tau") = "free", py::arg("k_max") = 3);

    m.def("verify_epsilon", [](int k, int max_level) { return verdict_dict(Epsilon(k, max_level).verify()); },
          py::arg("k"), py::arg("max_level") = 4);
    m.def("verify_tuple_bijection", [](const PyGroup& g, int k, int max_level) {
        return verdict_dict(verify_tuple_bijection(*g.K, k, max_level));
    }, py::arg("group"), py::arg("k"), py::arg("max_level") = 3);
    m.def("verify_filtration", [](const PyGroup& g, int q_max, int max_degree) {
        return verdict_dict(verify_filtration(*g.K, q_max, max_degree));
    }, py::arg("group"), py::arg("q_max") = 3, py::arg("max_degree") = 3);
    m.def("verify_zigzag", [](const PyGroup& g, const std::string& tau, int cap, int max_degree) {
        Verdict v;
        {
            py::gil_scoped_release release;
            v = verify_zigzag(*g.K, as_tau(tau), cap, max_degree);
        }
        return verdict_dict(v);
    }, py::arg("group"), py::arg("tau") = "free", py::arg("cap") = 1, py::arg("max_degree") = 2);

    // Bundles travel as JSON text; the Python side wraps them in dicts.
    m.def("random_bundle_json", [](const PyGroup& g, int max_dim, std::uint64_t seed) {
        auto data = random_classified_base(*g.K, max_dim, seed);
        return bundle_to_json(bundle_from_classifying_map(data.base, *g.K, data.r)).dump();
    }, py::arg("group"), py::arg("max_dim") = 2, py::arg("seed") = 0);
    m.def("verify_bundle_json", [](const std::string& text) {
        const auto data = bundle_from_json(nlohmann::json::parse(text));
        const auto E = data.make();
        return py::make_tuple(verdict_dict(verify_bundle(E, E.dim())), verdict_dict(verify_roundtrip(E)));
    }, py::arg("text"));
    m.def("atlas_check_json", [](const std::string& text, const std::string& tau, int L, int M) {
        const auto data = bundle_from_json(nlohmann::json::parse(text));
        const auto E = data.make();
        const auto alpha = transition_elements(E, canonical_pseudo_section(E));
        const auto a = tau_atlas_check(as_tau(tau), E, alpha, L, M);
        return py::make_tuple(verdict_dict(a.atlas), verdict_dict(a.factorization));
    }, py::arg("text"), py::arg("tau") = "gamma:2", py::arg("L") = 3, py::arg("M") = 2);
}
