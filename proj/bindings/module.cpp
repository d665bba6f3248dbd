#include "torvex/action.hpp"
#include "torvex/report_io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

namespace py = pybind11;
using namespace torvex;

namespace {

// Owns the whole object graph so Python sees one handle with value-like API.
struct PyInstance {
    AlgebraTable alg;
    Lattice lat;
    std::unique_ptr<HighestWeightModule> mod;
    std::unique_ptr<FockOps> ops;
    std::unique_ptr<ToroidalAlgebra> talg;
    std::unique_ptr<ModuleAction> action;

    PyInstance(const std::string& algebra, int n, const std::string& level,
               const std::vector<std::string>& weight, const std::string& p_eig, int depth)
        : alg(load_algebra(algebra)), lat(n)
    {
        std::vector<Rat> lambda(std::size_t(alg.rank), Rat(0));
        for (std::size_t i = 0; i < weight.size() && i < lambda.size(); ++i)
            lambda[i] = rat_from_string(weight[i]);
        mod = std::make_unique<HighestWeightModule>(alg, lambda, rat_from_string(level),
                                                    rat_from_string(p_eig), depth);
        ops = std::make_unique<FockOps>(lat);
        talg = std::make_unique<ToroidalAlgebra>(alg, n);
        action = std::make_unique<ModuleAction>(*talg, *mod, *ops);
    }
};

py::dict report_dict(const Report& r)
{
    py::dict d;
    d["suite"] = r.suite;
    d["checked"] = r.checked;
    d["passed"] = r.passed();
    py::list v;
    for (auto& x : r.violations) {
        py::dict e;
        e["identity"] = x.identity;
        e["witness"] = x.witness;
        v.append(e);
    }
    d["violations"] = v;
    return d;
}

std::vector<std::string> rats(const std::vector<Rat>& v)
{
    std::vector<std::string> out;
    for (auto& r : v)
        out.push_back(rat_to_string(r));
    return out;
}

} // namespace

PYBIND11_MODULE(_torvex, m)
{
    m.doc() = "exact toroidal-superalgebra module calculator";

    m.def("builtin_algebras", &builtin_algebra_names);
    m.def("verify_algebra", [](const std::string& name) {
        return report_dict(verify_algebra(load_algebra(name)));
    });

    py::class_<PyInstance>(m, "Instance")
        .def(py::init<const std::string&, int, const std::string&,
                      const std::vector<std::string>&, const std::string&, int>(),
             py::arg("algebra") = "sl2", py::arg("n") = 2, py::arg("level") = "1",
             py::arg("weight") = std::vector<std::string>{}, py::arg("p_eig") = "0",
             py::arg("depth") = 4)
        .def_property_readonly("level",
                               [](const PyInstance& s) { return rat_to_string(s.mod->level()); })
        .def("verify_affine",
             [](const PyInstance& s, int window, int sample_depth) {
                 auto samples = s.mod->basis_up_to_depth(sample_depth);
                 return report_dict(verify_affine_relations(*s.mod, window, samples));
             },
             py::arg("window") = 2, py::arg("sample_depth") = 2)
        .def("verify_fock",
             [](const PyInstance& s, int depth, int window) {
                 FockSweepParams p;
                 p.depth = depth;
                 p.window = window;
                 return report_dict(verify_fock_identities(*s.ops, p));
             },
             py::arg("depth") = 3, py::arg("window") = 2)
        .def("verify_toroidal",
             [](const PyInstance& s, int window, int jacobi_window) {
                 return report_dict(verify_toroidal_algebra(*s.talg, window, jacobi_window));
             },
             py::arg("window") = 1, py::arg("jacobi_window") = 1)
        .def("verify_action",
             [](const PyInstance& s, int window, int sample_depth) {
                 auto samples = enumerate_tensor_basis(*s.action, sample_depth, 1, true);
                 return report_dict(verify_toroidal_relations(*s.action, window, samples));
             },
             py::arg("window") = 1, py::arg("sample_depth") = 1)
        .def("verify_sector",
             [](const PyInstance& s, const std::vector<int>& lam, int window,
                int sample_depth) {
                 auto all = enumerate_tensor_basis(*s.action, sample_depth, 1, true);
                 std::vector<TensorMonomial> zs;
                 for (auto& m : all) {
                     bool ok = true;
                     for (int i = s.lat.dim() / 2; i < s.lat.dim(); ++i)
                         if (m.fock.gamma[std::size_t(i)] != 0)
                             ok = false;
                     if (ok)
                         zs.push_back(m);
                 }
                 return report_dict(verify_intertwining(*s.action, lam, window, zs));
             },
             py::arg("lam"), py::arg("window") = 1, py::arg("sample_depth") = 1)
        .def("weight_table",
             [](const PyInstance& s, int sample_depth, int affine_depth, int fock_depth) {
                 WeightCaps caps;
                 caps.affine_depth = affine_depth;
                 caps.fock_depth = fock_depth;
                 auto basis = enumerate_tensor_basis(*s.action, sample_depth, 1, true);
                 std::map<TensorWeight, long long> seen;
                 for (auto& m : basis)
                     ++seen[s.action->weight_of(m)];
                 py::list rows;
                 for (auto& [w, _] : seen) {
                     auto ws = weight_space(*s.action, w, caps);
                     py::dict row;
                     row["h_weight"] = rats(w.h);
                     row["k_eigs"] = rats(w.k);
                     row["d_eigs"] = rats(w.d);
                     row["dim"] = ws.basis.size();
                     row["counted_dim"] = ws.counted_dimension;
                     row["certified"] = ws.certified;
                     rows.append(row);
                 }
                 return rows;
             },
             py::arg("sample_depth") = 2, py::arg("affine_depth") = 4,
             py::arg("fock_depth") = 4);
}
