#include "cli/job.hpp"
#include "pfzero/algebra/eval.hpp"
#include "pfzero/algebra/text.hpp"
#include "pfzero/numerics/continuation.hpp"
#include "pfzero/numerics/residual.hpp"
#include "pfzero/petrov/petrov.hpp"
#include "pfzero/zerocount/bounds.hpp"
#include "pfzero/zerocount/calculators.hpp"

#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace pfzero;
using Complex = std::complex<double>;

namespace {

hamiltonian::Hamiltonian load(const std::string& h) { return hamiltonian::make_hamiltonian(algebra::parse_polynomial(h)); }

std::vector<std::vector<std::string>> matrix(const algebra::PolyMatrix& m) {
    std::vector<std::vector<std::string>> out(static_cast<std::size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out[static_cast<std::size_t>(i)].push_back(m(i, j).to_string());
    return out;
}

py::dict ode_dict(const pfsystem::ScalarODE& ode) {
    py::list coeffs, poles, trues;
    for (const auto& c : ode.coeffs) coeffs.append(py::make_tuple(c.num().to_string(), c.den().to_string()));
    for (const auto& p : ode.pole_set) poles.append(p.value);
    for (const auto& p : ode.true_singularities) trues.append(p.value);
    py::dict d;
    d["order"] = ode.order;
    d["coeffs"] = coeffs;
    d["denominator"] = ode.denominator.to_string();
    d["pole_set"] = poles;
    d["true_singularities"] = trues;
    return d;
}

std::vector<algebra::MultiPoly> polys(const std::vector<std::string>& texts) {
    std::vector<algebra::MultiPoly> out;
    for (const auto& s : texts) out.push_back(algebra::parse_polynomial(s));
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Picard-Fuchs systems and zero counting of Abelian integrals";

    // Owned by the module; released so no destructor runs after finalization.
    static py::handle error_type = py::exception<Error>(m, "PfzeroError").release();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
            exc.attr("kind") = to_string(e.kind());
            exc.attr("exit_code") = cli::exit_code(e.kind());
            PyErr_SetObject(error_type.ptr(), exc.ptr());
        }
    });

    m.attr("SCHEMA_VERSION") = cli::kSchemaVersion;

    m.def("parse_polynomial", [](const std::string& s) { return algebra::parse_polynomial(s).to_string(); },
          "Canonical text of a polynomial in x, y, t.");
    m.def("set_precision_bits", &algebra::set_default_precision_bits, py::arg("bits"));
    m.def("precision_bits", &algebra::default_precision_bits);

    m.def("is_regular_at_infinity", [](const std::string& h) { return hamiltonian::is_regular_at_infinity(load(h)); });
    m.def("critical_values", [](const std::string& h) {
        std::vector<Complex> out;
        for (const auto& c : hamiltonian::critical_values(load(h)).critical_values) out.push_back(c.value);
        return out;
    });
    m.def("monomial_basis", [](const std::string& h) {
        std::vector<std::pair<int, int>> out;
        for (const auto& mono : hamiltonian::monomial_basis(load(h)).monomials)
            out.emplace_back(mono[algebra::Var::x], mono[algebra::Var::y]);
        return out;
    });

    m.def(
        "decompose",
        [](const std::string& h, const std::string& p, const std::string& q) {
            const auto H = load(h);
            const auto forms = pfsystem::make_basis_forms(hamiltonian::monomial_basis(H));
            const petrov::OneForm w{algebra::parse_polynomial(p), algebra::parse_polynomial(q)};
            const auto dec = petrov::petrov_decompose(w, H, forms);
            py::dict d;
            std::vector<std::string> coeffs;
            for (const auto& c : dec.coeffs) coeffs.push_back(c.to_string());
            d["coeffs"] = coeffs;
            d["A"] = dec.A.to_string();
            d["B"] = dec.B.to_string();
            d["exact"] = petrov::reconstruct(dec, H, forms) == w;
            return d;
        },
        py::arg("H"), py::arg("P"), py::arg("Q"), "omega = sum c_i(H) omega_i + dA + B dH for omega = P dx + Q dy.");

    m.def("pf_system", [](const std::string& h) {
        const auto sys = pfsystem::assemble_pf_system(load(h));
        py::dict d;
        d["dim"] = sys.dim;
        d["a"] = sys.a.to_string();
        d["A"] = matrix(sys.A);
        d["K"] = matrix(sys.K);
        d["L"] = matrix(sys.L);
        return d;
    });

    m.def(
        "scalar_ode",
        [](const std::string& h, int component, std::optional<std::vector<std::string>> mu) {
            const auto sys = pfsystem::assemble_pf_system(load(h));
            return ode_dict(mu ? pfsystem::augment_and_reduce(sys, polys(*mu)) : pfsystem::derive_scalar_ode(sys, component));
        },
        py::arg("H"), py::arg("component") = 0, py::arg("mu") = py::none());

    m.def(
        "continue_periods",
        [](const std::string& h, const std::vector<Complex>& path, const std::vector<Complex>& initial) {
            const auto sys = pfsystem::assemble_pf_system(load(h));
            std::vector<std::vector<Complex>> out;
            for (const auto& s : numerics::integrate_pf_numeric(sys, path, {path.at(0), initial, 0.0}))
                out.push_back(s.periods);
            return out;
        },
        py::arg("H"), py::arg("path"), py::arg("initial"), "Period vectors continued along a polyline of levels.");

    m.def(
        "residual",
        [](const std::string& h, const std::vector<double>& ts) {
            const auto H = load(h);
            return numerics::residual_check(pfsystem::assemble_pf_system(H), H, ts).max_relative;
        },
        py::arg("H"), py::arg("t_samples"));

    m.def("yakovenko_varbound", &zerocount::yakovenko_varbound, py::arg("n"), py::arg("l"), py::arg("C"));
    m.def(
        "winding_count",
        [](const std::function<std::vector<Complex>(int)>& sample) { return zerocount::winding_count(sample); },
        py::arg("sample"), "Winding number about 0 of the closed curve sample(n) (n equispaced points).");
    m.def(
        "hilbert_bound",
        [](int d, const std::string& rho, double c) {
            const auto v = zerocount::hilbert_bound(d, algebra::parse_rational(rho), c);
            py::dict out;
            out["exact"] = v.exact ? py::cast(*v.exact) : py::none();
            out["log10"] = v.log10 ? py::cast(*v.log10) : py::none();
            out["loglog10"] = v.loglog10 ? py::cast(*v.loglog10) : py::none();
            return out;
        },
        py::arg("d"), py::arg("rho"), py::arg("c") = 1.0);

    m.def(
        "run_job",
        [](const std::string& command, const py::dict& options) {
            cli::Job job;
            job.command = command;
            for (const auto& [k, v] : options) {
                const auto key = py::cast<std::string>(k);
                if (key == "hamiltonian" || key == "H") job.hamiltonian = py::cast<std::string>(v);
                else if (key == "omega_p") job.omega_p = py::cast<std::string>(v);
                else if (key == "omega_q") job.omega_q = py::cast<std::string>(v);
                else if (key == "component") job.component = py::cast<int>(v);
                else if (key == "mu") job.mu = py::cast<std::string>(v);
                else if (key == "domain") job.domain = py::cast<std::string>(v);
                else if (key == "rho") job.rho = py::cast<std::string>(py::str(v));
                else if (key == "rays") job.rays = py::cast<std::string>(v);
                else if (key == "mode") job.mode = py::cast<std::string>(v);
                else if (key == "tol") job.tol = py::cast<double>(v);
                else if (key == "relaxed_bounds") job.relaxed_bounds = py::cast<bool>(v);
                else if (key == "cycle") job.cycle = py::cast<int>(v);
                else if (key == "samples") job.samples = py::cast<std::string>(v);
                else if (key == "count") job.count = py::cast<int>(v);
                else if (key == "threshold") job.threshold = py::cast<double>(v);
                else if (key == "path") job.path = py::cast<std::string>(v);
                else if (key == "seed") job.seed = py::cast<std::string>(v);
                else if (key == "degree") job.degree = py::cast<int>(v);
                else if (key == "c") job.c = py::cast<double>(v);
                else if (key == "cp") job.c_p = py::cast<double>(v);
                else if (key == "n") job.order = py::cast<int>(v);
                else if (key == "M") job.height = py::cast<std::string>(py::str(v));
                else if (key == "p") job.params = py::cast<int>(v);
                else throw py::key_error("unknown option '" + key + "'");
            }
            const auto out = cli::run(job);
            return py::make_tuple(out.status, out.body, out.notices);
        },
        py::arg("command"), py::arg("options") = py::dict(),
        "Same as the command-line tool: returns (exit status, document text, notices).");
}
