#include "cli/job.hpp"

#include "cli/json_writer.hpp"
#include "pfzero/algebra/eval.hpp"
#include "pfzero/algebra/polyops.hpp"
#include "pfzero/algebra/text.hpp"
#include "pfzero/numerics/continuation.hpp"
#include "pfzero/numerics/residual.hpp"
#include "pfzero/petrov/petrov.hpp"
#include "pfzero/zerocount/bounds.hpp"
#include "pfzero/zerocount/calculators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace pfzero::cli {

using json = nlohmann::json;
using algebra::MultiPoly;
using algebra::Rational;
using algebra::RatFunc;
using Complex = std::complex<double>;
using hamiltonian::Hamiltonian;
using petrov::OneForm;

int exit_code(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::Usage:
    case ErrorKind::DegenerateInput:
    case ErrorKind::InvalidRays:
    case ErrorKind::InfeasibleClearance:
    case ErrorKind::InvalidRho:
        return kExitUsage;
    case ErrorKind::Inconsistent:
    case ErrorKind::DivisionByZeroPolynomial:
    case ErrorKind::UnsupportedDegree:
    case ErrorKind::NonIsolatedCritical:
    case ErrorKind::NotRegularAtInfinity:
    case ErrorKind::NotInIdeal:
    case ErrorKind::DecompositionFailed:
    case ErrorKind::DegenerateK:
        return kExitDegenerate;
    case ErrorKind::PoleOnSegment:
    case ErrorKind::Inconclusive:
    case ErrorKind::ZeroOnContour:
    case ErrorKind::NearCritical:
    case ErrorKind::NotCompactComponent:
    case ErrorKind::PathTooClose:
    case ErrorKind::StiffnessFailure:
        return kExitNumeric;
    }
    return kExitUsage;
}

namespace {

constexpr double kPi = std::numbers::pi;

[[noreturn]] void usage(const std::string& what) { throw Error(ErrorKind::Usage, what); }

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep))
        if (cur.find_first_not_of(" \t") != std::string::npos) out.push_back(cur);
    return out;
}

double parse_double(const std::string& s) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (s.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        usage("not a number: '" + s + "'");
    }
}

// "1.5", "-2i", "0.5+0.25i", "1e-3-2e-2i"
Complex parse_complex(std::string s) {
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
    if (s.empty()) usage("empty complex number");
    if (s.back() != 'i' && s.back() != 'j') return parse_double(s);
    s.pop_back();
    std::size_t cut = std::string::npos;
    for (std::size_t i = s.size(); i-- > 1;)
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            cut = i;
            break;
        }
    auto imag = [](const std::string& t) { return t.empty() || t == "+" ? 1.0 : t == "-" ? -1.0 : parse_double(t); };
    if (cut == std::string::npos) return {0.0, imag(s)};
    return {parse_double(s.substr(0, cut)), imag(s.substr(cut))};
}

json cjson(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json monomial_json(const algebra::Monomial& m) { return {{"a", m[algebra::Var::x]}, {"b", m[algebra::Var::y]}}; }

json ratfunc_json(const RatFunc& r) { return {{"num", r.num().to_string()}, {"den", r.den().to_string()}}; }

json enclosure_json(Complex v, double radius, int multiplicity) {
    return {{"re", v.real()}, {"im", v.imag()}, {"radius", radius}, {"multiplicity", multiplicity}};
}

json form_json(const OneForm& w) { return {{"P", w.P.to_string()}, {"Q", w.Q.to_string()}}; }

json matrix_json(const algebra::PolyMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(row);
    }
    return rows;
}

std::string wrap(const MultiPoly& p) {
    const std::string s = p.to_string();
    return p.size() > 1 ? "(" + s + ")" : s;
}

std::string derivative_symbol(int j) {
    if (j == 0) return "y";
    if (j <= 3) return "y" + std::string(static_cast<std::size_t>(j), '\'');
    return "y^(" + std::to_string(j) + ")";
}

// "y' - (1/t) y = 0"
std::string ode_equation(const pfsystem::ScalarODE& ode) {
    std::string s = derivative_symbol(ode.order);
    for (int j = ode.order - 1; j >= 0; --j) {
        RatFunc c = ode.coefficient_of_derivative(j);
        if (c.is_zero()) continue;
        bool negative = c.num().leading_coefficient() < 0;
        if (negative) c = -c;
        s += negative ? " - " : " + ";
        if (!(c == RatFunc(1))) s += "(" + (c.is_polynomial() ? c.num().to_string() : wrap(c.num()) + "/" + wrap(c.den())) + ") ";
        s += derivative_symbol(j);
    }
    return s + " = 0";
}

json ode_json(const pfsystem::ScalarODE& ode) {
    json coeffs = json::array();
    for (const auto& c : ode.coeffs) coeffs.push_back(ratfunc_json(c));
    json poles = json::array(), trues = json::array();
    for (const auto& p : ode.pole_set) poles.push_back(enclosure_json(p.value, p.radius, p.multiplicity));
    for (const auto& p : ode.true_singularities) trues.push_back(enclosure_json(p.value, p.radius, p.multiplicity));
    return {{"order", ode.order},
            {"coeffs", coeffs},
            {"coeffs_layout", "coeffs[i] multiplies y^(order-1-i) in the monic equation"},
            {"equation", ode_equation(ode)},
            {"denominator", ode.denominator.to_string()},
            {"pole_set", poles},
            {"true_singularities", trues}};
}

Hamiltonian load_hamiltonian(const Job& job) {
    if (job.hamiltonian.empty()) usage("a Hamiltonian is required (-H)");
    return hamiltonian::make_hamiltonian(algebra::parse_polynomial(job.hamiltonian));
}

std::vector<MultiPoly> parse_mu(const std::string& text) {
    std::vector<MultiPoly> mu;
    for (const auto& s : split(text, ',')) mu.push_back(algebra::parse_polynomial(s));
    return mu;
}

struct OdeChoice {
    pfsystem::ScalarODE ode;
    std::string paper_eq;
    std::vector<MultiPoly> weights; // I_ode = sum weights_i(t) I_i
};

OdeChoice choose_ode(const pfsystem::PFSystem& sys, const Job& job) {
    OdeChoice out;
    if (!job.mu.empty()) {
        out.weights = parse_mu(job.mu);
        if (static_cast<int>(out.weights.size()) != sys.dim)
            usage("--mu needs " + std::to_string(sys.dim) + " entries, one per basis form");
        out.ode = pfsystem::augment_and_reduce(sys, out.weights);
        out.paper_eq = "3.22";
    } else {
        if (job.component < 0 || job.component >= sys.dim)
            usage("--component must lie in [0, " + std::to_string(sys.dim - 1) + "]");
        out.ode = pfsystem::derive_scalar_ode(sys, job.component);
        out.weights.assign(static_cast<std::size_t>(sys.dim), MultiPoly());
        out.weights[static_cast<std::size_t>(job.component)] = MultiPoly(1);
        out.paper_eq = "3.20";
    }
    return out;
}

json envelope(const Job& job) {
    return {{"schema_version", kSchemaVersion}, {"command", job.command}, {"paper_eq", json::object()}};
}

// Fields are flat; doc["paper_eq"] maps each artifact field to its source.
void put(json& doc, const std::string& key, json value, const std::string& paper_eq = {}) {
    doc[key] = std::move(value);
    if (!paper_eq.empty()) doc["paper_eq"][key] = paper_eq;
}

// ---- commands ------------------------------------------------------------

json cmd_analyze(const Job& job) {
    const Hamiltonian h = load_hamiltonian(job);
    json out = envelope(job);
    const bool regular = hamiltonian::is_regular_at_infinity(h);
    put(out, "hamiltonian", h.poly.to_string());
    put(out, "degree", h.degree);
    put(out, "highest_part", h.highest_part.to_string(), "Thm 3.3");
    put(out, "regular_at_infinity", regular, "§0");
    if (!regular) throw Error(ErrorKind::NotRegularAtInfinity, "highest homogeneous part has a repeated linear factor");
    const auto sigma = hamiltonian::critical_values(h);
    json cvs = json::array();
    for (const auto& c : sigma.critical_values) cvs.push_back(enclosure_json(c.value, c.radius, c.multiplicity));
    put(out, "critical_values", cvs, "§0");
    put(out, "critical_count_with_multiplicity", sigma.count_with_multiplicity);
    put(out, "may_miss_atypical", sigma.may_miss_atypical);
    put(out, "eliminant", sigma.eliminant.to_string());
    const auto basis = hamiltonian::monomial_basis(h);
    json mons = json::array(), diagram = json::array();
    for (const auto& m : basis.monomials) mons.push_back(monomial_json(m));
    for (const auto& m : basis.leading_term_diagram) diagram.push_back(monomial_json(m));
    put(out, "basis", mons, "Lemma 3.4");
    put(out, "leading_term_diagram", diagram, "Lemma 3.4");
    return out;
}

json cmd_decompose(const Job& job) {
    const Hamiltonian h = load_hamiltonian(job);
    const OneForm omega{algebra::parse_polynomial(job.omega_p), algebra::parse_polynomial(job.omega_q)};
    if (omega.P.degree_in(algebra::Var::t) > 0 || omega.Q.degree_in(algebra::Var::t) > 0)
        usage("the form must be polynomial in x and y only");
    const auto forms = pfsystem::make_basis_forms(hamiltonian::monomial_basis(h));
    const auto dec = petrov::petrov_decompose(omega, h, forms);
    json coeffs = json::array(), basis = json::array();
    std::string text = "omega =";
    bool any = false;
    for (std::size_t i = 0; i < dec.coeffs.size(); ++i) {
        coeffs.push_back(dec.coeffs[i].to_string());
        basis.push_back(form_json(forms[i]));
        if (dec.coeffs[i].is_zero()) continue;
        text += (any ? " + " : " ") + ("(" + dec.coeffs[i].to_string() + ")[t=H]*omega_") + std::to_string(i);
        any = true;
    }
    text += (any ? " + " : " ") + std::string("d(") + dec.A.to_string() + ") + (" + dec.B.to_string() + ") dH";
    json out = envelope(job);
    put(out, "form", form_json(omega));
    put(out, "basis_forms", basis, "Thm 3.3");
    put(out, "coeffs", coeffs, "3.8");
    put(out, "A", dec.A.to_string(), "3.8");
    put(out, "B", dec.B.to_string(), "3.8");
    put(out, "ansatz_degree", dec.ansatz_degree);
    put(out, "text", text);
    put(out, "reconstruction_exact", petrov::reconstruct(dec, h, forms) == omega);
    return out;
}

json cmd_pf_system(const Job& job) {
    const auto sys = pfsystem::assemble_pf_system(load_hamiltonian(job));
    json out = envelope(job);
    json forms = json::array();
    for (const auto& w : sys.forms) forms.push_back(form_json(w));
    put(out, "dim", sys.dim);
    put(out, "basis_forms", forms, "Thm 3.3");
    put(out, "a", sys.a.to_string(), "3.15");
    put(out, "A_entries", matrix_json(sys.A), "3.15");
    put(out, "K", matrix_json(sys.K), "3.13");
    put(out, "L", matrix_json(sys.L), "3.13");
    // The nominal degree d(d-1) of the Gelfand-Leray forms is already too
    // small for d = 2, so the achieved degree is reported next to it.
    int gl_degree = 0;
    for (const auto& w : sys.forms) gl_degree = std::max(gl_degree, pfsystem::gelfand_leray_rhs(sys.H, w).degree());
    const int nominal = sys.H.degree * (sys.H.degree - 1);
    put(out, "gelfand_leray",
        {{"max_degree", gl_degree}, {"nominal_degree", nominal}, {"exceeds_nominal", gl_degree > nominal}}, "3.7");
    return out;
}

void put_ode(json& out, const OdeChoice& choice) {
    const json fields = ode_json(choice.ode);
    for (const auto& [k, v] : fields.items()) put(out, k, v);
    for (const char* k : {"order", "coeffs", "equation"}) out["paper_eq"][k] = choice.paper_eq;
    for (const char* k : {"pole_set", "true_singularities"}) out["paper_eq"][k] = "§1";
}

json cmd_scalar_ode(const Job& job) {
    const auto sys = pfsystem::assemble_pf_system(load_hamiltonian(job));
    const auto choice = choose_ode(sys, job);
    json out = envelope(job);
    put_ode(out, choice);
    if (job.mu.empty()) put(out, "component", job.component);
    else {
        json mu = json::array();
        for (const auto& m : choice.weights) mu.push_back(m.to_string());
        put(out, "mu", mu, "3.22");
    }
    return out;
}

zerocount::Region parse_region(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) usage("domain must be disc:cx,cy,r or poly:x1,y1;x2,y2;...");
    const std::string kind = text.substr(0, colon), body = text.substr(colon + 1);
    if (kind == "disc") {
        const auto v = split(body, ',');
        if (v.size() != 3) usage("disc domain needs cx,cy,r");
        return zerocount::Disc{{parse_double(v[0]), parse_double(v[1])}, parse_double(v[2])};
    }
    if (kind == "poly") {
        zerocount::Polygon p;
        for (const auto& vertex : split(body, ';')) {
            const auto v = split(vertex, ',');
            if (v.size() != 2) usage("polygon vertices are x,y pairs separated by ';'");
            p.vertices.emplace_back(parse_double(v[0]), parse_double(v[1]));
        }
        return p;
    }
    usage("unknown domain kind '" + kind + "'");
}

json region_json(const zerocount::Region& r) {
    if (const auto* d = std::get_if<zerocount::Disc>(&r)) return {{"kind", "disc"}, {"center", cjson(d->center)}, {"radius", d->radius}};
    json vs = json::array();
    for (const Complex& v : std::get<zerocount::Polygon>(r).vertices) vs.push_back(cjson(v));
    return {{"kind", "poly"}, {"vertices", vs}};
}

Rational rho_or_default(const Job& job, Output& io) {
    if (job.rho.empty()) {
        io.notices.push_back("no --rho given; using the default rho = 0.1");
        return Rational(1, 10);
    }
    const Rational r = algebra::parse_rational(job.rho);
    return r;
}

// Height of the ODE: largest integer coefficient of the numerators and
// common denominator after clearing denominators.
Rational ode_height(const pfsystem::ScalarODE& ode) {
    const MultiPoly& den = ode.denominator;
    std::vector<MultiPoly> polys{den};
    for (const auto& c : ode.coeffs) polys.push_back(algebra::divide_or_throw(den, c.den()) * c.num());
    algebra::Integer l(1);
    for (const auto& p : polys)
        for (const auto& [m, v] : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    Rational h(0);
    for (const auto& p : polys)
        for (const auto& [m, v] : p.terms()) h = std::max(h, Rational(abs(v * l)));
    return h;
}

json calculator_json(const zerocount::CalculatorValue& v) {
    json j = {{"formula", v.formula}, {"note", v.note}};
    j["exact"] = v.exact ? json(*v.exact) : json(nullptr);
    j["log10"] = v.log10 ? json(*v.log10) : json(nullptr);
    j["loglog10"] = v.loglog10 ? json(*v.loglog10) : json(nullptr);
    return j;
}

// Winding number of sum_i w_i(t) I_i(t) around the region boundary, with I
// continued by the PF system from a lifted cycle at the first boundary point.
int numeric_count(const pfsystem::PFSystem& sys, const zerocount::Region& region, const std::vector<MultiPoly>& weights,
                  int cycle_index, const zerocount::WindingOptions& wopt) {
    auto contour = [&](int n) {
        std::vector<Complex> pts;
        if (const auto* d = std::get_if<zerocount::Disc>(&region)) {
            for (int k = 0; k < n; ++k) pts.push_back(d->center + std::polar(d->radius, 2 * kPi * k / n));
            return pts;
        }
        const auto vs = zerocount::region_boundary(region, 0);
        std::vector<double> cum{0.0};
        for (std::size_t i = 0; i < vs.size(); ++i) cum.push_back(cum.back() + std::abs(vs[(i + 1) % vs.size()] - vs[i]));
        std::size_t e = 0;
        for (int k = 0; k < n; ++k) {
            const double s = cum.back() * k / n;
            while (cum[e + 1] < s) ++e;
            pts.push_back(vs[e] + (s - cum[e]) / (cum[e + 1] - cum[e]) * (vs[(e + 1) % vs.size()] - vs[e]));
        }
        return pts;
    };
    const Complex t0 = contour(1).front();
    const auto cycles = numerics::lifted_cycles(sys.H, t0);
    if (cycles.empty()) throw Error(ErrorKind::NotCompactComponent, "no vanishing-type cycle found at the contour start");
    if (cycle_index < 0 || cycle_index >= static_cast<int>(cycles.size()))
        usage("--cycle must lie in [0, " + std::to_string(cycles.size() - 1) + "]");
    numerics::PeriodSample start{t0, {}, 0.0};
    for (const auto& p : numerics::lifted_periods(sys.H, t0, cycles[static_cast<std::size_t>(cycle_index)], sys.forms))
        start.periods.push_back(p.value);
    return zerocount::winding_count(
        [&](int n) {
            auto path = contour(n);
            path.push_back(path.front());
            const auto samples = numerics::integrate_pf_numeric(sys, path, start);
            std::vector<Complex> v;
            for (int k = 0; k < n; ++k) {
                const auto& s = samples[static_cast<std::size_t>(k)];
                Complex acc = 0;
                for (std::size_t i = 0; i < weights.size(); ++i)
                    if (!weights[i].is_zero()) acc += algebra::eval_complex(weights[i], {0.0, 0.0, s.t}) * s.periods[i];
                v.push_back(acc);
            }
            return v;
        },
        wopt);
}

json cmd_count_zeros(const Job& job, Output& io) {
    if (job.mode != "bound" && job.mode != "numeric" && job.mode != "both") usage("--mode must be bound, numeric or both");
    if (!(job.tol > 0)) usage("--tol must be positive");
    const auto sys = pfsystem::assemble_pf_system(load_hamiltonian(job));
    const auto choice = choose_ode(sys, job);
    const Rational rho = rho_or_default(job, io);

    zerocount::SimpleDomain dom;
    std::string domain_text = job.domain;
    if (domain_text.empty()) {
        io.notices.push_back(std::string("no --domain given; using the default domain ") + kDefaultDomain + " (disc centred at 0.5, radius 0.3)");
        domain_text = kDefaultDomain;
    }
    dom.region = parse_region(domain_text);
    dom.rho = rho.get_d();
    dom.relaxed_bounds = job.relaxed_bounds;
    for (const auto& s : choice.ode.true_singularities) dom.sigma.push_back(s.value);
    if (job.rays == "auto") {
        dom.ray_directions = zerocount::auto_rays(dom.sigma, dom.region);
    } else if (job.rays.rfind("angles:", 0) == 0) {
        for (const auto& a : split(job.rays.substr(7), ',')) dom.ray_directions.push_back(std::polar(1.0, parse_double(a)));
        if (dom.ray_directions.size() != dom.sigma.size())
            usage("--rays angles: needs one angle per true singularity (" + std::to_string(dom.sigma.size()) + ")");
    } else {
        usage("--rays must be auto or angles:a1,a2,...");
    }

    json out = envelope(job);
    put_ode(out, choice);
    json rays = json::array();
    for (std::size_t i = 0; i < dom.sigma.size(); ++i)
        rays.push_back({{"origin", cjson(dom.sigma[i])}, {"direction", cjson(dom.ray_directions[i] / std::abs(dom.ray_directions[i]))}});
    put(out, "domain", {{"region", region_json(dom.region)}, {"rho", dom.rho}, {"relaxed_bounds", dom.relaxed_bounds}, {"rays", rays}},
        "Def 0.1");
    put(out, "mode", job.mode);
    put(out, "tol", job.tol);

    std::optional<long long> total;
    if (job.mode != "numeric") {
        zerocount::ZeroBoundOptions opt;
        opt.tol = job.tol;
        const auto rep = zerocount::zero_count_bound(choice.ode, dom, opt);
        json segs = json::array(), sups = json::array(), vbs = json::array();
        for (std::size_t i = 0; i < rep.segments.size(); ++i) {
            segs.push_back({{"a", cjson(rep.segments[i].a)}, {"b", cjson(rep.segments[i].b)}, {"length", rep.segments[i].length()}});
            sups.push_back(rep.per_segment_sup[i]);
            vbs.push_back(rep.per_segment_varbound[i]);
        }
        const auto& d = rep.decomposition;
        put(out, "segments", segs, "Lemma 1.11");
        put(out, "decomposition", {{"required_clearance", d.required_clearance}, {"clearance_to_poles", d.clearance_to_poles},
                                   {"frame_clearance", d.frame_clearance}, {"segment_cap", d.segment_cap}, {"provenance", d.provenance}},
            "Lemma 1.11");
        put(out, "per_segment_sup", sups, "1.7");
        put(out, "per_segment_varbound", vbs, "Thm 1.10");
        put(out, "total_bound", rep.total_bound, "Thm 1.9");
        total = rep.total_bound;
    }
    if (job.mode != "bound") {
        const int n = numeric_count(sys, dom.region, choice.weights, job.cycle, {});
        put(out, "numeric_count", n, "Lemma 1.11 ii");
        put(out, "numeric_cycle", job.cycle);
        if (total) put(out, "sound", n <= *total);
    }

    try {
        const auto calc = zerocount::asymptotic_bound_calculators(sys.H.degree, rho, choice.ode.order, ode_height(choice.ode),
                                                                  job.params, {job.c, job.c_p});
        put(out, "hilbert_bound", calculator_json(calc.hilbert), "Thm 0.2");
        put(out, "ode_bound", calculator_json(calc.ode), "Thm 2.1");
    } catch (const Error& e) {
        put(out, "calculators_unavailable", e.what());
    }
    return out;
}

std::vector<double> verify_samples(const Job& job, const hamiltonian::SingularSet& sigma) {
    if (!job.samples.empty()) {
        std::vector<double> ts;
        for (const auto& s : split(job.samples, ',')) ts.push_back(parse_double(s));
        return ts;
    }
    if (job.count < 1 || !(job.t_max > job.t_min)) usage("--count must be positive and --t-min < --t-max");
    auto clear = [&](double t) {
        return std::all_of(sigma.critical_values.begin(), sigma.critical_values.end(),
                           [&](const auto& c) { return std::abs(Complex(t) - c.value) > 0.05; });
    };
    std::vector<double> fine;
    const int grid = 8 * job.count;
    for (int k = 0; k < grid; ++k) {
        const double t = job.t_min + (k + 0.5) * (job.t_max - job.t_min) / grid;
        if (clear(t)) fine.push_back(t);
    }
    if (static_cast<int>(fine.size()) < job.count) usage("too few regular values in [t-min, t-max]");
    std::vector<double> ts;
    for (int k = 0; k < job.count; ++k) ts.push_back(fine[static_cast<std::size_t>(k * static_cast<int>(fine.size()) / job.count)]);
    return ts;
}

json cmd_verify(const Job& job, Output& io) {
    const auto sys = pfsystem::assemble_pf_system(load_hamiltonian(job));
    const auto report = numerics::residual_check(sys, sys.H, verify_samples(job, sys.sigma));
    json samples = json::array();
    for (const auto& s : report.samples)
        samples.push_back({{"t", s.t}, {"cycles", s.cycles}, {"max_relative", s.max_relative}, {"per_cycle", s.per_cycle}});
    json out = envelope(job);
    const bool passed = report.max_relative < job.threshold;
    put(out, "samples", samples, "3.15");
    put(out, "max_relative", report.max_relative, "3.15");
    put(out, "threshold", job.threshold);
    put(out, "passed", passed);
    if (!passed) io.status = kExitNumeric;
    return out;
}

std::string cmd_periods(const Job& job) {
    const auto sys = pfsystem::assemble_pf_system(load_hamiltonian(job));
    std::vector<Complex> path;
    for (const auto& s : split(job.path, ',')) path.push_back(parse_complex(s));
    if (path.empty()) usage("--path needs at least one level");
    numerics::PeriodSample start{path.front(), {}, 0.0};
    if (!job.seed.empty()) {
        const auto xy = split(job.seed, ',');
        if (xy.size() != 2) usage("--seed needs x,y");
        if (path.front().imag() != 0) usage("a real oval needs a real starting level");
        const auto oval = numerics::trace_cycle(sys.H, path.front().real(), {parse_double(xy[0]), parse_double(xy[1])});
        for (const auto& w : sys.forms) {
            const auto p = numerics::period_quadrature(oval, w);
            start.periods.push_back(p.value);
            start.error_estimate = std::max(start.error_estimate, p.error_estimate);
        }
    } else {
        const auto cycles = numerics::lifted_cycles(sys.H, path.front());
        if (job.cycle < 0 || job.cycle >= static_cast<int>(cycles.size()))
            usage("--cycle must lie in [0, " + std::to_string(static_cast<int>(cycles.size()) - 1) + "]");
        for (const auto& p : numerics::lifted_periods(sys.H, path.front(), cycles[static_cast<std::size_t>(job.cycle)], sys.forms)) {
            start.periods.push_back(p.value);
            start.error_estimate = std::max(start.error_estimate, p.error_estimate);
        }
    }
    numerics::ContinuationOptions opt;
    opt.samples_per_segment = std::max(1, job.samples_per_segment);
    const auto samples = path.size() > 1 ? numerics::integrate_pf_numeric(sys, path, start, opt)
                                         : std::vector<numerics::PeriodSample>{start};
    std::string csv = "# schema_version=" + std::to_string(kSchemaVersion) + " paper_eq=3.15\nt_re,t_im";
    for (int i = 0; i < sys.dim; ++i) csv += ",I" + std::to_string(i) + "_re,I" + std::to_string(i) + "_im";
    csv += ",error\n";
    char buf[40];
    auto num = [&](double v) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return std::string(buf);
    };
    for (const auto& s : samples) {
        csv += num(s.t.real()) + "," + num(s.t.imag());
        for (const Complex& p : s.periods) csv += "," + num(p.real()) + "," + num(p.imag());
        csv += "," + num(s.error_estimate) + "\n";
    }
    return csv;
}

json cmd_bounds(const Job& job, Output& io) {
    if (job.degree < 2) usage("bounds needs -d with d >= 2");
    const Rational rho = rho_or_default(job, io);
    const auto calc = zerocount::asymptotic_bound_calculators(job.degree, rho, job.order, algebra::parse_rational(job.height),
                                                              job.params, {job.c, job.c_p});
    json out = envelope(job);
    put(out, "inputs", {{"d", job.degree}, {"rho", rho.get_str()}, {"c", job.c}, {"c_p", job.c_p},
                        {"n", job.order}, {"M", job.height}, {"p", job.params}});
    put(out, "hilbert_bound", calculator_json(calc.hilbert), "Thm 0.2");
    put(out, "ode_bound", calculator_json(calc.ode), "Thm 2.1");
    return out;
}

} // namespace

Output run(const Job& job) {
    Output io;
    json doc;
    try {
        if (job.command == "analyze") doc = cmd_analyze(job);
        else if (job.command == "decompose") doc = cmd_decompose(job);
        else if (job.command == "pf-system") doc = cmd_pf_system(job);
        else if (job.command == "scalar-ode") doc = cmd_scalar_ode(job);
        else if (job.command == "count-zeros") doc = cmd_count_zeros(job, io);
        else if (job.command == "verify") doc = cmd_verify(job, io);
        else if (job.command == "periods") {
            io.body = cmd_periods(job);
            return io;
        } else if (job.command == "bounds") doc = cmd_bounds(job, io);
        else usage("unknown command '" + job.command + "'");
    } catch (const Error& e) {
        io.status = exit_code(e.kind());
        doc = envelope(job);
        doc["error"] = {{"kind", to_string(e.kind())}, {"message", e.what()}, {"exit_code", io.status}};
    }
    if (!io.notices.empty()) doc["notices"] = io.notices;
    io.body = dump_canonical(doc);
    return io;
}

} // namespace pfzero::cli
