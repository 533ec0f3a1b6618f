#include "cli/job.hpp"
#include "pfzero/algebra/eval.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>

using pfzero::cli::Job;

namespace {

const char* const kCommands[] = {"analyze", "decompose", "pf-system", "scalar-ode", "count-zeros", "verify", "periods", "bounds"};

bool is_command(const std::string& s) {
    for (const char* c : kCommands)
        if (s == c) return true;
    return false;
}

// A JSON config object becomes long-flag tokens.  They are inserted right
// after the subcommand so that later command-line flags take precedence.
std::vector<std::string> config_tokens(const std::string& path, std::string& command) {
    std::ifstream in(path);
    if (!in) throw pfzero::Error(pfzero::ErrorKind::Usage, "cannot open config file '" + path + "'");
    nlohmann::json cfg;
    try {
        cfg = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw pfzero::Error(pfzero::ErrorKind::Usage, std::string("config is not valid JSON: ") + e.what());
    }
    if (!cfg.is_object()) throw pfzero::Error(pfzero::ErrorKind::Usage, "config must be a JSON object");
    std::vector<std::string> out;
    for (const auto& [key, value] : cfg.items()) {
        if (key == "schema_version") {
            if (!value.is_number_integer() || value.get<int>() != pfzero::cli::kSchemaVersion)
                throw pfzero::Error(pfzero::ErrorKind::Usage, "unsupported config schema_version");
            continue;
        }
        if (key == "command") {
            if (command.empty()) command = value.get<std::string>();
            continue;
        }
        std::string flag = "--" + key;
        std::replace(flag.begin(), flag.end(), '_', '-');
        if (value.is_boolean()) {
            if (value.get<bool>()) out.push_back(flag);
        } else if (value.is_string()) {
            out.push_back(flag);
            out.push_back(value.get<std::string>());
        } else if (value.is_number_integer()) {
            out.push_back(flag);
            out.push_back(std::to_string(value.get<long long>()));
        } else if (value.is_number()) {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", value.get<double>());
            out.push_back(flag);
            out.push_back(buf);
        } else {
            throw pfzero::Error(pfzero::ErrorKind::Usage, "config value for '" + key + "' must be a scalar");
        }
    }
    return out;
}

void add_hamiltonian(CLI::App* sub, Job& job) {
    sub->add_option("-H,--hamiltonian", job.hamiltonian, "polynomial in x, y, e.g. \"x^2+y^2\"")->required();
}

void add_ode_choice(CLI::App* sub, Job& job) {
    sub->add_option("--component", job.component, "0-based index of the period component");
    sub->add_option("--mu", job.mu, "comma-separated polynomials in t: ODE for sum mu_i(t) I_i");
}

void build(CLI::App& app, Job& job, std::string& output) {
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("-o,--output", output, "write the artifact to this file instead of stdout");
    app.set_help_all_flag("--help-all", "help for all subcommands");
    app.add_option("--config", "JSON file of flag values (command-line flags win)");

    auto* analyze = app.add_subcommand("analyze", "regularity, critical values, monomial basis");
    add_hamiltonian(analyze, job);

    auto* decompose = app.add_subcommand("decompose", "decompose a polynomial form P dx + Q dy");
    add_hamiltonian(decompose, job);
    decompose->add_option("--omega-p", job.omega_p, "P of the form");
    decompose->add_option("--omega-q", job.omega_q, "Q of the form");

    auto* pf = app.add_subcommand("pf-system", "Picard-Fuchs system a(t) I' = A(t) I");
    add_hamiltonian(pf, job);

    auto* ode = app.add_subcommand("scalar-ode", "scalar ODE of one period component or combination");
    add_hamiltonian(ode, job);
    add_ode_choice(ode, job);

    auto* count = app.add_subcommand("count-zeros", "zero bound (and numeric count) on a domain");
    add_hamiltonian(count, job);
    add_ode_choice(count, job);
    count->add_option("--domain", job.domain, "disc:cx,cy,r or poly:x1,y1;x2,y2;...");
    count->add_option("--rho", job.rho, "clearance from singular points (exact rational or decimal)");
    count->add_option("--rays", job.rays, "auto or angles:a1,a2,... (radians, one per singular point)");
    count->add_option("--mode", job.mode, "bound, numeric or both")->check(CLI::IsMember({"bound", "numeric", "both"}));
    count->add_option("--tol", job.tol, "relative tolerance of the coefficient supremum");
    count->add_flag("--relaxed-bounds", job.relaxed_bounds, "allow domains outside the unit disc");
    count->add_option("--cycle", job.cycle, "lifted cycle used by the numeric count");
    count->add_option("--c", job.c, "constant c of the Hilbert-type calculator");
    count->add_option("--cp", job.c_p, "constant c_p of the ODE calculator");
    count->add_option("--p", job.params, "number of parameters p for the ODE calculator");

    auto* verify = app.add_subcommand("verify", "residual of the system on numerically computed periods");
    add_hamiltonian(verify, job);
    verify->add_option("--samples", job.samples, "comma-separated real levels");
    verify->add_option("--count", job.count, "number of automatic levels");
    verify->add_option("--t-min", job.t_min);
    verify->add_option("--t-max", job.t_max);
    verify->add_option("--threshold", job.threshold, "largest accepted relative residual");

    auto* periods = app.add_subcommand("periods", "continue periods along a path (CSV)");
    add_hamiltonian(periods, job);
    periods->add_option("--path", job.path, "comma-separated complex levels, e.g. 0.5,0.5+0.2i,0.3")->required();
    periods->add_option("--seed", job.seed, "x,y near a real oval at the first level");
    periods->add_option("--cycle", job.cycle, "lifted cycle index when no seed is given");
    periods->add_option("--samples-per-segment", job.samples_per_segment);

    auto* bounds = app.add_subcommand("bounds", "asymptotic bound calculators (theoretical)");
    bounds->add_option("-d,--degree", job.degree, "degree of the Hamiltonian")->required();
    bounds->add_option("--rho", job.rho, "clearance rho in (0, 1)");
    bounds->add_option("-c,--c", job.c, "constant c");
    bounds->add_option("--cp", job.c_p, "constant c_p");
    bounds->add_option("--n", job.order, "ODE order");
    bounds->add_option("--M", job.height, "ODE height");
    bounds->add_option("--p", job.params, "number of parameters");

    app.get_option("--output")->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    for (auto* sub : app.get_subcommands({}))
        for (auto* opt : sub->get_options()) opt->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
}

} // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string command;
    try {
        if (const char* bits = std::getenv("PFZERO_PRECISION_BITS")) {
            char* end = nullptr;
            const long v = std::strtol(bits, &end, 10);
            if (end == bits || *end != '\0' || v < 53 || v > 100000)
                throw pfzero::Error(pfzero::ErrorKind::Usage, "PFZERO_PRECISION_BITS must be an integer in [53, 100000]");
            pfzero::algebra::set_default_precision_bits(static_cast<int>(v));
        }
        // Pull --config out before parsing so its contents can be spliced in.
        std::string config;
        for (std::size_t i = 0; i < args.size(); ++i) {
            if (args[i] == "--config" && i + 1 < args.size()) {
                config = args[i + 1];
                args.erase(args.begin() + static_cast<long>(i), args.begin() + static_cast<long>(i) + 2);
                break;
            }
            if (args[i].rfind("--config=", 0) == 0) {
                config = args[i].substr(9);
                args.erase(args.begin() + static_cast<long>(i));
                break;
            }
        }
        auto cmd_pos = std::find_if(args.begin(), args.end(), is_command);
        if (cmd_pos != args.end()) command = *cmd_pos;
        if (!config.empty()) {
            const bool had_command = !command.empty();
            const auto tokens = config_tokens(config, command);
            if (!had_command) {
                if (command.empty()) throw pfzero::Error(pfzero::ErrorKind::Usage, "no subcommand given");
                args.insert(args.begin(), command);
                cmd_pos = args.begin();
            }
            args.insert(cmd_pos + 1, tokens.begin(), tokens.end());
        }
    } catch (const pfzero::Error& e) {
        std::cerr << "pfzero: " << e.what() << "\n";
        return pfzero::cli::kExitUsage;
    }

    CLI::App app{"pfzero: Picard-Fuchs systems and zero counting of Abelian integrals"};
    Job job;
    std::string output;
    build(app, job, output);
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return pfzero::cli::kExitUsage;
    }
    job.command = app.get_subcommands().front()->get_name();

    const auto out = pfzero::cli::run(job);
    for (const auto& n : out.notices) std::cerr << "NOTICE: " << n << "\n";
    if (output.empty()) {
        std::cout << out.body;
    } else {
        std::ofstream file(output, std::ios::binary);
        file << out.body;
        if (!file) {
            std::cerr << "pfzero: cannot write '" << output << "'\n";
            return pfzero::cli::kExitUsage;
        }
    }
    return out.status;
}
