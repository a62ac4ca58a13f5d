// frb-dyn: scenario runner for the banking-dynamics library.
// Commands: steady thresholds cycles sunspot calibrate welfare transition bifurcate
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "frb/calibration.hpp"
#include "frb/credit.hpp"
#include "frb/csv.hpp"
#include "frb/cycles.hpp"
#include "frb/errors.hpp"
#include "frb/model_core.hpp"
#include "frb/params.hpp"
#include "frb/steady_state.hpp"
#include "frb/sweep.hpp"
#include "frb/transition.hpp"
#include "frb/welfare.hpp"

using json = nlohmann::json;

namespace {

constexpr const char* kVersion = "1.0.0";

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!allowed.count(it.key())) {
            throw ConfigError("unknown key '" + it.key() + "' in " + where);
        }
    }
}

double num(const json& obj, const std::string& key, double fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_number()) throw ConfigError("'" + key + "' must be a number");
    double v = obj[key].get<double>();
    if (!std::isfinite(v)) throw ConfigError("'" + key + "' must be finite");
    return v;
}

std::vector<double> num_list(const json& arr, const std::string& where) {
    if (!arr.is_array() || arr.empty()) throw ConfigError(where + " must be a nonempty array");
    std::vector<double> out;
    for (const auto& v : arr) {
        if (!v.is_number() || !std::isfinite(v.get<double>())) {
            throw ConfigError(where + " must contain finite numbers");
        }
        out.push_back(v.get<double>());
    }
    return out;
}

struct Scenario {
    frb::ModelParams params;
    frb::Policy policy{0.05, 0.1};
    std::vector<double> i_grid;
    std::vector<double> chi_grid;
    std::optional<frb::CalibrationTargets> targets;
    std::vector<double> pi_grid;
    double i0 = 0.02, iT = 0.01;
    int T = 10;
    std::optional<std::pair<double, double>> sunspot_pair;
    frb::BifurcationSpec bif;
    bool symmetric_scaling = false;
    std::string output;
    std::string format = "csv";
};

Scenario parse_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigError("config root must be an object");
    check_keys(doc, {"params", "policy", "policy_grid", "targets", "pi_grid", "transition",
                     "sunspot", "bifurcate", "symmetric_scaling", "output", "format"},
               "config root");
    Scenario s;
    if (doc.contains("params")) {
        const json& p = doc["params"];
        check_keys(p, {"beta", "sigma", "alpha", "alpha_s", "B", "C", "eta", "mu"}, "params");
        s.params.beta = num(p, "beta", s.params.beta);
        s.params.sigma = num(p, "sigma", s.params.sigma);
        s.params.alpha = num(p, "alpha", s.params.alpha);
        s.params.alpha_s = num(p, "alpha_s", s.params.alpha_s);
        s.params.B = num(p, "B", s.params.B);
        s.params.C = num(p, "C", s.params.C);
        s.params.eta = num(p, "eta", s.params.eta);
        s.params.mu = num(p, "mu", s.params.mu);
    }
    if (doc.contains("policy")) {
        const json& p = doc["policy"];
        check_keys(p, {"i", "chi"}, "policy");
        s.policy.i = num(p, "i", s.policy.i);
        s.policy.chi = num(p, "chi", s.policy.chi);
    }
    if (doc.contains("policy_grid")) {
        const json& p = doc["policy_grid"];
        check_keys(p, {"i", "chi"}, "policy_grid");
        if (p.contains("i")) s.i_grid = num_list(p["i"], "policy_grid.i");
        if (p.contains("chi")) s.chi_grid = num_list(p["chi"], "policy_grid.chi");
    }
    if (doc.contains("targets")) {
        const json& t = doc["targets"];
        check_keys(t, {"zy_ratio", "elasticity"}, "targets");
        s.targets = frb::CalibrationTargets{num(t, "zy_ratio", 0.2578),
                                            num(t, "elasticity", -0.1012)};
    }
    if (doc.contains("pi_grid")) s.pi_grid = num_list(doc["pi_grid"], "pi_grid");
    if (doc.contains("transition")) {
        const json& t = doc["transition"];
        check_keys(t, {"i0", "iT", "T"}, "transition");
        s.i0 = num(t, "i0", s.i0);
        s.iT = num(t, "iT", s.iT);
        s.T = static_cast<int>(num(t, "T", s.T));
        if (s.T < 1) throw ConfigError("transition.T must be >= 1");
    }
    if (doc.contains("sunspot")) {
        const json& t = doc["sunspot"];
        check_keys(t, {"z1", "z2"}, "sunspot");
        s.sunspot_pair = {num(t, "z1", 0.0), num(t, "z2", 0.0)};
    }
    if (doc.contains("bifurcate")) {
        const json& b = doc["bifurcate"];
        check_keys(b, {"i", "chi_min", "chi_max", "n_chi", "burn_in", "samples"}, "bifurcate");
        s.bif.i = num(b, "i", s.bif.i);
        s.bif.chi_min = num(b, "chi_min", s.bif.chi_min);
        s.bif.chi_max = num(b, "chi_max", s.bif.chi_max);
        s.bif.n_chi = static_cast<int>(num(b, "n_chi", s.bif.n_chi));
        s.bif.burn_in = static_cast<int>(num(b, "burn_in", s.bif.burn_in));
        s.bif.samples = static_cast<int>(num(b, "samples", s.bif.samples));
        if (s.bif.n_chi < 1 || s.bif.samples < 1 || s.bif.burn_in < 0) {
            throw ConfigError("bifurcate grid sizes must be positive");
        }
    }
    if (doc.contains("symmetric_scaling")) {
        if (!doc["symmetric_scaling"].is_boolean()) {
            throw ConfigError("symmetric_scaling must be a boolean");
        }
        s.symmetric_scaling = doc["symmetric_scaling"].get<bool>();
    }
    if (doc.contains("output")) s.output = doc["output"].get<std::string>();
    if (doc.contains("format")) {
        s.format = doc["format"].get<std::string>();
        if (s.format != "csv" && s.format != "json") throw ConfigError("format must be csv|json");
    }
    return s;
}

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

Table run_steady(const Scenario& s) {
    frb::Mechanism mech(s.params);
    std::vector<double> is = s.i_grid.empty() ? std::vector<double>{s.policy.i} : s.i_grid;
    std::vector<double> chis = s.chi_grid.empty() ? std::vector<double>{s.policy.chi} : s.chi_grid;
    Table t;
    t.header = {"i", "chi", "q_s", "pbar_s", "z_s", "i_d", "i_s", "i_l", "mbar"};
    t.rows = frb::sweep_parallel(is.size() * chis.size(), [&](std::size_t k) {
        double i = is[k / chis.size()];
        double chi = chis[k % chis.size()];
        frb::SteadyState st = frb::solve_steady(s.params, {i, chi}, mech);
        return std::vector<double>{i, chi, st.q_s, st.pbar_s, st.z_s, st.i_d, st.i_s, st.i_l,
                                   st.mbar};
    });
    return t;
}

Table run_thresholds(const Scenario& s) {
    frb::Mechanism mech(s.params);
    std::vector<double> is = s.i_grid.empty() ? std::vector<double>{s.policy.i} : s.i_grid;
    Table t;
    t.header = {"i", "chi_m", "chi_hat_m", "chi_c", "chi_hat_c"};
    t.rows = frb::sweep_parallel(is.size(), [&](std::size_t k) {
        frb::Policy pol{is[k], s.policy.chi};
        return std::vector<double>{is[k], frb::chi_m(s.params, pol, mech),
                                   frb::chi_hat_m(s.params, pol, mech),
                                   frb::chi_c(s.params, pol, mech),
                                   frb::chi_hat_c(s.params, pol, mech)};
    });
    return t;
}

Table run_cycles(const Scenario& s) {
    frb::Mechanism mech(s.params);
    Table t;
    t.header = {"period", "k", "z", "residual"};
    std::string failures;
    for (int n : {2, 3}) {
        try {
            frb::CyclePoints c = (n == 2) ? frb::find_two_cycle(s.params, s.policy, mech)
                                          : frb::find_three_cycle(s.params, s.policy, mech);
            for (int k = 0; k < c.period; ++k) {
                t.rows.push_back({double(n), double(k + 1), c.points[k], c.residuals[k]});
            }
        } catch (const std::exception& e) {
            failures += "period " + std::to_string(n) + ": " + e.what() + "; ";
            std::fprintf(stderr, "cycles: period %d skipped: %s\n", n, e.what());
        }
    }
    if (t.rows.empty()) throw frb::NoCycleError("no verified orbit at this policy: " + failures);
    return t;
}

Table run_sunspot(const Scenario& s) {
    frb::Mechanism mech(s.params);
    double z1, z2;
    if (s.sunspot_pair) {
        z1 = s.sunspot_pair->first;
        z2 = s.sunspot_pair->second;
    } else {
        // perturb the two-cycle inward, keeping the upper point on the linear branch
        frb::CyclePoints c = frb::find_two_cycle(s.params, s.policy, mech);
        double delta = 0.2 * (c.points[1] - mech.p_star()) / 3.0;
        z1 = c.points[0] + delta;
        z2 = c.points[1] - 3.0 * delta;
    }
    frb::SunspotEquilibrium ss = frb::find_sunspot(z1, z2, s.params, s.policy, mech);
    Table t;
    t.header = {"z1", "z2", "zeta1", "zeta2"};
    t.rows.push_back({ss.z1, ss.z2, ss.zeta1, ss.zeta2});
    return t;
}

Table run_calibrate(const Scenario& s) {
    frb::CalibrationTargets targets =
        s.targets.value_or(frb::CalibrationTargets{0.2578, -0.1012});
    frb::CalibrationResult r = frb::calibrate(targets, s.params, s.policy);
    Table t;
    t.header = {"C", "eta", "iterations"};
    t.rows.push_back({r.C, r.eta, double(r.iterations)});
    return t;
}

Table run_welfare(const Scenario& s) {
    std::vector<double> pis = s.pi_grid.empty() ? std::vector<double>{0.10} : s.pi_grid;
    std::vector<double> chis = s.chi_grid.empty() ? std::vector<double>{s.policy.chi} : s.chi_grid;
    Table t;
    t.header = {"pi", "chi", "delta", "cost", "money_cost", "dm_surplus", "cm_surplus"};
    t.rows = frb::sweep_parallel(pis.size() * chis.size(), [&](std::size_t k) {
        double pi = pis[k / chis.size()];
        double chi = chis[k % chis.size()];
        frb::WelfareReport w = frb::welfare_cost(pi, s.params, chi, s.symmetric_scaling);
        return std::vector<double>{pi,
                                   chi,
                                   w.delta,
                                   w.cost,
                                   w.decomposition.money_cost,
                                   w.decomposition.dm_surplus,
                                   w.decomposition.cm_surplus};
    });
    return t;
}

Table run_transition(const Scenario& s) {
    Table t;
    t.header = {"t", "z", "b"};
    if (s.params.mu > 0.0) {
        frb::TransitionPath p =
            frb::announce_transition_credit(s.i0, s.iT, s.T, s.policy.chi, s.params);
        if (p.truncated) throw frb::ConvergenceError("transition truncated: " + p.diagnostic);
        for (std::size_t k = 0; k < p.z_path.size(); ++k) {
            t.rows.push_back({double(k), p.z_path[k], p.b_path[k]});
        }
    } else {
        frb::TransitionPath p = frb::announce_transition(s.i0, s.iT, s.T, s.policy.chi, s.params);
        if (p.truncated) throw frb::ConvergenceError("transition truncated: " + p.diagnostic);
        t.header = {"t", "z"};
        for (std::size_t k = 0; k < p.z_path.size(); ++k) {
            t.rows.push_back({double(k), p.z_path[k]});
        }
    }
    return t;
}

Table run_bifurcate(const Scenario& s) {
    Table t;
    t.header = {"chi", "sample", "z"};
    auto raw = frb::bifurcation_sweep(s.bif, s.params, true);
    for (const auto& row : raw) {
        for (std::size_t j = 1; j < row.size(); ++j) {
            t.rows.push_back({row[0], double(j - 1), row[j]});
        }
    }
    return t;
}

std::string render(const Table& t, const std::string& format, const std::string& config_text) {
    if (format == "csv") return frb::to_csv(t.header, t.rows);
    json out;
    out["meta"] = {{"version", kVersion},
                   {"config_hash", std::to_string(std::hash<std::string>{}(config_text))}};
    out["header"] = t.header;
    json rows = json::array();
    for (const auto& r : t.rows) {
        json row = json::array();
        for (double v : r) row.push_back(frb::fmt17(v));
        rows.push_back(row);
    }
    out["rows"] = rows;
    return out.dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"banking-dynamics scenario runner"};
    app.require_subcommand(1);
    app.fallthrough(true);
    std::string config_path, out_path, format_override;
    std::optional<double> ov_i, ov_chi, ov_pi, ov_mu, ov_sigma;
    std::optional<int> ov_T;
    app.add_option("--config", config_path, "JSON config file");
    app.add_option("--out", out_path, "output file (default stdout)");
    app.add_option("--format", format_override, "csv|json");
    app.add_option("--i", ov_i, "override nominal rate");
    app.add_option("--chi", ov_chi, "override reserve requirement");
    app.add_option("--pi", ov_pi, "override inflation rate (welfare)");
    app.add_option("--mu", ov_mu, "override monitoring probability");
    app.add_option("--sigma", ov_sigma, "override buyer probability");
    app.add_option("--T", ov_T, "override transition horizon");
    const std::vector<std::string> commands = {"steady",    "thresholds", "cycles",
                                               "sunspot",   "calibrate",  "welfare",
                                               "transition", "bifurcate"};
    for (const auto& c : commands) app.add_subcommand(c)->fallthrough(true);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 0;
    }
    std::string command = app.get_subcommands().at(0)->get_name();

    Scenario scen;
    std::string config_text;
    try {
        if (!config_path.empty()) {
            scen = parse_config(config_path);
            std::ifstream in(config_path);
            std::stringstream ss;
            ss << in.rdbuf();
            config_text = ss.str();
        }
        if (ov_i) {
            scen.policy.i = *ov_i;
            scen.i_grid = {*ov_i};
        }
        if (ov_chi) {
            scen.policy.chi = *ov_chi;
            scen.chi_grid = {*ov_chi};
        }
        if (ov_pi) scen.pi_grid = {*ov_pi};
        if (ov_mu) scen.params.mu = *ov_mu;
        if (ov_sigma) {
            scen.params.sigma = *ov_sigma;
            scen.params.alpha = 1.0 - *ov_sigma;
            scen.params.alpha_s = *ov_sigma;
        }
        if (ov_T) scen.T = *ov_T;
        if (!out_path.empty()) scen.output = out_path;
        if (!format_override.empty()) {
            if (format_override != "csv" && format_override != "json") {
                throw ConfigError("format must be csv|json");
            }
            scen.format = format_override;
        }
        scen.params.validate();
        scen.policy.validate();
    } catch (const std::exception& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    }

    Table table;
    try {
        if (command == "steady") table = run_steady(scen);
        else if (command == "thresholds") table = run_thresholds(scen);
        else if (command == "cycles") table = run_cycles(scen);
        else if (command == "sunspot") table = run_sunspot(scen);
        else if (command == "calibrate") table = run_calibrate(scen);
        else if (command == "welfare") table = run_welfare(scen);
        else if (command == "transition") table = run_transition(scen);
        else if (command == "bifurcate") table = run_bifurcate(scen);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "%s: %s\n", command.c_str(), e.what());
        return 3;
    }

    std::string payload = render(table, scen.format, config_text);
    if (scen.output.empty()) {
        std::fputs(payload.c_str(), stdout);
    } else {
        std::ofstream out(scen.output, std::ios::binary);
        if (!out) {
            std::fprintf(stderr, "cannot open output file: %s\n", scen.output.c_str());
            return 2;
        }
        out << payload;
    }
    return 0;
}
