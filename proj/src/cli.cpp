#include "hardy/cli.hpp"

#include "hardy/constants.hpp"
#include "hardy/extremal.hpp"
#include "hardy/kernel.hpp"
#include "hardy/seminorm.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace hardy::cli {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvalidParams = 2;
constexpr int kExitNoConvergence = 3;

std::string fmt17(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json params_json(const HardyParams& p)
{
    return json{{"d", p.d},     {"s", p.s},         {"p", p.p},
                {"q", p.q},     {"alpha", p.alpha}, {"beta", p.beta},
                {"domain", to_string(p.domain)}};
}

json report_json(const ValidationReport& rep)
{
    json v = json::array();
    for (const auto& c : rep.violations)
        v.push_back({{"constraint", c.label}, {"lhs", c.lhs}, {"rhs", c.rhs}});
    return json{{"valid", rep.valid},
                {"violations", v},
                {"warnings", rep.warnings},
                {"delta", rep.delta},
                {"support_class", to_string(rep.support_class)}};
}

struct ParamFlags {
    HardyParams p;
    std::string domain = "whole";
    double tol = 1e-10;

    void attach(CLI::App* cmd, bool with_q = true)
    {
        cmd->add_option("--d", p.d, "dimension")->required();
        cmd->add_option("--s", p.s, "order s in (0,1)")->required();
        cmd->add_option("--p", p.p, "inner exponent p")->required();
        if (with_q) cmd->add_option("--q", p.q, "outer exponent q")->required();
        cmd->add_option("--alpha", p.alpha, "outer weight exponent");
        cmd->add_option("--beta", p.beta, "inner weight exponent");
        cmd->add_option("--domain", domain, "whole | half")
            ->check(CLI::IsMember({"whole", "half"}));
        cmd->add_option("--tol", tol, "quadrature tolerance");
    }

    HardyParams params() const
    {
        HardyParams out = p;
        out.domain = domain == "half" ? Domain::HalfSpace : Domain::WholeSpace;
        return out;
    }
};

int run_constant(const ParamFlags& pf, std::string& out)
{
    const auto params = pf.params();
    const auto rep = validate(params);
    json doc{{"params", params_json(params)},
             {"valid", rep.valid},
             {"delta", rep.delta},
             {"sharpness_proven", params.p >= params.q}};
    if (!rep.valid) {
        doc["violations"] = report_json(rep)["violations"];
        out = doc.dump(2) + "\n";
        return kExitInvalidParams;
    }
    auto c = sharp_constant(params, pf.tol);
    doc["constant"] = c.value;
    doc["abs_error_estimate"] = c.abs_error_estimate;
    doc["converged"] = c.converged;
    if (!rep.warnings.empty()) doc["warnings"] = rep.warnings;
    out = doc.dump(2) + "\n";
    return c.converged ? kExitOk : kExitNoConvergence;
}

int run_validate(const ParamFlags& pf, std::string& out)
{
    const auto params = pf.params();
    const auto rep = validate(params);
    json doc = report_json(rep);
    doc["params"] = params_json(params);
    out = doc.dump(2) + "\n";
    return rep.valid ? kExitOk : kExitInvalidParams;
}

int run_verify(const ParamFlags& pf, const std::string& profile_path, std::string& out)
{
    const auto params = pf.params();
    const auto rep = validate(params);
    if (!rep.valid) {
        json doc{{"params", params_json(params)}, {"valid", false},
                 {"violations", report_json(rep)["violations"]}};
        out = doc.dump(2) + "\n";
        return kExitInvalidParams;
    }
    auto profile = load_profile_file(profile_path);
    auto r = hardy_ratio(profile, params, pf.tol);
    json doc{{"params", params_json(params)},
             {"lhs_seminorm",
              {{"value", r.lhs_seminorm.value},
               {"abs_error_estimate", r.lhs_seminorm.abs_error_estimate},
               {"converged", r.lhs_seminorm.converged}}},
             {"rhs_norm",
              {{"value", r.rhs_norm.value},
               {"abs_error_estimate", r.rhs_norm.abs_error_estimate},
               {"converged", r.rhs_norm.converged}}},
             {"ratio", r.ratio},
             {"constant", r.constant},
             {"margin", r.margin},
             {"notes", r.notes}};
    out = doc.dump(2) + "\n";
    const bool conv = r.lhs_seminorm.converged && r.rhs_norm.converged;
    return conv ? kExitOk : kExitNoConvergence;
}

int run_extremal(const ParamFlags& pf, const std::string& nlist_str, std::string& out)
{
    const auto params = pf.params();
    const auto rep = validate(params);
    if (!rep.valid) {
        json doc{{"params", params_json(params)}, {"valid", false},
                 {"violations", report_json(rep)["violations"]}};
        out = doc.dump(2) + "\n";
        return kExitInvalidParams;
    }
    std::vector<int> ns;
    std::stringstream ss(nlist_str);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) ns.push_back(std::stoi(tok));
    auto series = ratio_sequence(params, ns, pf.tol);
    json entries = json::array();
    for (const auto& e : series.entries)
        entries.push_back({{"n", e.n}, {"ratio", e.ratio}, {"margin", e.margin}});
    json doc{{"params", params_json(params)},
             {"entries", entries},
             {"fitted_model", {{"c0", series.c0}, {"c1", series.c1}}},
             {"limit_estimate", series.limit_estimate},
             {"constant", series.constant}};
    out = doc.dump(2) + "\n";
    return kExitOk;
}

struct SweepAxis {
    std::string param;
    double start = 0, stop = 0;
    int count = 1;
    bool log_spacing = false;
};

double axis_value(const SweepAxis& ax, int i)
{
    if (ax.count == 1) return ax.start;
    const double f = double(i) / (ax.count - 1);
    if (ax.log_spacing)
        return ax.start * std::pow(ax.stop / ax.start, f);
    return ax.start + f * (ax.stop - ax.start);
}

void set_param(HardyParams& p, const std::string& name, double v)
{
    if (name == "d") p.d = static_cast<int>(std::lround(v));
    else if (name == "s") p.s = v;
    else if (name == "p") p.p = v;
    else if (name == "q") p.q = v;
    else if (name == "alpha") p.alpha = v;
    else if (name == "beta") p.beta = v;
    else throw std::runtime_error("sweep: unknown parameter '" + name + "'");
}

int run_sweep(const std::string& spec_path, const std::string& out_path,
              std::string& out, std::string& diag)
{
    std::ifstream in(spec_path);
    if (!in) {
        diag = "cannot open sweep spec: " + spec_path + "\n";
        return kExitUsage;
    }
    json spec;
    try {
        spec = json::parse(in);
    } catch (const json::parse_error& e) {
        diag = "sweep spec parse error: " + std::string(e.what()) + "\n";
        return kExitUsage;
    }

    HardyParams base;
    double tol = 1e-10;
    if (spec.contains("tol")) tol = spec["tol"].get<double>();
    if (spec.contains("fixed")) {
        const auto& f = spec["fixed"];
        for (auto it = f.begin(); it != f.end(); ++it) {
            if (it.key() == "domain")
                base.domain = it.value().get<std::string>() == "half"
                                  ? Domain::HalfSpace : Domain::WholeSpace;
            else
                set_param(base, it.key(), it.value().get<double>());
        }
    }
    std::vector<SweepAxis> axes;
    for (const auto& a : spec.value("axes", json::array())) {
        SweepAxis ax;
        ax.param = a.at("param").get<std::string>();
        ax.start = a.at("start").get<double>();
        ax.stop = a.at("stop").get<double>();
        ax.count = a.at("count").get<int>();
        if (ax.count < 1) throw std::runtime_error("sweep: axis count must be >= 1");
        ax.log_spacing = a.value("spacing", "linear") == "log";
        axes.push_back(ax);
    }

    long total = 1;
    for (const auto& ax : axes) total *= ax.count;

    std::ostringstream csv;
    csv << "d,s,p,q,alpha,beta,domain,delta,constant,error,valid,violations\n";
    std::vector<int> idx(axes.size(), 0);
    for (long row = 0; row < total; ++row) {
        HardyParams p = base;
        long rem = row;
        for (std::size_t k = axes.size(); k-- > 0;) {
            idx[k] = static_cast<int>(rem % axes[k].count);
            rem /= axes[k].count;
        }
        for (std::size_t k = 0; k < axes.size(); ++k)
            set_param(p, axes[k].param, axis_value(axes[k], idx[k]));

        const auto rep = validate(p);
        csv << p.d << ',' << fmt17(p.s) << ',' << fmt17(p.p) << ',' << fmt17(p.q)
            << ',' << fmt17(p.alpha) << ',' << fmt17(p.beta) << ','
            << to_string(p.domain) << ',' << fmt17(rep.delta) << ',';
        if (rep.valid) {
            auto c = sharp_constant(p, tol);
            csv << fmt17(c.value) << ',' << fmt17(c.abs_error_estimate) << ",true,";
        } else {
            csv << ",,false,";
            std::string vio;
            for (const auto& v : rep.violations) {
                if (!vio.empty()) vio += "; ";
                vio += v.label;
            }
            csv << '"' << vio << '"';
        }
        csv << '\n';
    }

    if (!out_path.empty()) {
        std::ofstream of(out_path);
        if (!of) {
            diag = "cannot write " + out_path + "\n";
            return kExitUsage;
        }
        of << csv.str();
        out = "wrote " + std::to_string(total) + " rows to " + out_path + "\n";
    } else {
        out = csv.str();
    }
    return kExitOk;
}

} // namespace

Result execute(const std::vector<std::string>& args)
{
    Result res;
    CLI::App app{"sharp constants of weighted fractional Hardy inequalities"};
    app.require_subcommand(1);

    ParamFlags pf_const, pf_val, pf_ver, pf_ext;
    auto* c_const = app.add_subcommand("constant", "compute the sharp constant");
    pf_const.attach(c_const);

    auto* c_phi = app.add_subcommand("phi", "evaluate the angular kernel");
    int phi_d = 1;
    double phi_s = 0.5, phi_p = 2.0, phi_t = 0.0;
    std::string phi_method = "auto";
    c_phi->add_option("--d", phi_d)->required();
    c_phi->add_option("--s", phi_s)->required();
    c_phi->add_option("--p", phi_p)->required();
    c_phi->add_option("--t", phi_t)->required();
    c_phi->add_option("--method", phi_method)
        ->check(CLI::IsMember({"auto", "direct", "hypergeometric"}));

    auto* c_val = app.add_subcommand("validate", "check the parameter assumptions");
    pf_val.attach(c_val);

    auto* c_ver = app.add_subcommand("verify", "verify the inequality for a profile");
    std::string profile_path;
    c_ver->add_option("--profile", profile_path, "two-column profile file")->required();
    pf_ver.attach(c_ver);

    auto* c_ext = app.add_subcommand("extremal", "extremal-sequence ratio study");
    std::string nlist = "10,100,1000,10000";
    c_ext->add_option("--n-list", nlist, "comma-separated n values");
    pf_ext.attach(c_ext);

    auto* c_sweep = app.add_subcommand("sweep", "parameter sweep to CSV");
    std::string spec_path, out_path;
    c_sweep->add_option("--spec", spec_path, "sweep spec JSON")->required();
    c_sweep->add_option("--out", out_path, "output CSV path");

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::CallForHelp& e) {
        res.output = app.help();
        res.exit_code = kExitOk;
        return res;
    } catch (const CLI::ParseError& e) {
        res.diagnostics = std::string(e.what()) + "\n";
        res.exit_code = kExitUsage;
        return res;
    }

    try {
        if (c_const->parsed())
            res.exit_code = run_constant(pf_const, res.output);
        else if (c_phi->parsed()) {
            KernelSpec ks{phi_d, phi_s, phi_p};
            PhiMethod m = PhiMethod::Auto;
            if (phi_method == "direct") m = PhiMethod::Direct;
            else if (phi_method == "hypergeometric") m = PhiMethod::Hypergeometric;
            const std::string used =
                phi_method != "auto" ? phi_method
                : (phi_d == 1 ? "closed_form"
                              : (phi_t <= 0.9 ? "hypergeometric" : "direct"));
            json doc{{"t", phi_t}, {"value", phi(ks, phi_t, m)}, {"method", used}};
            res.output = doc.dump(2) + "\n";
            res.exit_code = kExitOk;
        } else if (c_val->parsed())
            res.exit_code = run_validate(pf_val, res.output);
        else if (c_ver->parsed())
            res.exit_code = run_verify(pf_ver, profile_path, res.output);
        else if (c_ext->parsed())
            res.exit_code = run_extremal(pf_ext, nlist, res.output);
        else if (c_sweep->parsed())
            res.exit_code = run_sweep(spec_path, out_path, res.output, res.diagnostics);
    } catch (const convergence_error& e) {
        res.diagnostics = std::string("convergence error: ") + e.what() + "\n";
        res.exit_code = kExitNoConvergence;
    } catch (const std::invalid_argument& e) {
        res.diagnostics = std::string("error: ") + e.what() + "\n";
        res.exit_code = kExitInvalidParams;
    } catch (const std::exception& e) {
        res.diagnostics = std::string("error: ") + e.what() + "\n";
        res.exit_code = kExitUsage;
    }
    return res;
}

} // namespace hardy::cli
