#include "torvex/action.hpp"
#include "torvex/report_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace torvex;

namespace {

struct RunConfig {
    std::string algebra = "sl2";
    int n = 2;
    std::string level = "1";
    std::vector<std::string> weight; // h-coordinates, "p/q" strings
    std::string p_eig = "0";
    int affine_depth = 4;
    int fock_depth = 4;
    int gamma_bound = 1;
    int window = 2;
    int jacobi_window = 1;
    int sample_depth = 2;
    bool json = false;
    std::string output;
};

void apply_config_file(RunConfig& cfg, const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot read config file: " + path);
    nlohmann::json j;
    in >> j;
    if (j.contains("algebra"))
        cfg.algebra = j["algebra"].get<std::string>();
    if (j.contains("n"))
        cfg.n = j["n"].get<int>();
    if (j.contains("level"))
        cfg.level = j["level"].get<std::string>();
    if (j.contains("weight"))
        cfg.weight = j["weight"].get<std::vector<std::string>>();
    if (j.contains("p_eig"))
        cfg.p_eig = j["p_eig"].get<std::string>();
    if (j.contains("affine_depth"))
        cfg.affine_depth = j["affine_depth"].get<int>();
    if (j.contains("fock_depth"))
        cfg.fock_depth = j["fock_depth"].get<int>();
    if (j.contains("gamma_bound"))
        cfg.gamma_bound = j["gamma_bound"].get<int>();
    if (j.contains("window"))
        cfg.window = j["window"].get<int>();
    if (j.contains("jacobi_window"))
        cfg.jacobi_window = j["jacobi_window"].get<int>();
    if (j.contains("sample_depth"))
        cfg.sample_depth = j["sample_depth"].get<int>();
    if (j.contains("json"))
        cfg.json = j["json"].get<bool>();
}

struct Instance {
    AlgebraTable alg;
    Lattice lat;
    std::unique_ptr<HighestWeightModule> mod;
    std::unique_ptr<FockOps> ops;
    std::unique_ptr<ToroidalAlgebra> talg;
    std::unique_ptr<ModuleAction> action;

    explicit Instance(const RunConfig& cfg) : alg(load_algebra(cfg.algebra)), lat(cfg.n)
    {
        Rat level = rat_from_string(cfg.level);
        std::vector<Rat> lambda(std::size_t(alg.rank), Rat(0));
        for (std::size_t i = 0; i < cfg.weight.size() && i < lambda.size(); ++i)
            lambda[i] = rat_from_string(cfg.weight[i]);
        mod = std::make_unique<HighestWeightModule>(alg, lambda, level,
                                                    rat_from_string(cfg.p_eig),
                                                    cfg.affine_depth);
        ops = std::make_unique<FockOps>(lat);
        talg = std::make_unique<ToroidalAlgebra>(alg, cfg.n);
        action = std::make_unique<ModuleAction>(*talg, *mod, *ops);
    }
};

void emit(const RunConfig& cfg, const std::string& text, const std::string& json)
{
    const std::string& body = cfg.json ? json : text;
    if (cfg.output.empty()) {
        std::cout << body;
        if (!body.empty() && body.back() != '\n')
            std::cout << '\n';
    } else {
        std::ofstream out(cfg.output);
        out << body;
    }
}

std::vector<Report> run_verify(const Instance& inst, const RunConfig& cfg)
{
    std::vector<Report> reports;
    reports.push_back(verify_algebra(inst.alg));
    {
        auto samples = inst.mod->basis_up_to_depth(cfg.sample_depth);
        reports.push_back(verify_affine_relations(*inst.mod, cfg.window, samples));
    }
    {
        FockSweepParams p;
        p.depth = cfg.fock_depth;
        p.gamma_bound = cfg.gamma_bound;
        p.window = cfg.window;
        reports.push_back(verify_fock_identities(*inst.ops, p));
    }
    reports.push_back(verify_toroidal_algebra(*inst.talg, cfg.window, cfg.jacobi_window));
    {
        auto samples = enumerate_tensor_basis(*inst.action, cfg.sample_depth, cfg.gamma_bound,
                                              true);
        reports.push_back(verify_toroidal_relations(*inst.action, cfg.jacobi_window, samples));
    }
    return reports;
}

nlohmann::ordered_json weight_rows(const Instance& inst, const RunConfig& cfg)
{
    WeightCaps caps;
    caps.affine_depth = cfg.affine_depth;
    caps.fock_depth = cfg.fock_depth;
    caps.gamma_bound = cfg.gamma_bound;
    auto basis = enumerate_tensor_basis(*inst.action, cfg.sample_depth, cfg.gamma_bound, true);
    std::map<TensorWeight, long long> seen;
    for (auto& m : basis)
        ++seen[inst.action->weight_of(m)];
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    auto rats = [](const std::vector<Rat>& v) {
        nlohmann::ordered_json a = nlohmann::ordered_json::array();
        for (auto& r : v)
            a.push_back(rat_to_string(r));
        return a;
    };
    for (auto& [w, _] : seen) {
        auto ws = weight_space(*inst.action, w, caps);
        nlohmann::ordered_json row;
        row["h_weight"] = rats(w.h);
        row["k_eigs"] = rats(w.k);
        row["d_eigs"] = rats(w.d);
        row["dim"] = (long long)ws.basis.size();
        row["counted_dim"] = ws.counted_dimension;
        row["certified"] = ws.certified;
        rows.push_back(row);
    }
    return rows;
}

int reports_exit(const std::vector<Report>& reports)
{
    for (auto& r : reports)
        if (!r.passed())
            return 1;
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact toroidal-superalgebra module calculator"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string config_path;
    if (const char* env = std::getenv("TORVEX_CONFIG"))
        config_path = env;
    // config must be applied before parsing so explicit flags override it
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--config")
            config_path = argv[i + 1];
    if (!config_path.empty()) {
        try {
            apply_config_file(cfg, config_path);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
    }

    std::string config_path_sink;
    app.add_option("--config", config_path_sink, "JSON config file (env TORVEX_CONFIG)");
    app.add_option("--algebra", cfg.algebra, "algebra name or table path");
    app.add_option("--n", cfg.n, "number of toroidal variables (>= 2)");
    app.add_option("--level", cfg.level, "level K as p/q, nonzero");
    app.add_option("--weight", cfg.weight, "highest-weight h-coordinates, p/q each");
    app.add_option("--p-eig", cfg.p_eig, "d_n eigenvalue on the highest-weight vector");
    app.add_option("--depth", cfg.affine_depth, "affine enumeration depth cap");
    app.add_option("--fock-depth", cfg.fock_depth, "Fock creation-degree cap");
    app.add_option("--gamma-bound", cfg.gamma_bound, "sup-norm cap on gamma");
    app.add_option("--window", cfg.window, "generator degree window for sweeps");
    app.add_option("--jacobi-window", cfg.jacobi_window, "window for cubic/tensor sweeps");
    app.add_option("--sample-depth", cfg.sample_depth, "depth of the sample basis");
    app.add_flag("--json", cfg.json, "emit JSON instead of text");
    app.add_option("--output", cfg.output, "write output to file");

    auto* verify = app.add_subcommand("verify", "run all identity sweeps");
    auto* weights = app.add_subcommand("weights", "enumerate weight spaces with dimensions");
    auto* sector = app.add_subcommand("sector", "check the sector intertwiner for lambda");
    auto* exportc = app.add_subcommand("export", "write all reports and weight tables as JSON");

    // global options may appear after the subcommand name
    for (CLI::App* sc : {verify, weights, sector, exportc})
        sc->fallthrough();

    std::vector<int> lam;
    sector->add_option("--lambda", lam, "coordinates of lambda in d_1..d_{n-1}")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cfg.n < 2 || rat_from_string(cfg.level) == 0)
            throw std::invalid_argument("need n >= 2 and a nonzero level");
        Instance inst(cfg);

        if (verify->parsed()) {
            auto reports = run_verify(inst, cfg);
            std::string text;
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (auto& r : reports) {
                text += report_to_text(r);
                arr.push_back(nlohmann::ordered_json::parse(report_to_json(r)));
            }
            emit(cfg, text, arr.dump(2));
            return reports_exit(reports);
        }
        if (weights->parsed()) {
            auto rows = weight_rows(inst, cfg);
            std::ostringstream text;
            bool all_match = true;
            for (auto& row : rows) {
                text << "h=" << row["h_weight"].dump() << " k=" << row["k_eigs"].dump()
                     << " d=" << row["d_eigs"].dump() << " dim=" << row["dim"]
                     << (row["certified"].get<bool>() ? "" : " (uncertified)") << "\n";
                if (row["dim"] != row["counted_dim"])
                    all_match = false;
            }
            emit(cfg, text.str(), rows.dump(2));
            return all_match ? 0 : 1;
        }
        if (sector->parsed()) {
            for (std::size_t i = lam.size(); i + 1 < std::size_t(cfg.n); ++i)
                lam.push_back(0);
            auto all = enumerate_tensor_basis(*inst.action, cfg.sample_depth, cfg.gamma_bound,
                                              true);
            std::vector<TensorMonomial> zero_sector;
            for (auto& m : all) {
                bool ok = true;
                for (int i = inst.lat.dim() / 2; i < inst.lat.dim(); ++i)
                    if (m.fock.gamma[std::size_t(i)] != 0)
                        ok = false;
                if (ok)
                    zero_sector.push_back(m);
            }
            Report r = verify_intertwining(*inst.action, lam, cfg.jacobi_window, zero_sector);
            emit(cfg, report_to_text(r), report_to_json(r));
            return r.passed() ? 0 : 1;
        }
        if (exportc->parsed()) {
            auto reports = run_verify(inst, cfg);
            nlohmann::ordered_json out;
            out["config"] = {{"algebra", cfg.algebra},   {"n", cfg.n},
                             {"level", cfg.level},       {"affine_depth", cfg.affine_depth},
                             {"fock_depth", cfg.fock_depth}, {"window", cfg.window}};
            out["reports"] = nlohmann::ordered_json::array();
            for (auto& r : reports)
                out["reports"].push_back(nlohmann::ordered_json::parse(report_to_json(r)));
            out["weights"] = weight_rows(inst, cfg);
            RunConfig jcfg = cfg;
            jcfg.json = true;
            emit(jcfg, "", out.dump(2));
            return reports_exit(reports);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
