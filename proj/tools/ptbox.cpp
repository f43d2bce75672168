// ptbox command-line front end.
//
//   ptbox spectrum --n-max 5 --length 10 --alpha 1
//   ptbox simulate --config run.toml [--out run.csv] [--hermitian]
//   ptbox simulate --config run.manifest.json          (re-run a previous output)
//   ptbox berry --n 1..3 --a 10 --b 1 --alpha 1
//   ptbox sweep --config run.toml --axis b --values 0.5,1,2 [--jobs 4]

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ptbox/berry.hpp"
#include "ptbox/coupling.hpp"
#include "ptbox/csv_output.hpp"
#include "ptbox/errors.hpp"
#include "ptbox/manifest.hpp"
#include "ptbox/static_spectrum.hpp"
#include "ptbox/sweep.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace ptbox;

namespace {

fs::path default_output(const std::string& subcommand)
{
    return fs::path("out") / (subcommand + "-" + utc_timestamp() + ".csv");
}

fs::path manifest_path(const fs::path& output)
{
    fs::path p = output;
    return p.replace_extension(".manifest.json");
}

void write_text(const fs::path& path, const std::string& text)
{
    if (path.has_parent_path())
        fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << text;
    if (!out.flush())
        throw std::runtime_error("write to " + path.string() + " failed");
}

void write_manifest(const fs::path& output, const json& manifest)
{
    write_text(manifest_path(output), manifest.dump(2) + "\n");
}

// Accepts "3" or "1..3".
std::vector<int> parse_index_range(const std::string& text)
{
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const int n = std::stoi(text);
            return {n};
        }
        const int lo = std::stoi(text.substr(0, dots));
        const int hi = std::stoi(text.substr(dots + 2));
        if (lo > hi)
            throw ConfigError("n", "empty range '" + text + "'");
        std::vector<int> out;
        for (int n = lo; n <= hi; ++n) out.push_back(n);
        return out;
    } catch (const std::logic_error& e) {
        if (dynamic_cast<const ConfigError*>(&e)) throw;
        throw ConfigError("n", "expected an integer or a range like 1..3, got '" + text + "'");
    }
}

bool is_manifest(const fs::path& path)
{
    return path.extension() == ".json";
}

json read_json(const fs::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("config", "cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("config", path.string() + ": " + e.what());
    }
}

// --------------------------------------------------------------------------------------------

struct SpectrumArgs {
    int n_max = 5;
    double length = 10.0;
    double alpha = 1.0;
    std::string out;
};

int run_spectrum(const SpectrumArgs& args)
{
    if (args.n_max < 1)
        throw ConfigError("n-max", "must be >= 1");
    std::vector<StaticEigenstate> states;
    for (int n = 1; n <= args.n_max; ++n) states.push_back(static_eigenstate(n, args.length, args.alpha));

    std::ostringstream csv;
    write_spectrum_csv(csv, states);
    const fs::path out = args.out.empty() ? default_output("spectrum") : fs::path(args.out);
    write_text(out, csv.str());
    write_manifest(out, make_manifest("spectrum",
                                      {{"n_max", args.n_max}, {"length", args.length}, {"alpha", args.alpha}},
                                      {out.string()}));
    std::cout << out.string() << "\n";
    return 0;
}

// --------------------------------------------------------------------------------------------

struct SimulateArgs {
    std::string config;
    std::string out;
    bool hermitian = false;
};

int run_simulate(const SimulateArgs& args)
{
    SimulationConfig config;
    bool hermitian = args.hermitian;
    if (is_manifest(args.config)) {
        const json manifest = read_json(args.config);
        config = config_from_manifest(manifest);
        hermitian = hermitian || manifest.value("hermitian", false);
    } else {
        config = parse_config(args.config);
    }

    fs::path out;
    if (!args.out.empty())
        out = args.out;
    else if (!config.output.path.empty())
        out = config.output.path;
    else
        out = default_output("simulate");

    std::ostringstream csv;
    if (hermitian) {
        const auto record = integrate_hermitian(HermitianConfig::from(config));
        write_observables_csv(csv, compute_observables(record), 1);
    } else {
        const auto record = integrate(config);
        if (record.initial_residual > kTruncationWarning) {
            std::fprintf(stderr,
                         "warning: initial state truncation residual %.3e exceeds %.0e "
                         "(the cosine basis cannot represent the odd part of the state)\n",
                         record.initial_residual, kTruncationWarning);
        }
        write_observables_csv(csv, compute_observables(record));
    }
    write_text(out, csv.str());

    json manifest = make_manifest("simulate", to_json(config), {out.string()});
    manifest["hermitian"] = hermitian;
    write_manifest(out, manifest);
    std::cout << out.string() << "\n";
    return 0;
}

// --------------------------------------------------------------------------------------------

struct BerryArgs {
    std::string n = "1";
    double a = 10.0;
    double b = 1.0;
    double alpha = 1.0;
    double omega = 1.0;
    int steps = 256;
    std::string out;
};

int run_berry(const BerryArgs& args)
{
    std::vector<BerryPhaseResult> results;
    for (int n : parse_index_range(args.n))
        results.push_back(berry_phase(n, args.a, args.b, args.alpha, args.omega, args.steps));

    std::ostringstream csv;
    write_berry_csv(csv, results);
    const fs::path out = args.out.empty() ? default_output("berry") : fs::path(args.out);
    write_text(out, csv.str());
    write_manifest(out, make_manifest("berry",
                                      {{"n", args.n},
                                       {"a", args.a},
                                       {"b", args.b},
                                       {"alpha", args.alpha},
                                       {"omega", args.omega},
                                       {"steps", args.steps}},
                                      {out.string()}));
    std::cout << out.string() << "\n";
    return 0;
}

// --------------------------------------------------------------------------------------------

struct SweepArgs {
    std::string config;
    std::string axis;
    std::vector<double> values;
    std::string out_dir;
    unsigned jobs = 0;
};

int run_sweep_command(const SweepArgs& args)
{
    const SimulationConfig base =
        is_manifest(args.config) ? config_from_manifest(read_json(args.config)) : parse_config(args.config);
    const SweepAxis axis = sweep_axis_from_string(args.axis);
    const fs::path dir = args.out_dir.empty() ? fs::path("out") / ("sweep-" + utc_timestamp()) : fs::path(args.out_dir);

    const auto runs = run_sweep(base, axis, args.values, args.jobs);

    json index = json::array();
    std::vector<std::string> outputs;
    int failed = 0;
    for (const auto& run : runs) {
        if (!run.ok()) {
            ++failed;
            index.push_back({{"value", run.value}, {"error", run.error}});
            std::cerr << json{{"error", {{"type", "run_failed"}, {"axis", args.axis}, {"value", run.value},
                                         {"message", run.error}}}}.dump()
                      << "\n";
            continue;
        }
        std::ostringstream csv;
        write_observables_csv(csv, *run.series);
        const fs::path out = dir / (std::string(to_string(axis)) + "-" + format_number(run.value) + ".csv");
        write_text(out, csv.str());
        json manifest = make_manifest("simulate", to_json(*run.config), {out.string()});
        manifest["hermitian"] = false;
        write_manifest(out, manifest);
        outputs.push_back(out.string());
        index.push_back({{"value", run.value}, {"output", out.string()}});
    }

    json manifest = make_manifest("sweep", to_json(base), outputs);
    manifest["axis"] = args.axis;
    manifest["values"] = args.values;
    manifest["runs"] = index;
    write_text(dir / "index.manifest.json", manifest.dump(2) + "\n");
    std::cout << (dir / "index.manifest.json").string() << "\n";
    return failed == 0 ? 0 : 3;
}

// --------------------------------------------------------------------------------------------

int run_oracle_check(int n_max)
{
    const auto report = overlap_oracle_check(n_max);
    std::cout << json{{"n_max", n_max},
                      {"max_i2_error", report.max_i2_error},
                      {"max_i1_magnitude", report.max_i1_magnitude},
                      {"worst_n", report.worst_n},
                      {"worst_m", report.worst_m}}
                     .dump()
              << "\n";
    return 0;
}

void report_error(const char* type, const std::string& message, const std::string& key = {})
{
    json err = {{"type", type}, {"message", message}};
    if (!key.empty()) err["key"] = key;
    std::cerr << json{{"error", err}}.dump() << "\n";
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Spectral simulator for a PT-symmetric box with moving walls"};
    app.set_version_flag("--version", PTBOX_VERSION);
    app.require_subcommand(1);

    SpectrumArgs spectrum;
    auto* spectrum_cmd = app.add_subcommand("spectrum", "Static eigenvalues and normalizations as CSV");
    spectrum_cmd->add_option("--n-max", spectrum.n_max, "Largest quantum number")->capture_default_str();
    spectrum_cmd->add_option("--length", spectrum.length, "Half-width L of the box")->capture_default_str();
    spectrum_cmd->add_option("--alpha", spectrum.alpha, "Robin parameter")->capture_default_str();
    spectrum_cmd->add_option("--out", spectrum.out, "Output CSV");

    SimulateArgs simulate;
    auto* simulate_cmd = app.add_subcommand("simulate", "Integrate the moving-wall dynamics");
    simulate_cmd->add_option("--config", simulate.config, "TOML config or a manifest .json")
        ->required()
        ->check(CLI::ExistingFile);
    simulate_cmd->add_option("--out", simulate.out, "Output CSV");
    simulate_cmd->add_flag("--hermitian", simulate.hermitian, "Run the Dirichlet reference box instead");

    BerryArgs berry;
    auto* berry_cmd = app.add_subcommand("berry", "Geometric phase over one wall period");
    berry_cmd->add_option("--n", berry.n, "Quantum number or range, e.g. 1..3")->capture_default_str();
    berry_cmd->add_option("--a", berry.a, "Mean half-width")->capture_default_str();
    berry_cmd->add_option("--b", berry.b, "Oscillation amplitude")->capture_default_str();
    berry_cmd->add_option("--alpha", berry.alpha, "Robin parameter")->capture_default_str();
    berry_cmd->add_option("--omega", berry.omega, "Wall frequency")->capture_default_str();
    berry_cmd->add_option("--steps", berry.steps, "Initial Simpson panels (>= 256)")->capture_default_str();
    berry_cmd->add_option("--out", berry.out, "Output CSV");

    SweepArgs sweep;
    auto* sweep_cmd = app.add_subcommand("sweep", "Repeat a simulation over one parameter");
    sweep_cmd->add_option("--config", sweep.config, "TOML config or a manifest .json")
        ->required()
        ->check(CLI::ExistingFile);
    sweep_cmd->add_option("--axis", sweep.axis, "b, omega or alpha")->required();
    sweep_cmd->add_option("--values", sweep.values, "Comma-separated values")->required()->delimiter(',');
    sweep_cmd->add_option("--out-dir", sweep.out_dir, "Directory for the per-value CSVs");
    sweep_cmd->add_option("--jobs", sweep.jobs, "Worker threads (0 = all cores)")->capture_default_str();

    int oracle_n_max = 32;
    auto* oracle_cmd = app.add_subcommand("oracle-check", "");
    oracle_cmd->group("");
    oracle_cmd->add_option("--n-max", oracle_n_max)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        report_error("usage", e.what());
        return 2;
    }

    try {
        if (*spectrum_cmd) return run_spectrum(spectrum);
        if (*simulate_cmd) return run_simulate(simulate);
        if (*berry_cmd) return run_berry(berry);
        if (*sweep_cmd) return run_sweep_command(sweep);
        if (*oracle_cmd) return run_oracle_check(oracle_n_max);
    } catch (const ConfigError& e) {
        report_error("config", e.what(), e.key());
    } catch (const TrajectoryError& e) {
        report_error("trajectory", e.what());
    } catch (const IntegrationError& e) {
        report_error("integration", e.what());
    } catch (const QuadratureError& e) {
        report_error("quadrature", e.what());
    } catch (const std::exception& e) {
        report_error("runtime", e.what());
    }
    return 1;
}
