#include "ptbox/manifest.hpp"

#include <chrono>
#include <ctime>

#include "ptbox/errors.hpp"

namespace ptbox {

using nlohmann::json;

json to_json(const SimulationConfig& config)
{
    json j;
    j["trajectory"] = {
        {"kind", std::string(to_string(config.trajectory.kind()))},
        {"a", config.trajectory.a()},
        {"b", config.trajectory.b()},
        {"omega", config.trajectory.omega()},
    };
    j["physics"] = {{"alpha", config.alpha}};
    j["numerics"] = {
        {"n_modes", config.n_modes},
        {"t_final", config.t_final},
        {"dt", config.step.dt},
        {"sample_interval", config.sample_interval},
    };
    if (config.step.rtol)
        j["numerics"]["rtol"] = *config.step.rtol;
    j["initial"] = {{"kind", std::string(to_string(config.initial.kind))}, {"index", config.initial.index}};
    j["output"] = {{"path", config.output.path}, {"format", config.output.format}};
    return j;
}

SimulationConfig config_from_json(const json& j)
{
    SimulationConfig cfg;
    try {
        const auto& t = j.at("trajectory");
        cfg.trajectory = WallTrajectory(wall_kind_from_string(t.at("kind").get<std::string>()), t.at("a").get<double>(),
                                        t.at("b").get<double>(), t.at("omega").get<double>());
        cfg.alpha = j.at("physics").at("alpha").get<double>();
        const auto& n = j.at("numerics");
        cfg.n_modes = n.at("n_modes").get<int>();
        cfg.t_final = n.at("t_final").get<double>();
        cfg.step.dt = n.at("dt").get<double>();
        if (n.contains("rtol"))
            cfg.step.rtol = n.at("rtol").get<double>();
        cfg.sample_interval = n.at("sample_interval").get<double>();
        cfg.initial.kind = initial_kind_from_string(j.at("initial").at("kind").get<std::string>());
        cfg.initial.index = j.at("initial").at("index").get<int>();
        if (j.contains("output")) {
            cfg.output.path = j["output"].value("path", "");
            cfg.output.format = j["output"].value("format", "csv");
        }
    } catch (const json::exception& e) {
        throw ConfigError("<manifest>", e.what());
    } catch (const std::invalid_argument& e) {
        if (dynamic_cast<const ConfigError*>(&e)) throw;
        throw ConfigError("<manifest>", e.what());
    }
    cfg.validate();
    return cfg;
}

std::string utc_timestamp()
{
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y%m%dT%H%M%SZ", &tm);
    return buf;
}

json make_manifest(const std::string& subcommand, const json& resolved, const std::vector<std::string>& outputs)
{
    return {
        {"tool", "ptbox"},
        {"version", PTBOX_VERSION},
        {"subcommand", subcommand},
        {"timestamp", utc_timestamp()},
        {"config", resolved},
        {"outputs", outputs},
    };
}

SimulationConfig config_from_manifest(const json& manifest)
{
    if (!manifest.contains("config"))
        throw ConfigError("config", "manifest has no embedded config");
    return config_from_json(manifest.at("config"));
}

} // namespace ptbox
