#include "aitv/manifest.hpp"

#include <charconv>
#include <fstream>
#include <string>

#include <json.hpp>

#include "aitv/errors.hpp"
#include "aitv/rng.hpp"

namespace aitv {

namespace {

using ordered_json = nlohmann::ordered_json;

template <typename T>
T field_as(const ordered_json& v, const std::string& key) {
    try {
        return v.get<T>();
    } catch (const nlohmann::json::exception&) {
        throw config_error("manifest key '" + key + "' has the wrong type");
    }
}

InitKind parse_init(const std::string& text) {
    if (text == "auto") return InitKind::Auto;
    if (text == "circle") return InitKind::SingleCircle;
    if (text == "twin") return InitKind::TwinCircles;
    if (text == "random") return InitKind::RandomNormalized;
    throw config_error("init must be auto, circle, twin or random, got '" + text + "'");
}

InitPolicy init_policy_from(const RunManifest& m) {
    InitPolicy policy;
    policy.kind = parse_init(m.init);
    policy.radius = m.init_radius;
    policy.seed = derive_seed(m.seed, 1);
    return policy;
}

PdhglsParams pdhgls_from(const RunManifest& m) {
    PdhglsParams p;
    p.tau0 = m.tau0;
    p.beta = m.beta;
    p.delta = m.delta;
    p.mu = m.mu;
    p.inner_tol = m.tol_inner;
    p.max_inner_iters = m.max_inner;
    return p;
}

} // namespace

void validate(const RunManifest& m) {
    if (m.model != "aicv" && m.model != "aifr")
        throw config_error("model must be aicv or aifr, got '" + m.model + "'");
    if (m.input.empty()) throw config_error("input path is empty");
    if (m.alpha < 0.0 || m.alpha > 1.0)
        throw config_error("alpha must lie in [0,1], got " + std::to_string(m.alpha));
    if (!(m.lambda > 0.0))
        throw config_error("lambda must be positive, got " + std::to_string(m.lambda));
    if (m.model == "aicv" && (m.phases < 1 || m.phases > 8))
        throw config_error("phases must lie in 1..8, got " + std::to_string(m.phases));
    if (m.model == "aifr") {
        if (m.regions < 2)
            throw config_error("regions must be at least 2, got " +
                               std::to_string(m.regions));
        if (!(m.nu > 0.0))
            throw config_error("nu must be positive, got " + std::to_string(m.nu));
    }
    if (!(m.c > 0.0))
        throw config_error("c must be positive, got " + std::to_string(m.c));
    if (!(m.tau0 > 0.0))
        throw config_error("tau0 must be positive, got " + std::to_string(m.tau0));
    if (!(m.beta > 0.0))
        throw config_error("beta must be positive, got " + std::to_string(m.beta));
    if (!(m.delta > 0.0 && m.delta < 1.0))
        throw config_error("delta must lie in (0,1), got " + std::to_string(m.delta));
    if (!(m.mu > 0.0 && m.mu < 1.0))
        throw config_error("mu must lie in (0,1), got " + std::to_string(m.mu));
    if (!(m.tol_inner > 0.0))
        throw config_error("tol_inner must be positive, got " +
                           std::to_string(m.tol_inner));
    if (m.max_inner < 1)
        throw config_error("max_inner must be positive, got " +
                           std::to_string(m.max_inner));
    if (m.tol_outer < 0.0)
        throw config_error("tol_outer must be nonnegative, got " +
                           std::to_string(m.tol_outer));
    if (m.max_outer < 0)
        throw config_error("max_outer must be nonnegative, got " +
                           std::to_string(m.max_outer));
    parse_noise(m.noise, m.seed);
    parse_init(m.init);
    if (m.init_radius < 0.0)
        throw config_error("init_radius must be nonnegative, got " +
                           std::to_string(m.init_radius));
    if (m.out.empty()) throw config_error("out directory is empty");
}

RunManifest manifest_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open " + path + " for reading");
    ordered_json j = ordered_json::parse(in, nullptr, false);
    if (j.is_discarded()) throw config_error(path + " is not valid json");
    if (!j.is_object()) throw config_error(path + " must hold a json object");

    RunManifest m;
    for (const auto& [key, value] : j.items()) {
        if (key == "model") m.model = field_as<std::string>(value, key);
        else if (key == "input") m.input = field_as<std::string>(value, key);
        else if (key == "grayscale") m.grayscale = field_as<bool>(value, key);
        else if (key == "phases") m.phases = field_as<int>(value, key);
        else if (key == "regions") m.regions = field_as<int>(value, key);
        else if (key == "alpha") m.alpha = field_as<double>(value, key);
        else if (key == "lambda") m.lambda = field_as<double>(value, key);
        else if (key == "nu") m.nu = field_as<double>(value, key);
        else if (key == "c") m.c = field_as<double>(value, key);
        else if (key == "tau0") m.tau0 = field_as<double>(value, key);
        else if (key == "beta") m.beta = field_as<double>(value, key);
        else if (key == "delta") m.delta = field_as<double>(value, key);
        else if (key == "mu") m.mu = field_as<double>(value, key);
        else if (key == "tol_inner") m.tol_inner = field_as<double>(value, key);
        else if (key == "max_inner") m.max_inner = field_as<int>(value, key);
        else if (key == "tol_outer") m.tol_outer = field_as<double>(value, key);
        else if (key == "max_outer") m.max_outer = field_as<int>(value, key);
        else if (key == "noise") m.noise = field_as<std::string>(value, key);
        else if (key == "seed") m.seed = field_as<std::uint64_t>(value, key);
        else if (key == "init") m.init = field_as<std::string>(value, key);
        else if (key == "init_radius") m.init_radius = field_as<double>(value, key);
        else if (key == "gt") m.gt = field_as<std::string>(value, key);
        else if (key == "reference") m.reference = field_as<std::string>(value, key);
        else if (key == "out") m.out = field_as<std::string>(value, key);
        else throw config_error("unknown manifest key '" + key + "'");
    }
    return m;
}

std::string manifest_to_json_string(const RunManifest& m) {
    ordered_json j;
    j["model"] = m.model;
    j["input"] = m.input;
    j["grayscale"] = m.grayscale;
    j["phases"] = m.phases;
    j["regions"] = m.regions;
    j["alpha"] = m.alpha;
    j["lambda"] = m.lambda;
    j["nu"] = m.nu;
    j["c"] = m.c;
    j["tau0"] = m.tau0;
    j["beta"] = m.beta;
    j["delta"] = m.delta;
    j["mu"] = m.mu;
    j["tol_inner"] = m.tol_inner;
    j["max_inner"] = m.max_inner;
    j["tol_outer"] = m.tol_outer;
    j["max_outer"] = m.max_outer;
    j["noise"] = m.noise;
    j["seed"] = m.seed;
    j["init"] = m.init;
    j["init_radius"] = m.init_radius;
    j["gt"] = m.gt;
    j["reference"] = m.reference;
    j["out"] = m.out;
    return j.dump(2) + "\n";
}

std::optional<NoiseSpec> parse_noise(const std::string& text, std::uint64_t seed) {
    if (text.empty()) return std::nullopt;
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw config_error("noise must look like spin:<level> or rvin:<level>, got '" +
                           text + "'");
    const std::string kind = text.substr(0, colon);
    const std::string level_text = text.substr(colon + 1);
    NoiseSpec spec;
    if (kind == "spin") spec.kind = NoiseKind::Spin;
    else if (kind == "rvin") spec.kind = NoiseKind::Rvin;
    else throw config_error("noise kind must be spin or rvin, got '" + kind + "'");
    const char* first = level_text.data();
    const char* last = first + level_text.size();
    auto [end, ec] = std::from_chars(first, last, spec.level);
    if (ec != std::errc{} || end != last)
        throw config_error("noise level '" + level_text + "' is not a number");
    if (!(spec.level >= 0.0 && spec.level <= 1.0))
        throw config_error("noise level must lie in [0,1], got " + level_text);
    spec.seed = derive_seed(seed, 0);
    return spec;
}

AicvConfig aicv_config_from(const RunManifest& m) {
    AicvConfig cfg;
    cfg.num_phases = m.phases;
    cfg.alpha = m.alpha;
    cfg.lambda = m.lambda;
    cfg.c = m.c;
    cfg.outer_tol = m.tol_outer;  // 0 stays auto, resolved inside segment
    cfg.max_outer_iters = m.max_outer > 0 ? m.max_outer : 20;
    cfg.pdhgls = pdhgls_from(m);
    cfg.init = init_policy_from(m);
    return cfg;
}

AifrConfig aifr_config_from(const RunManifest& m) {
    AifrConfig cfg;
    cfg.num_regions = m.regions;
    cfg.alpha = m.alpha;
    cfg.lambda = m.lambda;
    cfg.nu = m.nu;
    cfg.c = m.c;
    cfg.outer_tol = m.tol_outer > 0.0 ? m.tol_outer : 1e-4;
    cfg.max_outer_iters = m.max_outer > 0 ? m.max_outer : 40;
    cfg.pdhgls = pdhgls_from(m);
    cfg.init = init_policy_from(m);
    return cfg;
}

} // namespace aitv
