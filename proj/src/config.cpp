#include <fstream>
#include <set>
#include <sstream>

#include "nsf/config.hpp"

namespace nsf {

namespace {

using io::ordered_json;

void reject_unknown(const ordered_json& obj, const std::set<std::string>& allowed,
                    const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key()))
            throw std::invalid_argument("config: unknown key '" + it.key() + "' in " + where);
}

double num(const ordered_json& obj, const char* key, double fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_number()) throw std::invalid_argument(std::string("config: ") + key + " must be a number");
    return obj[key].get<double>();
}

bool flag(const ordered_json& obj, const char* key, bool fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_boolean()) throw std::invalid_argument(std::string("config: ") + key + " must be a bool");
    return obj[key].get<bool>();
}

}  // namespace

RunConfig parse_config(const io::ordered_json& doc) {
    if (!doc.is_object()) throw std::invalid_argument("config: document must be a JSON object");
    reject_unknown(doc,
                   {"gas", "plus", "strengths", "lambda_weight", "h", "solver", "snapshot_times",
                    "use_variant_m", "seed"},
                   "top level");
    RunConfig cfg;
    SimulationSetup& s = cfg.setup;

    if (doc.contains("gas")) {
        const auto& g = doc["gas"];
        reject_unknown(g, {"R", "gamma", "mu", "kappa"}, "gas");
        s.gas.R = num(g, "R", s.gas.R);
        s.gas.gamma = num(g, "gamma", s.gas.gamma);
        s.gas.mu = num(g, "mu", s.gas.mu);
        s.gas.kappa = num(g, "kappa", s.gas.kappa);
    }
    if (doc.contains("plus")) {
        const auto& p = doc["plus"];
        reject_unknown(p, {"v", "u", "theta"}, "plus");
        s.plus.v = num(p, "v", s.plus.v);
        s.plus.u = num(p, "u", s.plus.u);
        s.plus.theta = num(p, "theta", s.plus.theta);
    }
    if (doc.contains("strengths")) {
        const auto& w = doc["strengths"];
        reject_unknown(w, {"delta_R", "delta_C", "delta_S", "delta_max", "contact_toward_hotter"},
                       "strengths");
        s.strengths.delta_R = num(w, "delta_R", s.strengths.delta_R);
        s.strengths.delta_C = num(w, "delta_C", s.strengths.delta_C);
        s.strengths.delta_S = num(w, "delta_S", s.strengths.delta_S);
        s.strengths.delta_max = num(w, "delta_max", s.strengths.delta_max);
        s.strengths.contact_toward_hotter =
            flag(w, "contact_toward_hotter", s.strengths.contact_toward_hotter);
    }
    s.lambda_weight = num(doc, "lambda_weight", s.lambda_weight);
    s.h = num(doc, "h", s.h);
    if (doc.contains("solver")) {
        const auto& v = doc["solver"];
        reject_unknown(v, {"cfl_hyp", "cfl_diff", "T_end", "output_every", "perturbation"},
                       "solver");
        s.solver.cfl_hyp = num(v, "cfl_hyp", s.solver.cfl_hyp);
        s.solver.cfl_diff = num(v, "cfl_diff", s.solver.cfl_diff);
        s.solver.T_end = num(v, "T_end", s.solver.T_end);
        s.solver.output_every = num(v, "output_every", s.solver.output_every);
        if (v.contains("perturbation")) {
            const auto& p = v["perturbation"];
            reject_unknown(p, {"A_v", "A_u", "A_theta", "center", "width"}, "perturbation");
            Perturbation& q = s.solver.perturbation;
            q.A_v = num(p, "A_v", q.A_v);
            q.A_u = num(p, "A_u", q.A_u);
            q.A_theta = num(p, "A_theta", q.A_theta);
            q.center = num(p, "center", q.center);
            q.width = num(p, "width", q.width);
            if (!(q.width > 0.0))
                throw std::invalid_argument("config: perturbation width must be positive");
        }
    }
    if (doc.contains("snapshot_times")) {
        if (!doc["snapshot_times"].is_array())
            throw std::invalid_argument("config: snapshot_times must be an array");
        for (const auto& t : doc["snapshot_times"]) {
            if (!t.is_number())
                throw std::invalid_argument("config: snapshot_times entries must be numbers");
            s.snapshot_times.push_back(t.get<double>());
        }
    }
    s.use_variant_m = flag(doc, "use_variant_m", s.use_variant_m);
    if (doc.contains("seed")) {
        if (!doc["seed"].is_number_unsigned())
            throw std::invalid_argument("config: seed must be a nonnegative integer");
        cfg.seed = doc["seed"].get<std::uint32_t>();
    }

    s.gas.validate();
    s.plus.validate();
    s.strengths.validate();
    s.solver.validate();
    if (!(s.h > 0.0)) throw std::invalid_argument("config: h must be positive");
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open " + path);
    io::ordered_json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("config: JSON parse error: ") + e.what());
    }
    return parse_config(doc);
}

io::ordered_json config_json(const RunConfig& cfg) {
    const SimulationSetup& s = cfg.setup;
    io::ordered_json j;
    j["gas"] = io::gas_json(s.gas);
    j["plus"] = io::state_json(s.plus);
    j["strengths"] = {{"delta_R", s.strengths.delta_R},
                      {"delta_C", s.strengths.delta_C},
                      {"delta_S", s.strengths.delta_S},
                      {"delta_max", s.strengths.delta_max},
                      {"contact_toward_hotter", s.strengths.contact_toward_hotter}};
    j["lambda_weight"] = s.lambda_weight;
    j["h"] = s.h;
    j["solver"] = {{"cfl_hyp", s.solver.cfl_hyp},
                   {"cfl_diff", s.solver.cfl_diff},
                   {"T_end", s.solver.T_end},
                   {"output_every", s.solver.output_every},
                   {"perturbation",
                    {{"A_v", s.solver.perturbation.A_v},
                     {"A_u", s.solver.perturbation.A_u},
                     {"A_theta", s.solver.perturbation.A_theta},
                     {"center", s.solver.perturbation.center},
                     {"width", s.solver.perturbation.width}}}};
    j["snapshot_times"] = s.snapshot_times;
    j["use_variant_m"] = s.use_variant_m;
    j["seed"] = cfg.seed;
    return j;
}

std::string config_hash(const RunConfig& cfg) {
    std::ostringstream hex;
    hex << std::hex << io::fnv1a(config_json(cfg).dump());
    return hex.str();
}

}  // namespace nsf
