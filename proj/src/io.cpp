#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "nsf/io.hpp"

namespace nsf::io {

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.16e", x);
    return buf;
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

void write_csv(const std::string& path, const std::vector<std::string>& metadata,
               const std::vector<std::string>& column_names,
               const std::vector<const std::vector<double>*>& columns) {
    if (column_names.size() != columns.size())
        throw std::invalid_argument("write_csv: column name/count mismatch");
    const std::size_t rows = columns.empty() ? 0 : columns[0]->size();
    for (const auto* c : columns)
        if (c->size() != rows) throw std::invalid_argument("write_csv: ragged columns");

    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_csv: cannot open " + path);
    for (const auto& m : metadata) out << "# " << m << "\n";
    for (std::size_t j = 0; j < column_names.size(); ++j)
        out << column_names[j] << (j + 1 < column_names.size() ? "," : "\n");
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < columns.size(); ++j)
            out << format_double((*columns[j])[i]) << (j + 1 < columns.size() ? "," : "\n");
    if (!out) throw std::runtime_error("write_csv: write failed for " + path);
}

ordered_json gas_json(const GasParams& gas) {
    return {{"R", gas.R}, {"gamma", gas.gamma}, {"mu", gas.mu}, {"kappa", gas.kappa}};
}

ordered_json state_json(const PrimState& s) {
    return {{"v", s.v}, {"u", s.u}, {"theta", s.theta}};
}

ordered_json end_states_json(const GasParams& gas, const EndStates& ends) {
    ordered_json j;
    j["gas"] = gas_json(gas);
    j["minus"] = state_json(ends.minus);
    j["star"] = state_json(ends.star);
    j["starstar"] = state_json(ends.starstar);
    j["plus"] = state_json(ends.plus);
    j["sigma"] = ends.sigma;
    j["sigma_star"] = ends.sigma_star;
    j["p_star_cd"] = ends.p_star_cd;
    j["strengths"] = {{"delta_R", ends.strengths.delta_R},
                      {"delta_C", ends.strengths.delta_C},
                      {"delta_S", ends.strengths.delta_S},
                      {"contact_toward_hotter", ends.strengths.contact_toward_hotter}};
    const auto res = rh_residual(gas, ends.starstar, ends.plus, ends.sigma);
    j["rh_residual"] = {res[0], res[1], res[2]};
    const double lam_right = lambda3(gas, ends.plus.v, ends.plus.theta);
    const double lam_left = lambda3(gas, ends.starstar.v, ends.starstar.theta);
    j["lax"] = {{"lambda3_right", lam_right},
                {"lambda3_left", lam_left},
                {"holds", ends.strengths.delta_S == 0.0 ||
                              (lam_right < ends.sigma && ends.sigma < lam_left)}};
    return j;
}

void write_json(const std::string& path, const ordered_json& doc) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_json: cannot open " + path);
    out << doc.dump(2) << "\n";
    if (!out) throw std::runtime_error("write_json: write failed for " + path);
}

void write_diagnostics_csv(const std::string& path, const std::vector<std::string>& metadata,
                           const std::vector<DiagnosticsRecord>& history) {
    std::vector<double> t, X, Xdot, Ew, Ep, gs, gr, d, ga, sg, lg;
    for (const auto& r : history) {
        t.push_back(r.t);
        X.push_back(r.X);
        Xdot.push_back(r.Xdot);
        Ew.push_back(r.E_weighted);
        Ep.push_back(r.E_plain);
        gs.push_back(r.G_S);
        gr.push_back(r.G_R);
        d.push_back(r.D);
        ga.push_back(r.G_aprime);
        sg.push_back(r.sup_gap);
        lg.push_back(r.l2_gap);
    }
    write_csv(path, metadata,
              {"t", "X", "Xdot", "E_weighted", "E_plain", "G_S", "G_R", "D", "G_aprime", "sup_gap",
               "l2_gap"},
              {&t, &X, &Xdot, &Ew, &Ep, &gs, &gr, &d, &ga, &sg, &lg});
}

void write_snapshot_csv(const std::string& path, const std::vector<std::string>& metadata,
                        const Grid& grid, const Snapshot& snap) {
    std::vector<double> xi(grid.n);
    for (int i = 0; i < grid.n; ++i) xi[i] = grid.point(i);
    write_csv(path, metadata, {"xi", "v", "u", "theta", "vbar", "ubar", "thetabar"},
              {&xi, &snap.field.v, &snap.field.u, &snap.field.theta, &snap.vbar, &snap.ubar,
               &snap.thetabar});
}

}  // namespace nsf::io
