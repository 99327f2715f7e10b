#include "dbr/report.hpp"

#include <cstdio>
#include <sstream>

#include "dbr/error.hpp"

namespace dbr {

const char* kVersion = "0.1.0";

namespace {

nlohmann::json graph_summary(const Graph& g) {
    nlohmann::json out = {
        {"n", g.vertex_count()},
        {"edges", g.edge_count()},
        {"degree_min", g.min_degree()},
        {"degree_max", g.max_degree()},
        {"regular", g.is_regular()},
        {"bipartite", is_bipartite(g)},
    };
    DistanceData dd(g);
    out["diameter"] = dd.diameter();
    auto cycle = girth(g);
    out["girth"] = cycle ? nlohmann::json(*cycle) : nlohmann::json("acyclic");
    if (out["bipartite"].get<bool>()) {
        Bipartition part = bipartition(g);
        out["sides"] = {part.side_b.size(), part.side_c.size()};
        try {
            auto [k, ell] = semiregular_profile(g, part);
            out["semiregular"] = {k, ell};
        } catch (const Error&) {
            out["semiregular"] = nullptr;
        }
    }
    return out;
}

nlohmann::json spectrum_json(const SpectralDecomposition& dec) {
    nlohmann::json out = nlohmann::json::array();
    for (int r = 0; r < dec.count(); ++r)
        out.push_back({{"eigenvalue", dec.eigenvalue(r)},
                       {"multiplicity", dec.multiplicity(r)}});
    return out;
}

nlohmann::json excess_json(const ExcessReport& report) {
    nlohmann::json out;
    out["excess"] = report.excess;
    out["p_global"] = report.p_global ? nlohmann::json(*report.p_global) : nullptr;
    out["p_b"] = report.p_b ? nlohmann::json(*report.p_b) : nullptr;
    out["p_c"] = report.p_c ? nlohmann::json(*report.p_c) : nullptr;
    out["t"] = report.t ? nlohmann::json(*report.t) : nullptr;
    out["k_d_b"] = report.k_d_b ? nlohmann::json(*report.k_d_b) : nullptr;
    out["k_d_c"] = report.k_d_c ? nlohmann::json(*report.k_d_c) : nullptr;
    return out;
}

}  // namespace

nlohmann::json verdict_json(const Verdict& v) {
    return {{"theorem", v.theorem},
            {"outcome", to_string(v.outcome)},
            {"reason", v.reason},
            {"residual", v.residual},
            {"tol", v.tol},
            {"evidence", v.evidence}};
}

void round_floats(nlohmann::json& j) {
    if (j.is_number_float()) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.12g", j.get<double>());
        j = std::strtod(buf, nullptr);
    } else if (j.is_object() || j.is_array()) {
        for (auto& item : j) round_floats(item);
    }
}

nlohmann::json analyze_report(const Graph& g, double tol) {
    nlohmann::json out;
    out["version"] = kVersion;
    out["tol"] = tol;
    out["graph"] = graph_summary(g);
    auto dec = decompose(g, tol);
    out["spectrum"] = spectrum_json(dec);

    ClassifyResult result = classify(g, tol);
    out["classification"] = to_string(result.classification);
    out["oracle"] = result.oracle;
    out["verdicts"] = nlohmann::json::array();
    for (const auto& v : result.verdicts) out["verdicts"].push_back(verdict_json(v));

    if (result.bipartite) {
        Bipartition part = bipartition(g);
        auto block = bipartite_block_checks(dec, part);
        out["bipartite_diagnostics"] = {
            {"pairing_residual", block.pairing_residual},
            {"trace_residual", block.trace_residual},
            {"zero_multiplicity", block.zero_multiplicity},
            {"side_difference", block.side_difference},
        };
    }
    round_floats(out);
    return out;
}

nlohmann::json classify_report(const Graph& g, double tol) {
    nlohmann::json out;
    out["version"] = kVersion;
    out["tol"] = tol;
    out["graph"] = graph_summary(g);
    out["classification"] = to_string(classify(g, tol).classification);
    round_floats(out);
    return out;
}

nlohmann::json excess_command_report(const Graph& g, double tol) {
    nlohmann::json out;
    out["version"] = kVersion;
    out["tol"] = tol;
    out["graph"] = graph_summary(g);
    auto dec = decompose(g, tol);
    out["spectrum"] = spectrum_json(dec);
    DistanceData dd(g);

    out["verdicts"] = nlohmann::json::array();
    ExcessReport merged;
    auto [drg_verdict, drg_report] = spectral_excess_drg(g, dec, dd, tol);
    merged = drg_report;
    out["verdicts"].push_back(verdict_json(drg_verdict));
    if (is_bipartite(g)) {
        Bipartition part = bipartition(g);
        auto [dbrg_verdict, dbrg_report] = spectral_excess_dbrg(g, dec, dd, part, tol);
        merged.p_b = dbrg_report.p_b;
        merged.p_c = dbrg_report.p_c;
        if (!merged.t) merged.t = dbrg_report.t;
        out["verdicts"].push_back(verdict_json(dbrg_verdict));
        Verdict girth_verdict = cospectral_girth_dbrg(g, tol);
        if (girth_verdict.evidence.contains("k_d_b")) {
            merged.k_d_b = girth_verdict.evidence["k_d_b"].get<long long>();
            merged.k_d_c = girth_verdict.evidence["k_d_c"].get<long long>();
        }
        out["verdicts"].push_back(verdict_json(girth_verdict));
    }
    out["excess_report"] = excess_json(merged);
    round_floats(out);
    return out;
}

nlohmann::json halved_command_report(const Graph& g, double tol) {
    nlohmann::json out;
    out["version"] = kVersion;
    out["tol"] = tol;
    out["graph"] = graph_summary(g);
    Bipartition part = bipartition(g);
    try {
        semiregular_profile(g, part);
    } catch (const Error&) {
        // halves are still well-defined; the route verdict reports the reason
    }
    auto halves = halved_graphs(g, part);
    nlohmann::json halved = {
        {"side_b", part.side_b},
        {"side_c", part.side_c},
        {"h_b", {{"n", halves.h_b.vertex_count()}, {"edges", halves.h_b.edge_count()}}},
        {"h_c", {{"n", halves.h_c.vertex_count()}, {"edges", halves.h_c.edge_count()}}},
        {"r", halves.r ? nlohmann::json(*halves.r) : nullptr},
        {"s", halves.s ? nlohmann::json(*halves.s) : nullptr},
    };
    halved["h_b"]["spectrum"] = nlohmann::json::array();
    halved["h_c"]["spectrum"] = nlohmann::json::array();
    auto dec_b = decompose(halves.h_b, tol);
    auto dec_c = decompose(halves.h_c, tol);
    halved["h_b"]["spectrum"] = spectrum_json(dec_b);
    halved["h_c"]["spectrum"] = spectrum_json(dec_c);
    out["halved"] = halved;
    out["verdicts"] = nlohmann::json::array();
    out["verdicts"].push_back(verdict_json(halved_route_dbrg(g, tol)));
    round_floats(out);
    return out;
}

namespace {

void render_value(std::ostringstream& os, const nlohmann::json& v) {
    if (v.is_number_float()) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.12g", v.get<double>());
        os << buf;
    } else if (v.is_string()) {
        os << v.get<std::string>();
    } else {
        os << v.dump();
    }
}

}  // namespace

std::string render_text(const nlohmann::json& report) {
    std::ostringstream os;
    bool classification_only =
        report.contains("classification") && !report.contains("verdicts");
    if (classification_only) {
        os << report["classification"].get<std::string>() << "\n";
        return os.str();
    }
    if (report.contains("graph")) {
        const auto& g = report["graph"];
        os << "graph: n=" << g["n"] << " edges=" << g["edges"]
           << " diameter=" << g["diameter"] << " girth=";
        render_value(os, g["girth"]);
        os << (g["regular"].get<bool>() ? " regular" : "")
           << (g["bipartite"].get<bool>() ? " bipartite" : "") << "\n";
        if (g.contains("semiregular") && !g["semiregular"].is_null())
            os << "semiregular: (" << g["semiregular"][0] << ", "
               << g["semiregular"][1] << ")\n";
    }
    if (report.contains("spectrum")) {
        os << "spectrum:";
        for (const auto& entry : report["spectrum"]) {
            os << "  ";
            render_value(os, entry["eigenvalue"]);
            os << "^" << entry["multiplicity"];
        }
        os << "\n";
    }
    if (report.contains("halved")) {
        const auto& h = report["halved"];
        os << "halved: |B|=" << h["side_b"].size() << " |C|=" << h["side_c"].size()
           << " r=";
        render_value(os, h["r"]);
        os << " s=";
        render_value(os, h["s"]);
        os << "\n";
    }
    if (report.contains("excess_report")) {
        const auto& e = report["excess_report"];
        os << "excess: " << e["excess"].dump() << "\n";
        for (const char* key : {"p_global", "p_b", "p_c", "t", "k_d_b", "k_d_c"}) {
            if (!e[key].is_null()) {
                os << "  " << key << " = ";
                render_value(os, e[key]);
                os << "\n";
            }
        }
    }
    if (report.contains("verdicts")) {
        for (const auto& v : report["verdicts"]) {
            os << v["outcome"].get<std::string>() << "  "
               << v["theorem"].get<std::string>();
            if (!v["reason"].get<std::string>().empty())
                os << " (" << v["reason"].get<std::string>() << ")";
            os << "  residual=";
            render_value(os, v["residual"]);
            os << "\n";
        }
    }
    if (report.contains("classification"))
        os << report["classification"].get<std::string>() << "\n";
    return os.str();
}

}  // namespace dbr
