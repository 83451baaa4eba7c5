#pragma once

#include <json.hpp>

#include <sstream>

#include "motives/certificate.hpp"

namespace motives {

enum class ReportFormat { markdown, json };

namespace report_detail {

struct MotiveCell {
    std::string label;
    bool chow_only = false;
    long rank = -1;  // computed realization rank, when available
};

/// The motive table of a 3-fold: rows CH^0..CH^3, columns h^0..h^6.
/// Chow-only cells carry symbolic labels; realization-checkable cells carry
/// computed ranks (NS and the algebraic H^4 come from the algebraicity
/// flags, the corner cells have rank one).
inline std::vector<std::vector<MotiveCell>> motive_table(const VarietyModel& v) {
    auto count_flags = [&](std::size_t k) {
        long n = 0;
        for (bool b : v.space.algebraic_flags[k])
            if (b) ++n;
        return n;
    };
    std::vector<std::vector<MotiveCell>> t(4, std::vector<MotiveCell>(7, MotiveCell{"0", false, -1}));
    t[0][0] = {"ℤ", false, 1};
    t[1][1] = {"Pic⁰(X)", true, -1};
    t[1][2] = {"NS(X)", false, count_flags(2)};
    t[2][2] = {"Ker(ψ)", true, -1};
    t[2][3] = {"Im(ψ)", true, -1};
    t[2][4] = {"H^{2,2}(X,ℤ)", false, count_flags(4)};
    t[3][4] = {"Ker(alb_X)", true, -1};
    t[3][5] = {"Alb(X)", true, -1};
    t[3][6] = {"ℤ", false, 1};
    return t;
}

inline std::string cell_text(const MotiveCell& c) {
    if (c.chow_only) return c.label + " (not computed — Chow-level)";
    if (c.rank >= 0) return c.label + " (rank " + std::to_string(c.rank) + ")";
    return c.label;
}

}  // namespace report_detail

/// Human-readable (markdown) or machine-readable (json) report of a
/// projector family: validation, per-degree action ranks, the certificate
/// and, for 3-folds, the motive table. Byte-deterministic in its input.
inline std::string emit_report(const MurreSet& set, ReportFormat fmt) {
    if (set.projectors.empty()) throw NotComputed("emit_report: no projectors computed");
    const VarietyModel& v = *set.variety;
    const std::size_t degs = 2 * v.dim + 1;

    std::vector<std::vector<std::size_t>> ranks(set.projectors.size(),
                                                std::vector<std::size_t>(degs));
    for (std::size_t i = 0; i < set.projectors.size(); ++i)
        for (std::size_t j = 0; j < degs; ++j) ranks[i][j] = rank(action_matrix(set.projectors[i], j));

    const bool valid = validate_variety(v).ok();

    if (fmt == ReportFormat::json) {
        nlohmann::ordered_json j;
        j["model"] = v.name;
        j["dim"] = v.dim;
        j["valid"] = valid;
        nlohmann::ordered_json inv = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < ranks.size(); ++i) {
            nlohmann::ordered_json pj;
            pj["projector"] = "p" + std::to_string(i);
            pj["ranks"] = ranks[i];
            inv.push_back(std::move(pj));
        }
        j["inventory"] = std::move(inv);
        nlohmann::ordered_json cs = nlohmann::ordered_json::array();
        for (const auto& c : set.certificate.checks) {
            nlohmann::ordered_json jc;
            jc["check"] = c.name;
            jc["pass"] = c.pass;
            if (!c.detail.empty()) jc["detail"] = c.detail;
            cs.push_back(std::move(jc));
        }
        j["certificate"] = std::move(cs);
        j["all_pass"] = set.certificate.all_pass();
        if (v.dim == 3) {
            auto table = report_detail::motive_table(v);
            nlohmann::ordered_json mt = nlohmann::ordered_json::array();
            for (std::size_t r = 0; r < 4; ++r) {
                nlohmann::ordered_json row = nlohmann::ordered_json::array();
                for (std::size_t c = 0; c < 7; ++c) {
                    const auto& cell = table[r][c];
                    nlohmann::ordered_json jc;
                    jc["label"] = cell.label;
                    if (cell.chow_only) jc["note"] = "not computed — Chow-level";
                    if (cell.rank >= 0) jc["rank"] = cell.rank;
                    row.push_back(std::move(jc));
                }
                mt.push_back(std::move(row));
            }
            j["motive_table"] = std::move(mt);
        }
        return j.dump(2) + "\n";
    }

    std::ostringstream out;
    out << "# Projector report: " << v.name << "\n\n";
    out << "## Validation\n\n";
    out << "- model valid: " << (valid ? "yes" : "NO") << "\n\n";

    out << "## Projector inventory (rank of the action on each H^j)\n\n";
    out << "| projector |";
    for (std::size_t j = 0; j < degs; ++j) out << " H^" << j << " |";
    out << "\n|---|";
    for (std::size_t j = 0; j < degs; ++j) out << "---|";
    out << "\n";
    for (std::size_t i = 0; i < ranks.size(); ++i) {
        out << "| p" << i << " |";
        for (std::size_t j = 0; j < degs; ++j) out << " " << ranks[i][j] << " |";
        out << "\n";
    }
    out << "\n## Certificate\n\n| check | result | detail |\n|---|---|---|\n";
    for (const auto& c : set.certificate.checks)
        out << "| " << c.name << " | " << (c.pass ? "pass" : "FAIL") << " | " << c.detail
            << " |\n";
    out << "\n- overall: " << (set.certificate.all_pass() ? "all-pass" : "FAILURES PRESENT")
        << "\n";

    if (v.dim == 3) {
        out << "\n## Motive table\n\n";
        out << "| M | h⁰(X) | h¹(X) | h²(X) | h³(X) | h⁴(X) | h⁵(X) | h⁶(X) |\n";
        out << "|---|---|---|---|---|---|---|---|\n";
        auto table = report_detail::motive_table(v);
        for (std::size_t r = 0; r < 4; ++r) {
            out << "| CH^" << r << "(M) |";
            for (std::size_t c = 0; c < 7; ++c)
                out << " " << report_detail::cell_text(table[r][c]) << " |";
            out << "\n";
        }
    }
    return out.str();
}

}  // namespace motives
