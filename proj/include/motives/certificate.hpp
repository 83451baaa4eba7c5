#pragma once

#include "motives/correspondence.hpp"

namespace motives {

struct CertificateCheck {
    std::string name;
    bool pass = false;
    std::string detail;  // "not computed — Chow-level" entries carry pass = true
};

struct Certificate {
    std::vector<CertificateCheck> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    void add(std::string name, bool pass, std::string detail = "") {
        checks.push_back({std::move(name), pass, std::move(detail)});
    }
};

/// An indexed family p_0..p_{2d} together with the record of every verified
/// axiom. The certificate never throws: failures are entries.
struct MurreSet {
    ModelPtr variety;
    std::vector<Correspondence> projectors;
    Certificate certificate;
};

/// Axioms (1)-(3) in the realization: pairwise-orthogonal idempotents,
/// sum equal to the diagonal, and p_i inducing the i-th Kunneth component
/// (the action on H^j is exactly delta_ij * id).
inline Certificate verify_murre_axioms(const ModelPtr& x, const std::vector<Correspondence>& ps) {
    Certificate cert;
    const std::size_t n = ps.size();

    for (std::size_t i = 0; i < n; ++i)
        cert.add("idempotent p" + std::to_string(i), is_projector(ps[i]));

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            cert.add("orthogonal p" + std::to_string(i) + " p" + std::to_string(j),
                     compose(ps[i], ps[j]).is_zero());
        }

    Correspondence sum = zero_correspondence(x, x);
    for (const auto& p : ps) sum = sum + p;
    cert.add("sum equals diagonal", sum == diagonal(x));

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= 2 * x->dim; ++j) {
            const RationalMatrix m = action_matrix(ps[i], j);
            const bool want_id = (i == j);
            const bool ok = want_id ? m == RationalMatrix::identity(x->space.dims[j]) : m.is_zero();
            cert.add("kunneth p" + std::to_string(i) + " on H^" + std::to_string(j), ok,
                     "rank " + std::to_string(rank(m)) + "/" + std::to_string(x->space.dims[j]));
        }
    return cert;
}

}  // namespace motives
