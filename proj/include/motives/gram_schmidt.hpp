#pragma once

#include "motives/correspondence.hpp"

namespace motives {

/*
 * Non-commutative Gram-Schmidt for idempotent correspondences.
 *
 * A pair (e, f) with f o e o f = 0 is orthogonalized by
 *     f  <-  (D - e) o f o (D - e),
 * which is the composite of the two unipotent conjugations u = 1 - e o f and
 * u = 1 + f' o e, so idempotency and the per-degree action ranks (hence the
 * induced Kunneth components) are preserved exactly. Pairs are swept in index
 * order, keeping the earlier entry fixed; sweeps repeat until every pairwise
 * product vanishes. The defects produced by the projector constructions here
 * die after one sweep; the bound of 2d+1 sweeps turns a non-nilpotent defect
 * into NotOrthogonalizable instead of a loop.
 */
inline std::vector<Correspondence> gram_schmidt(std::vector<Correspondence> ps) {
    if (ps.empty()) return ps;
    const ModelPtr x = ps.front().source;
    for (const auto& p : ps) {
        detail::check_match(p.source, p.target, "gram_schmidt: not an endo-correspondence");
        detail::check_match(p.source, x, "gram_schmidt: mixed models");
        if (!is_projector(p)) throw NotIdempotent("gram_schmidt: input is not idempotent");
    }

    const Correspondence d = diagonal(x);
    const std::size_t max_sweeps = 2 * x->dim + 1;
    for (std::size_t sweep = 0; sweep <= max_sweeps; ++sweep) {
        bool clean = true;
        for (std::size_t i = 0; i < ps.size(); ++i)
            for (std::size_t j = 0; j < ps.size(); ++j) {
                if (i == j) continue;
                if (!compose(ps[i], ps[j]).is_zero() || !compose(ps[j], ps[i]).is_zero()) {
                    clean = false;
                }
            }
        if (clean) return ps;
        if (sweep == max_sweeps) break;

        for (std::size_t i = 0; i < ps.size(); ++i)
            for (std::size_t j = i + 1; j < ps.size(); ++j) {
                const Correspondence& e = ps[i];
                Correspondence& f = ps[j];
                if (compose(e, f).is_zero() && compose(f, e).is_zero()) continue;
                if (!compose(f, compose(e, f)).is_zero()) continue;  // retry after other fixes
                const Correspondence c = d - e;
                f = compose(c, compose(f, c));
            }
    }
    throw NotOrthogonalizable("gram_schmidt: pairwise products do not vanish within the sweep bound");
}

}  // namespace motives
