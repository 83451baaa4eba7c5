#pragma once

#include <optional>

#include "motives/variety.hpp"

namespace motives {

/*
 * Per-degree pullback matrices of a morphism of varieties. The underlying
 * map runs target -> source, so pullback[k] : H^k(source) -> H^k(target).
 * The pushforward is never stored: it is the Poincare adjoint of the
 * pullback, <f_* y, s>_source = <y, f^* s>_target, computed on demand.
 */
struct MorphismModel {
    ModelPtr source;  // pullback source (the morphism's codomain)
    ModelPtr target;  // pullback target (the morphism's domain)
    std::vector<RationalMatrix> pullback;  // k = 0..2*source->dim
    std::optional<Rational> declared_degree;
};

inline MorphismModel identity_morphism(const ModelPtr& x) {
    MorphismModel m;
    m.source = m.target = x;
    for (std::size_t k = 0; k <= 2 * x->dim; ++k)
        m.pullback.push_back(RationalMatrix::identity(x->space.dims[k]));
    m.declared_degree = Rational(1);
    return m;
}

/// Matrix of f_*: H^k(target) -> H^{k-2c}(source), c = dim target - dim source.
/// Out-of-range degrees give the zero map into a 0-dimensional space.
inline RationalMatrix pushforward(const MorphismModel& m, std::size_t k) {
    const long c = static_cast<long>(m.target->dim) - static_cast<long>(m.source->dim);
    const long j = static_cast<long>(k) - 2 * c;
    if (k > 2 * m.target->dim) throw ShapeMismatch("pushforward: degree out of range");
    if (j < 0 || j > static_cast<long>(2 * m.source->dim))
        return RationalMatrix::zero(0, m.target->dim_at(static_cast<long>(k)));
    const std::size_t js = static_cast<std::size_t>(j);
    // <G_k y, s>_S = <y, F_{2dY-k} s>_Y  =>  G_k = (P^S_j)^{-T} F^T (P^Y_k)^T
    const RationalMatrix& ps = m.source->pairing(js);
    const RationalMatrix& py = m.target->pairing(k);
    const long lk = 2 * static_cast<long>(m.target->dim) - static_cast<long>(k);
    RationalMatrix f = (lk >= 0 && lk <= static_cast<long>(2 * m.source->dim))
                           ? m.pullback[static_cast<std::size_t>(lk)]
                           : RationalMatrix::zero(m.target->dim_at(lk), 0);
    return invert(ps.transposed()) * f.transposed() * py.transposed();
}

inline ValidationReport validate_morphism(const MorphismModel& m) {
    ValidationReport rep;
    rep.require(m.source && m.target, "morphism: missing variety model");
    if (!rep.ok()) return rep;
    rep.require(m.pullback.size() == 2 * m.source->dim + 1,
                "morphism: pullback must cover degrees 0..2d of the source");
    if (!rep.ok()) return rep;

    for (std::size_t k = 0; k < m.pullback.size(); ++k)
        rep.require(m.pullback[k].rows() == m.target->dim_at(static_cast<long>(k)) &&
                        m.pullback[k].cols() == m.source->space.dims[k],
                    "morphism: pullback[" + std::to_string(k) + "] shape");
    if (!rep.ok()) return rep;

    RationalMatrix unit(1, 1);
    unit(0, 0) = 1;
    rep.require(m.pullback[0] == unit, "morphism: pullback[0] must send 1 to 1");

    if (m.declared_degree) {
        for (std::size_t k = 0; k <= 2 * m.source->dim; ++k) {
            const RationalMatrix comp = pushforward(m, k) * m.pullback[k];
            const RationalMatrix want =
                *m.declared_degree * RationalMatrix::identity(m.source->space.dims[k]);
            if (comp.rows() != want.rows() || comp.cols() != want.cols() || comp != want) {
                rep.violations.push_back("degree identity: pushforward o pullback != m*id at degree " +
                                         std::to_string(k));
            }
        }
    }
    return rep;
}

/// Composite of the underlying maps: given later: Y -> X and earlier: W -> Y,
/// returns the model of later o earlier: W -> X (pullbacks compose the other way).
inline MorphismModel compose_morphisms(const MorphismModel& later, const MorphismModel& earlier) {
    if (earlier.source->space.dims != later.target->space.dims)
        throw ShapeMismatch("compose_morphisms: middle models disagree");
    MorphismModel m;
    m.source = later.source;
    m.target = earlier.target;
    for (std::size_t k = 0; k <= 2 * later.source->dim; ++k) {
        const RationalMatrix& lk = later.pullback[k];
        RationalMatrix ek = k < earlier.pullback.size()
                                ? earlier.pullback[k]
                                : RationalMatrix::zero(m.target->dim_at(static_cast<long>(k)),
                                                       later.target->dim_at(static_cast<long>(k)));
        m.pullback.push_back(ek * lk);
    }
    if (later.declared_degree && earlier.declared_degree)
        m.declared_degree = *later.declared_degree * *earlier.declared_degree;
    return m;
}

}  // namespace motives
