#pragma once

#include "motives/morphism.hpp"
#include "motives/variety.hpp"

namespace motives {

/*
 * Degree-zero correspondences X -> Y, stored as Kunneth tensor blocks:
 * T_k has shape dims_X[k] x dims_Y[2dX-k] and holds the coefficients of the
 * component in H^k(X) (x) H^{2dX-k}(Y). Blocks whose Y-degree falls outside
 * 0..2dY are materialized as empty matrices; zero correspondences keep
 * explicit zero blocks so equality is plain structural equality.
 *
 * Sign conventions, derived once against the elliptic-curve model (nonzero
 * odd cohomology) and frozen:
 *   - pairings satisfy P_{2d-k} = (-1)^k P_k^T;
 *   - action on H^j: v |-> (P^X_j T_{2dX-j})^T v, no extra sign;
 *   - composition: T_k(g o f) = T_k(f) P^Y_{2dX-k} T_{2dY-2dX+k}(g), no sign;
 *   - diagonal: T_k = P_{2d-k}^{-1};
 *   - transpose: T_k(f^t) = (-1)^k T_{2d-k}(f)^T.
 * With this placement the identity and associativity laws hold exactly and
 * transpose is an anti-homomorphism; any other placement fails on a model
 * with odd cohomology.
 */
struct Correspondence {
    ModelPtr source;
    ModelPtr target;
    std::vector<RationalMatrix> blocks;  // T_k, k = 0..2*source->dim

    bool operator==(const Correspondence& o) const {
        return source->space.dims == o.source->space.dims &&
               target->space.dims == o.target->space.dims && blocks == o.blocks;
    }
    bool operator!=(const Correspondence& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& b : blocks)
            if (!b.is_zero()) return false;
        return true;
    }
};

/// Cohomology class in the chosen basis of H^degree(variety).
struct ClassVector {
    ModelPtr variety;
    std::size_t degree = 0;
    std::vector<Rational> coords;

    bool operator==(const ClassVector& o) const {
        return variety->space.dims == o.variety->space.dims && degree == o.degree &&
               coords == o.coords;
    }
    bool operator!=(const ClassVector& o) const { return !(*this == o); }
};

inline ClassVector basis_class(const ModelPtr& x, std::size_t degree, std::size_t index) {
    ClassVector v{x, degree, std::vector<Rational>(x->space.dims[degree])};
    v.coords[index] = 1;
    return v;
}

inline ClassVector zero_class(const ModelPtr& x, std::size_t degree) {
    return {x, degree, std::vector<Rational>(x->dim_at(static_cast<long>(degree)))};
}

namespace detail {

inline std::size_t block_cols(const ModelPtr& x, const ModelPtr& y, std::size_t k) {
    return y->dim_at(2 * static_cast<long>(x->dim) - static_cast<long>(k));
}

inline void check_match(const ModelPtr& a, const ModelPtr& b, const char* what) {
    if (a->space.dims != b->space.dims) throw ShapeMismatch(what);
}

}  // namespace detail

inline Correspondence zero_correspondence(const ModelPtr& x, const ModelPtr& y) {
    Correspondence c{x, y, {}};
    for (std::size_t k = 0; k <= 2 * x->dim; ++k)
        c.blocks.push_back(RationalMatrix::zero(x->space.dims[k], detail::block_cols(x, y, k)));
    return c;
}

inline Correspondence operator+(const Correspondence& a, const Correspondence& b) {
    detail::check_match(a.source, b.source, "correspondence sum: source mismatch");
    detail::check_match(a.target, b.target, "correspondence sum: target mismatch");
    Correspondence c{a.source, a.target, {}};
    for (std::size_t k = 0; k < a.blocks.size(); ++k) c.blocks.push_back(a.blocks[k] + b.blocks[k]);
    return c;
}

inline Correspondence operator-(const Correspondence& a, const Correspondence& b) {
    detail::check_match(a.source, b.source, "correspondence difference: source mismatch");
    detail::check_match(a.target, b.target, "correspondence difference: target mismatch");
    Correspondence c{a.source, a.target, {}};
    for (std::size_t k = 0; k < a.blocks.size(); ++k) c.blocks.push_back(a.blocks[k] - b.blocks[k]);
    return c;
}

inline Correspondence operator*(const Rational& s, const Correspondence& a) {
    Correspondence c{a.source, a.target, {}};
    for (const auto& b : a.blocks) c.blocks.push_back(s * b);
    return c;
}

/// The diagonal class: T_k = pairings[2d-k]^{-1}, the unique degree-zero
/// self-correspondence acting as the identity on every H^k.
inline Correspondence diagonal(const ModelPtr& x) {
    Correspondence c{x, x, {}};
    for (std::size_t k = 0; k <= 2 * x->dim; ++k) c.blocks.push_back(invert(x->pairing(2 * x->dim - k)));
    return c;
}

/// Identity on H^j, zero elsewhere: the single block T_{2d-j} = pairings[j]^{-1}.
inline Correspondence kunneth_projector(const ModelPtr& x, std::size_t j) {
    Correspondence c = zero_correspondence(x, x);
    c.blocks[2 * x->dim - j] = invert(x->pairing(j));
    return c;
}

/// Rank-one correspondence a (x) b; requires deg a + deg b = 2 dim X.
inline Correspondence external_product(const ClassVector& a, const ClassVector& b) {
    if (a.degree + b.degree != 2 * a.variety->dim)
        throw ShapeMismatch("external_product: degrees must sum to 2 dim(X)");
    Correspondence c = zero_correspondence(a.variety, b.variety);
    RationalMatrix& t = c.blocks[a.degree];
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
        if (a.coords[i] == 0) continue;
        for (std::size_t j = 0; j < b.coords.size(); ++j)
            if (b.coords[j] != 0) t(i, j) = a.coords[i] * b.coords[j];
    }
    return c;
}

/// g o f: contraction of f's right tensor legs against g's left legs
/// through the middle Poincare pairing.
inline Correspondence compose(const Correspondence& g, const Correspondence& f) {
    detail::check_match(f.target, g.source, "compose: middle models disagree");
    const std::size_t dx = f.source->dim, dy = f.target->dim;
    Correspondence c{f.source, g.target, {}};
    for (std::size_t k = 0; k <= 2 * dx; ++k) {
        const long mid = 2 * static_cast<long>(dx) - static_cast<long>(k);
        const long gl = 2 * static_cast<long>(dy) - mid;
        if (mid < 0 || mid > static_cast<long>(2 * dy) || gl < 0 || gl > static_cast<long>(2 * dy)) {
            c.blocks.push_back(
                RationalMatrix::zero(f.source->space.dims[k], detail::block_cols(f.source, g.target, k)));
            continue;
        }
        c.blocks.push_back(f.blocks[k] * f.target->pairing(static_cast<std::size_t>(mid)) *
                           g.blocks[static_cast<std::size_t>(gl)]);
    }
    return c;
}

/// Transpose (swap of the two factors); only defined between models of equal
/// dimension, which is where degree-zero correspondences stay degree zero.
inline Correspondence transpose(const Correspondence& f) {
    if (f.source->dim != f.target->dim)
        throw ShapeMismatch("transpose: source and target dimension differ");
    const std::size_t d = f.source->dim;
    Correspondence c{f.target, f.source, {}};
    for (std::size_t k = 0; k <= 2 * d; ++k)
        c.blocks.push_back(Rational(pairing_symmetry_sign(k)) * f.blocks[2 * d - k].transposed());
    return c;
}

/// Matrix of the induced map H^j(X) -> H^j(Y) on column coordinate vectors.
inline RationalMatrix action_matrix(const Correspondence& f, std::size_t j) {
    const std::size_t dx = f.source->dim;
    const long k = 2 * static_cast<long>(dx) - static_cast<long>(j);
    const std::size_t rows = f.target->dim_at(static_cast<long>(j));
    const std::size_t cols = f.source->dim_at(static_cast<long>(j));
    if (j > 2 * dx || k < 0) return RationalMatrix::zero(rows, cols);
    return (f.source->pairing(j) * f.blocks[static_cast<std::size_t>(k)]).transposed();
}

inline ClassVector act(const Correspondence& f, const ClassVector& v) {
    detail::check_match(v.variety, f.source, "act: class lives on the wrong model");
    if (v.degree > 2 * f.target->dim) return zero_class(f.target, v.degree);
    const RationalMatrix m = action_matrix(f, v.degree);
    ClassVector out = zero_class(f.target, v.degree);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Rational acc = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * v.coords[j];
        out.coords[i] = acc;
    }
    return out;
}

inline bool is_projector(const Correspondence& f) {
    detail::check_match(f.source, f.target, "is_projector: not an endo-correspondence");
    return compose(f, f) == f;
}

inline bool are_orthogonal(const Correspondence& f, const Correspondence& g) {
    return compose(f, g).is_zero() && compose(g, f).is_zero();
}

/// Graph of an equal-dimensional morphism (e.g. a blow-down): the
/// correspondence from the morphism's domain to its codomain acting as the
/// pushforward; its transpose acts as the pullback. T_k = F_k P^{-1}.
inline Correspondence graph(const MorphismModel& m) {
    if (m.source->dim != m.target->dim)
        throw ShapeMismatch("graph: only defined for equal-dimensional morphisms");
    const std::size_t d = m.source->dim;
    Correspondence c{m.target, m.source, {}};
    for (std::size_t k = 0; k <= 2 * d; ++k)
        c.blocks.push_back(m.pullback[k] * invert(m.source->pairing(2 * d - k)));
    return c;
}

}  // namespace motives
