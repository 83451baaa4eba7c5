#pragma once

#include "motives/correspondence.hpp"

namespace motives {

/// Precomputed data for compose_oracle on a fixed (source, target) pair:
/// the product model of X x Z and the inverted Gram matrix used to pull the
/// result back out of the test pairings. Building it once amortizes the
/// inversion over many oracle calls on the same models.
struct OracleContext {
    ModelPtr x, z, xz;
    RationalMatrix gram_inv;  // inverse of pairing(2dX) on X x Z, transposed
};

inline OracleContext make_oracle_context(const ModelPtr& x, const ModelPtr& z) {
    OracleContext ctx{x, z, product_model(x, z), {}};
    ctx.gram_inv = invert(ctx.xz->pairing(2 * x->dim).transposed());
    return ctx;
}

/*
 * Literal evaluation of g o f = (pr_13)_* { pr_12^* f cup pr_23^* g } on the
 * tensor cube X x Y x Z, kept independent of compose():
 *
 *   - pr_12^* f occupies cube components (k, 2dX-k, 0) and pr_23^* g the
 *     components (0, l, 2dY-l);
 *   - the only cup products a Kunneth presentation can evaluate are the
 *     complementary-degree ones, which is exactly what survives integration
 *     over the middle factor, so the triple integral against a test class
 *     u'' (x) w'' factors through the three Poincare pairings with the
 *     Koszul sign (-1)^{deg u'' * deg v};
 *   - the class of g o f is then recovered from all its test pairings by
 *     inverting the Gram matrix of the X x Z product model (pushforward by
 *     pairing adjunction).
 */
inline Correspondence compose_oracle(const Correspondence& g, const Correspondence& f,
                                     const OracleContext& ctx) {
    detail::check_match(f.target, g.source, "compose_oracle: middle models disagree");
    detail::check_match(f.source, ctx.x, "compose_oracle: context source mismatch");
    detail::check_match(g.target, ctx.z, "compose_oracle: context target mismatch");

    const ModelPtr& x = f.source;
    const ModelPtr& y = f.target;
    const ModelPtr& z = g.target;
    const std::size_t dx = x->dim, dy = y->dim, dz = z->dim;

    KunnethIndexer idx(x->space.dims, z->space.dims);
    const std::size_t test_deg = 2 * dz;
    const std::size_t result_deg = 2 * dx;

    // pairings of pr_12^* f cup pr_23^* g against every test basis class
    std::vector<Rational> tests(idx.total_dim(test_deg));
    for (std::size_t k1 = 0; k1 <= 2 * dx; ++k1) {
        const long l1 = 2 * static_cast<long>(dx) - static_cast<long>(k1);  // f's Y-leg
        const long l2 = 2 * static_cast<long>(dy) - l1;                     // g's Y-leg
        const long m2 = l1;                                                 // g's Z-leg
        const std::size_t p = 2 * dx - k1;                                  // test X-degree
        if (l1 < 0 || l1 > static_cast<long>(2 * dy)) continue;
        if (l2 < 0 || l2 > static_cast<long>(2 * dy)) continue;
        if (m2 < 0 || m2 > static_cast<long>(2 * dz)) continue;
        if (!idx.component_nonzero(test_deg, p)) continue;
        if (x->space.dims[k1] == 0 || y->dim_at(l1) == 0) continue;

        const RationalMatrix chain =
            Rational(pairing_symmetry_sign(k1)) *
            (x->pairing(k1).transposed() * f.blocks[k1] * y->pairing(static_cast<std::size_t>(l1)) *
             g.blocks[static_cast<std::size_t>(l2)] * z->pairing(static_cast<std::size_t>(m2)));
        for (std::size_t a = 0; a < chain.rows(); ++a)
            for (std::size_t c = 0; c < chain.cols(); ++c)
                tests[idx.index(test_deg, p, a, c)] = chain(a, c);
    }

    // adjunction: coords^T . P_{2dX}(X x Z) = tests^T
    std::vector<Rational> coords(idx.total_dim(result_deg));
    for (std::size_t i = 0; i < coords.size(); ++i) {
        Rational acc = 0;
        for (std::size_t j = 0; j < tests.size(); ++j)
            if (tests[j] != 0) acc += ctx.gram_inv(i, j) * tests[j];
        coords[i] = acc;
    }

    Correspondence out = zero_correspondence(x, z);
    for (std::size_t j = 0; j <= 2 * dx; ++j) {
        if (!idx.component_nonzero(result_deg, j)) continue;
        RationalMatrix& block = out.blocks[j];
        for (std::size_t a = 0; a < block.rows(); ++a)
            for (std::size_t e = 0; e < block.cols(); ++e)
                block(a, e) = coords[idx.index(result_deg, j, a, e)];
    }
    return out;
}

inline Correspondence compose_oracle(const Correspondence& g, const Correspondence& f) {
    return compose_oracle(g, f, make_oracle_context(f.source, g.target));
}

}  // namespace motives
