#pragma once

#include "motives/certificate.hpp"
#include "motives/gram_schmidt.hpp"

namespace motives {

/// Data for the intersection-matrix projector: bases {E_i} of H^{2q} and
/// {l_i} of H^{2(n-q)} represented by algebraic classes, the intersection
/// matrix A = (<E_i, l_j>) and B = A^{-1}.
struct ProjectorRecipe {
    ModelPtr variety;
    std::size_t q = 0;
    std::vector<ClassVector> E_basis;
    std::vector<ClassVector> L_basis;
    RationalMatrix A;
    RationalMatrix B;
};

namespace detail {

inline bool is_algebraic(const ClassVector& v) {
    if (v.degree % 2 != 0) return false;
    const auto& flags = v.variety->space.algebraic_flags[v.degree];
    for (std::size_t i = 0; i < v.coords.size(); ++i)
        if (v.coords[i] != 0 && !flags[i]) return false;
    return true;
}

inline RationalMatrix columns(const std::vector<ClassVector>& vs, std::size_t dim) {
    RationalMatrix m(dim, vs.size());
    for (std::size_t j = 0; j < vs.size(); ++j)
        for (std::size_t i = 0; i < dim; ++i) m(i, j) = vs[j].coords[i];
    return m;
}

}  // namespace detail

/// Validates the bases (span, algebraicity), computes A from the pairings
/// and inverts it. Throws RankDeficient / NotFullyAlgebraic / SingularMatrix.
inline ProjectorRecipe make_projector_recipe(const ModelPtr& x, std::size_t q,
                                             std::vector<ClassVector> E_basis,
                                             std::vector<ClassVector> L_basis) {
    const std::size_t n = x->dim;
    if (q < 1 || q > n - 1) throw ShapeMismatch("projector recipe: need 1 <= q <= dim-1");
    const std::size_t de = x->space.dims[2 * q];
    const std::size_t dl = x->space.dims[2 * (n - q)];
    if (E_basis.size() != de || L_basis.size() != dl)
        throw RankDeficient("projector recipe: bases must have full size");
    for (const auto& v : E_basis) {
        if (v.degree != 2 * q) throw ShapeMismatch("projector recipe: E basis degree");
        if (!detail::is_algebraic(v)) throw NotFullyAlgebraic("projector recipe: E basis not algebraic");
    }
    for (const auto& v : L_basis) {
        if (v.degree != 2 * (n - q)) throw ShapeMismatch("projector recipe: L basis degree");
        if (!detail::is_algebraic(v)) throw NotFullyAlgebraic("projector recipe: L basis not algebraic");
    }
    const RationalMatrix ec = detail::columns(E_basis, de);
    const RationalMatrix lc = detail::columns(L_basis, dl);
    if (rank(ec) != de || rank(lc) != dl)
        throw RankDeficient("projector recipe: basis does not span its degree");

    ProjectorRecipe r{x, q, std::move(E_basis), std::move(L_basis), {}, {}};
    // A[i][j] = <E_i, l_j> through the degree-2q pairing
    r.A = ec.transposed() * x->pairing(2 * q) * lc;
    r.B = invert(r.A);
    return r;
}

/// All standard basis vectors of H^{2q} and H^{2(n-q)}; the usual recipe for
/// catalog models whose even cohomology is fully algebraic.
inline ProjectorRecipe standard_recipe(const ModelPtr& x, std::size_t q) {
    std::vector<ClassVector> e, l;
    for (std::size_t i = 0; i < x->space.dims[2 * q]; ++i) e.push_back(basis_class(x, 2 * q, i));
    for (std::size_t i = 0; i < x->space.dims[2 * (x->dim - q)]; ++i)
        l.push_back(basis_class(x, 2 * (x->dim - q), i));
    return make_projector_recipe(x, q, std::move(e), std::move(l));
}

/// p = sum b_ij (l_i x E_j): an idempotent acting as the identity on H^{2q}
/// and as zero in every other degree; its transpose is the identity on
/// H^{2(n-q)}.
inline Correspondence middle_projector(const ProjectorRecipe& r) {
    Correspondence p = zero_correspondence(r.variety, r.variety);
    for (std::size_t i = 0; i < r.L_basis.size(); ++i)
        for (std::size_t j = 0; j < r.E_basis.size(); ++j) {
            if (r.B(i, j) == 0) continue;
            p = p + r.B(i, j) * external_product(r.L_basis[i], r.E_basis[j]);
        }
    return p;
}

/*
 * Murre set for a 3-fold whose H^2 and H^4 are generated by algebraic
 * classes: p_0 = [pt] x X and p_6 = X x [pt], the middle projectors from the
 * two recipes, Kunneth projectors in odd degrees 1 and 5 (the realization
 * stand-ins for the Picard/Albanese projectors), Gram-Schmidt on those six,
 * and p_3 as the complement. At the level of this realization the odd
 * stand-ins are exact; their Chow-level refinement is recorded in the
 * certificate as not computed.
 */
inline MurreSet murre_set_algebraic(const ModelPtr& x, const ProjectorRecipe& q1,
                                    const ProjectorRecipe& q2) {
    if (x->dim != 3) throw ShapeMismatch("murre_set_algebraic: expects a 3-fold model");
    for (std::size_t k : {std::size_t{2}, std::size_t{4}})
        for (bool flag : x->space.algebraic_flags[k])
            if (!flag) throw NotFullyAlgebraic("murre_set_algebraic: H^2/H^4 must be algebraic");

    auto one = basis_class(x, 0, 0);
    auto pt = basis_class(x, 2 * x->dim, 0);

    std::vector<Correspondence> ps;
    ps.push_back(external_product(pt, one));  // p0 = {e} x X
    ps.push_back(kunneth_projector(x, 1));
    ps.push_back(middle_projector(q1));
    ps.push_back(middle_projector(q2));
    ps.push_back(kunneth_projector(x, 5));
    ps.push_back(transpose(ps.front()));  // p6 = X x {e}

    ps = gram_schmidt(std::move(ps));

    Correspondence rest = diagonal(x);
    for (const auto& p : ps) rest = rest - p;

    MurreSet set;
    set.variety = x;
    set.projectors = {ps[0], ps[1], ps[2], rest, ps[3], ps[4], ps[5]};
    set.certificate = verify_murre_axioms(x, set.projectors);
    set.certificate.add("p4 = transpose(p2)", set.projectors[4] == transpose(set.projectors[2]));
    set.certificate.add("p6 = transpose(p0)", set.projectors[6] == transpose(set.projectors[0]));
    set.certificate.add("p1/p5 Picard-Albanese refinement", true,
                        "cohomological shadow only; not computed — Chow-level");
    set.certificate.add("axioms (4)-(6)", true, "not computed — Chow-level");
    return set;
}

}  // namespace motives
