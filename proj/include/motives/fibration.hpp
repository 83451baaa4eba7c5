#pragma once

#include "motives/certificate.hpp"
#include "motives/projectors.hpp"

namespace motives {

/*
 * Standing situation: f: Y -> S a fibration of a smooth 3-fold over a smooth
 * surface with rationally connected fibers, i: Z -> Y a hyperplane section
 * surface whose restriction h = f|_Z is generically finite of degree m over
 * S. The five surface projectors default to the Kunneth projectors of S,
 * which is what any Murre decomposition of S induces in this realization.
 */
struct FibrationData {
    ModelPtr Y;  // 3-fold
    ModelPtr S;  // base surface
    ModelPtr Z;  // hyperplane-section surface
    MorphismModel f;  // pullback H(S) -> H(Y)
    MorphismModel h;  // pullback H(S) -> H(Z)
    MorphismModel i;  // pullback H(Y) -> H(Z)
    Rational m = 1;   // degree of h
    std::vector<Correspondence> surface_projectors;  // pi_0(S)..pi_4(S)
    ClassVector hyperplane_class;                    // [Z] in H^2(Y)
};

inline FibrationData make_fibration(ModelPtr y, ModelPtr s, ModelPtr z, MorphismModel f,
                                    MorphismModel h, MorphismModel i, Rational m) {
    FibrationData d;
    d.Y = std::move(y);
    d.S = std::move(s);
    d.Z = std::move(z);
    d.f = std::move(f);
    d.h = std::move(h);
    d.i = std::move(i);
    d.m = std::move(m);
    for (std::size_t j = 0; j <= 4; ++j) d.surface_projectors.push_back(kunneth_projector(d.S, j));
    // [Z] = i_*(1_Z)
    const RationalMatrix cls = pushforward(d.i, 0);
    d.hyperplane_class = zero_class(d.Y, 2);
    for (std::size_t r = 0; r < cls.rows(); ++r) d.hyperplane_class.coords[r] = cls(r, 0);
    return d;
}

inline ValidationReport validate_fibration(const FibrationData& d) {
    ValidationReport rep;
    rep.require(d.Y->dim == 3 && d.S->dim == 2 && d.Z->dim == 2,
                "fibration: expects a 3-fold over a surface with a surface section");
    rep.require(validate_variety(*d.Y).ok() && validate_variety(*d.S).ok() &&
                    validate_variety(*d.Z).ok(),
                "fibration: constituent models must validate");
    rep.require(validate_morphism(d.f).ok() && validate_morphism(d.h).ok() &&
                    validate_morphism(d.i).ok(),
                "fibration: constituent morphisms must validate");
    if (!rep.ok()) return rep;

    // h = f|_Z at the pullback level
    for (std::size_t k = 0; k <= 4; ++k)
        rep.require(d.h.pullback[k] == d.i.pullback[k] * d.f.pullback[k],
                    "fibration: pullback(h) != pullback(i) * pullback(f) at degree " +
                        std::to_string(k));

    rep.require(d.m > 0, "fibration: m must be positive");
    for (std::size_t k = 0; k <= 4; ++k) {
        const RationalMatrix comp = pushforward(d.h, k) * d.h.pullback[k];
        rep.require(comp == d.m * RationalMatrix::identity(d.S->space.dims[k]),
                    "fibration: h_* h^* != m * id at degree " + std::to_string(k));
    }

    rep.require(d.surface_projectors.size() == 5, "fibration: need pi_0(S)..pi_4(S)");
    if (d.surface_projectors.size() == 5) {
        Correspondence sum = zero_correspondence(d.S, d.S);
        bool ortho = true, idem = true, kunneth = true;
        for (std::size_t a = 0; a < 5; ++a) {
            idem &= is_projector(d.surface_projectors[a]);
            sum = sum + d.surface_projectors[a];
            for (std::size_t b = 0; b < 5; ++b)
                if (a != b) ortho &= compose(d.surface_projectors[a], d.surface_projectors[b]).is_zero();
            for (std::size_t j = 0; j <= 4; ++j) {
                const RationalMatrix mj = action_matrix(d.surface_projectors[a], j);
                kunneth &= (a == j) ? mj == RationalMatrix::identity(d.S->space.dims[j])
                                    : mj.is_zero();
            }
        }
        rep.require(idem && ortho && sum == diagonal(d.S),
                    "fibration: surface projectors must be an orthogonal decomposition of the diagonal");
        rep.require(kunneth, "fibration: surface projectors must induce the Kunneth components");
        rep.require(d.surface_projectors[1] == transpose(d.surface_projectors[3]),
                    "fibration: pi_1(S) != transpose(pi_3(S))");
    }

    // model shadow of the vanishing of the higher direct images: every
    // non-algebraic direction of H^2(Y) comes from the base
    const auto& flags = d.Y->space.algebraic_flags[2];
    const RationalMatrix& f2 = d.f.pullback[2];
    for (std::size_t v = 0; v < flags.size(); ++v) {
        if (flags[v]) continue;
        RationalMatrix e(f2.rows(), 1);
        e(v, 0) = 1;
        rep.require(rank(hstack(f2, e)) == rank(f2),
                    "fibration: non-algebraic H^2 direction " + std::to_string(v) +
                        " is not pulled back from the base");
    }

    // [Z] must be the class of the section
    const RationalMatrix cls = pushforward(d.i, 0);
    bool hyper_ok = d.hyperplane_class.degree == 2 && cls.rows() == d.hyperplane_class.coords.size();
    if (hyper_ok)
        for (std::size_t r = 0; r < cls.rows(); ++r)
            hyper_ok &= cls(r, 0) == d.hyperplane_class.coords[r];
    rep.require(hyper_ok, "fibration: hyperplane_class != i_*(1)");
    return rep;
}

enum class Side { left, right };

/// pi_{i0} = (1/m) (i x 1)_* (h x f)^* pi_i(S)   (side = left)
/// pi_{i2} = (1/m) (1 x i)_* (f x h)^* pi_i(S)   (side = right)
/// computed block-wise: the left/right tensor legs of pi_i(S) are pushed
/// through i_* h^* resp. pulled through f^*.
inline Correspondence fibration_projector(const FibrationData& d, std::size_t i, Side side) {
    const Correspondence& pis = d.surface_projectors.at(i);
    const Rational inv_m = Rational(1) / d.m;
    Correspondence out = zero_correspondence(d.Y, d.Y);
    for (std::size_t k = 0; k <= 4; ++k) {
        const std::size_t l = 4 - k;  // right-leg degree on S
        if (d.S->space.dims[k] == 0 || d.S->space.dims[l] == 0) continue;
        if (side == Side::left) {
            // legs: i_* h^* (degree k -> k+2)  (x)  f^* (degree l)
            const RationalMatrix left = pushforward(d.i, k) * d.h.pullback[k];
            const RationalMatrix right = d.f.pullback[l];
            out.blocks[k + 2] = out.blocks[k + 2] + inv_m * (left * pis.blocks[k] * right.transposed());
        } else {
            // legs: f^* (degree k)  (x)  i_* h^* (degree l -> l+2)
            const RationalMatrix left = d.f.pullback[k];
            const RationalMatrix right = pushforward(d.i, l) * d.h.pullback[l];
            out.blocks[k] = out.blocks[k] + inv_m * (left * pis.blocks[k] * right.transposed());
        }
    }
    return out;
}

struct KeyLemmaCertificate {
    Certificate cert;
    std::vector<Correspondence> left;   // pi_00..pi_40
    std::vector<Correspondence> right;  // pi_02..pi_42
};

/// All 75 composition relations of the two families:
///   a) pi_i0 o pi_j0 = delta_ij pi_i0
///   b) pi_i2 o pi_j2 = delta_ij pi_i2
///   c) pi_j2 o pi_i0 = 0
inline KeyLemmaCertificate verify_key_lemma(const FibrationData& d) {
    KeyLemmaCertificate out;
    for (std::size_t i = 0; i <= 4; ++i) {
        out.left.push_back(fibration_projector(d, i, Side::left));
        out.right.push_back(fibration_projector(d, i, Side::right));
    }
    for (std::size_t i = 0; i <= 4; ++i)
        for (std::size_t j = 0; j <= 4; ++j) {
            const Correspondence want_l =
                i == j ? out.left[i] : zero_correspondence(d.Y, d.Y);
            out.cert.add("pi_" + std::to_string(i) + "0 o pi_" + std::to_string(j) + "0",
                         compose(out.left[i], out.left[j]) == want_l);
            const Correspondence want_r =
                i == j ? out.right[i] : zero_correspondence(d.Y, d.Y);
            out.cert.add("pi_" + std::to_string(i) + "2 o pi_" + std::to_string(j) + "2",
                         compose(out.right[i], out.right[j]) == want_r);
            out.cert.add("pi_" + std::to_string(j) + "2 o pi_" + std::to_string(i) + "0",
                         compose(out.right[j], out.left[i]).is_zero());
        }
    return out;
}

/// The orthogonal family pi_0..pi_6 on Y:
///   pi_0 = pi_00, pi_1 = pi_10, pi_2 = pi_20 + pi_02 - pi_20 o pi_02,
///   pi_4 = pi_40 + pi_22 - pi_40 o pi_22, pi_5 = pi_32, pi_6 = pi_42,
///   pi_3 = Delta - sum of the others.
inline std::vector<Correspondence> assemble_pi(const FibrationData& d) {
    auto lemma = verify_key_lemma(d);
    if (!lemma.cert.all_pass())
        throw Error("assemble_pi: key-lemma relations fail on this fibration");
    const auto& L = lemma.left;
    const auto& R = lemma.right;

    std::vector<Correspondence> pi(7, zero_correspondence(d.Y, d.Y));
    pi[0] = L[0];
    pi[1] = L[1];
    pi[2] = L[2] + R[0] - compose(L[2], R[0]);
    pi[4] = L[4] + R[2] - compose(L[4], R[2]);
    pi[5] = R[3];
    pi[6] = R[4];
    Correspondence rest = diagonal(d.Y);
    for (std::size_t k : {0, 1, 2, 4, 5, 6}) rest = rest - pi[k];
    pi[3] = rest;
    return pi;
}

/*
 * Correction data at the hyperplane/fiber level: H_1..H_r span the algebraic
 * part of H^2(Y) with H_1 = [Z], l_1..l_r span the algebraic part of H^4(Y)
 * with l_1 = [F]. A is computed, not supplied: act(pi_2)(H_i) is expanded in
 * the H-basis (the expansion must be exact). M[i][j] = <H_i, l_j>; the index
 * order is forced by the identity set B = M^{-1}(1-A), BA = 0, BMB = B,
 * MB + A + BA = 1 together with beta acting through M B on the H-basis.
 */
struct CorrectionData {
    std::vector<ClassVector> H_classes;
    std::vector<ClassVector> L_classes;
    RationalMatrix M;
    RationalMatrix A;
    RationalMatrix B;
};

inline CorrectionData make_correction_data(const FibrationData& d, const Correspondence& pi2,
                                           std::vector<ClassVector> H_classes,
                                           std::vector<ClassVector> L_classes) {
    if (H_classes.empty() || L_classes.size() != H_classes.size())
        throw ShapeMismatch("correction data: H and L lists must have equal positive length");
    for (const auto& v : H_classes)
        if (v.degree != 2 || !detail::is_algebraic(v))
            throw NotFullyAlgebraic("correction data: H classes must be algebraic in H^2");
    for (const auto& v : L_classes)
        if (v.degree != 4 || !detail::is_algebraic(v))
            throw NotFullyAlgebraic("correction data: L classes must be algebraic in H^4");
    if (!(H_classes.front() == d.hyperplane_class))
        throw ShapeMismatch("correction data: H_1 must be the hyperplane class");
    const RationalMatrix fiber = d.f.pullback[4];  // f^*[pt_S] = [F]
    for (std::size_t r = 0; r < fiber.rows(); ++r)
        if (L_classes.front().coords[r] != fiber(r, 0))
            throw ShapeMismatch("correction data: l_1 must be the fiber class");

    const std::size_t r = H_classes.size();
    const RationalMatrix hc = detail::columns(H_classes, d.Y->space.dims[2]);
    const RationalMatrix lc = detail::columns(L_classes, d.Y->space.dims[4]);
    if (rank(hc) != r || rank(lc) != r)
        throw RankDeficient("correction data: classes are linearly dependent");

    CorrectionData c;
    c.H_classes = std::move(H_classes);
    c.L_classes = std::move(L_classes);
    c.M = hc.transposed() * d.Y->pairing(2) * lc;
    if (rank(c.M) != r) throw SingularMatrix("correction data: intersection matrix M is singular");

    // expand act(pi_2)(H_i) in the H basis; the residual must vanish
    const RationalMatrix acted = action_matrix(pi2, 2) * hc;
    const auto sol = solve_exact(hc, acted);
    if (!sol)
        throw RankDeficient("correction data: pi_2 does not preserve the span of the H classes");
    c.A = sol->transposed();
    if (c.A * c.A != c.A)
        throw NotIdempotent("correction data: the action matrix A of pi_2 is not idempotent");
    c.B = invert(c.M) * (RationalMatrix::identity(r) - c.A);
    return c;
}

/// beta = sum b_ij (l_i x H_j)
inline Correspondence correction_beta(const CorrectionData& c, const ModelPtr& y) {
    Correspondence beta = zero_correspondence(y, y);
    for (std::size_t i = 0; i < c.L_classes.size(); ++i)
        for (std::size_t j = 0; j < c.H_classes.size(); ++j) {
            if (c.B(i, j) == 0) continue;
            beta = beta + c.B(i, j) * external_product(c.L_classes[i], c.H_classes[j]);
        }
    return beta;
}

/// q_2 = pi_2 + beta - beta o pi_2: a projector acting as the identity on
/// all of H^2(Y).
inline Correspondence correction_q2(const FibrationData& d, const CorrectionData& c,
                                    const Correspondence& pi2) {
    const Correspondence beta = correction_beta(c, d.Y);
    return pi2 + beta - compose(beta, pi2);
}

/*
 * The final family:
 *   p_0 = pi_0, p_1 = pi_1,
 *   p_2 = q_2 - pi_1 o beta - pi_1 o beta o pi_2,
 *   p_4 = transpose(p_2), p_5 = pi_5, p_6 = pi_6,
 *   p_3 = Delta - sum of the others.
 * The pi_1-correction terms vanish identically in the realization (pi_1 has
 * no component acting on H^2); they matter one level up, on Chow groups.
 */
inline MurreSet murre_set_fibration(const FibrationData& d, const CorrectionData& c) {
    auto pi = assemble_pi(d);
    const Correspondence beta = correction_beta(c, d.Y);
    const Correspondence q2 = correction_q2(d, c, pi[2]);

    std::vector<Correspondence> ps(7, zero_correspondence(d.Y, d.Y));
    ps[0] = pi[0];
    ps[1] = pi[1];
    ps[2] = q2 - compose(pi[1], beta) - compose(pi[1], compose(beta, pi[2]));
    ps[4] = transpose(ps[2]);
    ps[5] = pi[5];
    ps[6] = pi[6];
    Correspondence rest = diagonal(d.Y);
    for (std::size_t k : {0, 1, 2, 4, 5, 6}) rest = rest - ps[k];
    ps[3] = rest;

    MurreSet set;
    set.variety = d.Y;
    set.projectors = ps;
    set.certificate = verify_murre_axioms(d.Y, ps);

    // transpose pairing of the family
    for (std::size_t k = 0; k <= 3; ++k)
        set.certificate.add(
            "p" + std::to_string(k) + " = transpose(p" + std::to_string(6 - k) + ")",
            ps[k] == transpose(ps[6 - k]));

    // cohomological shadows of axiom (4): p_1 restricted to f^* H^1(S) and
    // p_5 restricted to [Z].f^* H^3(S) are the identity
    const RationalMatrix u1 = d.f.pullback[1];
    set.certificate.add("p1 identity on f^*H^1(S)", action_matrix(ps[1], 1) * u1 == u1);
    const RationalMatrix u5 = pushforward(d.i, 3) * d.h.pullback[3];
    set.certificate.add("p5 identity on [Z].f^*H^3(S)", action_matrix(ps[5], 5) * u5 == u5);
    set.certificate.add("axioms (4)-(6)", true, "not computed — Chow-level");
    return set;
}

}  // namespace motives
