#pragma once

#include "motives/certificate.hpp"
#include "motives/models.hpp"
#include "motives/morphism.hpp"

namespace motives {

/// Blow-up of a 3-fold along an abstract center: a point or a smooth curve
/// of genus g (center_h1_dim = 2g). Only the cohomological contribution of
/// the center is modelled, never its embedding.
struct BlowupSpec {
    enum class Center { point, curve };
    ModelPtr base;
    Center center_kind = Center::point;
    std::size_t center_h1_dim = 0;  // 2g for a genus-g curve, 0 for a point
    std::vector<std::string> names;  // optional labels for the exceptional classes
};

struct BlowupResult {
    ModelPtr model;
    MorphismModel phi;  // pullback H(base) -> H(blow-up); the map runs blow-up -> base
};

/*
 * Exceptional classes appended after the pulled-back basis:
 *   point center:  [E] in H^2 and the line class in H^4;
 *   curve center:  [E] in H^2, 2g classes in H^3, the ruling fiber in H^4.
 * They pair within the exceptional block -- <[E], curve class> = -1, the H^3
 * block the negative of the center's symplectic form -- and pair to zero
 * against every pulled-back class (phi_* kills them).
 */
inline BlowupResult blowup_model(const BlowupSpec& spec) {
    const ModelPtr& x = spec.base;
    if (x->dim != 3) throw ShapeMismatch("blowup_model: expects a 3-fold base");
    if (spec.center_kind == BlowupSpec::Center::point && spec.center_h1_dim != 0)
        throw ShapeMismatch("blowup_model: a point center has no H^1");
    if (spec.center_h1_dim % 2 != 0)
        throw ShapeMismatch("blowup_model: center_h1_dim must be even");

    std::vector<std::string> names = spec.names;
    if (names.empty()) {
        names.push_back("E");
        for (std::size_t i = 1; i <= spec.center_h1_dim / 2; ++i) {
            names.push_back("E.a" + std::to_string(i));
            names.push_back("E.b" + std::to_string(i));
        }
        names.push_back(spec.center_kind == BlowupSpec::Center::point ? "lE" : "fE");
    }
    if (names.size() != 2 + spec.center_h1_dim)
        throw ShapeMismatch("blowup_model: need one label per exceptional class");

    auto m = std::make_shared<VarietyModel>(*x);
    m->name = x->name + "-bl";

    // H^2: [E]
    m->space.dims[2] += 1;
    m->space.basis_labels[2].push_back(names.front());
    m->space.algebraic_flags[2].push_back(true);
    // H^3: 2g classes
    m->space.dims[3] += spec.center_h1_dim;
    for (std::size_t i = 0; i < spec.center_h1_dim; ++i)
        m->space.basis_labels[3].push_back(names[1 + i]);
    // H^4: line / ruling fiber
    m->space.dims[4] += 1;
    m->space.basis_labels[4].push_back(names.back());
    m->space.algebraic_flags[4].push_back(true);

    // pairings: block-diagonal extension by the exceptional block
    {
        const std::size_t r2 = m->space.dims[2], c2 = m->space.dims[4];
        RationalMatrix p2(r2, c2);
        for (std::size_t i = 0; i + 1 < r2; ++i)
            for (std::size_t j = 0; j + 1 < c2; ++j) p2(i, j) = x->pairing(2)(i, j);
        p2(r2 - 1, c2 - 1) = -1;
        m->pairings[2] = p2;
        m->pairings[4] = p2.transposed();
    }
    {
        const std::size_t g2 = spec.center_h1_dim;
        const std::size_t n3 = m->space.dims[3];
        RationalMatrix p3(n3, n3);
        for (std::size_t i = 0; i < n3 - g2; ++i)
            for (std::size_t j = 0; j < n3 - g2; ++j) p3(i, j) = x->pairing(3)(i, j);
        for (std::size_t i = 0; i < g2 / 2; ++i) {
            const std::size_t o = n3 - g2 + 2 * i;
            p3(o, o + 1) = -1;  // negative of the center's symplectic form
            p3(o + 1, o) = 1;
        }
        m->pairings[3] = p3;
    }

    BlowupResult out;
    out.model = m;
    out.phi.source = x;
    out.phi.target = out.model;
    for (std::size_t k = 0; k <= 6; ++k) {
        RationalMatrix p(m->space.dims[k], x->space.dims[k]);
        for (std::size_t j = 0; j < x->space.dims[k]; ++j) p(j, j) = 1;
        out.phi.pullback.push_back(std::move(p));
    }
    out.phi.declared_degree = Rational(1);
    return out;
}

/// p_i(X) = graph(phi) o p_i(Y) o transpose(graph(phi)); equivalently
/// (phi x phi)_* applied block-wise.
inline std::vector<Correspondence> transport(const std::vector<Correspondence>& ps,
                                             const MorphismModel& phi) {
    const Correspondence g = graph(phi);
    const Correspondence gt = transpose(g);
    std::vector<Correspondence> out;
    out.reserve(ps.size());
    for (const auto& p : ps) out.push_back(compose(g, compose(p, gt)));
    return out;
}

struct TransportResult {
    ModelPtr Y;  // the blow-up the family lived on
    MorphismModel phi;
    std::vector<Correspondence> transported;
    Certificate certificate;
};

/// Transport a full projector family down a blow-up and verify, on the base,
/// everything the construction is supposed to guarantee.
inline TransportResult transport_family(const std::vector<Correspondence>& ps,
                                        const MorphismModel& phi) {
    TransportResult res;
    res.Y = phi.target;
    res.phi = phi;
    res.transported = transport(ps, phi);

    const ModelPtr& x = phi.source;
    res.certificate.add("graph(phi) o graph(phi)^t = diagonal",
                        compose(graph(phi), transpose(graph(phi))) == diagonal(x));
    Certificate axioms = verify_murre_axioms(x, res.transported);
    for (auto& c : axioms.checks) res.certificate.checks.push_back(std::move(c));
    return res;
}

/// Rank bookkeeping of the split blow-up sequence: with E modelled as a
/// projective bundle over the center W of codimension c,
///   dim H^n(Y) + dim H^{n-2c}(W) = dim H^n(X) + dim H^{n-2}(E).
inline Certificate verify_split_ranks(const VarietyModel& base, const VarietyModel& blowup,
                                      const BlowupSpec& spec) {
    Certificate cert;
    const long codim = spec.center_kind == BlowupSpec::Center::point ? 3 : 2;
    ModelPtr w = spec.center_kind == BlowupSpec::Center::point
                     ? point_model()
                     : curve_model(spec.center_h1_dim / 2);
    ModelPtr e = product_model(w, projective_space_model(static_cast<std::size_t>(codim - 1)));

    for (std::size_t n = 0; n <= 6; ++n) {
        const std::size_t lhs =
            blowup.space.dims[n] + w->dim_at(static_cast<long>(n) - 2 * codim);
        const std::size_t rhs = base.space.dims[n] + e->dim_at(static_cast<long>(n) - 2);
        cert.add("split rank at degree " + std::to_string(n), lhs == rhs,
                 std::to_string(lhs) + " = " + std::to_string(rhs));
    }
    return cert;
}

}  // namespace motives
