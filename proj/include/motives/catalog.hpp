#pragma once

#include <optional>

#include "motives/blowup.hpp"
#include "motives/fibration.hpp"
#include "motives/models.hpp"

namespace motives {

/// Built-in, fully validated example model; fibration data, projector
/// recipes and blow-up pipelines are attached where they apply.
struct CatalogEntry {
    std::string key;
    ModelPtr model;
    std::string notes;
    std::optional<FibrationData> fibration;
    std::optional<std::pair<ProjectorRecipe, ProjectorRecipe>> recipes;  // q = 1, q = 2
    std::optional<BlowupSpec> blowup;        // how this entry was built, when it is a blow-up
    std::optional<MorphismModel> blowdown;   // phi for the transport pipeline
    std::string blowup_base_key;
};

namespace detail {

// Kunneth inclusion u -> u (x) 1 for pr_1: S x P1 -> S.
inline MorphismModel projection_pullback(const ModelPtr& s, const ModelPtr& y) {
    KunnethIndexer idx(s->space.dims, std::vector<std::size_t>{1, 0, 1});
    MorphismModel f;
    f.source = s;
    f.target = y;
    for (std::size_t k = 0; k <= 2 * s->dim; ++k) {
        RationalMatrix p(y->space.dims[k], s->space.dims[k]);
        if (idx.component_nonzero(k, k))
            for (std::size_t a = 0; a < s->space.dims[k]; ++a) p(idx.index(k, k, a, 0), a) = 1;
        f.pullback.push_back(std::move(p));
    }
    return f;
}

// Cup product with the class (1 x pt) on Z = E x P1, as a matrix
// H^{k-2}(Z) -> H^k(Z): it shifts the P1 leg from 1 to [pt] and kills
// everything already carrying the point class.
inline RationalMatrix cup_with_p1_point(const ModelPtr& z, std::size_t k) {
    KunnethIndexer ze(std::vector<std::size_t>{1, 2, 1}, std::vector<std::size_t>{1, 0, 1});
    RationalMatrix m(z->dim_at(static_cast<long>(k)), z->space.dims[k - 2]);
    for (std::size_t ke = 0; ke <= k - 2; ++ke) {
        if (!ze.component_nonzero(k - 2, ke) || k - 2 - ke != 0) continue;
        for (std::size_t a = 0; a < ze.left_dim(ke); ++a)
            if (ze.component_nonzero(k, ke))
                m(ze.index(k, ke, a, 0), ze.index(k - 2, ke, a, 0)) = 1;
    }
    return m;
}

/*
 * Inclusion of a multisection Z = { (e, t) -> (e, g1(t), g2(t)) } of
 * pr_1: Y = S x P1 -> S, where S = Z = E x P1, h = (id, g1) has degree
 * deg g1 and the twist g2 = id makes [Z] restrict nontrivially to Z.
 * Pullbacks: i^*(u (x) 1) = h^* u and i^*(u (x) [pt]) = h^* u cup (1 x pt);
 * the cup product with a fixed Kunneth class is evaluated directly in the
 * basis. The twist keeps the two one-sided fibration projector families
 * genuinely non-orthogonal on these models.
 */
inline MorphismModel section_pullback(const ModelPtr& s, const ModelPtr& y,
                                      const MorphismModel& h) {
    KunnethIndexer sy(s->space.dims, std::vector<std::size_t>{1, 0, 1});  // Y = S x P1

    MorphismModel i;
    i.source = y;
    i.target = h.target;  // Z
    for (std::size_t k = 0; k <= 2 * y->dim; ++k) {
        RationalMatrix p(h.target->dim_at(static_cast<long>(k)), y->space.dims[k]);
        // component (k, 0): u (x) 1 restricts to h^* u
        if (sy.component_nonzero(k, k) && k <= 2 * s->dim) {
            const RationalMatrix& hk = h.pullback[k];
            for (std::size_t r = 0; r < hk.rows(); ++r)
                for (std::size_t a = 0; a < hk.cols(); ++a)
                    if (hk(r, a) != 0) p(r, sy.index(k, k, a, 0)) = hk(r, a);
        }
        // component (k-2, 2): u (x) [pt] restricts to h^* u cup (1 x pt)
        if (k >= 2 && sy.component_nonzero(k, k - 2)) {
            const RationalMatrix cup = cup_with_p1_point(h.target, k) * h.pullback[k - 2];
            for (std::size_t r = 0; r < cup.rows(); ++r)
                for (std::size_t a = 0; a < cup.cols(); ++a)
                    if (cup(r, a) != 0) p(r, sy.index(k, k - 2, a, 0)) = cup(r, a);
        }
        i.pullback.push_back(std::move(p));
    }
    return i;
}

/// h = (id_E, g1): E x P1 -> E x P1 with g1 of the given degree on the P1
/// factor: the pullback scales every Kunneth component carrying the point
/// class by deg g1.
inline MorphismModel cover_pullback(const ModelPtr& s, long degree) {
    KunnethIndexer se(std::vector<std::size_t>{1, 2, 1}, std::vector<std::size_t>{1, 0, 1});
    MorphismModel h;
    h.source = s;
    h.target = s;
    for (std::size_t k = 0; k <= 2 * s->dim; ++k) {
        RationalMatrix p(s->space.dims[k], s->space.dims[k]);
        for (std::size_t ke = 0; ke <= k; ++ke) {
            if (!se.component_nonzero(k, ke)) continue;
            const Rational scale = (k - ke == 2) ? Rational(degree) : Rational(1);
            for (std::size_t a = 0; a < se.left_dim(ke); ++a) {
                const std::size_t idx = se.index(k, ke, a, 0);
                p(idx, idx) = scale;
            }
        }
        h.pullback.push_back(std::move(p));
    }
    h.declared_degree = Rational(degree);
    return h;
}

inline std::vector<ClassVector> algebraic_spanning_classes(const FibrationData& d,
                                                           std::size_t degree) {
    // hyperplane class resp. fiber class first, then the remaining standard
    // algebraic directions completed to a spanning set
    std::vector<ClassVector> out;
    if (degree == 2) {
        out.push_back(d.hyperplane_class);
    } else {
        ClassVector fiber = zero_class(d.Y, 4);
        const RationalMatrix ff = d.f.pullback[4];
        for (std::size_t r = 0; r < ff.rows(); ++r) fiber.coords[r] = ff(r, 0);
        out.push_back(fiber);
    }
    const std::size_t dim = d.Y->space.dims[degree];
    RationalMatrix span = detail::columns(out, dim);
    for (std::size_t v = 0; v < dim; ++v) {
        if (!d.Y->space.algebraic_flags[degree][v]) continue;
        ClassVector cand = basis_class(d.Y, degree, v);
        RationalMatrix tryspan = hstack(span, detail::columns({cand}, dim));
        if (rank(tryspan) > rank(span)) {
            out.push_back(cand);
            span = tryspan;
        }
    }
    return out;
}

}  // namespace detail

/// CorrectionData for a catalog fibration: H classes headed by [Z], L
/// classes headed by [F], completed by algebraic basis directions.
inline CorrectionData catalog_correction_data(const FibrationData& d, const Correspondence& pi2) {
    return make_correction_data(d, pi2, detail::algebraic_spanning_classes(d, 2),
                                detail::algebraic_spanning_classes(d, 4));
}

inline std::vector<CatalogEntry> load_catalog() {
    std::vector<CatalogEntry> entries;

    auto p1 = projective_space_model(1);
    auto p3 = projective_space_model(3);
    auto e = elliptic_curve_model();
    auto s = product_model(e, p1);  // surface with H^1 != 0

    {
        CatalogEntry c;
        c.key = "point";
        c.model = point_model();
        c.notes = "A single reduced point; the degenerate end of every induction.";
        entries.push_back(std::move(c));
    }
    {
        CatalogEntry c;
        c.key = "P1";
        c.model = p1;
        c.notes = "The projective line; dual bases of the trivial pairing.";
        entries.push_back(std::move(c));
    }
    {
        CatalogEntry c;
        c.key = "E";
        c.model = e;
        c.notes = "Elliptic curve; the skew H^1 pairing locks the odd sign conventions.";
        entries.push_back(std::move(c));
    }
    {
        CatalogEntry c;
        c.key = "P3";
        c.model = p3;
        c.notes = "Projective 3-space in the hyperplane-power basis; all pairings [[1]].";
        c.recipes = {standard_recipe(p3, 1), standard_recipe(p3, 2)};
        entries.push_back(std::move(c));
    }
    {
        CatalogEntry c;
        c.key = "quadric3";
        c.model = quadric3_model();
        c.notes = "Smooth quadric 3-fold: Betti table of P3 but <h, h^2> = 2, so the "
                  "dual-basis projector coefficients are honest fractions.";
        c.recipes = {standard_recipe(c.model, 1), standard_recipe(c.model, 2)};
        entries.push_back(std::move(c));
    }
    {
        CatalogEntry c;
        c.key = "delPezzo-fib";
        c.model = del_pezzo_fibration_model();
        c.notes = "Del Pezzo fibration with H^2 = <F, Y> against H^4 = <l, C>; "
                  "intersection numbers r = 3, m = 2, d = 5.";
        c.recipes = {standard_recipe(c.model, 1), standard_recipe(c.model, 2)};
        entries.push_back(std::move(c));
    }
    {
        CatalogEntry c;
        c.key = "S=ExP1";
        c.model = s;
        c.notes = "Ruled surface E x P1: the base of the fibration entries; H^1 != 0.";
        entries.push_back(std::move(c));
    }

    // Y = S x P1 with the section twisted by the projection S -> P1, so the
    // section class restricts nontrivially to the section itself.
    auto y = product_model(s, p1);
    {
        CatalogEntry c;
        c.key = "Y=SxP1+section";
        c.model = y;
        c.notes = "Trivial P1-bundle over S = E x P1 with a twisted section as the "
                  "hyperplane surface; h is an isomorphism (m = 1). Every algebraic "
                  "H^2 class is pulled back or the section, so the middle correction "
                  "is trivial here.";
        MorphismModel f = detail::projection_pullback(s, y);
        MorphismModel h = detail::cover_pullback(s, 1);
        MorphismModel i = detail::section_pullback(s, y, h);
        c.fibration = make_fibration(y, s, s, f, h, i, Rational(1));
        entries.push_back(std::move(c));
    }

    // Same product, but the hyperplane surface is a bisection: h has degree
    // two, so the 1/m normalization of the projector families is nontrivial.
    {
        CatalogEntry c;
        c.key = "Y=SxP1+bisection";
        c.model = y;
        c.notes = "Trivial P1-bundle over S = E x P1 whose hyperplane surface is a "
                  "twisted bisection; h is a degree-two cover of S (m = 2).";
        MorphismModel f = detail::projection_pullback(s, y);
        MorphismModel h = detail::cover_pullback(s, 2);
        MorphismModel i = detail::section_pullback(s, y, h);
        c.fibration = make_fibration(y, s, s, f, h, i, Rational(2));
        entries.push_back(std::move(c));
    }

    // Blow up Y along a genus-1 curve that maps to a curve in S and misses
    // the section: the exceptional divisor is f-exceptional, so the action
    // matrix A of pi_2 is a genuine non-identity idempotent.
    {
        BlowupSpec spec;
        spec.base = y;
        spec.center_kind = BlowupSpec::Center::curve;
        spec.center_h1_dim = 2;
        BlowupResult bl = blowup_model(spec);

        CatalogEntry c;
        c.key = "Y-conic-degenerate";
        c.model = bl.model;
        c.notes = "Blow-up of Y = S x P1 x P1 along a genus-1 curve lying over a curve "
                  "in S and disjoint from the section; the exceptional divisor class is "
                  "killed by the fibration, so q2 differs from pi_2.";
        c.blowup = spec;
        c.blowdown = bl.phi;
        c.blowup_base_key = "Y=SxP1+section";

        MorphismModel f0 = detail::projection_pullback(s, y);
        MorphismModel h = detail::cover_pullback(s, 1);
        MorphismModel i0 = detail::section_pullback(s, y, h);
        MorphismModel f;  // f o phi: pullback phi^* f^*
        f.source = s;
        f.target = bl.model;
        for (std::size_t k = 0; k <= 4; ++k) f.pullback.push_back(bl.phi.pullback[k] * f0.pullback[k]);
        MorphismModel i;  // section misses the center: exceptional classes restrict to 0
        i.source = bl.model;
        i.target = s;
        for (std::size_t k = 0; k <= 6; ++k) {
            RationalMatrix p(s->dim_at(static_cast<long>(k)), bl.model->space.dims[k]);
            for (std::size_t r = 0; r < p.rows(); ++r)
                for (std::size_t col = 0; col < i0.pullback[k].cols(); ++col)
                    p(r, col) = i0.pullback[k](r, col);
            i.pullback.push_back(std::move(p));
        }
        c.fibration = make_fibration(bl.model, s, s, f, h, i, Rational(1));
        entries.push_back(std::move(c));
    }

    {
        BlowupSpec spec;
        spec.base = p3;
        spec.center_kind = BlowupSpec::Center::point;
        BlowupResult bl = blowup_model(spec);
        CatalogEntry c;
        c.key = "P3-blown-point";
        c.model = bl.model;
        c.notes = "P3 blown up in a point: H^2 = <h, E>, H^4 = <l, lE> with E.lE = -1.";
        c.blowup = spec;
        c.blowdown = bl.phi;
        c.blowup_base_key = "P3";
        c.recipes = {standard_recipe(bl.model, 1), standard_recipe(bl.model, 2)};
        entries.push_back(std::move(c));
    }
    {
        BlowupSpec spec;
        spec.base = p3;
        spec.center_kind = BlowupSpec::Center::curve;
        spec.center_h1_dim = 2;
        BlowupResult bl = blowup_model(spec);
        CatalogEntry c;
        c.key = "P3-blown-genus1curve";
        c.model = bl.model;
        c.notes = "P3 blown up along a genus-1 curve: the exceptional ruled surface "
                  "contributes two H^3 classes.";
        c.blowup = spec;
        c.blowdown = bl.phi;
        c.blowup_base_key = "P3";
        c.recipes = {standard_recipe(bl.model, 1), standard_recipe(bl.model, 2)};
        entries.push_back(std::move(c));
    }

    for (const auto& c : entries) {
        if (!validate_variety(*c.model).ok())
            throw Error("catalog: entry '" + c.key + "' fails variety validation");
        if (c.fibration && !validate_fibration(*c.fibration).ok())
            throw Error("catalog: entry '" + c.key + "' fails fibration validation");
    }
    return entries;
}

inline const CatalogEntry* find_entry(const std::vector<CatalogEntry>& entries,
                                      const std::string& key) {
    for (const auto& c : entries)
        if (c.key == key) return &c;
    return nullptr;
}

}  // namespace motives
