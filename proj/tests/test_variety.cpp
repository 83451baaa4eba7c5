#include <catch2/catch_amalgamated.hpp>

#include "motives/models.hpp"
#include "motives/morphism.hpp"

using namespace motives;

namespace {

// flat section S x {0} of pr_1: S x P1 -> S
MorphismModel flat_section_inclusion(const ModelPtr& s, const ModelPtr& y) {
    KunnethIndexer idx(s->space.dims, std::vector<std::size_t>{1, 0, 1});
    MorphismModel i;
    i.source = y;
    i.target = s;
    for (std::size_t k = 0; k <= 2 * y->dim; ++k) {
        RationalMatrix p(s->dim_at(static_cast<long>(k)), y->space.dims[k]);
        if (idx.component_nonzero(k, k))  // the (k, 0) component pulls back to H^k(S)
            for (std::size_t a = 0; a < s->dim_at(static_cast<long>(k)); ++a)
                p(a, idx.index(k, k, a, 0)) = 1;
        i.pullback.push_back(std::move(p));
    }
    return i;
}

MorphismModel first_projection(const ModelPtr& s, const ModelPtr& y) {
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

}  // namespace

TEST_CASE("catalog-style models validate cleanly") {
    CHECK(validate_variety(*projective_space_model(3)).ok());
    CHECK(validate_variety(*projective_space_model(1)).ok());
    CHECK(validate_variety(*point_model()).ok());
    CHECK(validate_variety(*elliptic_curve_model()).ok());
    CHECK(validate_variety(*quadric3_model()).ok());
    CHECK(validate_variety(*del_pezzo_fibration_model()).ok());
}

TEST_CASE("validator reports duality and nondegeneracy violations") {
    {
        VarietyModel bad;
        bad.name = "bad";
        bad.dim = 2;
        bad.space.dims = {1, 1, 2, 0, 1};
        bad.space.basis_labels = {{"1"}, {"x"}, {"u", "v"}, {}, {"pt"}};
        bad.space.algebraic_flags = {{true}, {}, {true, true}, {}, {true}};
        bad.pairings = {RationalMatrix::identity(1), RationalMatrix::zero(1, 0),
                        RationalMatrix::identity(2), RationalMatrix::zero(0, 1),
                        RationalMatrix::identity(1)};
        auto rep = validate_variety(bad);
        CHECK_FALSE(rep.ok());
        bool found = false;
        for (const auto& v : rep.violations) found |= v.find("duality dims") != std::string::npos;
        CHECK(found);
    }
    {
        VarietyModel bad = *del_pezzo_fibration_model();
        bad.pairings[2] = RationalMatrix{{1, 1}, {1, 1}};
        bad.pairings[4] = bad.pairings[2].transposed();
        auto rep = validate_variety(bad);
        CHECK_FALSE(rep.ok());
        bool found = false;
        for (const auto& v : rep.violations)
            found |= v.find("nondegenerate pairing") != std::string::npos;
        CHECK(found);
    }
}

TEST_CASE("product models satisfy the Kunneth count and validate") {
    auto p3 = projective_space_model(3);
    auto pt = point_model();
    auto prod = product_model(p3, pt);
    CHECK(prod->space.dims == p3->space.dims);
    CHECK(prod->pairings == p3->pairings);
    CHECK(validate_variety(*prod).ok());

    auto e = elliptic_curve_model();
    auto ee = product_model(e, e);
    CHECK(ee->space.dims == std::vector<std::size_t>{1, 4, 6, 4, 1});
    CHECK(validate_variety(*ee).ok());

    auto p1 = projective_space_model(1);
    auto p1p1 = product_model(p1, p1);
    CHECK(p1p1->space.dims == std::vector<std::size_t>{1, 0, 2, 0, 1});
    CHECK(p1p1->pairing(2) == RationalMatrix{{0, 1}, {1, 0}});
    CHECK(validate_variety(*p1p1).ok());

    auto s = product_model(e, p1);
    CHECK(s->space.dims == std::vector<std::size_t>{1, 2, 2, 2, 1});
    CHECK(validate_variety(*s).ok());
    CHECK(validate_variety(*product_model(s, p1)).ok());
}

TEST_CASE("pushforward: identity, dimension vanishing, section class") {
    auto e = elliptic_curve_model();
    auto s = product_model(e, projective_space_model(1));
    auto y = product_model(s, projective_space_model(1));

    auto id = identity_morphism(s);
    for (std::size_t k = 0; k <= 4; ++k)
        CHECK(pushforward(id, k) == RationalMatrix::identity(s->space.dims[k]));
    CHECK(validate_morphism(id).ok());

    auto f = first_projection(s, y);
    CHECK(validate_morphism(f).ok());
    // f_* on H^0(Y) lands in H^{-2}(S) = 0
    auto z = pushforward(f, 0);
    CHECK(z.rows() == 0);
    CHECK(z.cols() == 1);

    auto i = flat_section_inclusion(s, y);
    CHECK(validate_morphism(i).ok());
    // i_*(1_S) is the section class 1 (x) [pt] in H^2(S x P1)
    auto cls = pushforward(i, 0);
    REQUIRE(cls.rows() == y->space.dims[2]);
    KunnethIndexer idx(s->space.dims, std::vector<std::size_t>{1, 0, 1});
    RationalMatrix want(y->space.dims[2], 1);
    want(idx.index(2, 0, 0, 0), 0) = 1;
    CHECK(cls == want);
}

TEST_CASE("adjunction holds exactly on the projection") {
    auto e = elliptic_curve_model();
    auto s = product_model(e, projective_space_model(1));
    auto y = product_model(s, projective_space_model(1));
    auto f = first_projection(s, y);

    // <f_* y, s>_S = <y, f^* s>_Y at every degree pair
    for (std::size_t k = 2; k <= 6; ++k) {
        const std::size_t j = k - 2;
        if (j > 4) continue;
        const RationalMatrix g = pushforward(f, k);
        const std::size_t js = 4 - j;  // complementary degree on S
        const RationalMatrix lhs = g.transposed() * s->pairing(j);
        const RationalMatrix rhs = y->pairing(k) * f.pullback[js];
        CHECK(lhs == rhs);
    }
}

TEST_CASE("generically finite morphisms: degree identity") {
    // double cover E -> P1
    auto e = elliptic_curve_model();
    auto p1 = projective_space_model(1);
    MorphismModel h;
    h.source = p1;
    h.target = e;
    RationalMatrix two(1, 1);
    two(0, 0) = 2;
    h.pullback = {RationalMatrix::identity(1), RationalMatrix::zero(2, 0), two};
    h.declared_degree = Rational(2);
    CHECK(validate_morphism(h).ok());

    h.declared_degree = Rational(3);
    auto rep = validate_morphism(h);
    CHECK_FALSE(rep.ok());
    bool found = false;
    for (const auto& v : rep.violations) found |= v.find("degree identity") != std::string::npos;
    CHECK(found);

    auto s = product_model(e, p1);
    auto id = identity_morphism(s);
    id.declared_degree = Rational(1);
    CHECK(validate_morphism(id).ok());
}
