#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "motives/compose_oracle.hpp"
#include "motives/correspondence.hpp"
#include "motives/models.hpp"

using namespace motives;

namespace {

Correspondence random_endo(const ModelPtr& x, std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> num(-5, 5);
    std::uniform_int_distribution<long long> den(1, 3);
    Correspondence c = zero_correspondence(x, x);
    for (auto& b : c.blocks)
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) = frac(num(rng), den(rng));
    return c;
}

ClassVector random_class(const ModelPtr& x, std::size_t degree, std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> num(-5, 5);
    ClassVector v = zero_class(x, degree);
    for (auto& c : v.coords) c = Rational(num(rng));
    return v;
}

}  // namespace

TEST_CASE("diagonal acts as the identity and has the classical blocks") {
    auto p1 = projective_space_model(1);
    auto d1 = diagonal(p1);
    // Delta_{P1} = 1 (x) [pt] + [pt] (x) 1
    CHECK(d1.blocks[0] == RationalMatrix::identity(1));
    CHECK(d1.blocks[2] == RationalMatrix::identity(1));

    auto p3 = projective_space_model(3);
    auto d3 = diagonal(p3);
    for (std::size_t k = 0; k <= 6; k += 2) CHECK(d3.blocks[k] == RationalMatrix::identity(1));

    auto e = elliptic_curve_model();
    auto de = diagonal(e);
    for (std::size_t j = 0; j < 2; ++j) {
        auto v = basis_class(e, 1, j);
        CHECK(act(de, v) == v);
    }
    // the odd block is the inverse of the skew pairing
    CHECK(de.blocks[1] == RationalMatrix{{0, -1}, {1, 0}});
}

TEST_CASE("compose: identity law and the point projector of P1") {
    std::mt19937_64 rng(42);
    auto e = elliptic_curve_model();
    auto d = diagonal(e);
    for (int t = 0; t < 25; ++t) {
        auto f = random_endo(e, rng);
        CHECK(compose(d, f) == f);
        CHECK(compose(f, d) == f);
    }

    auto p1 = projective_space_model(1);
    auto one = basis_class(p1, 0, 0);
    auto pt = basis_class(p1, 2, 0);
    auto p0 = external_product(pt, one);    // {e} x X
    auto ptop = external_product(one, pt);  // X x {e}
    CHECK(is_projector(p0));
    CHECK(is_projector(ptop));
    CHECK(compose(ptop, ptop) == ptop);
    // p0 is the identity on H^0 and zero on H^2
    CHECK(act(p0, one) == one);
    CHECK(act(p0, pt) == zero_class(p1, 2));
}

TEST_CASE("transpose: involution, diagonal symmetry, odd sign") {
    auto e = elliptic_curve_model();
    CHECK(transpose(diagonal(e)) == diagonal(e));

    std::mt19937_64 rng(7);
    for (int t = 0; t < 25; ++t) {
        auto f = random_endo(e, rng);
        CHECK(transpose(transpose(f)) == f);
    }

    // transpose of a rank-one product flips the factors up to (-1)^{deg a}
    auto a = basis_class(e, 1, 0);
    auto b = basis_class(e, 1, 1);
    CHECK(transpose(external_product(a, b)) == Rational(-1) * external_product(b, a));
    auto one = basis_class(e, 0, 0);
    auto pt = basis_class(e, 2, 0);
    CHECK(transpose(external_product(pt, one)) == external_product(one, pt));
}

TEST_CASE("engine laws on random correspondences") {
    std::mt19937_64 rng(20260809);
    std::vector<ModelPtr> models = {projective_space_model(1), elliptic_curve_model(),
                                    product_model(elliptic_curve_model(), projective_space_model(1))};
    for (const auto& x : models) {
        auto d = diagonal(x);
        auto ctx = make_oracle_context(x, x);
        for (int t = 0; t < 25; ++t) {
            auto f = random_endo(x, rng);
            auto g = random_endo(x, rng);
            auto h = random_endo(x, rng);

            CHECK(compose(h, compose(g, f)) == compose(compose(h, g), f));
            CHECK(compose(d, f) == f);
            CHECK(transpose(compose(g, f)) == compose(transpose(f), transpose(g)));
            CHECK(compose_oracle(g, f, ctx) == compose(g, f));

            std::uniform_int_distribution<std::size_t> deg(0, 2 * x->dim);
            auto v = random_class(x, deg(rng), rng);
            CHECK(act(compose(g, f), v) == act(g, act(f, v)));
        }
    }
}

TEST_CASE("oracle on diagonals of a product model") {
    auto p1 = projective_space_model(1);
    auto x = product_model(p1, p1);
    auto d = diagonal(x);
    CHECK(compose_oracle(d, d) == d);
}

TEST_CASE("transpose is adjoint to the action under the pairings") {
    auto e = elliptic_curve_model();
    std::mt19937_64 rng(99);
    for (int t = 0; t < 25; ++t) {
        auto f = random_endo(e, rng);
        auto ft = transpose(f);
        for (std::size_t j = 0; j <= 2; ++j) {
            // <f_* x, y> = <x, f^t_* y> for x in H^j, y in H^{2d-j}
            const RationalMatrix lhs = action_matrix(f, j).transposed() * e->pairing(j);
            const RationalMatrix rhs = e->pairing(j) * action_matrix(ft, 2 * e->dim - j);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("Kunneth projectors: completeness, orthogonality, ranks") {
    auto p3 = projective_space_model(3);
    auto k2 = kunneth_projector(p3, 2);
    CHECK(k2.blocks[4] == RationalMatrix::identity(1));  // h^2 (x) h
    CHECK(action_matrix(k2, 2) == RationalMatrix::identity(1));
    CHECK(action_matrix(k2, 4).is_zero());

    for (const auto& x : {projective_space_model(3), elliptic_curve_model(),
                          product_model(projective_space_model(1), projective_space_model(1))}) {
        Correspondence sum = zero_correspondence(x, x);
        for (std::size_t j = 0; j <= 2 * x->dim; ++j) sum = sum + kunneth_projector(x, j);
        CHECK(sum == diagonal(x));
        for (std::size_t i = 0; i <= 2 * x->dim; ++i) {
            CHECK(is_projector(kunneth_projector(x, i)));
            for (std::size_t j = i + 1; j <= 2 * x->dim; ++j)
                CHECK(are_orthogonal(kunneth_projector(x, i), kunneth_projector(x, j)));
        }
    }

    auto e = elliptic_curve_model();
    auto k1 = kunneth_projector(e, 1);
    CHECK(rank(action_matrix(k1, 1)) == 2);
    auto even = external_product(basis_class(e, 2, 0), basis_class(e, 0, 0)) +
                external_product(basis_class(e, 0, 0), basis_class(e, 2, 0));
    CHECK(k1 == diagonal(e) - even);
}

TEST_CASE("external products compose by contraction") {
    auto e = elliptic_curve_model();
    std::mt19937_64 rng(5);
    auto a = random_class(e, 1, rng), b = random_class(e, 1, rng);
    auto c = random_class(e, 1, rng), dd = random_class(e, 1, rng);
    // (c (x) d) o (a (x) b) = <b, c> (a (x) d)
    Rational pairing = 0;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            pairing += b.coords[i] * e->pairing(1)(i, j) * c.coords[j];
    CHECK(compose(external_product(c, dd), external_product(a, b)) ==
          pairing * external_product(a, dd));

    CHECK_THROWS_AS(external_product(basis_class(e, 1, 0), basis_class(e, 0, 0)), ShapeMismatch);
}

TEST_CASE("graph of a morphism acts as pushforward, transpose as pullback") {
    auto e = elliptic_curve_model();
    auto p1 = projective_space_model(1);

    CHECK(graph(identity_morphism(e)) == diagonal(e));

    // double cover E -> P1
    MorphismModel h;
    h.source = p1;
    h.target = e;
    RationalMatrix two(1, 1);
    two(0, 0) = 2;
    h.pullback = {RationalMatrix::identity(1), RationalMatrix::zero(2, 0), two};
    h.declared_degree = Rational(2);

    auto gh = graph(h);
    // action is h_*: H^2(E) -> H^2(P1) sends [pt_E] to [pt_P1]
    auto ptE = basis_class(e, 2, 0);
    CHECK(act(gh, ptE) == basis_class(p1, 2, 0));
    // transpose acts as h^*
    auto ptP = basis_class(p1, 2, 0);
    auto pulled = act(transpose(gh), ptP);
    CHECK(pulled.coords == std::vector<Rational>{2});
    // h_* h^* = deg h = 2
    CHECK(compose(gh, transpose(gh)) == Rational(2) * diagonal(p1));
}
