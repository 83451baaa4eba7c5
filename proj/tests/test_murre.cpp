#include <catch2/catch_amalgamated.hpp>

#include "motives/catalog.hpp"
#include "motives/compose_oracle.hpp"

using namespace motives;

namespace {

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> c = load_catalog();
    return c;
}

const CatalogEntry& entry(const std::string& key) {
    const CatalogEntry* e = find_entry(catalog(), key);
    REQUIRE(e != nullptr);
    return *e;
}

}  // namespace

TEST_CASE("middle projector: single-class case on P3") {
    auto p3 = entry("P3").model;
    auto r = standard_recipe(p3, 1);
    CHECK(r.A == RationalMatrix::identity(1));
    auto p = middle_projector(r);
    // line (x) h
    CHECK(p.blocks[4] == RationalMatrix::identity(1));
    CHECK(is_projector(p));
}

TEST_CASE("middle projector: del Pezzo fibration coefficients") {
    const auto& e = entry("delPezzo-fib");
    REQUIRE(e.recipes.has_value());
    const auto& [q1, q2] = *e.recipes;
    CHECK(q1.A == RationalMatrix{{0, 3}, {2, 5}});

    auto p2 = middle_projector(q1);
    // block T_4 holds the coefficients of (l_i x E_j) in the standard bases
    const RationalMatrix& t4 = p2.blocks[4];
    CHECK(t4(0, 0) == frac(-5, 6));  // l x F
    CHECK(t4(0, 1) == frac(1, 2));   // l x Y
    CHECK(t4(1, 0) == frac(1, 3));   // C x F
    CHECK(t4(1, 1) == 0);            // C x Y
    CHECK(is_projector(p2));
    CHECK(compose_oracle(p2, p2) == compose(p2, p2));

    // transpose: sum b_ij (E_j x l_i)
    auto p2t = transpose(p2);
    Correspondence want = zero_correspondence(e.model, e.model);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            want = want + q1.B(i, j) * external_product(basis_class(e.model, 2, j),
                                                        basis_class(e.model, 4, i));
    CHECK(p2t == want);
}

TEST_CASE("middle projector acts as identity on H^2q and zero elsewhere") {
    for (const std::string key : {"quadric3", "delPezzo-fib", "P3-blown-point"}) {
        const auto& e = entry(key);
        REQUIRE(e.recipes.has_value());
        for (std::size_t q : {std::size_t{1}, std::size_t{2}}) {
            const auto& recipe = q == 1 ? e.recipes->first : e.recipes->second;
            auto p = middle_projector(recipe);
            CHECK(is_projector(p));
            for (std::size_t j = 0; j <= 6; ++j) {
                const RationalMatrix m = action_matrix(p, j);
                if (j == 2 * q)
                    CHECK(m == RationalMatrix::identity(e.model->space.dims[j]));
                else
                    CHECK(m.is_zero());
            }
            // transpose operates as the identity on H^{2(n-q)}
            auto pt = transpose(p);
            const std::size_t jt = 2 * (3 - q);
            CHECK(action_matrix(pt, jt) == RationalMatrix::identity(e.model->space.dims[jt]));
        }
    }
}

TEST_CASE("fibration data validates; the one-sided families are not orthogonal") {
    const auto& e = entry("Y=SxP1+section");
    REQUIRE(e.fibration.has_value());
    const FibrationData& d = *e.fibration;
    CHECK(validate_fibration(d).ok());

    auto pi20 = fibration_projector(d, 2, Side::left);
    auto pi02 = fibration_projector(d, 0, Side::right);
    CHECK_FALSE(are_orthogonal(pi20, pi02));

    // the literal composition formula agrees with the block contraction here
    CHECK(compose_oracle(pi20, pi02) == compose(pi20, pi02));

    // the right-handed family annihilates pullbacks from the base
    for (std::size_t a = 0; a <= 4; ++a) {
        auto pia2 = fibration_projector(d, a, Side::right);
        for (std::size_t j = 0; j <= 4; ++j)
            CHECK((action_matrix(pia2, j) * d.f.pullback[j]).is_zero());
    }
}

TEST_CASE("key lemma: all 75 relations on both fibration entries") {
    for (const std::string key : {"Y=SxP1+section", "Y=SxP1+bisection", "Y-conic-degenerate"}) {
        const auto& e = entry(key);
        REQUIRE(e.fibration.has_value());
        auto lemma = verify_key_lemma(*e.fibration);
        CHECK(lemma.cert.checks.size() == 75);
        for (const auto& c : lemma.cert.checks) {
            INFO(key << ": " << c.name);
            CHECK(c.pass);
        }
    }
}

TEST_CASE("assemble_pi: orthogonal projectors with pi_k = transpose(pi_{6-k})") {
    for (const std::string key : {"Y=SxP1+section", "Y=SxP1+bisection", "Y-conic-degenerate"}) {
        const auto& e = entry(key);
        auto pi = assemble_pi(*e.fibration);
        REQUIRE(pi.size() == 7);
        Correspondence sum = zero_correspondence(e.model, e.model);
        for (const auto& p : pi) sum = sum + p;
        CHECK(sum == diagonal(e.model));
        for (std::size_t a = 0; a < 7; ++a) {
            INFO(key << " pi_" << a);
            CHECK(is_projector(pi[a]));
            CHECK(pi[a] == transpose(pi[6 - a]));
            for (std::size_t b = a + 1; b < 7; ++b) CHECK(are_orthogonal(pi[a], pi[b]));
        }
    }
}

TEST_CASE("action table of the pi family") {
    for (const std::string key : {"Y=SxP1+section", "Y=SxP1+bisection", "Y-conic-degenerate"}) {
        const auto& e = entry(key);
        const FibrationData& d = *e.fibration;
        auto pi = assemble_pi(d);

        // the listed subspaces: f^*H^j for j = 0,1; plus Q[Z] for j = 2;
        // [Z].f^*H^{j-2} = i_* h^* H^{j-2} for j = 4,5,6
        std::vector<std::pair<std::size_t, RationalMatrix>> table;
        table.push_back({0, d.f.pullback[0]});
        table.push_back({1, d.f.pullback[1]});
        {
            RationalMatrix z(d.Y->space.dims[2], 1);
            for (std::size_t r = 0; r < z.rows(); ++r) z(r, 0) = d.hyperplane_class.coords[r];
            table.push_back({2, hstack(d.f.pullback[2], z)});
        }
        table.push_back({4, hstack(d.f.pullback[4], pushforward(d.i, 2) * d.h.pullback[2])});
        table.push_back({5, pushforward(d.i, 3) * d.h.pullback[3]});
        table.push_back({6, pushforward(d.i, 4) * d.h.pullback[4]});

        for (const auto& [j, u] : table)
            for (std::size_t a = 0; a < 7; ++a) {
                const RationalMatrix got = action_matrix(pi[a], j) * u;
                INFO(key << " pi_" << a << " on the listed subspace of H^" << j);
                if (a == j)
                    CHECK(got == u);
                else
                    CHECK(got.is_zero());
            }
    }
}

TEST_CASE("correction data: trivial on the product, genuine on the degenerate model") {
    {
        const auto& e = entry("Y=SxP1+section");
        auto pi = assemble_pi(*e.fibration);
        auto c = catalog_correction_data(*e.fibration, pi[2]);
        CHECK(c.A == RationalMatrix::identity(c.A.rows()));
        CHECK(c.B.is_zero());
        CHECK(correction_q2(*e.fibration, c, pi[2]) == pi[2]);
    }
    {
        const auto& e = entry("Y-conic-degenerate");
        const FibrationData& d = *e.fibration;
        auto pi = assemble_pi(d);
        auto c = catalog_correction_data(d, pi[2]);
        const std::size_t r = c.A.rows();
        CHECK(c.A != RationalMatrix::identity(r));
        CHECK(c.A * c.A == c.A);
        CHECK((c.B * c.A).is_zero());
        CHECK(c.B * c.M * c.B == c.B);
        CHECK(c.M * c.B + c.A + c.B * c.A == RationalMatrix::identity(r));

        auto q2 = correction_q2(d, c, pi[2]);
        CHECK(q2 != pi[2]);
        CHECK(is_projector(q2));
        CHECK(action_matrix(q2, 2) == RationalMatrix::identity(d.Y->space.dims[2]));
        // pi_2 sends the exceptional divisor class into the pullback part
        const std::size_t exc = d.Y->space.dims[2] - 1;
        auto moved = act(pi[2], basis_class(d.Y, 2, exc));
        RationalMatrix col(d.Y->space.dims[2], 1);
        for (std::size_t i = 0; i < col.rows(); ++i) col(i, 0) = moved.coords[i];
        CHECK(rank(hstack(d.f.pullback[2], col)) == rank(d.f.pullback[2]));
    }
}

TEST_CASE("murre_set_fibration: certificate all-pass on both entries") {
    for (const std::string key : {"Y=SxP1+section", "Y=SxP1+bisection", "Y-conic-degenerate"}) {
        const auto& e = entry(key);
        const FibrationData& d = *e.fibration;
        auto pi = assemble_pi(d);
        auto c = catalog_correction_data(d, pi[2]);
        auto set = murre_set_fibration(d, c);
        for (const auto& chk : set.certificate.checks) {
            INFO(key << ": " << chk.name << " " << chk.detail);
            CHECK(chk.pass);
        }
        CHECK(set.projectors[4] == transpose(set.projectors[2]));
    }
}

TEST_CASE("gram_schmidt: hand-built non-orthogonal pair on P1 x P1") {
    auto p1 = projective_space_model(1);
    auto x = product_model(p1, p1);
    auto v1 = basis_class(x, 2, 0);
    auto v2 = basis_class(x, 2, 1);
    ClassVector v12 = v1;
    v12.coords[1] = 1;  // v1 + v2

    auto e = external_product(v1, v2);
    auto f = external_product(v2, v12);
    REQUIRE(is_projector(e));
    REQUIRE(is_projector(f));
    CHECK(compose(f, e).is_zero());
    CHECK_FALSE(compose(e, f).is_zero());

    auto out = gram_schmidt({e, f});
    REQUIRE(out.size() == 2);
    CHECK(out[0] == e);
    CHECK(out[1] == external_product(v2, v1));  // frozen by hand
    CHECK(are_orthogonal(out[0], out[1]));
    for (std::size_t j = 0; j <= 4; ++j)
        CHECK(rank(action_matrix(out[1], j)) == rank(action_matrix(f, j)));

    // already-orthogonal input is a fixed point
    std::vector<Correspondence> kf;
    for (std::size_t j = 0; j <= 4; ++j) kf.push_back(kunneth_projector(x, j));
    CHECK(gram_schmidt(kf) == kf);
}

TEST_CASE("murre_set_algebraic: P3, quadric3, del Pezzo") {
    for (const std::string key : {"P3", "quadric3", "delPezzo-fib"}) {
        const auto& e = entry(key);
        REQUIRE(e.recipes.has_value());
        auto set = murre_set_algebraic(e.model, e.recipes->first, e.recipes->second);
        for (const auto& chk : set.certificate.checks) {
            INFO(key << ": " << chk.name);
            CHECK(chk.pass);
        }
        // no odd cohomology: the odd projectors vanish
        CHECK(set.projectors[1].is_zero());
        CHECK(set.projectors[3].is_zero());
        CHECK(set.projectors[5].is_zero());
    }
    // the del Pezzo middle projector of the set is the catalog projector
    const auto& e = entry("delPezzo-fib");
    auto set = murre_set_algebraic(e.model, e.recipes->first, e.recipes->second);
    CHECK(set.projectors[2] == middle_projector(e.recipes->first));
    CHECK(set.projectors[4] == middle_projector(e.recipes->second));
}

TEST_CASE("murre output is a gram_schmidt fixed point") {
    const auto& e = entry("Y=SxP1+section");
    auto pi = assemble_pi(*e.fibration);
    auto c = catalog_correction_data(*e.fibration, pi[2]);
    auto set = murre_set_fibration(*e.fibration, c);
    CHECK(gram_schmidt(set.projectors) == set.projectors);
}

TEST_CASE("error paths: recipes, corrections, algebraic preconditions") {
    auto e = elliptic_curve_model();
    auto p3 = projective_space_model(3);

    // recipe: non-spanning / wrong-sized bases
    CHECK_THROWS_AS(make_projector_recipe(p3, 1, {}, {}), RankDeficient);
    {
        // duplicate E vector on a rank-2 degree
        auto dp = del_pezzo_fibration_model();
        auto v = basis_class(dp, 2, 0);
        CHECK_THROWS_AS(make_projector_recipe(dp, 1, {v, v},
                                              {basis_class(dp, 4, 0), basis_class(dp, 4, 1)}),
                        RankDeficient);
    }
    {
        // non-algebraic basis vector
        auto bad = std::make_shared<VarietyModel>(*del_pezzo_fibration_model());
        bad->space.algebraic_flags[2][1] = false;
        ModelPtr badp = bad;
        CHECK_THROWS_AS(standard_recipe(badp, 1), NotFullyAlgebraic);
        CHECK_THROWS_AS(murre_set_algebraic(badp, standard_recipe(del_pezzo_fibration_model(), 1),
                                            standard_recipe(del_pezzo_fibration_model(), 2)),
                        NotFullyAlgebraic);
    }
    CHECK_THROWS_AS(murre_set_algebraic(e, standard_recipe(p3, 1), standard_recipe(p3, 2)),
                    ShapeMismatch);

    // correction data: wrong leading classes
    {
        const auto& entry_ = *find_entry(catalog(), "Y-conic-degenerate");
        const FibrationData& d = *entry_.fibration;
        auto pi = assemble_pi(d);
        auto h = detail::algebraic_spanning_classes(d, 2);
        auto l = detail::algebraic_spanning_classes(d, 4);
        auto h_swapped = h;
        std::swap(h_swapped.front(), h_swapped.back());
        CHECK_THROWS_AS(make_correction_data(d, pi[2], h_swapped, l), ShapeMismatch);
        // a non-idempotent stand-in for pi_2 is rejected
        auto not_proj = Rational(2) * pi[2];
        CHECK_THROWS_AS(make_correction_data(d, not_proj, h, l), NotIdempotent);
    }

    // gram_schmidt rejects non-idempotent input
    auto half = frac(1, 2) * diagonal(e);
    CHECK_THROWS_AS(gram_schmidt({half}), NotIdempotent);
}
