#include <catch2/catch_amalgamated.hpp>

#include "motives/catalog.hpp"

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

TEST_CASE("blow-up Betti bookkeeping") {
    auto p3 = projective_space_model(3);
    {
        BlowupSpec spec{p3, BlowupSpec::Center::point, 0, {}};
        auto bl = blowup_model(spec);
        CHECK(bl.model->space.dims == std::vector<std::size_t>{1, 0, 2, 0, 2, 0, 1});
        CHECK(validate_variety(*bl.model).ok());
        CHECK(validate_morphism(bl.phi).ok());  // includes phi_* phi^* = id
        auto cert = verify_split_ranks(*p3, *bl.model, spec);
        for (const auto& c : cert.checks) {
            INFO(c.name << ": " << c.detail);
            CHECK(c.pass);
        }
    }
    {
        BlowupSpec spec{p3, BlowupSpec::Center::curve, 2, {}};
        auto bl = blowup_model(spec);
        CHECK(bl.model->space.dims == std::vector<std::size_t>{1, 0, 2, 2, 2, 0, 1});
        CHECK(validate_variety(*bl.model).ok());
        auto cert = verify_split_ranks(*p3, *bl.model, spec);
        for (const auto& c : cert.checks) CHECK(c.pass);
    }
    {
        // genus-2 center: H^3 gains 4
        BlowupSpec spec{p3, BlowupSpec::Center::curve, 4, {}};
        auto bl = blowup_model(spec);
        CHECK(bl.model->space.dims[3] == 4);
        auto cert = verify_split_ranks(*p3, *bl.model, spec);
        for (const auto& c : cert.checks) CHECK(c.pass);
    }
    CHECK_THROWS_AS(blowup_model(BlowupSpec{p3, BlowupSpec::Center::point, 2, {}}), ShapeMismatch);
}

TEST_CASE("graph of the blow-down composes to the diagonal") {
    for (const std::string key : {"P3-blown-point", "P3-blown-genus1curve", "Y-conic-degenerate"}) {
        const auto& e = entry(key);
        REQUIRE(e.blowdown.has_value());
        const auto& phi = *e.blowdown;
        CHECK(compose(graph(phi), transpose(graph(phi))) == diagonal(phi.source));
    }
}

TEST_CASE("transport of the diagonal is the diagonal") {
    const auto& e = entry("P3-blown-point");
    auto out = transport({diagonal(e.model)}, *e.blowdown);
    REQUIRE(out.size() == 1);
    CHECK(out[0] == diagonal(e.blowdown->source));
}

TEST_CASE("transported murre sets verify on the base") {
    for (const std::string key : {"P3-blown-point", "P3-blown-genus1curve"}) {
        const auto& e = entry(key);
        REQUIRE(e.recipes.has_value());
        auto set = murre_set_algebraic(e.model, e.recipes->first, e.recipes->second);
        REQUIRE(set.certificate.all_pass());

        auto res = transport_family(set.projectors, *e.blowdown);
        for (const auto& c : res.certificate.checks) {
            INFO(key << ": " << c.name << " " << c.detail);
            CHECK(c.pass);
        }
        // the transported middle projector is the base's own middle projector
        const auto* base = find_entry(catalog(), e.blowup_base_key);
        REQUIRE(base != nullptr);
        CHECK(res.transported[2] == middle_projector(standard_recipe(base->model, 1)));
    }
}

TEST_CASE("transported fibration murre set verifies on the product") {
    const auto& e = entry("Y-conic-degenerate");
    const FibrationData& d = *e.fibration;
    auto pi = assemble_pi(d);
    auto c = catalog_correction_data(d, pi[2]);
    auto set = murre_set_fibration(d, c);
    REQUIRE(set.certificate.all_pass());

    auto res = transport_family(set.projectors, *e.blowdown);
    for (const auto& chk : res.certificate.checks) {
        INFO(chk.name << " " << chk.detail);
        CHECK(chk.pass);
    }
}

TEST_CASE("iterated blow-ups: transports compose through the composed graph") {
    auto p3 = projective_space_model(3);
    BlowupSpec s1{p3, BlowupSpec::Center::point, 0, {}};
    auto b1 = blowup_model(s1);
    BlowupSpec s2{b1.model, BlowupSpec::Center::curve, 2, {}};
    auto b2 = blowup_model(s2);

    // family upstairs: the Kunneth projectors of the double blow-up
    std::vector<Correspondence> fam;
    for (std::size_t j = 0; j <= 6; ++j) fam.push_back(kunneth_projector(b2.model, j));

    auto two_step = transport(transport(fam, b2.phi), b1.phi);
    auto composite = compose_morphisms(b1.phi, b2.phi);  // (phi1 o phi2)^* = phi2^* phi1^*
    auto one_step = transport(fam, composite);
    CHECK(two_step == one_step);

    // graphs compose contravariantly along the tower
    CHECK(graph(composite) == compose(graph(b1.phi), graph(b2.phi)));

    auto res = transport_family(fam, composite);
    for (const auto& c : res.certificate.checks) CHECK(c.pass);
}
