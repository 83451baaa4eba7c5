#pragma once

#include "motives/variety.hpp"

namespace motives {

/// P^n with the hyperplane-power basis; every pairing is [[1]].
inline ModelPtr projective_space_model(std::size_t n, std::string name = "") {
    auto m = std::make_shared<VarietyModel>();
    m->name = name.empty() ? (n == 0 ? "point" : "P" + std::to_string(n)) : std::move(name);
    m->dim = n;
    m->space.dims.assign(2 * n + 1, 0);
    m->space.basis_labels.resize(2 * n + 1);
    m->space.algebraic_flags.resize(2 * n + 1);
    m->pairings.resize(2 * n + 1);
    for (std::size_t k = 0; k <= 2 * n; ++k) {
        if (k % 2 == 0) {
            m->space.dims[k] = 1;
            const std::size_t i = k / 2;
            m->space.basis_labels[k] = {i == 0 ? "1" : (i == 1 ? "h" : "h" + std::to_string(i))};
            m->space.algebraic_flags[k] = {true};
            m->pairings[k] = RationalMatrix::identity(1);
        } else {
            m->pairings[k] = RationalMatrix::zero(0, 0);
        }
    }
    return m;
}

inline ModelPtr point_model() { return projective_space_model(0); }

/// Elliptic curve: dims (1,2,1); skew pairing <a,b> = 1 on H^1.
inline ModelPtr elliptic_curve_model(std::string name = "E") {
    auto m = std::make_shared<VarietyModel>();
    m->name = std::move(name);
    m->dim = 1;
    m->space.dims = {1, 2, 1};
    m->space.basis_labels = {{"1"}, {"a", "b"}, {"pt"}};
    m->space.algebraic_flags = {{true}, {}, {true}};
    m->pairings = {RationalMatrix::identity(1), RationalMatrix{{0, 1}, {-1, 0}},
                   RationalMatrix::identity(1)};
    return m;
}

/// Genus-g curve: dims (1,2g,1), standard symplectic H^1 pairing.
inline ModelPtr curve_model(std::size_t genus, std::string name = "") {
    auto m = std::make_shared<VarietyModel>();
    m->name = name.empty() ? "C" + std::to_string(genus) : std::move(name);
    m->dim = 1;
    m->space.dims = {1, 2 * genus, 1};
    m->space.basis_labels.resize(3);
    m->space.basis_labels[0] = {"1"};
    m->space.basis_labels[2] = {"pt"};
    for (std::size_t i = 1; i <= genus; ++i) {
        m->space.basis_labels[1].push_back("a" + std::to_string(i));
        m->space.basis_labels[1].push_back("b" + std::to_string(i));
    }
    m->space.algebraic_flags = {{true}, {}, {true}};
    RationalMatrix p1(2 * genus, 2 * genus);
    for (std::size_t i = 0; i < genus; ++i) {
        p1(2 * i, 2 * i + 1) = 1;
        p1(2 * i + 1, 2 * i) = -1;
    }
    m->pairings = {RationalMatrix::identity(1), std::move(p1), RationalMatrix::identity(1)};
    return m;
}

/// Smooth quadric 3-fold: Betti table of P^3, but with basis {h, h^2}
/// in the middle degrees, so <h, h^2> = deg = 2 and the dual-basis
/// coefficients become genuinely fractional.
inline ModelPtr quadric3_model() {
    auto m = std::make_shared<VarietyModel>();
    m->name = "quadric3";
    m->dim = 3;
    m->space.dims = {1, 0, 1, 0, 1, 0, 1};
    m->space.basis_labels = {{"1"}, {}, {"h"}, {}, {"h2"}, {}, {"pt"}};
    m->space.algebraic_flags = {{true}, {}, {true}, {}, {true}, {}, {true}};
    RationalMatrix two(1, 1);
    two(0, 0) = 2;
    m->pairings = {RationalMatrix::identity(1), RationalMatrix::zero(0, 0), two,
                   RationalMatrix::zero(0, 0), two, RationalMatrix::zero(0, 0),
                   RationalMatrix::identity(1)};
    return m;
}

/// Del Pezzo fibration over a curve with H^2 of rank two, basis {F, Y}
/// (general fiber, anticanonical multisection divisor) against {l, C}
/// (extremal curve, multisection curve); intersection numbers r = (C.F) = 3,
/// m = (Y.l) = 2, d = Y^3 = 5.
inline ModelPtr del_pezzo_fibration_model() {
    auto m = std::make_shared<VarietyModel>();
    m->name = "delPezzo-fib";
    m->dim = 3;
    m->space.dims = {1, 0, 2, 0, 2, 0, 1};
    m->space.basis_labels = {{"1"}, {}, {"F", "Y"}, {}, {"l", "C"}, {}, {"pt"}};
    m->space.algebraic_flags = {{true}, {}, {true, true}, {}, {true, true}, {}, {true}};
    RationalMatrix p2{{0, 3}, {2, 5}};
    m->pairings = {RationalMatrix::identity(1), RationalMatrix::zero(0, 0), p2,
                   RationalMatrix::zero(0, 0), p2.transposed(), RationalMatrix::zero(0, 0),
                   RationalMatrix::identity(1)};
    return m;
}

}  // namespace motives
