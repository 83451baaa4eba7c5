#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "motives/matrix.hpp"

namespace motives {

/// Koszul sign for moving a class of degree a past one of degree b.
inline int koszul_sign(std::size_t a, std::size_t b) { return ((a & 1) && (b & 1)) ? -1 : 1; }

/// Graded symmetry sign of the cup pairing: eps(k) = (-1)^{k(2d-k)} = (-1)^k.
inline int pairing_symmetry_sign(std::size_t k) { return (k & 1) ? -1 : 1; }

/// Graded rational vector space with labelled bases and algebraicity flags
/// on even-degree basis vectors.
struct GradedSpace {
    std::vector<std::size_t> dims;                       // indexed by degree 0..2d
    std::vector<std::vector<std::string>> basis_labels;  // per degree
    std::vector<std::vector<bool>> algebraic_flags;      // per degree; empty for odd degrees
};

/// Finite presentation of the rational cohomology of a smooth projective
/// variety: Betti data plus the Gram matrices of the Poincare pairings
/// H^k x H^{2d-k} -> Q in the chosen bases. Values are immutable once built.
struct VarietyModel {
    std::string name;
    std::size_t dim = 0;
    GradedSpace space;
    std::vector<RationalMatrix> pairings;  // pairings[k]: dims[k] x dims[2d-k]

    std::size_t degrees() const { return 2 * dim + 1; }

    std::size_t dim_at(long k) const {
        if (k < 0 || static_cast<std::size_t>(k) >= space.dims.size()) return 0;
        return space.dims[static_cast<std::size_t>(k)];
    }

    const RationalMatrix& pairing(std::size_t k) const { return pairings[k]; }
};

using ModelPtr = std::shared_ptr<const VarietyModel>;

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
    void require(bool cond, const std::string& msg) {
        if (!cond) violations.push_back(msg);
    }
};

inline ValidationReport validate_variety(const VarietyModel& v) {
    ValidationReport rep;
    const std::size_t n = 2 * v.dim + 1;
    rep.require(v.space.dims.size() == n, "grading: dims must cover degrees 0..2d");
    rep.require(v.space.basis_labels.size() == n, "grading: labels must cover degrees 0..2d");
    rep.require(v.space.algebraic_flags.size() == n, "grading: flags must cover degrees 0..2d");
    rep.require(v.pairings.size() == n, "grading: pairings must cover degrees 0..2d");
    if (!rep.ok()) return rep;

    rep.require(v.space.dims[0] == 1 && v.space.dims[2 * v.dim] == 1,
                "connectedness: dims[0] and dims[2d] must be 1");
    for (std::size_t k = 0; k <= v.dim; ++k)
        rep.require(v.space.dims[k] == v.space.dims[2 * v.dim - k],
                    "duality dims: dims[" + std::to_string(k) + "] != dims[" +
                        std::to_string(2 * v.dim - k) + "]");

    for (std::size_t k = 0; k < n; ++k) {
        rep.require(v.space.basis_labels[k].size() == v.space.dims[k],
                    "labels: degree " + std::to_string(k) + " count mismatch");
        if (k % 2 == 0)
            rep.require(v.space.algebraic_flags[k].size() == v.space.dims[k],
                        "flags: degree " + std::to_string(k) + " count mismatch");
        else
            rep.require(v.space.algebraic_flags[k].empty(),
                        "flags: odd degree " + std::to_string(k) + " must have none");
    }
    if (!rep.ok()) return rep;

    rep.require(!v.space.algebraic_flags[0].empty() && v.space.algebraic_flags[0][0],
                "flags: degree-0 class must be algebraic");
    rep.require(!v.space.algebraic_flags[2 * v.dim].empty() && v.space.algebraic_flags[2 * v.dim][0],
                "flags: top class must be algebraic");

    for (std::size_t k = 0; k < n; ++k) {
        const RationalMatrix& p = v.pairings[k];
        const bool shape_ok =
            p.rows() == v.space.dims[k] && p.cols() == v.space.dims[2 * v.dim - k];
        rep.require(shape_ok, "pairing shape: degree " + std::to_string(k));
        if (!shape_ok) continue;
        if (p.rows() == p.cols() || p.rows() * p.cols() == 0) {
            if (rank(p) != p.rows())
                rep.violations.push_back("nondegenerate pairing: degree " + std::to_string(k) +
                                         " is singular");
        }
    }
    if (!rep.ok()) return rep;

    for (std::size_t k = 0; k <= 2 * v.dim; ++k) {
        const RationalMatrix expected =
            Rational(pairing_symmetry_sign(k)) * v.pairings[k].transposed();
        rep.require(v.pairings[2 * v.dim - k] == expected,
                    "pairing symmetry: degrees " + std::to_string(k) + "/" +
                        std::to_string(2 * v.dim - k));
    }

    RationalMatrix unit(1, 1);
    unit(0, 0) = 1;
    rep.require(v.pairings[0] == unit, "normalization: pairings[0] must be [[1]]");
    return rep;
}

/*
 * Basis bookkeeping for a Kunneth product of two graded spaces. Within total
 * degree n the components H^k (x) H^{n-k} are laid out with k ascending and
 * (a, b) row-major, which fixes the basis order everywhere a product model
 * (or the composition oracle's tensor cube) is used.
 */
class KunnethIndexer {
public:
    KunnethIndexer(std::vector<std::size_t> left_dims, std::vector<std::size_t> right_dims)
        : left_(std::move(left_dims)), right_(std::move(right_dims)) {
        total_.assign(left_.size() + right_.size() - 1, 0);
        offsets_.assign(total_.size(), std::vector<std::size_t>(left_.size(), 0));
        for (std::size_t n = 0; n < total_.size(); ++n) {
            std::size_t off = 0;
            for (std::size_t k = 0; k < left_.size(); ++k) {
                offsets_[n][k] = off;
                if (n >= k && n - k < right_.size()) off += left_[k] * right_[n - k];
            }
            total_[n] = off;
        }
    }

    std::size_t total_dim(std::size_t n) const { return n < total_.size() ? total_[n] : 0; }
    std::size_t degrees() const { return total_.size(); }

    std::size_t left_dim(std::size_t k) const { return k < left_.size() ? left_[k] : 0; }
    std::size_t right_dim(std::size_t l) const { return l < right_.size() ? right_[l] : 0; }

    // flat index of e^L_{k,a} (x) e^R_{n-k,b} inside degree n
    std::size_t index(std::size_t n, std::size_t k, std::size_t a, std::size_t b) const {
        return offsets_[n][k] + a * right_[n - k] + b;
    }

    std::size_t component_offset(std::size_t n, std::size_t k) const { return offsets_[n][k]; }

    bool component_nonzero(std::size_t n, std::size_t k) const {
        return k < left_.size() && n >= k && n - k < right_.size() && left_[k] > 0 &&
               right_[n - k] > 0;
    }

private:
    std::vector<std::size_t> left_, right_, total_;
    std::vector<std::vector<std::size_t>> offsets_;
};

/// Kunneth model of X x Y: Betti numbers convolve, labels concatenate and
/// the pairings acquire the sign (-1)^{deg v * deg u'} from swapping the
/// inner factors. The result passes validate_variety whenever the inputs do.
inline ModelPtr product_model(const ModelPtr& x, const ModelPtr& y) {
    const std::size_t d = x->dim + y->dim;
    KunnethIndexer idx(x->space.dims, y->space.dims);

    auto m = std::make_shared<VarietyModel>();
    m->name = x->name + "x" + y->name;
    m->dim = d;
    m->space.dims.resize(2 * d + 1);
    m->space.basis_labels.resize(2 * d + 1);
    m->space.algebraic_flags.resize(2 * d + 1);
    m->pairings.resize(2 * d + 1);

    for (std::size_t n = 0; n <= 2 * d; ++n) {
        m->space.dims[n] = idx.total_dim(n);
        auto& labels = m->space.basis_labels[n];
        auto& flags = m->space.algebraic_flags[n];
        labels.resize(idx.total_dim(n));
        if (n % 2 == 0) flags.resize(idx.total_dim(n), false);
        for (std::size_t k = 0; k <= n; ++k) {
            if (!idx.component_nonzero(n, k)) continue;
            const std::size_t l = n - k;
            for (std::size_t a = 0; a < x->dim_at(k); ++a)
                for (std::size_t b = 0; b < y->dim_at(l); ++b) {
                    const std::size_t i = idx.index(n, k, a, b);
                    labels[i] = x->space.basis_labels[k][a] + "*" + y->space.basis_labels[l][b];
                    if (n % 2 == 0 && k % 2 == 0 && l % 2 == 0)
                        flags[i] = x->space.algebraic_flags[k][a] && y->space.algebraic_flags[l][b];
                }
        }
    }

    for (std::size_t n = 0; n <= 2 * d; ++n) {
        RationalMatrix p(idx.total_dim(n), idx.total_dim(2 * d - n));
        for (std::size_t k = 0; k <= n; ++k) {
            if (!idx.component_nonzero(n, k)) continue;
            const std::size_t l = n - k;
            const std::size_t kk = 2 * x->dim - k;  // partner component
            const std::size_t ll = 2 * y->dim - l;
            if (!idx.component_nonzero(2 * d - n, kk)) continue;
            const Rational sign{koszul_sign(l, kk)};
            const RationalMatrix& px = x->pairing(k);
            const RationalMatrix& py = y->pairing(l);
            for (std::size_t a = 0; a < x->dim_at(k); ++a)
                for (std::size_t b = 0; b < y->dim_at(l); ++b)
                    for (std::size_t a2 = 0; a2 < x->dim_at(kk); ++a2)
                        for (std::size_t b2 = 0; b2 < y->dim_at(ll); ++b2) {
                            const Rational v = px(a, a2) * py(b, b2);
                            if (v != 0)
                                p(idx.index(n, k, a, b), idx.index(2 * d - n, kk, a2, b2)) =
                                    sign * v;
                        }
        }
        m->pairings[n] = std::move(p);
    }
    return m;
}

}  // namespace motives
