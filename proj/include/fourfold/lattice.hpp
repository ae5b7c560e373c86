#pragma once

// Integer intersection lattices in a diagonalizable basis, polarizations
// (maximal positive-definite subspaces), exact self-dual projections, and
// the sign-choice construction of a spin^c class on a blow-up whose
// self-dual square dominates 2*chi + 3*tau of the minimal model.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fourfold/char_numbers.hpp"
#include "fourfold/rational.hpp"

namespace fourfold {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

struct IntersectionLattice {
    std::size_t rank = 0;
    std::vector<std::vector<Int>> gram;  // symmetric
    Int b_plus = 0;
    Int b_minus = 0;

    static IntersectionLattice diagonal(const std::vector<Int>& entries) {
        IntersectionLattice lat;
        lat.rank = entries.size();
        lat.gram.assign(lat.rank, std::vector<Int>(lat.rank, Int(0)));
        for (std::size_t i = 0; i < lat.rank; ++i) {
            if (sgn(entries[i]) == 0)
                throw std::invalid_argument("IntersectionLattice: zero diagonal entry");
            lat.gram[i][i] = entries[i];
            if (sgn(entries[i]) > 0)
                lat.b_plus += 1;
            else
                lat.b_minus += 1;
        }
        return lat;
    }

    // This lattice extended by k copies of <-1> (the blow-up lattice).
    IntersectionLattice sum_with_negatives(std::size_t k) const {
        IntersectionLattice lat;
        lat.rank = rank + k;
        lat.gram.assign(lat.rank, std::vector<Int>(lat.rank, Int(0)));
        for (std::size_t i = 0; i < rank; ++i)
            for (std::size_t j = 0; j < rank; ++j) lat.gram[i][j] = gram[i][j];
        for (std::size_t i = rank; i < lat.rank; ++i) lat.gram[i][i] = -1;
        lat.b_plus = b_plus;
        lat.b_minus = b_minus + Int(static_cast<unsigned long>(k));
        return lat;
    }

    Rational pairing(const RationalVector& x, const RationalVector& y) const {
        if (x.size() != rank || y.size() != rank)
            throw std::invalid_argument("pairing: vector length != rank");
        Rational acc(0);
        for (std::size_t i = 0; i < rank; ++i) {
            if (sgn(x[i]) == 0) continue;
            for (std::size_t j = 0; j < rank; ++j) {
                if (sgn(gram[i][j]) == 0 || sgn(y[j]) == 0) continue;
                acc += x[i] * gram[i][j] * y[j];
            }
        }
        return acc;
    }

    // Signature by symmetric congruence reduction over the rationals.
    // Throws std::domain_error if the form is degenerate.
    std::pair<Int, Int> computed_signature() const {
        RationalMatrix a(rank, RationalVector(rank, Rational(0)));
        for (std::size_t i = 0; i < rank; ++i)
            for (std::size_t j = 0; j < rank; ++j) a[i][j] = Rational(gram[i][j]);
        Int plus = 0, minus = 0;
        for (std::size_t i = 0; i < rank; ++i) {
            if (sgn(a[i][i]) == 0) {
                std::size_t d = i;
                while (d < rank && sgn(a[d][d]) == 0) ++d;
                if (d < rank) {
                    std::swap(a[i], a[d]);
                    for (std::size_t r = 0; r < rank; ++r) std::swap(a[r][i], a[r][d]);
                } else {
                    // all-zero trailing diagonal: manufacture a pivot from an
                    // off-diagonal entry, or the form is degenerate
                    bool found = false;
                    std::size_t fr = i, fc = i;
                    for (std::size_t r = i; r < rank && !found; ++r)
                        for (std::size_t c = r + 1; c < rank && !found; ++c)
                            if (sgn(a[r][c]) != 0) {
                                fr = r;
                                fc = c;
                                found = true;
                            }
                    if (!found)
                        throw std::domain_error(
                            "computed_signature: degenerate intersection form");
                    for (std::size_t c = 0; c < rank; ++c) a[fr][c] += a[fc][c];
                    for (std::size_t r = 0; r < rank; ++r) a[r][fr] += a[r][fc];
                    if (fr != i) {
                        std::swap(a[i], a[fr]);
                        for (std::size_t r = 0; r < rank; ++r) std::swap(a[r][i], a[r][fr]);
                    }
                }
            }
            Rational pivot = a[i][i];
            if (sgn(pivot) > 0)
                plus += 1;
            else
                minus += 1;
            // row operations first, then the matching column operations; the
            // latter reduce to clearing a[i][i+1..] once rows are done
            for (std::size_t r = i + 1; r < rank; ++r) {
                if (sgn(a[r][i]) == 0) continue;
                Rational f = a[r][i] / pivot;
                for (std::size_t c = i; c < rank; ++c) a[r][c] -= f * a[i][c];
            }
            for (std::size_t c = i + 1; c < rank; ++c) a[i][c] = 0;
        }
        return {plus, minus};
    }

    void validate() const {
        if (gram.size() != rank)
            throw std::invalid_argument("IntersectionLattice: bad gram size");
        for (std::size_t i = 0; i < rank; ++i) {
            if (gram[i].size() != rank)
                throw std::invalid_argument("IntersectionLattice: bad gram row");
            for (std::size_t j = 0; j < i; ++j)
                if (gram[i][j] != gram[j][i])
                    throw std::invalid_argument("IntersectionLattice: gram not symmetric");
        }
        auto [p, m] = computed_signature();
        if (p != b_plus || m != b_minus)
            throw std::invalid_argument("IntersectionLattice: stored signature mismatch");
    }
};

struct Polarization {
    std::vector<RationalVector> basis;
};

// Positive definiteness of a symmetric rational matrix by checking that all
// elimination pivots (ratios of leading principal minors) are positive.
inline bool is_positive_definite(RationalMatrix a) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw std::invalid_argument("is_positive_definite: not square");
        if (sgn(a[i][i]) <= 0) return false;
        for (std::size_t r = i + 1; r < n; ++r) {
            if (sgn(a[r][i]) == 0) continue;
            Rational f = a[r][i] / a[i][i];
            for (std::size_t c = i; c < n; ++c) a[r][c] -= f * a[i][c];
        }
    }
    return true;
}

struct Projection {
    RationalVector self_dual_part;
    Rational norm_sq;  // pairing(self_dual_part, self_dual_part)
};

// Orthogonal projection of c onto span(H.basis) with respect to the
// intersection form. Requires the restriction of the form to H to be
// positive definite; the Gram solve doubles as that check since a symmetric
// matrix is positive definite iff all its elimination pivots are positive.
inline Projection project_plus(const IntersectionLattice& lat,
                               const RationalVector& c, const Polarization& h) {
    const std::size_t n = h.basis.size();
    if (n == 0) throw std::invalid_argument("project_plus: empty polarization");
    RationalMatrix b(n, RationalVector(n + 1, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            b[i][j] = lat.pairing(h.basis[i], h.basis[j]);
        b[i][n] = lat.pairing(h.basis[i], c);
    }
    RationalVector rhs(n);
    for (std::size_t i = 0; i < n; ++i) rhs[i] = b[i][n];
    // forward elimination, no pivoting: pivots must stay positive
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(b[i][i]) <= 0)
            throw std::domain_error("project_plus: polarization not positive definite");
        for (std::size_t r = i + 1; r < n; ++r) {
            if (sgn(b[r][i]) == 0) continue;
            Rational f = b[r][i] / b[i][i];
            for (std::size_t k = i; k <= n; ++k) b[r][k] -= f * b[i][k];
        }
    }
    RationalVector x(n, Rational(0));
    for (std::size_t i = n; i-- > 0;) {
        Rational acc = b[i][n];
        for (std::size_t j = i + 1; j < n; ++j) acc -= b[i][j] * x[j];
        x[i] = acc / b[i][i];
    }
    Projection proj;
    proj.self_dual_part.assign(lat.rank, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < lat.rank; ++j)
            proj.self_dual_part[j] += x[i] * h.basis[i][j];
    // pairing(p,p) = x . rhs because the Gram system makes p and c-p orthogonal
    proj.norm_sq = 0;
    for (std::size_t i = 0; i < n; ++i) proj.norm_sq += x[i] * rhs[i];
    return proj;
}

enum class VirtualDimStatus { Defined, ZeroByDefinition, Malformed };

struct VirtualDim {
    VirtualDimStatus status = VirtualDimStatus::Malformed;
    std::optional<Int> dim;  // present unless Malformed
};

// Expected dimension (c1_sq - (2chi+3tau))/4 of the solution moduli space.
// Defined when the result is a non-negative even integer; other integers
// mean the invariant is zero by definition; a fractional value marks a
// malformed class.
inline VirtualDim virtual_dimension(const Rational& c1_sq, const Int& gb) {
    Rational ell4 = c1_sq - gb;
    VirtualDim out;
    if (ell4.get_den() != 1) return out;
    Int num(ell4.get_num());
    if (num % 4 != 0) return out;
    Int ell = num / 4;
    out.dim = ell;
    out.status = (sgn(ell) >= 0 && ell % 2 == 0) ? VirtualDimStatus::Defined
                                                 : VirtualDimStatus::ZeroByDefinition;
    return out;
}

enum class ParityCheck { Characteristic, NotCharacteristic, Unchecked };

// Characteristic test c.e = e.e (mod 2) for all basis vectors, decidable
// here only for diagonal unimodular lattices: every e_i has odd square, so c
// is characteristic iff all its coordinates are odd integers. Anything else
// is reported Unchecked rather than guessed.
inline ParityCheck characteristic_parity(const IntersectionLattice& lat,
                                         const RationalVector& c) {
    if (c.size() != lat.rank)
        throw std::invalid_argument("characteristic_parity: vector length != rank");
    for (std::size_t i = 0; i < lat.rank; ++i)
        for (std::size_t j = 0; j < lat.rank; ++j) {
            if (i == j) {
                if (lat.gram[i][i] != 1 && lat.gram[i][i] != -1) return ParityCheck::Unchecked;
            } else if (sgn(lat.gram[i][j]) != 0) {
                return ParityCheck::Unchecked;
            }
        }
    for (const auto& coord : c)
        if (coord.get_den() != 1) return ParityCheck::Unchecked;
    for (const auto& coord : c)
        if (Int(coord.get_num()) % 2 == 0) return ParityCheck::NotCharacteristic;
    return ParityCheck::Characteristic;
}

struct BlowupClass {
    IntersectionLattice ambient;     // lattice of X # k reversed planes
    RationalVector c1;               // chosen class c1(X) + sum eps_j E_j
    std::vector<int> signs;          // the eps_j
    Rational c1_sq;                  // pairing(c1, c1)
    Rational c1_plus_sq;             // (c1+)^2 for the given polarization
    Rational x_plus_sq;              // ([c1(X)]+)^2
    RationalVector self_dual_part;
    ParityCheck parity = ParityCheck::Unchecked;
    VirtualDim vd;                   // for 2chi+3tau of the blown-up manifold
};

// Builds c1(L) = c1(X) + sum eps_j E_j on the ambient lattice of the k-fold
// blow-up, choosing eps_j so the projection of c1(X) pairs non-negatively
// with eps_j E_j (ties resolve to +1). Guarantees the exact chain
//   (c1+)^2 >= ([c1(X)]+)^2 >= c1(X)^2 >= gb_x
// where gb_x = (2chi+3tau)(X). Preconditions: gb_x > 0 and c1(X)^2 >= gb_x
// (non-negative virtual dimension); the polarization must span a maximal
// positive subspace, i.e. have exactly b_plus vectors.
// When b_plus = 1 and 2chi+3tau of the blow-up is still positive, the global
// sign is normalized so the self-dual part pairs non-negatively with the
// first polarization vector (the future time-like direction).
inline BlowupClass blowup_spinc_class(const IntersectionLattice& x_lattice,
                                      const RationalVector& c1_x, std::size_t k,
                                      const Polarization& h, const Int& gb_x) {
    if (sgn(gb_x) <= 0)
        throw std::domain_error("blowup_spinc_class: 2chi+3tau of X must be positive");
    Rational c1x_sq = x_lattice.pairing(c1_x, c1_x);
    if (c1x_sq < gb_x)
        throw std::domain_error(
            "blowup_spinc_class: c1(X)^2 < 2chi+3tau(X), negative virtual dimension");
    BlowupClass out;
    out.ambient = x_lattice.sum_with_negatives(k);
    if (h.basis.size() != out.ambient.b_plus)
        throw std::invalid_argument(
            "blowup_spinc_class: polarization dimension must equal b_plus");
    RationalVector cx(out.ambient.rank, Rational(0));
    for (std::size_t i = 0; i < x_lattice.rank; ++i) cx[i] = c1_x[i];
    Projection px = project_plus(out.ambient, cx, h);
    out.x_plus_sq = px.norm_sq;

    out.c1 = cx;
    out.signs.assign(k, 1);
    for (std::size_t j = 0; j < k; ++j) {
        RationalVector ej(out.ambient.rank, Rational(0));
        ej[x_lattice.rank + j] = 1;
        Rational dot = out.ambient.pairing(px.self_dual_part, ej);
        out.signs[j] = (sgn(dot) >= 0) ? 1 : -1;
        out.c1[x_lattice.rank + j] = out.signs[j];
    }
    Projection pc = project_plus(out.ambient, out.c1, h);

    Int gb_m = gb_x - Int(static_cast<unsigned long>(k));
    if (out.ambient.b_plus == 1 && sgn(gb_m) > 0 &&
        sgn(out.ambient.pairing(pc.self_dual_part, h.basis[0])) < 0) {
        for (auto& v : out.c1) v = -v;
        for (auto& s : out.signs) s = -s;
        for (auto& v : pc.self_dual_part) v = -v;
    }

    out.c1_sq = out.ambient.pairing(out.c1, out.c1);
    out.c1_plus_sq = pc.norm_sq;
    out.self_dual_part = pc.self_dual_part;
    out.parity = characteristic_parity(out.ambient, out.c1);
    out.vd = virtual_dimension(out.c1_sq, gb_m);
    return out;
}

}  // namespace fourfold
