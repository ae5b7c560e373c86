#pragma once

// Curvature-energy coefficients as exact rationals or certified intervals:
// the L2 Weyl bound, the one-parameter family of weighted scalar/Weyl
// energies with its closed-form infimum, a brute-force minimization
// certificate, the Kahler saturation identity, the Ricci L2 bound, and the
// two-sided Gauss-Bonnet consistency check. All integrals are carried in
// pi^2-stripped units.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "fourfold/rational.hpp"

namespace fourfold {

// beta = (1/32 pi^2) Int s^2 / (c1+)^2, always >= 1 under a nonzero
// Seiberg-Witten invariant.
inline void require_beta(const Rational& beta) {
    if (beta < 1) throw std::domain_error("beta must be >= 1");
}

// Excess parameter (3/2)(beta - 1) used in the sharp-bound derivation.
inline Rational beta_excess(const Rational& beta) {
    require_beta(beta);
    return Rational(3 * (beta - 1) / 2);
}

// Coefficient 4 - 3*sqrt(beta) of (2 pi / sqrt(3)) |c1+| in the L2 bound on
// |W+|. Point interval exactly when beta is a square of a rational.
inline RationalInterval weyl_coefficient(const Rational& beta,
                                         unsigned long digits = 16) {
    require_beta(beta);
    return Rational(4) - sqrt_enclosure(beta, digits).scaled(3);
}

// Same bound squared, as the coefficient of pi^2 (c1+)^2 in Int |W+|^2:
// (4/3) * max(0, 4 - 3*sqrt(beta))^2. Clamped because the linear bound
// carries no information once 4 - 3*sqrt(beta) < 0.
inline RationalInterval weyl_sq_coefficient(const Rational& beta,
                                            unsigned long digits = 16) {
    RationalInterval w = weyl_coefficient(beta, digits);
    Rational lo = sgn(w.lo) > 0 ? w.lo : Rational(0);
    Rational hi = sgn(w.hi) > 0 ? w.hi : Rational(0);
    return RationalInterval(lo, hi).squared().scaled(rat(4, 3));
}

// f_eps(beta) = [beta + eps (4 - 3 sqrt(beta))^2] / 3: the coefficient of
// (c1+)^2 in the lower bound for (1/4 pi^2) Int (s^2/24 + eps |W+|^2).
// Defined on beta in [1, 16/9]; beyond 16/9 the Weyl term is dropped and the
// trivial branch beta/3 > 16/27 applies instead.
inline RationalInterval energy_coefficient(const Rational& eps,
                                           const Rational& beta,
                                           unsigned long digits = 16) {
    if (sgn(eps) < 0) throw std::domain_error("energy_coefficient: eps < 0");
    require_beta(beta);
    if (beta > rat(16, 9))
        throw std::domain_error("energy_coefficient: beta > 16/9 (trivial branch)");
    RationalInterval sq = weyl_coefficient(beta, digits).squared();
    return (beta + sq.scaled(eps)).scaled(rat(1, 3));
}

struct TwoRoutes {
    Rational expansion;        // 19 x^2 - 48 x + 32
    Rational completed_square; // 19 (x - 24/19)^2 + 32/19
};

// Two exact routes to beta + 2 (4 - 3 sqrt(beta))^2 evaluated at a rational
// x = sqrt(beta); they agree identically.
inline TwoRoutes combined_energy_two_routes(const Rational& sqrt_beta) {
    const Rational& x = sqrt_beta;
    Rational expansion(19 * x * x - 48 * x + 32);
    Rational shift(x - rat(24, 19));
    Rational completed(19 * shift * shift + rat(32, 19));
    return {expansion, completed};
}

// Infimum of f_eps over beta in [1, 16/9]: the quadratic in x = sqrt(beta)
// has vertex x* = 12 eps / (1 + 9 eps), inside the interval iff eps >= 1/3.
inline Rational energy_infimum(const Rational& eps) {
    if (sgn(eps) < 0) throw std::domain_error("energy_infimum: eps < 0");
    if (eps <= rat(1, 3)) return Rational((1 + eps) / 3);
    return Rational(16 * eps / (3 * (1 + 9 * eps)));
}

inline Rational energy_argmin_beta(const Rational& eps) {
    if (sgn(eps) < 0) throw std::domain_error("energy_argmin_beta: eps < 0");
    if (eps <= rat(1, 3)) return Rational(1);
    Rational x(12 * eps / (1 + 9 * eps));
    return Rational(x * x);
}

// Floor of the beta > 16/9 branch: the bound degenerates to beta/3 > 16/27.
inline Rational trivial_branch_floor() { return rat(16, 27); }

namespace detail {

struct EnergyScan {
    std::size_t best_index = 0;  // point with the smallest upper bound
    Int best_hi;                 // its numerator
    Int cell_lo_min;             // min over grid cells of the lower-bound numerator
};

// Scans f_eps at `count` points with beta-numerators p_start + i*p_step over
// the fixed denominator denom_d. Every bound is returned as a numerator over
// the common denominator qe * denom_d^2 * scale_t^2 (for g = 3*f; the caller
// divides by 3). Integer pipeline: with s = floor(sqrt(P*D*T^2)) the exact
// quantity (4 - 3 sqrt(P/D)) * D*T lies in [4DT - 3s - 3, 4DT - 3s], so
//   g(P/D) * qe * D^2 T^2  in  [qe P D T^2 + pe u_lo^2, qe P D T^2 + pe u_hi^2].
// Cell lower bounds pair the left endpoint's beta with the right endpoint's
// Weyl term (both monotone against each other), giving a valid lower bound
// for the continuum infimum, not just for the sampled points.
inline EnergyScan scan_energy_grid(const Int& pe, const Int& qe,
                                   const Int& p_start, long p_step,
                                   std::size_t count, const Int& denom_d,
                                   const Int& scale_t) {
    if (count == 0) throw std::invalid_argument("scan_energy_grid: empty scan");
    const Int k_dt2 = denom_d * scale_t * scale_t;
    const Int four_dt = 4 * denom_d * scale_t;
    Int rad = p_start * k_dt2;        // radicand P * D * T^2
    const Int rad_step = p_step * k_dt2;
    Int base = qe * rad;              // qe * P * D * T^2
    const Int base_step = qe * rad_step;
    EnergyScan out;
    Int s, u, n_hi, cell, prev_base;
    bool have_cell = false;
    for (std::size_t i = 0; i < count; ++i) {
        s = isqrt_floor(rad);
        u = four_dt - 3 * s;  // upper endpoint of the Weyl-term enclosure
        n_hi = base + pe * u * u;
        if (i == 0 || n_hi < out.best_hi) {
            out.best_hi = n_hi;
            out.best_index = i;
        }
        if (i > 0) {
            u -= 3;
            if (sgn(u) < 0) u = 0;
            cell = prev_base + pe * u * u;
            if (!have_cell || cell < out.cell_lo_min) {
                out.cell_lo_min = cell;
                have_cell = true;
            }
        }
        prev_base = base;
        base += base_step;
        rad += rad_step;
    }
    if (!have_cell) out.cell_lo_min = out.best_hi;  // single-point scan
    return out;
}

}  // namespace detail

struct MinimumCertificate {
    Rational eps;
    std::size_t grid_size = 0;
    std::size_t refine_size = 0;
    Rational argmin;           // refined grid argument of the best value
    Rational min_lower;        // certified lower bound for the infimum over [1, 16/9]
    Rational min_upper;        // certified upper bound (best sampled value)
    Rational claimed_infimum;  // closed form, for comparison
    Rational claimed_argmin;

    bool brackets_claim() const {
        return min_lower <= claimed_infimum && claimed_infimum <= min_upper;
    }
};

// Brute-force minimization of f_eps over [1, 16/9]: a coarse scan of
// grid_size cells establishes a global lower bound and locates the best
// point; a refinement pass of refine_size points over a window of four
// coarse cells around it sharpens the argmin and the upper bound.
// Coarse grid: beta_i = (9G + 7i)/(9G), i = 0..G. Refinement: numerators
// R*(P_b - 14) + 28j over 9*G*R, clamped to [1, 16/9].
inline MinimumCertificate minimize_energy(const Rational& eps,
                                          std::size_t grid_size = 1000000,
                                          std::size_t refine_size = 10000) {
    if (sgn(eps) < 0) throw std::domain_error("minimize_energy: eps < 0");
    if (grid_size < 1000) throw std::invalid_argument("minimize_energy: grid_size < 1000");
    if (refine_size < 1000)
        throw std::invalid_argument("minimize_energy: refine_size < 1000");
    const Int pe(eps.get_num()), qe(eps.get_den());
    const Int g(static_cast<unsigned long>(grid_size));
    const Int d = 9 * g;
    const Int t_coarse = pow10(10);
    auto coarse = detail::scan_energy_grid(pe, qe, d, 7, grid_size + 1, d, t_coarse);

    const Int r(static_cast<unsigned long>(refine_size));
    const Int p_best = d + 7 * Int(static_cast<unsigned long>(coarse.best_index));
    const Int d_fine = d * r;
    const Int t_fine = pow10(14);
    // window [p_best - 14, p_best + 14]/d, clamped to [d, 16d/9] = [9g, 16g]
    Int window_start = r * (p_best - 14);
    Int lo_num = d_fine;               // beta = 1
    Int hi_num = 16 * g * r;           // beta = 16/9
    Int j_lo = 0;
    if (window_start < lo_num) j_lo = ceil_rational(rat(Int(lo_num - window_start), Int(28)));
    Int j_hi((2 * 14 * r) / 28);       // = r
    Int overshoot = window_start + 28 * j_hi - hi_num;
    if (sgn(overshoot) > 0) j_hi -= ceil_rational(rat(overshoot, Int(28)));
    if (j_hi < j_lo) j_hi = j_lo;
    Int p_start_fine = window_start + 28 * j_lo;
    std::size_t fine_count = mpz_get_ui(Int(j_hi - j_lo + 1).get_mpz_t());
    auto fine = detail::scan_energy_grid(pe, qe, p_start_fine, 28, fine_count, d_fine, t_fine);

    MinimumCertificate cert;
    cert.eps = eps;
    cert.grid_size = grid_size;
    cert.refine_size = refine_size;
    cert.argmin = rat(Int(p_start_fine + 28 * Int(static_cast<unsigned long>(fine.best_index))),
                      d_fine);
    cert.min_lower = rat(coarse.cell_lo_min, Int(3 * qe * d * d * t_coarse * t_coarse));
    cert.min_upper = rat(fine.best_hi, Int(3 * qe * d_fine * d_fine * t_fine * t_fine));
    cert.claimed_infimum = energy_infimum(eps);
    cert.claimed_argmin = energy_argmin_beta(eps);
    return cert;
}

struct EnergySample {
    Rational beta;
    RationalInterval value;
};

// Evenly spaced enclosures of f_eps over [1, 16/9] for external plotting.
inline std::vector<EnergySample> sample_energy(const Rational& eps,
                                               std::size_t count = 200) {
    if (count == 0 || count > 100000)
        throw std::invalid_argument("sample_energy: count out of range");
    std::vector<EnergySample> out;
    out.reserve(count + 1);
    Int d = 9 * Int(static_cast<unsigned long>(count));
    for (std::size_t i = 0; i <= count; ++i) {
        Rational beta = rat(Int(d + 7 * Int(static_cast<unsigned long>(i))), d);
        out.push_back({beta, energy_coefficient(eps, beta)});
    }
    return out;
}

// Sharp lower bound (1/4 pi^2) Int (|W+|^2/3 + s^2/24) >= (4/9)(c1+)^2,
// saturated by Kahler-Einstein metrics.
inline Rational sharp_lower_bound(const Rational& c1p_sq) {
    if (sgn(c1p_sq) <= 0)
        throw std::domain_error("sharp_lower_bound: needs (c1+)^2 > 0");
    return Rational(rat(4, 9) * c1p_sq);
}

struct SaturationPair {
    Rational lhs;
    Rational rhs;
};

// Constant-scalar Kahler model saturating the sharp bound: from
// Int s dmu = 4 pi c1.[omega], Int dmu = [omega]^2 / 2 and |W+|^2 = s^2/24,
// both sides reduce to (4/9)(c1.omega)^2/omega^2 with every pi^2 cancelling.
inline SaturationPair kahler_saturation(const Rational& c1_dot_omega,
                                        const Rational& omega_sq) {
    if (sgn(c1_dot_omega) >= 0)
        throw std::domain_error("kahler_saturation: c1.omega must be negative");
    if (sgn(omega_sq) <= 0)
        throw std::domain_error("kahler_saturation: omega^2 must be positive");
    Rational s_pi(8 * c1_dot_omega / omega_sq);  // s / pi, constant
    Rational vol(omega_sq / 2);
    Rational s_sq_int(s_pi * s_pi * vol);        // (1/pi^2) Int s^2
    Rational w_sq_int(s_sq_int / 24);            // (1/pi^2) Int |W+|^2
    Rational lhs((w_sq_int / 3 + s_sq_int / 24) / 4);
    Rational rhs(rat(4, 9) * c1_dot_omega * c1_dot_omega / omega_sq);
    return {lhs, rhs};
}

// (1/8 pi^2) Int |ric|^2 >= (8/5)(c1+)^2 - (3/5)(2chi+3tau)(M); hypotheses
// require c1+ != 0.
inline Rational ricci_l2_lower(const Rational& c1p_sq, const Rational& gb_m) {
    if (sgn(c1p_sq) <= 0)
        throw std::domain_error("ricci_l2_lower: needs (c1+)^2 > 0");
    return Rational(rat(8, 5) * c1p_sq - rat(3, 5) * gb_m);
}

struct ConvexRoutes {
    Rational convex;
    Rational direct;
};

// The Ricci bound arises as 4*[(9/10)(4/9)x + (1/10)y] - y; identical to
// (8/5)x - (3/5)y for all x, y.
inline ConvexRoutes ricci_convex_routes(const Rational& x, const Rational& y) {
    Rational convex(4 * (rat(9, 10) * rat(4, 9) * x + rat(1, 10) * y) - y);
    Rational direct(rat(8, 5) * x - rat(3, 5) * y);
    return {convex, direct};
}

// Anti-self-dual regime: W+ = 0 forces the Weyl coefficient through zero, so
// beta > 16/9 strictly (equality in the L2 Weyl bound needs beta = 1), hence
// (1/32 pi^2) Int s^2 > (16/9)(c1+)^2.
inline Rational asd_beta_floor() { return rat(16, 9); }

inline Rational asd_scalar_lower(const Rational& c1p_sq) {
    if (sgn(c1p_sq) <= 0)
        throw std::domain_error("asd_scalar_lower: needs (c1+)^2 > 0");
    return Rational(rat(16, 9) * c1p_sq);
}

// pi^2-stripped curvature integrals of a synthetic metric.
struct CurvatureIntegrals {
    Rational w_plus_sq;
    Rational w_minus_sq;
    Rational s_sq;
    Rational ric0_sq;  // traceless Ricci
};

struct GaussBonnetPair {
    Rational plus_side;   // (1/4 pi^2) Int (2|W+|^2 + s^2/24 - |r0|^2/2)
    Rational minus_side;
    bool plus_matches;    // == 2 chi + 3 tau
    bool minus_matches;   // == 2 chi - 3 tau
};

inline GaussBonnetPair gauss_bonnet_check(const CurvatureIntegrals& t,
                                          const Int& chi, const Int& tau) {
    if (sgn(t.w_plus_sq) < 0 || sgn(t.w_minus_sq) < 0 || sgn(t.s_sq) < 0 ||
        sgn(t.ric0_sq) < 0)
        throw std::domain_error("gauss_bonnet_check: negative curvature integral");
    Rational plus((2 * t.w_plus_sq + t.s_sq / 24 - t.ric0_sq / 2) / 4);
    Rational minus((2 * t.w_minus_sq + t.s_sq / 24 - t.ric0_sq / 2) / 4);
    GaussBonnetPair out{plus, minus, false, false};
    out.plus_matches = (plus == 2 * chi + 3 * tau);
    out.minus_matches = (minus == 2 * chi - 3 * tau);
    return out;
}

}  // namespace fourfold
