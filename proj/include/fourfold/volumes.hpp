#pragma once

// Lower bounds for normalized total volumes of unit-scalar and unit-Ricci
// metrics on blow-ups of minimal general-type surfaces, and the infimum of
// the weighted curvature energy classified by Kodaira dimension. Volumes are
// reported in pi^2 units.

#include <optional>
#include <stdexcept>

#include "fourfold/curvature.hpp"
#include "fourfold/surface_spec.hpp"

namespace fourfold {

enum class VolumeDominance { A, B, Equal };

struct MinimalVolumes {
    Rational vol_s;          // inf Vol of |s| = 12 metrics: (2/9) c1^2(X)
    Rational ricci_lower_a;  // vol_s + (2/15) k
    Rational ricci_lower_b;  // (31/33) vol_s + (2/9) k
    VolumeDominance dominant = VolumeDominance::Equal;
};

// X must be a minimal general-type model; k counts blow-ups.
inline MinimalVolumes minimal_volumes(const CharNumbers& x, const Int& k) {
    if (!x.minimal_general_type())
        throw std::domain_error("minimal_volumes: X must be minimal general type");
    if (sgn(k) < 0) throw std::domain_error("minimal_volumes: k < 0");
    MinimalVolumes out;
    out.vol_s = rat(Int(2 * x.c1sq()), Int(9));
    out.ricci_lower_a = Rational(out.vol_s + rat(2, 15) * k);
    out.ricci_lower_b = Rational(rat(31, 33) * out.vol_s + rat(2, 9) * k);
    if (out.ricci_lower_a > out.ricci_lower_b)
        out.dominant = VolumeDominance::A;
    else if (out.ricci_lower_b > out.ricci_lower_a)
        out.dominant = VolumeDominance::B;
    return out;
}

// Blow-up count at which the two Ricci-volume bounds cross: (5/33) c1^2(X).
inline Rational ricci_volume_crossover(const Int& c1sq_x) {
    return rat(Int(5 * c1sq_x), Int(33));
}

struct UnclassifiedError : std::domain_error {
    using std::domain_error::domain_error;
};

enum class EnergyStatus { Zero, Exact, Bracketed, LowerBoundOnly };

struct WeightedEnergyResult {
    EnergyStatus status = EnergyStatus::Zero;
    std::optional<Rational> value;  // Zero, Exact
    std::optional<Rational> lower;  // Bracketed, LowerBoundOnly
    std::optional<Rational> upper;  // Bracketed
    bool positive = false;          // LowerBoundOnly: infimum known > 0
};

// Infimum of (1/4 pi^2) Int (s^2/24 + eps |W+|^2) over metrics on the
// manifold described by spec, classified by the Kodaira dimension of the
// minimal model:
//   kod 0 or 1            -> 0 (collapsing sequences);
//   kod 2, eps <= 1/3     -> exactly (1+eps)/3 * c1^2(X);
//   kod 2, eps > 1/3      -> bracketed in [(4/9) c1^2(X), (1+eps)/3 * c1^2(X)];
//   kod -inf, 2chi+3tau>0 -> at least min(1, eps/2) * (2chi+3tau)(M),
//                            positive for eps > 0;
//   kod -inf otherwise    -> 0.
// Connected sums and roots without a complex structure are not classified.
inline WeightedEnergyResult weighted_energy_infimum(const SurfaceSpec& spec,
                                                    const Rational& eps) {
    if (sgn(eps) < 0) throw std::domain_error("weighted_energy_infimum: eps < 0");
    auto model = spec.blowup_model();
    if (!model)
        throw UnclassifiedError(
            "weighted_energy_infimum: connected sums carry no Kodaira classification");
    CharNumbers x = evaluate_family(model->minimal_model);
    if (!x.complex_structure)
        throw UnclassifiedError("weighted_energy_infimum: root has no complex structure");
    WeightedEnergyResult out;
    switch (x.complex_structure->kodaira_dim) {
        case Kodaira::Zero:
        case Kodaira::One:
            out.status = EnergyStatus::Zero;
            out.value = Rational(0);
            return out;
        case Kodaira::Two: {
            Int c1x = x.c1sq();
            Rational top(Rational(Rational(1 + eps) / 3) * c1x);
            if (eps <= rat(1, 3)) {
                out.status = EnergyStatus::Exact;
                out.value = top;
            } else {
                out.status = EnergyStatus::Bracketed;
                out.lower = Rational(rat(4, 9) * c1x);
                out.upper = top;
            }
            return out;
        }
        case Kodaira::MinusInf: {
            Int gb_m = spec.evaluate().c1sq();
            if (sgn(gb_m) > 0) {
                Rational weight = eps < 2 ? Rational(eps / 2) : Rational(1);
                out.status = EnergyStatus::LowerBoundOnly;
                out.lower = Rational(weight * gb_m);
                out.positive = sgn(eps) > 0;
            } else {
                out.status = EnergyStatus::Zero;
                out.value = Rational(0);
            }
            return out;
        }
    }
    throw std::logic_error("weighted_energy_infimum: unreachable");
}

}  // namespace fourfold
