#pragma once

// Einstein-metric obstructions for blow-ups M = X # k reversed planes of a
// minimal general-type surface: the Hitchin-Thorpe inequality and three
// threshold criteria of the form k >= coeff * (2chi+3tau)(X), with the
// coefficient depending on how much curvature information the hypothesis
// retains (scalar only, scalar plus Weyl, anti-self-dual Weyl).

#include <optional>
#include <stdexcept>

#include "fourfold/surface_spec.hpp"

namespace fourfold {

enum class Verdict { Obstructed, NotObstructed, Inapplicable };

enum class SwHypothesis { NonzeroAssumed, NotAssumed };

struct HitchinThorpeResult {
    Verdict verdict = Verdict::Inapplicable;
    bool borderline = false;  // equality 2chi = 3|tau|
    Int euler_side = 0;       // 2chi
    Int signature_side = 0;   // 3|tau|
};

// Obstructed iff 2chi < 3|tau| (strict); equality is flagged, not obstructed.
inline HitchinThorpeResult hitchin_thorpe(const CharNumbers& m) {
    HitchinThorpeResult out;
    out.euler_side = 2 * m.chi;
    out.signature_side = 3 * abs(m.tau);
    out.verdict = out.euler_side < out.signature_side ? Verdict::Obstructed
                                                      : Verdict::NotObstructed;
    out.borderline = (out.euler_side == out.signature_side);
    return out;
}

struct ThresholdResult {
    Verdict verdict = Verdict::Inapplicable;
    Rational coefficient;
    Rational threshold;        // coefficient * (2chi+3tau)(X)
    std::optional<Int> k_min;  // smallest obstructed k, when applicable
};

// Generic threshold criterion: under a nonzero Seiberg-Witten invariant on X
// with (2chi+3tau)(X) > 0, the blow-up M = X # k reversed planes admits no
// Einstein metric once k >= coeff * (2chi+3tau)(X). The threshold is
// inclusive, so k_min = ceil(threshold). Without the hypothesis, or with
// (2chi+3tau)(X) <= 0, the criterion is inapplicable.
inline ThresholdResult coefficient_obstruction(const CharNumbers& x, const Int& k,
                                               const Rational& coeff,
                                               SwHypothesis sw) {
    if (sgn(k) < 0) throw std::domain_error("coefficient_obstruction: k < 0");
    ThresholdResult out;
    out.coefficient = coeff;
    Int gb = x.c1sq();
    out.threshold = Rational(coeff * gb);
    if (sw != SwHypothesis::NonzeroAssumed || sgn(gb) <= 0) return out;
    out.k_min = ceil_rational(out.threshold);
    out.verdict = k >= *out.k_min ? Verdict::Obstructed : Verdict::NotObstructed;
    return out;
}

// Scalar-curvature estimate alone.
inline Rational scalar_coefficient() { return rat(2, 3); }

// Combined scalar/Weyl estimate; strictly sharper than 2/3.
inline Rational einstein_coefficient() { return rat(25, 57); }

// Anti-self-dual Einstein metrics; sharper still.
inline Rational asd_coefficient() { return rat(11, 27); }

inline ThresholdResult scalar_obstruction(const CharNumbers& x, const Int& k,
                                          SwHypothesis sw) {
    return coefficient_obstruction(x, k, scalar_coefficient(), sw);
}

inline ThresholdResult einstein_obstruction(const CharNumbers& x, const Int& k,
                                            SwHypothesis sw) {
    return coefficient_obstruction(x, k, einstein_coefficient(), sw);
}

inline ThresholdResult asd_einstein_obstruction(const CharNumbers& x, const Int& k,
                                                SwHypothesis sw) {
    return coefficient_obstruction(x, k, asd_coefficient(), sw);
}

// For a minimal general-type X the canonical spin^c structure has nonzero
// invariant and c1^2(X) = 2chi+3tau > 0, so the hypothesis holds outright.
inline ThresholdResult minimal_surface_obstruction(const CharNumbers& x,
                                                   const Int& k) {
    if (!x.minimal_general_type())
        throw std::domain_error(
            "minimal_surface_obstruction: X must be minimal general type");
    return einstein_obstruction(x, k, SwHypothesis::NonzeroAssumed);
}

// Hyperbolic vanishing criterion: on a compact hyperbolic 4-manifold the
// invariant vanishes for every spin^c structure with (c1+)^2 >= (32/3) chi.
inline bool sw_vanishing_criterion(const Rational& c1p_sq, const Int& chi) {
    return c1p_sq >= Rational(rat(32, 3) * chi);
}

struct ObstructionReport {
    SurfaceSpec manifold;
    CharNumbers numbers;                          // of M
    std::optional<BlowupModel> minimal_model;     // root family + blow-up count
    std::optional<CharNumbers> model_numbers;     // of X
    Int k = 0;
    SwHypothesis sw = SwHypothesis::NotAssumed;
    HitchinThorpeResult ht;
    ThresholdResult scalar_2_3;
    ThresholdResult einstein_25_57;
    ThresholdResult asd_11_27;

    bool any_applicable() const {
        return scalar_2_3.verdict != Verdict::Inapplicable ||
               einstein_25_57.verdict != Verdict::Inapplicable ||
               asd_11_27.verdict != Verdict::Inapplicable;
    }
};

// Evaluates every criterion on the manifold described by spec. The nonzero
// Seiberg-Witten hypothesis is granted automatically when the minimal model
// is of general type (canonical class argument); assume_sw grants it for any
// blow-up model, for inputs whose invariant is known from elsewhere.
inline ObstructionReport evaluate_obstructions(const SurfaceSpec& spec,
                                               bool assume_sw = false) {
    ObstructionReport rep;
    rep.manifold = spec.normalized();
    rep.numbers = spec.evaluate();
    rep.ht = hitchin_thorpe(rep.numbers);
    rep.minimal_model = spec.blowup_model();
    SwHypothesis sw = assume_sw ? SwHypothesis::NonzeroAssumed : SwHypothesis::NotAssumed;
    rep.scalar_2_3.coefficient = scalar_coefficient();
    rep.einstein_25_57.coefficient = einstein_coefficient();
    rep.asd_11_27.coefficient = asd_coefficient();
    if (rep.minimal_model) {
        CharNumbers x = evaluate_family(rep.minimal_model->minimal_model);
        rep.model_numbers = x;
        rep.k = rep.minimal_model->blowups;
        if (x.minimal_general_type()) sw = SwHypothesis::NonzeroAssumed;
        rep.sw = sw;
        rep.scalar_2_3 = scalar_obstruction(x, rep.k, sw);
        rep.einstein_25_57 = einstein_obstruction(x, rep.k, sw);
        rep.asd_11_27 = asd_einstein_obstruction(x, rep.k, sw);
    } else {
        rep.sw = sw;  // no blow-up model: thresholds stay inapplicable
    }
    return rep;
}

}  // namespace fourfold
