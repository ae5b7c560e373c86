#pragma once

// Freedman-type homeomorphism classification for simply connected non-spin
// members of the catalogue, Noether-line partner construction, and the
// search for obstructed manifolds homeomorphic to Kahler-Einstein surfaces.

#include <optional>
#include <string>
#include <vector>

#include "fourfold/obstructions.hpp"
#include "fourfold/surface_spec.hpp"

namespace fourfold {

enum class FormParity { Odd, Even };

// a CP2 # b reversed CP2; for odd forms a = b_plus, b = b_minus.
struct HomeoType {
    Int cp2 = 0;
    Int cp2_bar = 0;
    FormParity parity = FormParity::Odd;

    bool operator==(const HomeoType&) const = default;
};

enum class HomeoStatus { Classified, Unsupported, Inapplicable };

struct HomeoClass {
    HomeoStatus status = HomeoStatus::Inapplicable;
    std::optional<HomeoType> type;
    std::string reason;  // set when not Classified
};

// Classifies the homeomorphism type of a simply connected manifold with odd
// (non-spin) intersection form. Non-spin is certified either by declared
// family parity or by Rokhlin's theorem (tau != 0 mod 16); even or
// unresolved parity is Unsupported rather than guessed.
inline HomeoClass freedman_type(const CharNumbers& m) {
    HomeoClass out;
    if (!m.simply_connected) {
        out.reason = "not simply connected";
        return out;
    }
    SpinStatus parity = m.spin;
    if (parity != SpinStatus::NonSpin && m.tau % 16 != 0) parity = SpinStatus::NonSpin;
    if (parity == SpinStatus::Spin) {
        out.status = HomeoStatus::Unsupported;
        out.reason = "even intersection form";
        return out;
    }
    if (parity == SpinStatus::Unknown) {
        out.status = HomeoStatus::Unsupported;
        out.reason = "intersection-form parity unresolved";
        return out;
    }
    out.status = HomeoStatus::Classified;
    out.type = HomeoType{m.b_plus, m.b_minus, FormParity::Odd};
    return out;
}

struct HomeoVerdict {
    bool homeomorphic = false;
    HomeoClass left;
    HomeoClass right;

    bool decided() const {
        return left.status == HomeoStatus::Classified &&
               right.status == HomeoStatus::Classified;
    }
};

// True iff both classify and the types agree; undecidable inputs are
// reported through the member classes, never as a negative verdict.
inline HomeoVerdict homeomorphic(const CharNumbers& a, const CharNumbers& b) {
    HomeoVerdict out;
    out.left = freedman_type(a);
    out.right = freedman_type(b);
    if (out.decided()) out.homeomorphic = (*out.left.type == *out.right.type);
    return out;
}

// Minimal general-type surface on the Noether line c1^2 = 2 p_g - 4 with the
// given invariants: the double cover of the quadric branched in bidegree
// (6, 2b) when c1^2 = 4(b-2) for an integer b >= 3, otherwise the abstract
// Noether-line model (a double cover of the one-point blow-up of the plane).
// Either way the canonical bundle is ample, so the result is a
// Kahler-Einstein surface by Aubin/Yau. Off-line input returns nothing.
inline std::optional<SurfaceSpec> noether_partner(const Int& c1sq, const Int& p_g) {
    if (p_g < 3 || c1sq != 2 * p_g - 4) return std::nullopt;
    SurfaceSpec partner;
    partner.blowups = 0;
    if (c1sq % 4 == 0 && c1sq / 4 + 2 >= 3)
        partner.root = QuadricBicover{Int(3), Int(c1sq / 4 + 2)};
    else
        partner.root = NoetherLine{c1sq, p_g};
    return partner;
}

inline const char* ke_witness_provenance() { return "Aubin/Yau: canonical ample"; }

enum class PairStrategy { MinThreshold, NoetherMatch };

struct HomeoCertificate {
    HomeoClass obstructed;
    HomeoClass witness;
    Int tau_mod_16 = 0;  // Rokhlin witness: nonzero certifies non-spin
};

struct ExoticPair {
    SurfaceSpec obstructed;
    SurfaceSpec einstein_witness;
    HomeoType shared_type;
    Int k = 0;
    ObstructionReport obstruction_certificate;
    HomeoCertificate homeo_certificate;
    std::string ke_existence;  // provenance of the witness's Einstein metric
    std::string k_choice;      // how k was selected
};

struct SearchRanges {
    Int hypersurface_lo = 0;
    Int hypersurface_hi = -1;  // empty range
    Int double_plane_lo = 0;
    Int double_plane_hi = -1;
};

namespace detail {

inline void try_exotic_root(const FamilyConstructor& fam, PairStrategy strategy,
                            std::vector<ExoticPair>& out) {
    CharNumbers x = evaluate_family(fam);
    Int gb = x.c1sq();
    Int k_min = ceil_rational(Rational(einstein_coefficient() * gb));
    Int k;
    if (strategy == PairStrategy::NoetherMatch) {
        // blow down to the Noether line: c1^2(M) = 2 p_g - 4
        k = gb - (2 * *x.p_g - 4);
        if (sgn(k) < 0 || k < k_min) return;
    } else {
        k = k_min;
    }
    SurfaceSpec mspec;
    mspec.root = fam;
    mspec.blowups = k;
    CharNumbers m = mspec.evaluate();
    auto partner = noether_partner(m.c1sq(), *m.p_g);
    if (!partner) return;
    CharNumbers w = partner->evaluate();
    HomeoVerdict verdict = homeomorphic(m, w);
    if (!verdict.decided() || !verdict.homeomorphic) return;
    ObstructionReport cert = evaluate_obstructions(mspec);
    if (cert.einstein_25_57.verdict != Verdict::Obstructed) return;
    ExoticPair pair;
    pair.obstructed = mspec;
    pair.einstein_witness = *partner;
    pair.shared_type = *verdict.left.type;
    pair.k = k;
    pair.obstruction_certificate = cert;
    pair.homeo_certificate = {verdict.left, verdict.right, Int(m.tau % 16)};
    pair.ke_existence = ke_witness_provenance();
    pair.k_choice = strategy == PairStrategy::NoetherMatch
                        ? "noether-match (reconstruction)"
                        : "min-threshold";
    out.push_back(std::move(pair));
}

}  // namespace detail

// Sweeps hypersurfaces then double planes in parameter order; for each root,
// the blow-up count is either the smallest obstructed k or the one landing
// on the Noether line (accepted only when itself obstructed). A pair is
// emitted when the Noether partner exists and the Freedman types agree;
// every pair carries full certificates. Empty results are valid.
inline std::vector<ExoticPair> exotic_pair_search(const SearchRanges& ranges,
                                                  PairStrategy strategy) {
    std::vector<ExoticPair> out;
    for (Int l = ranges.hypersurface_lo; l <= ranges.hypersurface_hi; ++l) {
        if (l < 5) continue;
        detail::try_exotic_root(Hypersurface{l}, strategy, out);
    }
    for (Int m = ranges.double_plane_lo; m <= ranges.double_plane_hi; ++m) {
        if (m < 5) continue;
        detail::try_exotic_root(DoublePlane{m}, strategy, out);
    }
    return out;
}

}  // namespace fourfold
