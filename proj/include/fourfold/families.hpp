#pragma once

// Closed-form characteristic numbers for the complex-surface families the
// engine knows how to build: hypersurfaces in CP^3, double planes, bicovers
// of the quadric, abstract Noether-line surfaces, the rational elliptic
// surface, ruled surfaces, and the projective planes.

#include <stdexcept>

#include "fourfold/char_numbers.hpp"

namespace fourfold {

// Rokhlin fallback for families without a declared parity: a simply connected
// surface with tau not divisible by 16 cannot be spin.
inline SpinStatus rokhlin_or(const Int& tau, SpinStatus fallback) {
    if (tau % 16 != 0) return SpinStatus::NonSpin;
    return fallback;
}

// Builds a simply connected complex surface with q = 0 from (c1^2, p_g):
// tau = c1^2 - 8(1+p_g), chi = 12(1+p_g) - c1^2, b+ = 2p_g + 1.
inline CharNumbers simply_connected_surface(const Int& c1sq, const Int& p_g,
                                            std::optional<ComplexTag> tag,
                                            SpinStatus spin) {
    CharNumbers m;
    m.chi = 12 * (1 + p_g) - c1sq;
    m.tau = c1sq - 8 * (1 + p_g);
    m.b_plus = 2 * p_g + 1;
    m.b_minus = m.chi - 2 - m.b_plus;
    m.p_g = p_g;
    m.simply_connected = true;
    m.complex_structure = tag;
    m.spin = spin;
    m.validate();
    return m;
}

// Smooth degree-l hypersurface in CP^3, l >= 5: c1^2 = l(l-4)^2,
// p_g = binomial(l-1, 3); spin exactly when l is even.
inline CharNumbers hypersurface_invariants(const Int& degree) {
    if (degree < 5)
        throw std::domain_error("hypersurface_invariants: degree < 5");
    Int c1sq = degree * (degree - 4) * (degree - 4);
    Int p_g = (degree - 1) * (degree - 2) * (degree - 3) / 6;
    SpinStatus spin =
        (degree % 2 == 0) ? SpinStatus::Spin : SpinStatus::NonSpin;
    return simply_connected_surface(c1sq, p_g, minimal_general_type_tag(), spin);
}

// Double cover of CP^2 branched over a smooth curve of degree 2m, m >= 5:
// c1^2 = 2(m-3)^2, p_g = (m-1)(m-2)/2; spin exactly when m is odd.
inline CharNumbers double_plane_invariants(const Int& m) {
    if (m < 5) throw std::domain_error("double_plane_invariants: m < 5");
    Int c1sq = 2 * (m - 3) * (m - 3);
    Int p_g = (m - 1) * (m - 2) / 2;
    SpinStatus spin = (m % 2 != 0) ? SpinStatus::Spin : SpinStatus::NonSpin;
    return simply_connected_surface(c1sq, p_g, minimal_general_type_tag(), spin);
}

// Double cover of CP^1 x CP^1 branched over a smooth curve of bidegree
// (2a, 2b), a,b >= 3: c1^2 = 4(a-2)(b-2), p_g = (a-1)(b-1); spin when both
// degrees are even, otherwise non-spin whenever Rokhlin certifies it.
inline CharNumbers quadric_bicover_invariants(const Int& a, const Int& b) {
    if (a < 3 || b < 3)
        throw std::domain_error("quadric_bicover_invariants: degree < 3");
    Int c1sq = 4 * (a - 2) * (b - 2);
    Int p_g = (a - 1) * (b - 1);
    Int tau = c1sq - 8 * (1 + p_g);
    SpinStatus spin;
    if (a % 2 == 0 && b % 2 == 0)
        spin = SpinStatus::Spin;
    else
        spin = rokhlin_or(tau, SpinStatus::Unknown);
    return simply_connected_surface(c1sq, p_g, minimal_general_type_tag(), spin);
}

// Abstract minimal general-type surface on the Noether line c1^2 = 2p_g - 4
// (a Horikawa surface), used only through its numbers; no projective model
// is constructed. Parity is settled by Rokhlin alone.
inline CharNumbers noether_line_invariants(const Int& c1sq, const Int& p_g) {
    if (p_g < 3) throw std::domain_error("noether_line_invariants: p_g < 3");
    if (c1sq != 2 * p_g - 4)
        throw std::domain_error(
            "noether_line_invariants: c1sq != 2*p_g - 4 (off the Noether line)");
    Int tau = c1sq - 8 * (1 + p_g);
    SpinStatus spin = rokhlin_or(tau, SpinStatus::Unknown);
    return simply_connected_surface(c1sq, p_g, minimal_general_type_tag(), spin);
}

// Rational elliptic surface (CP^2 blown up in the nine base points of a
// cubic pencil): chi = 12, tau = -8.
inline CharNumbers rational_elliptic_invariants() {
    return simply_connected_surface(
        Int(0), Int(0), ComplexTag{Kodaira::MinusInf, false, false},
        SpinStatus::NonSpin);
}

// Product ruled surface S^2 x Sigma_g: chi = 4(1-g), tau = 0, hyperbolic
// intersection form; simply connected only for g = 0. Products of orientable
// surfaces are spin.
inline CharNumbers ruled_surface_invariants(const Int& genus) {
    if (sgn(genus) < 0)
        throw std::domain_error("ruled_surface_invariants: negative genus");
    CharNumbers m;
    m.chi = 4 * (1 - genus);
    m.tau = 0;
    m.b_plus = 1;
    m.b_minus = 1;
    m.p_g = 0;
    m.simply_connected = (genus == 0);
    m.complex_structure = ComplexTag{Kodaira::MinusInf, true, false};
    m.spin = SpinStatus::Spin;
    m.validate();
    return m;
}

}  // namespace fourfold
