#pragma once

// Characteristic numbers of closed oriented 4-manifolds, with the identities
// a simply connected complex surface must satisfy, plus the two cut-and-paste
// operations used everywhere: blow-up and connected sum.

#include <optional>
#include <stdexcept>

#include "fourfold/rational.hpp"

namespace fourfold {

enum class Kodaira { MinusInf, Zero, One, Two };

enum class SpinStatus { Spin, NonSpin, Unknown };

struct ComplexTag {
    Kodaira kodaira_dim = Kodaira::Two;
    bool minimal = false;
    bool canonical_ample = false;

    bool general_type() const { return kodaira_dim == Kodaira::Two; }

    bool operator==(const ComplexTag&) const = default;
};

inline ComplexTag minimal_general_type_tag() {
    return ComplexTag{Kodaira::Two, true, true};
}

struct CharNumbers {
    Int chi;   // topological Euler characteristic
    Int tau;   // signature
    Int b_plus;
    Int b_minus;
    std::optional<Int> p_g;  // geometric genus, for complex surfaces with q = 0
    bool simply_connected = true;
    std::optional<ComplexTag> complex_structure;
    SpinStatus spin = SpinStatus::Unknown;

    // Formal combination 2*chi + 3*tau; equals c_1^2 for complex surfaces.
    Int c1sq() const { return Int(2 * chi + 3 * tau); }

    bool same_topology(const CharNumbers& o) const {
        return chi == o.chi && tau == o.tau && b_plus == o.b_plus &&
               b_minus == o.b_minus;
    }

    bool minimal_general_type() const {
        return complex_structure && complex_structure->general_type() &&
               complex_structure->minimal;
    }

    // Throws std::invalid_argument naming the first violated identity.
    void validate() const {
        if (sgn(b_plus) < 0 || sgn(b_minus) < 0)
            throw std::invalid_argument("CharNumbers: negative Betti number");
        if (tau != b_plus - b_minus)
            throw std::invalid_argument("CharNumbers: tau != b_plus - b_minus");
        if (simply_connected && chi != 2 + b_plus + b_minus)
            throw std::invalid_argument(
                "CharNumbers: chi != 2 + b_plus + b_minus for simply connected");
        if (p_g && sgn(*p_g) < 0)
            throw std::invalid_argument("CharNumbers: negative p_g");
        if (p_g && simply_connected) {
            if (b_plus != 2 * (*p_g) + 1)
                throw std::invalid_argument("CharNumbers: b_plus != 2*p_g + 1");
            if (chi + tau != 4 * (1 + *p_g))
                throw std::invalid_argument(
                    "CharNumbers: chi + tau != 4*(1 + p_g) (Noether identity)");
        }
        // Rokhlin: a smooth simply connected spin 4-manifold has tau = 0 mod 16.
        if (simply_connected && spin == SpinStatus::Spin && tau % 16 != 0)
            throw std::invalid_argument(
                "CharNumbers: spin with tau not divisible by 16 (Rokhlin)");
        if (complex_structure && complex_structure->canonical_ample &&
            !(complex_structure->minimal && complex_structure->general_type()))
            throw std::invalid_argument(
                "CharNumbers: canonical_ample requires minimal general type");
    }
};

inline SpinStatus combine_spin(SpinStatus a, SpinStatus b) {
    if (a == SpinStatus::NonSpin || b == SpinStatus::NonSpin)
        return SpinStatus::NonSpin;
    if (a == SpinStatus::Spin && b == SpinStatus::Spin) return SpinStatus::Spin;
    return SpinStatus::Unknown;
}

// M # k reversed-orientation projective planes. Keeps p_g and the Kodaira
// dimension (the blow-up is still a complex surface); k > 0 kills minimality,
// canonical ampleness, and spin (the form gains a <-1> summand).
inline CharNumbers blow_up(CharNumbers m, const Int& k) {
    if (sgn(k) < 0) throw std::invalid_argument("blow_up: negative count");
    if (sgn(k) == 0) return m;
    m.chi += k;
    m.tau -= k;
    m.b_minus += k;
    if (m.complex_structure) {
        m.complex_structure->minimal = false;
        m.complex_structure->canonical_ample = false;
    }
    m.spin = SpinStatus::NonSpin;
    return m;
}

inline CharNumbers blow_up(CharNumbers m, long k) { return blow_up(std::move(m), Int(k)); }

// Oriented connected sum. p_g and complex tags are not sum invariants and are
// dropped; spin combines (sum is spin iff both pieces are).
inline CharNumbers connected_sum(const CharNumbers& a, const CharNumbers& b) {
    CharNumbers m;
    m.chi = a.chi + b.chi - 2;
    m.tau = a.tau + b.tau;
    m.b_plus = a.b_plus + b.b_plus;
    m.b_minus = a.b_minus + b.b_minus;
    m.p_g = std::nullopt;
    m.simply_connected = a.simply_connected && b.simply_connected;
    m.complex_structure = std::nullopt;
    m.spin = combine_spin(a.spin, b.spin);
    return m;
}

inline CharNumbers four_sphere() {
    CharNumbers m;
    m.chi = 2;
    m.tau = 0;
    m.b_plus = 0;
    m.b_minus = 0;
    m.simply_connected = true;
    m.spin = SpinStatus::Spin;
    return m;
}

inline CharNumbers cp2() {
    CharNumbers m;
    m.chi = 3;
    m.tau = 1;
    m.b_plus = 1;
    m.b_minus = 0;
    m.p_g = 0;
    m.simply_connected = true;
    m.complex_structure = ComplexTag{Kodaira::MinusInf, true, false};
    m.spin = SpinStatus::NonSpin;
    return m;
}

inline CharNumbers cp2_bar() {
    CharNumbers m;
    m.chi = 3;
    m.tau = -1;
    m.b_plus = 0;
    m.b_minus = 1;
    m.simply_connected = true;
    m.spin = SpinStatus::NonSpin;
    return m;
}

}  // namespace fourfold
