#pragma once

// JSON encoding of every report type, plus a generic markdown renderer that
// mirrors the JSON structure. Rationals are always emitted as "p/q" strings;
// integers as JSON numbers when they fit in 64 bits, decimal strings
// otherwise; nothing is ever converted through floating point.

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "fourfold/curvature.hpp"
#include "fourfold/homeo.hpp"
#include "fourfold/lattice.hpp"
#include "fourfold/obstructions.hpp"
#include "fourfold/volumes.hpp"

namespace fourfold {

using Json = nlohmann::ordered_json;

inline Json encode(const Int& n) {
    if (n.fits_slong_p()) return Json(static_cast<long>(n.get_si()));
    return Json(n.get_str());
}

inline Json encode(const Rational& q) { return Json(to_string(q)); }

inline Json encode(const RationalInterval& iv) {
    return Json{{"lo", encode(iv.lo)}, {"hi", encode(iv.hi)}};
}

inline const char* text(Kodaira k) {
    switch (k) {
        case Kodaira::MinusInf: return "minus_infinity";
        case Kodaira::Zero: return "zero";
        case Kodaira::One: return "one";
        case Kodaira::Two: return "two";
    }
    return "?";
}

inline const char* text(SpinStatus s) {
    switch (s) {
        case SpinStatus::Spin: return "spin";
        case SpinStatus::NonSpin: return "non_spin";
        case SpinStatus::Unknown: return "unknown";
    }
    return "?";
}

inline const char* text(Verdict v) {
    switch (v) {
        case Verdict::Obstructed: return "obstructed";
        case Verdict::NotObstructed: return "not_obstructed";
        case Verdict::Inapplicable: return "inapplicable";
    }
    return "?";
}

inline const char* text(SwHypothesis s) {
    return s == SwHypothesis::NonzeroAssumed ? "nonzero_assumed" : "not_assumed";
}

inline const char* text(FormParity p) { return p == FormParity::Odd ? "odd" : "even"; }

inline const char* text(HomeoStatus s) {
    switch (s) {
        case HomeoStatus::Classified: return "classified";
        case HomeoStatus::Unsupported: return "unsupported";
        case HomeoStatus::Inapplicable: return "inapplicable";
    }
    return "?";
}

inline const char* text(EnergyStatus s) {
    switch (s) {
        case EnergyStatus::Zero: return "zero";
        case EnergyStatus::Exact: return "exact";
        case EnergyStatus::Bracketed: return "bracketed";
        case EnergyStatus::LowerBoundOnly: return "lower_bound_only";
    }
    return "?";
}

inline const char* text(VolumeDominance d) {
    switch (d) {
        case VolumeDominance::A: return "a";
        case VolumeDominance::B: return "b";
        case VolumeDominance::Equal: return "equal";
    }
    return "?";
}

inline const char* text(VirtualDimStatus s) {
    switch (s) {
        case VirtualDimStatus::Defined: return "defined";
        case VirtualDimStatus::ZeroByDefinition: return "zero_by_definition";
        case VirtualDimStatus::Malformed: return "malformed";
    }
    return "?";
}

inline const char* text(ParityCheck p) {
    switch (p) {
        case ParityCheck::Characteristic: return "characteristic";
        case ParityCheck::NotCharacteristic: return "not_characteristic";
        case ParityCheck::Unchecked: return "unchecked";
    }
    return "?";
}

inline const char* text(PairStrategy s) {
    return s == PairStrategy::NoetherMatch ? "noether-match" : "min-threshold";
}

inline Json encode(const SurfaceSpec& spec) { return Json(spec.to_canonical()); }

inline Json encode(const ComplexTag& tag) {
    return Json{{"kodaira_dim", text(tag.kodaira_dim)},
                {"minimal", tag.minimal},
                {"canonical_ample", tag.canonical_ample}};
}

inline Json encode(const CharNumbers& n) {
    Json j{{"chi", encode(n.chi)},
           {"tau", encode(n.tau)},
           {"b_plus", encode(n.b_plus)},
           {"b_minus", encode(n.b_minus)},
           {"c1sq", encode(Int(n.c1sq()))},
           {"simply_connected", n.simply_connected},
           {"spin", text(n.spin)}};
    if (n.p_g) j["p_g"] = encode(*n.p_g);
    if (n.complex_structure) j["complex_structure"] = encode(*n.complex_structure);
    return j;
}

inline Json encode(const HitchinThorpeResult& r) {
    return Json{{"verdict", text(r.verdict)},
                {"borderline", r.borderline},
                {"two_chi", encode(r.euler_side)},
                {"three_abs_tau", encode(r.signature_side)}};
}

inline Json encode(const ThresholdResult& r) {
    Json j{{"verdict", text(r.verdict)},
           {"coefficient", encode(r.coefficient)},
           {"threshold", encode(r.threshold)}};
    if (r.k_min) j["k_min"] = encode(*r.k_min);
    return j;
}

inline Json encode(const ObstructionReport& rep) {
    Json j{{"manifold", encode(rep.manifold)}, {"numbers", encode(rep.numbers)}};
    if (rep.minimal_model) {
        j["minimal_model"] = Json{{"root", family_text(rep.minimal_model->minimal_model)},
                                  {"blowups", encode(rep.minimal_model->blowups)}};
    }
    if (rep.model_numbers) j["model_numbers"] = encode(*rep.model_numbers);
    j["k"] = encode(rep.k);
    j["sw_hypothesis"] = text(rep.sw);
    j["verdicts"] = Json{{"hitchin_thorpe", encode(rep.ht)},
                         {"scalar_2_3", encode(rep.scalar_2_3)},
                         {"einstein_25_57", encode(rep.einstein_25_57)},
                         {"asd_11_27", encode(rep.asd_11_27)}};
    return j;
}

inline Json encode(const HomeoType& t) {
    return Json{{"cp2", encode(t.cp2)},
                {"cp2_bar", encode(t.cp2_bar)},
                {"parity", text(t.parity)}};
}

inline Json encode(const HomeoClass& c) {
    Json j{{"status", text(c.status)}};
    if (c.type) j["type"] = encode(*c.type);
    if (!c.reason.empty()) j["reason"] = c.reason;
    return j;
}

inline Json encode(const HomeoVerdict& v) {
    return Json{{"homeomorphic", v.homeomorphic},
                {"decided", v.decided()},
                {"left", encode(v.left)},
                {"right", encode(v.right)}};
}

inline Json encode(const ExoticPair& p) {
    return Json{{"obstructed", encode(p.obstructed)},
                {"einstein_witness", encode(p.einstein_witness)},
                {"shared_type", encode(p.shared_type)},
                {"k", encode(p.k)},
                {"k_choice", p.k_choice},
                {"ke_existence", p.ke_existence},
                {"certificates",
                 Json{{"obstruction", encode(p.obstruction_certificate)},
                      {"homeo", Json{{"obstructed", encode(p.homeo_certificate.obstructed)},
                                     {"witness", encode(p.homeo_certificate.witness)},
                                     {"tau_mod_16", encode(p.homeo_certificate.tau_mod_16)}}}}}};
}

inline Json encode(const MinimalVolumes& v) {
    return Json{{"vol_s", encode(v.vol_s)},
                {"ricci_lower_a", encode(v.ricci_lower_a)},
                {"ricci_lower_b", encode(v.ricci_lower_b)},
                {"dominant", text(v.dominant)}};
}

inline Json encode(const WeightedEnergyResult& r) {
    Json j{{"status", text(r.status)}};
    if (r.value) j["value"] = encode(*r.value);
    if (r.lower) j["lower"] = encode(*r.lower);
    if (r.upper) j["upper"] = encode(*r.upper);
    if (r.status == EnergyStatus::LowerBoundOnly) j["positive"] = r.positive;
    return j;
}

inline Json encode(const MinimumCertificate& c) {
    return Json{{"eps", encode(c.eps)},
                {"grid_size", c.grid_size},
                {"refine_size", c.refine_size},
                {"argmin", encode(c.argmin)},
                {"min_lower", encode(c.min_lower)},
                {"min_upper", encode(c.min_upper)},
                {"claimed_infimum", encode(c.claimed_infimum)},
                {"claimed_argmin", encode(c.claimed_argmin)},
                {"brackets_claim", c.brackets_claim()}};
}

inline Json encode(const VirtualDim& v) {
    Json j{{"status", text(v.status)}};
    if (v.dim) j["dim"] = encode(*v.dim);
    return j;
}

// Markdown mirror of a JSON document: nested bullet lists with bold keys,
// scalars inline. Generated from the same structure as the JSON output so
// the two never diverge.
namespace detail {

inline std::string markdown_scalar(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

inline void markdown_node(const Json& j, const std::string& indent, std::string& out) {
    if (j.is_object()) {
        for (const auto& item : j.items()) {
            const Json& v = item.value();
            if (v.is_object() || v.is_array()) {
                out += indent + "- **" + item.key() + "**:\n";
                markdown_node(v, indent + "  ", out);
            } else {
                out += indent + "- **" + item.key() + "**: " + markdown_scalar(v) + "\n";
            }
        }
    } else if (j.is_array()) {
        std::size_t i = 0;
        for (const auto& v : j) {
            if (v.is_object() || v.is_array()) {
                out += indent + "- [" + std::to_string(i) + "]\n";
                markdown_node(v, indent + "  ", out);
            } else {
                out += indent + "- [" + std::to_string(i) + "] " + markdown_scalar(v) + "\n";
            }
            ++i;
        }
    } else {
        out += indent + "- " + markdown_scalar(j) + "\n";
    }
}

}  // namespace detail

inline std::string markdown(const Json& j) {
    std::string out;
    detail::markdown_node(j, "", out);
    return out;
}

}  // namespace fourfold
