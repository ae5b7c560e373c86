#include <catch2/catch_amalgamated.hpp>

#include <functional>

#include "fourfold/json_io.hpp"

using namespace fourfold;

namespace {

void require_no_floats(const Json& j) {
    REQUIRE_FALSE(j.is_number_float());
    if (j.is_object() || j.is_array())
        for (const auto& v : j) require_no_floats(v);
}

}  // namespace

TEST_CASE("integers: 64-bit as numbers, larger as decimal strings") {
    Json small = encode(Int(99));
    CHECK(small.is_number_integer());
    CHECK(small.get<long>() == 99);

    Json negative = encode(Int(-348));
    CHECK(negative.get<long>() == -348);

    Int big(1);
    big <<= 80;
    Json wide = encode(big);
    REQUIRE(wide.is_string());
    CHECK(wide.get<std::string>() == "1208925819614629174706176");
}

TEST_CASE("rationals are always p/q strings") {
    CHECK(encode(rat(25, 57)).get<std::string>() == "25/57");
    CHECK(encode(rat(-3, 4)).get<std::string>() == "-3/4");
    CHECK(encode(Rational(5)).get<std::string>() == "5");
    CHECK(encode(rat(5625, 57)).get<std::string>() == "1875/19");  // canonical form

    Json iv = encode(RationalInterval(rat(1, 3), rat(1, 2)));
    CHECK(iv["lo"] == "1/3");
    CHECK(iv["hi"] == "1/2");
}

TEST_CASE("characteristic numbers of the degree-nine model") {
    Json j = encode(hypersurface_invariants(Int(9)));
    CHECK(j["chi"] == 459);
    CHECK(j["tau"] == -231);
    CHECK(j["b_plus"] == 113);
    CHECK(j["b_minus"] == 344);
    CHECK(j["c1sq"] == 225);
    CHECK(j["p_g"] == 56);
    CHECK(j["spin"] == "non_spin");
    CHECK(j["simply_connected"] == true);
    CHECK(j["complex_structure"]["kodaira_dim"] == "two");
    CHECK(j["complex_structure"]["canonical_ample"] == true);
    require_no_floats(j);
}

TEST_CASE("obstruction report round trip") {
    ObstructionReport rep =
        evaluate_obstructions(parse_spec("hypersurface(9) + 117*CP2bar"));
    Json j = encode(rep);
    CHECK(j["manifold"] == "hypersurface(9) + 117*CP2bar");
    CHECK(j["minimal_model"]["root"] == "hypersurface(9)");
    CHECK(j["minimal_model"]["blowups"] == 117);
    CHECK(j["k"] == 117);
    CHECK(j["sw_hypothesis"] == "nonzero_assumed");
    CHECK(j["verdicts"]["einstein_25_57"]["verdict"] == "obstructed");
    CHECK(j["verdicts"]["einstein_25_57"]["k_min"] == 99);
    CHECK(j["verdicts"]["einstein_25_57"]["coefficient"] == "25/57");
    CHECK(j["verdicts"]["einstein_25_57"]["threshold"] == "1875/19");
    CHECK(j["verdicts"]["scalar_2_3"]["verdict"] == "not_obstructed");
    CHECK(j["verdicts"]["hitchin_thorpe"]["borderline"] == false);
    require_no_floats(j);
}

TEST_CASE("exotic pair certificates serialize completely") {
    SearchRanges r;
    r.hypersurface_lo = 9;
    r.hypersurface_hi = 9;
    auto pairs = exotic_pair_search(r, PairStrategy::NoetherMatch);
    REQUIRE(pairs.size() == 1);
    Json j = encode(pairs.front());
    CHECK(j["obstructed"] == "hypersurface(9) + 117*CP2bar");
    CHECK(j["einstein_witness"] == "quadric_bicover(3,29)");
    CHECK(j["shared_type"]["cp2"] == 113);
    CHECK(j["shared_type"]["cp2_bar"] == 461);
    CHECK(j["shared_type"]["parity"] == "odd");
    CHECK(j["k"] == 117);
    CHECK(j["k_choice"] == "noether-match (reconstruction)");
    CHECK(j["ke_existence"] == "Aubin/Yau: canonical ample");
    CHECK(j["certificates"]["homeo"]["tau_mod_16"] == -12);
    CHECK(j["certificates"]["obstruction"]["verdicts"]["einstein_25_57"]["verdict"] ==
          "obstructed");
    require_no_floats(j);
}

TEST_CASE("weighted energy statuses shape the payload") {
    Json exact = encode(weighted_energy_infimum(parse_spec("hypersurface(9)"), rat(1, 3)));
    CHECK(exact["status"] == "exact");
    CHECK(exact["value"] == "100");
    CHECK_FALSE(exact.contains("lower"));
    CHECK_FALSE(exact.contains("positive"));

    Json wide = encode(weighted_energy_infimum(parse_spec("hypersurface(9)"), Rational(2)));
    CHECK(wide["status"] == "bracketed");
    CHECK(wide["lower"] == "100");
    CHECK(wide["upper"] == "225");
    CHECK_FALSE(wide.contains("value"));

    Json low = encode(weighted_energy_infimum(parse_spec("CP2"), Rational(1)));
    CHECK(low["status"] == "lower_bound_only");
    CHECK(low["lower"] == "9/2");
    CHECK(low["positive"] == true);
}

TEST_CASE("minimum certificate and virtual dimension payloads") {
    MinimumCertificate cert = minimize_energy(rat(1, 2), 1000, 1000);
    Json j = encode(cert);
    CHECK(j["eps"] == "1/2");
    CHECK(j["grid_size"] == 1000);
    CHECK(j["claimed_infimum"] == "16/33");
    CHECK(j["brackets_claim"] == true);
    require_no_floats(j);

    Json vd = encode(virtual_dimension(Rational(8), Int(0)));
    CHECK(vd["status"] == "defined");
    CHECK(vd["dim"] == 2);
    Json none = encode(virtual_dimension(rat(1, 2), Int(0)));
    CHECK(none["status"] == "malformed");
    CHECK_FALSE(none.contains("dim"));
}

TEST_CASE("serialization is deterministic") {
    auto render = [] {
        ObstructionReport rep =
            evaluate_obstructions(parse_spec("doubleplane(27) + 506*CP2bar"));
        return encode(rep).dump(2);
    };
    std::string a = render();
    std::string b = render();
    CHECK(a == b);
    // key order is insertion order, stable across runs
    CHECK(a.find("\"manifold\"") < a.find("\"numbers\""));
    CHECK(a.find("\"numbers\"") < a.find("\"verdicts\""));
}

TEST_CASE("markdown mirrors the JSON structure") {
    ObstructionReport rep =
        evaluate_obstructions(parse_spec("hypersurface(9) + 117*CP2bar"));
    Json j = encode(rep);
    std::string md = markdown(j);
    CHECK(md.find("- **manifold**: hypersurface(9) + 117*CP2bar") != std::string::npos);
    CHECK(md.find("- **verdicts**:") != std::string::npos);
    CHECK(md.find("  - **einstein_25_57**:") != std::string::npos);
    CHECK(md.find("- **verdict**: obstructed") != std::string::npos);
    CHECK(md.find("- **k_min**: 99") != std::string::npos);

    // arrays render with indices
    Json arr = Json::array({Json{{"x", 1}}, Json("tail")});
    std::string lines = markdown(arr);
    CHECK(lines.find("- [0]") != std::string::npos);
    CHECK(lines.find("  - **x**: 1") != std::string::npos);
    CHECK(lines.find("- [1] tail") != std::string::npos);
}
