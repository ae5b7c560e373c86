#include <catch2/catch_amalgamated.hpp>

#include "fourfold/volumes.hpp"

using namespace fourfold;

TEST_CASE("scalar and Ricci volume bounds on the degree-nine model") {
    CharNumbers x9 = hypersurface_invariants(Int(9));

    MinimalVolumes base = minimal_volumes(x9, Int(0));
    CHECK(base.vol_s == 50);
    CHECK(base.ricci_lower_a == 50);
    CHECK(base.ricci_lower_b == rat(1550, 33));
    CHECK(base.dominant == VolumeDominance::A);

    MinimalVolumes blown = minimal_volumes(x9, Int(117));
    CHECK(blown.vol_s == 50);  // scalar bound sees only the minimal model
    CHECK(blown.ricci_lower_a == rat(328, 5));
    CHECK(blown.ricci_lower_b == rat(2408, 33));
    CHECK(blown.dominant == VolumeDominance::B);
}

TEST_CASE("dominance switches once at the crossover count") {
    CharNumbers x9 = hypersurface_invariants(Int(9));
    Rational crossover = ricci_volume_crossover(Int(225));
    CHECK(crossover == rat(1125, 33));

    bool seen_b = false;
    for (long k = 0; k <= 60; ++k) {
        MinimalVolumes v = minimal_volumes(x9, Int(k));
        if (Rational(k) < crossover) {
            CHECK(v.dominant == VolumeDominance::A);
            CHECK_FALSE(seen_b);
        } else {
            CHECK(v.dominant == VolumeDominance::B);
            seen_b = true;
        }
    }
    CHECK(seen_b);
}

TEST_CASE("the two Ricci bounds can tie exactly") {
    // c1^2 = 66 puts the crossover at the integer k = 10
    CharNumbers x = noether_line_invariants(Int(66), Int(35));
    CHECK(ricci_volume_crossover(Int(66)) == 10);
    MinimalVolumes v = minimal_volumes(x, Int(10));
    CHECK(v.ricci_lower_a == v.ricci_lower_b);
    CHECK(v.dominant == VolumeDominance::Equal);
}

TEST_CASE("volume bounds reject bad inputs") {
    CHECK_THROWS_AS(minimal_volumes(cp2(), Int(0)), std::domain_error);
    CHECK_THROWS_AS(minimal_volumes(rational_elliptic_invariants(), Int(0)),
                    std::domain_error);
    CharNumbers x9 = hypersurface_invariants(Int(9));
    CHECK_THROWS_AS(minimal_volumes(x9, Int(-1)), std::domain_error);
}

TEST_CASE("weighted energy on general-type blow-ups") {
    SurfaceSpec x9 = parse_spec("hypersurface(9)");

    WeightedEnergyResult sharp = weighted_energy_infimum(x9, rat(1, 3));
    CHECK(sharp.status == EnergyStatus::Exact);
    CHECK(*sharp.value == 100);

    WeightedEnergyResult scalar_only = weighted_energy_infimum(x9, Rational(0));
    CHECK(scalar_only.status == EnergyStatus::Exact);
    CHECK(*scalar_only.value == 75);

    WeightedEnergyResult wide = weighted_energy_infimum(x9, Rational(2));
    CHECK(wide.status == EnergyStatus::Bracketed);
    CHECK(*wide.lower == 100);
    CHECK(*wide.upper == 225);

    // blow-ups leave the infimum untouched
    SurfaceSpec blown = parse_spec("hypersurface(9) + 117*CP2bar");
    WeightedEnergyResult same = weighted_energy_infimum(blown, rat(1, 3));
    CHECK(same.status == EnergyStatus::Exact);
    CHECK(*same.value == 100);

    // exact branch is monotone in eps
    Rational prev(-1);
    for (long n = 0; n <= 12; ++n) {
        WeightedEnergyResult r = weighted_energy_infimum(x9, rat(n, 36));
        REQUIRE(r.status == EnergyStatus::Exact);
        CHECK(*r.value > prev);
        prev = *r.value;
    }
}

TEST_CASE("weighted energy on rational and ruled surfaces") {
    WeightedEnergyResult cp2_mid = weighted_energy_infimum(parse_spec("CP2"), Rational(1));
    CHECK(cp2_mid.status == EnergyStatus::LowerBoundOnly);
    CHECK(*cp2_mid.lower == rat(9, 2));
    CHECK(cp2_mid.positive);

    WeightedEnergyResult cp2_sat = weighted_energy_infimum(parse_spec("CP2"), Rational(3));
    CHECK(*cp2_sat.lower == 9);  // weight caps at 1 for eps >= 2

    WeightedEnergyResult cp2_zero = weighted_energy_infimum(parse_spec("CP2"), Rational(0));
    CHECK(cp2_zero.status == EnergyStatus::LowerBoundOnly);
    CHECK(*cp2_zero.lower == 0);
    CHECK_FALSE(cp2_zero.positive);

    WeightedEnergyResult small = weighted_energy_infimum(parse_spec("CP2 + 8*CP2bar"),
                                                         Rational(1));
    CHECK(small.status == EnergyStatus::LowerBoundOnly);
    CHECK(*small.lower == rat(1, 2));

    // once 2chi+3tau drops to zero the bound degenerates
    WeightedEnergyResult gone = weighted_energy_infimum(parse_spec("CP2 + 9*CP2bar"),
                                                        Rational(1));
    CHECK(gone.status == EnergyStatus::Zero);
    CHECK(*gone.value == 0);

    CHECK(weighted_energy_infimum(parse_spec("rational_elliptic"), Rational(1)).status ==
          EnergyStatus::Zero);
    CHECK(weighted_energy_infimum(parse_spec("ruled(2)"), Rational(1)).status ==
          EnergyStatus::Zero);
}

TEST_CASE("weighted energy rejects unclassifiable input") {
    CHECK_THROWS_AS(weighted_energy_infimum(parse_spec("CP2 + CP2"), Rational(1)),
                    UnclassifiedError);
    // the unclassified error doubles as a domain error for exit-code mapping
    CHECK_THROWS_AS(weighted_energy_infimum(parse_spec("CP2 + CP2"), Rational(1)),
                    std::domain_error);
    CHECK_THROWS_AS(weighted_energy_infimum(parse_spec("CP2"), Rational(-1)),
                    std::domain_error);
}
