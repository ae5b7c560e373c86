#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "fourfold/homeo.hpp"

using namespace fourfold;

TEST_CASE("Freedman classification") {
    HomeoClass plane = freedman_type(cp2());
    REQUIRE(plane.status == HomeoStatus::Classified);
    CHECK(plane.type->cp2 == 1);
    CHECK(plane.type->cp2_bar == 0);
    CHECK(plane.type->parity == FormParity::Odd);

    HomeoClass big = freedman_type(blow_up(hypersurface_invariants(Int(9)), Int(117)));
    REQUIRE(big.status == HomeoStatus::Classified);
    CHECK(big.type->cp2 == 113);
    CHECK(big.type->cp2_bar == 461);

    HomeoClass sphere = freedman_type(four_sphere());
    CHECK(sphere.status == HomeoStatus::Unsupported);
    CHECK(sphere.reason == "even intersection form");

    HomeoClass ruled = freedman_type(ruled_surface_invariants(Int(2)));
    CHECK(ruled.status == HomeoStatus::Inapplicable);
    CHECK(ruled.reason == "not simply connected");

    HomeoClass unresolved = freedman_type(quadric_bicover_invariants(Int(3), Int(8)));
    CHECK(unresolved.status == HomeoStatus::Unsupported);
    CHECK(unresolved.reason == "intersection-form parity unresolved");

    // Rokhlin rescues an undeclared parity when tau is not divisible by 16
    CharNumbers undeclared = double_plane_invariants(Int(26));
    undeclared.spin = SpinStatus::Unknown;
    REQUIRE(undeclared.tau % 16 != 0);
    CHECK(freedman_type(undeclared).status == HomeoStatus::Classified);
}

TEST_CASE("homeomorphism verdicts") {
    CharNumbers left = blow_up(hypersurface_invariants(Int(9)), Int(117));
    CharNumbers right = quadric_bicover_invariants(Int(3), Int(29));
    HomeoVerdict same = homeomorphic(left, right);
    REQUIRE(same.decided());
    CHECK(same.homeomorphic);
    CHECK(*same.left.type == *same.right.type);

    HomeoVerdict differ = homeomorphic(cp2(), blow_up(cp2(), Int(1)));
    REQUIRE(differ.decided());
    CHECK_FALSE(differ.homeomorphic);

    // an unclassifiable side never yields a negative verdict, only indecision
    HomeoVerdict undecided = homeomorphic(four_sphere(), cp2());
    CHECK_FALSE(undecided.decided());
    CHECK_FALSE(undecided.homeomorphic);
    CHECK(undecided.left.status == HomeoStatus::Unsupported);
}

TEST_CASE("Noether-line partners") {
    auto concrete = noether_partner(Int(108), Int(56));
    REQUIRE(concrete.has_value());
    CHECK(concrete->to_canonical() == "quadric_bicover(3,29)");
    CHECK(concrete->evaluate().c1sq() == 108);

    auto abstract = noether_partner(Int(646), Int(325));
    REQUIRE(abstract.has_value());
    CHECK(abstract->to_canonical() == "noether_line(646,325)");
    CHECK(abstract->evaluate().chi == 3266);
    CHECK(abstract->evaluate().spin == SpinStatus::NonSpin);

    auto tiny = noether_partner(Int(2), Int(3));
    REQUIRE(tiny.has_value());
    CHECK(tiny->to_canonical() == "noether_line(2,3)");

    CHECK_FALSE(noether_partner(Int(100), Int(56)).has_value());  // off the line
    CHECK_FALSE(noether_partner(Int(0), Int(2)).has_value());     // p_g too small

    CHECK(std::string(ke_witness_provenance()) == "Aubin/Yau: canonical ample");
}

TEST_CASE("search emits the known hypersurface pairs") {
    SearchRanges r;
    r.hypersurface_lo = 5;
    r.hypersurface_hi = 14;
    auto pairs = exotic_pair_search(r, PairStrategy::NoetherMatch);

    std::set<long> degrees;
    std::set<long> ks;
    for (const auto& p : pairs) {
        degrees.insert(std::get<Hypersurface>(p.obstructed.root).degree.get_si());
        ks.insert(p.k.get_si());
    }
    CHECK(degrees == std::set<long>{8, 9, 10, 11, 12, 13});
    CHECK(ks == std::set<long>{62, 117, 196, 303, 442, 617});
    // degree 14 lands on tau = 0 mod 16, where the partner parity is open
    CHECK(degrees.count(14) == 0);
}

TEST_CASE("the degree-nine pair carries full certificates") {
    SearchRanges r;
    r.hypersurface_lo = 9;
    r.hypersurface_hi = 9;
    auto pairs = exotic_pair_search(r, PairStrategy::NoetherMatch);
    REQUIRE(pairs.size() == 1);
    const ExoticPair& p = pairs.front();

    CHECK(p.obstructed.to_canonical() == "hypersurface(9) + 117*CP2bar");
    CHECK(p.einstein_witness.to_canonical() == "quadric_bicover(3,29)");
    CHECK(p.k == 117);
    CHECK(p.shared_type.cp2 == 113);
    CHECK(p.shared_type.cp2_bar == 461);
    CHECK(p.shared_type.parity == FormParity::Odd);
    CHECK(p.k_choice == "noether-match (reconstruction)");
    CHECK(p.ke_existence == "Aubin/Yau: canonical ample");
    CHECK(p.obstruction_certificate.einstein_25_57.verdict == Verdict::Obstructed);
    CHECK(*p.obstruction_certificate.einstein_25_57.k_min == 99);
    CHECK(p.homeo_certificate.obstructed.status == HomeoStatus::Classified);
    CHECK(p.homeo_certificate.witness.status == HomeoStatus::Classified);
    CHECK(p.homeo_certificate.tau_mod_16 == -12);
}

TEST_CASE("search emits the known double-plane pairs") {
    SearchRanges r;
    r.double_plane_lo = 25;
    r.double_plane_hi = 28;
    auto pairs = exotic_pair_search(r, PairStrategy::NoetherMatch);
    REQUIRE(pairs.size() == 2);
    CHECK(std::get<DoublePlane>(pairs[0].obstructed.root).m == 27);
    CHECK(pairs[0].k == 506);
    CHECK(pairs[0].einstein_witness.to_canonical() == "noether_line(646,325)");
    CHECK(std::get<DoublePlane>(pairs[1].obstructed.root).m == 28);
    CHECK(pairs[1].k == 552);

    // m = 30 has tau = 0 mod 16: no certified partner
    SearchRanges gap;
    gap.double_plane_lo = 30;
    gap.double_plane_hi = 30;
    CHECK(exotic_pair_search(gap, PairStrategy::NoetherMatch).empty());
}

TEST_CASE("every emitted pair satisfies the certificate invariants") {
    SearchRanges r;
    r.hypersurface_lo = 5;
    r.hypersurface_hi = 16;
    r.double_plane_lo = 25;
    r.double_plane_hi = 34;
    auto pairs = exotic_pair_search(r, PairStrategy::NoetherMatch);
    REQUIRE_FALSE(pairs.empty());
    for (const auto& p : pairs) {
        CharNumbers m = p.obstructed.evaluate();
        CharNumbers w = p.einstein_witness.evaluate();
        CHECK(m.chi == w.chi);
        CHECK(m.tau == w.tau);
        CHECK(m.b_plus == w.b_plus);
        CHECK(m.b_minus == w.b_minus);
        CHECK(m.tau % 16 != 0);  // Rokhlin certificate is live
        CHECK(p.homeo_certificate.tau_mod_16 != 0);
        CHECK(w.complex_structure.has_value());
        CHECK(w.complex_structure->canonical_ample);
        CHECK(p.obstruction_certificate.einstein_25_57.verdict == Verdict::Obstructed);
        CHECK(p.k >= *p.obstruction_certificate.einstein_25_57.k_min);
        // the witness sits on the Noether line
        CHECK(w.c1sq() == 2 * *w.p_g - 4);
    }
}

TEST_CASE("minimum-threshold strategy misses the Noether line here") {
    SearchRanges r;
    r.hypersurface_lo = 9;
    r.hypersurface_hi = 12;
    CHECK(exotic_pair_search(r, PairStrategy::MinThreshold).empty());
}

TEST_CASE("empty and degenerate ranges") {
    SearchRanges none;
    CHECK(exotic_pair_search(none, PairStrategy::NoetherMatch).empty());

    // parameters below the family floor are skipped, not errors
    SearchRanges low;
    low.hypersurface_lo = 1;
    low.hypersurface_hi = 7;
    CHECK(exotic_pair_search(low, PairStrategy::NoetherMatch).empty());
}
