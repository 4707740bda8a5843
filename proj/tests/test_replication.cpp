#include <doctest.h>

#include <sstream>

#include "braidcob/replication.hpp"
#include "braidcob/seifert.hpp"

using namespace braidcob;

TEST_CASE("torus words") {
    CHECK(torus_word(2, 3).letters() == std::vector<Letter>{1, 1, 1});
    CHECK(components(torus_word(6, 12)) == 6);
    for (int m = 1; m <= 30; ++m) CHECK(exponent_sum(torus_word(6, m)) == 5 * m);
    CHECK(torus_word(4, 0).empty());
    CHECK_THROWS_AS(torus_word(0, 1), ValidationError);
    CHECK_THROWS_AS(torus_word(2, -1), ValidationError);
}

TEST_CASE("bbl word") {
    CHECK(bbl_word(1).size() == 18);
    CHECK(bbl_word(1).letters() == std::vector<Letter>{2, 1, 1, 1, 1, 2, 1, 1, 1, 2, 1, 1, 1, 1, 2, 1, 1, 1});
    for (int l = 1; l <= 3; ++l) {
        CHECK(exponent_sum(bbl_word(l)) == 12 * l + 6);
        CHECK(exponent_sum(bbl_word(l)) == exponent_sum(torus_word(3, 6 * l + 3)));
        CHECK(components(bbl_word(l)) == 3);
        CHECK(alexander(bbl_word(l)) == alexander(torus_word(3, 6 * l + 3)));
    }
    CHECK_THROWS_AS(bbl_word(0), ValidationError);
}

TEST_CASE("cabled torus word") {
    CHECK(cabled_torus_word(1).size() == 90);
    for (int l = 1; l <= 3; ++l) {
        CHECK(cabled_torus_word(l).size() == static_cast<std::size_t>(60 * l + 30));
        CHECK(components(cabled_torus_word(l)) == 6);
        CHECK(exponent_sum(cabled_torus_word(l)) == exponent_sum(torus_word(6, 12 * l + 6)));
    }
    for (const Rational theta : {Rational(1, 7), Rational(2, 9), Rational(3, 10), Rational(5, 11), Rational(1, 40)})
        CHECK(signature_at(cabled_torus_word(1), theta).signature == signature_at(torus_word(6, 18), theta).signature);
}

TEST_CASE("knot K word") {
    const BraidWord k = knot_K_word(2, 1);
    CHECK(k.strands() == 12);
    CHECK(components(k) == 1);
    CHECK(exponent_sum(k) == 6L * 1 * (6 * 2 - 1) - 5L * (1 + 6 * 2 * 1));
    CHECK(components(knot_K_word(3, 2)) == 1);
    CHECK(knot_K_word(3, 2).strands() == 18);
    CHECK_THROWS_AS(knot_K_word(2, 2), ValidationError);
}

TEST_CASE("twisting and genus formulas") {
    CHECK(twisting_bound(2, 3, 1) == 12);
    CHECK(twisting_bound(1, 1, 0) == 10);
    CHECK_THROWS_AS(twisting_bound(2, 2, 5), ValidationError);
    CHECK_THROWS_AS(twisting_bound(3, 5, 3), ValidationError);  // needs t >= 4
    CHECK(twisting_bound(3, 5, 4) == 18);
    CHECK(mccoy_genus_side(7) == 7);
    CHECK_THROWS_AS(mccoy_genus_side(-1), ValidationError);
}

TEST_CASE("Gambaudo-Ghys estimate") {
    const Estimate e = gg_estimate(6, 6);
    CHECK(e.center == Rational(10));
    CHECK(e.tolerance == 12);
    CHECK(gg_estimate(7, 3).tolerance == 29);
    for (int m = 1; m <= 12; ++m) {
        const int v = sigma6(torus_word(6, m));
        const Rational d = Rational(v) - gg_estimate(6, m).center;
        CHECK((d < Rational(0) ? -d : d) <= Rational(12));
    }
    // T(1,n) is the unknot: sigma_6 = 0, inside the tolerance only for small n
    CHECK(sigma6(torus_word(1, 9)) == 0);
    CHECK(gg_estimate(1, 9).center == Rational(5, 2));
    CHECK_THROWS_AS(gg_estimate(0, 1), ValidationError);
}

TEST_CASE("clover bound") {
    CHECK(clover_bound(6, 6) == Rational(-430));
    CHECK(clover_bound(6, 6, {1, 1, 0}) == Rational(-2));
    CHECK(clover_bound(360, 360) == Rational(36000 - 7200 - 7200 - 200));
}

TEST_CASE("theorem bound") {
    CHECK_THROWS_AS(theorem_bound(6, 6, 10), ValidationError);
    const BoundReport r = theorem_bound(6, 6, 11);
    CHECK(r.sigma_estimate == Rational(10));
    REQUIRE(r.sigma6.has_value());
    CHECK(r.lower == std::abs(22 - *r.sigma6));
    CHECK(r.lower <= r.upper);
    CHECK(r.slack == r.upper - r.lower);
    CHECK(r.window == 440);
    CHECK(r.pass);
    // off the multiples of 6 the reduction costs are charged
    const BoundReport odd = theorem_bound(7, 11, 23);
    CHECK(odd.lower <= odd.upper);
    // estimate-based lower bound when the form is too big
    BoundOptions o;
    o.desk_rows = 10;
    const BoundReport est = theorem_bound(12, 12, 42, o);
    CHECK_FALSE(est.sigma6.has_value());
    CHECK(est.lower == 84 - 40 - 24);
    std::ostringstream csv;
    write_bound_csv(csv, {r});
    CHECK(csv.str().rfind("m,n,N,upper,lower,slack,window,pass\n6,6,11,", 0) == 0);
}

TEST_CASE("built-in certificates") {
    const CertificateReport f = verify(fourstrand_certificate());
    CHECK(f.passed());
    CHECK(f.tcube_steps == 10);
    CHECK(f.total_cost == 10);
    const CobordismCertificate fc = fourstrand_certificate();
    long equivalences = 0;
    for (const Step& s : fc.steps)
        if (std::holds_alternative<step::Equivalence>(s)) ++equivalences;
    CHECK(equivalences == 4);

    const CertificateReport c = verify(coxeter_certificate());
    CHECK(c.passed());
    CHECK(c.tcube_steps == 12);
    CHECK(c.final_state.trefoils_pos == 12);
    CHECK(c.final_state.closures[0] == BraidWord(4, {}));

    CHECK(verify(trefoil_stack_certificate(0, 1)).total_cost == 2);
    const CobordismCertificate same = trefoil_stack_certificate(3, 3);
    CHECK(same.steps.empty());
    CHECK(verify(same).total_cost == 0);
    CHECK_THROWS_AS(trefoil_stack_certificate(4, 3), ValidationError);
    CHECK_THROWS_AS(sixstrand_certificate(1), ValidationError);
}

TEST_CASE("sixstrand certificate at l=2") {
    const CobordismCertificate c = sixstrand_certificate(2);
    const CertificateReport r = verify(c);
    CHECK(r.passed());
    CHECK(r.final_state.trefoils_pos == 40);
    CHECK(r.tcube_steps == 40);
    CHECK(r.total_cost == sixstrand_cost(2));
    long saddles_before_cubes = 0;
    for (const Step& s : c.steps) {
        if (std::holds_alternative<step::TCube>(s)) break;
        saddles_before_cubes += step_cost(s);
    }
    CHECK(saddles_before_cubes == 90);
    REQUIRE(r.sigma6_start.has_value());
    CHECK(std::abs(r.total_cost + *r.sigma6_start - 80) <= 200);
}
