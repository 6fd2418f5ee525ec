#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <prym/divisor_algebra.hpp>
#include <prym/pencil_numerics.hpp>

#include <random>

using namespace prym;

namespace {

Rat random_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-99, 99);
    std::uniform_int_distribution<long> den(1, 20);
    return rat_frac(num(rng), den(rng));
}

DivisorClass random_divisor(std::mt19937_64& rng, const PrymBasis& basis) {
    DivisorClass d{basis};
    for (const auto& label : basis.labels()) d.set_coeff(label, random_rat(rng));
    return d;
}

CurveClass random_curve(std::mt19937_64& rng, const PrymBasis& basis) {
    CurveClass c{basis};
    for (const auto& label : basis.labels()) c.set_pairing(label, random_rat(rng));
    return c;
}

}  // namespace

TEST_CASE("basis labels for genus 9") {
    PrymBasis b(9);
    CHECK(b.genus() == 9);
    CHECK(b.labels().size() == 16);  // 4 + 3*floor(9/2)
    CHECK(b.labels()[0] == "lambda");
    CHECK(b.labels()[1] == "delta_0'");
    CHECK(b.labels()[2] == "delta_0''");
    CHECK(b.labels()[3] == "delta_0^ram");
    CHECK(b.labels()[4] == "delta_1");
    CHECK(b.labels()[5] == "delta_8");
    CHECK(b.labels()[6] == "delta_1:8");
    CHECK(b.labels()[15] == "delta_4:5");
    CHECK(b.has_label("delta_2:7"));
    CHECK(b.has_label("delta_5"));  // = delta_{g-4}
    CHECK_FALSE(b.has_label("delta_9"));
    CHECK_THROWS_AS(PrymBasis(1), std::invalid_argument);
}

TEST_CASE("basis labels are unique for a sweep of genera") {
    for (int g = 2; g <= 14; ++g) {
        PrymBasis b(g);
        std::set<std::string> seen(b.labels().begin(), b.labels().end());
        CHECK(seen.size() == b.labels().size());
        // Even genus merges delta_{g/2} with delta_{g-g/2}.
        size_t expected = 4 + 3 * (g / 2) - (g % 2 == 0 ? 1 : 0);
        CHECK(b.labels().size() == expected);
    }
}

TEST_CASE("canonical class coefficients at genus 9") {
    DivisorClass k = canonical_class(9);
    CHECK(k.coeff("lambda") == 13);
    CHECK(k.coeff("delta_0'") == -2);
    CHECK(k.coeff("delta_0''") == -2);
    CHECK(k.coeff("delta_0^ram") == -3);
    CHECK(k.coeff("delta_1") == -3);
    CHECK(k.coeff("delta_8") == -3);
    CHECK(k.coeff("delta_1:8") == -3);
    CHECK(k.coeff("delta_2") == -2);
    CHECK(k.coeff("delta_7") == -2);
    CHECK(k.coeff("delta_2:7") == -2);
    CHECK(k.coeff("delta_4:5") == -2);
}

TEST_CASE("canonical class at the smallest genus") {
    DivisorClass k = canonical_class(2);
    CHECK(k.basis().labels().size() == 6);  // delta_1 emitted once
    CHECK(k.coeff("delta_1") == -3);
    CHECK(k.coeff("delta_1:1") == -3);
    CHECK_THROWS_AS(canonical_class(1), std::invalid_argument);
}

TEST_CASE("canonical class coefficient pattern for every genus") {
    for (int g = 2; g <= 13; ++g) {
        DivisorClass k = canonical_class(g);
        CHECK(k.coeff("lambda") == 13);
        std::set<std::string> minus3;
        for (const auto& label : k.basis().labels())
            if (k.coeff(label) == -3) minus3.insert(label);
        std::set<std::string> expected = {"delta_0^ram", "delta_1",
                                          "delta_" + std::to_string(g - 1),
                                          "delta_1:" + std::to_string(g - 1)};
        CHECK(minus3 == expected);
    }
}

TEST_CASE("pullback of boundary classes") {
    DivisorClass p = pullback_from_mg(9, {{"delta_0", Rat(1)}});
    CHECK(p.coeff("delta_0'") == 1);
    CHECK(p.coeff("delta_0''") == 1);
    CHECK(p.coeff("delta_0^ram") == 2);
    CHECK(p.coeff("lambda") == 0);

    DivisorClass q = pullback_from_mg(9, {{"delta_2", Rat(1)}});
    CHECK(q.coeff("delta_2") == 1);
    CHECK(q.coeff("delta_7") == 1);
    CHECK(q.coeff("delta_2:7") == 1);

    CHECK(pullback_from_mg(9, {}).is_zero());
    CHECK_THROWS_AS(pullback_from_mg(9, {{"delta_5", Rat(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(pullback_from_mg(9, {{"kappa", Rat(1)}}), std::invalid_argument);
}

TEST_CASE("pullback is linear and injective") {
    std::mt19937_64 rng(20260810);
    for (int trial = 0; trial < 100; ++trial) {
        std::map<std::string, Rat> x, y;
        x["lambda"] = random_rat(rng);
        x["delta_0"] = random_rat(rng);
        x["delta_3"] = random_rat(rng);
        y["lambda"] = random_rat(rng);
        y["delta_0"] = random_rat(rng);
        y["delta_3"] = random_rat(rng);
        Rat s = random_rat(rng);

        std::map<std::string, Rat> combo;
        for (const auto& key : {"lambda", "delta_0", "delta_3"})
            combo[key] = x[key] + s * y[key];
        DivisorClass lhs = pullback_from_mg(9, combo);
        DivisorClass rhs = pullback_from_mg(9, x) + s * pullback_from_mg(9, y);
        CHECK(lhs == rhs);

        // Injectivity: the original coefficients are recoverable from the image.
        DivisorClass im = pullback_from_mg(9, x);
        CHECK(im.coeff("lambda") == x["lambda"]);
        CHECK(im.coeff("delta_0'") == x["delta_0"]);
        CHECK(im.coeff("delta_3") == x["delta_3"]);
    }
}

TEST_CASE("Brill-Noether divisor class") {
    DivisorClass d = brill_noether_class();
    CHECK(d.coeff("lambda") == 366);
    CHECK(d.coeff("delta_0'") == -52);
    CHECK(d.coeff("delta_0''") == -52);
    CHECK(d.coeff("delta_0^ram") == Rat(-187, 2));
    CHECK(d.coeff("delta_1") == 0);
    CHECK(d.modulo_higher_boundary());

    DivisorClass d1 = brill_noether_class(1);
    CHECK(d1.coeff("delta_0''") == -53);
    CHECK(d1.coeff("lambda") == 366);
    CHECK(d1.coeff("delta_0'") == -52);

    CHECK(brill_noether_class(Rat(3, 2)).coeff("delta_0''") == Rat(-107, 2));
    CHECK_THROWS_AS(brill_noether_class(Rat(-1)), std::invalid_argument);
}

TEST_CASE("pairing against the sweeping pencil and the canonical class") {
    CurveClass r = pencil::sweeping_pencil_class(pencil::twelve_nodal_octic_pencil());
    CHECK(pair(r, canonical_class(9)) == -1);  // 13*9 - 2*47 - 3*8
    CHECK(pair(r, brill_noether_class()) == 102);

    // The pairing with the Brill-Noether class does not depend on alpha.
    for (const Rat& alpha : {Rat(0), Rat(1), Rat(7), Rat(187, 2)})
        CHECK(pair(r, brill_noether_class(alpha)) == 102);
}

TEST_CASE("pairing with the Nikulin pencil vanishes on the Brill-Noether class") {
    CurveClass xi = pencil::nikulin_pencil(9);
    for (const Rat& alpha : {Rat(0), Rat(1), Rat(7)})
        CHECK(pair(xi, brill_noether_class(alpha)) == 0);  // 10*366 - 56*52 - 8*187/2
}

TEST_CASE("pairing edge cases") {
    PrymBasis b9(9);
    CurveClass r = pencil::sweeping_pencil_class(pencil::twelve_nodal_octic_pencil());
    CHECK(pair(r, DivisorClass{b9}) == 0);

    CurveClass c7{PrymBasis(7)};
    CHECK_THROWS_AS(pair(c7, canonical_class(9)), std::invalid_argument);
}

TEST_CASE("pairing against a partial class warns when the curve meets higher boundary") {
    PrymBasis b9(9);
    CurveClass c{b9};
    c.set_pairing("lambda", 1);
    c.set_pairing("delta_1", 2);
    PairingResult res = pair_checked(c, brill_noether_class());
    CHECK(res.outside_known_support);
    CHECK(res.value == 366);

    // Full classes never warn; partial classes against core-supported curves
    // do not warn either.
    CHECK_FALSE(pair_checked(c, canonical_class(9)).outside_known_support);
    CurveClass core{b9};
    core.set_pairing("lambda", 5);
    CHECK_FALSE(pair_checked(core, brill_noether_class()).outside_known_support);
}

TEST_CASE("pair is bilinear") {
    std::mt19937_64 rng(987654321);
    PrymBasis b(9);
    for (int trial = 0; trial < 120; ++trial) {
        CurveClass c = random_curve(rng, b);
        DivisorClass d1 = random_divisor(rng, b);
        DivisorClass d2 = random_divisor(rng, b);
        Rat x = random_rat(rng), y = random_rat(rng);
        DivisorClass combo = x * d1 + y * d2;
        CHECK(pair(c, combo) == x * pair(c, d1) + y * pair(c, d2));
    }
}

TEST_CASE("divisor JSON round trip emits all labels") {
    DivisorClass d = brill_noether_class();
    auto j = d.to_json();
    CHECK(j["genus"] == 9);
    CHECK(j["coeffs"].size() == 16);
    CHECK(j["coeffs"]["delta_0^ram"] == "-187/2");
    CHECK(j["coeffs"]["delta_4:5"] == "0");

    DivisorClass back = DivisorClass::from_json(j);
    CHECK(back == d);
    CHECK(back.modulo_higher_boundary());

    DivisorClass k = canonical_class(9);
    CHECK(DivisorClass::from_json(k.to_json()) == k);
}

TEST_CASE("rational string parsing") {
    CHECK(rat_from_string("-187/2") == Rat(-187, 2));
    CHECK(rat_from_string("42") == 42);
    CHECK(rat_from_string("4/6") == Rat(2, 3));
    CHECK_THROWS_AS(rat_from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string("3.5"), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string(""), std::invalid_argument);
}

TEST_CASE("class printing") {
    CHECK(canonical_class(9).to_string().substr(0, 30) ==
          std::string("13*lambda - 2*delta_0' - 2*del").substr(0, 30));
    PrymBasis b(9);
    CHECK(DivisorClass{b}.to_string() == "0");
    DivisorClass d{b};
    d.set_coeff("delta_0^ram", Rat(-187, 2));
    CHECK(d.to_string() == "-187/2*delta_0^ram");
}
