#include <algorithm>

#include "doctest.h"
#include "divcalc/model_io.hpp"
#include "divcalc/random_classes.hpp"
#include "divcalc/surface.hpp"

using namespace divcalc;

namespace {

Rat q(long p, long d = 1) { return make_rat(p, d); }
QVec v(std::initializer_list<long> xs) { return QVec::from_ints(std::vector<long>(xs)); }

SurfaceModel catalog(const char* name) { return load_model(name).surface(); }

SurfaceModel with_generators(const SurfaceModel& m, std::vector<QVec> gens) {
    SurfaceData d = m.data();
    d.psef_generators = std::move(gens);
    return SurfaceModel(d);
}

// The four defining properties, checked directly from the model data.
void check_zariski_invariants(const SurfaceModel& m, const QVec& d, const ZariskiPair& z) {
    QVec sum = z.positive;
    for (const auto& c : z.negative) {
        CHECK(c.coefficient > 0);
        sum += c.coefficient * m.psef_generators()[c.generator];
        CHECK(gram_pairing(m.gram(), z.positive, m.psef_generators()[c.generator]) == 0);
    }
    CHECK(sum == d);
    for (const auto& g : m.psef_generators()) CHECK(gram_pairing(m.gram(), z.positive, g) >= 0);
    if (!z.negative.empty()) CHECK(is_negative_definite(z.support_gram));
}

}  // namespace

TEST_CASE("catalog surfaces validate") {
    for (const char* name : {"P2.json", "F0.json", "F1.json", "F2.json", "dP6.json"}) {
        CAPTURE(name);
        auto m = load_model(name);
        CHECK(m.is_surface());
    }
    CHECK(catalog("F1.json").rank() == 2);
}

TEST_CASE("model validation reports every violated invariant") {
    SurfaceData bad;
    bad.name = "bad";
    bad.gram = QMatrix::from_ints({{1, 0}, {0, 1}});
    bad.psef_generators = {v({1, 0}), v({0, 1})};
    bad.ample = v({1, 1});
    auto issues = SurfaceModel::validate(bad);
    REQUIRE_FALSE(issues.empty());
    CHECK(std::any_of(issues.begin(), issues.end(), [](const Issue& i) { return i.code == "hodge-index"; }));
    CHECK_THROWS_AS(SurfaceModel{bad}, ValidationError);

    SurfaceData f1 = catalog("F1.json").data();
    f1.ample = v({1, 0});  // H·E = 0
    issues = SurfaceModel::validate(f1);
    CHECK(std::any_of(issues.begin(), issues.end(), [](const Issue& i) { return i.code == "ample-positivity"; }));

    SurfaceData skew = catalog("F1.json").data();
    skew.gram(0, 1) = q(1, 2);
    issues = SurfaceModel::validate(skew);
    CHECK(std::any_of(issues.begin(), issues.end(), [](const Issue& i) { return i.code == "gram-symmetry"; }));
    CHECK(std::any_of(issues.begin(), issues.end(), [](const Issue& i) { return i.code == "gram-integrality"; }));
}

TEST_CASE("pseudo-effective, nef and big tests on F1 and P1xP1") {
    auto f1 = catalog("F1.json");
    CHECK(is_pseudo_effective(f1, v({1, 1})));
    CHECK_FALSE(is_pseudo_effective(f1, v({1, -2})));
    CHECK(is_pseudo_effective(f1, v({0, 0})));
    CHECK(is_nef(f1, v({1, 0})));
    CHECK_FALSE(is_nef(f1, v({1, 1})));
    CHECK(is_nef(f1, f1.ample()));
    CHECK(is_big(f1, v({2, 1})));
    CHECK_FALSE(is_big(f1, v({0, 1})));
    auto f0 = catalog("F0.json");
    CHECK(is_nef(f0, v({1, 0})));
    CHECK_FALSE(is_big(f0, v({1, 0})));
    CHECK_THROWS_AS(is_nef(f0, v({1, 0, 0})), Error);
}

TEST_CASE("Zariski decomposition examples") {
    auto f1 = catalog("F1.json");
    auto z = zariski_decompose(f1, v({1, 1}));
    CHECK(z.positive == v({1, 0}));
    REQUIRE(z.negative.size() == 1);
    CHECK(f1.psef_generators()[z.negative[0].generator] == v({0, 1}));
    CHECK(z.negative[0].coefficient == 1);

    z = zariski_decompose(f1, v({2, 1}));
    CHECK(z.positive == v({2, 0}));
    REQUIRE(z.negative.size() == 1);
    CHECK(z.negative[0].coefficient == 1);

    z = zariski_decompose(f1, v({1, 0}));
    CHECK(z.positive == v({1, 0}));
    CHECK(z.negative.empty());

    try {
        zariski_decompose(f1, v({1, -2}));
        FAIL("expected not-pseudo-effective");
    } catch (const Error& e) {
        CHECK(e.code() == "not-pseudo-effective");
    }

    // dP6: 2H + E1 + E2 − 0 E3 pairs negatively with E1 and E2
    auto dp6 = catalog("dP6.json");
    QVec d = v({1, 1, 1, 0});
    z = zariski_decompose(dp6, d);
    check_zariski_invariants(dp6, d, z);
    CHECK(z.positive == v({1, 0, 0, 0}));
}

TEST_CASE("Zariski decomposition on the blow-up of P2 in two points") {
    SurfaceData data;
    data.name = "Bl2P2";
    data.gram = QMatrix::from_ints({{1, 0, 0}, {0, -1, 0}, {0, 0, -1}});
    data.psef_generators = {v({0, 1, 0}), v({0, 0, 1}), v({1, -1, -1})};
    data.ample = v({3, -1, -1});
    SurfaceModel m(data);
    // H + E1 + E2: both exceptional curves leave, P = H
    auto z = zariski_decompose(m, v({1, 1, 1}));
    CHECK(z.positive == v({1, 0, 0}));
    CHECK(z.negative.size() == 2);
    // 2H − E1 − E2 + 2(H − E1 − E2) pairs negatively with the line through both points
    QVec d = v({4, -3, -3});
    z = zariski_decompose(m, d);
    check_zariski_invariants(m, d, z);
    Sampler s(3);
    for (int i = 0; i < 30; ++i) {
        QVec r = random_psef_surface(m, s);
        check_zariski_invariants(m, r, zariski_decompose(m, r));
    }
}

TEST_CASE("Zariski properties: idempotence, homogeneity, scan order, random invariants") {
    for (const char* name : {"F0.json", "F1.json", "F2.json", "dP6.json", "P2.json"}) {
        CAPTURE(name);
        auto m = catalog(name);
        Sampler s(11);
        for (int i = 0; i < 60; ++i) {
            QVec d = random_psef_surface(m, s);
            auto z = zariski_decompose(m, d);
            check_zariski_invariants(m, d, z);

            auto zp = zariski_decompose(m, z.positive);
            CHECK(zp.positive == z.positive);
            CHECK(zp.negative.empty());

            Rat lambda = s.rational(1, 7, 3);
            auto zl = zariski_decompose(m, lambda * d);
            CHECK(zl.positive == lambda * z.positive);
            CHECK(zl.negative_class(m) == lambda * z.negative_class(m));
            CHECK(surface_volume(m, lambda * d) == lambda * lambda * surface_volume(m, d));

            auto gens = m.psef_generators();
            s.shuffle(gens);
            auto shuffled = with_generators(m, gens);
            auto zs = zariski_decompose(shuffled, d);
            CHECK(zs.positive == z.positive);
            CHECK(zs.negative_class(shuffled) == z.negative_class(m));
        }
    }
}

TEST_CASE("volumes and positive products") {
    auto f1 = catalog("F1.json");
    auto f0 = catalog("F0.json");
    CHECK(surface_volume(f1, v({2, 1})) == 4);
    CHECK(surface_volume(f0, v({1, 2})) == 4);
    CHECK(surface_volume(f1, v({1, -2})) == 0);
    CHECK(positive_product_surface(f0, v({1, 2}), v({2, 1})) == 5);
    CHECK(positive_product_surface(f1, v({2, 1}), v({1, 1})) == 2);
    try {
        positive_product_surface(f1, v({2, 1}), v({0, 1}));
        FAIL("expected not-big");
    } catch (const Error& e) {
        CHECK(e.code() == "not-big");
        CHECK(std::string(e.what()).find("D2") != std::string::npos);
    }
    Sampler s(5);
    for (int i = 0; i < 30; ++i) {
        QVec d = random_big_surface(f1, s);
        CHECK(positive_product_surface(f1, d, d) == surface_volume(f1, d));
    }
}

TEST_CASE("removing part of the negative part keeps P and the volume") {
    for (const char* name : {"F1.json", "F2.json", "dP6.json"}) {
        auto m = catalog(name);
        Sampler s(17);
        for (int i = 0; i < 40; ++i) {
            QVec d = random_big_surface(m, s);
            auto z = zariski_decompose(m, d);
            for (const auto& c : z.negative) {
                for (Rat t : std::vector<Rat>{Rat(0), Rat(c.coefficient / 3), c.coefficient}) {
                    QVec reduced = d - t * m.psef_generators()[c.generator];
                    CHECK(surface_volume(m, reduced) == surface_volume(m, d));
                    CHECK(zariski_decompose(m, reduced).positive == z.positive);
                }
            }
        }
    }
}

TEST_CASE("slope examples and certificate") {
    auto f0 = catalog("F0.json");
    auto f1 = catalog("F1.json");
    CHECK(slope_surface(f0, v({1, 2}), v({2, 1})).slope == q(1, 2));
    CHECK(slope_surface(f1, v({2, 1}), v({1, 0})).slope == 2);
    CHECK(slope_surface(f1, v({3, -1}), v({3, -1})).slope == 1);

    auto c = slope_surface(f0, v({1, 2}), v({2, 1}));
    for (const auto& g : f0.psef_generators()) CHECK(dot(c.functional, g) >= 0);
    CHECK(dot(c.functional, v({2, 1})) >= 1);
    CHECK(dot(c.functional, v({1, 2})) == c.slope);
    CHECK_THROWS_AS(slope_surface(f1, v({0, 1}), v({1, 0})), Error);
}

TEST_CASE("slope boundary and volume bound on random pairs") {
    for (const char* name : {"F0.json", "F1.json", "F2.json", "dP6.json"}) {
        CAPTURE(name);
        auto m = catalog(name);
        Sampler s(23);
        for (int i = 0; i < 40; ++i) {
            QVec d1 = random_big_surface(m, s), d2 = random_big_surface(m, s);
            Rat sl = slope_surface(m, d1, d2).slope;
            QVec p1 = zariski_decompose(m, d1).positive, p2 = zariski_decompose(m, d2).positive;
            CHECK(is_pseudo_effective(m, p1 - sl * p2));
            CHECK_FALSE(is_pseudo_effective(m, p1 - (sl + q(1, 1000)) * p2));
            Rat v1 = surface_volume(m, d1), v2 = surface_volume(m, d2);
            CHECK(sl * sl <= v1 / v2);
            bool proportional = p1 == sl * p2;
            CHECK((sl * sl == v1 / v2) == proportional);
        }
    }
}

TEST_CASE("divisorial augmented base locus") {
    auto f1 = catalog("F1.json");
    auto b = augmented_base_divisorial(f1, v({2, 1}));
    REQUIRE(b.support.size() == 1);
    CHECK(f1.psef_generators()[b.support[0]] == v({0, 1}));
    CHECK(augmented_base_divisorial(f1, f1.ample()).support.empty());
    CHECK(augmented_base_divisorial(catalog("F0.json"), v({1, 1})).support.empty());
    CHECK_THROWS_AS(augmented_base_divisorial(f1, v({0, 1})), Error);

    // effective classes inside the locus leave the volume alone
    CHECK(surface_volume(f1, v({2, 1}) + v({0, 1})) == 4);
    CHECK(surface_volume(f1, v({2, 1}) + v({1, -1})) > 4);
}
