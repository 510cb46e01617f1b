#include <set>

#include "doctest.h"
#include "divcalc/model_io.hpp"
#include "divcalc/okounkov.hpp"
#include "divcalc/random_classes.hpp"
#include "divcalc/surface.hpp"
#include "oracles.hpp"

using namespace divcalc;

namespace {

Rat q(long p, long d = 1) { return make_rat(p, d); }
QVec v(std::initializer_list<long> xs) { return QVec::from_ints(std::vector<long>(xs)); }

// Lattice points of m·P_D by scanning a box and testing every ray inequality.
std::size_t count_by_scan(const ToricModel& t, const ToricDivisor& d, long m, long box) {
    std::size_t n = 0;
    for (long x = -box; x <= box; ++x)
        for (long y = -box; y <= box; ++y) {
            bool inside = true;
            for (std::size_t r = 0; r < t.num_rays() && inside; ++r) {
                Rat lhs = Rat(t.rays()[r][0] * x + t.rays()[r][1] * y) + Rat(m) * d[r];
                inside = lhs >= 0;
            }
            n += inside;
        }
    return n;
}

Rat sample_area(const OkounkovSample& s) {
    std::vector<std::pair<mpq_class, mpq_class>> pts;
    for (const auto& p : s.points) pts.emplace_back(p[0], p[1]);
    return oracle::hull_area(pts);
}

}  // namespace

TEST_CASE("P2 samples: point counts and hull areas") {
    auto t = load_model("P2-toric.json").toric();
    ToricDivisor h = v({0, 0, 1});
    auto flag = default_flag(t);
    for (long m = 1; m <= 8; ++m) {
        CAPTURE(m);
        auto s = phi_points(t, h, flag, m);
        CHECK(s.points.size() == static_cast<std::size_t>((m + 1) * (m + 2) / 2));
        CHECK(s.points.size() == count_by_scan(t, h, m, m + 2));
        CHECK(s.hull_volume == q(1, 2));
        CHECK(s.hull_volume == sample_area(s));
    }
    auto s2 = phi_points(t, h, flag, 2);
    CHECK(s2.points.size() == 6);
}

TEST_CASE("valuations are nonnegative, injective and reject outside sections") {
    auto t = load_model("F1-toric.json").toric();
    ToricDivisor d = v({0, 1, 0, 1});
    auto flag = default_flag(t);
    ToricDivisor h = choose_ample_bound(t, d);
    CHECK(is_ample_toric(t, h));
    for (std::size_t r = 0; r < d.size(); ++r) CHECK(h[r] >= d[r]);
    for (long m = 1; m <= 5; ++m) {
        std::set<ValuationVector> seen;
        auto pts = lattice_points(divisor_polytope(t, Rat(m) * d));
        for (const auto& u : pts) {
            auto nu = flag_valuation(t, flag, u, m, d, h);
            for (const auto& x : nu) CHECK(x >= 0);
            seen.insert(nu);
        }
        CHECK(seen.size() == pts.size());
    }
    try {
        flag_valuation(t, flag, IntVec{Int(5), Int(5)}, 1, d, h);
        FAIL("expected section-outside-polytope");
    } catch (const Error& e) {
        CHECK(e.code() == "section-outside-polytope");
    }
    CHECK_THROWS_AS(phi_points(t, d, flag, 0), Error);
}

TEST_CASE("the zero divisor has a single section") {
    auto t = load_model("F0-toric.json").toric();
    ToricDivisor zero(4);
    auto s = phi_points(t, zero, default_flag(t), 3);
    REQUIRE(s.points.size() == 1);
    CHECK(s.hull_volume == 0);
    try {
        okounkov_volume_check(t, zero, default_flag(t), 3);
        FAIL("expected degenerate-input");
    } catch (const Error& e) {
        CHECK(e.code() == "degenerate-input");
    }
}

TEST_CASE("flags must span a maximal cone") {
    auto t = load_model("F0-toric.json").toric();
    CHECK(make_flag(t, {1, 0}).cone == 0);
    CHECK_THROWS_AS(make_flag(t, {0, 2}), Error);
    CHECK_THROWS_AS(default_flag(t, 9), Error);
    auto a = flag_matrix(t, make_flag(t, {1, 2}));
    CHECK(abs(oracle::det({{a(0, 0), a(0, 1)}, {a(1, 0), a(1, 1)}})) == 1);
}

TEST_CASE("sub-hull monotonicity and volume sandwich") {
    struct Case {
        const char* model;
        ToricDivisor d;
        Rat volume;
    };
    std::vector<Case> cases{
        {"P2-toric.json", v({0, 0, 1}), 1},
        {"F0-toric.json", v({0, 0, 1, 1}), 2},
        {"F1-toric.json", v({0, 1, 0, 1}), 1},
        {"F1-toric.json", QVec{Rat(0), q(1, 2), Rat(0), q(3, 2)}, q(9, 4)},  // positive part (3/2)H
    };
    for (const auto& c : cases) {
        CAPTURE(c.model);
        auto t = load_model(c.model).toric();
        for (const auto& flag : {default_flag(t, 0), default_flag(t, 1)}) {
            auto r = okounkov_volume_check(t, c.d, flag, 12);
            CHECK(r.toric_volume == c.volume);
            CHECK(r.holds());
            CHECK(r.injective);
            CHECK(r.containment.size() == 10);
            for (const auto& l : r.levels)
                if (l.integral) CHECK(l.scaled_hull_volume == c.volume);
        }
    }
    // a reversed flag permutes coordinates but keeps the areas
    auto t = load_model("F0-toric.json").toric();
    auto a = phi_points(t, v({0, 0, 2, 1}), make_flag(t, {0, 1}), 3);
    auto b = phi_points(t, v({0, 0, 2, 1}), make_flag(t, {1, 0}), 3);
    CHECK(a.hull_volume == b.hull_volume);
    CHECK(a.points.size() == b.points.size());
}

TEST_CASE("the F1 volume agrees with the linked surface") {
    auto lm = load_model("F1-toric.json");
    auto t = lm.toric();
    auto r = okounkov_volume_check(t, v({0, 1, 0, 1}), default_flag(t), 12);
    CHECK(r.toric_volume == 1);
    auto f1 = load_model("F1.json").surface();
    CHECK(surface_volume(f1, v({1, 1})) == r.toric_volume);
}

TEST_CASE("sections of D and of D minus its sigma part coincide") {
    for (const char* name : {"F1-toric.json", "F2-toric.json", "dP6-toric.json"}) {
        CAPTURE(name);
        auto t = load_model(name).toric();
        Sampler s(61);
        std::vector<ToricDivisor> ds{random_big_toric(t, s), random_big_toric(t, s)};
        if (std::string(name) == "F1-toric.json") ds.push_back(v({0, 1, 0, 1}));
        for (const auto& d : ds)
            for (long m = 1; m <= 10; ++m) {
                CAPTURE(m);
                auto id = section_space_identity(t, d, m);
                CHECK(id.same_points);
                CHECK(id.count_d == id.count_reduced);
                CHECK(id.count_d == count_by_scan(t, d, m, 16 * m + 16));
            }
    }
}

TEST_CASE("equal volume forces equal sections at every level") {
    auto t = load_model("F1-toric.json").toric();
    ToricDivisor h = v({0, 0, 0, 1});
    ToricDivisor he = v({0, 1, 0, 1});
    CHECK(toric_volume(t, h) == toric_volume(t, he));
    CHECK(equal_volume_sections(t, h, he, 6) == 0);
    // adding a moving fibre raises the volume and the section count
    ToricDivisor hf = v({1, 0, 0, 1});
    CHECK(toric_volume(t, hf) > toric_volume(t, h));
    CHECK(equal_volume_sections(t, h, hf, 6) == 1);
}
