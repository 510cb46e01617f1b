// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "divcalc/analysis.hpp"
#include "divcalc/model_io.hpp"
#include "divcalc/okounkov.hpp"
#include "divcalc/random_classes.hpp"
#include "divcalc/report.hpp"

using namespace divcalc;

namespace {

constexpr double kSuiteSeconds = 60.0;
constexpr std::uint64_t kSeed = 20240601;

QVec v(std::initializer_list<long> xs) { return QVec::from_ints(std::vector<long>(xs)); }

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    std::vector<std::string> failures;

    void require(bool ok, const std::string& what) {
        if (ok) return;
        pass = false;
        if (failures.size() < 5) failures.push_back(what);
    }
};

const std::vector<std::string> kSurfaces{"F0", "F1", "F2", "dP6"};

// Random big pairs and their reports, shared by the analysis criteria.
struct PairCase {
    std::string model;
    QVec d1, d2;
    MinkowskiReport report;
};

struct Corpus {
    std::map<std::string, LoadedModel> models;
    std::vector<PairCase> random_pairs;
    std::vector<PairCase> constructed;
    std::vector<Rat> constructed_lambda;
};

Corpus& corpus() {
    static Corpus c = [] {
        Corpus out;
        for (const auto& name : kSurfaces) out.models.emplace(name, load_model(name));
        Sampler s(kSeed);
        for (const auto& name : kSurfaces) {
            const auto& m = out.models.at(name).surface();
            SurfaceBackend b(m);
            for (int i = 0; i < 500; ++i) {
                QVec d1 = random_big_surface(m, s), d2 = random_big_surface(m, s);
                out.random_pairs.push_back({name, d1, d2, minkowski_report(b, d1, d2)});
            }
            // D2 = λ·P(D1) + an effective class on Supp N(D1): same positive part up to λ
            for (int i = 0; i < 50; ++i) {
                QVec d1 = random_big_surface(m, s);
                auto z = zariski_decompose(m, d1);
                Rat lambda = s.rational(1, 5, 4);
                QVec d2 = lambda * z.positive;
                for (const auto& c : z.negative) d2 += s.rational(0, 3, 3) * m.psef_generators()[c.generator];
                out.constructed.push_back({name, d1, d2, minkowski_report(b, d1, d2)});
                out.constructed_lambda.push_back(lambda);
            }
        }
        return out;
    }();
    return c;
}

std::string describe(const PairCase& p) { return p.model + " D1=" + to_string(p.d1) + " D2=" + to_string(p.d2); }

void zariski_suite(Outcome& o) {
    Sampler s(kSeed + 1);
    std::size_t n = 0;
    for (const auto& name : kSurfaces) {
        auto lm = load_model(name);
        const auto& m = lm.surface();
        for (int i = 0; i < 200; ++i, ++n) {
            QVec d = random_psef_surface(m, s);
            auto z = zariski_decompose(m, d);
            QVec sum = z.positive;
            bool ok = true;
            for (const auto& c : z.negative) {
                const QVec& g = m.psef_generators()[c.generator];
                ok = ok && c.coefficient > 0 && gram_pairing(m.gram(), z.positive, g) == 0;
                sum += c.coefficient * g;
            }
            ok = ok && sum == d;
            for (const auto& g : m.psef_generators()) ok = ok && gram_pairing(m.gram(), z.positive, g) >= 0;
            if (!z.negative.empty()) ok = ok && is_negative_definite(z.support_gram);

            SurfaceData shuffled = m.data();
            s.shuffle(shuffled.psef_generators);
            SurfaceModel sm(shuffled);
            auto zs = zariski_decompose(sm, d);
            ok = ok && zs.positive == z.positive && zs.negative_class(sm) == z.negative_class(m);
            o.require(ok, name + " D=" + to_string(d));
        }
    }
    o.detail << n << " classes on " << kSurfaces.size() << " surfaces, four invariants and shuffled scan order";
}

void kt_suite(Outcome& o) {
    for (const auto& p : corpus().random_pairs) {
        bool ok = p.report.kt.holds();
        for (const auto& q : p.report.kt.inequalities) ok = ok && q.lhs >= q.rhs;
        ok = ok && p.report.kt.item4.order != Ordering::less;
        o.require(ok, describe(p));
    }
    o.detail << corpus().random_pairs.size() << " big pairs, items 1-3 exact, item 4 certified";
}

void equality_suite(Outcome& o) {
    std::size_t equal = 0;
    auto check = [&](const PairCase& p) {
        const auto& e = p.report.equality;
        bool ok = e.consistent() && e.equality == e.cond4 && (e.cond5 == Ordering::equal) == e.equality;
        if (e.equality) {
            ++equal;
            const std::size_t d = p.report.s.d;
            Rat power = 1;
            for (std::size_t i = 0; i < d; ++i) power *= *e.ratio;
            const auto& sv = p.report.s.values;
            ok = ok && power == sv[d] / sv[0];
        }
        o.require(ok, describe(p));
    };
    for (const auto& p : corpus().random_pairs) check(p);
    const auto& cons = corpus().constructed;
    for (std::size_t i = 0; i < cons.size(); ++i) {
        check(cons[i]);
        const auto& e = cons[i].report.equality;
        o.require(e.equality && e.ratio && *e.ratio == 1 / corpus().constructed_lambda[i], "constructed " + describe(cons[i]));
    }
    o.detail << corpus().random_pairs.size() << " random + " << cons.size() << " constructed pairs, " << equal
             << " equality cases";
}

void diskant_suite(Outcome& o) {
    for (const auto& p : corpus().random_pairs) o.require(p.report.diskant.holds(), describe(p));
    auto f0 = load_model("F0");
    auto r = diskant_check(SurfaceBackend(f0.surface()), v({1, 2}), v({2, 1}));
    bool worked = r.lhs.is_rational() && r.lhs.rational_value() == 9 && r.rhs.is_rational() &&
                  r.rhs.rational_value() == 9 && r.slope == make_rat(1, 2) && r.verdict.order == Ordering::equal;
    o.require(worked, "P1xP1 f+2g, 2f+g");
    o.detail << corpus().random_pairs.size() << " pairs; P1xP1 instance LHS " << r.lhs.to_string() << ", s "
             << to_string(r.slope) << ", RHS " << r.rhs.to_string() << ", " << to_string(r.verdict.order);
}

void radii_suite(Outcome& o) {
    for (const auto& p : corpus().random_pairs) o.require(p.report.radii.holds(), describe(p));
    auto f0 = load_model("F0");
    auto r = radii_report(SurfaceBackend(f0.surface()), v({1, 2}), v({2, 1}));
    const std::vector<Rat> expect{make_rat(1, 2), make_rat(1, 2), make_rat(4, 5), make_rat(5, 4), 2, 2};
    bool worked = r.holds() && r.chain.size() == expect.size();
    std::string shown;
    for (std::size_t i = 0; worked && i < expect.size(); ++i) {
        const auto& e = r.chain[i].exact;
        worked = e && e->is_rational() && e->rational_value() == expect[i];
        if (worked) shown += (shown.empty() ? "" : ", ") + to_string(e->rational_value());
    }
    o.require(worked, "P1xP1 chain");
    o.detail << corpus().random_pairs.size() << " pairs; P1xP1 chain [" << shown << "]";
}

void cross_backend_suite(Outcome& o) {
    Sampler s(kSeed + 6);
    for (const char* name : {"F0-toric", "F1-toric"}) {
        auto lt = load_model(name);
        auto ls = load_model(lt.surface_link->model);
        const auto& t = lt.toric();
        const auto& m = ls.surface();
        const auto& cmap = lt.surface_link->class_map;
        auto map = [&](const QVec& d) {
            QVec out(m.rank());
            for (std::size_t r = 0; r < d.size(); ++r) out += d[r] * cmap[r];
            return out;
        };
        SurfaceBackend sb(m);
        for (int i = 0; i < 100; ++i) {
            QVec d1 = random_nef_big_toric(t, s), d2 = random_nef_big_toric(t, s);
            o.require(mixed_volume_sequence(t, d1, d2) == sb.s_sequence(map(d1), map(d2)),
                      std::string(name) + " s-sequence " + to_string(d1) + " " + to_string(d2));
        }
        for (int i = 0; i < 100; ++i) {
            QVec d = random_big_toric(t, s);
            auto z = zariski_decompose(m, map(d));
            QVec sigma_class(m.rank());
            bool ok = true;
            for (std::size_t r = 0; r < t.num_rays(); ++r) {
                Rat sigma = sigma_toric(t, d, r).value;
                sigma_class += sigma * cmap[r];
                Rat expected = 0;
                for (const auto& c : z.negative)
                    if (m.psef_generators()[c.generator] == cmap[r]) expected = c.coefficient;
                ok = ok && sigma == expected;
            }
            ok = ok && sigma_class == z.negative_class(m);
            o.require(ok, std::string(name) + " sigma " + to_string(d));
        }
    }
    o.detail << "200 nef pairs and 200 big classes on toric F0 and F1";
}

void okounkov_suite(Outcome& o) {
    struct Case {
        const char* model;
        QVec d;
    };
    const std::vector<Case> cases{
        {"P2-toric", v({0, 0, 1})},
        {"P2-toric", QVec{Rat(0), make_rat(1, 2), Rat(1)}},
        {"F0-toric", v({0, 0, 1, 1})},
        {"F0-toric", QVec{Rat(0), Rat(0), make_rat(3, 2), make_rat(2, 3)}},
        {"F1-toric", v({1, 0, 0, 1})},
        {"F1-toric", v({0, 1, 0, 1})},
    };
    std::size_t runs = 0;
    for (const auto& c : cases) {
        auto lm = load_model(c.model);
        const auto& t = lm.toric();
        for (std::size_t cone = 0; cone < t.max_cones().size(); ++cone, ++runs) {
            auto r = okounkov_volume_check(t, c.d, default_flag(t, cone), 12);
            bool ok = r.holds() && r.containment.size() == 10;
            for (const auto& l : r.levels) ok = ok && (!l.integral || l.scaled_hull_volume == r.toric_volume);
            o.require(ok, std::string(c.model) + " D=" + to_string(c.d) + " cone " + std::to_string(cone));
        }
    }
    auto f1t = load_model("F1-toric");
    auto f1 = load_model("F1");
    auto r = okounkov_volume_check(f1t.toric(), v({0, 1, 0, 1}), default_flag(f1t.toric()), 12);
    Rat surface = surface_volume(f1.surface(), v({1, 1}));
    o.require(r.toric_volume == 1 && surface == 1 && r.holds(), "F1 H+E volume");
    o.detail << runs << " divisor/flag runs at m = 1..12; F1 H+E volume " << to_string(r.toric_volume)
             << ", surface " << to_string(surface);
}

void brunn_minkowski_suite(Outcome& o) {
    Sampler s(kSeed + 8);
    std::size_t homothetic = 0, equal = 0;
    for (int i = 0; i < 200; ++i) {
        const std::size_t dim = i < 100 ? 2 : 3;
        LatticePolytope p1 = random_polytope(dim, s);
        const bool constructed = i % 5 == 0;
        LatticePolytope p2;
        if (constructed) {
            QVec shift(dim);
            for (auto& x : shift) x = s.rational(-3, 3, 2);
            p2 = p1.scaled(s.rational(1, 4, 3)).translated(shift);
            ++homothetic;
        } else {
            p2 = random_polytope(dim, s);
        }
        const unsigned d = static_cast<unsigned>(dim);
        RootSum lhs = RootSum::root(polytope_volume(minkowski_sum(p1, p2)), d);
        RootSum rhs = RootSum::root(polytope_volume(p1), d) + RootSum::root(polytope_volume(p2), d);
        Ordering ord = certified_compare(lhs, rhs);
        equal += ord == Ordering::equal;
        o.require(ord != Ordering::less && (ord == Ordering::equal) == constructed,
                  "sample " + std::to_string(i) + " dim " + std::to_string(dim));
    }
    o.detail << "200 polytopes (100 polygons, 100 3-polytopes), " << homothetic << " homothetic, " << equal << " EQUAL";
}

void bplus_suite(Outcome& o) {
    auto lm = load_model("F1");
    const auto& m = lm.surface();
    QVec d = v({2, 1});
    auto b = augmented_base_divisorial(m, d);
    QVec e = v({0, 1});
    bool locus = b.support.size() == 1 && m.psef_generators()[b.support[0]] == e;
    Rat vol = surface_volume(m, d);
    Rat vol_e = surface_volume(m, d + e);
    Rat vol_f = surface_volume(m, d + v({1, -1}));
    o.require(locus, "support of B+ for 2H+E");
    o.require(vol == 4 && vol_e == 4, "volume unchanged by adding E");
    o.require(vol_f > vol, "volume grows off the locus");
    o.detail << "B+(2H+E) = {E}; vol " << to_string(vol) << ", vol(+E) " << to_string(vol_e) << ", vol(+(H-E)) "
             << to_string(vol_f);
}

std::string capture(const std::string& command) {
    std::string out;
    FILE* pipe = ::popen(command.c_str(), "r");
    if (!pipe) return out;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    ::pclose(pipe);
    return out;
}

void cli_suite(Outcome& o, const std::string& cli) {
    std::size_t compared = 0;
    if (cli.empty()) {
        o.require(false, "no CLI path given (--cli)");
    } else {
        for (const std::string args : {"minkowski-report dP6 --count 10 --seed 11", "decompose F2 --count 10 --seed 3",
                                       "okounkov F1-toric --d 0,1,0,1 --m-max 6", "minkowski-report P3-toric --count 4"}) {
            const std::string cmd = "\"" + cli + "\" " + args;
            std::string a = capture(cmd), b = capture(cmd);
            o.require(!a.empty() && a == b, "not byte-identical: " + args);
            ++compared;
        }
    }
    Sampler s(kSeed + 10);
    const std::vector<std::string> models{"F0", "F1", "F2", "dP6", "P2"};
    for (int i = 0; i < 50; ++i) {
        auto lm = load_model(models[static_cast<std::size_t>(i) % models.size()]);
        const auto& m = lm.surface();
        RunArgs a;
        a.d = random_big_surface(m, s);
        a.d1 = a.d;
        a.d2 = random_big_surface(m, s);
        const auto& names = command_names();
        std::string cmd = names[static_cast<std::size_t>(i) % names.size()];
        if (cmd == "okounkov") cmd = "minkowski-report";
        auto r = run_command(cmd, lm, a);
        std::string text = render_report(r, Format::json);
        auto back = parse_report(text);
        o.require(back == r && render_report(back, Format::json) == text, cmd + " round trip");
    }
    o.detail << compared << " CLI invocations run twice, 50 report round trips";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"divcalc acceptance run"};
    std::string cli;
    std::vector<int> only;
    app.add_option("--cli", cli, "path to the divcalc executable");
    app.add_option("--only", only, "criteria to run");
    CLI11_PARSE(app, argc, argv);

    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
        {"Zariski decomposition invariants", zariski_suite},
        {"Khovanskii-Teissier inequalities", kt_suite},
        {"equality characterizations agree", equality_suite},
        {"Diskant inequality", diskant_suite},
        {"inradius/outradius chain", radii_suite},
        {"toric and surface backends agree", cross_backend_suite},
        {"Okounkov bodies of toric surfaces", okounkov_suite},
        {"Brunn-Minkowski for polytopes", brunn_minkowski_suite},
        {"augmented base locus on F1", bplus_suite},
        {"CLI determinism and report round trips", [&](Outcome& o) { cli_suite(o, cli); }},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i) + 1;
        if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
        Outcome o;
        auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        o.require(secs < kSuiteSeconds, "exceeded the time budget");
        std::printf("[%s] %2d %-40s %6.2fs  %s\n", o.pass ? "PASS" : "FAIL", id, criteria[i].first.c_str(), secs,
                    o.detail.str().c_str());
        for (const auto& f : o.failures) std::printf("       failed: %s\n", f.c_str());
        failed += !o.pass;
    }
    std::fflush(stdout);
    return failed == 0 ? 0 : 1;
}
