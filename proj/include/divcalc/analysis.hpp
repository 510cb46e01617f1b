#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "divcalc/root_sum.hpp"
#include "divcalc/surface.hpp"
#include "divcalc/toric.hpp"

namespace divcalc {

/// Uniform view of the two divisor engines for the Minkowski analysis.
class Backend {
public:
    virtual ~Backend() = default;

    virtual std::string tag() const = 0;  // "surface" | "toric-nef"
    virtual std::string model_name() const = 0;
    virtual std::size_t dimension() const = 0;
    virtual std::size_t class_length() const = 0;

    virtual bool is_big(const QVec& d) const = 0;
    virtual Rat volume(const QVec& d) const = 0;
    /// s_0..s_d; validates the backend's preconditions.
    virtual std::vector<Rat> s_sequence(const QVec& d1, const QVec& d2) const = 0;
    /// Largest s with ⟨D1⟩ − s⟨D2⟩ pseudo-effective.
    virtual Rat slope(const QVec& d1, const QVec& d2) const = 0;
    /// λ with ⟨D1⟩ = λ⟨D2⟩, if the positive parts are proportional.
    virtual std::optional<Rat> proportionality(const QVec& d1, const QVec& d2) const = 0;
};

class SurfaceBackend final : public Backend {
public:
    explicit SurfaceBackend(const SurfaceModel& model) : m_(model) {}
    std::string tag() const override { return "surface"; }
    std::string model_name() const override { return m_.name(); }
    std::size_t dimension() const override { return 2; }
    std::size_t class_length() const override { return m_.rank(); }
    bool is_big(const QVec& d) const override;
    Rat volume(const QVec& d) const override;
    std::vector<Rat> s_sequence(const QVec& d1, const QVec& d2) const override;
    Rat slope(const QVec& d1, const QVec& d2) const override;
    std::optional<Rat> proportionality(const QVec& d1, const QVec& d2) const override;

private:
    const SurfaceModel& m_;
};

/// Toric backend restricted to nef divisors, where positive products are
/// ordinary intersection numbers (mixed volumes).
class ToricNefBackend final : public Backend {
public:
    explicit ToricNefBackend(const ToricModel& model) : t_(model) {}
    std::string tag() const override { return "toric-nef"; }
    std::string model_name() const override { return t_.name(); }
    std::size_t dimension() const override { return t_.dim(); }
    std::size_t class_length() const override { return t_.num_rays(); }
    bool is_big(const QVec& d) const override;
    Rat volume(const QVec& d) const override;
    std::vector<Rat> s_sequence(const QVec& d1, const QVec& d2) const override;
    Rat slope(const QVec& d1, const QVec& d2) const override;
    std::optional<Rat> proportionality(const QVec& d1, const QVec& d2) const override;

private:
    const ToricModel& t_;
};

struct SSequence {
    std::size_t d = 0;
    std::vector<Rat> values;  // s_0..s_d
    std::string backend;
    QVec d1, d2;
};

SSequence s_sequence(const Backend& b, const QVec& d1, const QVec& d2);

struct KtInequality {
    int item = 0;         // 1, 2 or 3
    std::size_t index = 0;
    Rat lhs, rhs, margin; // margin = lhs − rhs ≥ 0
    bool holds = false;
};

struct KtReport {
    std::vector<KtInequality> inequalities;
    RootSum sum_root;    // vol(D1+D2)^(1/d)
    RootSum roots_sum;   // vol(D1)^(1/d) + vol(D2)^(1/d)
    Comparison item4{Ordering::equal, {}};
    bool holds() const;
};

/// Items 1–3 exactly; item 4 via certified comparison against vol(D1+D2).
KtReport kt_check(const SSequence& s, const Rat& volume_of_sum);

struct EqualityReport {
    bool equality = false;
    std::optional<Rat> ratio;  // ⟨D1⟩ = ratio·⟨D2⟩
    bool ratio_power_matches = true;  // ratio^d = vol(D1)/vol(D2)
    bool cond1 = false, cond2 = false, cond3 = false, cond4 = false;
    Rat cond4_margin;  // s_{d-1}^d − s_0 s_d^{d-1}
    Ordering cond5 = Ordering::greater;
    bool consistent() const;
};

EqualityReport equality_certificate(const Backend& b, const QVec& d1, const QVec& d2);

struct DiskantReport {
    RootSum lhs;  // s_{d-1}^{d/(d-1)} − s_d·s_0^{1/(d-1)}
    RootSum rhs;  // [s_{d-1}^{1/(d-1)} − s·s_0^{1/(d-1)}]^d
    Rat slope;
    Comparison bracket{Ordering::equal, {}};  // s_{d-1}^{1/(d-1)} vs s·s_0^{1/(d-1)}
    Comparison verdict{Ordering::equal, {}};  // lhs vs rhs
    bool holds() const { return bracket.order != Ordering::less && verdict.order != Ordering::less; }
};

DiskantReport diskant_check(const Backend& b, const QVec& d1, const QVec& d2);
DiskantReport diskant_from(const SSequence& s, const Rat& slope);

struct ChainEntry {
    std::string name;
    std::optional<RootSum> exact;  // available for d = 2 and for the rational middle terms
    IntervalR enclosure;
};

struct RadiiReport {
    std::vector<ChainEntry> chain;  // lower, r, s_d/s_{d-1}, s_1/s_0, R, upper
    std::vector<bool> links;        // five certified inequalities
    Rat inradius, outradius;
    bool holds() const;
};

RadiiReport radii_report(const Backend& b, const QVec& d1, const QVec& d2);
RadiiReport radii_from(const SSequence& s, const Rat& inradius, const Rat& reverse_slope);

struct MinkowskiReport {
    SSequence s;
    KtReport kt;
    EqualityReport equality;
    DiskantReport diskant;
    RadiiReport radii;
    Rat slope;
    Rat volume_of_sum;
    bool certified() const;
};

MinkowskiReport minkowski_report(const Backend& b, const QVec& d1, const QVec& d2);

/// Note recorded in report metadata about how the slope is defined.
extern const char* const kSlopeDefinitionNote;

}  // namespace divcalc
