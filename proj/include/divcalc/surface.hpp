#pragma once

#include <optional>
#include <string>
#include <vector>

#include "divcalc/error.hpp"
#include "divcalc/matrix.hpp"

namespace divcalc {

/// Raw fields of a surface presentation, before validation.
struct SurfaceData {
    std::string name;
    QMatrix gram;                      // intersection form on N^1, integral and symmetric
    std::vector<QVec> psef_generators; // must include every negative curve
    QVec ample;
    std::vector<std::string> labels;   // optional, one per basis vector
};

/// A smooth projective surface presented through its Néron–Severi lattice and
/// a finite generator list for the pseudo-effective cone. Immutable; the
/// constructor validates every invariant and throws ValidationError listing
/// all violations.
class SurfaceModel {
public:
    explicit SurfaceModel(SurfaceData data);

    /// All invariant violations of `data`; empty when valid.
    static std::vector<Issue> validate(const SurfaceData& data);

    const std::string& name() const noexcept { return d_.name; }
    std::size_t rank() const noexcept { return d_.gram.rows(); }
    const QMatrix& gram() const noexcept { return d_.gram; }
    const std::vector<QVec>& psef_generators() const noexcept { return d_.psef_generators; }
    const QVec& ample() const noexcept { return d_.ample; }
    const std::vector<std::string>& labels() const noexcept { return d_.labels; }
    const SurfaceData& data() const noexcept { return d_; }

    /// Label for generator i: the basis label if the generator is a basis
    /// vector, otherwise a linear expression in the labels.
    std::string generator_label(std::size_t i) const;

    Rat intersect(const QVec& a, const QVec& b) const;

private:
    SurfaceData d_;
};

struct NegativeComponent {
    std::size_t generator;  // index into psef_generators
    Rat coefficient;        // > 0
};

/// D = P + Σ cᵢ Γᵢ with P nef, P·Γᵢ = 0 and the Γᵢ Gram block negative definite.
struct ZariskiPair {
    QVec positive;
    std::vector<NegativeComponent> negative;  // sorted by generator index
    QMatrix support_gram;                      // Gram matrix of the N-support
    std::vector<Rat> generator_pairings;       // P·gᵢ for every psef generator

    QVec negative_class(const SurfaceModel& m) const;
};

bool is_pseudo_effective(const SurfaceModel& m, const QVec& d);
bool is_nef(const SurfaceModel& m, const QVec& d);
bool is_big(const SurfaceModel& m, const QVec& d);

/// Zariski (= σ-) decomposition. Throws "not-pseudo-effective" or
/// "model-violation".
ZariskiPair zariski_decompose(const SurfaceModel& m, const QVec& d);

/// vol(D) = P·P for pseudo-effective D, 0 otherwise.
Rat surface_volume(const SurfaceModel& m, const QVec& d);

/// ⟨D1·D2⟩ = P(D1)·P(D2) for big D1, D2.
Rat positive_product_surface(const SurfaceModel& m, const QVec& d1, const QVec& d2);

struct SlopeCertificate {
    Rat slope;
    /// Linear functional y with y·g ≥ 0 on every generator, y·P(D2) ≥ 1 and
    /// y·P(D1) = slope; it vanishes on P(D1) − slope·P(D2).
    QVec functional;
};

/// Largest s with P(D1) − s·P(D2) pseudo-effective.
SlopeCertificate slope_surface(const SurfaceModel& m, const QVec& d1, const QVec& d2);

struct BaseLocusSample {
    Rat epsilon;
    std::vector<NegativeComponent> negative;
};

struct AugmentedBaseLocus {
    std::vector<std::size_t> support;  // generator indices
    std::vector<BaseLocusSample> samples;
};

/// Divisorial augmented base locus Supp N(D − ε·ample) for small ε, located
/// by halving ε until two consecutive supports agree and every coefficient
/// stays positive along the line through the two samples.
AugmentedBaseLocus augmented_base_divisorial(const SurfaceModel& m, const QVec& d);

}  // namespace divcalc
