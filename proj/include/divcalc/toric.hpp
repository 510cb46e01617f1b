#pragma once

#include <string>
#include <vector>

#include "divcalc/error.hpp"
#include "divcalc/polytope.hpp"

namespace divcalc {

struct ToricData {
    std::string name;
    std::size_t dim = 0;
    std::vector<IntVec> rays;                     // primitive
    std::vector<std::vector<std::size_t>> max_cones;  // ray indices
    std::vector<std::string> labels;              // optional, one per ray
};

/// Smooth complete fan. Validated at construction: primitive rays, unimodular
/// maximal cones, every codimension-one face shared by exactly two maximal
/// cones, and a point-location sample that lands in exactly one open cone.
class ToricModel {
public:
    explicit ToricModel(ToricData data);
    static std::vector<Issue> validate(const ToricData& data);

    const std::string& name() const noexcept { return d_.name; }
    std::size_t dim() const noexcept { return d_.dim; }
    std::size_t num_rays() const noexcept { return d_.rays.size(); }
    const std::vector<IntVec>& rays() const noexcept { return d_.rays; }
    const std::vector<std::vector<std::size_t>>& max_cones() const noexcept { return d_.max_cones; }
    const std::vector<std::string>& labels() const noexcept { return d_.labels; }
    const ToricData& data() const noexcept { return d_; }
    std::string ray_label(std::size_t i) const;

private:
    ToricData d_;
};

/// Σ a_ρ D_ρ, one coefficient per ray.
using ToricDivisor = QVec;

/// P_D = {u : ⟨u, v_ρ⟩ + a_ρ ≥ 0 for all ρ}
LatticePolytope divisor_polytope(const ToricModel& t, const ToricDivisor& d);

/// d! · vol(P_D)
Rat toric_volume(const ToricModel& t, const ToricDivisor& d);

/// The character m_σ with ⟨m_σ, v_ρ⟩ = −a_ρ for the rays of maximal cone σ.
QVec cone_character(const ToricModel& t, const ToricDivisor& d, std::size_t cone);

bool is_nef_toric(const ToricModel& t, const ToricDivisor& d);
bool is_ample_toric(const ToricModel& t, const ToricDivisor& d);
bool is_big_toric(const ToricModel& t, const ToricDivisor& d);

struct SigmaValue {
    Rat value;
    QVec minimizer;  // a vertex of P_D attaining it
};

/// σ_{D_ρ}(D) = min over P_D of ⟨u, v_ρ⟩ + a_ρ. Throws "empty-polytope".
SigmaValue sigma_toric(const ToricModel& t, const ToricDivisor& d, std::size_t ray);

/// D − Σ σ_ρ(D)·D_ρ
ToricDivisor p_sigma_toric(const ToricModel& t, const ToricDivisor& d);

/// s_0..s_d with s_i = (D1^i · D2^(d−i)) read off the volume polynomial
/// vol(t1·P1 + t2·P2). Both divisors must be nef ("not-nef").
std::vector<Rat> mixed_volume_sequence(const ToricModel& t, const ToricDivisor& d1, const ToricDivisor& d2);

/// Largest s with D1 − s·D2 linearly equivalent to an effective divisor
/// (exact LP over s and the translating character).
Rat slope_toric(const ToricModel& t, const ToricDivisor& d1, const ToricDivisor& d2);

/// A nonnegative ample divisor with integer coefficients.
ToricDivisor effective_ample(const ToricModel& t);

}  // namespace divcalc
