#pragma once

// Determinant criteria for local k-multiplicity of maps M -> N:
// u_s (Stiefel–Whitney, k a power of 2) and v_s (Chern mod k, k an odd
// prime), the dual-class fast paths, and the projective-space corollaries.

#include <optional>
#include <string>
#include <vector>

#include "lmc/determinant.hpp"
#include "lmc/manifolds.hpp"

namespace lmc {

enum class CriterionPath { Theorem11, Theorem12, Theorem13, Theorem14 };
enum class Verdict { CriterionHolds, Inconclusive };

std::string path_name(CriterionPath path);
std::string verdict_name(Verdict verdict);

/// Total class of f*τN ⊕ (−τM) with the dimensions it is evaluated against.
/// Dimensions are real on the Stiefel–Whitney path, complex on the Chern path.
struct StableDifferenceClass {
    TotalClass total;
    int source_dim = 0;
    int target_dim = 0;
    unsigned k = 2;
};

struct CriterionReport {
    Verdict verdict = Verdict::Inconclusive;
    std::optional<int> witness_s;
    std::optional<GradedPoly> witness_class;
    CriterionPath path = CriterionPath::Theorem11;
    int searched_s_min = 0;
    int searched_s_max = -1; ///< -1 when no s was examined
    std::vector<std::string> notes;

    bool holds() const { return verdict == Verdict::CriterionHolds; }
};

bool is_power_of_two(unsigned k);
/// Throws InvalidK unless k is a power of 2 >= 2 (SW) or an odd prime (Chern).
void validate_k(unsigned k, ClassKind kind);

/// Exact determinant of a square matrix of ring elements sharing one ring.
GradedPoly ring_determinant(const Matrix<GradedPoly>& entries);

/// det(c_{d-i+j})_{1<=i,j<=size}, with c_i = 0 outside [0, max_index].
GradedPoly toeplitz_class_determinant(const TotalClass& cls, int d, int size);

/// Builds the stable difference class for the given path. The pullback
/// w(f*τN) (or c(f*τN)) defaults to 1 for parallelizable-type targets.
StableDifferenceClass stable_difference(const ManifoldSpec& source, const ManifoldSpec& target, unsigned k,
                                        ClassKind kind, const std::optional<TotalClass>& pullback = std::nullopt);

GradedPoly u_s(const StableDifferenceClass& cls, int s);
GradedPoly v_s(const StableDifferenceClass& cls, int s);

CriterionReport check_local_multiplicity(const ManifoldSpec& source, const ManifoldSpec& target, unsigned k,
                                         ClassKind kind,
                                         const std::optional<TotalClass>& pullback = std::nullopt);

CriterionReport theorem3_fastpath(const ManifoldSpec& source, int target_dim, unsigned k);
CriterionReport theorem4_fastpath(const ManifoldSpec& source, int target_complex_dim, unsigned k);

enum class Corollary { Rp_Euclidean, Rp_Sphere, Cp_Euclidean_Sw, Cp_Complex_Chern };

/// "1.5" .. "1.8" <-> Corollary.
Corollary parse_corollary(const std::string& id);
std::string corollary_id(Corollary c);

struct CorollaryInstance {
    ManifoldSpec source;
    ManifoldSpec target;
    unsigned k;
    ClassKind kind;
};

/// The first failed hypothesis, spelled as an inequality, or nullopt.
std::optional<std::string> corollary_violation(Corollary c, long a, long ell, unsigned k);
/// Throws HypothesisViolation when the hypotheses fail.
CorollaryInstance corollary_instance(Corollary c, long a, long ell, unsigned k);
/// Instantiates the corollary and runs the general checker on it.
CriterionReport corollary_validate(Corollary c, long a, long ell, unsigned k);

} // namespace lmc
