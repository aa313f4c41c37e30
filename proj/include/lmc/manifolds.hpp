#pragma once

// Built-in manifolds with their total Stiefel–Whitney / Chern classes,
// dual (inverse) classes, and ingestion of custom manifold descriptions.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lmc/fpring.hpp"

namespace lmc {

enum class ClassKind {
    StiefelWhitney, ///< class index i sits in cohomological degree i
    Chern,          ///< class index i sits in cohomological degree 2i
};

inline int class_unit_degree(ClassKind kind) { return kind == ClassKind::Chern ? 2 : 1; }

/// Total characteristic class 1 + c_1 + c_2 + ... in a truncated ring.
/// Stored as the sum; components are recovered by cohomological degree.
class TotalClass {
public:
    /// Validates class_0 = 1 and that every term sits at a degree that is a
    /// multiple of the class unit degree.
    TotalClass(GradedPoly total, ClassKind kind);

    static TotalClass trivial(RingSpec ring, ClassKind kind);
    /// Builds from explicit components; component i must be homogeneous of
    /// cohomological degree i * unit.
    static TotalClass from_components(RingSpec ring, ClassKind kind, const std::vector<GradedPoly>& components);

    const GradedPoly& total() const { return total_; }
    const RingSpec& ring() const { return total_.spec(); }
    ClassKind kind() const { return kind_; }

    /// class_i; zero for i < 0 and for i past the truncation.
    GradedPoly component(int index) const;
    /// Exponent of the generator at which class_i lives, or nullopt when
    /// that degree is not a multiple of the generator degree.
    std::optional<int> exponent_of(int index) const;
    /// Largest index with a possibly nonzero class.
    int max_index() const;
    /// Largest i with class_i != 0 (0 when the class is trivial).
    int top_nonzero_index() const;
    std::vector<GradedPoly> components() const;
    bool is_trivial() const { return total_.is_one(); }

    friend bool operator==(const TotalClass&, const TotalClass&) = default;

private:
    GradedPoly total_;
    ClassKind kind_;
};

TotalClass operator*(const TotalClass& a, const TotalClass& b);

/// w(RP^m) = (1+t)^{m+1} in F_2[t]/t^{m+1}.
TotalClass total_sw_rp(int m);
/// c(CP^m) = (1+x)^{m+1} mod p in F_p[x]/x^{m+1}, p an odd prime.
TotalClass total_chern_cp(int m, Residue p);
/// w(CP^m) of the underlying real manifold: the mod 2 reduction of c(CP^m).
TotalClass total_sw_cp(int m);
/// Formal inverse of a total class in its truncated ring.
TotalClass dual_total_class(const TotalClass& w);

enum class ManifoldKind { RealProjective, ComplexProjective, Sphere, Euclidean, Parallelizable, Custom };

std::string_view kind_name(ManifoldKind kind);

struct ManifoldSpec {
    ManifoldKind kind = ManifoldKind::Custom;
    int parameter = 0; ///< m for projective spaces, n otherwise
    int real_dimension = 0;
    std::optional<int> complex_dimension;
    RingSpec ring;
    TotalClass total_class;
    /// Label used in reports ("rp:13", "custom", ...).
    std::string label;

    bool compact() const { return kind != ManifoldKind::Euclidean; }
};

ManifoldSpec make_real_projective(int m);
/// The ring carries mod-2 coefficients; `tangent_class` re-instantiates it
/// mod k on the Chern path.
ManifoldSpec make_complex_projective(int m);
ManifoldSpec make_sphere(int n);
/// R^n.
ManifoldSpec make_euclidean(int n);
/// C^n viewed as a complex manifold (real dimension 2n).
ManifoldSpec make_complex_euclidean(int n);
ManifoldSpec make_parallelizable(int n);

/// Resolves "rp:<m>", "cp:<m>", "sphere:<n>", "euclidean:<n>",
/// "complex-euclidean:<n>", "parallelizable:<n>".
ManifoldSpec parse_manifold_shorthand(std::string_view text);

/// Parses the JSON manifold document (custom kind or {"builtin": "rp:13"}).
ManifoldSpec parse_manifold_spec(std::string_view document);

/// Parses a JSON total-class array ([[i, [[e, c], ...]], ...] or
/// [[i, "poly"], ...]) into a class over `ring`.
TotalClass parse_total_class_json(std::string_view document, RingSpec ring, ClassKind kind);

/// Total tangent class of `spec` in the coefficient field used by `kind`:
/// mod 2 Stiefel–Whitney classes, or Chern classes mod `p`.
TotalClass tangent_class(const ManifoldSpec& spec, ClassKind kind, Residue p);

} // namespace lmc
