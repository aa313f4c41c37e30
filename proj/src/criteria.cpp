#include "lmc/criteria.hpp"

#include <limits>
#include <stdexcept>

namespace lmc {

std::string path_name(CriterionPath path) {
    switch (path) {
    case CriterionPath::Theorem11: return "theorem_1_1";
    case CriterionPath::Theorem12: return "theorem_1_2";
    case CriterionPath::Theorem13: return "theorem_1_3";
    case CriterionPath::Theorem14: return "theorem_1_4";
    }
    return "unknown";
}

std::string verdict_name(Verdict verdict) {
    return verdict == Verdict::CriterionHolds ? "criterion_holds" : "inconclusive";
}

bool is_power_of_two(unsigned k) { return k >= 2 && (k & (k - 1)) == 0; }

void validate_k(unsigned k, ClassKind kind) {
    if (kind == ClassKind::StiefelWhitney) {
        if (!is_power_of_two(k)) throw InvalidK("k must be a power of 2 (k >= 2) on the Stiefel-Whitney path, got " + std::to_string(k));
    } else if (k == 2 || !is_prime(k)) {
        throw InvalidK("k must be an odd prime on the Chern path, got " + std::to_string(k));
    }
}

GradedPoly ring_determinant(const Matrix<GradedPoly>& entries) {
    if (entries.empty()) throw StructuralError("empty matrix carries no ring; use an explicit identity");
    const RingSpec& ring = entries.front().empty() ? throw StructuralError("matrix has an empty row")
                                                   : entries.front().front().spec();
    for (const auto& row : entries) {
        if (row.size() != entries.size()) throw StructuralError("determinant of a non-square matrix");
        for (const auto& e : row)
            if (!(e.spec() == ring)) throw StructuralError("matrix entries live in different rings");
    }
    return cofactor_determinant(entries, GradedPoly::one(ring));
}

GradedPoly toeplitz_class_determinant(const TotalClass& cls, int d, int size) {
    const RingSpec& ring = cls.ring();
    if (size <= 0) return GradedPoly::one(ring);
    // components indexed by i in [d - size + 1, d + size - 1]
    Matrix<GradedPoly> m(static_cast<std::size_t>(size),
                         std::vector<GradedPoly>(static_cast<std::size_t>(size), GradedPoly::zero(ring)));
    for (int i = 1; i <= size; ++i)
        for (int j = 1; j <= size; ++j) m[i - 1][j - 1] = cls.component(d - i + j);
    return ring_determinant(m);
}

static int dimension_for(const ManifoldSpec& spec, ClassKind kind, const char* role) {
    if (kind == ClassKind::StiefelWhitney) return spec.real_dimension;
    if (!spec.complex_dimension)
        throw SpecError(std::string(role) + " '" + spec.label + "' has no complex dimension (Chern path)");
    return *spec.complex_dimension;
}

StableDifferenceClass stable_difference(const ManifoldSpec& source, const ManifoldSpec& target, unsigned k,
                                        ClassKind kind, const std::optional<TotalClass>& pullback) {
    validate_k(k, kind);
    if (!source.compact()) throw SpecError("source '" + source.label + "' must be a compact manifold");
    const int m = dimension_for(source, kind, "source");
    const int n = dimension_for(target, kind, "target");

    const TotalClass tangent = tangent_class(source, kind, k);
    const TotalClass dual = dual_total_class(tangent);
    if (!pullback) {
        const bool trivially_framed = target.kind == ManifoldKind::Euclidean || target.kind == ManifoldKind::Sphere ||
                                      target.kind == ManifoldKind::Parallelizable ||
                                      target.kind == ManifoldKind::Custom;
        if (!trivially_framed)
            throw SpecError("target '" + target.label + "' is not parallelizable; supply the pullback class explicitly");
        return {dual, m, n, k};
    }
    if (!(pullback->ring() == tangent.ring()) || pullback->kind() != kind)
        throw IncompatibleRing("pullback class must live in the source cohomology ring of this path");
    return {*pullback * dual, m, n, k};
}

static GradedPoly criterion_determinant(const StableDifferenceClass& cls, int s) {
    if (s < 0) throw DomainError("s must be nonnegative");
    const int d = cls.target_dim - cls.source_dim + 1 + s;
    const int size = static_cast<int>(cls.k) - 1;
    GradedPoly det = toeplitz_class_determinant(cls.total, d, size);
    if (d >= 1 && !det.is_zero()) {
        auto e = cls.total.exponent_of(d * size);
        if (!e || !det.is_homogeneous(*e))
            throw std::logic_error("determinant class is not homogeneous of index " + std::to_string(d * size));
    }
    return det;
}

GradedPoly u_s(const StableDifferenceClass& cls, int s) {
    if (cls.total.kind() != ClassKind::StiefelWhitney) throw DomainError("u_s needs Stiefel-Whitney classes");
    return criterion_determinant(cls, s);
}

GradedPoly v_s(const StableDifferenceClass& cls, int s) {
    if (cls.total.kind() != ClassKind::Chern) throw DomainError("v_s needs Chern classes");
    return criterion_determinant(cls, s);
}

static const char* kSufficientOnly =
    "the criterion is sufficient only; an inconclusive result does not rule out local k-multiplicity";

CriterionReport check_local_multiplicity(const ManifoldSpec& source, const ManifoldSpec& target, unsigned k,
                                         ClassKind kind, const std::optional<TotalClass>& pullback) {
    const StableDifferenceClass cls = stable_difference(source, target, k, kind, pullback);
    CriterionReport report;
    report.path = kind == ClassKind::StiefelWhitney ? CriterionPath::Theorem11 : CriterionPath::Theorem12;

    const int base = cls.target_dim - cls.source_dim + 1;
    const int size = static_cast<int>(k) - 1;
    const int top = cls.total.max_index();
    // stop once the class index d(k-1) passes the top degree
    for (int s = 0;; ++s) {
        const int d = base + s;
        if (d >= 1 && static_cast<long>(d) * size > top) break;
        report.searched_s_max = s;
        GradedPoly det = criterion_determinant(cls, s);
        if (!det.is_zero()) {
            report.verdict = Verdict::CriterionHolds;
            report.witness_s = s;
            report.witness_class = det;
            if (d == 0)
                report.notes.emplace_back("d = 0: the determinant is unitriangular, so the criterion holds "
                                          "because dim N < dim M");
            return report;
        }
    }
    report.notes.emplace_back(kSufficientOnly);
    if (report.searched_s_max < 0)
        report.notes.emplace_back("no s >= 0 places the determinant at or below the top degree of the source");
    return report;
}

// --------------------------------------------------------------- fast path

static CriterionReport dual_class_fastpath(const ManifoldSpec& source, int target_dim, unsigned k, ClassKind kind) {
    validate_k(k, kind);
    if (!source.compact()) throw SpecError("source '" + source.label + "' must be a compact manifold");
    const int m = dimension_for(source, kind, "source");
    const TotalClass dual = dual_total_class(tangent_class(source, kind, k));

    CriterionReport report;
    report.path = kind == ClassKind::StiefelWhitney ? CriterionPath::Theorem13 : CriterionPath::Theorem14;
    if (dual.is_trivial()) {
        report.notes.emplace_back("dual class is 1: no positive-degree dual class, fast path does not apply");
        report.notes.emplace_back(kSufficientOnly);
        return report;
    }
    const int s = dual.top_nonzero_index();
    report.searched_s_min = s;
    report.searched_s_max = s;
    const int threshold = target_dim - m + 1;
    if (s < threshold) {
        report.notes.emplace_back("top dual class index " + std::to_string(s) + " is below dim N - dim M + 1 = " +
                                  std::to_string(threshold));
        report.notes.emplace_back(kSufficientOnly);
        return report;
    }
    GradedPoly power = poly_pow(dual.component(s), k - 1);
    if (power.is_zero()) {
        report.notes.emplace_back("top dual class raised to k-1 vanishes");
        report.notes.emplace_back(kSufficientOnly);
        return report;
    }
    // general determinant at d = s, upper triangle vanishes
    GradedPoly general = toeplitz_class_determinant(dual, s, static_cast<int>(k) - 1);
    if (!(general == power))
        throw std::logic_error("fast path disagrees with the general determinant: " + power.to_string() + " vs " +
                               general.to_string());
    report.verdict = Verdict::CriterionHolds;
    report.witness_s = s;
    report.witness_class = power;
    report.notes.emplace_back("agrees with the general determinant at s = " + std::to_string(s - threshold));
    return report;
}

CriterionReport theorem3_fastpath(const ManifoldSpec& source, int target_dim, unsigned k) {
    return dual_class_fastpath(source, target_dim, k, ClassKind::StiefelWhitney);
}

CriterionReport theorem4_fastpath(const ManifoldSpec& source, int target_complex_dim, unsigned k) {
    return dual_class_fastpath(source, target_complex_dim, k, ClassKind::Chern);
}

// -------------------------------------------------------------- corollaries

Corollary parse_corollary(const std::string& id) {
    if (id == "1.5") return Corollary::Rp_Euclidean;
    if (id == "1.6") return Corollary::Rp_Sphere;
    if (id == "1.7") return Corollary::Cp_Euclidean_Sw;
    if (id == "1.8") return Corollary::Cp_Complex_Chern;
    throw ParseError("unknown corollary '" + id + "' (expected 1.5, 1.6, 1.7 or 1.8)");
}

std::string corollary_id(Corollary c) {
    switch (c) {
    case Corollary::Rp_Euclidean: return "1.5";
    case Corollary::Rp_Sphere: return "1.6";
    case Corollary::Cp_Euclidean_Sw: return "1.7";
    case Corollary::Cp_Complex_Chern: return "1.8";
    }
    return "?";
}

namespace {

constexpr long kMaxDimension = 1L << 20;

// base^exp, or -1 once it exceeds kMaxDimension
long bounded_power(long base, long exp) {
    long r = 1;
    for (long i = 0; i < exp; ++i) {
        r *= base;
        if (r > kMaxDimension) return -1;
    }
    return r;
}

} // namespace

std::optional<std::string> corollary_violation(Corollary c, long a, long ell, unsigned k) {
    if (a < 1) return "a >= 1";
    if (ell < 1) return "ell >= 1";
    const bool chern = c == Corollary::Cp_Complex_Chern;
    if (chern) {
        if (k == 2 || !is_prime(k)) return "k odd prime";
    } else if (!is_power_of_two(k)) {
        return "k power of 2";
    }
    const long K = static_cast<long>(k);
    const long q = bounded_power(chern ? K : 2, ell);
    if (q < 0) return chern ? "k^ell <= 2^20" : "2^ell <= 2^20";
    switch (c) {
    case Corollary::Rp_Euclidean:
    case Corollary::Rp_Sphere:
        if (K * (a + 1) > q - 1) return "k(a+1) <= 2^ell-1";
        break;
    case Corollary::Cp_Euclidean_Sw:
        if (K * (a - 1) > q - 1) return "k(a-1) <= 2^ell-1";
        if (q - a < 1) return "2^ell-a >= 1";
        break;
    case Corollary::Cp_Complex_Chern:
        if (a < 2 || 2 * a > q + 1) return "2 <= a <= (k^ell+1)/2";
        if (K * (a - 1) > q - 1) return "k(a-1) <= k^ell-1";
        break;
    }
    return std::nullopt;
}

CorollaryInstance corollary_instance(Corollary c, long a, long ell, unsigned k) {
    if (auto v = corollary_violation(c, a, ell, k))
        throw HypothesisViolation("corollary " + corollary_id(c) + " hypothesis fails: " + *v);
    const long two_l = 1L << ell;
    switch (c) {
    case Corollary::Rp_Euclidean:
        return {make_real_projective(static_cast<int>(two_l - 2 - a)), make_euclidean(static_cast<int>(two_l - 2)), k,
                ClassKind::StiefelWhitney};
    case Corollary::Rp_Sphere:
        return {make_real_projective(static_cast<int>(two_l - 2 - a)), make_sphere(static_cast<int>(two_l - 2)), k,
                ClassKind::StiefelWhitney};
    case Corollary::Cp_Euclidean_Sw:
        return {make_complex_projective(static_cast<int>(two_l - a)), make_euclidean(static_cast<int>(2 * two_l - 3)),
                k, ClassKind::StiefelWhitney};
    case Corollary::Cp_Complex_Chern: {
        const long q = bounded_power(static_cast<long>(k), ell);
        return {make_complex_projective(static_cast<int>(q - a)), make_complex_euclidean(static_cast<int>(q - 2)), k,
                ClassKind::Chern};
    }
    }
    throw std::logic_error("unhandled corollary");
}

CriterionReport corollary_validate(Corollary c, long a, long ell, unsigned k) {
    const CorollaryInstance inst = corollary_instance(c, a, ell, k);
    CriterionReport report = check_local_multiplicity(inst.source, inst.target, inst.k, inst.kind);
    if (!report.holds())
        throw std::logic_error("corollary " + corollary_id(c) + " guarantees a verdict but the criterion is silent for " +
                               inst.source.label + " -> " + inst.target.label);
    return report;
}

} // namespace lmc
