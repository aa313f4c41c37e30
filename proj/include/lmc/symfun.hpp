#pragma once

// Symmetric functions over F_p: partitions, Schur polynomials through the
// Nägelsbach–Kostka determinant in elementary symmetric generators and
// through semistandard tableaux, the dual Cauchy identity, and the top
// characteristic class of a tensor product of bundles.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lmc/determinant.hpp"
#include "lmc/manifolds.hpp"

namespace lmc {

/// Weakly decreasing sequence of positive parts (zeros are dropped).
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;
    /// λ_i for 1-based i, 0 past the end.
    int part(int i) const { return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0; }
    int largest() const { return parts_.empty() ? 0 : parts_.front(); }

    std::string to_string() const;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

Partition conjugate(const Partition& lambda);
/// (height - λ_rows, ..., height - λ_1); DomainError if λ leaves the box.
Partition box_complement(const Partition& lambda, int rows, int height);
/// All partitions with at most `rows` parts, each at most `height`.
std::vector<Partition> partitions_in_box(int rows, int height);
/// (width^count).
Partition rectangle(int width, int count);

/// Sparse polynomial over F_p in a fixed number of variables.
class MultiPoly {
public:
    using Exponent = std::vector<std::uint8_t>;
    using Terms = std::map<Exponent, Residue>;

    MultiPoly(Residue p, int nvars) : p_(p), nvars_(nvars) {}

    static MultiPoly constant(Residue p, int nvars, Residue c);
    static MultiPoly variable(Residue p, int nvars, int index);

    Residue modulus() const { return p_; }
    int nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Residue coefficient(const Exponent& e) const;
    /// Total degree with variable i weighted by weights[i]; every monomial
    /// must agree, otherwise nullopt. Zero polynomial -> nullopt.
    std::optional<int> weighted_degree(const std::vector<int>& weights) const;

    MultiPoly operator-() const;
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

    /// Applies a permutation of variables: variable i becomes perm[i].
    MultiPoly permuted(const std::vector<int>& perm) const;

    void add_term(const Exponent& e, Residue c);
    std::string to_string(const std::function<std::string(int)>& name) const;

private:
    void check(const MultiPoly& other) const;

    Residue p_;
    int nvars_;
    Terms terms_;
};

/// Polynomial in explicit root variables a_1..a_A, b_1..b_B (in that order).
struct SymPoly {
    MultiPoly poly;
    int a_vars = 0;
    int b_vars = 0;

    std::string to_string() const;
    friend bool operator==(const SymPoly&, const SymPoly&) = default;
};

/// Polynomial in abstract generators σ_1..σ_A, σ'_1..σ'_B (in that order).
struct GeneratorPoly {
    MultiPoly poly;
    int a_gens = 0;
    int b_gens = 0;

    std::string to_string() const;
    friend bool operator==(const GeneratorPoly&, const GeneratorPoly&) = default;
};

/// det(σ_{λ'_i - i + j})_{1<=i,j<=t}, t = length(λ'); `sigma(i)` must return
/// 1 at i = 0 and 0 for i < 0 or i beyond the generator count.
template <class Ring>
Ring nagelsbach_kostka(const Partition& lambda, const std::function<Ring(int)>& sigma, const Ring& one) {
    const Partition conj = conjugate(lambda);
    const int t = conj.length();
    if (t == 0) return one;
    Matrix<Ring> m(static_cast<std::size_t>(t), std::vector<Ring>(static_cast<std::size_t>(t), one));
    for (int i = 1; i <= t; ++i)
        for (int j = 1; j <= t; ++j) m[i - 1][j - 1] = sigma(conj.part(i) - i + j);
    return cofactor_determinant(m, one);
}

/// Schur polynomial s_λ in σ_1..σ_n via the Nägelsbach–Kostka determinant.
GeneratorPoly schur_via_nk(const Partition& lambda, int num_e_generators, Residue p);

/// s_λ(a_1..a_n) as an explicit monomial sum over semistandard tableaux.
SymPoly schur_monomial_oracle(const Partition& lambda, int num_vars, Residue p);

/// e_i(x_offset .. x_{offset+count-1}) inside a ring of `nvars` variables.
MultiPoly elementary_symmetric(int i, int offset, int count, int nvars, Residue p);

/// Substitutes generator i := values[i] (values sized to the generator count).
MultiPoly substitute(const MultiPoly& generators, const std::vector<MultiPoly>& values);

/// Turns a generator polynomial into a polynomial in its roots.
SymPoly expand_in_roots(const GeneratorPoly& g);

/// ∏_{i<=A} ∏_{j<=B} (a_i + b_j).
SymPoly dual_cauchy_lhs(int A, int B, Residue p);
/// Σ_λ s_λ(a) s_{λ̂'}(b) over the A×B box, expanded in roots.
SymPoly dual_cauchy_rhs(int A, int B, Residue p);
SymPoly dual_cauchy_rhs_serial(int A, int B, Residue p);
bool dual_cauchy_check(int A, int B, Residue p);

/// Σ_λ NK_λ(σ) NK_{λ̂'}(σ') as a polynomial in the generators.
GeneratorPoly dual_cauchy_generators(int A, int B, Residue p);
/// Part of a generator polynomial whose σ' exponent vector is (0,..,0,t);
/// returned as a polynomial in σ_1..σ_A only.
GeneratorPoly pure_top_power_coefficient(const GeneratorPoly& g, int t);

/// Degree-(A·B) part of ∏(1 + a_i + b_j) with σ_i := eta_i, σ'_j := xi_j,
/// computed through the dual Cauchy expansion in R ⊗ S.
BigradedPoly tensor_top_class(const TotalClass& eta, const TotalClass& xi, int A, int B);
BigradedPoly tensor_top_class_serial(const TotalClass& eta, const TotalClass& xi, int A, int B);

struct EulerCrosscheck {
    BigradedPoly via_tensor;      ///< top class of η ⊗ ξ through the expansion
    BigradedPoly via_determinants; ///< Σ_t v_t ⊗ x^t
    bool equal() const { return via_tensor == via_determinants; }
};

/// Both evaluations of the mod-k Euler class of η ⊗ ξ over M × Conf/S_k,
/// with ξ modeled by c(ξ) = 1 + x, x^{m+m'} = 0.
EulerCrosscheck chern_euler_sides(const ManifoldSpec& source, int target_complex_dim, unsigned k, int m_prime);
bool chern_euler_crosscheck(const ManifoldSpec& source, int target_complex_dim, unsigned k, int m_prime);

} // namespace lmc
