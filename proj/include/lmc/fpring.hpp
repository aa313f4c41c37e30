#pragma once

// Exact arithmetic over prime fields F_p and over truncated graded
// polynomial rings F_p[g]/(g^{T+1}), plus the bigraded tensor product of
// two such rings. Everything here is immutable value semantics.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "lmc/error.hpp"

namespace lmc {

using Residue = std::uint32_t;

bool is_prime(std::uint64_t n);

/// Residue class in F_p.
class FpScalar {
public:
    FpScalar(Residue p, std::uint64_t value);

    Residue modulus() const { return p_; }
    Residue value() const { return value_; }
    bool is_zero() const { return value_ == 0; }

    friend FpScalar operator+(FpScalar a, FpScalar b);
    friend FpScalar operator-(FpScalar a, FpScalar b);
    friend FpScalar operator*(FpScalar a, FpScalar b);
    FpScalar operator-() const;
    friend bool operator==(FpScalar a, FpScalar b) = default;

private:
    static void check_same(FpScalar a, FpScalar b);
    Residue p_;
    Residue value_;
};

FpScalar fp_inv(FpScalar a);

/// C(n, r) mod p by Lucas' theorem (digitwise in base p).
FpScalar binom_mod_p(std::uint64_t n, std::uint64_t r, Residue p);

namespace detail {
inline Residue add_mod(Residue a, Residue b, Residue p) {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Residue>(s >= p ? s - p : s);
}
inline Residue sub_mod(Residue a, Residue b, Residue p) {
    return a >= b ? a - b : static_cast<Residue>(std::uint64_t{a} + p - b);
}
inline Residue mul_mod(Residue a, Residue b, Residue p) {
    return static_cast<Residue>(std::uint64_t{a} * b % p);
}
Residue inv_mod(Residue a, Residue p);
} // namespace detail

/// Presentation of F_p[g]/(g^{T+1}) with deg g = generator_degree.
struct RingSpec {
    Residue p = 2;
    int generator_degree = 1;
    int truncation = 0; ///< largest surviving exponent T

    /// Validating constructor: p prime, generator_degree >= 1, T >= 0.
    static RingSpec make(Residue p, int generator_degree, int truncation);

    int top_degree() const { return truncation * generator_degree; }
    friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

/// Element of a truncated graded polynomial ring in canonical sparse form.
class GradedPoly {
public:
    using Terms = std::map<int, Residue>;

    explicit GradedPoly(RingSpec spec) : spec_(spec) {}
    GradedPoly(RingSpec spec, const Terms& terms);

    static GradedPoly zero(RingSpec spec) { return GradedPoly(spec); }
    static GradedPoly one(RingSpec spec) { return monomial(spec, 0, 1); }
    /// c * g^e; silently zero when e > T.
    static GradedPoly monomial(RingSpec spec, int exponent, std::uint64_t coeff = 1);

    const RingSpec& spec() const { return spec_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    FpScalar coefficient(int exponent) const;
    FpScalar constant_term() const { return coefficient(0); }

    /// Single-exponent slice.
    GradedPoly homogeneous_part(int exponent) const;
    bool is_homogeneous(int exponent) const;
    /// Largest exponent with a nonzero coefficient, -1 for zero.
    int max_exponent() const;

    GradedPoly operator-() const;
    friend GradedPoly operator+(const GradedPoly& a, const GradedPoly& b);
    friend GradedPoly operator-(const GradedPoly& a, const GradedPoly& b);
    friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);
    GradedPoly scaled(Residue c) const;
    friend bool operator==(const GradedPoly&, const GradedPoly&) = default;

    /// "1 + t + 2*t^3" style rendering; "0" for zero.
    std::string to_string(std::string_view var) const;
    /// Variable name implied by the generator degree: t (1), x (2), g otherwise.
    std::string to_string() const;

private:
    void insert(int exponent, Residue c);

    RingSpec spec_;
    Terms terms_;
};

GradedPoly poly_mul(const GradedPoly& a, const GradedPoly& b);
GradedPoly poly_inv(const GradedPoly& a);
GradedPoly poly_pow(const GradedPoly& a, std::uint64_t n);

std::string default_variable(const RingSpec& spec);

/// Parses "1 + t + 2*t^3" (any single-letter variable, integer
/// coefficients reduced mod p, optional '-' signs) into the given ring.
GradedPoly parse_poly(std::string_view text, RingSpec spec);

/// Element of R ⊗ S for two truncated graded rings over the same F_p.
class BigradedPoly {
public:
    using Exponents = std::pair<int, int>;
    using Terms = std::map<Exponents, Residue>;

    BigradedPoly(RingSpec left, RingSpec right);

    static BigradedPoly zero(RingSpec left, RingSpec right) { return {left, right}; }
    static BigradedPoly one(RingSpec left, RingSpec right);
    /// a ⊗ b.
    static BigradedPoly tensor(const GradedPoly& a, const GradedPoly& b);

    const RingSpec& left_spec() const { return left_; }
    const RingSpec& right_spec() const { return right_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    FpScalar coefficient(int left_exp, int right_exp) const;

    /// Collapses a bigraded element with a trivial (T = 0) right factor
    /// back to the left ring. Throws StructuralError otherwise.
    GradedPoly to_left() const;

    BigradedPoly operator-() const;
    friend BigradedPoly operator+(const BigradedPoly& a, const BigradedPoly& b);
    friend BigradedPoly operator-(const BigradedPoly& a, const BigradedPoly& b);
    friend BigradedPoly operator*(const BigradedPoly& a, const BigradedPoly& b);
    friend bool operator==(const BigradedPoly&, const BigradedPoly&) = default;

    std::string to_string(std::string_view left_var, std::string_view right_var) const;

private:
    void check_compatible(const BigradedPoly& other) const;
    void insert(int left_exp, int right_exp, Residue c);

    RingSpec left_;
    RingSpec right_;
    Terms terms_;
};

} // namespace lmc
