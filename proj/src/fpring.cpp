#include "lmc/fpring.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace lmc {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace detail {

Residue inv_mod(Residue a, Residue p) {
    if (a % p == 0) throw DivisionByZero("inverse of zero in F_" + std::to_string(p));
    // extended Euclid on signed 64-bit values
    std::int64_t r0 = p, r1 = a % p, s0 = 0, s1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = s0 - q * s1;
        s0 = s1;
        s1 = tmp;
    }
    std::int64_t inv = s0 % static_cast<std::int64_t>(p);
    if (inv < 0) inv += p;
    return static_cast<Residue>(inv);
}

} // namespace detail

// ---------------------------------------------------------------- FpScalar

FpScalar::FpScalar(Residue p, std::uint64_t value) : p_(p), value_(0) {
    if (!is_prime(p)) throw InvalidModulus("modulus " + std::to_string(p) + " is not prime");
    value_ = static_cast<Residue>(value % p);
}

void FpScalar::check_same(FpScalar a, FpScalar b) {
    if (a.p_ != b.p_)
        throw IncompatibleRing("F_" + std::to_string(a.p_) + " vs F_" + std::to_string(b.p_));
}

FpScalar operator+(FpScalar a, FpScalar b) {
    FpScalar::check_same(a, b);
    a.value_ = detail::add_mod(a.value_, b.value_, a.p_);
    return a;
}

FpScalar operator-(FpScalar a, FpScalar b) {
    FpScalar::check_same(a, b);
    a.value_ = detail::sub_mod(a.value_, b.value_, a.p_);
    return a;
}

FpScalar operator*(FpScalar a, FpScalar b) {
    FpScalar::check_same(a, b);
    a.value_ = detail::mul_mod(a.value_, b.value_, a.p_);
    return a;
}

FpScalar FpScalar::operator-() const {
    FpScalar r = *this;
    r.value_ = detail::sub_mod(0, value_, p_);
    return r;
}

FpScalar fp_inv(FpScalar a) {
    return FpScalar(a.modulus(), detail::inv_mod(a.value(), a.modulus()));
}

FpScalar binom_mod_p(std::uint64_t n, std::uint64_t r, Residue p) {
    if (!is_prime(p)) throw InvalidModulus("modulus " + std::to_string(p) + " is not prime");
    if (r > n) return FpScalar(p, 0);
    Residue result = 1;
    while (n > 0 || r > 0) {
        auto nd = static_cast<Residue>(n % p);
        auto rd = static_cast<Residue>(r % p);
        if (rd > nd) return FpScalar(p, 0);
        // small binomial C(nd, rd) with nd < p, via multiplicative formula mod p
        Residue num = 1, den = 1;
        for (Residue i = 0; i < rd; ++i) {
            num = detail::mul_mod(num, nd - i, p);
            den = detail::mul_mod(den, i + 1, p);
        }
        result = detail::mul_mod(result, detail::mul_mod(num, detail::inv_mod(den, p), p), p);
        n /= p;
        r /= p;
    }
    return FpScalar(p, result);
}

// ---------------------------------------------------------------- RingSpec

RingSpec RingSpec::make(Residue p, int generator_degree, int truncation) {
    if (!is_prime(p)) throw InvalidModulus("modulus " + std::to_string(p) + " is not prime");
    if (generator_degree < 1)
        throw DomainError("generator degree must be positive, got " + std::to_string(generator_degree));
    if (truncation < 0)
        throw DomainError("truncation exponent must be nonnegative, got " + std::to_string(truncation));
    return RingSpec{p, generator_degree, truncation};
}

std::string default_variable(const RingSpec& spec) {
    switch (spec.generator_degree) {
    case 1: return "t";
    case 2: return "x";
    default: return "g";
    }
}

// -------------------------------------------------------------- GradedPoly

GradedPoly::GradedPoly(RingSpec spec, const Terms& terms) : spec_(spec) {
    for (auto [e, c] : terms) {
        if (e < 0) throw DomainError("negative exponent " + std::to_string(e));
        insert(e, c % spec_.p);
    }
}

GradedPoly GradedPoly::monomial(RingSpec spec, int exponent, std::uint64_t coeff) {
    if (exponent < 0) throw DomainError("negative exponent " + std::to_string(exponent));
    GradedPoly r(spec);
    r.insert(exponent, static_cast<Residue>(coeff % spec.p));
    return r;
}

void GradedPoly::insert(int exponent, Residue c) {
    if (exponent > spec_.truncation || c == 0) return;
    auto [it, fresh] = terms_.try_emplace(exponent, c);
    if (!fresh) {
        it->second = detail::add_mod(it->second, c, spec_.p);
        if (it->second == 0) terms_.erase(it);
    }
}

bool GradedPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

FpScalar GradedPoly::coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return FpScalar(spec_.p, it == terms_.end() ? 0 : it->second);
}

GradedPoly GradedPoly::homogeneous_part(int exponent) const {
    GradedPoly r(spec_);
    if (auto it = terms_.find(exponent); it != terms_.end()) r.terms_.emplace(*it);
    return r;
}

bool GradedPoly::is_homogeneous(int exponent) const {
    for (const auto& [e, c] : terms_)
        if (e != exponent) return false;
    return true;
}

int GradedPoly::max_exponent() const {
    return terms_.empty() ? -1 : terms_.rbegin()->first;
}

GradedPoly GradedPoly::operator-() const {
    GradedPoly r(spec_);
    for (auto [e, c] : terms_) r.terms_.emplace(e, detail::sub_mod(0, c, spec_.p));
    return r;
}

GradedPoly GradedPoly::scaled(Residue c) const {
    GradedPoly r(spec_);
    c %= spec_.p;
    if (c == 0) return r;
    for (auto [e, v] : terms_) r.terms_.emplace(e, detail::mul_mod(v, c, spec_.p));
    return r;
}

static void require_same_ring(const RingSpec& a, const RingSpec& b) {
    if (!(a == b))
        throw IncompatibleRing("ring mismatch: F_" + std::to_string(a.p) + "[deg " +
                               std::to_string(a.generator_degree) + "]/T=" + std::to_string(a.truncation) +
                               " vs F_" + std::to_string(b.p) + "[deg " + std::to_string(b.generator_degree) +
                               "]/T=" + std::to_string(b.truncation));
}

GradedPoly operator+(const GradedPoly& a, const GradedPoly& b) {
    require_same_ring(a.spec_, b.spec_);
    GradedPoly r = a;
    for (auto [e, c] : b.terms_) r.insert(e, c);
    return r;
}

GradedPoly operator-(const GradedPoly& a, const GradedPoly& b) {
    return a + (-b);
}

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
    require_same_ring(a.spec_, b.spec_);
    GradedPoly r(a.spec_);
    const Residue p = a.spec_.p;
    const int T = a.spec_.truncation;
    for (auto [ea, ca] : a.terms_) {
        if (ea > T) break;
        for (auto [eb, cb] : b.terms_) {
            if (ea + eb > T) break;
            r.insert(ea + eb, detail::mul_mod(ca, cb, p));
        }
    }
    return r;
}

GradedPoly poly_mul(const GradedPoly& a, const GradedPoly& b) { return a * b; }

GradedPoly poly_inv(const GradedPoly& a) {
    const RingSpec& spec = a.spec();
    const Residue p = spec.p;
    const Residue c0 = a.constant_term().value();
    if (c0 == 0) throw NonInvertible("element with zero constant term is not invertible");
    const Residue c0_inv = detail::inv_mod(c0, p);

    // b_0 = 1/a_0, b_n = -(1/a_0) * sum_{i=1..n} a_i b_{n-i}
    std::vector<Residue> b(static_cast<std::size_t>(spec.truncation) + 1, 0);
    b[0] = c0_inv;
    for (int n = 1; n <= spec.truncation; ++n) {
        Residue acc = 0;
        for (auto [e, c] : a.terms()) {
            if (e == 0) continue;
            if (e > n) break;
            acc = detail::add_mod(acc, detail::mul_mod(c, b[static_cast<std::size_t>(n - e)], p), p);
        }
        b[static_cast<std::size_t>(n)] = detail::mul_mod(detail::sub_mod(0, acc, p), c0_inv, p);
    }
    GradedPoly::Terms terms;
    for (int e = 0; e <= spec.truncation; ++e)
        if (b[static_cast<std::size_t>(e)] != 0) terms.emplace(e, b[static_cast<std::size_t>(e)]);
    return GradedPoly(spec, terms);
}

GradedPoly poly_pow(const GradedPoly& a, std::uint64_t n) {
    GradedPoly result = GradedPoly::one(a.spec());
    GradedPoly base = a;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return result;
}

std::string GradedPoly::to_string(std::string_view var) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto [e, c] : terms_) {
        if (!out.empty()) out += " + ";
        if (e == 0) {
            out += std::to_string(c);
            continue;
        }
        if (c != 1) out += std::to_string(c) + "*";
        out += var;
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

std::string GradedPoly::to_string() const { return to_string(default_variable(spec_)); }

// ------------------------------------------------------------------ parser

GradedPoly parse_poly(std::string_view text, RingSpec spec) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw ParseError("empty polynomial");

    auto fail = [&](const std::string& why) -> ParseError {
        return ParseError("cannot parse polynomial '" + std::string(text) + "': " + why);
    };
    auto read_int = [&](std::size_t& i) {
        std::size_t start = i;
        std::uint64_t v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + static_cast<std::uint64_t>(s[i] - '0');
            if (v > (1ULL << 40)) throw fail("integer too large");
            ++i;
        }
        if (i == start) throw fail("expected integer at position " + std::to_string(start));
        return v;
    };

    GradedPoly result(spec);
    char var = 0;
    std::size_t i = 0;
    bool first = true;
    while (i < s.size()) {
        bool negative = false;
        if (s[i] == '+' || s[i] == '-') {
            negative = s[i] == '-';
            ++i;
        } else if (!first) {
            throw fail("expected '+' or '-' at position " + std::to_string(i));
        }
        first = false;
        if (i >= s.size()) throw fail("dangling sign");

        std::uint64_t coeff = 1;
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            coeff = read_int(i);
            have_coeff = true;
            if (i < s.size() && s[i] == '*') {
                ++i;
                if (i >= s.size() || !std::isalpha(static_cast<unsigned char>(s[i])))
                    throw fail("expected variable after '*'");
            }
        }
        int exponent = 0;
        if (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) {
            if (var == 0) var = s[i];
            else if (s[i] != var) throw fail("mixed variables '" + std::string(1, var) + "' and '" + s[i] + "'");
            ++i;
            exponent = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                auto e = read_int(i);
                exponent = static_cast<int>(e);
            }
        } else if (!have_coeff) {
            throw fail("expected term at position " + std::to_string(i));
        }
        if (exponent > spec.truncation)
            throw fail("exponent " + std::to_string(exponent) + " exceeds truncation " +
                       std::to_string(spec.truncation));
        auto term = GradedPoly::monomial(spec, exponent, coeff);
        result = negative ? result - term : result + term;
    }
    return result;
}

// ------------------------------------------------------------ BigradedPoly

BigradedPoly::BigradedPoly(RingSpec left, RingSpec right) : left_(left), right_(right) {
    if (left.p != right.p)
        throw IncompatibleRing("tensor factors over F_" + std::to_string(left.p) + " and F_" +
                               std::to_string(right.p));
}

BigradedPoly BigradedPoly::one(RingSpec left, RingSpec right) {
    BigradedPoly r(left, right);
    r.insert(0, 0, 1);
    return r;
}

BigradedPoly BigradedPoly::tensor(const GradedPoly& a, const GradedPoly& b) {
    BigradedPoly r(a.spec(), b.spec());
    const Residue p = a.spec().p;
    for (auto [ea, ca] : a.terms())
        for (auto [eb, cb] : b.terms()) r.insert(ea, eb, detail::mul_mod(ca, cb, p));
    return r;
}

void BigradedPoly::insert(int left_exp, int right_exp, Residue c) {
    if (c == 0 || left_exp > left_.truncation || right_exp > right_.truncation) return;
    auto [it, fresh] = terms_.try_emplace({left_exp, right_exp}, c);
    if (!fresh) {
        it->second = detail::add_mod(it->second, c, left_.p);
        if (it->second == 0) terms_.erase(it);
    }
}

FpScalar BigradedPoly::coefficient(int left_exp, int right_exp) const {
    auto it = terms_.find({left_exp, right_exp});
    return FpScalar(left_.p, it == terms_.end() ? 0 : it->second);
}

GradedPoly BigradedPoly::to_left() const {
    if (right_.truncation != 0) throw StructuralError("right tensor factor is not trivial");
    GradedPoly::Terms t;
    for (const auto& [ex, c] : terms_) t.emplace(ex.first, c);
    return GradedPoly(left_, t);
}

void BigradedPoly::check_compatible(const BigradedPoly& other) const {
    require_same_ring(left_, other.left_);
    require_same_ring(right_, other.right_);
}

BigradedPoly BigradedPoly::operator-() const {
    BigradedPoly r(left_, right_);
    for (const auto& [ex, c] : terms_) r.terms_.emplace(ex, detail::sub_mod(0, c, left_.p));
    return r;
}

BigradedPoly operator+(const BigradedPoly& a, const BigradedPoly& b) {
    a.check_compatible(b);
    BigradedPoly r = a;
    for (const auto& [ex, c] : b.terms_) r.insert(ex.first, ex.second, c);
    return r;
}

BigradedPoly operator-(const BigradedPoly& a, const BigradedPoly& b) { return a + (-b); }

BigradedPoly operator*(const BigradedPoly& a, const BigradedPoly& b) {
    a.check_compatible(b);
    BigradedPoly r(a.left_, a.right_);
    const Residue p = a.left_.p;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.insert(ea.first + eb.first, ea.second + eb.second, detail::mul_mod(ca, cb, p));
    return r;
}

std::string BigradedPoly::to_string(std::string_view left_var, std::string_view right_var) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [ex, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << c << "*" << left_var << "^" << ex.first << "⊗" << right_var << "^" << ex.second;
    }
    return out.str();
}

} // namespace lmc
