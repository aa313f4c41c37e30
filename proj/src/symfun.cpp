#include "lmc/symfun.hpp"

#include "lmc/criteria.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lmc {

// ---------------------------------------------------------------- Partition

Partition::Partition(std::vector<int> parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0) throw DomainError("negative part in partition");
        if (i > 0 && parts[i] > parts[i - 1]) throw DomainError("partition parts must be weakly decreasing");
    }
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    parts_ = std::move(parts);
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> conj(static_cast<std::size_t>(lambda.largest()), 0);
    for (int part : lambda.parts())
        for (int j = 0; j < part; ++j) ++conj[static_cast<std::size_t>(j)];
    return Partition(std::move(conj));
}

Partition box_complement(const Partition& lambda, int rows, int height) {
    if (rows < 0 || height < 0) throw DomainError("box dimensions must be nonnegative");
    if (lambda.length() > rows || lambda.largest() > height)
        throw DomainError("partition " + lambda.to_string() + " does not fit in a " + std::to_string(rows) + "x" +
                          std::to_string(height) + " box");
    std::vector<int> out;
    for (int i = rows; i >= 1; --i) out.push_back(height - lambda.part(i));
    return Partition(std::move(out));
}

static void box_recurse(int rows_left, int max_part, std::vector<int>& current, std::vector<Partition>& out) {
    out.emplace_back(current);
    if (rows_left == 0) return;
    for (int v = 1; v <= max_part; ++v) {
        current.push_back(v);
        box_recurse(rows_left - 1, v, current, out);
        current.pop_back();
    }
}

std::vector<Partition> partitions_in_box(int rows, int height) {
    std::vector<Partition> out;
    std::vector<int> current;
    box_recurse(rows, height, current, out);
    std::sort(out.begin(), out.end());
    return out;
}

Partition rectangle(int width, int count) {
    return Partition(std::vector<int>(static_cast<std::size_t>(std::max(count, 0)), width));
}

// ---------------------------------------------------------------- MultiPoly

MultiPoly MultiPoly::constant(Residue p, int nvars, Residue c) {
    MultiPoly r(p, nvars);
    r.add_term(Exponent(static_cast<std::size_t>(nvars), 0), c % p);
    return r;
}

MultiPoly MultiPoly::variable(Residue p, int nvars, int index) {
    MultiPoly r(p, nvars);
    Exponent e(static_cast<std::size_t>(nvars), 0);
    e.at(static_cast<std::size_t>(index)) = 1;
    r.add_term(e, 1);
    return r;
}

void MultiPoly::add_term(const Exponent& e, Residue c) {
    c %= p_;
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
        it->second = detail::add_mod(it->second, c, p_);
        if (it->second == 0) terms_.erase(it);
    }
}

Residue MultiPoly::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

std::optional<int> MultiPoly::weighted_degree(const std::vector<int>& weights) const {
    std::optional<int> degree;
    for (const auto& [e, c] : terms_) {
        int d = 0;
        for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * weights.at(i);
        if (degree && *degree != d) return std::nullopt;
        degree = d;
    }
    return degree;
}

void MultiPoly::check(const MultiPoly& other) const {
    if (p_ != other.p_ || nvars_ != other.nvars_) throw IncompatibleRing("polynomial rings differ");
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(p_, nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, detail::sub_mod(0, c, p_));
    return r;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    a.check(b);
    MultiPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check(b);
    MultiPoly r(a.p_, a.nvars_);
    MultiPoly::Exponent e(static_cast<std::size_t>(a.nvars_), 0);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) {
                const int s = ea[i] + eb[i];
                if (s > 255) throw DomainError("exponent overflow in MultiPoly");
                e[i] = static_cast<std::uint8_t>(s);
            }
            r.add_term(e, detail::mul_mod(ca, cb, a.p_));
        }
    return r;
}

MultiPoly MultiPoly::permuted(const std::vector<int>& perm) const {
    MultiPoly r(p_, nvars_);
    for (const auto& [e, c] : terms_) {
        Exponent f(e.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) f[static_cast<std::size_t>(perm[i])] = e[i];
        r.add_term(f, c);
    }
    return r;
}

std::string MultiPoly::to_string(const std::function<std::string(int)>& name) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        bool any = false;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            if (any) mono += "*";
            any = true;
            mono += name(static_cast<int>(i));
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (!any) out << c;
        else if (c == 1) out << mono;
        else out << c << "*" << mono;
    }
    return out.str();
}

std::string SymPoly::to_string() const {
    const int A = a_vars;
    return poly.to_string([A](int i) { return i < A ? "a" + std::to_string(i + 1) : "b" + std::to_string(i - A + 1); });
}

std::string GeneratorPoly::to_string() const {
    const int A = a_gens;
    return poly.to_string([A](int i) { return i < A ? "e" + std::to_string(i + 1) : "f" + std::to_string(i - A + 1); });
}

// ------------------------------------------------------------ Schur functions

GeneratorPoly schur_via_nk(const Partition& lambda, int num_e_generators, Residue p) {
    const int n = num_e_generators;
    const MultiPoly one = MultiPoly::constant(p, n, 1);
    std::function<MultiPoly(int)> sigma = [&](int i) {
        if (i == 0) return one;
        if (i < 0 || i > n) return MultiPoly(p, n);
        return MultiPoly::variable(p, n, i - 1);
    };
    return {nagelsbach_kostka(lambda, sigma, one), n, 0};
}

namespace {

struct TableauFiller {
    const Partition& shape;
    int num_vars;
    Residue p;
    std::vector<std::vector<int>> cells; // cells[row][col]
    MultiPoly result;
    MultiPoly::Exponent exponent;

    void fill(int row, int col) {
        if (row == shape.length()) {
            result.add_term(exponent, 1);
            return;
        }
        if (col == shape.part(row + 1)) {
            fill(row + 1, 0);
            return;
        }
        int lo = 1;
        if (col > 0) lo = std::max(lo, cells[row][col - 1]);
        if (row > 0) lo = std::max(lo, cells[row - 1][col] + 1);
        for (int v = lo; v <= num_vars; ++v) {
            cells[row][col] = v;
            ++exponent[static_cast<std::size_t>(v - 1)];
            fill(row, col + 1);
            --exponent[static_cast<std::size_t>(v - 1)];
        }
    }
};

} // namespace

SymPoly schur_monomial_oracle(const Partition& lambda, int num_vars, Residue p) {
    if (num_vars < lambda.length())
        throw DomainError("need at least " + std::to_string(lambda.length()) + " variables for " + lambda.to_string());
    TableauFiller filler{lambda, num_vars, p, {}, MultiPoly(p, num_vars),
                         MultiPoly::Exponent(static_cast<std::size_t>(num_vars), 0)};
    for (int r = 1; r <= lambda.length(); ++r) filler.cells.emplace_back(static_cast<std::size_t>(lambda.part(r)), 0);
    filler.fill(0, 0);
    return {filler.result, num_vars, 0};
}

MultiPoly elementary_symmetric(int i, int offset, int count, int nvars, Residue p) {
    MultiPoly r(p, nvars);
    if (i < 0 || i > count) return r;
    // iterate over i-subsets of the `count` variables
    std::vector<int> pick(static_cast<std::size_t>(i));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        MultiPoly::Exponent e(static_cast<std::size_t>(nvars), 0);
        for (int v : pick) e[static_cast<std::size_t>(offset + v)] = 1;
        r.add_term(e, 1);
        int pos = i - 1;
        while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == count - i + pos) --pos;
        if (pos < 0) break;
        ++pick[static_cast<std::size_t>(pos)];
        for (int q = pos + 1; q < i; ++q) pick[static_cast<std::size_t>(q)] = pick[static_cast<std::size_t>(q - 1)] + 1;
    }
    return r;
}

MultiPoly substitute(const MultiPoly& generators, const std::vector<MultiPoly>& values) {
    if (static_cast<int>(values.size()) != generators.nvars())
        throw StructuralError("substitution needs one value per generator");
    if (values.empty()) {
        throw StructuralError("substitution into a constant needs a target ring");
    }
    const Residue p = generators.modulus();
    const int target_vars = values.front().nvars();
    MultiPoly r(p, target_vars);
    // cache powers per generator
    std::vector<std::vector<MultiPoly>> powers(values.size());
    for (const auto& [e, c] : generators.terms()) {
        MultiPoly term = MultiPoly::constant(p, target_vars, c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            auto& cache = powers[i];
            if (cache.empty()) cache.push_back(MultiPoly::constant(p, target_vars, 1));
            while (cache.size() <= e[i]) cache.push_back(cache.back() * values[i]);
            if (e[i]) term = term * cache[e[i]];
        }
        r = r + term;
    }
    return r;
}

SymPoly expand_in_roots(const GeneratorPoly& g) {
    const int A = g.a_gens, B = g.b_gens;
    const int nvars = A + B;
    const Residue p = g.poly.modulus();
    std::vector<MultiPoly> values;
    for (int i = 1; i <= A; ++i) values.push_back(elementary_symmetric(i, 0, A, nvars, p));
    for (int j = 1; j <= B; ++j) values.push_back(elementary_symmetric(j, A, B, nvars, p));
    if (values.empty()) return {MultiPoly::constant(p, 0, g.poly.coefficient({})), 0, 0};
    return {substitute(g.poly, values), A, B};
}

// ---------------------------------------------------------- dual Cauchy

SymPoly dual_cauchy_lhs(int A, int B, Residue p) {
    const int nvars = A + B;
    MultiPoly r = MultiPoly::constant(p, nvars, 1);
    for (int i = 0; i < A; ++i)
        for (int j = 0; j < B; ++j)
            r = r * (MultiPoly::variable(p, nvars, i) + MultiPoly::variable(p, nvars, A + j));
    return {r, A, B};
}

namespace {

// s_λ(a) · s_{λ̂'}(b) with both Schur factors from Nägelsbach–Kostka
// determinants evaluated on explicit elementary symmetric polynomials.
MultiPoly dual_cauchy_term(const Partition& lambda, int A, int B, Residue p,
                           const std::vector<MultiPoly>& e_a, const std::vector<MultiPoly>& e_b) {
    const int nvars = A + B;
    const MultiPoly one = MultiPoly::constant(p, nvars, 1);
    const MultiPoly zero(p, nvars);
    std::function<MultiPoly(int)> sigma_a = [&](int i) { return i < 0 || i > A ? zero : e_a[static_cast<std::size_t>(i)]; };
    std::function<MultiPoly(int)> sigma_b = [&](int i) { return i < 0 || i > B ? zero : e_b[static_cast<std::size_t>(i)]; };
    const Partition dual = conjugate(box_complement(lambda, A, B));
    MultiPoly left = nagelsbach_kostka(lambda, sigma_a, one);
    if (left.is_zero()) return zero;
    return left * nagelsbach_kostka(dual, sigma_b, one);
}

struct RootTables {
    std::vector<MultiPoly> e_a, e_b;
};

RootTables root_tables(int A, int B, Residue p) {
    RootTables t;
    for (int i = 0; i <= A; ++i) t.e_a.push_back(elementary_symmetric(i, 0, A, A + B, p));
    for (int j = 0; j <= B; ++j) t.e_b.push_back(elementary_symmetric(j, A, B, A + B, p));
    return t;
}

} // namespace

SymPoly dual_cauchy_rhs_serial(int A, int B, Residue p) {
    const RootTables t = root_tables(A, B, p);
    MultiPoly sum(p, A + B);
    for (const Partition& lambda : partitions_in_box(A, B)) sum = sum + dual_cauchy_term(lambda, A, B, p, t.e_a, t.e_b);
    return {sum, A, B};
}

SymPoly dual_cauchy_rhs(int A, int B, Residue p) {
    const RootTables t = root_tables(A, B, p);
    const std::vector<Partition> box = partitions_in_box(A, B);
    std::vector<MultiPoly> terms(box.size(), MultiPoly(p, A + B));
    const auto count = static_cast<long>(box.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i)
        terms[static_cast<std::size_t>(i)] = dual_cauchy_term(box[static_cast<std::size_t>(i)], A, B, p, t.e_a, t.e_b);
    MultiPoly sum(p, A + B);
    for (const auto& term : terms) sum = sum + term;
    return {sum, A, B};
}

bool dual_cauchy_check(int A, int B, Residue p) {
    if (A < 1 || B < 1) throw DomainError("dual Cauchy check needs A, B >= 1");
    return dual_cauchy_lhs(A, B, p) == dual_cauchy_rhs(A, B, p);
}

GeneratorPoly dual_cauchy_generators(int A, int B, Residue p) {
    const int nvars = A + B;
    const MultiPoly one = MultiPoly::constant(p, nvars, 1);
    const MultiPoly zero(p, nvars);
    std::function<MultiPoly(int)> sigma = [&](int i) {
        if (i == 0) return one;
        return i < 0 || i > A ? zero : MultiPoly::variable(p, nvars, i - 1);
    };
    std::function<MultiPoly(int)> sigma_prime = [&](int j) {
        if (j == 0) return one;
        return j < 0 || j > B ? zero : MultiPoly::variable(p, nvars, A + j - 1);
    };
    MultiPoly sum(p, nvars);
    for (const Partition& lambda : partitions_in_box(A, B)) {
        const Partition dual = conjugate(box_complement(lambda, A, B));
        sum = sum + nagelsbach_kostka(lambda, sigma, one) * nagelsbach_kostka(dual, sigma_prime, one);
    }
    return {sum, A, B};
}

GeneratorPoly pure_top_power_coefficient(const GeneratorPoly& g, int t) {
    const int A = g.a_gens, B = g.b_gens;
    MultiPoly r(g.poly.modulus(), A);
    for (const auto& [e, c] : g.poly.terms()) {
        bool match = true;
        for (int j = 0; j < B; ++j) {
            const int want = j == B - 1 ? t : 0;
            if (e[static_cast<std::size_t>(A + j)] != want) {
                match = false;
                break;
            }
        }
        if (!match) continue;
        r.add_term(MultiPoly::Exponent(e.begin(), e.begin() + A), c);
    }
    return {r, A, 0};
}

// -------------------------------------------------- tensor product class

namespace {

struct TensorSides {
    const TotalClass& eta;
    const TotalClass& xi;
    int A, B;

    GradedPoly sigma_eta(int i) const {
        if (i == 0) return GradedPoly::one(eta.ring());
        if (i < 0 || i > A) return GradedPoly::zero(eta.ring());
        return eta.component(i);
    }
    GradedPoly sigma_xi(int j) const {
        if (j == 0) return GradedPoly::one(xi.ring());
        if (j < 0 || j > B) return GradedPoly::zero(xi.ring());
        return xi.component(j);
    }

    BigradedPoly term(const Partition& lambda) const {
        const Partition dual = conjugate(box_complement(lambda, A, B));
        std::function<GradedPoly(int)> fx = [this](int j) { return sigma_xi(j); };
        GradedPoly right = nagelsbach_kostka(dual, fx, GradedPoly::one(xi.ring()));
        if (right.is_zero()) return BigradedPoly::zero(eta.ring(), xi.ring());
        std::function<GradedPoly(int)> fe = [this](int i) { return sigma_eta(i); };
        GradedPoly left = nagelsbach_kostka(lambda, fe, GradedPoly::one(eta.ring()));
        return BigradedPoly::tensor(left, right);
    }
};

void check_tensor_inputs(const TotalClass& eta, const TotalClass& xi, int A, int B) {
    if (A < 0 || B < 0) throw DomainError("root counts must be nonnegative");
    if (eta.ring().p != xi.ring().p)
        throw IncompatibleRing("tensor factors over F_" + std::to_string(eta.ring().p) + " and F_" +
                               std::to_string(xi.ring().p));
}

} // namespace

BigradedPoly tensor_top_class_serial(const TotalClass& eta, const TotalClass& xi, int A, int B) {
    check_tensor_inputs(eta, xi, A, B);
    const TensorSides sides{eta, xi, A, B};
    BigradedPoly sum = BigradedPoly::zero(eta.ring(), xi.ring());
    for (const Partition& lambda : partitions_in_box(A, B)) sum = sum + sides.term(lambda);
    return sum;
}

BigradedPoly tensor_top_class(const TotalClass& eta, const TotalClass& xi, int A, int B) {
    check_tensor_inputs(eta, xi, A, B);
    const TensorSides sides{eta, xi, A, B};
    const std::vector<Partition> box = partitions_in_box(A, B);
    std::vector<BigradedPoly> terms(box.size(), BigradedPoly::zero(eta.ring(), xi.ring()));
    const auto count = static_cast<long>(box.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (long i = 0; i < count; ++i) terms[static_cast<std::size_t>(i)] = sides.term(box[static_cast<std::size_t>(i)]);
    BigradedPoly sum = BigradedPoly::zero(eta.ring(), xi.ring());
    for (const auto& term : terms) sum = sum + term;
    return sum;
}

// ------------------------------------------------ Chern Euler cross-check

EulerCrosscheck chern_euler_sides(const ManifoldSpec& source, int target_complex_dim, unsigned k, int m_prime) {
    if (k == 2 || !is_prime(k)) throw InvalidK("k must be an odd prime, got " + std::to_string(k));
    if (!source.complex_dimension) throw SpecError("source '" + source.label + "' has no complex dimension");
    if (target_complex_dim < 0) throw DomainError("target dimension must be nonnegative");
    const int m = *source.complex_dimension;
    const TotalClass eta = dual_total_class(tangent_class(source, ClassKind::Chern, k));
    if (m_prime < eta.top_nonzero_index())
        throw DomainError("m' = " + std::to_string(m_prime) + " is below the top nonzero dual Chern class index " +
                          std::to_string(eta.top_nonzero_index()));

    const int A = m_prime + target_complex_dim;
    const int B = static_cast<int>(k) - 1;
    // c(ξ) = 1 + x with x = c_{k-1}(ζ) in degree 2(k-1), x^{m+m'} = 0
    const RingSpec conf_ring = RingSpec::make(k, 2 * B, m + m_prime - 1);
    const TotalClass xi(GradedPoly::one(conf_ring) + GradedPoly::monomial(conf_ring, 1), ClassKind::Chern);

    BigradedPoly via_determinants = BigradedPoly::zero(eta.ring(), conf_ring);
    for (int t = 0; t <= A; ++t) {
        GradedPoly v = toeplitz_class_determinant(eta, A - t, B);
        if (v.is_zero()) continue;
        via_determinants = via_determinants + BigradedPoly::tensor(v, GradedPoly::monomial(conf_ring, t));
    }
    return {tensor_top_class(eta, xi, A, B), via_determinants};
}

bool chern_euler_crosscheck(const ManifoldSpec& source, int target_complex_dim, unsigned k, int m_prime) {
    return chern_euler_sides(source, target_complex_dim, k, m_prime).equal();
}

} // namespace lmc
