#include "lmc/manifolds.hpp"

#include <charconv>

#include <nlohmann/json.hpp>

namespace lmc {

// -------------------------------------------------------------- TotalClass

TotalClass::TotalClass(GradedPoly total, ClassKind kind) : total_(std::move(total)), kind_(kind) {
    if (total_.constant_term().value() != 1)
        throw SpecError("class_0 of a total class must be 1, got " + total_.homogeneous_part(0).to_string());
    const int unit = class_unit_degree(kind_);
    const int gd = total_.spec().generator_degree;
    for (const auto& [e, c] : total_.terms())
        if ((e * gd) % unit != 0)
            throw SpecError("term of degree " + std::to_string(e * gd) + " is not a multiple of the class degree " +
                            std::to_string(unit));
}

TotalClass TotalClass::trivial(RingSpec ring, ClassKind kind) { return {GradedPoly::one(ring), kind}; }

TotalClass TotalClass::from_components(RingSpec ring, ClassKind kind, const std::vector<GradedPoly>& components) {
    const int unit = class_unit_degree(kind);
    GradedPoly total(ring);
    for (std::size_t i = 0; i < components.size(); ++i) {
        const GradedPoly& c = components[i];
        if (!(c.spec() == ring)) throw IncompatibleRing("class component lives in a different ring");
        if (c.is_zero()) continue;
        const int degree = static_cast<int>(i) * unit;
        if (degree % ring.generator_degree != 0 || !c.is_homogeneous(degree / ring.generator_degree))
            throw SpecError("class_" + std::to_string(i) + " is not homogeneous of degree " + std::to_string(degree));
        total = total + c;
    }
    return {total, kind};
}

std::optional<int> TotalClass::exponent_of(int index) const {
    if (index < 0) return std::nullopt;
    const int degree = index * class_unit_degree(kind_);
    const int gd = total_.spec().generator_degree;
    if (degree % gd != 0) return std::nullopt;
    return degree / gd;
}

GradedPoly TotalClass::component(int index) const {
    auto e = exponent_of(index);
    if (!e || *e > total_.spec().truncation) return GradedPoly::zero(total_.spec());
    return total_.homogeneous_part(*e);
}

int TotalClass::max_index() const { return total_.spec().top_degree() / class_unit_degree(kind_); }

int TotalClass::top_nonzero_index() const {
    const int e = total_.max_exponent();
    return e * total_.spec().generator_degree / class_unit_degree(kind_);
}

std::vector<GradedPoly> TotalClass::components() const {
    std::vector<GradedPoly> out;
    for (int i = 0; i <= max_index(); ++i) out.push_back(component(i));
    return out;
}

TotalClass operator*(const TotalClass& a, const TotalClass& b) {
    if (a.kind() != b.kind()) throw IncompatibleRing("product of Stiefel–Whitney and Chern classes");
    return {a.total() * b.total(), a.kind()};
}

// ------------------------------------------------------- projective spaces

static TotalClass binomial_class(int m, Residue p, int generator_degree, ClassKind kind) {
    const RingSpec ring = RingSpec::make(p, generator_degree, m);
    GradedPoly::Terms terms;
    for (int i = 0; i <= m; ++i) {
        auto c = binom_mod_p(static_cast<std::uint64_t>(m) + 1, static_cast<std::uint64_t>(i), p);
        if (!c.is_zero()) terms.emplace(i, c.value());
    }
    return {GradedPoly(ring, terms), kind};
}

TotalClass total_sw_rp(int m) {
    if (m < 1) throw DomainError("RP^m needs m >= 1, got " + std::to_string(m));
    return binomial_class(m, 2, 1, ClassKind::StiefelWhitney);
}

TotalClass total_chern_cp(int m, Residue p) {
    if (m < 1) throw DomainError("CP^m needs m >= 1, got " + std::to_string(m));
    if (p == 2 || !is_prime(p)) throw InvalidModulus("Chern classes are reduced mod an odd prime, got " + std::to_string(p));
    return binomial_class(m, p, 2, ClassKind::Chern);
}

TotalClass total_sw_cp(int m) {
    if (m < 1) throw DomainError("CP^m needs m >= 1, got " + std::to_string(m));
    return binomial_class(m, 2, 2, ClassKind::StiefelWhitney);
}

TotalClass dual_total_class(const TotalClass& w) {
    if (w.total().constant_term().value() != 1)
        throw NonInvertible("total class with class_0 != 1");
    return {poly_inv(w.total()), w.kind()};
}

// ---------------------------------------------------------------- registry

std::string_view kind_name(ManifoldKind kind) {
    switch (kind) {
    case ManifoldKind::RealProjective: return "real_projective";
    case ManifoldKind::ComplexProjective: return "complex_projective";
    case ManifoldKind::Sphere: return "sphere";
    case ManifoldKind::Euclidean: return "euclidean";
    case ManifoldKind::Parallelizable: return "parallelizable";
    case ManifoldKind::Custom: return "custom";
    }
    return "unknown";
}

ManifoldSpec make_real_projective(int m) {
    auto w = total_sw_rp(m);
    return ManifoldSpec{.kind = ManifoldKind::RealProjective,
                        .parameter = m,
                        .real_dimension = m,
                        .complex_dimension = std::nullopt,
                        .ring = w.ring(),
                        .total_class = w,
                        .label = "rp:" + std::to_string(m)};
}

ManifoldSpec make_complex_projective(int m) {
    auto w = total_sw_cp(m);
    return ManifoldSpec{.kind = ManifoldKind::ComplexProjective,
                        .parameter = m,
                        .real_dimension = 2 * m,
                        .complex_dimension = m,
                        .ring = w.ring(),
                        .total_class = w,
                        .label = "cp:" + std::to_string(m)};
}

// Cohomology of a closed n-manifold with trivial tangent classes is modeled
// by the fundamental class alone: F_2[g]/g^2, deg g = n.
static ManifoldSpec trivial_manifold(ManifoldKind kind, int n, int top_degree, std::optional<int> complex_dim,
                                     std::string label) {
    if (n < 0) throw DomainError("dimension must be nonnegative, got " + std::to_string(n));
    const RingSpec ring = top_degree > 0 ? RingSpec::make(2, top_degree, 1) : RingSpec::make(2, 1, 0);
    return ManifoldSpec{.kind = kind,
                        .parameter = n,
                        .real_dimension = complex_dim ? 2 * *complex_dim : n,
                        .complex_dimension = complex_dim,
                        .ring = ring,
                        .total_class = TotalClass::trivial(ring, ClassKind::StiefelWhitney),
                        .label = std::move(label)};
}

ManifoldSpec make_sphere(int n) {
    return trivial_manifold(ManifoldKind::Sphere, n, n, std::nullopt, "sphere:" + std::to_string(n));
}

ManifoldSpec make_euclidean(int n) {
    return trivial_manifold(ManifoldKind::Euclidean, n, 0, std::nullopt, "euclidean:" + std::to_string(n));
}

ManifoldSpec make_complex_euclidean(int n) {
    return trivial_manifold(ManifoldKind::Euclidean, n, 0, n, "complex-euclidean:" + std::to_string(n));
}

ManifoldSpec make_parallelizable(int n) {
    return trivial_manifold(ManifoldKind::Parallelizable, n, n, std::nullopt, "parallelizable:" + std::to_string(n));
}

ManifoldSpec parse_manifold_shorthand(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) throw ParseError("manifold shorthand needs '<kind>:<n>', got '" + std::string(text) + "'");
    const auto prefix = text.substr(0, colon);
    const auto digits = text.substr(colon + 1);
    int n = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
        throw ParseError("bad dimension in manifold shorthand '" + std::string(text) + "'");
    if (prefix == "rp") return make_real_projective(n);
    if (prefix == "cp") return make_complex_projective(n);
    if (prefix == "sphere") return make_sphere(n);
    if (prefix == "euclidean") return make_euclidean(n);
    if (prefix == "complex-euclidean") return make_complex_euclidean(n);
    if (prefix == "parallelizable") return make_parallelizable(n);
    throw ParseError("unknown manifold kind '" + std::string(prefix) + "'");
}

// -------------------------------------------------------------------- JSON

using nlohmann::json;

static ClassKind kind_for_modulus(Residue p) { return p == 2 ? ClassKind::StiefelWhitney : ClassKind::Chern; }

template <class T>
static T require_field(const json& doc, const char* key) {
    if (!doc.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    try {
        return doc.at(key).get<T>();
    } catch (const json::exception&) {
        throw ParseError(std::string("field '") + key + "' has the wrong type");
    }
}

static TotalClass total_class_from_json(const json& arr, RingSpec ring, ClassKind kind) {
    if (!arr.is_array()) throw ParseError("total_class must be an array");
    const int unit = class_unit_degree(kind);
    GradedPoly total(ring);
    std::vector<bool> seen;
    for (const auto& entry : arr) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer())
            throw ParseError("total_class entries must be [index, component]");
        const int index = entry[0].get<int>();
        if (index < 0) throw ParseError("negative class index " + std::to_string(index));
        if (static_cast<std::size_t>(index) >= seen.size()) seen.resize(static_cast<std::size_t>(index) + 1, false);
        if (seen[static_cast<std::size_t>(index)]) throw ParseError("class index " + std::to_string(index) + " repeated");
        seen[static_cast<std::size_t>(index)] = true;

        GradedPoly component(ring);
        const json& body = entry[1];
        if (body.is_string()) {
            component = parse_poly(body.get<std::string>(), ring);
        } else if (body.is_array()) {
            for (const auto& term : body) {
                if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer())
                    throw ParseError("component terms must be [exponent, coefficient]");
                const int e = term[0].get<int>();
                if (e < 0) throw ParseError("negative exponent in class_" + std::to_string(index));
                if (e > ring.truncation)
                    throw ParseError("exponent " + std::to_string(e) + " in class_" + std::to_string(index) +
                                     " exceeds truncation " + std::to_string(ring.truncation));
                std::int64_t c = 0;
                if (term[1].is_number_integer()) c = term[1].get<std::int64_t>();
                else if (term[1].is_string()) c = std::stoll(term[1].get<std::string>());
                else throw ParseError("coefficient must be an integer or numeric string");
                const auto p = static_cast<std::int64_t>(ring.p);
                c %= p;
                if (c < 0) c += p;
                component = component + GradedPoly::monomial(ring, e, static_cast<std::uint64_t>(c));
            }
        } else {
            throw ParseError("class_" + std::to_string(index) + " must be a string or a term array");
        }
        const int degree = index * unit;
        if (!component.is_zero() &&
            (degree % ring.generator_degree != 0 || !component.is_homogeneous(degree / ring.generator_degree)))
            throw ParseError("class_" + std::to_string(index) + " = " + component.to_string() +
                             " is not homogeneous of degree " + std::to_string(degree));
        total = total + component;
    }
    if (total.coefficient(0).value() != 1)
        throw ParseError("class_0 must be 1, got " + total.homogeneous_part(0).to_string());
    return {total, kind};
}

TotalClass parse_total_class_json(std::string_view document, RingSpec ring, ClassKind kind) {
    json doc;
    try {
        doc = json::parse(document);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (doc.is_object()) {
        if (!doc.contains("total_class")) throw ParseError("missing field 'total_class'");
        return total_class_from_json(doc["total_class"], ring, kind);
    }
    return total_class_from_json(doc, ring, kind);
}

ManifoldSpec parse_manifold_spec(std::string_view document) {
    json doc;
    try {
        doc = json::parse(document);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (doc.is_string()) return parse_manifold_shorthand(doc.get<std::string>());
    if (!doc.is_object()) throw ParseError("manifold spec must be a JSON object");
    if (doc.contains("builtin")) return parse_manifold_shorthand(require_field<std::string>(doc, "builtin"));

    const auto kind = require_field<std::string>(doc, "kind");
    if (kind != "custom") throw ParseError("unsupported kind '" + kind + "' (use a builtin shorthand)");
    const auto p = require_field<std::int64_t>(doc, "p");
    const auto gd = require_field<int>(doc, "generator_degree");
    const auto T = require_field<int>(doc, "truncation_exponent");
    const auto real_dim = require_field<int>(doc, "real_dimension");
    if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) throw ParseError("p = " + std::to_string(p) + " is not prime");
    if (gd < 1) throw ParseError("generator_degree must be positive");
    if (T < 0) throw ParseError("truncation_exponent must be nonnegative");
    if (real_dim < 0) throw ParseError("real_dimension must be nonnegative");
    std::optional<int> complex_dim;
    if (doc.contains("complex_dimension") && !doc["complex_dimension"].is_null()) {
        complex_dim = require_field<int>(doc, "complex_dimension");
        if (*complex_dim < 0 || 2 * *complex_dim != real_dim)
            throw ParseError("complex_dimension must be half of real_dimension");
    }
    const RingSpec ring = RingSpec::make(static_cast<Residue>(p), gd, T);
    if (!doc.contains("total_class")) throw ParseError("missing field 'total_class'");
    auto total = total_class_from_json(doc["total_class"], ring, kind_for_modulus(ring.p));
    return ManifoldSpec{.kind = ManifoldKind::Custom,
                        .parameter = real_dim,
                        .real_dimension = real_dim,
                        .complex_dimension = complex_dim,
                        .ring = ring,
                        .total_class = total,
                        .label = doc.value("name", std::string("custom"))};
}

// ----------------------------------------------------------- tangent class

TotalClass tangent_class(const ManifoldSpec& spec, ClassKind kind, Residue p) {
    const Residue field = kind == ClassKind::StiefelWhitney ? 2 : p;
    switch (spec.kind) {
    case ManifoldKind::RealProjective:
        if (kind == ClassKind::Chern) throw SpecError(spec.label + " carries no complex structure");
        return total_sw_rp(spec.parameter);
    case ManifoldKind::ComplexProjective:
        return kind == ClassKind::Chern ? total_chern_cp(spec.parameter, p) : total_sw_cp(spec.parameter);
    case ManifoldKind::Sphere:
    case ManifoldKind::Euclidean:
    case ManifoldKind::Parallelizable: {
        RingSpec ring = spec.ring;
        ring = RingSpec::make(field, ring.generator_degree, ring.truncation);
        return TotalClass::trivial(ring, kind);
    }
    case ManifoldKind::Custom:
        if (spec.ring.p != field || spec.total_class.kind() != kind)
            throw SpecError("custom spec '" + spec.label + "' has coefficients in F_" + std::to_string(spec.ring.p) +
                            " but this path needs F_" + std::to_string(field));
        return spec.total_class;
    }
    throw SpecError("unknown manifold kind");
}

} // namespace lmc
