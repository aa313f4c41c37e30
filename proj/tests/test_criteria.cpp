#include <doctest.h>

#include "lmc/criteria.hpp"
#include "test_support.hpp"

using namespace lmc;

namespace {

ManifoldSpec M(const char* s) { return parse_manifold_shorthand(s); }

GradedPoly t_pow(const ManifoldSpec& m, int e) { return GradedPoly::monomial(m.ring, e); }

} // namespace

TEST_CASE("u_s examples") {
    const auto rp13 = M("rp:13");
    const auto cls = stable_difference(rp13, M("euclidean:14"), 4, ClassKind::StiefelWhitney);
    CHECK(cls.total.total() == parse_poly("1 + t^2", rp13.ring));
    CHECK(u_s(cls, 0) == t_pow(rp13, 6));

    const auto rp8 = M("rp:8");
    const auto cls8 = stable_difference(rp8, M("euclidean:14"), 2, ClassKind::StiefelWhitney);
    CHECK(u_s(cls8, 0) == t_pow(rp8, 7));
    CHECK(u_s(cls8, 1).is_zero()); // (1+t)^7 has no t^8 term
    CHECK_THROWS_AS(u_s(cls8, -1), DomainError);
    CHECK_THROWS_AS(v_s(cls8, 0), DomainError);
}

TEST_CASE("v_s examples") {
    const auto cp6 = M("cp:6");
    const auto cls = stable_difference(cp6, M("complex-euclidean:7"), 3, ClassKind::Chern);
    const RingSpec R = cls.total.ring();
    CHECK(cls.total.total() == parse_poly("1 + 2*x + x^2", R));
    // d = 2: det [[c2, c3], [c1, c2]] = x^4
    CHECK(v_s(cls, 0) == GradedPoly::monomial(R, 4));
    CHECK(v_s(cls, 1).is_zero());
}

TEST_CASE("determinant below the diagonal range") {
    const auto cls = stable_difference(M("rp:13"), M("euclidean:5"), 4, ClassKind::StiefelWhitney);
    // d = 0 gives a unitriangular matrix, d < 0 a zero first row
    CHECK(toeplitz_class_determinant(cls.total, 0, 3).is_one());
    CHECK(toeplitz_class_determinant(cls.total, -1, 3).is_zero());
    CHECK(toeplitz_class_determinant(cls.total, 5, 0).is_one());
}

TEST_CASE("check_local_multiplicity examples") {
    const auto r1 = check_local_multiplicity(M("rp:13"), M("euclidean:14"), 4, ClassKind::StiefelWhitney);
    CHECK(r1.holds());
    CHECK(r1.path == CriterionPath::Theorem11);
    CHECK(r1.witness_s == 0);
    CHECK(*r1.witness_class == t_pow(M("rp:13"), 6));

    const auto r2 = check_local_multiplicity(M("rp:8"), M("euclidean:14"), 2, ClassKind::StiefelWhitney);
    CHECK(r2.holds());
    CHECK(r2.witness_s == 0);

    const auto r3 = check_local_multiplicity(M("rp:3"), M("euclidean:5"), 2, ClassKind::StiefelWhitney);
    CHECK_FALSE(r3.holds());
    CHECK_FALSE(r3.witness_s.has_value());
    CHECK(r3.searched_s_max == 0);
    CHECK_FALSE(r3.notes.empty());

    const auto r4 = check_local_multiplicity(M("cp:6"), M("complex-euclidean:7"), 3, ClassKind::Chern);
    CHECK(r4.holds());
    CHECK(r4.path == CriterionPath::Theorem12);
    CHECK(r4.witness_s == 0);
}

TEST_CASE("target dimension below the source") {
    const auto r = check_local_multiplicity(M("rp:6"), M("euclidean:3"), 2, ClassKind::StiefelWhitney);
    CHECK(r.holds());
    CHECK(r.witness_class->is_one());
}

TEST_CASE("invalid k and spec errors") {
    CHECK_THROWS_AS(check_local_multiplicity(M("rp:13"), M("euclidean:14"), 3, ClassKind::StiefelWhitney), InvalidK);
    CHECK_THROWS_AS(check_local_multiplicity(M("rp:13"), M("euclidean:14"), 1, ClassKind::StiefelWhitney), InvalidK);
    CHECK_THROWS_AS(check_local_multiplicity(M("cp:3"), M("complex-euclidean:4"), 4, ClassKind::Chern), InvalidK);
    CHECK_THROWS_AS(check_local_multiplicity(M("cp:3"), M("complex-euclidean:4"), 9, ClassKind::Chern), InvalidK);
    CHECK_THROWS_AS(check_local_multiplicity(M("cp:3"), M("euclidean:8"), 3, ClassKind::Chern), SpecError);
    CHECK_THROWS_AS(check_local_multiplicity(M("euclidean:3"), M("euclidean:8"), 2, ClassKind::StiefelWhitney),
                    SpecError);
    CHECK_THROWS_AS(check_local_multiplicity(M("rp:3"), M("rp:8"), 2, ClassKind::StiefelWhitney), SpecError);
    CHECK(is_power_of_two(8));
    CHECK_FALSE(is_power_of_two(6));
    CHECK_FALSE(is_power_of_two(0));
}

TEST_CASE("explicit pullback class") {
    const auto rp3 = M("rp:3");
    const TotalClass pull(parse_poly("1 + t", rp3.ring), ClassKind::StiefelWhitney);
    const auto cls = stable_difference(rp3, M("rp:8"), 2, ClassKind::StiefelWhitney, pull);
    CHECK(cls.total.total() == parse_poly("1 + t", rp3.ring));
    const TotalClass wrong(GradedPoly::one(RingSpec::make(2, 1, 5)), ClassKind::StiefelWhitney);
    CHECK_THROWS_AS(stable_difference(rp3, M("rp:8"), 2, ClassKind::StiefelWhitney, wrong), IncompatibleRing);
}

TEST_CASE("fast path examples") {
    const auto a = theorem4_fastpath(M("cp:6"), 7, 3);
    CHECK(a.holds());
    CHECK(a.path == CriterionPath::Theorem14);
    CHECK(a.witness_s == 2);
    CHECK(a.witness_class->to_string() == "x^4");

    const auto b = theorem4_fastpath(M("cp:7"), 7, 3);
    CHECK(b.holds());
    CHECK(b.witness_s == 1);
    CHECK(b.witness_class->to_string() == "x^2");

    const auto c = theorem3_fastpath(M("rp:7"), 8, 2);
    CHECK_FALSE(c.holds());
    const auto d = theorem3_fastpath(M("rp:13"), 14, 4); // top dual index 2 equals 14-13+1
    CHECK(d.holds());
    CHECK(d.witness_class->to_string() == "t^6");
    const auto e = theorem3_fastpath(M("rp:13"), 20, 4);
    CHECK_FALSE(e.holds());
}

TEST_CASE("fast path agrees with the general checker whenever it fires") {
    for (int m = 1; m <= 30; ++m)
        for (int n = m; n <= 2 * m + 2; ++n)
            for (unsigned k : {2u, 4u, 8u}) {
                const auto src = make_real_projective(m);
                const auto fast = theorem3_fastpath(src, n, k);
                if (!fast.holds()) continue;
                const auto general = check_local_multiplicity(src, make_euclidean(n), k, ClassKind::StiefelWhitney);
                CHECK_MESSAGE(general.holds(), "rp:" << m << " n=" << n << " k=" << k);
            }
    for (int m = 1; m <= 20; ++m)
        for (int n = m; n <= 2 * m + 2; ++n)
            for (unsigned k : {3u, 5u, 7u}) {
                const auto src = make_complex_projective(m);
                const auto fast = theorem4_fastpath(src, n, k);
                if (!fast.holds()) continue;
                const auto general =
                    check_local_multiplicity(src, make_complex_euclidean(n), k, ClassKind::Chern);
                CHECK_MESSAGE(general.holds(), "cp:" << m << " n=" << n << " k=" << k);
            }
}

TEST_CASE("corollary hypotheses") {
    CHECK(corollary_violation(Corollary::Rp_Euclidean, 1, 3, 2) == std::nullopt);
    CHECK(corollary_violation(Corollary::Rp_Euclidean, 3, 3, 2) == std::string("k(a+1) <= 2^ell-1"));
    CHECK(corollary_violation(Corollary::Rp_Euclidean, 1, 3, 3) == std::string("k power of 2"));
    CHECK(corollary_violation(Corollary::Cp_Complex_Chern, 4, 2, 3) == std::string("k(a-1) <= k^ell-1"));
    CHECK(corollary_violation(Corollary::Cp_Complex_Chern, 1, 2, 3).has_value());
    CHECK(corollary_violation(Corollary::Cp_Complex_Chern, 2, 2, 4) == std::string("k odd prime"));
    CHECK_THROWS_AS(corollary_instance(Corollary::Cp_Complex_Chern, 4, 2, 3), HypothesisViolation);
    CHECK_THROWS_AS(corollary_validate(Corollary::Rp_Sphere, 9, 3, 2), HypothesisViolation);
    CHECK(parse_corollary("1.7") == Corollary::Cp_Euclidean_Sw);
    CHECK(corollary_id(Corollary::Rp_Sphere) == "1.6");
    CHECK_THROWS_AS(parse_corollary("1.9"), ParseError);
}

TEST_CASE("corollary instances") {
    const auto i5 = corollary_instance(Corollary::Rp_Euclidean, 2, 4, 4);
    CHECK(i5.source.label == "rp:12");
    CHECK(i5.target.real_dimension == 14);
    const auto i7 = corollary_instance(Corollary::Cp_Euclidean_Sw, 3, 3, 2);
    CHECK(i7.source.complex_dimension == 5);
    CHECK(i7.target.real_dimension == 13);
    const auto i8 = corollary_instance(Corollary::Cp_Complex_Chern, 3, 2, 3);
    CHECK(i8.source.complex_dimension == 6);
    CHECK(i8.target.complex_dimension == 7);
}

TEST_CASE("every admissible corollary instance is confirmed by the general checker") {
    const Corollary sw[] = {Corollary::Rp_Euclidean, Corollary::Rp_Sphere, Corollary::Cp_Euclidean_Sw};
    for (Corollary c : sw)
        for (long ell = 1; ell <= 5; ++ell)
            for (unsigned k : {2u, 4u, 8u, 16u})
                for (long a = 1; a <= 40; ++a)
                    if (!corollary_violation(c, a, ell, k))
                        CHECK_MESSAGE(corollary_validate(c, a, ell, k).holds(),
                                      corollary_id(c) << " a=" << a << " ell=" << ell << " k=" << k);
    for (long ell = 1; ell <= 2; ++ell)
        for (unsigned k : {3u, 5u, 7u})
            for (long a = 1; a <= 30; ++a)
                if (!corollary_violation(Corollary::Cp_Complex_Chern, a, ell, k))
                    CHECK(corollary_validate(Corollary::Cp_Complex_Chern, a, ell, k).holds());
}

TEST_CASE("verdict does not depend on the order of class components") {
    // a custom spec with the components listed backwards gives the same verdict as rp:13
    const auto forward = parse_manifold_spec(
        R"({"kind":"custom","p":2,"generator_degree":1,"truncation_exponent":13,"real_dimension":13,
            "total_class":[[0,"1"],[2,"t^2"],[4,"t^4"],[6,"t^6"],[8,"t^8"],[10,"t^10"],[12,"t^12"]]})");
    const auto backward = parse_manifold_spec(
        R"({"kind":"custom","p":2,"generator_degree":1,"truncation_exponent":13,"real_dimension":13,
            "total_class":[[12,"t^12"],[10,"t^10"],[8,"t^8"],[6,"t^6"],[4,"t^4"],[2,"t^2"],[0,"1"]]})");
    CHECK(forward.total_class == total_sw_rp(13));
    for (unsigned k : {2u, 4u, 8u}) {
        const auto a = check_local_multiplicity(forward, M("euclidean:14"), k, ClassKind::StiefelWhitney);
        const auto b = check_local_multiplicity(backward, M("euclidean:14"), k, ClassKind::StiefelWhitney);
        const auto c = check_local_multiplicity(M("rp:13"), M("euclidean:14"), k, ClassKind::StiefelWhitney);
        CHECK(a.verdict == b.verdict);
        CHECK(a.verdict == c.verdict);
        CHECK(a.witness_s == c.witness_s);
    }
}
