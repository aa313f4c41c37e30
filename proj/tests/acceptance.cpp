// Acceptance run: one line per criterion, exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lmc/cli.hpp"
#include "lmc/symfun.hpp"
#include "test_support.hpp"

using namespace lmc;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

struct Instance {
    ManifoldSpec source;
    ManifoldSpec target;
    unsigned k;
    ClassKind kind;
};

std::vector<Instance> grid(Corollary c, const std::vector<long>& ells, const std::vector<unsigned>& ks) {
    std::vector<Instance> out;
    for (long ell : ells)
        for (unsigned k : ks)
            for (long a = 1; a <= 200; ++a)
                if (!corollary_violation(c, a, ell, k)) {
                    auto inst = corollary_instance(c, a, ell, k);
                    out.push_back({inst.source, inst.target, inst.k, inst.kind});
                }
    return out;
}

std::vector<Instance> chern_grid() {
    std::vector<Instance> out;
    for (unsigned k : {3u, 5u})
        for (long ell = 1, q = k; q <= 125; ++ell, q *= k)
            for (auto& i : grid(Corollary::Cp_Complex_Chern, {ell}, {k})) out.push_back(i);
    return out;
}

std::string label(const Instance& i) {
    return i.source.label + " -> " + i.target.label + " k=" + std::to_string(i.k);
}

Outcome all_hold(const std::vector<Instance>& instances, std::size_t& count) {
    Outcome o;
    count = instances.size();
    if (instances.empty()) o.fail("empty grid");
    for (const auto& i : instances)
        if (!check_local_multiplicity(i.source, i.target, i.k, i.kind).holds()) o.fail("inconclusive: " + label(i));
    return o;
}

Outcome criterion1() {
    std::size_t n = 0;
    auto o = all_hold(grid(Corollary::Rp_Euclidean, {2, 3, 4, 5}, {2, 4, 8, 16}), n);
    if (o.ok) o.detail = std::to_string(n) + " instances";
    return o;
}

Outcome criterion2() {
    Outcome o;
    const auto euc = grid(Corollary::Rp_Euclidean, {2, 3, 4, 5}, {2, 4, 8, 16});
    const auto sph = grid(Corollary::Rp_Sphere, {2, 3, 4, 5}, {2, 4, 8, 16});
    if (euc.size() != sph.size()) o.fail("grid sizes differ");
    for (std::size_t i = 0; o.ok && i < sph.size(); ++i) {
        const auto a = check_local_multiplicity(euc[i].source, euc[i].target, euc[i].k, euc[i].kind);
        const auto b = check_local_multiplicity(sph[i].source, sph[i].target, sph[i].k, sph[i].kind);
        if (!b.holds()) o.fail("inconclusive: " + label(sph[i]));
        if (a.verdict != b.verdict || a.witness_s != b.witness_s) o.fail("verdict differs from euclidean: " + label(sph[i]));
    }
    if (o.ok) o.detail = std::to_string(sph.size()) + " instances, verdicts identical to criterion 1";
    return o;
}

Outcome criterion3() {
    Outcome o;
    for (const auto& [m, n] : {std::pair{4, 6}, std::pair{8, 14}}) {
        const auto r = check_local_multiplicity(make_real_projective(m), make_euclidean(n), 2, ClassKind::StiefelWhitney);
        if (!r.holds()) o.fail("rp:" + std::to_string(m) + " -> euclidean:" + std::to_string(n) + " inconclusive");
    }
    if (o.ok) o.detail = "rp:4 -> R^6 and rp:8 -> R^14 at k=2";
    return o;
}

Outcome criterion4() {
    std::size_t n = 0;
    auto o = all_hold(grid(Corollary::Cp_Euclidean_Sw, {1, 2, 3, 4}, {2, 4, 8}), n);
    if (o.ok) o.detail = std::to_string(n) + " instances";
    return o;
}

Outcome criterion5() {
    std::size_t n = 0;
    auto o = all_hold(chern_grid(), n);
    if (o.ok) o.detail = std::to_string(n) + " instances";
    return o;
}

Outcome criterion6() {
    Outcome o;
    std::vector<Instance> all = grid(Corollary::Rp_Euclidean, {2, 3, 4, 5}, {2, 4, 8, 16});
    for (auto& i : grid(Corollary::Rp_Sphere, {2, 3, 4, 5}, {2, 4, 8, 16})) all.push_back(i);
    for (auto& i : grid(Corollary::Cp_Euclidean_Sw, {1, 2, 3, 4}, {2, 4, 8})) all.push_back(i);
    for (auto& i : chern_grid()) all.push_back(i);

    std::size_t fired = 0;
    for (const auto& i : all) {
        const bool sw = i.kind == ClassKind::StiefelWhitney;
        const int n = sw ? i.target.real_dimension : *i.target.complex_dimension;
        const int m = sw ? i.source.real_dimension : *i.source.complex_dimension;
        const auto fast = sw ? theorem3_fastpath(i.source, n, i.k) : theorem4_fastpath(i.source, n, i.k);
        if (!fast.holds()) continue;
        ++fired;
        const auto cls = stable_difference(i.source, i.target, i.k, i.kind);
        const int s = *fast.witness_s - (n - m + 1);
        const GradedPoly general = sw ? u_s(cls, s) : v_s(cls, s);
        if (!(general == *fast.witness_class)) o.fail("witness mismatch: " + label(i));
        if (!check_local_multiplicity(i.source, i.target, i.k, i.kind).holds())
            o.fail("general checker inconclusive: " + label(i));
    }
    if (o.ok) o.detail = std::to_string(fired) + " of " + std::to_string(all.size()) + " instances take the fast path";
    return o;
}

Outcome criterion7() {
    Outcome o;
    std::size_t count = 0;
    for (int m : {1, 3, 7})
        for (int n = m + 1; n <= 64; ++n)
            for (unsigned k = 2; k <= 16; k *= 2) {
                ++count;
                const auto r = check_local_multiplicity(make_real_projective(m), make_euclidean(n), k,
                                                        ClassKind::StiefelWhitney);
                if (r.holds()) o.fail("criterion fired for rp:" + std::to_string(m) + " -> R^" + std::to_string(n));
            }
    for (int m : {1, 3, 7}) {
        std::ostringstream out, err;
        const int code = run_cli({"lmc", "check", "--source", "rp:" + std::to_string(m), "--target",
                                  "euclidean:" + std::to_string(m + 5), "--k", "16"},
                                 out, err);
        if (code != 2) o.fail("exit code " + std::to_string(code) + " for rp:" + std::to_string(m));
    }
    if (o.ok) o.detail = std::to_string(count) + " controls inconclusive, CLI exit 2";
    return o;
}

Outcome criterion8() {
    Outcome o;
    for (Residue p : {2u, 3u, 5u})
        for (int A = 1; A <= 4; ++A)
            for (int B = 1; B <= 3; ++B)
                if (!dual_cauchy_check(A, B, p))
                    o.fail("A=" + std::to_string(A) + " B=" + std::to_string(B) + " p=" + std::to_string(p));
    if (o.ok) o.detail = "A <= 4, B <= 3, p in {2,3,5}";
    return o;
}

Outcome criterion9() {
    Outcome o;
    std::size_t count = 0;
    for (Residue p : {2u, 3u, 5u})
        for (int n = 1; n <= 4; ++n)
            for (const auto& lambda : partitions_in_box(n, 3)) {
                ++count;
                if (!(expand_in_roots(schur_via_nk(lambda, n, p)) == schur_monomial_oracle(lambda, n, p)))
                    o.fail(lambda.to_string() + " in " + std::to_string(n) + " variables, p=" + std::to_string(p));
            }
    if (o.ok) o.detail = std::to_string(count) + " (partition, variables, p) cases";
    return o;
}

Outcome criterion10() {
    Outcome o;
    std::size_t count = 0, mismatches = 0;
    for (unsigned k : {3u, 5u})
        for (int m = 1; m <= 8; ++m) {
            const auto cp = make_complex_projective(m);
            const int top = dual_total_class(tangent_class(cp, ClassKind::Chern, k)).top_nonzero_index();
            for (int mp = top; mp <= m; ++mp)
                for (int n = 0; n <= m + 1; ++n) {
                    ++count;
                    if (chern_euler_crosscheck(cp, n, k, mp)) continue;
                    ++mismatches;
                    o.fail("cp:" + std::to_string(m) + " n=" + std::to_string(n) + " k=" + std::to_string(k) +
                               " m'=" + std::to_string(mp));
                }
        }
    if (o.ok) o.detail = std::to_string(count) + " (m, n, m', k) cases";
    else o.detail = std::to_string(mismatches) + " of " + std::to_string(count) + " cases differ, first " + o.detail;
    return o;
}

Outcome criterion11() {
    Outcome o;
    std::mt19937 rng(20261018);
    const Residue primes[] = {2, 3, 5, 7};
    for (int trial = 0; trial < 1000; ++trial) {
        const unsigned n = std::uniform_int_distribution<unsigned>(0, 2000)(rng);
        const unsigned r = std::uniform_int_distribution<unsigned>(0, n)(rng);
        const Residue p = primes[trial % 4];
        if (binom_mod_p(n, r, p).value() != testing::factorial_binomial(n, r, p))
            o.fail("C(" + std::to_string(n) + "," + std::to_string(r) + ") mod " + std::to_string(p));
    }
    for (int trial = 0; trial < 500; ++trial) {
        const Residue p = primes[rng() % 4];
        const auto R = RingSpec::make(p, 1 + static_cast<int>(rng() % 2), static_cast<int>(rng() % 9));
        const std::size_t size = 1 + rng() % 6;
        Matrix<GradedPoly> m(size, std::vector<GradedPoly>(size, GradedPoly::zero(R)));
        for (auto& row : m)
            for (auto& e : row) e = testing::random_poly(rng, R, 0.4);
        if (!(ring_determinant(m) == testing::leibniz_determinant(m, GradedPoly::one(R))))
            o.fail("determinant mismatch in trial " + std::to_string(trial));
    }
    if (o.ok) o.detail = "1000 binomials, 500 determinants";
    return o;
}

Outcome criterion12() {
    Outcome o;
    for (Corollary c : {Corollary::Rp_Euclidean, Corollary::Cp_Euclidean_Sw, Corollary::Cp_Complex_Chern}) {
        const bool chern = c == Corollary::Cp_Complex_Chern;
        const std::vector<long> ells = chern ? std::vector<long>{1, 2, 3} : std::vector<long>{2, 3, 4, 5};
        const std::vector<unsigned> ks = chern ? std::vector<unsigned>{3, 5} : std::vector<unsigned>{2, 4, 8, 16};
        const std::string a = atlas_to_json(run_atlas(c, {}, ells, ks, 1));
        const std::string b = atlas_to_json(run_atlas(c, {}, ells, ks, 8));
        const std::string again = atlas_to_json(run_atlas(c, {}, ells, ks, 8));
        if (a != b || b != again) o.fail("corollary " + corollary_id(c) + " output differs");
    }
    if (o.ok) o.detail = "corollaries 1.5, 1.7, 1.8 at 1 and 8 threads";
    return o;
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double budget_s; // 0 means no stated budget
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "corollary 1.5 grid", 5, criterion1},
        {2, "corollary 1.6 grid", 0, criterion2},
        {3, "k=2 projective examples", 0, criterion3},
        {4, "corollary 1.7 grid", 0, criterion4},
        {5, "corollary 1.8 grid", 10, criterion5},
        {6, "fast-path agreement", 0, criterion6},
        {7, "inconclusive controls", 0, criterion7},
        {8, "dual Cauchy identity", 30, criterion8},
        {9, "Nagelsbach-Kostka vs tableaux", 0, criterion9},
        {10, "Chern Euler cross-check", 60, criterion10},
        {11, "arithmetic oracles", 0, criterion11},
        {12, "atlas determinism", 0, criterion12},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_s > 0 && secs > c.budget_s) o.fail("took longer than " + std::to_string(int(c.budget_s)) + " s");
        if (!o.ok) ++failures;
        std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << c.id << "  " << c.name << "  ("
                  << std::fixed << std::setprecision(2) << secs << " s)  " << o.detail << "\n";
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}
