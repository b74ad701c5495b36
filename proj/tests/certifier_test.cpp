#include <doctest.h>

#include <blf/certifier.hpp>

#include <algorithm>

#include "test_support.hpp"

using namespace blf;

namespace {

FibrationSpec disk_spec(
    const std::vector<std::pair<long long, long long>>& pairs,
    long long genus = 1) {
    FibrationSpec spec;
    spec.fiber_genus = genus;
    for (const auto& [p, q] : pairs) spec.word.emplace_back(p, q);
    return spec;
}

}  // namespace

TEST_CASE("completion decision on the reference fixtures") {
    auto cert = check_completable(disk_spec({{0, 1}}));
    CHECK(cert.completable);
    REQUIRE(cert.twist_axis.has_value());
    CHECK(*cert.twist_axis == CurveClass(0, 1));
    CHECK(abs(cert.twist_exponent) == 1);
    CHECK(cert.unique);
    CHECK(cert.mu == 1);
    CHECK(cert.cap_count == 1);
    CHECK(cert.cap_euler_number == -cert.twist_exponent);

    cert = check_completable(disk_spec({{1, 0}, {0, 1}}));
    CHECK(!cert.completable);
    CHECK(cert.boundary_class.kind == MonodromyClass::Kind::elliptic);
    CHECK(cert.boundary_class.trace == 1);
    CHECK(cert.rejected_reason == "Elliptic");
    CHECK(!cert.unique);

    cert = check_completable(disk_spec({}));
    CHECK(cert.completable);
    CHECK(cert.twist_exponent == 0);
    CHECK(!cert.unique);
    CHECK(!cert.twist_axis.has_value());
    CHECK(cert.mu == 0);
}

TEST_CASE("completion rejects the remaining branches by name") {
    // (T_a T_b)^3 = -I as a vanishing-cycle word.
    auto minus = check_completable(
        disk_spec({{0, 1}, {1, 0}, {0, 1}, {1, 0}, {0, 1}, {1, 0}}));
    CHECK(!minus.completable);
    CHECK(minus.rejected_reason == "MinusIdentity");

    // -I times a twist: trace -2.
    auto negpar = check_completable(
        disk_spec({{0, 1}, {0, 1}, {1, 0}, {0, 1}, {1, 0}, {0, 1}, {1, 0}}));
    CHECK(!negpar.completable);
    CHECK(negpar.rejected_reason == "NegativeParabolic");

    auto hyper = check_completable(disk_spec({{1, 0}, {2, 5}}));
    CHECK(!hyper.completable);
    CHECK(hyper.rejected_reason == "Hyperbolic");
}

TEST_CASE("completion requires fiber genus one") {
    CHECK_THROWS_AS(check_completable(disk_spec({{0, 1}}, 2)),
                    UnsupportedInput);
    CHECK_THROWS_AS(check_completable(disk_spec({}, 0)), UnsupportedInput);
}

TEST_CASE("invariant report") {
    auto report = invariants(check_completable(disk_spec({{0, 1}})));
    CHECK(report.mu == 1);
    CHECK(report.euler_characteristic == 1);
    // Independent chi: the completion of the single-b fibration is
    // S^1 x S^3 # conj(CP^2), chi = 0 and 3 glued along S^4.
    CHECK(report.euler_characteristic == oracle::chi_connected_sum(0, 3));
    CHECK(report.type_change_components == 1);
    CHECK(report.type_change_topology == "torus");
    CHECK(report.homologically_essential);
    CHECK(report.stable_gcs);
    CHECK(!report.hypotheses.empty());

    report = invariants(check_completable(disk_spec({})));
    CHECK(report.mu == 0);
    CHECK(report.euler_characteristic == 0);

    FibrationSpec family;
    family.word = cp2_family_word(1, 0);
    report = invariants(check_completable(family));
    CHECK(report.mu == 3);
    CHECK(report.euler_characteristic == 3);

    CHECK_THROWS_AS(invariants(check_completable(disk_spec({{1, 0}, {0, 1}}))),
                    ContractViolation);
}

TEST_CASE("stable gcs certification") {
    auto verdict = certify_stable_gcs(disk_spec({{0, 1}}));
    CHECK(verdict.certified);
    CHECK(verdict.verified.size() == 4);
    CHECK(verdict.note.empty());

    verdict = certify_stable_gcs(disk_spec({{1, 0}, {0, 1}}));
    CHECK(!verdict.certified);
    CHECK(verdict.failed_hypothesis.find("Elliptic") != std::string::npos);

    verdict = certify_stable_gcs(disk_spec({}));
    CHECK(verdict.certified);
    CHECK(!verdict.note.empty());  // non-uniqueness note

    // Wrong genus is a failed hypothesis, not an error: the criterion
    // simply does not apply.
    verdict = certify_stable_gcs(disk_spec({{0, 1}}, 2));
    CHECK(!verdict.certified);
    CHECK(verdict.failed_hypothesis.find("genus") != std::string::npos);
}

TEST_CASE("certification implies completability") {
    std::mt19937_64 rng(9001);
    for (int i = 0; i < 1000; ++i) {
        FibrationSpec spec;
        spec.word = testgen::random_word(rng, i % 7, 5);
        if (certify_stable_gcs(spec).certified)
            CHECK(check_completable(spec).completable);
    }
}

TEST_CASE("verdicts are invariant under hurwitz moves and conjugation") {
    std::mt19937_64 rng(9002);
    for (int i = 0; i < 200; ++i) {
        FibrationSpec spec;
        spec.word = testgen::random_word(rng, 2 + i % 5, 4);
        const auto base = check_completable(spec);

        FibrationSpec moved = spec;
        for (int k = 0; k < 6; ++k) {
            std::size_t at = std::uniform_int_distribution<std::size_t>(
                0, moved.word.size() - 2)(rng);
            auto dir = (k % 2) ? HurwitzDirection::left
                               : HurwitzDirection::right;
            moved.word = hurwitz_move(moved.word, at, dir);
        }
        const auto after_moves = check_completable(moved);
        CHECK(after_moves.completable == base.completable);
        CHECK(after_moves.boundary_class.kind == base.boundary_class.kind);
        CHECK(after_moves.twist_exponent == base.twist_exponent);

        SL2Z g = testgen::random_sl2z(rng, 6);
        FibrationSpec conjugated;
        for (const CurveClass& c : spec.word)
            conjugated.word.push_back(transform(g, c));
        const auto after_conj = check_completable(conjugated);
        CHECK(after_conj.completable == base.completable);
        CHECK(after_conj.boundary_class.kind == base.boundary_class.kind);
        CHECK(abs(after_conj.twist_exponent) == abs(base.twist_exponent));
        if (base.twist_axis)
            CHECK(*after_conj.twist_axis == transform(g, *base.twist_axis));
    }
}

TEST_CASE("completability agrees with the canonical-form representative") {
    std::mt19937_64 rng(9003);
    for (int i = 0; i < 60; ++i) {
        FibrationSpec spec;
        spec.word = testgen::random_word(rng, 2 + i % 3, 3);
        auto canon = hurwitz_canonical(spec.word, 2000);
        FibrationSpec canonical_spec;
        canonical_spec.word = canon.word;

        auto a = check_completable(spec);
        auto b = check_completable(canonical_spec);
        CHECK(a.completable == b.completable);
        CHECK(a.boundary_class.kind == b.boundary_class.kind);
        CHECK(a.twist_exponent == b.twist_exponent);
    }
}

TEST_CASE("surface log pairs") {
    // Sphere with one separating circle: the empty vector sums to zero.
    SurfaceLogPair sphere{0, {{}}, false};
    CHECK(surface_log_admissible(sphere));

    // One nonseparating curve on the torus.
    SurfaceLogPair torus{1, {{1, 0}}, false};
    CHECK(!surface_log_admissible(torus));

    // Two parallel copies cancel mod 2.
    SurfaceLogPair doubled{1, {{1, 0}, {1, 0}}, false};
    CHECK(surface_log_admissible(doubled));

    // Boundary pairs are always admissible.
    SurfaceLogPair with_boundary{2, {}, true};
    CHECK(surface_log_admissible(with_boundary));

    SurfaceLogPair bad{1, {{1, 0, 1}}, false};
    CHECK_THROWS_AS(surface_log_admissible(bad), MalformedInput);
    SurfaceLogPair bad_entry{1, {{2, 0}}, false};
    CHECK_THROWS_AS(surface_log_admissible(bad_entry), MalformedInput);
}

TEST_CASE("surface admissibility is invariant under list symmetry") {
    std::mt19937_64 rng(9004);
    for (int i = 0; i < 200; ++i) {
        SurfaceLogPair pair;
        pair.genus = 1 + i % 4;
        std::uniform_int_distribution<int> bit(0, 1);
        std::uniform_int_distribution<int> count(0, 5);
        int curves = count(rng);
        for (int c = 0; c < curves; ++c) {
            std::vector<int> vec(2 * pair.genus);
            for (auto& entry : vec) entry = bit(rng);
            pair.curves.push_back(vec);
        }

        bool base = surface_log_admissible(pair);

        SurfaceLogPair shuffled = pair;
        std::shuffle(shuffled.curves.begin(), shuffled.curves.end(), rng);
        CHECK(surface_log_admissible(shuffled) == base);

        SurfaceLogPair padded = pair;
        std::vector<int> dup(2 * pair.genus);
        for (auto& entry : dup) entry = bit(rng);
        padded.curves.push_back(dup);
        padded.curves.push_back(dup);
        CHECK(surface_log_admissible(padded) == base);
    }
}

TEST_CASE("cp2 family words and recognition") {
    auto w = cp2_family_word(1, 2);
    REQUIRE(w.size() == 5);
    CHECK(w[0] == CurveClass(1, 3));
    CHECK(w[1] == CurveClass(1, 0));
    CHECK(w[2] == CurveClass(1, -3));
    CHECK(w[3] == CurveClass(0, 1));
    CHECK(w[4] == CurveClass(0, 1));

    auto shape = match_cp2_family(w);
    REQUIRE(shape.has_value());
    CHECK(shape->k == 1);
    CHECK(shape->n == 2);
    CHECK(shape->m() == 3);

    for (long long k = 1; k <= 3; ++k)
        for (long long n = 0; n <= 4; ++n) {
            auto word = cp2_family_word(k, n);
            auto found = match_cp2_family(word);
            REQUIRE(found.has_value());
            CHECK(found->k == k);
            CHECK(found->n == n);
        }

    CHECK(!match_cp2_family({CurveClass(0, 1)}).has_value());
    CHECK(!match_cp2_family({}).has_value());
    auto spoiled = cp2_family_word(2, 1);
    spoiled[1] = CurveClass(1, 1);
    CHECK(!match_cp2_family(spoiled).has_value());
}
