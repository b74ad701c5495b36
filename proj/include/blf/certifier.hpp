#pragma once

#include <blf/fibration.hpp>

#include <optional>
#include <string>
#include <vector>

namespace blf {

// Outcome of the completion decision for a genus-one Lefschetz fibration
// over the disk. Completable exactly when the boundary monodromy is the
// identity or a genuine twist power; trace -2 elements are rejected as
// NegativeParabolic since a twist power on homology always has trace
// exactly +2.
//
// twist_exponent is the n with Mon(boundary) = delta^n in the fixed twist
// dictionary. cap_euler_number is reported separately: the standard
// n-model with Euler number m has boundary monodromy delta^{-m} when its
// boundary circle is traversed with the same orientation, so m = -n here;
// an orientation-reversing gluing identification negates it. Reports embed
// this note verbatim.
struct CompletionCertificate {
    bool completable = false;
    MonodromyClass boundary_class;
    std::optional<CurveClass> twist_axis;
    Int twist_exponent = 0;
    Int cap_euler_number = 0;
    int cap_count = 1;
    bool unique = false;  // false iff boundary monodromy trivial
    long long mu = 0;
    std::string rejected_reason;  // classification branch when !completable
};

// Decides completability of the fibration's single boundary end. Requires
// fiber genus one (disk base is built into FibrationSpec); other genera
// throw UnsupportedInput.
CompletionCertificate check_completable(const FibrationSpec& spec,
                                        Handedness h = Handedness::right);

// Invariants of the completed manifold: chi equals the singular fiber
// count, the elliptic locus is one torus per capped end, and the disk base
// makes the fibration homologically essential, so the stable generalized
// complex conclusion applies. Only valid on completable certificates.
struct InvariantReport {
    long long mu = 0;
    long long euler_characteristic = 0;
    int type_change_components = 1;
    std::string type_change_topology = "torus";
    bool homologically_essential = true;
    bool stable_gcs = false;
    std::vector<std::string> hypotheses;
};

InvariantReport invariants(const CompletionCertificate& cert);

// One-directional certificate that every completion of the fibration
// carries a stable generalized complex structure. NotCertified never
// asserts nonexistence; it only means this criterion does not apply.
struct StableGcsVerdict {
    bool certified = false;
    std::vector<std::string> verified;
    std::string failed_hypothesis;
    std::string note;
};

StableGcsVerdict certify_stable_gcs(const FibrationSpec& spec,
                                    Handedness h = Handedness::right);

// A closed oriented surface of genus g with a disjoint union of circles Z,
// each recorded by its Z2-homology vector of length 2g, or a surface with
// boundary with Z equal to that boundary.
struct SurfaceLogPair {
    long long genus = 0;
    std::vector<std::vector<int>> curves;
    bool has_boundary = false;
};

// Log-symplectic admissibility of the pair: true for every boundary pair,
// and for closed surfaces true iff [Z] = 0 over Z2, i.e. the mod-2 sum of
// the curve vectors vanishes. Vectors must have length 2g with entries in
// {0,1}; anything else throws MalformedInput.
bool surface_log_admissible(const SurfaceLogPair& pair);

// The odd-m family of fibrations whose completions realize
// (2k+1) CP^2 # n conj(CP^2): vanishing cycles a+(4k-1)b, then a+4jb for
// j = k-1 down to 1-k, then a-(4k-1)b, then n copies of b.
VanishingCycleWord cp2_family_word(long long k, long long n);

struct Cp2FamilyShape {
    long long k = 0;
    long long n = 0;
    long long m() const { return 2 * k + 1; }
};

// Recognizes words literally of the cp2_family_word shape (entries in
// canonical sign, b-copies trailing). Rearrangements of the same fibration
// by Hurwitz moves are not detected.
std::optional<Cp2FamilyShape> match_cp2_family(const VanishingCycleWord& w);

}  // namespace blf
