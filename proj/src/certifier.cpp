#include <blf/certifier.hpp>

#include <algorithm>
#include <sstream>

namespace blf {

namespace {

const char* kHypGenusOne = "fiber genus one";
const char* kHypDiskBase = "base is the disk";
const char* kHypTwistPower =
    "boundary monodromy is a power of a Dehn twist";
const char* kHypEssential =
    "generic fiber homologically essential (automatic over the disk)";

}  // namespace

CompletionCertificate check_completable(const FibrationSpec& spec,
                                        Handedness h) {
    if (spec.fiber_genus != 1) {
        std::ostringstream os;
        os << "completion requires fiber genus 1, got "
           << spec.fiber_genus;
        throw UnsupportedInput(os.str());
    }

    CompletionCertificate cert;
    cert.mu = static_cast<long long>(spec.word.size());
    cert.cap_count = 1;
    cert.boundary_class = classify(total_monodromy(spec.word, h));

    switch (cert.boundary_class.kind) {
        case MonodromyClass::Kind::identity:
            cert.completable = true;
            cert.unique = false;  // any n-model glues to a trivial end
            break;
        case MonodromyClass::Kind::twist_power:
            cert.completable = true;
            cert.unique = true;
            cert.twist_axis = cert.boundary_class.axis;
            cert.twist_exponent = cert.boundary_class.exponent;
            cert.cap_euler_number = -cert.twist_exponent;
            break;
        default:
            cert.completable = false;
            cert.rejected_reason = to_string(cert.boundary_class.kind);
            break;
    }
    return cert;
}

InvariantReport invariants(const CompletionCertificate& cert) {
    if (!cert.completable)
        throw ContractViolation(
            "invariant report requires a completable certificate");

    InvariantReport report;
    report.mu = cert.mu;
    report.euler_characteristic = cert.mu;
    report.type_change_components = cert.cap_count;
    report.type_change_topology = "torus";
    report.homologically_essential = true;
    report.stable_gcs = true;
    report.hypotheses = {kHypGenusOne, kHypDiskBase, kHypTwistPower,
                         kHypEssential};
    return report;
}

StableGcsVerdict certify_stable_gcs(const FibrationSpec& spec, Handedness h) {
    StableGcsVerdict verdict;

    if (spec.fiber_genus != 1) {
        std::ostringstream os;
        os << kHypGenusOne << " (got genus " << spec.fiber_genus << ")";
        verdict.failed_hypothesis = os.str();
        return verdict;
    }
    verdict.verified.push_back(kHypGenusOne);
    verdict.verified.push_back(kHypDiskBase);

    const MonodromyClass cls = classify(total_monodromy(spec.word, h));
    if (!cls.completable()) {
        std::ostringstream os;
        os << kHypTwistPower << " (found " << to_string(cls.kind) << ")";
        verdict.failed_hypothesis = os.str();
        return verdict;
    }
    verdict.verified.push_back(kHypTwistPower);
    verdict.verified.push_back(kHypEssential);

    verdict.certified = true;
    if (cls.kind == MonodromyClass::Kind::identity)
        verdict.note =
            "boundary monodromy trivial: completions exist but are not "
            "unique";
    return verdict;
}

bool surface_log_admissible(const SurfaceLogPair& pair) {
    if (pair.genus < 0) throw MalformedInput("surface genus must be >= 0");
    const std::size_t want = static_cast<std::size_t>(2 * pair.genus);
    for (const auto& curve : pair.curves) {
        if (curve.size() != want) {
            std::ostringstream os;
            os << "curve vector has length " << curve.size()
               << ", expected 2g = " << want;
            throw MalformedInput(os.str());
        }
        for (int entry : curve)
            if (entry != 0 && entry != 1)
                throw MalformedInput("curve vector entries must be 0 or 1");
    }

    if (pair.has_boundary) return true;  // Z = boundary is always admissible

    std::vector<int> sum(want, 0);
    for (const auto& curve : pair.curves)
        for (std::size_t i = 0; i < want; ++i) sum[i] ^= curve[i];
    return std::all_of(sum.begin(), sum.end(),
                       [](int entry) { return entry == 0; });
}

VanishingCycleWord cp2_family_word(long long k, long long n) {
    if (k < 1) throw DomainError("family parameter k must be >= 1");
    if (n < 0) throw DomainError("family parameter n must be >= 0");
    VanishingCycleWord w;
    w.emplace_back(1, 4 * k - 1);
    for (long long j = k - 1; j >= 1 - k; --j) w.emplace_back(1, 4 * j);
    w.emplace_back(1, -(4 * k - 1));
    for (long long i = 0; i < n; ++i) w.emplace_back(0, 1);
    return w;
}

std::optional<Cp2FamilyShape> match_cp2_family(const VanishingCycleWord& w) {
    const CurveClass b(0, 1);
    std::size_t core = w.size();
    while (core > 0 && w[core - 1] == b) --core;
    if (core < 3 || core % 2 == 0) return std::nullopt;

    Cp2FamilyShape shape;
    shape.k = static_cast<long long>((core - 1) / 2);
    shape.n = static_cast<long long>(w.size() - core);

    if (cp2_family_word(shape.k, shape.n) != w) return std::nullopt;
    return shape;
}

}  // namespace blf
