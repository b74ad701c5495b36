#pragma once

#include <blf/certifier.hpp>
#include <blf/fibfile.hpp>

#include <json.hpp>

namespace blf {

// Insertion-ordered JSON keeps reports byte-identical across runs.
using Json = nlohmann::ordered_json;

// The realized global signs of the active convention, measured rather than
// asserted: sigma from the lattice oracle (nil_monodromy(n) classifies as
// delta^(sigma n)), sigma_family from the odd-m CP^2 family (boundary
// exponent sigma_family * (10k-1-n)). Every report embeds these so a bare
// exponent is always reproducible.
struct ConventionLedger {
    Handedness handedness = Handedness::right;
    int sigma = 0;
    int sigma_family = 0;
};

ConventionLedger compute_convention_ledger(Handedness h);

Json to_json(const ConventionLedger& ledger);
Json to_json(const SL2Z& m);
Json to_json(const CurveClass& v);
Json to_json(const VanishingCycleWord& w);
Json to_json(const MonodromyClass& cls);
Json to_json(const CompletionCertificate& cert);
Json to_json(const InvariantReport& report);
Json to_json(const StableGcsVerdict& verdict);

Json input_json(const FibrationFile& file);

// Flags attached to any word-bearing report; currently the mu-versus-chi
// tension on the recognized CP^2 family fixtures.
Json discrepancy_flags(const VanishingCycleWord& word);

// Envelope shared by every command: tool id, version, command name and the
// embedded convention ledger.
Json report_envelope(const std::string& command, Handedness h);

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace blf
