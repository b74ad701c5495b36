#include <blf/report.hpp>

#include <blf/niloracle.hpp>

#include <sstream>

namespace blf {

namespace {

std::string str(const Int& x) { return x.str(); }

int sign_of_exponent(const TwistPowerDecomposition& tp) {
    return tp.exponent > 0 ? 1 : -1;
}

}  // namespace

ConventionLedger compute_convention_ledger(Handedness h) {
    ConventionLedger ledger;
    ledger.handedness = h;
    ledger.sigma = sign_of_exponent(extract_twist_power(nil_monodromy(1, h)));
    // Probe the family at k = 1, n = 0, whose boundary exponent has
    // magnitude 10k - 1 - n = 9.
    ledger.sigma_family = sign_of_exponent(
        extract_twist_power(total_monodromy(cp2_family_word(1, 0), h)));
    return ledger;
}

Json to_json(const ConventionLedger& ledger) {
    Json j;
    j["handedness"] = to_string(ledger.handedness);
    j["twist_formula"] =
        "T_v(x) = x + w(x,v) v with w(x,v) = x1 v2 - x2 v1";
    j["composition"] =
        ledger.handedness == Handedness::right
            ? "later singular fibers act on the left: total = "
              "T(c_mu) ... T(c_1)"
            : "left-handed twists in word order: total = "
              "T(c_1)^-1 ... T(c_mu)^-1";
    j["sigma_nil"] = ledger.sigma;
    j["sigma_family"] = ledger.sigma_family;
    j["cap_euler_note"] =
        "a cap of Euler number m has boundary monodromy delta^(-m) when "
        "its boundary circle is traversed with the same orientation; an "
        "orientation-reversing gluing identification negates m";
    return j;
}

Json to_json(const SL2Z& m) {
    return Json::array({Json::array({str(m.a()), str(m.b())}),
                        Json::array({str(m.c()), str(m.d())})});
}

Json to_json(const CurveClass& v) {
    return "(" + str(v.p()) + "," + str(v.q()) + ")";
}

Json to_json(const VanishingCycleWord& w) {
    Json j = Json::array();
    for (const CurveClass& c : w) j.push_back(to_json(c));
    return j;
}

Json to_json(const MonodromyClass& cls) {
    Json j;
    j["kind"] = to_string(cls.kind);
    j["trace"] = str(cls.trace);
    j["axis"] = cls.axis ? to_json(*cls.axis) : Json(nullptr);
    j["exponent"] = cls.axis ? Json(str(cls.exponent)) : Json(nullptr);
    j["elliptic_order"] = cls.elliptic_order
                              ? Json(cls.elliptic_order)
                              : Json(nullptr);
    return j;
}

Json to_json(const CompletionCertificate& cert) {
    Json j;
    j["completable"] = cert.completable;
    j["boundary_class"] = to_json(cert.boundary_class);
    j["twist_axis"] =
        cert.twist_axis ? to_json(*cert.twist_axis) : Json(nullptr);
    j["twist_exponent"] =
        cert.completable ? Json(str(cert.twist_exponent)) : Json(nullptr);
    j["cap_euler_number"] =
        cert.completable ? Json(str(cert.cap_euler_number)) : Json(nullptr);
    j["cap_count"] = cert.cap_count;
    j["unique"] = cert.unique;
    j["mu"] = cert.mu;
    j["rejected_reason"] = cert.completable ? Json(nullptr)
                                            : Json(cert.rejected_reason);
    return j;
}

Json to_json(const InvariantReport& report) {
    Json j;
    j["mu"] = report.mu;
    j["euler_characteristic"] = report.euler_characteristic;
    j["type_change_components"] = report.type_change_components;
    j["type_change_topology"] = report.type_change_topology;
    j["homologically_essential"] = report.homologically_essential;
    j["stable_gcs"] = report.stable_gcs;
    j["hypotheses"] = report.hypotheses;
    return j;
}

Json to_json(const StableGcsVerdict& verdict) {
    Json j;
    j["certified"] = verdict.certified;
    j["verified_hypotheses"] = verdict.verified;
    j["failed_hypothesis"] = verdict.certified
                                 ? Json(nullptr)
                                 : Json(verdict.failed_hypothesis);
    j["note"] = verdict.note.empty() ? Json(nullptr) : Json(verdict.note);
    j["criterion"] =
        "sufficient only: a failed hypothesis never asserts nonexistence";
    return j;
}

Json input_json(const FibrationFile& file) {
    Json j;
    j["genus"] = file.genus ? Json(*file.genus) : Json(nullptr);
    j["base"] = file.base_given ? Json("disk") : Json(nullptr);
    Json cycles = Json::array();
    for (const RawCycle& c : file.cycles)
        cycles.push_back("(" + str(c.p) + "," + str(c.q) + ")");
    j["cycles"] = cycles;
    if (file.surface) {
        Json s;
        s["genus"] = file.surface->genus;
        s["curves"] = file.surface->curves;
        j["surface"] = s;
    } else {
        j["surface"] = nullptr;
    }
    return j;
}

Json discrepancy_flags(const VanishingCycleWord& word) {
    Json flags = Json::array();
    if (auto family = match_cp2_family(word)) {
        const long long mu = family->m() + family->n;
        const long long chi_sum = family->m() + family->n + 2;
        Json flag;
        flag["kind"] = "singular-fiber-count-vs-connected-sum-euler";
        flag["family"] = Json{{"k", family->k},
                              {"n", family->n},
                              {"m", family->m()}};
        flag["mu"] = mu;
        flag["chi_reported"] = mu;
        flag["chi_connected_sum"] = chi_sum;
        std::ostringstream os;
        os << "this word is the family whose completion is identified as "
           << family->m() << " CP^2 # " << family->n
           << " conj(CP^2); that manifold has chi = m+n+2 = " << chi_sum
           << ", while the fibration has mu = m+n = " << mu
           << " singular fibers and chi is reported as mu; the two-unit "
              "gap between these counts is flagged without adjudication";
        flag["detail"] = os.str();
        flags.push_back(flag);
    }
    return flags;
}

Json report_envelope(const std::string& command, Handedness h) {
    Json j;
    j["tool"] = "blf";
    j["version"] = kToolVersion;
    j["command"] = command;
    j["convention"] = to_json(compute_convention_ledger(h));
    return j;
}

}  // namespace blf
