#include <blf/cli.hpp>

#include <blf/niloracle.hpp>
#include <blf/report.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace blf {

namespace {

constexpr const char* kUsage =
    "usage: blf <command> [--file PATH] [--n INT] [--target PAIRPRODUCT]\n"
    "           [--length INT] [--bound INT] [--quotient none|conj|hurwitz]\n"
    "           [--budget INT]\n"
    "commands: classify complete invariants certify search hurwitz-canon "
    "nilcheck\n";

struct Options {
    std::string command;
    std::optional<std::string> file;
    std::optional<std::string> n;
    std::optional<std::string> target;
    std::optional<long long> length;
    std::optional<long long> bound;
    std::optional<std::string> quotient;
    std::optional<long long> budget;
};

struct UsageError : Error {
    using Error::Error;
};

long long parse_count(const std::string& text, const std::string& flag) {
    try {
        std::size_t used = 0;
        long long value = std::stoll(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return value;
    } catch (const std::exception&) {
        throw UsageError(flag + " expects an integer, got '" + text + "'");
    }
}

Options parse_options(const std::vector<std::string>& args) {
    if (args.empty()) throw UsageError("missing command");
    Options opt;
    opt.command = args[0];

    for (std::size_t i = 1; i < args.size(); ++i) {
        const std::string& flag = args[i];
        if (i + 1 >= args.size())
            throw UsageError("flag " + flag + " expects a value");
        const std::string& value = args[++i];
        if (flag == "--file")
            opt.file = value;
        else if (flag == "--n")
            opt.n = value;
        else if (flag == "--target")
            opt.target = value;
        else if (flag == "--length")
            opt.length = parse_count(value, flag);
        else if (flag == "--bound")
            opt.bound = parse_count(value, flag);
        else if (flag == "--quotient")
            opt.quotient = value;
        else if (flag == "--budget")
            opt.budget = parse_count(value, flag);
        else
            throw UsageError("unknown flag " + flag);
    }
    return opt;
}

FibrationFile load_file(const Options& opt) {
    if (!opt.file)
        throw UsageError("command " + opt.command + " requires --file");
    std::ifstream in(*opt.file, std::ios::binary);
    if (!in) throw UsageError("cannot open file '" + *opt.file + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_fibration(text.str());
}

VanishingCycleWord word_of(const FibrationFile& file) {
    VanishingCycleWord w;
    w.reserve(file.cycles.size());
    for (const RawCycle& c : file.cycles) w.emplace_back(c.p, c.q);
    return w;
}

void emit(const Json& report, std::ostream& out) {
    out << report.dump(2) << "\n";
}

int cmd_classify(const Options& opt, std::ostream& out) {
    const FibrationFile file = load_file(opt);
    const VanishingCycleWord word = word_of(file);
    const SL2Z m = total_monodromy(word);

    Json report = report_envelope("classify", Handedness::right);
    report["input"] = input_json(file);
    report["word"] = to_json(word);
    report["total_monodromy"] = to_json(m);
    report["class"] = to_json(classify(m));
    report["discrepancies"] = discrepancy_flags(word);
    emit(report, out);
    return 0;
}

int cmd_complete(const Options& opt, std::ostream& out) {
    const FibrationFile file = load_file(opt);
    const CompletionCertificate cert = check_completable(to_spec(file));

    Json report = report_envelope("complete", Handedness::right);
    report["input"] = input_json(file);
    report["word"] = to_json(word_of(file));
    report["certificate"] = to_json(cert);
    report["discrepancies"] = discrepancy_flags(word_of(file));
    emit(report, out);
    return cert.completable ? 0 : 2;
}

int cmd_invariants(const Options& opt, std::ostream& out) {
    const FibrationFile file = load_file(opt);
    const CompletionCertificate cert = check_completable(to_spec(file));

    Json report = report_envelope("invariants", Handedness::right);
    report["input"] = input_json(file);
    report["word"] = to_json(word_of(file));
    report["certificate"] = to_json(cert);
    report["invariants"] =
        cert.completable ? to_json(invariants(cert)) : Json(nullptr);
    report["discrepancies"] = discrepancy_flags(word_of(file));
    emit(report, out);
    return cert.completable ? 0 : 2;
}

int cmd_certify(const Options& opt, std::ostream& out) {
    const FibrationFile file = load_file(opt);
    const StableGcsVerdict verdict = certify_stable_gcs(to_spec(file));

    Json report = report_envelope("certify", Handedness::right);
    report["input"] = input_json(file);
    report["word"] = to_json(word_of(file));
    report["verdict"] = to_json(verdict);

    bool surface_ok = true;
    if (auto pair = to_surface_pair(file)) {
        surface_ok = surface_log_admissible(*pair);
        Json s;
        s["genus"] = pair->genus;
        s["curve_count"] = pair->curves.size();
        s["admissible"] = surface_ok;
        report["surface_log"] = s;
    } else {
        report["surface_log"] = nullptr;
    }

    report["discrepancies"] = discrepancy_flags(word_of(file));
    emit(report, out);
    return (verdict.certified && surface_ok) ? 0 : 2;
}

SearchQuotient parse_quotient(const Options& opt) {
    if (!opt.quotient || *opt.quotient == "none") return SearchQuotient::none;
    if (*opt.quotient == "conj") return SearchQuotient::conjugation;
    if (*opt.quotient == "hurwitz") return SearchQuotient::hurwitz;
    throw UsageError("--quotient expects none, conj or hurwitz, got '" +
                     *opt.quotient + "'");
}

int cmd_search(const Options& opt, std::ostream& out, std::ostream& err) {
    if (!opt.target) throw UsageError("search requires --target");
    if (!opt.length) throw UsageError("search requires --length");
    if (!opt.bound) throw UsageError("search requires --bound");
    if (*opt.length < 0) throw UsageError("--length must be >= 0");

    VanishingCycleWord target_word;
    if (*opt.target != "I")
        for (const RawCycle& c : parse_pair_list(*opt.target))
            target_word.emplace_back(c.p, c.q);
    const SL2Z target = total_monodromy(target_word);
    const SearchQuotient quotient = parse_quotient(opt);
    const std::size_t budget =
        opt.budget ? static_cast<std::size_t>(*opt.budget)
                   : kDefaultSearchBudget;

    Json report = report_envelope("search", Handedness::right);
    report["target"] = to_json(target);
    report["length"] = *opt.length;
    report["bound"] = *opt.bound;
    report["quotient"] = opt.quotient.value_or("none");

    try {
        auto words = search_factorizations(
            target, static_cast<std::size_t>(*opt.length), *opt.bound,
            quotient, budget);
        report["complete"] = true;
        report["count"] = words.size();
        Json arr = Json::array();
        for (const auto& w : words) arr.push_back(to_json(w));
        report["words"] = arr;
        emit(report, out);
        return 0;
    } catch (const SearchLimitExceeded& e) {
        report["complete"] = false;
        report["count"] = e.partial.size();
        Json arr = Json::array();
        for (const auto& w : e.partial) arr.push_back(to_json(w));
        report["words"] = arr;
        report["error"] = e.what();
        emit(report, out);
        err << "blf: " << e.what() << "\n";
        return 1;
    }
}

int cmd_hurwitz_canon(const Options& opt, std::ostream& out) {
    const FibrationFile file = load_file(opt);
    const VanishingCycleWord word = word_of(file);
    // Hyperbolic words have infinite orbits with fast-growing entries, so
    // the default exploration is deliberately modest; raise --budget to
    // push further.
    const std::size_t budget =
        opt.budget ? static_cast<std::size_t>(*opt.budget) : 1000;

    const CanonicalWord canon = hurwitz_canonical(word, budget);

    Json report = report_envelope("hurwitz-canon", Handedness::right);
    report["input"] = input_json(file);
    report["word"] = to_json(word);
    report["canonical"] = to_json(canon.word);
    report["orbit_exhausted"] = canon.complete;
    report["total_monodromy"] = to_json(total_monodromy(canon.word));
    report["discrepancies"] = discrepancy_flags(word);
    emit(report, out);
    return 0;
}

int cmd_nilcheck(const Options& opt, std::ostream& out) {
    if (!opt.n) throw UsageError("nilcheck requires --n");
    Int n;
    try {
        n = Int(*opt.n);
    } catch (const std::exception&) {
        throw UsageError("--n expects an integer, got '" + *opt.n + "'");
    }

    const SL2Z m = nil_monodromy(n);
    const MonodromyClass cls = classify(m);
    const Int euler = euler_class(n);

    const bool consistent =
        euler == n && (n == 0 ? cls.kind == MonodromyClass::Kind::identity
                              : cls.is_twist_power() &&
                                    abs(cls.exponent) == abs(n));
    if (!consistent)
        throw InvariantViolation("lattice oracle disagrees with itself");

    Json report = report_envelope("nilcheck", Handedness::right);
    report["n"] = n.str();
    report["fiber_monodromy"] = to_json(m);
    report["class"] = to_json(cls);
    report["euler_class"] = euler.str();
    report["consistent"] = true;
    emit(report, out);
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    try {
        const Options opt = parse_options(args);
        if (opt.command == "classify") return cmd_classify(opt, out);
        if (opt.command == "complete") return cmd_complete(opt, out);
        if (opt.command == "invariants") return cmd_invariants(opt, out);
        if (opt.command == "certify") return cmd_certify(opt, out);
        if (opt.command == "search") return cmd_search(opt, out, err);
        if (opt.command == "hurwitz-canon") return cmd_hurwitz_canon(opt, out);
        if (opt.command == "nilcheck") return cmd_nilcheck(opt, out);
        throw UsageError("unknown command '" + opt.command + "'");
    } catch (const UsageError& e) {
        err << "blf: " << e.what() << "\n" << kUsage;
        return 1;
    } catch (const Error& e) {
        err << "blf: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace blf
