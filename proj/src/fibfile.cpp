#include <blf/fibfile.hpp>

#include <cctype>
#include <sstream>

namespace blf {

namespace {

// Character scanner over one logical line. Columns are 1-based.
class LineScanner {
public:
    LineScanner(std::string text, long long line)
        : text_(std::move(text)), line_(line) {}

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }

    long long line() const { return line_; }
    long long col() const { return static_cast<long long>(pos_) + 1; }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(line_, col(), message);
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void expect(char c, const std::string& what) {
        skip_ws();
        if (peek() != c) fail("expected '" + std::string(1, c) + "' " + what);
        ++pos_;
    }

    std::string word() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                text_[pos_] == '_' || text_[pos_] == '-'))
            ++pos_;
        return text_.substr(start, pos_ - start);
    }

    Int integer() {
        skip_ws();
        std::size_t start = pos_;
        if (peek() == '-') ++pos_;
        std::size_t digits = pos_;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == digits) {
            pos_ = start;
            fail("expected an integer");
        }
        return Int(text_.substr(start, pos_ - start));
    }

private:
    std::string text_;
    long long line_;
    std::size_t pos_ = 0;
};

RawCycle parse_pair(LineScanner& in) {
    in.skip_ws();
    RawCycle cycle;
    cycle.line = in.line();
    cycle.col = in.col();
    in.expect('(', "to open a cycle pair");
    cycle.p = in.integer();
    in.expect(',', "between pair entries");
    cycle.q = in.integer();
    in.expect(')', "to close a cycle pair");

    if (cycle.p == 0 && cycle.q == 0)
        throw ParseError(cycle.line, cycle.col,
                         "non-primitive class (0,0)");
    if (gcd(abs(cycle.p), abs(cycle.q)) != 1) {
        std::ostringstream os;
        os << "non-primitive class (" << cycle.p << "," << cycle.q << ")";
        throw ParseError(cycle.line, cycle.col, os.str());
    }
    return cycle;
}

std::vector<int> parse_vec(LineScanner& in) {
    in.expect('[', "to open a Z2 vector");
    std::vector<int> out;
    for (;;) {
        in.skip_ws();
        char c = in.peek();
        if (c != '0' && c != '1') in.fail("expected a 0 or 1 entry");
        in.expect(c, "");
        out.push_back(c - '0');
        in.skip_ws();
        if (in.peek() == ',') {
            in.expect(',', "");
            continue;
        }
        break;
    }
    in.expect(']', "to close a Z2 vector");
    return out;
}

long long small_nonnegative(LineScanner& in, const std::string& what) {
    in.skip_ws();
    long long col = in.col();
    Int value = in.integer();
    if (value < 0 || value > 1000000) {
        std::ostringstream os;
        os << what << " must be in [0, 10^6], got " << value;
        throw ParseError(in.line(), col, os.str());
    }
    return value.convert_to<long long>();
}

}  // namespace

FibrationFile parse_fibration(const std::string& text) {
    FibrationFile file;
    std::istringstream stream(text);
    std::string raw;
    long long lineno = 0;

    while (std::getline(stream, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        LineScanner in(raw, lineno);
        if (in.at_end()) continue;

        long long key_col = in.col();
        std::string key = in.word();
        auto duplicate = [&](const char* name) {
            throw ParseError(lineno, key_col,
                             std::string("duplicate key '") + name + "'");
        };

        if (key == "genus") {
            if (file.genus) duplicate("genus");
            in.expect('=', "after 'genus'");
            file.genus = small_nonnegative(in, "genus");
        } else if (key == "base") {
            if (file.base_given) duplicate("base");
            in.expect('=', "after 'base'");
            in.skip_ws();
            long long col = in.col();
            std::string base = in.word();
            if (base != "disk")
                throw ParseError(lineno, col,
                                 "unsupported base '" + base +
                                     "' (only 'disk' is accepted)");
            file.base_given = true;
        } else if (key == "cycles") {
            in.expect('=', "after 'cycles'");
            if (in.at_end()) in.fail("expected at least one cycle pair");
            while (!in.at_end()) file.cycles.push_back(parse_pair(in));
        } else if (key == "surface") {
            if (file.surface) duplicate("surface");
            in.expect('=', "after 'surface'");
            RawSurface surface;
            surface.genus = small_nonnegative(in, "surface genus");
            while (!in.at_end()) {
                long long col = in.col();  // at_end() already skipped blanks
                std::vector<int> vec = parse_vec(in);
                if (static_cast<long long>(vec.size()) !=
                    2 * surface.genus) {
                    std::ostringstream os;
                    os << "Z2 vector has length " << vec.size()
                       << ", expected 2g = " << 2 * surface.genus;
                    throw ParseError(lineno, col, os.str());
                }
                surface.curves.push_back(std::move(vec));
            }
            file.surface = std::move(surface);
        } else if (key.empty()) {
            in.fail("expected a key (genus, base, cycles or surface)");
        } else {
            throw ParseError(lineno, key_col, "unknown key '" + key + "'");
        }
    }
    return file;
}

std::string print_fibration(const FibrationFile& file) {
    std::ostringstream os;
    if (file.genus) os << "genus = " << *file.genus << "\n";
    if (file.base_given) os << "base = disk\n";
    if (!file.cycles.empty()) {
        os << "cycles =";
        for (const RawCycle& c : file.cycles)
            os << " (" << c.p << "," << c.q << ")";
        os << "\n";
    }
    if (file.surface) {
        os << "surface = " << file.surface->genus;
        for (const auto& vec : file.surface->curves) {
            os << " [";
            for (std::size_t i = 0; i < vec.size(); ++i) {
                if (i) os << ",";
                os << vec[i];
            }
            os << "]";
        }
        os << "\n";
    }
    return os.str();
}

FibrationSpec to_spec(const FibrationFile& file) {
    FibrationSpec spec;
    spec.fiber_genus = file.genus.value_or(1);
    spec.base = BaseKind::disk;
    spec.word.reserve(file.cycles.size());
    for (const RawCycle& c : file.cycles) spec.word.emplace_back(c.p, c.q);
    return spec;
}

std::optional<SurfaceLogPair> to_surface_pair(const FibrationFile& file) {
    if (!file.surface) return std::nullopt;
    SurfaceLogPair pair;
    pair.genus = file.surface->genus;
    pair.curves = file.surface->curves;
    pair.has_boundary = false;  // the file format only describes closed pairs
    return pair;
}

std::vector<RawCycle> parse_pair_list(const std::string& text) {
    LineScanner in(text, 1);
    std::vector<RawCycle> out;
    if (in.at_end()) in.fail("expected at least one cycle pair");
    while (!in.at_end()) out.push_back(parse_pair(in));
    return out;
}

}  // namespace blf
