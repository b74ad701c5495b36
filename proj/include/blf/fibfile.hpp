#pragma once

#include <blf/certifier.hpp>
#include <blf/fibration.hpp>

#include <optional>
#include <string>
#include <vector>

namespace blf {

// Parsed form of the line-oriented fibration-description format:
//
//   file  := line*
//   line  := "genus" "=" INT
//          | "base" "=" "disk"
//          | "cycles" "=" pair+
//          | "surface" "=" INT vec*
//   pair  := "(" INT "," INT ")"
//   vec   := "[" (0|1) ("," (0|1))* "]"
//
// '#' starts a comment running to the end of the line. Multiple cycles
// lines append in order; genus, base and surface may each appear once.
// Cycle pairs are kept exactly as written (duplicates and non-canonical
// signs included); primitivity is enforced at parse time with a position.

struct RawCycle {
    Int p, q;
    long long line = 0, col = 0;

    friend bool operator==(const RawCycle& x, const RawCycle& y) {
        return x.p == y.p && x.q == y.q;  // positions are not part of the value
    }
};

struct RawSurface {
    long long genus = 0;
    std::vector<std::vector<int>> curves;

    friend bool operator==(const RawSurface&, const RawSurface&) = default;
};

struct FibrationFile {
    std::optional<long long> genus;  // defaults to 1 when building the spec
    bool base_given = false;         // the only accepted base is "disk"
    std::vector<RawCycle> cycles;
    std::optional<RawSurface> surface;

    friend bool operator==(const FibrationFile&, const FibrationFile&) =
        default;
};

FibrationFile parse_fibration(const std::string& text);

// Canonical text form; parse_fibration(print_fibration(f)) == f.
std::string print_fibration(const FibrationFile& file);

// Cycle entries canonicalized into a computable spec. genus defaults to 1
// and the base to the disk when the file leaves them implicit.
FibrationSpec to_spec(const FibrationFile& file);

std::optional<SurfaceLogPair> to_surface_pair(const FibrationFile& file);

// Standalone "pair+" parser for command-line word arguments; positions are
// reported on line 1.
std::vector<RawCycle> parse_pair_list(const std::string& text);

}  // namespace blf
