#pragma once

#include <blf/mcg.hpp>

#include <cstddef>
#include <vector>

namespace blf {

// Combinatorial data of a genus-one Lefschetz fibration over the disk:
// vanishing cycles in the order the singular fibers are met along the
// chosen base orientation, position 0 first. Entries are canonical-sign
// primitive classes by construction of CurveClass.
using VanishingCycleWord = std::vector<CurveClass>;

std::ostream& operator<<(std::ostream& os, const VanishingCycleWord& w);

enum class BaseKind { disk };

struct FibrationSpec {
    long long fiber_genus = 1;
    BaseKind base = BaseKind::disk;
    VanishingCycleWord word;
};

// Monodromy around the base boundary: under Handedness::right the ordered
// product T_{c_mu} * ... * T_{c_1} (later fibers act on the left), under
// Handedness::left its inverse. The empty word gives the identity.
SL2Z total_monodromy(const VanishingCycleWord& w,
                     Handedness h = Handedness::right);

// Elementary product-preserving transposition of the factors at positions
// i, i+1. `right` slides entry i past its successor, conjugating it by the
// successor's twist; `left` is the inverse move. Throws DomainError when
// i+1 is not a valid position.
enum class HurwitzDirection { left, right };

VanishingCycleWord hurwitz_move(const VanishingCycleWord& w, std::size_t i,
                                HurwitzDirection dir);

// Total order on words used wherever a least orbit representative is
// needed: first by the largest coordinate magnitude appearing in the word,
// then entrywise lexicographically. Well-founded, so repeated minimization
// terminates even though Hurwitz orbits need not be finite.
bool word_less(const VanishingCycleWord& a, const VanishingCycleWord& b);

// Least word reachable by Hurwitz moves, computed by budgeted
// breadth-first orbit exploration restarted from each new minimum until a
// fixpoint. Deterministic for a fixed budget and idempotent by
// construction; `complete` reports whether the final pass exhausted the
// whole orbit. Budget counts visited words per pass and must be positive.
struct CanonicalWord {
    VanishingCycleWord word;
    bool complete = false;
};

CanonicalWord hurwitz_canonical(const VanishingCycleWord& w,
                                std::size_t budget = 10000);

// All primitive canonical-sign classes with |p|,|q| <= bound, ascending.
std::vector<CurveClass> curve_alphabet(long long bound);

enum class SearchQuotient { none, conjugation, hurwitz };

// Thrown when factorization search exceeds its node budget; carries the
// sound-but-incomplete results found so far.
struct SearchLimitExceeded : Error {
    SearchLimitExceeded(std::vector<VanishingCycleWord> partial_,
                        std::size_t budget_);
    std::vector<VanishingCycleWord> partial;
    std::size_t budget;
};

inline constexpr std::size_t kDefaultSearchBudget = 20'000'000;

// Every length-`length` word over curve classes with |p|,|q| <= bound
// whose total monodromy equals `target`, exhaustive within the bound and
// sorted by word_less. Meet-in-the-middle above length 3, plain depth
// first below. Optionally quotiented by simultaneous conjugation with
// SL(2,Z) elements of entries <= bound, or by Hurwitz canonical form.
std::vector<VanishingCycleWord> search_factorizations(
    const SL2Z& target, std::size_t length, long long coeff_bound,
    SearchQuotient quotient = SearchQuotient::none,
    std::size_t budget = kDefaultSearchBudget);

// chi of the open manifold carrying a genus-g Lefschetz fibration with mu
// singular fibers: 2(2-2g) + mu.
long long euler_characteristic_open(long long genus, long long mu);

}  // namespace blf
