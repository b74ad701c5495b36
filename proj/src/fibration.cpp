#include <blf/fibration.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

namespace blf {

std::ostream& operator<<(std::ostream& os, const VanishingCycleWord& w) {
    os << "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << " ";
        os << w[i];
    }
    return os << "]";
}

SL2Z total_monodromy(const VanishingCycleWord& w, Handedness h) {
    SL2Z m;
    for (const CurveClass& c : w) m = twist_matrix(c) * m;
    return h == Handedness::right ? m : m.inverse();
}

VanishingCycleWord hurwitz_move(const VanishingCycleWord& w, std::size_t i,
                                HurwitzDirection dir) {
    if (i + 1 >= w.size()) {
        std::ostringstream os;
        os << "hurwitz move index " << i << " out of range for word of length "
           << w.size();
        throw DomainError(os.str());
    }
    VanishingCycleWord out = w;
    if (dir == HurwitzDirection::right) {
        // (a, b) -> (b, T_b a): entry i slides right, conjugated by the
        // twist of its new left neighbor. Product T_b T_a is preserved.
        out[i] = w[i + 1];
        out[i + 1] = transform(twist_matrix(w[i + 1]), w[i]);
    } else {
        // Inverse move: (a, b) -> (T_a^{-1} b, a).
        out[i] = transform(twist_matrix(w[i]).inverse(), w[i + 1]);
        out[i + 1] = w[i];
    }
    return out;
}

namespace {

Int word_norm(const VanishingCycleWord& w) {
    Int n = 0;
    for (const CurveClass& c : w) {
        n = std::max(n, abs(c.p()));
        n = std::max(n, abs(c.q()));
    }
    return n;
}

}  // namespace

bool word_less(const VanishingCycleWord& a, const VanishingCycleWord& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    const Int na = word_norm(a);
    const Int nb = word_norm(b);
    if (na != nb) return na < nb;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(),
                                        b.end());
}

CanonicalWord hurwitz_canonical(const VanishingCycleWord& w,
                                std::size_t budget) {
    if (budget == 0) throw DomainError("hurwitz canonical budget must be > 0");
    if (w.size() < 2) return {w, true};

    VanishingCycleWord start = w;
    for (;;) {
        std::set<VanishingCycleWord> visited{start};
        std::deque<VanishingCycleWord> frontier{start};
        VanishingCycleWord best = start;
        bool exhausted = true;

        while (!frontier.empty() && exhausted) {
            VanishingCycleWord cur = std::move(frontier.front());
            frontier.pop_front();
            for (std::size_t i = 0; i + 1 < cur.size() && exhausted; ++i) {
                for (auto dir :
                     {HurwitzDirection::right, HurwitzDirection::left}) {
                    VanishingCycleWord next = hurwitz_move(cur, i, dir);
                    if (!visited.contains(next)) {
                        if (visited.size() >= budget) {
                            exhausted = false;
                            break;
                        }
                        if (word_less(next, best)) best = next;
                        frontier.push_back(next);
                        visited.insert(std::move(next));
                    }
                }
            }
        }

        if (best == start) return {start, exhausted};
        // Strictly smaller in the well-founded word order; restart there.
        start = std::move(best);
    }
}

std::vector<CurveClass> curve_alphabet(long long bound) {
    if (bound < 1) throw DomainError("curve alphabet bound must be >= 1");
    std::vector<CurveClass> out;
    for (long long p = -bound; p <= bound; ++p)
        for (long long q = -bound; q <= bound; ++q) {
            if (p == 0 && q == 0) continue;
            if (std::gcd(p, q) != 1) continue;
            if (q < 0 || (q == 0 && p < 0)) continue;  // canonical reps only
            out.emplace_back(p, q);
        }
    std::sort(out.begin(), out.end());
    return out;
}

SearchLimitExceeded::SearchLimitExceeded(
    std::vector<VanishingCycleWord> partial_, std::size_t budget_)
    : Error("factorization search exceeded its node budget of " +
            std::to_string(budget_)),
      partial(std::move(partial_)),
      budget(budget_) {}

namespace {

// All of SL(2,Z) with every entry bounded by `bound` in magnitude.
std::vector<SL2Z> bounded_conjugators(long long bound) {
    std::vector<SL2Z> out;
    for (long long a = -bound; a <= bound; ++a)
        for (long long b = -bound; b <= bound; ++b)
            for (long long c = -bound; c <= bound; ++c)
                for (long long d = -bound; d <= bound; ++d)
                    if (a * d - b * c == 1) out.emplace_back(a, b, c, d);
    return out;
}

struct UnionFind {
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t x, std::size_t y) { parent[find(x)] = find(y); }
    std::vector<std::size_t> parent;
};

std::vector<VanishingCycleWord> quotient_by_conjugation(
    std::vector<VanishingCycleWord> words, long long bound) {
    std::map<VanishingCycleWord, std::size_t> index;
    for (std::size_t i = 0; i < words.size(); ++i) index[words[i]] = i;

    UnionFind classes(words.size());
    for (const SL2Z& g : bounded_conjugators(bound)) {
        if (g.is_identity()) continue;
        for (std::size_t i = 0; i < words.size(); ++i) {
            VanishingCycleWord image;
            image.reserve(words[i].size());
            for (const CurveClass& c : words[i])
                image.push_back(transform(g, c));
            auto it = index.find(image);
            if (it != index.end()) classes.unite(i, it->second);
        }
    }

    std::map<std::size_t, VanishingCycleWord> reps;
    for (std::size_t i = 0; i < words.size(); ++i) {
        std::size_t root = classes.find(i);
        auto it = reps.find(root);
        if (it == reps.end() || word_less(words[i], it->second))
            reps[root] = words[i];
    }
    std::vector<VanishingCycleWord> out;
    out.reserve(reps.size());
    for (auto& [root, w] : reps) out.push_back(std::move(w));
    std::sort(out.begin(), out.end(), word_less);
    return out;
}

std::vector<VanishingCycleWord> quotient_by_hurwitz(
    std::vector<VanishingCycleWord> words) {
    std::vector<VanishingCycleWord> out;
    out.reserve(words.size());
    for (const VanishingCycleWord& w : words)
        out.push_back(hurwitz_canonical(w).word);
    std::sort(out.begin(), out.end(), word_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

class FactorizationSearch {
public:
    FactorizationSearch(const SL2Z& target, std::size_t length,
                        long long bound, std::size_t budget)
        : target_(target),
          length_(length),
          alphabet_(curve_alphabet(bound)),
          budget_(budget) {}

    std::vector<VanishingCycleWord> run() {
        if (length_ == 0) {
            if (target_.is_identity()) results_.push_back({});
        } else if (length_ < 4) {
            VanishingCycleWord cur;
            dfs(cur, SL2Z());
        } else {
            meet_in_the_middle();
        }
        for (const VanishingCycleWord& w : results_)
            if (total_monodromy(w) != target_)
                throw InvariantViolation("search produced an unsound word");
        std::sort(results_.begin(), results_.end(), word_less);
        return std::move(results_);
    }

private:
    void charge() {
        if (++nodes_ > budget_) {
            std::sort(results_.begin(), results_.end(), word_less);
            throw SearchLimitExceeded(std::move(results_), budget_);
        }
    }

    // prefix = T_{c_k} * ... * T_{c_1} for the entries chosen so far.
    void dfs(VanishingCycleWord& cur, const SL2Z& prefix) {
        charge();
        if (cur.size() == length_) {
            if (prefix == target_) results_.push_back(cur);
            return;
        }
        for (const CurveClass& c : alphabet_) {
            cur.push_back(c);
            dfs(cur, twist_matrix(c) * prefix);
            cur.pop_back();
        }
    }

    // Each word splits as low entries 0..s-1 and high entries s..mu-1 with
    // total = P_hi * P_lo, so matching low halves are found by looking up
    // target * P_lo^{-1} among all high-half products.
    void meet_in_the_middle() {
        const std::size_t lo_len = length_ / 2;
        const std::size_t hi_len = length_ - lo_len;

        std::map<SL2Z, std::vector<VanishingCycleWord>> high;
        VanishingCycleWord cur;
        enumerate(cur, SL2Z(), hi_len, [&](const VanishingCycleWord& w,
                                           const SL2Z& prod) {
            high[prod].push_back(w);
        });
        enumerate(cur, SL2Z(), lo_len, [&](const VanishingCycleWord& w,
                                           const SL2Z& prod) {
            auto it = high.find(target_ * prod.inverse());
            if (it == high.end()) return;
            for (const VanishingCycleWord& h : it->second) {
                VanishingCycleWord full = w;
                full.insert(full.end(), h.begin(), h.end());
                results_.push_back(std::move(full));
            }
        });
    }

    template <typename Fn>
    void enumerate(VanishingCycleWord& cur, const SL2Z& prefix,
                   std::size_t len, Fn&& emit) {
        charge();
        if (cur.size() == len) {
            emit(cur, prefix);
            return;
        }
        for (const CurveClass& c : alphabet_) {
            cur.push_back(c);
            enumerate(cur, twist_matrix(c) * prefix, len, emit);
            cur.pop_back();
        }
    }

    SL2Z target_;
    std::size_t length_;
    std::vector<CurveClass> alphabet_;
    std::size_t budget_;
    std::size_t nodes_ = 0;
    std::vector<VanishingCycleWord> results_;
};

}  // namespace

std::vector<VanishingCycleWord> search_factorizations(const SL2Z& target,
                                                      std::size_t length,
                                                      long long coeff_bound,
                                                      SearchQuotient quotient,
                                                      std::size_t budget) {
    FactorizationSearch search(target, length, coeff_bound, budget);
    std::vector<VanishingCycleWord> words = search.run();
    switch (quotient) {
        case SearchQuotient::none: return words;
        case SearchQuotient::conjugation:
            return quotient_by_conjugation(std::move(words), coeff_bound);
        case SearchQuotient::hurwitz:
            return quotient_by_hurwitz(std::move(words));
    }
    return words;
}

long long euler_characteristic_open(long long genus, long long mu) {
    if (genus < 0) throw DomainError("fiber genus must be >= 0");
    if (mu < 0) throw DomainError("singular fiber count must be >= 0");
    return 2 * (2 - 2 * genus) + mu;
}

}  // namespace blf
