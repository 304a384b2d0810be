#include "whitealg/lyndon.hpp"

#include <algorithm>

namespace whitealg {

int word_samelson_degree(const Word& w, const GeneratorSchedule& schedule) {
    int d = 0;
    for (int letter : w) d += schedule.samelson_degree(letter);
    return d;
}

bool is_lyndon(const Word& w) {
    if (w.empty()) return false;
    const size_t n = w.size();
    for (size_t i = 1; i < n; ++i) {
        // compare w against its rotation starting at i
        for (size_t j = 0; j < n; ++j) {
            int a = w[j];
            int b = w[(i + j) % n];
            if (a < b) break;
            if (a > b) return false;
            if (j + 1 == n) return false;  // equal rotation => periodic
        }
    }
    return true;
}

std::pair<Word, Word> standard_factorization(const Word& w) {
    const size_t n = w.size();
    size_t best = 1;
    for (size_t i = 2; i < n; ++i) {
        // suffix at i vs current best suffix
        if (std::lexicographical_compare(w.begin() + i, w.end(), w.begin() + best, w.end()))
            best = i;
    }
    return {Word(w.begin(), w.begin() + best), Word(w.begin() + best, w.end())};
}

namespace {

// Weighted Duval/FKM recursion: grows pre-necklaces over letters 1..k with
// positive weights, emitting exactly the Lyndon words of total weight
// `target` (a pre-necklace of full weight is Lyndon iff its period equals
// its length). Letters are tried in increasing order, so the output is in
// lexicographic order.
struct LyndonGen {
    const std::vector<int>& weights;  // weights[i-1] = degree of letter i
    int target;
    std::vector<int> a;
    std::vector<Word>& out;

    void run() {
        const int k = static_cast<int>(weights.size());
        for (int j = 1; j <= k; ++j) {
            if (weights[j - 1] > target) break;  // weights increase with index
            a.assign(1, j);
            extend(2, 1, weights[j - 1]);
        }
    }

    void extend(int t, int p, int wsum) {
        if (wsum == target) {
            if (p == t - 1) out.emplace_back(a.begin(), a.end());
            return;
        }
        const int k = static_cast<int>(weights.size());
        int base = a[t - p - 1];  // a[t-p] in 1-based position terms
        if (wsum + weights[base - 1] <= target) {
            a.resize(t);
            a[t - 1] = base;
            extend(t + 1, p, wsum + weights[base - 1]);
        }
        for (int j = base + 1; j <= k; ++j) {
            if (wsum + weights[j - 1] > target) break;
            a.resize(t);
            a[t - 1] = j;
            extend(t + 1, t, wsum + weights[j - 1]);  // larger letter resets the period
        }
    }
};

}  // namespace

std::vector<HallBasisElement> lyndon_basis(const GeneratorSchedule& schedule, int samelson_degree) {
    schedule.check_degree(samelson_degree);
    std::vector<HallBasisElement> basis;
    if (samelson_degree <= 0 || samelson_degree % 2 != 0 || schedule.size() == 0) return basis;

    std::vector<int> weights(schedule.size());
    for (int i = 1; i <= schedule.size(); ++i) weights[i - 1] = schedule.samelson_degree(i);

    std::vector<Word> words;
    LyndonGen gen{weights, samelson_degree, {}, words};
    gen.run();

    // canonical order: generator word (length 1) first, then lex
    std::stable_partition(words.begin(), words.end(),
                          [](const Word& w) { return w.size() == 1; });
    basis.reserve(words.size());
    for (Word& w : words) basis.push_back({std::move(w), samelson_degree});
    return basis;
}

int rank(const GeneratorSchedule& schedule, int samelson_degree) {
    return static_cast<int>(lyndon_basis(schedule, samelson_degree).size());
}

std::vector<Word> all_words_of_degree(const GeneratorSchedule& schedule, int samelson_degree) {
    std::vector<Word> out;
    if (samelson_degree < 0) return out;
    if (samelson_degree == 0) {
        out.emplace_back();
        return out;
    }
    Word cur;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int j = 1; j <= schedule.size(); ++j) {
            int w = schedule.samelson_degree(j);
            if (w > remaining) break;
            cur.push_back(j);
            self(self, remaining - w);
            cur.pop_back();
        }
    };
    rec(rec, samelson_degree);
    std::stable_sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

}  // namespace whitealg
