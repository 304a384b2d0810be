#ifndef WHITEALG_LYNDON_HPP
#define WHITEALG_LYNDON_HPP

#include <utility>
#include <vector>

#include "whitealg/schedule.hpp"

namespace whitealg {

// A word is a sequence of 1-based generator indices. Lexicographic order on
// indices; a proper prefix is smaller than the word.
using Word = std::vector<int>;

int word_samelson_degree(const Word& w, const GeneratorSchedule& schedule);

// w is strictly smaller than every proper rotation (equivalently, than every
// proper suffix).
bool is_lyndon(const Word& w);

// Standard (right) factorization of a Lyndon word of length >= 2:
// w = u.v with v the lexicographically smallest proper suffix; u and v are
// Lyndon and u < v. Bracketing this recursively gives the canonical basis
// bracket of w.
std::pair<Word, Word> standard_factorization(const Word& w);

// A basis element of the free graded Lie algebra: a Lyndon word together
// with its degree data. The canonical bracket form is the
// standard-factorization bracketing of `word`.
struct HallBasisElement {
    Word word;
    int samelson_degree = 0;

    int length() const { return static_cast<int>(word.size()); }
    bool operator==(const HallBasisElement&) const = default;
};

// All Lyndon words over the schedule's alphabet with letter degrees summing
// to `samelson_degree`, in canonical order: the single-letter word first
// (when the degree is a generator degree), then longer words
// lexicographically. Odd or non-representable degrees give an empty list.
std::vector<HallBasisElement> lyndon_basis(const GeneratorSchedule& schedule, int samelson_degree);

// lyndon_basis(...).size() without materializing bracket data.
int rank(const GeneratorSchedule& schedule, int samelson_degree);

// All words (not only Lyndon) over the schedule's alphabet of the given
// total degree, ordered by (length, lex). The word basis of the tensor
// algebra layer.
std::vector<Word> all_words_of_degree(const GeneratorSchedule& schedule, int samelson_degree);

}  // namespace whitealg

#endif
