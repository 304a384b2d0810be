#ifndef WHITEALG_LIE_ELEMENT_HPP
#define WHITEALG_LIE_ELEMENT_HPP

#include <map>
#include <optional>

#include "whitealg/lyndon.hpp"
#include "whitealg/rational.hpp"

namespace whitealg {

// Sparse exact-rational vector over the Lyndon/Hall basis of the free graded
// Lie algebra on a schedule. Zero coefficients are never stored; iteration
// is canonical: by Samelson degree, then by word, lexicographically.
class LieElement {
public:
    struct Key {
        int degree;
        Word word;
        bool operator==(const Key&) const = default;
        bool operator<(const Key& o) const {
            if (degree != o.degree) return degree < o.degree;
            return word < o.word;
        }
    };
    using Terms = std::map<Key, Rational>;

    explicit LieElement(GeneratorSchedule schedule) : schedule_(std::move(schedule)) {}

    static LieElement zero(const GeneratorSchedule& s) { return LieElement(s); }
    static LieElement generator(const GeneratorSchedule& s, int index);
    static LieElement basis_element(const GeneratorSchedule& s, const Word& lyndon_word);

    const GeneratorSchedule& schedule() const { return schedule_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }

    // Adds c * (basis word w); erases the term if the sum cancels.
    void add_term(const Word& w, const Rational& c);
    Rational coefficient(const Word& w) const;

    LieElement& operator+=(const LieElement& o);
    LieElement& operator-=(const LieElement& o);
    LieElement& operator*=(const Rational& c);
    friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
    friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
    friend LieElement operator*(const Rational& c, LieElement a) { return a *= c; }
    LieElement operator-() const;

    bool operator==(const LieElement& o) const {
        return schedule_ == o.schedule_ && terms_ == o.terms_;
    }

    // Defined exactly when all terms share one Samelson degree (zero counts
    // as homogeneous of unspecified degree).
    std::optional<int> homogeneous_degree() const;
    bool is_homogeneous() const { return is_zero() || homogeneous_degree().has_value(); }
    LieElement homogeneous_component(int degree) const;
    std::vector<int> degrees() const;

    // True when every coefficient is an integer (the Z-lattice condition).
    bool is_integral() const;

private:
    GeneratorSchedule schedule_;
    Terms terms_;
};

}  // namespace whitealg

#endif
