#ifndef WHITEALG_TENSOR_ELEMENT_HPP
#define WHITEALG_TENSOR_ELEMENT_HPP

#include <map>
#include <optional>

#include "whitealg/lyndon.hpp"
#include "whitealg/rational.hpp"

namespace whitealg {

// Sparse exact-rational vector over words in the tensor algebra on the
// schedule's generators. Canonical term order: degree, then word length,
// then lexicographic. The empty word is the unit.
class TensorElement {
public:
    struct Key {
        int degree;
        Word word;
        bool operator==(const Key&) const = default;
        bool operator<(const Key& o) const {
            if (degree != o.degree) return degree < o.degree;
            if (word.size() != o.word.size()) return word.size() < o.word.size();
            return word < o.word;
        }
    };
    using Terms = std::map<Key, Rational>;

    explicit TensorElement(GeneratorSchedule schedule) : schedule_(std::move(schedule)) {}

    static TensorElement zero(const GeneratorSchedule& s) { return TensorElement(s); }
    static TensorElement unit(const GeneratorSchedule& s);
    static TensorElement generator(const GeneratorSchedule& s, int index);
    static TensorElement word(const GeneratorSchedule& s, const Word& w);

    const GeneratorSchedule& schedule() const { return schedule_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }

    void add_term(const Word& w, const Rational& c);
    Rational coefficient(const Word& w) const;

    TensorElement& operator+=(const TensorElement& o);
    TensorElement& operator-=(const TensorElement& o);
    TensorElement& operator*=(const Rational& c);
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    friend TensorElement operator*(const Rational& c, TensorElement a) { return a *= c; }
    TensorElement operator-() const;

    // Concatenation product, extended bilinearly.
    friend TensorElement operator*(const TensorElement& a, const TensorElement& b);

    bool operator==(const TensorElement& o) const {
        return schedule_ == o.schedule_ && terms_ == o.terms_;
    }

    // The unit has degree 0; homogeneity means a single shared degree.
    std::optional<int> homogeneous_degree() const;
    bool is_homogeneous() const { return is_zero() || homogeneous_degree().has_value(); }
    TensorElement homogeneous_component(int degree) const;
    std::vector<int> degrees() const;

private:
    GeneratorSchedule schedule_;
    Terms terms_;
};

}  // namespace whitealg

#endif
