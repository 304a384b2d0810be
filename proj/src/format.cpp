#include "whitealg/format.hpp"

#include <algorithm>
#include <sstream>

namespace whitealg {

std::string format_rational(const Rational& q) { return rat_to_string(q); }

std::string format_basis_element(const GeneratorSchedule& schedule, const Word& lyndon_word) {
    if (lyndon_word.size() == 1) return schedule.generator(lyndon_word[0]).name;
    auto [u, v] = standard_factorization(lyndon_word);
    return "[" + format_basis_element(schedule, u) + "," + format_basis_element(schedule, v) + "]";
}

namespace {

// joins (expression, coefficient) pairs with signs absorbed: "a - 2*b + 1/2*c"
std::string join_terms(const std::vector<std::pair<std::string, Rational>>& parts) {
    if (parts.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [text, coeff] : parts) {
        Rational a = coeff < 0 ? Rational(-coeff) : coeff;
        if (first) {
            if (coeff < 0) os << "-";
        } else {
            os << (coeff < 0 ? " - " : " + ");
        }
        if (a != 1) os << rat_to_string(a) << "*";
        os << text;
        first = false;
    }
    return os.str();
}

}  // namespace

std::string format_lie(const LieElement& e, Notation) {
    // display order: degree ascending; generator word first within a degree,
    // then lexicographic
    std::vector<const LieElement::Terms::value_type*> items;
    items.reserve(e.terms().size());
    for (const auto& t : e.terms()) items.push_back(&t);
    std::stable_sort(items.begin(), items.end(), [](const auto* a, const auto* b) {
        if (a->first.degree != b->first.degree) return a->first.degree < b->first.degree;
        if ((a->first.word.size() == 1) != (b->first.word.size() == 1))
            return a->first.word.size() == 1;
        return a->first.word < b->first.word;
    });
    std::vector<std::pair<std::string, Rational>> parts;
    parts.reserve(items.size());
    for (const auto* t : items)
        parts.emplace_back(format_basis_element(e.schedule(), t->first.word), t->second);
    return join_terms(parts);
}

std::string format_tensor(const TensorElement& e) {
    std::vector<std::pair<std::string, Rational>> parts;
    parts.reserve(e.terms().size());
    for (const auto& [key, c] : e.terms()) {
        if (key.word.empty()) {
            parts.emplace_back("1", c);
            continue;
        }
        std::ostringstream os;
        for (size_t i = 0; i < key.word.size(); ++i) {
            if (i) os << ".";
            os << "b" << key.word[i];
        }
        parts.emplace_back(os.str(), c);
    }
    return join_terms(parts);
}

std::string format_suspended(const SuspendedElement& e) {
    std::vector<std::pair<std::string, Rational>> parts;
    parts.reserve(e.terms().size());
    for (const auto& [idx, c] : e.terms())
        parts.emplace_back("beta" + std::to_string(idx), c);
    return join_terms(parts);
}

}  // namespace whitealg
