#include "whitealg/lie_element.hpp"

namespace whitealg {

LieElement LieElement::generator(const GeneratorSchedule& s, int index) {
    s.generator(index);  // validates
    LieElement e(s);
    e.add_term({index}, Rational(1));
    return e;
}

LieElement LieElement::basis_element(const GeneratorSchedule& s, const Word& lyndon_word) {
    LieElement e(s);
    e.add_term(lyndon_word, Rational(1));
    return e;
}

void LieElement::add_term(const Word& w, const Rational& c) {
    if (c == 0) return;
    Key key{word_samelson_degree(w, schedule_), w};
    auto [it, inserted] = terms_.try_emplace(std::move(key), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational LieElement::coefficient(const Word& w) const {
    Key key{word_samelson_degree(w, schedule_), w};
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
}

LieElement& LieElement::operator+=(const LieElement& o) {
    schedule_.check_same(o.schedule_);
    for (const auto& [k, c] : o.terms_) {
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
    schedule_.check_same(o.schedule_);
    for (const auto& [k, c] : o.terms_) {
        auto [it, inserted] = terms_.try_emplace(k, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LieElement& LieElement::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

LieElement LieElement::operator-() const {
    LieElement r(schedule_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

std::optional<int> LieElement::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    int d = terms_.begin()->first.degree;
    if (terms_.rbegin()->first.degree != d) return std::nullopt;
    return d;
}

LieElement LieElement::homogeneous_component(int degree) const {
    LieElement r(schedule_);
    for (const auto& [k, c] : terms_) {
        if (k.degree == degree) r.terms_.emplace(k, c);
        if (k.degree > degree) break;
    }
    return r;
}

std::vector<int> LieElement::degrees() const {
    std::vector<int> out;
    for (const auto& [k, c] : terms_)
        if (out.empty() || out.back() != k.degree) out.push_back(k.degree);
    return out;
}

bool LieElement::is_integral() const {
    for (const auto& [k, c] : terms_)
        if (!rat_is_integer(c)) return false;
    return true;
}

}  // namespace whitealg
