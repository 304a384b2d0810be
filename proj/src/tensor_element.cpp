#include "whitealg/tensor_element.hpp"

namespace whitealg {

TensorElement TensorElement::unit(const GeneratorSchedule& s) {
    TensorElement e(s);
    e.add_term({}, Rational(1));
    return e;
}

TensorElement TensorElement::generator(const GeneratorSchedule& s, int index) {
    s.generator(index);  // validates
    TensorElement e(s);
    e.add_term({index}, Rational(1));
    return e;
}

TensorElement TensorElement::word(const GeneratorSchedule& s, const Word& w) {
    TensorElement e(s);
    e.add_term(w, Rational(1));
    return e;
}

void TensorElement::add_term(const Word& w, const Rational& c) {
    if (c == 0) return;
    Key key{word_samelson_degree(w, schedule_), w};
    auto [it, inserted] = terms_.try_emplace(std::move(key), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational TensorElement::coefficient(const Word& w) const {
    Key key{word_samelson_degree(w, schedule_), w};
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
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

TensorElement& TensorElement::operator-=(const TensorElement& o) {
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

TensorElement& TensorElement::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

TensorElement TensorElement::operator-() const {
    TensorElement r(schedule_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

TensorElement operator*(const TensorElement& a, const TensorElement& b) {
    a.schedule().check_same(b.schedule());
    TensorElement r(a.schedule());
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            Word w = ka.word;
            w.insert(w.end(), kb.word.begin(), kb.word.end());
            r.add_term(w, ca * cb);
        }
    }
    return r;
}

std::optional<int> TensorElement::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    int d = terms_.begin()->first.degree;
    if (terms_.rbegin()->first.degree != d) return std::nullopt;
    return d;
}

TensorElement TensorElement::homogeneous_component(int degree) const {
    TensorElement r(schedule_);
    for (const auto& [k, c] : terms_) {
        if (k.degree == degree) r.terms_.emplace(k, c);
        if (k.degree > degree) break;
    }
    return r;
}

std::vector<int> TensorElement::degrees() const {
    std::vector<int> out;
    for (const auto& [k, c] : terms_)
        if (out.empty() || out.back() != k.degree) out.push_back(k.degree);
    return out;
}

}  // namespace whitealg
