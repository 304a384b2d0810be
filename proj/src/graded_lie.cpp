#include "whitealg/graded_lie.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace whitealg {

TensorElement embed_assoc_basis(const GeneratorSchedule& schedule, const Word& lyndon_word) {
    if (lyndon_word.size() == 1) return TensorElement::generator(schedule, lyndon_word[0]);
    auto [u, v] = standard_factorization(lyndon_word);
    TensorElement eu = embed_assoc_basis(schedule, u);
    TensorElement ev = embed_assoc_basis(schedule, v);
    return tensor_commutator(eu, ev);
}

TensorElement embed_assoc(const LieElement& a) {
    TensorElement out(a.schedule());
    for (const auto& [key, coeff] : a.terms()) {
        TensorElement e = embed_assoc_basis(a.schedule(), key.word);
        e *= coeff;
        out += e;
    }
    return out;
}

TensorElement tensor_commutator(const TensorElement& u, const TensorElement& v) {
    // all schedule degrees are even, so the Koszul sign is always +1
    return u * v - v * u;
}

namespace {

// lexicographically smallest word among the terms (the map is ordered by
// degree/length/lex, so a scan is needed within each degree)
const Word* lex_min_word(const TensorElement& u) {
    const Word* best = nullptr;
    for (const auto& [key, coeff] : u.terms())
        if (!best || key.word < *best) best = &key.word;
    return best;
}

LieElement straighten_component(TensorElement comp) {
    LieElement out(comp.schedule());
    while (!comp.is_zero()) {
        const Word w = *lex_min_word(comp);
        if (!is_lyndon(w))
            fail(Errc::NotALieElement,
                 "residual after elimination has non-Lyndon leading word of length " +
                     std::to_string(w.size()));
        Rational c = comp.coefficient(w);
        out.add_term(w, c);
        TensorElement e = embed_assoc_basis(comp.schedule(), w);
        e *= c;
        comp -= e;
    }
    return out;
}

}  // namespace

LieElement lie_from_assoc(const TensorElement& u) {
    LieElement out(u.schedule());
    for (int d : u.degrees()) out += straighten_component(u.homogeneous_component(d));
    return out;
}

LieElement bracket(const LieElement& a, const LieElement& b) {
    a.schedule().check_same(b.schedule());
    return lie_from_assoc(tensor_commutator(embed_assoc(a), embed_assoc(b)));
}

namespace {

bool split_name(const std::string& name, std::string& alias, long& number) {
    size_t i = 0;
    while (i < name.size() && std::isalpha(static_cast<unsigned char>(name[i]))) ++i;
    if (i == 0 || i == name.size()) return false;
    for (size_t j = i; j < name.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(name[j]))) return false;
    alias = name.substr(0, i);
    number = std::stol(name.substr(i));
    return true;
}

TensorElement eval_tensor_with_lie_names(const BracketExpr& e, const GeneratorSchedule& schedule,
                                         std::string& alias_seen) {
    switch (e.kind) {
        case BracketExpr::Kind::Generator: {
            int idx = resolve_generator_name(e.name, schedule, /*tensor_context=*/false, alias_seen);
            return TensorElement::generator(schedule, idx);
        }
        case BracketExpr::Kind::Bracket: {
            TensorElement l = eval_tensor_with_lie_names(e.children[0], schedule, alias_seen);
            TensorElement r = eval_tensor_with_lie_names(e.children[1], schedule, alias_seen);
            return tensor_commutator(l, r);
        }
        case BracketExpr::Kind::Sum: {
            TensorElement acc(schedule);
            for (const BracketExpr& c : e.children)
                acc += eval_tensor_with_lie_names(c, schedule, alias_seen);
            return acc;
        }
        case BracketExpr::Kind::Scale: {
            TensorElement inner = eval_tensor_with_lie_names(e.children[0], schedule, alias_seen);
            inner *= e.coeff;
            return inner;
        }
        case BracketExpr::Kind::Word: {
            TensorElement acc = TensorElement::unit(schedule);
            for (const BracketExpr& c : e.children)
                acc = acc * eval_tensor_with_lie_names(c, schedule, alias_seen);
            return acc;
        }
    }
    fail(Errc::UnknownToken, "malformed expression tree");
}

}  // namespace

LieElement reduce(const BracketExpr& expr, const GeneratorSchedule& schedule) {
    std::string alias_seen;
    return lie_from_assoc(eval_tensor_with_lie_names(expr, schedule, alias_seen));
}

int resolve_generator_name(const std::string& name, const GeneratorSchedule& schedule,
                           bool tensor_context, std::string& alias_seen) {
    std::string alias;
    long number = 0;
    if (!split_name(name, alias, number))
        fail(Errc::UnknownToken, "'" + name + "' is not a generator name");
    if (alias != "x" && alias != "b" && alias != "xi" && alias != "chi")
        fail(Errc::UnknownToken, "unknown generator alias '" + alias + "'");
    if (!alias_seen.empty() && alias_seen != alias)
        fail(Errc::MixedAliases,
             "aliases '" + alias_seen + "' and '" + alias + "' mixed in one expression");
    alias_seen = alias;

    long index = 0;
    if (tensor_context) {
        if (alias != "b")
            fail(Errc::UnknownGenerator, "alias '" + alias + "' is not valid in a tensor expression");
        index = number;
    } else {
        switch (schedule.family()) {
            case Family::HP:
                if (alias != "x" && alias != "chi")
                    fail(Errc::UnknownGenerator, "alias '" + alias + "' is not valid for the HP family");
                index = number;
                break;
            case Family::CP:
                if (alias != "xi")
                    fail(Errc::UnknownGenerator, "alias '" + alias + "' is not valid for the CP family");
                if (number < 3 || number % 2 == 0)
                    fail(Errc::UnknownGenerator, "xi" + std::to_string(number) +
                                                     " is not an odd-dimensional CP generator");
                index = (number - 1) / 2;
                break;
            case Family::Custom:
                if (alias != "x")
                    fail(Errc::UnknownGenerator,
                         "alias '" + alias + "' is not valid for a custom family");
                index = number;
                break;
            case Family::RP:
                fail(Errc::UnknownGenerator, "the RP schedule has no generators");
        }
    }
    if (index < 1 || index > schedule.size())
        fail(Errc::UnknownGenerator, "'" + name + "' is outside the schedule");
    return static_cast<int>(index);
}

}  // namespace whitealg
