#include "whitealg/tensor_hopf.hpp"

#include <algorithm>

#include "whitealg/linalg.hpp"

namespace whitealg {

void CoproductValue::add_term(const Word& left, const Word& right, const Rational& c) {
    if (c == 0) return;
    Key key{{word_samelson_degree(left, schedule_), left},
            {word_samelson_degree(right, schedule_), right}};
    auto [it, inserted] = terms_.try_emplace(std::move(key), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void SuspendedElement::add_term(int generator_index, const Rational& c) {
    if (c == 0) return;
    schedule_.generator(generator_index);  // validates
    auto [it, inserted] = terms_.try_emplace(generator_index, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

TensorElement product(const TensorElement& u, const TensorElement& v) { return u * v; }

namespace {

void require_homogeneous(const TensorElement& u, const char* who) {
    if (!u.is_homogeneous())
        fail(Errc::NonHomogeneous, std::string(who) + " requires a homogeneous argument");
}

// splits of one letter under the generator coproduct rule; 0 stands for the
// unit leg
std::vector<std::pair<int, int>> letter_splits(const GeneratorSchedule& s, int letter) {
    std::vector<std::pair<int, int>> out;
    if (s.family() == Family::HP || s.family() == Family::CP) {
        for (int i = 0; i <= letter; ++i) out.emplace_back(i, letter - i);
    } else {
        out.emplace_back(letter, 0);
        out.emplace_back(0, letter);
    }
    return out;
}

// every (left, right) split of a single word under the coproduct
void coproduct_word(const GeneratorSchedule& s, const Word& w, const Rational& coeff,
                    CoproductValue& out) {
    // multiplicative extension: iterate splits of each letter
    std::vector<std::pair<Word, Word>> acc{{Word{}, Word{}}};
    for (int letter : w) {
        std::vector<std::pair<Word, Word>> next;
        next.reserve(acc.size() * (letter + 1));
        for (const auto& [l, r] : acc) {
            for (const auto& [i, j] : letter_splits(s, letter)) {
                Word nl = l, nr = r;
                if (i > 0) nl.push_back(i);
                if (j > 0) nr.push_back(j);
                next.emplace_back(std::move(nl), std::move(nr));
            }
        }
        acc = std::move(next);
    }
    for (const auto& [l, r] : acc) out.add_term(l, r, coeff);
}

}  // namespace

CoproductValue coproduct(const TensorElement& u) {
    CoproductValue out(u.schedule());
    for (const auto& [key, c] : u.terms()) coproduct_word(u.schedule(), key.word, c, out);
    return out;
}

CoproductValue reduced_coproduct(const TensorElement& u) {
    CoproductValue out = coproduct(u);
    for (const auto& [key, c] : u.terms()) {
        out.add_term(key.word, {}, -c);
        out.add_term({}, key.word, -c);
    }
    // degree-zero content (the unit) contributes 1(x)1 twice above; repair
    Rational unit_coeff = u.coefficient({});
    if (unit_coeff != 0) out.add_term({}, {}, unit_coeff);
    return out;
}

bool is_primitive(const TensorElement& u) {
    if (u.is_zero()) return true;
    require_homogeneous(u, "is_primitive");
    if (*u.homogeneous_degree() <= 0)
        fail(Errc::NonHomogeneous, "is_primitive requires positive degree");
    return reduced_coproduct(u).is_zero();
}

bool is_decomposable(const TensorElement& u) {
    if (u.is_zero()) return true;
    require_homogeneous(u, "is_decomposable");
    if (*u.homogeneous_degree() <= 0)
        fail(Errc::NonHomogeneous, "is_decomposable requires positive degree");
    for (const auto& [key, c] : u.terms())
        if (key.word.size() < 2) return false;
    return true;
}

TensorElement graded_commutator(const TensorElement& u, const TensorElement& v) {
    u.schedule().check_same(v.schedule());
    if (!u.is_zero()) require_homogeneous(u, "graded_commutator");
    if (!v.is_zero()) require_homogeneous(v, "graded_commutator");
    return tensor_commutator(u, v);
}

TensorElement primitive_projection(const TensorElement& u) {
    if (u.is_zero()) return u;
    require_homogeneous(u, "primitive_projection");
    if (*u.homogeneous_degree() <= 0)
        fail(Errc::NonHomogeneous, "primitive_projection requires positive degree");

    const GeneratorSchedule& s = u.schedule();
    TensorElement out = u;  // k = 1 term

    // iterated reduced coproduct, kept as a sum of leg tuples; each round
    // expands the last leg
    using Legs = std::vector<Word>;
    std::map<Legs, Rational> cur;
    for (const auto& [key, c] : u.terms()) cur[{key.word}] = c;

    long k = 1;
    while (!cur.empty()) {
        std::map<Legs, Rational> next;
        for (const auto& [legs, c] : cur) {
            CoproductValue rc(s);
            coproduct_word(s, legs.back(), Rational(1), rc);
            for (const auto& [pair_key, k2] : rc.terms()) {
                const Word& l = pair_key.first.word;
                const Word& r = pair_key.second.word;
                if (l.empty() || r.empty()) continue;  // reduced part only
                Legs nl(legs.begin(), legs.end() - 1);
                nl.push_back(l);
                nl.push_back(r);
                Rational& slot = next[nl];
                slot += c * k2;
                if (slot == 0) next.erase(nl);
            }
        }
        if (next.empty()) break;
        ++k;
        Rational factor = rat((k % 2 == 0) ? -1 : 1, k);
        for (const auto& [legs, c] : next) {
            Word w;
            for (const Word& leg : legs) w.insert(w.end(), leg.begin(), leg.end());
            out.add_term(w, factor * c);
        }
        cur = std::move(next);
    }
    return out;
}

TensorElement hurewicz(const GeneratorSchedule& schedule, int n) {
    return primitive_projection(TensorElement::generator(schedule, n));
}

namespace {

TensorElement hurewicz_of_basis(const GeneratorSchedule& s, const Word& lyndon_word) {
    if (lyndon_word.size() == 1) return hurewicz(s, lyndon_word[0]);
    auto [u, v] = standard_factorization(lyndon_word);
    return tensor_commutator(hurewicz_of_basis(s, u), hurewicz_of_basis(s, v));
}

}  // namespace

TensorElement hurewicz_of_lie(const LieElement& a) {
    TensorElement out(a.schedule());
    for (const auto& [key, c] : a.terms()) {
        TensorElement e = hurewicz_of_basis(a.schedule(), key.word);
        e *= c;
        out += e;
    }
    return out;
}

TensorElement iterated_commutator_image(const GeneratorSchedule& schedule,
                                        const std::vector<int>& indices) {
    if (indices.size() < 2)
        fail(Errc::TooFewIndices, "an iterated commutator needs at least two indices");
    for (int i : indices) schedule.generator(i);  // validates

    TensorElement acc = hurewicz(schedule, indices.back());
    for (size_t i = indices.size() - 1; i-- > 0;)
        acc = tensor_commutator(hurewicz(schedule, indices[i]), acc);

    if (!acc.is_zero() && (!is_primitive(acc) || !is_decomposable(acc)))
        throw std::logic_error("iterated commutator image failed its primitivity contract");
    return acc;
}

SuspendedElement homology_suspension(const TensorElement& u) {
    if (!u.is_zero()) require_homogeneous(u, "homology_suspension");
    SuspendedElement out(u.schedule());
    for (const auto& [key, c] : u.terms())
        if (key.word.size() == 1) out.add_term(key.word[0], c);
    return out;
}

int primitive_space_dim(const GeneratorSchedule& schedule, int samelson_degree) {
    schedule.check_degree(samelson_degree);
    std::vector<Word> words = all_words_of_degree(schedule, samelson_degree);
    if (samelson_degree <= 0 || words.empty()) return 0;

    // rows = words, columns = (left, right) pairs of the reduced coproduct
    std::map<std::pair<Word, Word>, int> col_index;
    std::vector<std::map<int, Rational>> rows(words.size());
    for (size_t r = 0; r < words.size(); ++r) {
        TensorElement e = TensorElement::word(schedule, words[r]);
        CoproductValue rc = reduced_coproduct(e);
        for (const auto& [pk, c] : rc.terms()) {
            auto key = std::make_pair(pk.first.word, pk.second.word);
            auto [it, inserted] = col_index.try_emplace(key, static_cast<int>(col_index.size()));
            rows[r][it->second] = c;
        }
    }
    int rk = sparse_rank(std::move(rows));
    return static_cast<int>(words.size()) - rk;
}

TensorElement tensor_from_expr(const BracketExpr& expr, const GeneratorSchedule& schedule,
                               bool via_hurewicz) {
    std::string alias_seen;
    auto rec = [&](auto&& self, const BracketExpr& e) -> TensorElement {
        switch (e.kind) {
            case BracketExpr::Kind::Generator: {
                int idx = resolve_generator_name(e.name, schedule, /*tensor_context=*/true,
                                                 alias_seen);
                return via_hurewicz ? hurewicz(schedule, idx)
                                    : TensorElement::generator(schedule, idx);
            }
            case BracketExpr::Kind::Bracket:
                return tensor_commutator(self(self, e.children[0]), self(self, e.children[1]));
            case BracketExpr::Kind::Sum: {
                TensorElement acc(schedule);
                for (const BracketExpr& c : e.children) acc += self(self, c);
                return acc;
            }
            case BracketExpr::Kind::Scale: {
                TensorElement inner = self(self, e.children[0]);
                inner *= e.coeff;
                return inner;
            }
            case BracketExpr::Kind::Word: {
                TensorElement acc = TensorElement::unit(schedule);
                for (const BracketExpr& c : e.children) acc = acc * self(self, c);
                return acc;
            }
        }
        fail(Errc::UnknownToken, "malformed expression tree");
    };
    return rec(rec, expr);
}

}  // namespace whitealg
