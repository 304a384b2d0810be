#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <future>

#include "oracles.hpp"
#include "whitealg/graded_lie.hpp"
#include "whitealg/linalg.hpp"
#include "whitealg/parser.hpp"

using namespace whitealg;

namespace {

LieElement red(const std::string& text, const GeneratorSchedule& s) {
    return reduce(parse_expr(text), s);
}

std::vector<Word> basis_words(const GeneratorSchedule& s, int degree) {
    std::vector<Word> out;
    for (const HallBasisElement& b : lyndon_basis(s, degree)) out.push_back(b.word);
    return out;
}

// direct commutator expansion in the tensor algebra, bypassing the
// straightening engine
TensorElement direct_expansion(const BracketExpr& e, const GeneratorSchedule& s) {
    switch (e.kind) {
        case BracketExpr::Kind::Generator: {
            int idx = std::stoi(e.name.substr(1));
            return TensorElement::generator(s, idx);
        }
        case BracketExpr::Kind::Bracket: {
            TensorElement l = direct_expansion(e.children[0], s);
            TensorElement r = direct_expansion(e.children[1], s);
            return l * r - r * l;
        }
        case BracketExpr::Kind::Sum: {
            TensorElement acc(s);
            for (const BracketExpr& c : e.children) acc += direct_expansion(c, s);
            return acc;
        }
        case BracketExpr::Kind::Scale: {
            TensorElement inner = direct_expansion(e.children[0], s);
            inner *= e.coeff;
            return inner;
        }
        case BracketExpr::Kind::Word: {
            TensorElement acc = TensorElement::unit(s);
            for (const BracketExpr& c : e.children) acc = acc * direct_expansion(c, s);
            return acc;
        }
    }
    return TensorElement::zero(s);
}

}  // namespace

TEST_CASE("lyndon basis of the HP schedule matches the known layer lists") {
    GeneratorSchedule hp = GeneratorSchedule::hp(10);

    auto deg12 = basis_words(hp, 12);
    CHECK(deg12 == std::vector<Word>{{3}, {1, 2}});

    auto deg16 = basis_words(hp, 16);
    CHECK(deg16 == std::vector<Word>{{4}, {1, 1, 2}, {1, 3}});

    auto deg20 = basis_words(hp, 20);
    CHECK(deg20.size() == 6);
    CHECK(deg20 == std::vector<Word>{{5}, {1, 1, 1, 2}, {1, 1, 3}, {1, 2, 2}, {1, 4}, {2, 3}});

    CHECK(lyndon_basis(hp, 2).empty());
    CHECK(lyndon_basis(hp, 6).empty());   // no odd-ish content between layers
    CHECK(lyndon_basis(hp, 0).empty());
}

TEST_CASE("lyndon basis agrees with the rotation-definition enumeration") {
    GeneratorSchedule hp = GeneratorSchedule::hp(10);
    for (int d = 4; d <= 40; d += 4) CHECK(basis_words(hp, d) == oracles::lyndon_words_brute(hp, d));
    CHECK(basis_words(hp, 40).size() == 99);

    GeneratorSchedule cp = GeneratorSchedule::cp(10);
    for (int d = 2; d <= 20; d += 2) CHECK(basis_words(cp, d) == oracles::lyndon_words_brute(cp, d));
}

TEST_CASE("rank matches the known layer lists and the Witt oracle") {
    GeneratorSchedule hp = GeneratorSchedule::hp(10);
    CHECK(rank(hp, 16) == 3);
    CHECK(rank(hp, 24) == 9);
    GeneratorSchedule cp = GeneratorSchedule::cp(5);
    CHECK(rank(cp, 8) == 3);

    for (int n = 1; n <= 10; ++n) CHECK(rank(hp, 4 * n) == oracles::witt_dimension(n));
}

TEST_CASE("witt dimension law as an internal oracle") {
    GeneratorSchedule hp = GeneratorSchedule::hp(10);
    for (int n = 1; n <= 10; ++n) {
        long sum = 0;
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) sum += static_cast<long>(d) * rank(hp, 4 * d);
        CHECK(sum == (1L << n) - 1);
    }
}

TEST_CASE("degree cap and error cases") {
    GeneratorSchedule hp = GeneratorSchedule::hp(16);
    CHECK_THROWS_AS(lyndon_basis(hp, 62), Error);
    try {
        lyndon_basis(hp, 62);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::DegreeCapExceeded);
    }
    GeneratorSchedule small = GeneratorSchedule::hp(3, /*degree_cap=*/20);
    CHECK_THROWS_AS(lyndon_basis(small, 24), Error);
    CHECK(lyndon_basis(hp, 14).empty());  // non-representable degree is empty, not an error

    CHECK_THROWS_AS(GeneratorSchedule::custom({4, 7}), Error);  // odd parity
    try {
        GeneratorSchedule::custom({4, 7});
    } catch (const Error& e) {
        CHECK(e.code() == Errc::OddParityUnsupported);
    }
}

TEST_CASE("bracket: basic products, self-brackets, straightening") {
    GeneratorSchedule hp = GeneratorSchedule::hp(5);
    LieElement x1 = LieElement::generator(hp, 1);
    LieElement x2 = LieElement::generator(hp, 2);

    LieElement b12 = bracket(x1, x2);
    CHECK(b12 == LieElement::basis_element(hp, {1, 2}));

    CHECK(bracket(x1, x1).is_zero());

    // [[x1,x2],x1] = -[x1,[x1,x2]], confirmed against the hand expansion below
    LieElement nested = bracket(b12, x1);
    LieElement expected = -LieElement::basis_element(hp, {1, 1, 2});
    CHECK(nested == expected);

    GeneratorSchedule cp = GeneratorSchedule::cp(3);
    CHECK_THROWS_AS(bracket(x1, LieElement::generator(cp, 1)), Error);
}

TEST_CASE("reduce: antisymmetry, linearity, vanishing self-brackets") {
    GeneratorSchedule hp = GeneratorSchedule::hp(5);
    CHECK(red("[x2,x1]", hp) == -LieElement::basis_element(hp, {1, 2}));
    CHECK(red("[x1,[x1,x2]] + [x1,[x1,x2]]", hp) ==
          Rational(2) * LieElement::basis_element(hp, {1, 1, 2}));
    CHECK(red("[[x1,x2],[x1,x2]]", hp).is_zero());
    CHECK(red("0", hp).is_zero());
    CHECK(red("3/2*[x1,x2] + x3", hp).coefficient({1, 2}) == rat(3, 2));

    CHECK_THROWS_AS(red("[x1,x9]", hp), Error);  // outside the schedule
    try {
        red("x1.x2", hp);  // tensor product does not straighten to a Lie element
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotALieElement);
    }
}

TEST_CASE("embed_assoc on generators and nested brackets") {
    GeneratorSchedule hp = GeneratorSchedule::hp(5);
    CHECK(embed_assoc(LieElement::generator(hp, 1)) == TensorElement::generator(hp, 1));

    TensorElement e12 = embed_assoc(LieElement::basis_element(hp, {1, 2}));
    TensorElement expect12(hp);
    expect12.add_term({1, 2}, Rational(1));
    expect12.add_term({2, 1}, Rational(-1));
    CHECK(e12 == expect12);

    TensorElement e112 = embed_assoc(LieElement::basis_element(hp, {1, 1, 2}));
    TensorElement expect112(hp);
    expect112.add_term({1, 1, 2}, Rational(1));
    expect112.add_term({1, 2, 1}, Rational(-2));
    expect112.add_term({2, 1, 1}, Rational(1));
    CHECK(e112 == expect112);
}

TEST_CASE("lie_from_assoc inverts the embedding and rejects non-Lie input") {
    GeneratorSchedule hp = GeneratorSchedule::hp(5);
    TensorElement comm(hp);
    comm.add_term({1, 2}, Rational(1));
    comm.add_term({2, 1}, Rational(-1));
    CHECK(lie_from_assoc(comm) == LieElement::basis_element(hp, {1, 2}));
    CHECK(lie_from_assoc(TensorElement::generator(hp, 1)) == LieElement::generator(hp, 1));

    TensorElement sym(hp);
    sym.add_term({1, 2}, Rational(1));
    sym.add_term({2, 1}, Rational(1));
    CHECK_THROWS_AS(lie_from_assoc(sym), Error);

    // degree-12 exhaustive check: the symmetric tensor is outside the span
    // of the embedded basis
    std::vector<Word> words = all_words_of_degree(hp, 12);
    std::vector<Word> basis = basis_words(hp, 12);
    QMatrix m(static_cast<int>(words.size()), static_cast<int>(basis.size()) + 1);
    for (size_t j = 0; j < basis.size(); ++j) {
        TensorElement e = embed_assoc_basis(hp, basis[j]);
        for (size_t i = 0; i < words.size(); ++i) m.at(i, j) = e.coefficient(words[i]);
    }
    for (size_t i = 0; i < words.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(basis.size())) = sym.coefficient(words[i]);
    QMatrix lie_only(static_cast<int>(words.size()), static_cast<int>(basis.size()));
    for (size_t i = 0; i < words.size(); ++i)
        for (size_t j = 0; j < basis.size(); ++j) lie_only.at(static_cast<int>(i), static_cast<int>(j)) = m.at(static_cast<int>(i), static_cast<int>(j));
    CHECK(rank_of(m) == rank_of(lie_only) + 1);
}

TEST_CASE("round trip: straighten after embed is the identity") {
    GeneratorSchedule hp = GeneratorSchedule::hp(6);
    for (int d = 4; d <= 24; d += 4)
        for (const HallBasisElement& b : lyndon_basis(hp, d)) {
            LieElement e = LieElement::basis_element(hp, b.word);
            CHECK(lie_from_assoc(embed_assoc(e)) == e);
        }
}

TEST_CASE("antisymmetry, Jacobi and self-bracket properties") {
    GeneratorSchedule hp = GeneratorSchedule::hp(6);
    std::mt19937_64 rng(20210405);

    std::vector<HallBasisElement> pool;
    for (int d = 4; d <= 16; d += 4)
        for (const HallBasisElement& b : lyndon_basis(hp, d)) pool.push_back(b);
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> coeff(-3, 3);

    auto random_homogeneous = [&]() {
        HallBasisElement b = pool[pick(rng)];
        LieElement e = LieElement::basis_element(hp, b.word);
        // sprinkle another term of the same degree when one exists
        for (int tries = 0; tries < 4; ++tries) {
            HallBasisElement c = pool[pick(rng)];
            if (c.samelson_degree == b.samelson_degree) {
                LieElement extra = LieElement::basis_element(hp, c.word);
                extra *= Rational(coeff(rng));
                e += extra;
                break;
            }
        }
        return e;
    };

    for (int iter = 0; iter < 200; ++iter) {
        LieElement a = random_homogeneous();
        LieElement b = random_homogeneous();
        CHECK((bracket(a, b) + bracket(b, a)).is_zero());
        CHECK(bracket(a, a).is_zero());
    }
    for (int iter = 0; iter < 80; ++iter) {
        LieElement a = LieElement::basis_element(hp, pool[pick(rng)].word);
        LieElement b = LieElement::basis_element(hp, pool[pick(rng)].word);
        LieElement c = LieElement::basis_element(hp, pool[pick(rng)].word);
        LieElement lhs = bracket(a, bracket(b, c));
        LieElement rhs = bracket(bracket(a, b), c) + bracket(b, bracket(a, c));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("reduce agrees with direct tensor expansion on random expressions") {
    GeneratorSchedule hp = GeneratorSchedule::hp(10);
    std::mt19937_64 rng(987654321);
    int done = 0;
    while (done < 200) {
        BracketExpr e = oracles::random_lie_expr(rng, 3, 3);
        TensorElement direct = direct_expansion(e, hp);
        bool within = true;
        for (int d : direct.degrees()) within = within && d <= 40;
        if (!within) continue;
        LieElement reduced = reduce(e, hp);
        CHECK(embed_assoc(reduced) == direct);
        ++done;
    }
}

TEST_CASE("embedded basis elements are linearly independent") {
    GeneratorSchedule hp = GeneratorSchedule::hp(6);
    for (int d = 4; d <= 24; d += 4) {
        std::vector<Word> words = all_words_of_degree(hp, d);
        std::vector<Word> basis = basis_words(hp, d);
        QMatrix m(static_cast<int>(words.size()), static_cast<int>(basis.size()));
        for (size_t j = 0; j < basis.size(); ++j) {
            TensorElement e = embed_assoc_basis(hp, basis[j]);
            for (size_t i = 0; i < words.size(); ++i)
                m.at(static_cast<int>(i), static_cast<int>(j)) = e.coefficient(words[i]);
        }
        CHECK(rank_of(m) == static_cast<int>(basis.size()));
    }
}

TEST_CASE("parallel enumeration is identical to sequential") {
    GeneratorSchedule hp = GeneratorSchedule::hp(10);
    auto f20 = std::async(std::launch::async, [&] { return lyndon_basis(hp, 20); });
    auto f24 = std::async(std::launch::async, [&] { return lyndon_basis(hp, 24); });
    auto f28 = std::async(std::launch::async, [&] { return lyndon_basis(hp, 28); });
    CHECK(f20.get() == lyndon_basis(hp, 20));
    CHECK(f24.get() == lyndon_basis(hp, 24));
    CHECK(f28.get() == lyndon_basis(hp, 28));
}

TEST_CASE("schedule families") {
    GeneratorSchedule hp = GeneratorSchedule::hp(3);
    CHECK(hp.whitehead_degree(1) == 5);
    CHECK(hp.whitehead_degree(3) == 13);
    CHECK(hp.samelson_degree(3) == 12);

    GeneratorSchedule cp = GeneratorSchedule::cp(4);
    CHECK(cp.whitehead_degree(1) == 3);
    CHECK(cp.whitehead_degree(4) == 9);
    CHECK(cp.generator(2).name == "xi5");

    GeneratorSchedule rp = GeneratorSchedule::rp();
    CHECK(rp.size() == 0);
    CHECK(lyndon_basis(rp, 4).empty());
}
