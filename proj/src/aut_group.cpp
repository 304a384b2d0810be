#include "whitealg/aut_group.hpp"

#include <algorithm>
#include <sstream>

#include "whitealg/format.hpp"
#include "whitealg/graded_lie.hpp"
#include "whitealg/parser.hpp"

namespace whitealg {

GradedMorphism::GradedMorphism(TruncatedAlgebra domain, std::vector<LieElement> images)
    : domain_(std::move(domain)), images_(std::move(images)) {
    if (static_cast<int>(images_.size()) != domain_.top_index())
        fail(Errc::IndexOutOfRange, "expected " + std::to_string(domain_.top_index()) +
                                        " generator images, got " +
                                        std::to_string(images_.size()));
    for (int i = 1; i <= domain_.top_index(); ++i) {
        const LieElement& im = images_[i - 1];
        domain_.schedule().check_same(im.schedule());
        int want = domain_.schedule().samelson_degree(i);
        auto deg = im.homogeneous_degree();
        if (!im.is_zero() && (!deg || *deg != want))
            fail(Errc::DegreeMismatch, "image of x" + std::to_string(i) +
                                           " is not homogeneous of degree " + std::to_string(want));
        if (domain_.ring() == RingMode::ZLattice && !im.is_integral())
            fail(Errc::NonIntegralCoefficient,
                 "image of x" + std::to_string(i) + " has a non-integer coefficient in Z mode");
    }
}

const LieElement& GradedMorphism::image(int index) const {
    if (index < 1 || index > static_cast<int>(images_.size()))
        fail(Errc::IndexOutOfRange, "no image for generator index " + std::to_string(index));
    return images_[index - 1];
}

GradedMorphism identity(const TruncatedAlgebra& L) {
    std::vector<LieElement> images;
    images.reserve(L.top_index());
    for (int i = 1; i <= L.top_index(); ++i)
        images.push_back(LieElement::generator(L.schedule(), i));
    return GradedMorphism(L, std::move(images));
}

GradedMorphism sign_morphism(const TruncatedAlgebra& L, const std::vector<int>& signs) {
    if (static_cast<int>(signs.size()) != L.top_index())
        fail(Errc::IndexOutOfRange, "need one sign per generator");
    std::vector<Rational> scalars;
    scalars.reserve(signs.size());
    for (int s : signs) {
        if (s == 0) fail(Errc::ZeroScalar, "sign entry is zero");
        if (s != 1 && s != -1) fail(Errc::ScalingInZMode, "sign entries must be +1 or -1");
        scalars.emplace_back(s);
    }
    return scaling_morphism(L, scalars);
}

GradedMorphism scaling_morphism(const TruncatedAlgebra& L, const std::vector<Rational>& scalars) {
    if (static_cast<int>(scalars.size()) != L.top_index())
        fail(Errc::IndexOutOfRange, "need one scalar per generator");
    std::vector<LieElement> images;
    images.reserve(scalars.size());
    for (int i = 1; i <= L.top_index(); ++i) {
        const Rational& c = scalars[i - 1];
        if (c == 0) fail(Errc::ZeroScalar, "scalar for x" + std::to_string(i) + " is zero");
        if (L.ring() == RingMode::ZLattice && c != 1 && c != -1)
            fail(Errc::ScalingInZMode,
                 "scalar " + rat_to_string(c) + " is not a unit of the Z lattice");
        LieElement im = LieElement::generator(L.schedule(), i);
        im *= c;
        images.push_back(std::move(im));
    }
    return GradedMorphism(L, std::move(images));
}

GradedMorphism translation_morphism(const TruncatedAlgebra& L, int n, const LieElement& delta) {
    if (n < 1 || n > L.top_index())
        fail(Errc::IndexOutOfRange, "layer " + std::to_string(n) + " outside truncation");
    L.schedule().check_same(delta.schedule());
    int want = L.schedule().samelson_degree(n);
    if (!delta.is_zero()) {
        auto deg = delta.homogeneous_degree();
        if (!deg || *deg != want)
            fail(Errc::DegreeMismatch,
                 "translation element is not homogeneous of degree " + std::to_string(want));
        for (const auto& [key, c] : delta.terms())
            if (key.word.size() < 2)
                fail(Errc::DegreeMismatch, "translation element must be decomposable");
    }
    std::vector<LieElement> images;
    images.reserve(L.top_index());
    for (int i = 1; i <= L.top_index(); ++i) {
        LieElement im = LieElement::generator(L.schedule(), i);
        if (i == n) im += delta;
        images.push_back(std::move(im));
    }
    return GradedMorphism(L, std::move(images));
}

GradedMorphism unipotent_morphism(const TruncatedAlgebra& L, int n, const HallBasisElement& w,
                                  const Rational& alpha) {
    if (alpha == 0) fail(Errc::ZeroAlpha, "unipotent morphism needs a nonzero alpha");
    if (w.length() < 2)
        fail(Errc::DegreeMismatch, "unipotent direction must be a decomposable basis element");
    LieElement delta = LieElement::basis_element(L.schedule(), w.word);
    delta *= alpha;
    return translation_morphism(L, n, delta);
}

namespace {

// image of a single basis word under f, with a per-call memo
LieElement image_of_word(const GradedMorphism& f, const Word& w,
                         std::map<Word, LieElement>& memo) {
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
    LieElement result = [&] {
        if (w.size() == 1) return f.image(w[0]);
        auto [u, v] = standard_factorization(w);
        return bracket(image_of_word(f, u, memo), image_of_word(f, v, memo));
    }();
    memo.emplace(w, result);
    return result;
}

}  // namespace

LieElement apply(const GradedMorphism& f, const LieElement& elem) {
    f.domain().schedule().check_same(elem.schedule());
    // guarded by the configurable schedule cap; degrees above the truncation
    // but within the cap are still meaningful (brackets of retained
    // generators in the ambient free algebra)
    for (int d : elem.degrees()) f.domain().schedule().check_degree(d);
    std::map<Word, LieElement> memo;
    LieElement out(elem.schedule());
    for (const auto& [key, c] : elem.terms()) {
        LieElement im = image_of_word(f, key.word, memo);
        im *= c;
        out += im;
    }
    return out;
}

QMatrix matrix(const GradedMorphism& f, int samelson_degree) {
    std::vector<HallBasisElement> basis = f.domain().basis(samelson_degree);
    const int n = static_cast<int>(basis.size());
    QMatrix m(n, n);
    std::map<Word, LieElement> memo;
    for (int j = 0; j < n; ++j) {
        LieElement col = image_of_word(f, basis[j].word, memo);
        for (int i = 0; i < n; ++i) m.at(i, j) = col.coefficient(basis[i].word);
    }
    return m;
}

GradedMorphism compose(const GradedMorphism& f, const GradedMorphism& g) {
    if (!(f.domain() == g.domain()))
        fail(Errc::MixedSchedules, "composition needs a common truncated algebra");
    std::vector<LieElement> images;
    images.reserve(f.domain().top_index());
    for (int i = 1; i <= f.domain().top_index(); ++i) images.push_back(apply(f, g.image(i)));
    return GradedMorphism(f.domain(), std::move(images));
}

bool equal(const GradedMorphism& f, const GradedMorphism& g) { return f == g; }

Rational linear_part(const GradedMorphism& f, int n) { return f.image(n).coefficient({n}); }

bool is_automorphism(const GradedMorphism& f) {
    for (int i = 1; i <= f.domain().top_index(); ++i) {
        Rational c = linear_part(f, i);
        if (f.domain().ring() == RingMode::ZLattice) {
            if (c != 1 && c != -1) return false;
        } else {
            if (c == 0) return false;
        }
    }
    return true;
}

GradedMorphism invert(const GradedMorphism& f) {
    if (!is_automorphism(f))
        fail(Errc::NotInvertible, "morphism is not an automorphism over its ring");
    const TruncatedAlgebra& L = f.domain();
    // layer-by-layer: psi(x_n) = c_n^{-1} (x_n - psi(f(x_n) - c_n x_n)),
    // where the correction only involves generators below n
    std::vector<LieElement> images;
    images.reserve(L.top_index());
    for (int n = 1; n <= L.top_index(); ++n) {
        Rational c = linear_part(f, n);
        LieElement rest = f.image(n);
        LieElement lin = LieElement::generator(L.schedule(), n);
        lin *= c;
        rest -= lin;  // decomposable part, letters < n
        LieElement correction(L.schedule());
        if (!rest.is_zero()) {
            // the inverse built so far, over the truncation below n
            std::vector<LieElement> partial_images;
            const GeneratorSchedule sub = L.schedule().truncate(n - 1);
            for (int i = 1; i < n; ++i) {
                LieElement im(sub);
                for (const auto& [key, coeff] : images[i - 1].terms()) im.add_term(key.word, coeff);
                partial_images.push_back(std::move(im));
            }
            GradedMorphism inv_below(TruncatedAlgebra(L.schedule(), n - 1, L.ring()),
                                     std::move(partial_images));
            LieElement rest_below(sub);
            for (const auto& [key, coeff] : rest.terms()) rest_below.add_term(key.word, coeff);
            LieElement corr_below = apply(inv_below, rest_below);
            for (const auto& [key, coeff] : corr_below.terms()) correction.add_term(key.word, coeff);
        }
        LieElement img = LieElement::generator(L.schedule(), n);
        img -= correction;
        img *= Rational(1) / c;
        images.push_back(std::move(img));
    }
    return GradedMorphism(L, std::move(images));
}

GradedMorphism restriction(const GradedMorphism& f, int n_prime) {
    if (n_prime < 0 || n_prime > f.domain().top_index())
        fail(Errc::IndexOutOfRange, "restriction index outside truncation");
    TruncatedAlgebra sub(f.domain().schedule(), n_prime, f.domain().ring());
    std::vector<LieElement> images;
    images.reserve(n_prime);
    for (int i = 1; i <= n_prime; ++i) {
        LieElement im(sub.schedule());
        for (const auto& [key, c] : f.image(i).terms()) im.add_term(key.word, c);
        images.push_back(std::move(im));
    }
    return GradedMorphism(sub, std::move(images));
}

OrderResult order(const GradedMorphism& f) {
    const TruncatedAlgebra& L = f.domain();
    if (!is_automorphism(f))
        fail(Errc::NotInvertible, "order is defined for automorphisms only");
    OrderResult res;

    // scaling part first: rational scalars of infinite multiplicative order
    for (int i = 1; i <= L.top_index(); ++i) {
        Rational c = linear_part(f, i);
        if (c != 1 && c != -1) {
            res.finite = false;
            res.witness_kind = OrderResult::WitnessKind::Scaling;
            res.witness_generator = i;
            return res;
        }
    }
    long m = 1;
    for (int i = 1; i <= L.top_index(); ++i)
        if (linear_part(f, i) == -1) {
            m = 2;
            break;
        }

    GradedMorphism fm = (m == 2) ? compose(f, f) : f;
    GradedMorphism id = identity(L);
    if (equal(fm, id)) {
        res.finite = true;
        res.order = equal(f, id) ? 1 : m;
        return res;
    }
    // fm is a nontrivial unipotent: on the smallest moved generator the
    // orbit is an exact arithmetic progression
    res.finite = false;
    res.witness_kind = OrderResult::WitnessKind::UnipotentTranslation;
    for (int i = 1; i <= L.top_index(); ++i) {
        LieElement delta = fm.image(i) - LieElement::generator(L.schedule(), i);
        if (!delta.is_zero()) {
            res.witness_generator = i;
            res.witness_delta = std::move(delta);
            break;
        }
    }
    return res;
}

NoncommutingWitness noncommuting_witness(const TruncatedAlgebra& L, int m, const Rational& alpha1,
                                         const Rational& alpha2) {
    if (m < 3) fail(Errc::IndexOutOfRange, "the canonical pair needs m >= 3");
    if (m + 1 > L.top_index())
        fail(Errc::IndexOutOfRange,
             "the canonical pair needs top index at least " + std::to_string(m + 1));
    int deg_m = word_samelson_degree({1, m - 1}, L.schedule());
    if (deg_m != L.schedule().samelson_degree(m))
        fail(Errc::DegreeMismatch, "[x1, x" + std::to_string(m - 1) + "] does not land in layer " +
                                       std::to_string(m));
    HallBasisElement w1{{1, m - 1}, deg_m};
    HallBasisElement w2{{1, m}, word_samelson_degree({1, m}, L.schedule())};
    GradedMorphism f = unipotent_morphism(L, m, w1, alpha1);
    GradedMorphism g = unipotent_morphism(L, m + 1, w2, alpha2);

    LieElement x = LieElement::generator(L.schedule(), m + 1);
    LieElement fg = apply(f, apply(g, x));
    LieElement gf = apply(g, apply(f, x));
    return NoncommutingWitness{f, g, m + 1, fg, gf, fg - gf};
}

namespace {

std::string generator_name(const TruncatedAlgebra& L, int i) {
    return L.schedule().generator(i).name;
}

}  // namespace

ExactSequenceReport exact_sequence_report(const TruncatedAlgebra& L, int n) {
    if (n < 1 || n > L.top_index())
        fail(Errc::IndexOutOfRange, "layer " + std::to_string(n) + " outside truncation");
    ExactSequenceReport report;
    report.n = n;

    LayerSplit split = indecomposables_and_decomposables(L, n);
    const auto& D = split.decomposables;
    report.kernel_rank = static_cast<int>(D.size());

    GradedMorphism id = identity(L);
    GradedMorphism id_below = restriction(id, n - 1);
    LieElement xn = LieElement::generator(L.schedule(), n);

    // (a) each basis translation is an automorphism fixing everything below,
    //     with linear part +1
    {
        bool pass = true;
        std::string detail;
        for (const HallBasisElement& d : D) {
            GradedMorphism phi = unipotent_morphism(L, n, d, Rational(1));
            if (!is_automorphism(phi) || !equal(restriction(phi, n - 1), id_below) ||
                linear_part(phi, n) != 1) {
                pass = false;
                detail = "failed at " + format_basis_element(L.schedule(), d.word);
                break;
            }
        }
        if (pass)
            detail = std::to_string(D.size()) + " basis translation(s) land in the kernel";
        report.checks.push_back({"kernel_containment", pass, detail});
    }

    // (b) the kernel is additive: phi_d . phi_e = phi_{d+e}
    {
        bool pass = true;
        std::string detail = "kernel composition law holds on all basis pairs";
        for (const HallBasisElement& d : D) {
            for (const HallBasisElement& e : D) {
                LieElement de = LieElement::basis_element(L.schedule(), d.word) +
                                LieElement::basis_element(L.schedule(), e.word);
                GradedMorphism lhs = compose(unipotent_morphism(L, n, d, Rational(1)),
                                             unipotent_morphism(L, n, e, Rational(1)));
                GradedMorphism rhs = translation_morphism(L, n, de);
                if (!equal(lhs, rhs)) {
                    pass = false;
                    detail = "failed at pair " + format_basis_element(L.schedule(), d.word) + ", " +
                             format_basis_element(L.schedule(), e.word);
                    break;
                }
            }
            if (!pass) break;
        }
        if (D.empty()) detail = "kernel trivial; nothing to compose";
        report.checks.push_back({"kernel_additive_law", pass, detail});
    }

    // (c) kernel = image: every sampled automorphism with trivial
    //     restriction and sign +1 is the translation by f(x_n) - x_n
    {
        bool pass = true;
        std::string detail;
        std::vector<GradedMorphism> samples;
        for (const HallBasisElement& d : D)
            samples.push_back(unipotent_morphism(L, n, d, Rational(1)));
        if (D.size() >= 2) {
            samples.push_back(compose(samples[0], samples[1]));
        }
        if (!D.empty()) {
            // conjugate by a sign to vary the translation direction
            std::vector<int> signs(L.top_index(), 1);
            signs[0] = -1;
            GradedMorphism s = sign_morphism(L, signs);
            samples.push_back(compose(s, compose(samples[0], s)));
        }
        int checked = 0;
        for (const GradedMorphism& fsample : samples) {
            if (!equal(restriction(fsample, n - 1), id_below) || linear_part(fsample, n) != 1)
                continue;  // outside the kernel; not a (c) instance
            ++checked;
            LieElement delta = apply(fsample, xn) - xn;
            if (!equal(fsample, translation_morphism(L, n, delta))) {
                pass = false;
                detail = "a kernel automorphism is not a pure translation";
                break;
            }
        }
        if (pass) detail = std::to_string(checked) + " kernel sample(s) are pure translations";
        report.checks.push_back({"kernel_equals_image", pass, detail});
    }

    // (d) surjectivity on generators of Aut(L_{<n}) (+) Z_2: each generator
    //     below lifts with either sign on x_n
    {
        bool pass = true;
        std::string detail;
        TruncatedAlgebra below(L.schedule(), n - 1, L.ring());
        std::vector<GradedMorphism> below_gens;
        below_gens.push_back(identity(below));
        for (int k = 1; k <= n - 1; ++k) {
            std::vector<int> signs(n - 1, 1);
            signs[k - 1] = -1;
            below_gens.push_back(sign_morphism(below, signs));
        }
        for (int k = 1; k <= n - 1; ++k) {
            LayerSplit s = indecomposables_and_decomposables(below, k);
            for (const HallBasisElement& w : s.decomposables)
                below_gens.push_back(unipotent_morphism(below, k, w, Rational(1)));
        }
        int lifted = 0;
        for (const GradedMorphism& psi : below_gens) {
            for (int eps : {1, -1}) {
                std::vector<LieElement> images;
                for (int i = 1; i < n; ++i) {
                    LieElement im(L.schedule());
                    for (const auto& [key, c] : psi.image(i).terms()) im.add_term(key.word, c);
                    images.push_back(std::move(im));
                }
                LieElement top = LieElement::generator(L.schedule(), n);
                top *= Rational(eps);
                images.push_back(std::move(top));
                for (int i = n + 1; i <= L.top_index(); ++i)
                    images.push_back(LieElement::generator(L.schedule(), i));
                GradedMorphism lift(L, std::move(images));
                if (!is_automorphism(lift) || !equal(restriction(lift, n - 1), psi) ||
                    linear_part(lift, n) != eps) {
                    pass = false;
                    detail = "a generator of the quotient failed to lift";
                    break;
                }
                ++lifted;
            }
            if (!pass) break;
        }
        if (pass)
            detail = std::to_string(lifted) + " (generator, sign) pairs lift to Aut(L<=n)";
        report.checks.push_back({"quotient_surjectivity", pass, detail});
    }

    report.all_pass = true;
    for (const ExactSequenceCheck& c : report.checks) report.all_pass = report.all_pass && c.pass;
    return report;
}

namespace {

std::string shape_string(const TruncatedAlgebra& L) {
    if (L.top_index() == 0) return "trivial";
    std::string unit = (L.ring() == RingMode::ZLattice) ? "Z2" : "Q*";
    std::string out = unit;
    for (int i = 1; i < L.top_index(); ++i) out += " + " + unit;
    return out;
}

}  // namespace

AutReport aut_report(const TruncatedAlgebra& L) {
    AutReport report;

    std::vector<std::pair<int, HallBasisElement>> unipotent_dirs;
    for (int k = 1; k <= L.top_index(); ++k) {
        LayerSplit s = indecomposables_and_decomposables(L, k);
        for (HallBasisElement& w : s.decomposables) unipotent_dirs.emplace_back(k, std::move(w));
    }
    report.unipotent_rank = static_cast<int>(unipotent_dirs.size());

    const bool has_unipotents = !unipotent_dirs.empty();
    if (!has_unipotents) {
        report.shape = shape_string(L);
        report.is_abelian = true;  // diagonal morphisms commute entrywise
        if (L.ring() == RingMode::ZLattice || L.top_index() == 0) {
            report.is_finite = true;
            report.order = 1LL << L.top_index();
        } else {
            report.is_finite = false;  // (Q \ {0})^top: infinite, order none
        }
        return report;
    }

    report.is_finite = false;

    // infinite-order witness: the first canonical unipotent, verified by order()
    {
        const auto& [n, w] = unipotent_dirs.front();
        GradedMorphism psi = unipotent_morphism(L, n, w, Rational(1));
        OrderResult r = order(psi);
        if (r.finite || r.witness_kind != OrderResult::WitnessKind::UnipotentTranslation)
            throw std::logic_error("unipotent translation must have infinite order");
        report.infinite_witness = InfiniteOrderWitness{
            format_morphism(psi), generator_name(L, *r.witness_generator),
            format_lie(*r.witness_delta)};
    }

    // non-abelian witness search among canonical generators: unipotent pairs
    // over increasing layer pairs first, then sign x unipotent
    auto record_witness = [&](const GradedMorphism& f, const GradedMorphism& g) -> bool {
        GradedMorphism fg = compose(f, g);
        GradedMorphism gf = compose(g, f);
        if (equal(fg, gf)) return false;
        for (int i = 1; i <= L.top_index(); ++i) {
            if (!(fg.image(i) == gf.image(i))) {
                report.noncommuting = NoncommutingPairWitness{
                    format_morphism(f),          format_morphism(g),
                    generator_name(L, i),        format_lie(fg.image(i)),
                    format_lie(gf.image(i)),     format_lie(fg.image(i) - gf.image(i))};
                break;
            }
        }
        return true;
    };

    bool found = false;
    for (size_t a = 0; a < unipotent_dirs.size() && !found; ++a) {
        for (size_t b = a + 1; b < unipotent_dirs.size() && !found; ++b) {
            if (unipotent_dirs[a].first == unipotent_dirs[b].first) continue;  // same layer: commute
            GradedMorphism f =
                unipotent_morphism(L, unipotent_dirs[a].first, unipotent_dirs[a].second, Rational(1));
            GradedMorphism g =
                unipotent_morphism(L, unipotent_dirs[b].first, unipotent_dirs[b].second, Rational(1));
            found = record_witness(f, g);  // the lower-layer morphism acts last in f.g
        }
    }
    for (size_t a = 0; a < unipotent_dirs.size() && !found; ++a) {
        GradedMorphism u =
            unipotent_morphism(L, unipotent_dirs[a].first, unipotent_dirs[a].second, Rational(1));
        for (int k = 1; k <= L.top_index() && !found; ++k) {
            std::vector<int> signs(L.top_index(), 1);
            signs[k - 1] = -1;
            GradedMorphism s = sign_morphism(L, signs);
            found = record_witness(s, u);
        }
    }
    report.is_abelian = !found;
    return report;
}

AlphaConfig uniform_alpha(const TruncatedAlgebra& L, const Integer& value) {
    AlphaConfig config;
    for (int n = 1; n <= L.top_index(); ++n) {
        LayerSplit s = indecomposables_and_decomposables(L, n);
        for (const HallBasisElement& w : s.decomposables) config[{n, w.word}] = value;
    }
    return config;
}

SntReport snt_cokernel_witness(const TruncatedAlgebra& L, const AlphaConfig& alphas) {
    SntReport report;
    report.top_index = L.top_index();
    Integer total = 1;
    GradedMorphism id = identity(L);

    for (int n = 1; n <= L.top_index(); ++n) {
        LayerSplit split = indecomposables_and_decomposables(L, n);
        SntLayerReport layer;
        layer.n = n;
        Integer layer_index = 1;

        std::vector<GradedMorphism> gens;
        std::vector<LieElement> deltas;
        for (const HallBasisElement& w : split.decomposables) {
            auto it = alphas.find({n, w.word});
            if (it == alphas.end())
                fail(Errc::MissingAlpha, "no alpha for layer " + std::to_string(n) + " element " +
                                             format_basis_element(L.schedule(), w.word));
            const Integer& a = it->second;
            if (a == 0)
                fail(Errc::ZeroAlpha, "alpha for " + format_basis_element(L.schedule(), w.word) +
                                          " must be nonzero");
            layer.alphas.emplace_back(format_basis_element(L.schedule(), w.word), a.get_str());
            layer_index *= abs(a);

            LieElement delta = LieElement::basis_element(L.schedule(), w.word);
            delta *= Rational(a);
            gens.push_back(translation_morphism(L, n, delta));
            deltas.push_back(std::move(delta));
        }

        // the generated translations project onto the sublattice spanned by
        // the alpha-scaled basis: verify the additive law on the generators
        layer.covered = true;
        for (size_t i = 0; i < gens.size() && layer.covered; ++i) {
            GradedMorphism g = gens[i];
            if (!is_automorphism(g) || !equal(restriction(g, n - 1), restriction(id, n - 1)))
                layer.covered = false;
        }
        if (gens.size() >= 2) {
            GradedMorphism lhs = compose(gens[0], gens[1]);
            GradedMorphism rhs = translation_morphism(L, n, deltas[0] + deltas[1]);
            if (!equal(lhs, rhs)) layer.covered = false;
        }
        if (!gens.empty()) {
            // inverse direction: the translation by -alpha w is generated too
            GradedMorphism inv = invert(gens[0]);
            if (!equal(inv, translation_morphism(L, n, -deltas[0]))) layer.covered = false;
        }

        layer.index = layer_index.get_str();
        total *= layer_index;
        report.layers.push_back(std::move(layer));
    }

    report.total_index = total.get_str();
    report.cokernel_finite = true;
    return report;
}

std::string format_morphism(const GradedMorphism& f) {
    std::ostringstream os;
    bool any = false;
    for (int i = 1; i <= f.domain().top_index(); ++i) {
        LieElement gen = LieElement::generator(f.domain().schedule(), i);
        if (f.image(i) == gen) continue;
        if (any) os << "; ";
        os << generator_name(f.domain(), i) << " -> " << format_lie(f.image(i));
        any = true;
    }
    return any ? os.str() : "identity";
}

GradedMorphism parse_morphism(const TruncatedAlgebra& L, const std::string& spec) {
    std::vector<LieElement> images;
    for (int i = 1; i <= L.top_index(); ++i)
        images.push_back(LieElement::generator(L.schedule(), i));

    std::vector<std::string> parts;
    std::string cur;
    for (char c : spec) {
        if (c == ';') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);

    for (std::string& part : parts) {
        // trim
        size_t b = part.find_first_not_of(" \t");
        size_t e = part.find_last_not_of(" \t");
        if (b == std::string::npos) continue;
        std::string body = part.substr(b, e - b + 1);
        if (body.empty() || body == "identity") continue;
        size_t arrow = body.find("->");
        if (arrow == std::string::npos)
            fail(Errc::UnknownToken, "morphism assignment needs '->': '" + body + "'");
        std::string lhs = body.substr(0, arrow);
        std::string rhs = body.substr(arrow + 2);
        // lhs must be a single generator name
        BracketExpr lhs_expr = parse_expr(lhs);
        if (lhs_expr.kind != BracketExpr::Kind::Generator)
            fail(Errc::UnknownToken, "left side of '->' must be a generator: '" + lhs + "'");
        std::string alias_seen;
        int index = resolve_generator_name(lhs_expr.name, L.schedule(), false, alias_seen);
        LieElement im = reduce(parse_expr(rhs), L.schedule());
        int want = L.schedule().samelson_degree(index);
        if (!im.is_zero()) {
            auto deg = im.homogeneous_degree();
            if (!deg || *deg != want)
                fail(Errc::DegreeMismatch, "image of " + lhs_expr.name +
                                               " must be homogeneous of degree " +
                                               std::to_string(want));
        }
        images[index - 1] = std::move(im);
    }
    return GradedMorphism(L, std::move(images));
}

}  // namespace whitealg
