#ifndef WHITEALG_AUT_GROUP_HPP
#define WHITEALG_AUT_GROUP_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "whitealg/homotopy_model.hpp"
#include "whitealg/linalg.hpp"

namespace whitealg {

// A degree-preserving endomorphism of a truncated Whitehead algebra, given
// by generator images and extended by bracket-compatibility
// f[a,b] = [fa, fb]. Immutable after construction.
class GradedMorphism {
public:
    // images[i-1] is the image of x_i; each must be homogeneous of the
    // generator's degree (zero allowed), integral in Z-lattice mode.
    GradedMorphism(TruncatedAlgebra domain, std::vector<LieElement> images);

    const TruncatedAlgebra& domain() const { return domain_; }
    const LieElement& image(int index) const;  // 1-based

    bool operator==(const GradedMorphism& o) const {
        return domain_ == o.domain_ && images_ == o.images_;
    }

private:
    TruncatedAlgebra domain_;
    std::vector<LieElement> images_;
};

GradedMorphism identity(const TruncatedAlgebra& L);

// x_i -> signs[i-1] * x_i with signs in {+1, -1}.
GradedMorphism sign_morphism(const TruncatedAlgebra& L, const std::vector<int>& signs);

// x_i -> scalars[i-1] * x_i. Scalars must be nonzero; anything other than
// +-1 requires Q mode.
GradedMorphism scaling_morphism(const TruncatedAlgebra& L, const std::vector<Rational>& scalars);

// x_n -> x_n + alpha * w, identity on the other generators; w must be a
// decomposable basis element of x_n's layer and alpha nonzero (integral in
// Z mode).
GradedMorphism unipotent_morphism(const TruncatedAlgebra& L, int n, const HallBasisElement& w,
                                  const Rational& alpha);

// x_n -> x_n + delta for a homogeneous decomposable delta of x_n's degree
// (the general kernel element of the layer-n exact sequence).
GradedMorphism translation_morphism(const TruncatedAlgebra& L, int n, const LieElement& delta);

// Bracket-compatible extension to an arbitrary element.
LieElement apply(const GradedMorphism& f, const LieElement& elem);

// Matrix of f on one layer; columns indexed by the canonical layer basis.
QMatrix matrix(const GradedMorphism& f, int samelson_degree);

// f after g.
GradedMorphism compose(const GradedMorphism& f, const GradedMorphism& g);

bool equal(const GradedMorphism& f, const GradedMorphism& g);

// Every layer matrix is invertible over the ring. By the bracket-length
// filtration this reduces to the generator coefficients being units:
// f(B(w)) = (prod of generator coefficients) * B(w) + longer words, so each
// layer matrix is triangular with those products on the diagonal.
bool is_automorphism(const GradedMorphism& f);

GradedMorphism invert(const GradedMorphism& f);  // NotInvertible unless automorphism

// Coefficient of x_n in f(x_n): +-1 in Z mode, a nonzero scalar in Q mode.
Rational linear_part(const GradedMorphism& f, int n);

// Forgets the generators above n_prime.
GradedMorphism restriction(const GradedMorphism& f, int n_prime);

struct OrderResult {
    enum class WitnessKind { None, UnipotentTranslation, Scaling };

    bool finite = false;
    long order = 0;  // when finite
    WitnessKind witness_kind = WitnessKind::None;
    std::optional<int> witness_generator;
    // Unipotent witness: with m the order of the linear part,
    // f^{m k}(x) = x + k * delta for all k >= 1.
    std::optional<LieElement> witness_delta;
};

// Exact order computation: the linear part has finite order m (1 or 2 in Z
// mode; infinite already if some scalar is not +-1 in Q mode), and f^m is
// either the identity or a nontrivial unipotent of infinite order.
OrderResult order(const GradedMorphism& f);

struct NoncommutingWitness {
    GradedMorphism f, g;
    int on_generator = 0;  // m + 1
    LieElement fg_image, gf_image, discrepancy;
};

// The canonical pair f = I + alpha1 [x_1, x_{m-1}] on layer m and
// g = I + alpha2 [x_1, x_m] on layer m+1; their composites differ on
// x_{m+1} by alpha1 alpha2 [x_1, [x_1, x_{m-1}]].
NoncommutingWitness noncommuting_witness(const TruncatedAlgebra& L, int m,
                                         const Rational& alpha1 = Rational(1),
                                         const Rational& alpha2 = Rational(1));

struct ExactSequenceCheck {
    std::string name;
    bool pass = false;
    std::string detail;
    bool operator==(const ExactSequenceCheck&) const = default;
};

struct ExactSequenceReport {
    int n = 0;
    int kernel_rank = 0;
    std::vector<ExactSequenceCheck> checks;
    bool all_pass = false;
    bool operator==(const ExactSequenceReport&) const = default;
};

// Computational verification of the layer-n extension
//   0 -> Hom(I_n, D_n) -> Aut(L_{<=n}) -> Aut(L_{<n}) (+) Z_2 -> 0:
// kernel containment, the kernel's additive law, kernel = image on samples,
// and surjectivity on generators.
ExactSequenceReport exact_sequence_report(const TruncatedAlgebra& L, int n);

struct InfiniteOrderWitness {
    std::string morphism;         // e.g. "x3 -> x3 + [x1,x2]"
    std::string witness_element;  // e.g. "x3"
    std::string orbit_delta;      // e.g. "[x1,x2]"; empty for scaling witnesses
    bool operator==(const InfiniteOrderWitness&) const = default;
};

struct NoncommutingPairWitness {
    std::string f, g;
    std::string on_generator;
    std::string fg_image, gf_image, discrepancy;
    bool operator==(const NoncommutingPairWitness&) const = default;
};

struct AutReport {
    bool is_finite = false;
    std::optional<long long> order;  // exact group order when finite
    bool is_abelian = false;
    int unipotent_rank = 0;  // total rank of the unipotent directions
    std::string shape;       // "Z2 + Z2", "Q* + Q*", ... when the group is diagonal
    std::optional<InfiniteOrderWitness> infinite_witness;
    std::optional<NoncommutingPairWitness> noncommuting;
    bool operator==(const AutReport&) const = default;
};

// Finiteness, order, abelianness and witnesses for Aut(L). Finite exactly
// when no layer has decomposables (then the group is the diagonal sign
// group in Z mode); non-abelian verdicts always carry a witness pair found
// among the canonical generators (signs and unipotents).
AutReport aut_report(const TruncatedAlgebra& L);

// alpha assignment per (layer, decomposable basis word)
using AlphaConfig = std::map<std::pair<int, Word>, Integer>;
AlphaConfig uniform_alpha(const TruncatedAlgebra& L, const Integer& value = Integer(1));

struct SntLayerReport {
    int n = 0;
    std::vector<std::pair<std::string, std::string>> alphas;  // basis expression -> alpha
    std::string index;                                        // product of |alpha| over the layer
    bool covered = false;
    bool operator==(const SntLayerReport&) const = default;
};

struct SntReport {
    int top_index = 0;
    std::vector<SntLayerReport> layers;
    std::string total_index;
    bool cokernel_finite = false;
    bool operator==(const SntReport&) const = default;
};

// Models the realizable subgroup generated by the unipotent translations
// with the given alpha values (plus signs): per layer the generated
// translations project onto the sublattice spanned by alpha_w * w, of index
// prod |alpha_w| in Hom(I_n, D_n). The cokernel is finite for any nonzero
// assignment.
SntReport snt_cokernel_witness(const TruncatedAlgebra& L, const AlphaConfig& alphas);

// "x3 -> x3 + [x1,x2]; x4 -> ..." with omitted generators mapping to
// themselves; "identity" for the identity morphism.
std::string format_morphism(const GradedMorphism& f);
GradedMorphism parse_morphism(const TruncatedAlgebra& L, const std::string& spec);

}  // namespace whitealg

#endif
