#ifndef WHITEALG_TENSOR_HOPF_HPP
#define WHITEALG_TENSOR_HOPF_HPP

#include "whitealg/expr.hpp"
#include "whitealg/graded_lie.hpp"
#include "whitealg/lie_element.hpp"
#include "whitealg/tensor_element.hpp"

namespace whitealg {

// Value of the coproduct: sparse sum of word (x) word tensors.
class CoproductValue {
public:
    using Key = std::pair<TensorElement::Key, TensorElement::Key>;
    using Terms = std::map<Key, Rational>;

    explicit CoproductValue(GeneratorSchedule schedule) : schedule_(std::move(schedule)) {}

    const GeneratorSchedule& schedule() const { return schedule_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Word& left, const Word& right, const Rational& c);

    bool operator==(const CoproductValue& o) const {
        return schedule_ == o.schedule_ && terms_ == o.terms_;
    }

private:
    GeneratorSchedule schedule_;
    Terms terms_;
};

// Image of the homology suspension: only length-one content survives, with
// the grading shifted to Whitehead degree. Keyed by generator index.
class SuspendedElement {
public:
    explicit SuspendedElement(GeneratorSchedule schedule) : schedule_(std::move(schedule)) {}

    const GeneratorSchedule& schedule() const { return schedule_; }
    const std::map<int, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(int generator_index, const Rational& c);
    int whitehead_degree(int generator_index) const {
        return schedule_.whitehead_degree(generator_index);
    }

    bool operator==(const SuspendedElement& o) const {
        return schedule_ == o.schedule_ && terms_ == o.terms_;
    }

private:
    GeneratorSchedule schedule_;
    std::map<int, Rational> terms_;
};

// Concatenation product (unit = empty word).
TensorElement product(const TensorElement& u, const TensorElement& v);

// For HP/CP schedules the generator rule is the divided-power coproduct
// forced by duality with the polynomial cohomology ring:
//   delta(b_n) = sum_{i+j=n, i,j>=0} b_i (x) b_j, with b_0 = 1.
// Custom-family generators model a wedge of even cells (trivial cup
// products) and are primitive. Extended multiplicatively to words.
CoproductValue coproduct(const TensorElement& u);

// coproduct(u) minus u(x)1 + 1(x)u; zero exactly on primitives.
CoproductValue reduced_coproduct(const TensorElement& u);

bool is_primitive(const TensorElement& u);     // pre: homogeneous, positive degree
bool is_decomposable(const TensorElement& u);  // pre: homogeneous, positive degree

// uv - (-1)^{|u||v|} vu; homogeneous inputs.
TensorElement graded_commutator(const TensorElement& u, const TensorElement& v);

// First Eulerian idempotent e1 = sum_{k>=1} ((-1)^{k-1}/k) m^{(k-1)} dtilde^{(k-1)};
// the convolution logarithm of the identity. Projects onto a canonical
// primitive complement; fixes primitives.
TensorElement primitive_projection(const TensorElement& u);

// Canonical primitive lift p_n = e1(b_n); its length-one part is exactly b_n.
TensorElement hurewicz(const GeneratorSchedule& schedule, int n);

// Generators to hurewicz lifts, brackets to graded commutators; lands in the
// primitive subspace.
TensorElement hurewicz_of_lie(const LieElement& a);

// Right-nested commutator [p_{i_1}, [p_{i_2}, [... [p_{i_{k-1}}, p_{i_k}]...]]]
// of hurewicz lifts; k >= 2. Nonzero images are primitive and decomposable,
// which is asserted.
TensorElement iterated_commutator_image(const GeneratorSchedule& schedule,
                                        const std::vector<int>& indices);

// Projection onto length-one words, reindexed to Whitehead degree.
SuspendedElement homology_suspension(const TensorElement& u);

// Dimension of the solution space of reduced_coproduct(u) = 0 among
// homogeneous elements of the given degree, by exact rank computation over
// the word basis.
int primitive_space_dim(const GeneratorSchedule& schedule, int samelson_degree);

// Evaluates a parsed expression in the tensor algebra ('b' names only);
// with via_hurewicz set, generators map through their hurewicz lifts.
TensorElement tensor_from_expr(const BracketExpr& expr, const GeneratorSchedule& schedule,
                               bool via_hurewicz = false);

}  // namespace whitealg

#endif
