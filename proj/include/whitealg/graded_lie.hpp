#ifndef WHITEALG_GRADED_LIE_HPP
#define WHITEALG_GRADED_LIE_HPP

#include "whitealg/expr.hpp"
#include "whitealg/lie_element.hpp"
#include "whitealg/tensor_element.hpp"

namespace whitealg {

// Generators map to length-one words and brackets to graded commutators in
// the free associative algebra. For a Lyndon basis element the expansion is
// triangular: its own word is the lexicographically smallest monomial, with
// coefficient 1.
TensorElement embed_assoc(const LieElement& a);
TensorElement embed_assoc_basis(const GeneratorSchedule& schedule, const Word& lyndon_word);

// uv - (-1)^{|u||v|} vu on homogeneous arguments, extended bilinearly over
// homogeneous components. All schedule degrees are even, so the sign is +1.
TensorElement tensor_commutator(const TensorElement& u, const TensorElement& v);

// Inverse of embed_assoc on its image, by leading-Lyndon-term elimination.
// Throws NotALieElement when the residual cannot be straightened.
LieElement lie_from_assoc(const TensorElement& u);

// Graded bracket in Lyndon normal form: embed, commute, straighten.
LieElement bracket(const LieElement& a, const LieElement& b);

// Linear extension of bracket over an expression tree; every leaf must name
// a schedule generator in the Lie alias set (x/chi for HP and custom, xi for
// CP). '.'-products are rejected here: they live in the tensor algebra.
LieElement reduce(const BracketExpr& expr, const GeneratorSchedule& schedule);

// Resolves a surface name ("x3", "chi3", "xi7", "b2") to a generator index
// for the given schedule. `alias_seen` accumulates the alias prefixes used
// so far; two distinct aliases in one expression is an error. When
// `tensor_context` is set only the "b" alias is accepted, otherwise the
// family aliases are.
int resolve_generator_name(const std::string& name, const GeneratorSchedule& schedule,
                           bool tensor_context, std::string& alias_seen);

}  // namespace whitealg

#endif
