#ifndef WHITEALG_FORMAT_HPP
#define WHITEALG_FORMAT_HPP

#include <string>

#include "whitealg/lie_element.hpp"
#include "whitealg/tensor_element.hpp"
#include "whitealg/tensor_hopf.hpp"

namespace whitealg {

// Grading convention for display. Generator symbols are the same in both
// (the hat decoration of loop-space classes has no ASCII form), so the
// choice only matters to callers labelling degrees alongside.
enum class Notation { Whitehead, Samelson };

// Canonical bracket expression of a Lyndon word, e.g. "[x1,[x1,x2]]".
std::string format_basis_element(const GeneratorSchedule& schedule, const Word& lyndon_word);

// Terms ascending by degree; within a degree the generator word comes first,
// then brackets by word order. Integers print without a denominator;
// coefficient 1 is omitted. The zero element prints as "0".
std::string format_lie(const LieElement& e, Notation notation = Notation::Whitehead);

// Words as '.'-joined generators, e.g. "b2 - 1/2*b1.b1"; the unit word is "1".
std::string format_tensor(const TensorElement& e);

std::string format_suspended(const SuspendedElement& e);

std::string format_rational(const Rational& q);

}  // namespace whitealg

#endif
