#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "ncstar/field.hpp"
#include "ncstar/theta.hpp"

namespace ncstar {

inline constexpr std::size_t kMaxOrderedOperands = 6;

struct Operand {
  ScalarField field;
  /// Operands declared with the same id are the same function; their fields
  /// must be identical.
  std::string id;
};

/// Ordered operands A_1..A_n of a symmetric star ordering.
class OperandList {
 public:
  OperandList() = default;
  OperandList(std::initializer_list<Operand> operands);
  /// Each field becomes its own operand with id "0", "1", ...
  static OperandList distinct(std::span<const ScalarField> fields);

  OperandList& add(ScalarField field, std::string id);

  std::size_t size() const { return operands_.size(); }
  bool empty() const { return operands_.empty(); }
  const Operand& operator[](std::size_t i) const { return operands_[i]; }
  std::size_t occurrences(const std::string& id) const;
  /// The list with operand `index` removed.
  OperandList without(std::size_t index) const;
  std::vector<ScalarField> fields() const;

 private:
  std::vector<Operand> operands_;
};

/// Normalized symmetric ordering S(A_1..A_n) = (1/n!) sum over all n!
/// orderings of the left-associated star chain.
///
/// Operands are first put in a canonical order by content, and orderings
/// that coincide because operands are equal are evaluated once with their
/// multiplicity. The result is therefore bit-identical for every
/// permutation of the input list. Throws std::invalid_argument for n = 0 or
/// n > 6.
ScalarField symmetric_star(const OperandList& ops, const ThetaMatrix& theta);
ScalarField symmetric_star(std::span<const ScalarField> fields, const ThetaMatrix& theta);

/// A_pivot * S(remaining operands), the form the symmetric ordering takes
/// under an integral. The remaining ordering carries 1/(n-1)!.
ScalarField reduced_symmetric_star(std::size_t pivot, const OperandList& ops,
                                   const ThetaMatrix& theta);

/// Functional derivative of the integral of S(ops) with respect to the
/// operand `target`: m * S(ops with one occurrence of target removed), where
/// m counts the occurrences. Equals the constant 1 when target is the only
/// operand.
ScalarField variation_coefficient(const OperandList& ops, const std::string& target,
                                  const ThetaMatrix& theta);

}  // namespace ncstar
