#include "ncstar/ordering.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ncstar/star.hpp"

namespace ncstar {

namespace {

bool identical(const ScalarField& a, const ScalarField& b) {
  if (a.grid() != b.grid()) return false;
  const auto ma = a.modes();
  const auto mb = b.modes();
  return std::equal(ma.begin(), ma.end(), mb.begin());
}

// Strict weak order on field content.
bool content_less(const ScalarField& a, const ScalarField& b) {
  const auto ma = a.modes();
  const auto mb = b.modes();
  for (std::size_t i = 0; i < ma.size(); ++i) {
    if (ma[i].real() != mb[i].real()) return ma[i].real() < mb[i].real();
    if (ma[i].imag() != mb[i].imag()) return ma[i].imag() < mb[i].imag();
  }
  return false;
}

double factorial(std::size_t n) {
  double f = 1.0;
  for (std::size_t i = 2; i <= n; ++i) f *= static_cast<double>(i);
  return f;
}

class SymmetricSum {
 public:
  SymmetricSum(std::vector<ScalarField> classes, std::vector<int> counts,
               const ThetaMatrix& theta)
      : classes_(std::move(classes)), counts_(std::move(counts)), theta_(theta),
        total_(classes_.front().grid()) {}

  ScalarField run() {
    const int n = std::accumulate(counts_.begin(), counts_.end(), 0);
    descend(nullptr, n);
    double weight = 1.0;
    for (int c : counts_) weight *= factorial(static_cast<std::size_t>(c));
    weight /= factorial(static_cast<std::size_t>(n));
    total_ *= weight;
    return total_;
  }

 private:
  // Depth-first over distinct orderings in lexicographic class order;
  // prefix products are shared between orderings with a common prefix.
  void descend(const ScalarField* prefix, int remaining) {
    if (remaining == 0) {
      total_ += *prefix;
      return;
    }
    for (std::size_t c = 0; c < classes_.size(); ++c) {
      if (counts_[c] == 0) continue;
      --counts_[c];
      if (prefix == nullptr) {
        descend(&classes_[c], remaining - 1);
      } else {
        const ScalarField next = star_spectral(*prefix, classes_[c], theta_);
        descend(&next, remaining - 1);
      }
      ++counts_[c];
    }
  }

  std::vector<ScalarField> classes_;
  std::vector<int> counts_;
  const ThetaMatrix& theta_;
  ScalarField total_;
};

ScalarField symmetric_sum(std::vector<ScalarField> fields, const ThetaMatrix& theta) {
  if (fields.empty()) throw std::invalid_argument("symmetric_star: no operands");
  if (fields.size() > kMaxOrderedOperands) {
    throw std::invalid_argument("symmetric_star: " + std::to_string(fields.size()) +
                                " operands exceed the bound of " +
                                std::to_string(kMaxOrderedOperands));
  }
  for (const auto& f : fields) {
    require_same_grid(fields.front(), f, "symmetric_star");
    if (f.is_zero()) return ScalarField(f.grid());
  }
  std::vector<std::size_t> order(fields.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return content_less(fields[a], fields[b]);
  });
  std::vector<ScalarField> classes;
  std::vector<int> counts;
  for (std::size_t idx : order) {
    if (!classes.empty() && identical(classes.back(), fields[idx])) {
      ++counts.back();
    } else {
      classes.push_back(fields[idx]);
      counts.push_back(1);
    }
  }
  return SymmetricSum(std::move(classes), std::move(counts), theta).run();
}

}  // namespace

OperandList::OperandList(std::initializer_list<Operand> operands) {
  for (const auto& op : operands) add(op.field, op.id);
}

OperandList OperandList::distinct(std::span<const ScalarField> fields) {
  OperandList list;
  for (std::size_t i = 0; i < fields.size(); ++i) list.add(fields[i], std::to_string(i));
  return list;
}

OperandList& OperandList::add(ScalarField field, std::string id) {
  for (const auto& op : operands_) {
    if (op.id == id && !identical(op.field, field)) {
      throw std::invalid_argument("operand list: id '" + id +
                                  "' declared for two different fields");
    }
  }
  operands_.push_back(Operand{std::move(field), std::move(id)});
  return *this;
}

std::size_t OperandList::occurrences(const std::string& id) const {
  return static_cast<std::size_t>(std::count_if(
      operands_.begin(), operands_.end(), [&](const Operand& op) { return op.id == id; }));
}

OperandList OperandList::without(std::size_t index) const {
  if (index >= operands_.size()) {
    throw std::invalid_argument("operand list: index " + std::to_string(index) +
                                " out of range for " + std::to_string(operands_.size()) +
                                " operands");
  }
  OperandList out;
  for (std::size_t i = 0; i < operands_.size(); ++i) {
    if (i != index) out.operands_.push_back(operands_[i]);
  }
  return out;
}

std::vector<ScalarField> OperandList::fields() const {
  std::vector<ScalarField> out;
  out.reserve(operands_.size());
  for (const auto& op : operands_) out.push_back(op.field);
  return out;
}

ScalarField symmetric_star(const OperandList& ops, const ThetaMatrix& theta) {
  return symmetric_sum(ops.fields(), theta);
}

ScalarField symmetric_star(std::span<const ScalarField> fields, const ThetaMatrix& theta) {
  return symmetric_sum(std::vector<ScalarField>(fields.begin(), fields.end()), theta);
}

ScalarField reduced_symmetric_star(std::size_t pivot, const OperandList& ops,
                                   const ThetaMatrix& theta) {
  if (pivot >= ops.size()) {
    throw std::invalid_argument("reduced_symmetric_star: pivot " + std::to_string(pivot) +
                                " out of range for " + std::to_string(ops.size()) + " operands");
  }
  const OperandList rest = ops.without(pivot);
  if (rest.empty()) return ops[pivot].field;
  return star_spectral(ops[pivot].field, symmetric_star(rest, theta), theta);
}

ScalarField variation_coefficient(const OperandList& ops, const std::string& target,
                                  const ThetaMatrix& theta) {
  const std::size_t m = ops.occurrences(target);
  if (m == 0) {
    throw std::invalid_argument("variation_coefficient: operand '" + target + "' is absent");
  }
  std::size_t first = 0;
  while (ops[first].id != target) ++first;
  const OperandList rest = ops.without(first);
  if (rest.empty()) return ScalarField::constant(ops[0].field.grid(), 1.0);
  return static_cast<double>(m) * symmetric_star(rest, theta);
}

}  // namespace ncstar
