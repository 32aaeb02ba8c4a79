#pragma once

#include "gib/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace gib {

/// Sparse multivariate polynomial over Z used by fraction-free elimination.
///
/// A monomial is a byte string holding one exponent per indeterminate, so
/// string comparison is lex order and short monomials avoid allocation.
/// Terms are sorted by descending monomial and carry nonzero coefficients.
class MultiPoly {
public:
  using Monomial = std::string;
  using Term = std::pair<Monomial, Integer>;

  MultiPoly() = default;
  explicit MultiPoly(std::size_t numVars) : nvars_(numVars) {}
  static MultiPoly constant(std::size_t numVars, const Integer &c);
  static MultiPoly variable(std::size_t numVars, std::size_t k, const Integer &c = 1);

  [[nodiscard]] std::size_t numVars() const { return nvars_; }
  [[nodiscard]] bool isZero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t termCount() const { return terms_.size(); }
  [[nodiscard]] const std::vector<Term> &terms() const { return terms_; }
  [[nodiscard]] std::size_t totalDegree() const;

  MultiPoly &operator+=(const MultiPoly &o);
  MultiPoly &operator-=(const MultiPoly &o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly &b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly &b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly &a, const MultiPoly &b);
  friend bool operator==(const MultiPoly &, const MultiPoly &) = default;

  /// Quotient of an exact division; throws std::logic_error when `divisor`
  /// does not divide `*this` in Z[a].
  [[nodiscard]] MultiPoly divideExact(const MultiPoly &divisor) const;

  [[nodiscard]] Integer evaluate(const std::vector<Integer> &point) const;
  [[nodiscard]] std::string str() const;

private:
  static MultiPoly fromUnsorted(std::size_t nvars, std::vector<Term> terms);
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

} // namespace gib
