#pragma once

#include "gib/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gib {

/// A homogeneous Q-linear form sum_k c_k a_k in indeterminates a_0, a_1, ...
/// Terms are kept sorted by indeterminate and never hold a zero coefficient.
class LinearForm {
public:
  using Term = std::pair<std::uint32_t, Rational>;

  LinearForm() = default;
  static LinearForm variable(std::uint32_t k, Rational coeff = 1);

  /// Adds c * a_k, dropping the term if it cancels.
  void addTerm(std::uint32_t k, const Rational &c);
  LinearForm &operator+=(const LinearForm &o);
  LinearForm &operator*=(const Rational &c);

  [[nodiscard]] bool isZero() const { return terms_.empty(); }
  [[nodiscard]] std::span<const Term> terms() const { return terms_; }
  [[nodiscard]] Rational coefficient(std::uint32_t k) const;
  /// One past the largest indeterminate index used (0 for the zero form).
  [[nodiscard]] std::uint32_t span() const { return terms_.empty() ? 0 : terms_.back().first + 1; }

  [[nodiscard]] Rational evaluate(std::span<const Rational> point) const;
  [[nodiscard]] std::uint64_t evaluate(std::span<const std::uint64_t> point, std::uint64_t p) const;

  friend bool operator==(const LinearForm &, const LinearForm &) = default;
  /// Human form, indeterminates printed 1-based: "2*a1 - a3".
  [[nodiscard]] std::string str() const;

private:
  std::vector<Term> terms_;
};

/// Dense rows x cols matrix of linear forms in `numIndeterminates` unknowns.
class LinearFormMatrix {
public:
  LinearFormMatrix() = default;
  LinearFormMatrix(std::size_t rows, std::size_t cols, std::size_t numIndeterminates);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] std::size_t numIndeterminates() const { return nvars_; }

  [[nodiscard]] const LinearForm &at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  /// Throws DimensionError if the form uses an indeterminate >= numIndeterminates.
  void set(std::size_t i, std::size_t j, LinearForm f);
  void add(std::size_t i, std::size_t j, std::uint32_t k, const Rational &c);

  [[nodiscard]] bool rowIsZero(std::size_t i) const;
  [[nodiscard]] bool isZero() const;
  [[nodiscard]] std::size_t nonzeroRowCount() const;

  [[nodiscard]] LinearFormMatrix submatrix(std::span<const std::size_t> rowIdx,
                                           std::span<const std::size_t> colIdx) const;
  [[nodiscard]] LinearFormMatrix transposed() const;

  friend bool operator==(const LinearFormMatrix &, const LinearFormMatrix &) = default;
  [[nodiscard]] std::string str() const;

private:
  std::size_t rows_ = 0, cols_ = 0, nvars_ = 0;
  std::vector<LinearForm> entries_;
};

} // namespace gib
