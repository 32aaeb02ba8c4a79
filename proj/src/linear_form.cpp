#include "gib/linear_form.hpp"

#include "gib/errors.hpp"
#include "gib/modp.hpp"

#include <algorithm>
#include <sstream>

namespace gib {

LinearForm LinearForm::variable(std::uint32_t k, Rational coeff) {
  LinearForm f;
  f.addTerm(k, coeff);
  return f;
}

void LinearForm::addTerm(std::uint32_t k, const Rational &c) {
  if (c.isZero())
    return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                             [](const Term &t, std::uint32_t key) { return t.first < key; });
  if (it != terms_.end() && it->first == k) {
    it->second += c;
    if (it->second.isZero())
      terms_.erase(it);
  } else {
    terms_.insert(it, {k, c});
  }
}

LinearForm &LinearForm::operator+=(const LinearForm &o) {
  for (const auto &[k, c] : o.terms_)
    addTerm(k, c);
  return *this;
}

LinearForm &LinearForm::operator*=(const Rational &c) {
  if (c.isZero()) {
    terms_.clear();
    return *this;
  }
  for (auto &t : terms_)
    t.second *= c;
  return *this;
}

Rational LinearForm::coefficient(std::uint32_t k) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                             [](const Term &t, std::uint32_t key) { return t.first < key; });
  return (it != terms_.end() && it->first == k) ? it->second : Rational(0);
}

Rational LinearForm::evaluate(std::span<const Rational> point) const {
  Rational acc;
  for (const auto &[k, c] : terms_) {
    if (k >= point.size())
      throw DimensionError("evaluation point too short");
    acc += c * point[k];
  }
  return acc;
}

std::uint64_t LinearForm::evaluate(std::span<const std::uint64_t> point, std::uint64_t p) const {
  std::uint64_t acc = 0;
  for (const auto &[k, c] : terms_) {
    if (k >= point.size())
      throw DimensionError("evaluation point too short");
    acc = modp::add(acc, modp::mul(c.modP(p), point[k] % p, p), p);
  }
  return acc;
}

std::string LinearForm::str() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[k, c] : terms_) {
    Rational mag = c.sign() < 0 ? -c : c;
    if (first)
      os << (c.sign() < 0 ? "-" : "");
    else
      os << (c.sign() < 0 ? " - " : " + ");
    if (mag != Rational(1))
      os << mag << "*";
    os << "a" << (k + 1);
    first = false;
  }
  return os.str();
}

LinearFormMatrix::LinearFormMatrix(std::size_t rows, std::size_t cols, std::size_t numIndeterminates)
    : rows_(rows), cols_(cols), nvars_(numIndeterminates), entries_(rows * cols) {}

void LinearFormMatrix::set(std::size_t i, std::size_t j, LinearForm f) {
  if (i >= rows_ || j >= cols_)
    throw DimensionError("matrix index out of range");
  if (f.span() > nvars_)
    throw DimensionError("linear form uses an indeterminate beyond numIndeterminates");
  entries_[i * cols_ + j] = std::move(f);
}

void LinearFormMatrix::add(std::size_t i, std::size_t j, std::uint32_t k, const Rational &c) {
  if (i >= rows_ || j >= cols_)
    throw DimensionError("matrix index out of range");
  if (k >= nvars_)
    throw DimensionError("indeterminate index out of range");
  entries_[i * cols_ + j].addTerm(k, c);
}

bool LinearFormMatrix::rowIsZero(std::size_t i) const {
  for (std::size_t j = 0; j < cols_; ++j)
    if (!at(i, j).isZero())
      return false;
  return true;
}

bool LinearFormMatrix::isZero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const LinearForm &f) { return f.isZero(); });
}

std::size_t LinearFormMatrix::nonzeroRowCount() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < rows_; ++i)
    n += rowIsZero(i) ? 0 : 1;
  return n;
}

LinearFormMatrix LinearFormMatrix::submatrix(std::span<const std::size_t> rowIdx,
                                             std::span<const std::size_t> colIdx) const {
  LinearFormMatrix out(rowIdx.size(), colIdx.size(), nvars_);
  for (std::size_t a = 0; a < rowIdx.size(); ++a)
    for (std::size_t b = 0; b < colIdx.size(); ++b)
      out.entries_[a * out.cols_ + b] = at(rowIdx[a], colIdx[b]);
  return out;
}

LinearFormMatrix LinearFormMatrix::transposed() const {
  LinearFormMatrix out(cols_, rows_, nvars_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      out.entries_[j * rows_ + i] = at(i, j);
  return out;
}

std::string LinearFormMatrix::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j)
      os << (j ? ", " : "") << at(i, j).str();
    os << "]\n";
  }
  return os.str();
}

} // namespace gib
