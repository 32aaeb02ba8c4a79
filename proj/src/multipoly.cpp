#include "gib/multipoly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace gib {

namespace {

using Monomial = MultiPoly::Monomial;

Monomial monomialProduct(const Monomial &a, const Monomial &b) {
  Monomial out(a.size(), '\0');
  for (std::size_t i = 0; i < a.size(); ++i) {
    unsigned s = static_cast<unsigned char>(a[i]) + static_cast<unsigned char>(b[i]);
    if (s > 255)
      throw std::overflow_error("monomial exponent exceeds 255");
    out[i] = static_cast<char>(s);
  }
  return out;
}

bool monomialDivides(const Monomial &d, const Monomial &a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (static_cast<unsigned char>(d[i]) > static_cast<unsigned char>(a[i]))
      return false;
  return true;
}

Monomial monomialQuotient(const Monomial &a, const Monomial &d) {
  Monomial out(a.size(), '\0');
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = static_cast<char>(static_cast<unsigned char>(a[i]) - static_cast<unsigned char>(d[i]));
  return out;
}

// Merge two descending term lists, sign = +1 or -1 applied to b.
std::vector<MultiPoly::Term> merge(const std::vector<MultiPoly::Term> &a,
                                   const std::vector<MultiPoly::Term> &b, int sign) {
  std::vector<MultiPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first > b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first > a[i].first) {
      out.emplace_back(b[j].first, sign > 0 ? b[j].second : Integer(-b[j].second));
      ++j;
    } else {
      Integer c = sign > 0 ? Integer(a[i].second + b[j].second) : Integer(a[i].second - b[j].second);
      if (c != 0)
        out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

} // namespace

MultiPoly MultiPoly::constant(std::size_t numVars, const Integer &c) {
  MultiPoly p(numVars);
  if (c != 0)
    p.terms_.emplace_back(Monomial(numVars, '\0'), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t numVars, std::size_t k, const Integer &c) {
  MultiPoly p(numVars);
  if (c != 0) {
    Monomial m(numVars, '\0');
    m[k] = 1;
    p.terms_.emplace_back(std::move(m), c);
  }
  return p;
}

MultiPoly MultiPoly::fromUnsorted(std::size_t nvars, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term &a, const Term &b) { return a.first > b.first; });
  MultiPoly p(nvars);
  for (auto &t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first)
      p.terms_.back().second += t.second;
    else
      p.terms_.push_back(std::move(t));
    if (p.terms_.back().second == 0)
      p.terms_.pop_back();
  }
  return p;
}

std::size_t MultiPoly::totalDegree() const {
  std::size_t best = 0;
  for (const auto &[m, c] : terms_) {
    std::size_t d = 0;
    for (char e : m)
      d += static_cast<unsigned char>(e);
    best = std::max(best, d);
  }
  return best;
}

MultiPoly &MultiPoly::operator+=(const MultiPoly &o) {
  terms_ = merge(terms_, o.terms_, +1);
  nvars_ = std::max(nvars_, o.nvars_);
  return *this;
}

MultiPoly &MultiPoly::operator-=(const MultiPoly &o) {
  terms_ = merge(terms_, o.terms_, -1);
  nvars_ = std::max(nvars_, o.nvars_);
  return *this;
}

MultiPoly operator*(const MultiPoly &a, const MultiPoly &b) {
  if (a.isZero() || b.isZero())
    return MultiPoly(a.nvars_);
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    // multiplying by a single term preserves the order
    const auto &mono = a.terms_.size() == 1 ? a : b;
    const auto &other = a.terms_.size() == 1 ? b : a;
    const auto &[m, c] = mono.terms_.front();
    MultiPoly out(a.nvars_);
    out.terms_.reserve(other.terms_.size());
    for (const auto &[om, oc] : other.terms_)
      out.terms_.emplace_back(monomialProduct(m, om), c * oc);
    return out;
  }
  std::unordered_map<Monomial, Integer> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto &[ma, ca] : a.terms_)
    for (const auto &[mb, cb] : b.terms_)
      acc[monomialProduct(ma, mb)] += ca * cb;
  std::vector<MultiPoly::Term> terms;
  terms.reserve(acc.size());
  for (auto &kv : acc)
    if (kv.second != 0)
      terms.emplace_back(kv.first, std::move(kv.second));
  return MultiPoly::fromUnsorted(a.nvars_, std::move(terms));
}

MultiPoly MultiPoly::divideExact(const MultiPoly &divisor) const {
  if (divisor.isZero())
    throw std::invalid_argument("division by zero polynomial");
  MultiPoly q(nvars_);
  if (isZero())
    return q;
  if (divisor.terms_.size() == 1) {
    const auto &[dm, dc] = divisor.terms_.front();
    q.terms_.reserve(terms_.size());
    for (const auto &[m, c] : terms_) {
      if (!monomialDivides(dm, m) || !mpz_divisible_p(c.get_mpz_t(), dc.get_mpz_t()))
        throw std::logic_error("inexact polynomial division");
      Integer qc;
      mpz_divexact(qc.get_mpz_t(), c.get_mpz_t(), dc.get_mpz_t());
      q.terms_.emplace_back(monomialQuotient(m, dm), std::move(qc));
    }
    return q;
  }
  const auto &[lm, lc] = divisor.terms_.front();
  std::map<Monomial, Integer, std::greater<>> rem;
  for (const auto &t : terms_)
    rem.insert(t);
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!monomialDivides(lm, it->first) || !mpz_divisible_p(it->second.get_mpz_t(), lc.get_mpz_t()))
      throw std::logic_error("inexact polynomial division");
    Integer qc;
    mpz_divexact(qc.get_mpz_t(), it->second.get_mpz_t(), lc.get_mpz_t());
    Monomial qm = monomialQuotient(it->first, lm);
    rem.erase(it);
    for (std::size_t k = 1; k < divisor.terms_.size(); ++k) {
      const auto &[dm, dc] = divisor.terms_[k];
      Monomial m = monomialProduct(qm, dm);
      auto [pos, inserted] = rem.try_emplace(std::move(m));
      pos->second -= qc * dc;
      if (pos->second == 0)
        rem.erase(pos);
    }
    q.terms_.emplace_back(std::move(qm), std::move(qc));
  }
  return q;
}

Integer MultiPoly::evaluate(const std::vector<Integer> &point) const {
  Integer acc = 0;
  for (const auto &[m, c] : terms_) {
    Integer t = c;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (unsigned e = 0; e < static_cast<unsigned char>(m[i]); ++e)
        t *= point[i];
    acc += t;
  }
  return acc;
}

std::string MultiPoly::str() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[m, c] : terms_) {
    os << (first ? "" : " + ") << c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      unsigned e = static_cast<unsigned char>(m[i]);
      if (e)
        os << "*a" << (i + 1) << (e > 1 ? "^" + std::to_string(e) : "");
    }
    first = false;
  }
  return os.str();
}

} // namespace gib
