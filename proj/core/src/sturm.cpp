#include "pqdist/sturm.hpp"

#include "pqdist/errors.hpp"

namespace pqdist {

SturmSequence::SturmSequence(const IntPolynomial& p) {
  if (p.is_zero()) throw DomainError("Sturm sequence of zero polynomial");
  chain_.push_back(p.primitive());
  if (p.degree() == 0) return;
  chain_.push_back(chain_[0].derivative().primitive());
  while (chain_.back().degree() > 0) {
    const IntPolynomial& a = chain_[chain_.size() - 2];
    const IntPolynomial& b = chain_.back();
    IntPolynomial r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    // prem = lc(b)^delta * rem.
    int delta = a.degree() - b.degree() + 1;
    bool flip = !(b.leading() < 0 && delta % 2 == 1);
    Integer c = r.content();
    std::vector<Integer> v = r.coefficients();
    for (auto& x : v) {
      mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
      if (flip) x = -x;
    }
    chain_.emplace_back(std::move(v));
  }
}

int SturmSequence::variations_at(const Rational& x) const {
  int last = 0;
  int changes = 0;
  for (const auto& s : chain_) {
    int v = s.sign_at(x);
    if (v == 0) continue;
    if (last != 0 && v != last) ++changes;
    last = v;
  }
  return changes;
}

int SturmSequence::variations_at_pos_inf() const {
  int last = 0;
  int changes = 0;
  for (const auto& s : chain_) {
    int v = sgn(s.leading());
    if (last != 0 && v != last) ++changes;
    last = v;
  }
  return changes;
}

int SturmSequence::variations_at_neg_inf() const {
  int last = 0;
  int changes = 0;
  for (const auto& s : chain_) {
    int v = sgn(s.leading());
    if (s.degree() % 2 == 1) v = -v;
    if (last != 0 && v != last) ++changes;
    last = v;
  }
  return changes;
}

int SturmSequence::count(const Rational& lo, const Rational& hi) const {
  if (source().sign_at(lo) == 0 || source().sign_at(hi) == 0)
    throw EndpointIsRoot("Sturm count endpoint is a root");
  if (lo >= hi) return 0;
  return variations_at(lo) - variations_at(hi);
}

int SturmSequence::count_half_open(const Rational& lo, const Rational& hi) const {
  if (source().sign_at(lo) == 0) throw EndpointIsRoot("Sturm count endpoint is a root");
  if (lo >= hi) return 0;
  return variations_at(lo) - variations_at(hi);
}

int SturmSequence::count_real_roots() const {
  return variations_at_neg_inf() - variations_at_pos_inf();
}

int sturm_count(const IntPolynomial& p, const Rational& lo, const Rational& hi) {
  if (lo > hi) throw DomainError("sturm_count requires lo <= hi");
  return SturmSequence(p).count(lo, hi);
}

Rational cauchy_bound(const IntPolynomial& p) {
  if (p.degree() < 1) return Rational(1);
  Integer m = 0;
  for (int k = 0; k < p.degree(); ++k) {
    Integer a = abs(p.coeff(k));
    if (a > m) m = a;
  }
  Rational bound = Rational(m, abs(p.leading())) + 1;
  return Rational(power_of_two_at_least(bound) * 2);
}

}  // namespace pqdist
