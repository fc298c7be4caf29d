#include "posft/sturm.hpp"

#include <stdexcept>

namespace posft {

namespace {

// Content-normalize once coefficients grow past this many bits; dividing by
// the positive content never changes any sign in the chain.
constexpr size_t kNormalizeBitThreshold = 192;

size_t max_coeff_bits(const Polynomial& p) {
  size_t bits = 0;
  for (const auto& c : p.coeffs()) {
    bits = std::max(bits, mpz_sizeinbase(c.get_num().get_mpz_t(), 2));
    bits = std::max(bits, mpz_sizeinbase(c.get_den().get_mpz_t(), 2));
  }
  return bits;
}

Polynomial maybe_normalize(Polynomial p) {
  if (!p.is_zero() && max_coeff_bits(p) > kNormalizeBitThreshold) return p.primitive();
  return p;
}

}  // namespace

int Bound::compare(const Bound& a, const Bound& b) {
  auto rank = [](const Bound& x) { return x.kind == Kind::neg_inf ? -1 : (x.kind == Kind::pos_inf ? 1 : 0); };
  int ra = rank(a), rb = rank(b);
  if (ra != rb) return ra < rb ? -1 : 1;
  if (ra != 0) return 0;
  return cmp(a.value, b.value) < 0 ? -1 : (cmp(a.value, b.value) > 0 ? 1 : 0);
}

SturmSequence sturm_sequence(const Polynomial& p) {
  if (p.is_zero() || p.is_constant())
    throw std::domain_error("sturm_sequence: input must be nonconstant");
  SturmSequence out;
  out.source_degree = p.degree();
  Polynomial base = p;
  Polynomial g = poly_gcd(p, p.derivative());
  if (!g.is_constant()) {
    base = p.divmod(g).first;
    out.squarefree_reduced = true;
  }
  out.chain.push_back(base);
  out.chain.push_back(base.derivative());
  while (true) {
    const Polynomial& s1 = out.chain[out.chain.size() - 2];
    const Polynomial& s2 = out.chain[out.chain.size() - 1];
    if (s2.is_zero()) break;
    if (s2.is_constant()) break;
    Polynomial rem = s1.divmod(s2).second;
    if (rem.is_zero()) break;
    out.chain.push_back(maybe_normalize(-rem));
  }
  return out;
}

namespace {

int chain_sign_at(const Polynomial& p, const Bound& x) {
  if (p.is_zero()) return 0;
  switch (x.kind) {
    case Bound::Kind::finite: return sign_of(p(x.value));
    case Bound::Kind::pos_inf: return sign_of(p.leading());
    case Bound::Kind::neg_inf: {
      int s = sign_of(p.leading());
      return (p.degree() % 2 == 0) ? s : -s;
    }
  }
  return 0;
}

}  // namespace

int sign_variations(const SturmSequence& s, const Bound& x) {
  int variations = 0;
  int prev = 0;
  for (const Polynomial& p : s.chain) {
    int sg = chain_sign_at(p, x);
    if (sg == 0) continue;
    if (prev != 0 && sg != prev) ++variations;
    prev = sg;
  }
  return variations;
}

RootCount count_roots(const Polynomial& p, const Bound& lo, const Bound& hi) {
  if (p.is_zero()) throw std::domain_error("count_roots: zero polynomial");
  if (Bound::compare(lo, hi) >= 0) throw std::domain_error("count_roots: degenerate interval");
  RootCount out;
  out.lo = lo;
  out.hi = hi;
  if (lo.is_finite()) out.root_at_lo = sign_of(p(lo.value)) == 0;
  if (hi.is_finite()) out.root_at_hi = sign_of(p(hi.value)) == 0;
  if (p.is_constant()) return out;  // nonzero constant: no roots
  SturmSequence seq = sturm_sequence(p);
  int count = sign_variations(seq, lo) - sign_variations(seq, hi);
  out.count = count < 0 ? -count : count;
  return out;
}

RootCount count_positive_roots(const Polynomial& p) {
  return count_roots(p, Bound::at(Rational(0)), Bound::pos_infinity());
}

}  // namespace posft
