#include "qbic/multipoly.hpp"

#include <algorithm>

#include "qbic/combinatorics.hpp"

namespace qbic {

MultiPoly MultiPoly::constant(unsigned nvars, const BigInt& c) {
  MultiPoly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(unsigned nvars, unsigned index) {
  MultiPoly p(nvars);
  Exponents e(nvars, 0);
  e[index] = 1;
  p.add_term(e, 1);
  return p;
}

MultiPoly MultiPoly::linear(unsigned nvars, unsigned i, const BigInt& ci,
                            unsigned j, const BigInt& cj) {
  MultiPoly p(nvars);
  Exponents e(nvars, 0);
  e[i] = 1;
  p.add_term(e, ci);
  Exponents f(nvars, 0);
  f[j] = 1;
  p.add_term(f, cj);
  return p;
}

void MultiPoly::add_term(const Exponents& e, const BigInt& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::add(const MultiPoly& other) const {
  MultiPoly r = *this;
  for (const auto& [e, c] : other.terms_) r.add_term(e, c);
  return r;
}

MultiPoly MultiPoly::mul(const MultiPoly& other, std::uint64_t term_budget) const {
  MultiPoly r(nvars_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : other.terms_) {
      Exponents e(nvars_);
      for (unsigned i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
      if (term_budget != 0 && r.terms_.size() > term_budget) {
        throw BudgetExceededError("polynomial term budget exceeded");
      }
    }
  }
  return r;
}

MultiPoly MultiPoly::negated() const {
  MultiPoly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MultiPoly MultiPoly::permute_variables(const std::vector<unsigned>& perm) const {
  MultiPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponents f(nvars_, 0);
    for (unsigned i = 0; i < nvars_; ++i) f[perm[i]] = e[i];
    r.add_term(f, c);
  }
  return r;
}

BigInt MultiPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

unsigned MultiPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) {
    unsigned t = 0;
    for (auto x : e) t += x;
    d = std::max(d, t);
  }
  return d;
}

MultiPoly schubert_factor_product(unsigned r, unsigned q, std::uint64_t term_budget) {
  const unsigned nv = r + 1;
  MultiPoly acc = MultiPoly::constant(nv, 1);
  for (unsigned i = 0; i <= r; ++i) {
    for (unsigned j = 0; j <= r; ++j) {
      // (x_i + q x_j); the diagonal factor is (1+q) x_i
      if (i == j) {
        MultiPoly d(nv);
        MultiPoly::Exponents e(nv, 0);
        e[i] = 1;
        d.add_term(e, BigInt(q) + 1);
        acc = acc.mul(d, term_budget);
      } else {
        acc = acc.mul(MultiPoly::linear(nv, i, 1, j, BigInt(q)), term_budget);
      }
    }
  }
  for (unsigned i = 0; i <= r; ++i) {
    for (unsigned j = i + 1; j <= r; ++j) {
      acc = acc.mul(MultiPoly::linear(nv, i, 1, j, -1), term_budget);
    }
  }
  return acc;
}

BigInt fano_degree_coefficient(unsigned n, unsigned r, unsigned q,
                               std::uint64_t term_budget) {
  if (!(2 * r < n)) {
    throw ParameterOutOfRangeError("fano_degree_coefficient needs r < n/2");
  }
  const unsigned nv = r + 1;
  const unsigned power = (r + 1) * (n - 2 * r - 1);
  // target monomial x_0^n x_1^(n-1) ... x_r^(n-r); the printed double-n in
  // the source formula does not balance total degrees, the strictly
  // decreasing exponent sequence does (cross-checked against three closed
  // forms).
  std::vector<unsigned> target(nv);
  for (unsigned i = 0; i <= r; ++i) target[i] = n - i;

  MultiPoly small = schubert_factor_product(r, q, term_budget);
  BigInt mfact = factorial(power);
  BigInt acc = 0;
  for (const auto& [e, c] : small.terms()) {
    BigInt den = 1;
    bool ok = true;
    unsigned residual = 0;
    for (unsigned i = 0; i < nv; ++i) {
      if (e[i] > target[i]) { ok = false; break; }
      den *= factorial(target[i] - e[i]);
      residual += target[i] - e[i];
    }
    if (!ok || residual != power) continue;
    acc += c * exact_div(mfact, den, "multinomial coefficient");
  }
  return acc;
}

DegreeReport degree_crosscheck(unsigned n, unsigned r, unsigned q) {
  DegreeReport rep;
  rep.n = n;
  rep.r = r;
  rep.q = q;
  if (r == 1 && n >= 3) {
    rep.closed_forms.emplace_back("deg_f1", deg_f1(n, q));
  }
  if (n == 2 * r + 1) {
    rep.closed_forms.emplace_back("plucker_odd", plucker_degree(q, r, Parity::odd));
  }
  if (n == 2 * r + 2) {
    rep.closed_forms.emplace_back("plucker_even", plucker_degree(q, r, Parity::even));
  }
  if (rep.closed_forms.empty()) {
    throw ParameterOutOfRangeError("no closed degree formula applies to (n, r)");
  }
  rep.coefficient = fano_degree_coefficient(n, r, q);
  rep.match = std::all_of(
      rep.closed_forms.begin(), rep.closed_forms.end(),
      [&](const auto& kv) { return kv.second == rep.coefficient; });
  return rep;
}

}  // namespace qbic
