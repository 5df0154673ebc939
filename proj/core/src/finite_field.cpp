#include "qbic/finite_field.hpp"

#include <algorithm>
#include <numeric>

namespace qbic {

namespace {

// --- polynomial helpers over GF(p), little-endian coefficient vectors ---

using Poly = std::vector<unsigned>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly pmulmod(const Poly& a, const Poly& b, const Poly& mod, unsigned p) {
  // products of digits can reach p^2 ~ 2^40, so accumulate in 64 bits
  Poly r(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<unsigned>(
          (r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
  }
  // reduce by the monic modulus
  const std::size_t deg = mod.size() - 1;
  for (std::size_t i = r.size(); i-- > deg;) {
    if (r[i] == 0) continue;
    std::uint64_t c = r[i];
    for (std::size_t j = 0; j <= deg; ++j) {
      r[i - deg + j] = static_cast<unsigned>(
          (r[i - deg + j] + c * (p - mod[j] % p)) % p);
    }
  }
  r.resize(deg);
  return r;
}

Poly ppowmod(Poly base, std::uint64_t n, const Poly& mod, unsigned p) {
  Poly result{1};
  result.resize(mod.size() - 1, 0);
  base.resize(mod.size() - 1, 0);
  while (n > 0) {
    if (n & 1) result = pmulmod(result, base, mod, p);
    base = pmulmod(base, base, mod, p);
    n >>= 1;
  }
  return result;
}

Poly pgcd(Poly a, Poly b, unsigned p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b with b made monic on the fly
    std::uint64_t lead = b.back();
    std::uint64_t inv_lead = 1;
    for (std::uint64_t x = 1; x < p; ++x) {
      if (x * lead % p == 1) { inv_lead = x; break; }
    }
    Poly r = a;
    while (r.size() >= b.size()) {
      std::uint64_t c = r.back() * inv_lead % p;
      std::size_t shift = r.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j) {
        r[shift + j] = static_cast<unsigned>(
            (r[shift + j] + c * (p - b[j] % p)) % p);
      }
      trim(r);
      if (r.empty()) break;
    }
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> fs;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible_poly(unsigned p, const std::vector<unsigned>& poly) {
  Poly f = poly;
  trim(f);
  if (f.size() < 2 || f.back() != 1) return false;
  const std::size_t e = f.size() - 1;
  if (e == 1) return true;
  // f irreducible over GF(p) of degree e iff x^(p^e) = x (mod f) and
  // gcd(x^(p^(e/r)) - x, f) = 1 for every prime r | e.
  Poly x{0, 1};
  auto xq = [&](std::uint64_t k) {  // x^(p^k) mod f
    Poly r = x;
    r.resize(e, 0);
    for (std::uint64_t i = 0; i < k; ++i) r = ppowmod(r, p, f, p);
    return r;
  };
  Poly top = xq(e);
  Poly xe = x;
  xe.resize(e, 0);
  if (top != xe) return false;
  for (std::uint64_t r : prime_factors(e)) {
    Poly g = xq(e / r);
    // g - x
    g[1] = (g[1] + p - 1) % p;
    Poly d = pgcd(g, f, p);
    trim(d);
    if (d.size() > 1) return false;
  }
  return true;
}

Field::Field(unsigned p, unsigned e) : p_(p), e_(e) {
  if (!is_prime(p)) throw NotPrimeError("field characteristic must be prime");
  if (e < 1) throw ParameterOutOfRangeError("extension degree must be >= 1");
  // smallest little-endian coefficient value whose monic completion is
  // irreducible; degree 1 always lands on x itself
  std::uint64_t ord = 1;
  for (unsigned i = 0; i < e; ++i) {
    ord *= p;
    if (ord > kMaxOrder) throw FieldTooLargeError("field order exceeds cap");
  }
  for (std::uint64_t v = 0; v < ord; ++v) {
    std::vector<unsigned> mod(e + 1, 0);
    std::uint64_t t = v;
    for (unsigned i = 0; i < e; ++i) {
      mod[i] = static_cast<unsigned>(t % p);
      t /= p;
    }
    mod[e] = 1;
    if (is_irreducible_poly(p, mod)) {
      modulus_ = std::move(mod);
      break;
    }
  }
  order_ = ord;
  build_tables();
}

Field::Field(unsigned p, unsigned e, std::vector<unsigned> modulus)
    : p_(p), e_(e), modulus_(std::move(modulus)) {
  if (!is_prime(p)) throw NotPrimeError("field characteristic must be prime");
  if (e < 1) throw ParameterOutOfRangeError("extension degree must be >= 1");
  std::uint64_t ord = 1;
  for (unsigned i = 0; i < e; ++i) {
    ord *= p;
    if (ord > kMaxOrder) throw FieldTooLargeError("field order exceeds cap");
  }
  order_ = ord;
  for (auto& c : modulus_) c %= p;
  if (modulus_.size() != e + 1 || modulus_.back() != 1) {
    throw ReducibleModulusError("modulus must be monic of degree e");
  }
  if (!is_irreducible_poly(p, modulus_)) {
    throw ReducibleModulusError("modulus is reducible over GF(p)");
  }
  build_tables();
}

std::vector<unsigned> Field::digits(Fe a) const {
  std::vector<unsigned> d(e_);
  for (unsigned i = 0; i < e_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

Fe Field::from_digits(const std::vector<unsigned>& d) const {
  Fe a = 0;
  for (std::size_t i = std::min<std::size_t>(d.size(), e_); i-- > 0;) {
    a = static_cast<Fe>(a * p_ + d[i] % p_);
  }
  return a;
}

Fe Field::mul_slow(Fe a, Fe b) const {
  Poly r = pmulmod(digits(a), digits(b), modulus_, p_);
  std::vector<unsigned> d(r.begin(), r.end());
  return from_digits(d);
}

void Field::build_tables() {
  const std::uint64_t n = order_ - 1;
  // digitwise addition, needed to seed the fast tables
  auto add_digits = [&](Fe a, Fe b) {
    Fe r = 0;
    std::uint64_t mult = 1;
    for (unsigned i = 0; i < e_; ++i) {
      r += static_cast<Fe>(mult * ((a % p_ + b % p_) % p_));
      a /= p_;
      b /= p_;
      mult *= p_;
    }
    return r;
  };

  // locate a generator: element of multiplicative order n
  auto factors = prime_factors(n);
  Fe g = 0;
  for (Fe cand = 1; cand < order_; ++cand) {
    if (cand == 0) continue;
    bool ok = true;
    for (auto f : factors) {
      // cand^(n/f) == 1 would rule it out; compute with square-and-multiply
      std::uint64_t m = n / f;
      Fe acc = 1, base = cand;
      while (m > 0) {
        if (m & 1) acc = mul_slow(acc, base);
        base = mul_slow(base, base);
        m >>= 1;
      }
      if (acc == 1) { ok = false; break; }
    }
    if (ok) { g = cand; break; }
  }

  exp_.assign(2 * n, 0);
  log_.assign(order_, 0);
  Fe cur = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    exp_[i] = cur;
    exp_[i + n] = cur;
    log_[cur] = static_cast<std::uint32_t>(i);
    cur = mul_slow(cur, g);
  }

  minus_one_ = (p_ == 2) ? 1 : from_digits({p_ - 1});

  if (order_ <= kAddTableLimit) {
    add_table_.assign(order_ * order_, 0);
    for (std::uint64_t a = 0; a < order_; ++a) {
      for (std::uint64_t b = 0; b <= a; ++b) {
        Fe s = add_digits(static_cast<Fe>(a), static_cast<Fe>(b));
        add_table_[a * order_ + b] = s;
        add_table_[b * order_ + a] = s;
      }
    }
  } else {
    zech_.assign(n, kZechZero);
    for (std::uint64_t k = 0; k < n; ++k) {
      Fe s = add_digits(1, exp_[k]);
      zech_[k] = (s == 0) ? kZechZero : log_[s];
    }
  }
}

Fe Field::add_zech(Fe a, Fe b) const {
  if (a == 0) return b;
  if (b == 0) return a;
  const std::uint64_t n = order_ - 1;
  std::uint32_t la = log_[a], lb = log_[b];
  std::uint32_t d = (lb >= la) ? lb - la : static_cast<std::uint32_t>(n) - (la - lb);
  std::uint32_t z = zech_[d];
  if (z == kZechZero) return 0;
  return exp_[la + z];
}

Fe Field::inv(Fe a) const {
  if (a == 0) throw Error("division by zero in finite field");
  const std::uint64_t n = order_ - 1;
  return exp_[(n - log_[a]) % n];
}

Fe Field::pow(Fe a, std::uint64_t n) const {
  if (a == 0) return n == 0 ? 1 : 0;
  const std::uint64_t m = order_ - 1;
  return exp_[static_cast<std::uint64_t>(log_[a]) * (n % m) % m];
}

Fe Field::frobenius(Fe a, std::uint64_t s) const {
  std::uint64_t t = s;
  while (t > 1) {
    if (t % p_ != 0) {
      throw CharacteristicMismatchError(
          "frobenius exponent is not a power of the characteristic");
    }
    t /= p_;
  }
  if (t != 1) {
    throw CharacteristicMismatchError("frobenius exponent must be positive");
  }
  return pow(a, s);
}

Fe Field::frobenius_root(Fe a, std::uint64_t s) const {
  std::uint64_t t = s;
  while (t > 1) {
    if (t % p_ != 0) {
      throw CharacteristicMismatchError(
          "frobenius exponent is not a power of the characteristic");
    }
    t /= p_;
  }
  // x -> x^s is bijective with inverse x -> x^(order/s) on exponents:
  // (x^(order/s * s)) = x^order = x for the multiplicative group
  if (a == 0) return 0;
  const std::uint64_t m = order_ - 1;
  std::uint64_t sinv = (order_ / s) % m;
  return pow(a, sinv == 0 ? 1 : sinv);
}

std::uint64_t Field::element_order(Fe a) const {
  if (a == 0) throw Error("zero has no multiplicative order");
  const std::uint64_t n = order_ - 1;
  std::uint64_t d = std::gcd<std::uint64_t>(log_[a], n);
  return n / d;
}

Embedding::Embedding(const Field& src, const Field& dst)
    : src_(&src), dst_(&dst) {
  if (src.characteristic() != dst.characteristic()) {
    throw NoEmbeddingError("characteristics differ");
  }
  if (dst.degree() % src.degree() != 0) {
    throw NoEmbeddingError("source degree does not divide target degree");
  }
  // find the smallest-index root of the source modulus inside dst
  Fe root = 0;
  bool found = false;
  const auto& mod = src.modulus();
  for (std::uint64_t cand = 0; cand < dst.order(); ++cand) {
    Fe acc = 0;
    Fe x = static_cast<Fe>(cand);
    // Horner, big-endian pass over the little-endian coefficients
    for (std::size_t i = mod.size(); i-- > 0;) {
      acc = dst.mul(acc, x);
      if (mod[i] != 0) acc = dst.add(acc, dst.from_digits({mod[i]}));
    }
    if (acc == 0) {
      root = x;
      found = true;
      break;
    }
  }
  if (!found) throw NoEmbeddingError("source modulus has no root in target");
  table_.assign(src.order(), 0);
  for (std::uint64_t a = 0; a < src.order(); ++a) {
    auto d = src.digits(static_cast<Fe>(a));
    Fe acc = 0;
    for (std::size_t i = d.size(); i-- > 0;) {
      acc = dst.mul(acc, root);
      if (d[i] != 0) acc = dst.add(acc, dst.from_digits({d[i]}));
    }
    table_[a] = acc;
  }
}

Embedding embed(const Field& src, const Field& dst) { return Embedding(src, dst); }

}  // namespace qbic
