#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "qbic/errors.hpp"

namespace qbic {

// Canonical element index in [0, p^e). The index is the little-endian base-p
// encoding of the element's coefficient vector in the residue ring
// GF(p)[x]/(modulus), so serialization is bit-exact across runs and languages.
using Fe = std::uint32_t;

/**
 * A finite field GF(p^e) with table-driven arithmetic.
 *
 * Multiplication and inversion run on exp/log tables for a fixed generator of
 * the multiplicative group. Addition uses a full table for small fields and
 * Zech logarithms (z(k) = log(1 + g^k)) above the table threshold, so every
 * operation is O(1) after construction.
 *
 * Descriptors are immutable after construction and safe for concurrent reads.
 */
class Field {
 public:
  static constexpr std::uint64_t kMaxOrder = 1u << 20;

  // Uses the lexicographically smallest monic irreducible modulus of degree e
  // (smallest little-endian coefficient value), chosen deterministically.
  Field(unsigned p, unsigned e);

  // Explicit monic modulus of degree e, little-endian coefficients c_0..c_e,
  // c_e = 1. Throws ReducibleModulusError if it is not irreducible over GF(p).
  Field(unsigned p, unsigned e, std::vector<unsigned> modulus);

  unsigned characteristic() const { return p_; }
  unsigned degree() const { return e_; }
  std::uint64_t order() const { return order_; }
  const std::vector<unsigned>& modulus() const { return modulus_; }

  static Fe zero() { return 0; }
  Fe one() const { return 1; }
  Fe generator() const { return exp_[1]; }

  Fe add(Fe a, Fe b) const {
    if (add_table_.empty()) return add_zech(a, b);
    return add_table_[static_cast<std::size_t>(a) * order_ + b];
  }

  Fe neg(Fe a) const { return p_ == 2 ? a : mul(a, minus_one_); }
  Fe sub(Fe a, Fe b) const { return add(a, neg(b)); }

  Fe mul(Fe a, Fe b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];  // exp_ is doubled so no reduction needed
  }

  Fe inv(Fe a) const;
  Fe div(Fe a, Fe b) const { return mul(a, inv(b)); }

  Fe pow(Fe a, std::uint64_t n) const;

  // x -> x^s for s a power of p dividing the field order appropriately; the
  // q-power Frobenius automorphisms. Throws CharacteristicMismatchError when
  // s is not a power of the characteristic.
  Fe frobenius(Fe a, std::uint64_t s) const;

  // Unique y with y^s = x, for s a power of p (Frobenius is bijective).
  Fe frobenius_root(Fe a, std::uint64_t s) const;

  std::vector<unsigned> digits(Fe a) const;
  Fe from_digits(const std::vector<unsigned>& d) const;

  // Multiplicative order of a nonzero element.
  std::uint64_t element_order(Fe a) const;

  bool operator==(const Field& o) const {
    return p_ == o.p_ && e_ == o.e_ && modulus_ == o.modulus_;
  }

 private:
  void build_tables();
  Fe add_zech(Fe a, Fe b) const;
  Fe mul_slow(Fe a, Fe b) const;  // polynomial arithmetic, used during setup

  unsigned p_ = 0;
  unsigned e_ = 0;
  std::uint64_t order_ = 0;
  std::vector<unsigned> modulus_;

  std::vector<Fe> exp_;        // size 2*(order-1): exp_[i] = g^i
  std::vector<std::uint32_t> log_;  // log_[a] for a != 0
  std::vector<std::uint32_t> zech_; // zech_[k] = log(1 + g^k), kZechZero if 0
  std::vector<Fe> add_table_;  // full table when order <= kAddTableLimit
  Fe minus_one_ = 0;

  static constexpr std::uint32_t kZechZero = 0xffffffffu;
  static constexpr std::uint64_t kAddTableLimit = 2048;
};

/**
 * A ring embedding GF(p^a) -> GF(p^b) for a | b, realized as a lookup table.
 * The image of the source generator-polynomial root is chosen as the root of
 * the source modulus with the smallest element index in the destination, so
 * the embedding is deterministic. Embeddings commute with Frobenius.
 */
class Embedding {
 public:
  Embedding(const Field& src, const Field& dst);

  Fe operator()(Fe a) const { return table_[a]; }
  const Field& source() const { return *src_; }
  const Field& target() const { return *dst_; }

 private:
  const Field* src_;
  const Field* dst_;
  std::vector<Fe> table_;
};

// Smallest-index root embedding; throws NoEmbeddingError when the
// characteristics differ or the source degree does not divide the target's.
Embedding embed(const Field& src, const Field& dst);

bool is_prime(std::uint64_t n);

// Monic irreducibility test over GF(p) for little-endian coefficients.
bool is_irreducible_poly(unsigned p, const std::vector<unsigned>& poly);

}  // namespace qbic
