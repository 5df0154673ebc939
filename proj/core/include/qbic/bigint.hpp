#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "qbic/errors.hpp"

namespace qbic {

// All counts, zeta exponents and polynomial coefficients are exact integers;
// products like prod (q^(2i+1)+1) overflow 64 bits at modest parameters.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& x) { return x.str(); }

// Division that is required to be exact; a remainder indicates a transcription
// bug in a closed formula, never expected input.
inline BigInt exact_div(const BigInt& num, const BigInt& den, const char* what) {
  if (den == 0 || num % den != 0) {
    throw ExactDivisionError(std::string("inexact division in ") + what);
  }
  return num / den;
}

inline BigInt big_pow(const BigInt& base, unsigned long exp) {
  return boost::multiprecision::pow(base, exp);
}

inline BigInt binomial2(const BigInt& n) {  // C(n, 2), zero for n < 2
  if (n < 2) return 0;
  return n * (n - 1) / 2;
}

}  // namespace qbic
