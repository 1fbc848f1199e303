#pragma once

#include <vector>

#include "drcskit/errors.hpp"

namespace drcskit {

// Element of GF(p^n) stored as coefficients c0 + c1*x + ... + c_{n-1}*x^{n-1}
// over Z_p. Addition is coefficient-wise, so elements are kept in this basis
// rather than as discrete logs; a power table gives O(1) access to alpha^j.
struct FieldElem {
  std::vector<int> coeffs;

  bool operator==(const FieldElem&) const = default;
  bool is_zero() const noexcept;
};

// Immutable GF(p^n) context: a validated primitive polynomial together with
// the full table of powers of alpha (the residue class of x). Safe to share
// across threads; all operations are pure.
class FieldCtx {
 public:
  // Validates p prime, poly monic of degree n and irreducible over Z_p, and
  // alpha of multiplicative order exactly p^n - 1. Throws NotPrime /
  // NotIrreducible / NotPrimitive accordingly. The polynomial is always an
  // explicit input: published tables depend on the exact choice, which need
  // not be the lexicographically smallest one.
  FieldCtx(int p, int n, std::vector<int> poly);

  int p() const noexcept { return p_; }
  int n() const noexcept { return n_; }
  long order() const noexcept { return q_; }  // p^n
  const std::vector<int>& modulus() const noexcept { return poly_; }

  FieldElem zero() const;
  FieldElem one() const;
  // alpha^j by table lookup, j reduced mod p^n - 1.
  FieldElem alpha_pow(long j) const;
  FieldElem add(const FieldElem& a, const FieldElem& b) const;
  // psi(c0 + c1*alpha + ...) = c0 + c1*p + ... + c_{n-1}*p^{n-1}; a bijection
  // from GF(p^n) onto [0, p^n).
  long psi(const FieldElem& e) const;

 private:
  int p_ = 0;
  int n_ = 0;
  long q_ = 0;
  std::vector<int> poly_;
  std::vector<int> alpha_powers_;  // (q-1) rows of n coefficients

  void check_element(const FieldElem& e) const;
};

// The checks FieldCtx performs, reported instead of thrown. order_of_alpha is
// meaningful whenever the polynomial is irreducible.
struct FieldProbe {
  bool prime = false;
  bool monic = false;
  bool irreducible = false;
  bool primitive = false;
  long order_of_alpha = 0;
};
FieldProbe probe_field(int p, int n, const std::vector<int>& poly);

// Lexicographically smallest primitive polynomial of degree n over Z_p,
// coefficients compared low-degree-first. Convenience search only; presets
// that reproduce published tables pass their polynomial explicitly.
std::vector<int> smallest_primitive_poly(int p, int n);

bool is_prime(long v);

}  // namespace drcskit
