#include "drcskit/finite_field.hpp"

#include <algorithm>
#include <string>

namespace drcskit {

namespace {

constexpr long kMaxFieldOrder = 1L << 16;

// Dense polynomial over Z_p, low degree first, no trailing-zero guarantee.
using Poly = std::vector<int>;

int degree(const Poly& a) {
  for (int d = static_cast<int>(a.size()) - 1; d >= 0; --d) {
    if (a[d] != 0) return d;
  }
  return -1;
}

// a mod f, where f is monic of degree n. In-place long division.
Poly poly_mod(Poly a, const Poly& f, int p) {
  const int n = degree(f);
  for (int d = degree(a); d >= n; d = degree(a)) {
    const int c = a[d];
    for (int i = 0; i <= n; ++i) {
      a[d - n + i] = ((a[d - n + i] - c * f[i]) % p + p) % p;
    }
  }
  a.resize(static_cast<size_t>(std::max(n, 1)), 0);
  return a;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& f, int p) {
  Poly prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
  }
  return poly_mod(std::move(prod), f, p);
}

bool is_one(const Poly& a) {
  if (a.empty() || a[0] != 1) return false;
  return std::all_of(a.begin() + 1, a.end(), [](int c) { return c == 0; });
}

// x^e mod f by square and multiply.
Poly x_pow_mod(long e, const Poly& f, int p, int n) {
  Poly result(static_cast<size_t>(n), 0);
  result[0] = 1;
  Poly base(static_cast<size_t>(n) + 1, 0);
  base[1] = 1;
  base = poly_mod(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) result = poly_mul_mod(result, base, f, p);
    base = poly_mul_mod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

std::vector<long> prime_factors(long v) {
  std::vector<long> out;
  for (long d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      while (v % d == 0) v /= d;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

// Multiplicative order of x mod f in GF(p)[x]/(f), assuming f irreducible.
// Returns 0 when the residue of x is 0 (f has zero constant term).
long order_of_x(const Poly& f, int p, int n, long q) {
  const Poly alpha = x_pow_mod(1, f, p, n);
  if (degree(alpha) < 0) return 0;
  long ord = q - 1;
  if (ord <= 1) return is_one(alpha) ? 1 : 0;
  for (long pf : prime_factors(ord)) {
    while (ord % pf == 0 && is_one(x_pow_mod(ord / pf, f, p, n))) {
      ord /= pf;
    }
  }
  return ord;
}

// Divisibility by any monic polynomial of degree 1..n/2 (brute force; the
// field order cap keeps this cheap).
bool is_irreducible(const Poly& f, int p, int n) {
  if (n == 1) return true;
  for (int d = 1; 2 * d <= n; ++d) {
    long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long idx = 0; idx < count; ++idx) {
      Poly g(static_cast<size_t>(d) + 1, 0);
      long rem = idx;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<int>(rem % p);
        rem /= p;
      }
      g[d] = 1;
      Poly r = poly_mod(f, g, p);
      if (degree(r) < 0) return false;
    }
  }
  return true;
}

std::string poly_str(const Poly& f) {
  std::string s = "[";
  for (size_t i = 0; i < f.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(f[i]);
  }
  return s + "]";
}

void check_shape(int p, int n, const Poly& poly) {
  if (n < 1) throw ParamError("BadPoly", "extension degree must be >= 1");
  if (poly.size() != static_cast<size_t>(n) + 1) {
    throw ParamError("BadPoly", "expected " + std::to_string(n + 1) +
                                    " coefficients, got " +
                                    std::to_string(poly.size()));
  }
  if (poly[static_cast<size_t>(n)] != 1) {
    throw ParamError("BadPoly", "polynomial must be monic");
  }
  for (int c : poly) {
    if (c < 0 || c >= p) {
      throw ParamError("BadPoly", "coefficient " + std::to_string(c) +
                                      " outside [0, " + std::to_string(p) +
                                      ")");
    }
  }
}

}  // namespace

bool is_prime(long v) {
  if (v < 2) return false;
  for (long d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

bool FieldElem::is_zero() const noexcept {
  return std::all_of(coeffs.begin(), coeffs.end(),
                     [](int c) { return c == 0; });
}

FieldCtx::FieldCtx(int p, int n, std::vector<int> poly)
    : p_(p), n_(n), poly_(std::move(poly)) {
  if (!is_prime(p_)) {
    throw ParamError("NotPrime", "p = " + std::to_string(p_));
  }
  check_shape(p_, n_, poly_);

  q_ = 1;
  for (int i = 0; i < n_; ++i) {
    q_ *= p_;
    if (q_ > kMaxFieldOrder) {
      throw ParamError("FieldTooLarge",
                       "p^n exceeds 2^16, outside supported range");
    }
  }

  if (!is_irreducible(poly_, p_, n_)) {
    throw ParamError("NotIrreducible", poly_str(poly_) + " factors over Z_" +
                                           std::to_string(p_));
  }
  const long ord = order_of_x(poly_, p_, n_, q_);
  if (ord != q_ - 1) {
    throw ParamError("NotPrimitive",
                     "alpha has order " + std::to_string(ord) + ", expected " +
                         std::to_string(q_ - 1));
  }

  // Tabulate alpha^j for j = 0 .. q-2 by repeated multiplication by x.
  alpha_powers_.assign(static_cast<size_t>(q_ - 1) * n_, 0);
  Poly cur(static_cast<size_t>(n_), 0);
  cur[0] = 1;
  Poly x(static_cast<size_t>(n_) + 1, 0);
  x[1] = 1;
  x = poly_mod(std::move(x), poly_, p_);
  for (long j = 0; j < q_ - 1; ++j) {
    std::copy(cur.begin(), cur.begin() + n_,
              alpha_powers_.begin() + j * n_);
    cur = poly_mul_mod(cur, x, poly_, p_);
  }
}

FieldElem FieldCtx::zero() const {
  return FieldElem{std::vector<int>(static_cast<size_t>(n_), 0)};
}

FieldElem FieldCtx::one() const {
  FieldElem e = zero();
  e.coeffs[0] = 1;
  return e;
}

FieldElem FieldCtx::alpha_pow(long j) const {
  if (j < 0) throw ParamError("BadExponent", "j must be >= 0");
  const long jj = (q_ - 1) == 0 ? 0 : j % (q_ - 1);
  FieldElem e = zero();
  std::copy(alpha_powers_.begin() + jj * n_,
            alpha_powers_.begin() + (jj + 1) * n_, e.coeffs.begin());
  return e;
}

void FieldCtx::check_element(const FieldElem& e) const {
  if (e.coeffs.size() != static_cast<size_t>(n_)) {
    throw ParamError("BadElement", "coefficient count " +
                                       std::to_string(e.coeffs.size()) +
                                       " does not match degree " +
                                       std::to_string(n_));
  }
  for (int c : e.coeffs) {
    if (c < 0 || c >= p_) {
      throw ParamError("BadElement",
                       "coefficient " + std::to_string(c) + " outside [0, " +
                           std::to_string(p_) + ")");
    }
  }
}

FieldElem FieldCtx::add(const FieldElem& a, const FieldElem& b) const {
  check_element(a);
  check_element(b);
  FieldElem out = zero();
  for (int i = 0; i < n_; ++i) {
    out.coeffs[i] = (a.coeffs[i] + b.coeffs[i]) % p_;
  }
  return out;
}

long FieldCtx::psi(const FieldElem& e) const {
  check_element(e);
  long value = 0;
  long weight = 1;
  for (int i = 0; i < n_; ++i) {
    value += e.coeffs[i] * weight;
    weight *= p_;
  }
  return value;
}

FieldProbe probe_field(int p, int n, const std::vector<int>& poly) {
  FieldProbe probe;
  probe.prime = is_prime(p);
  if (!probe.prime) return probe;
  try {
    check_shape(p, n, poly);
  } catch (const ParamError&) {
    return probe;
  }
  probe.monic = true;
  long q = 1;
  for (int i = 0; i < n; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) return probe;
  }
  probe.irreducible = is_irreducible(poly, p, n);
  if (!probe.irreducible) return probe;
  probe.order_of_alpha = order_of_x(poly, p, n, q);
  probe.primitive = probe.order_of_alpha == q - 1;
  return probe;
}

std::vector<int> smallest_primitive_poly(int p, int n) {
  if (!is_prime(p)) throw ParamError("NotPrime", "p = " + std::to_string(p));
  if (n < 1) throw ParamError("BadPoly", "degree must be >= 1");
  long count = 1;
  for (int i = 0; i < n; ++i) {
    count *= p;
    if (count > kMaxFieldOrder) {
      throw ParamError("FieldTooLarge",
                       "p^n exceeds 2^16, outside supported range");
    }
  }
  // Low-degree-first lexicographic scan: a_0 is the most significant key.
  for (long idx = 0; idx < count; ++idx) {
    std::vector<int> poly(static_cast<size_t>(n) + 1, 0);
    long rem = idx;
    for (int i = 0; i < n; ++i) {
      long base = 1;
      for (int k = 0; k < n - 1 - i; ++k) base *= p;
      poly[static_cast<size_t>(i)] = static_cast<int>(rem / base);
      rem %= base;
    }
    poly[static_cast<size_t>(n)] = 1;
    FieldProbe probe = probe_field(p, n, poly);
    if (probe.primitive) return poly;
  }
  throw ParamError("NoPrimitivePoly",
                   "no primitive polynomial found (unreachable for prime p)");
}

}  // namespace drcskit
