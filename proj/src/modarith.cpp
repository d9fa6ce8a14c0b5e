#include "sosmod/modarith.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

namespace sosmod {

namespace {

using u128 = unsigned __int128;

constexpr std::uint64_t kTrialDivisionLimit = 1'000'000'000'000ULL;

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>((static_cast<u128>(a) + b) % n);
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return a >= b ? a - b : n - (b - a);
}

// p^e, or 0 if it does not fit in 64 bits.
std::uint64_t checked_pow(std::uint64_t p, unsigned e) {
  u128 r = 1;
  for (unsigned i = 0; i < e; ++i) {
    r *= p;
    if (r > UINT64_MAX) return 0;
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t ipow(std::uint64_t p, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) r *= p;
  return r;
}

// Tonelli-Shanks: a square root of a unit quadratic residue a modulo an odd
// prime p.
std::uint64_t tonelli_shanks(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (p % 4 == 3) return pow_mod(a, (p + 1) / 4, p);

  std::uint64_t q = p - 1;
  unsigned s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  std::uint64_t z = 2;
  while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;

  std::uint64_t c = pow_mod(z, q, p);
  std::uint64_t x = pow_mod(a, (q + 1) / 2, p);
  std::uint64_t b = pow_mod(a, q, p);
  unsigned m = s;
  while (b != 1) {
    unsigned i = 0;
    std::uint64_t b2 = b;
    while (b2 != 1) {
      b2 = mul_mod(b2, b2, p);
      ++i;
    }
    std::uint64_t g = c;
    for (unsigned j = 0; j + i + 1 < m; ++j) g = mul_mod(g, g, p);
    x = mul_mod(x, g, p);
    c = mul_mod(g, g, p);
    b = mul_mod(b, c, p);
    m = i;
  }
  return x;
}

// Square roots of a unit beta modulo p^j (j >= 1), ascending.
std::vector<std::uint64_t> unit_roots(std::uint64_t beta, std::uint64_t p,
                                      unsigned j) {
  const std::uint64_t mod = ipow(p, j);
  beta %= mod;
  std::vector<std::uint64_t> roots;

  if (p == 2) {
    if (j == 1) return {1};
    if (j == 2) {
      if (beta % 4 == 1) roots = {1, 3};
      return roots;
    }
    if (beta % 8 != 1) return roots;
    // y^2 == beta (mod 2^i); if the next bit disagrees, y + 2^{i-1} fixes it.
    std::uint64_t y = 1;
    for (unsigned i = 3; i < j; ++i) {
      const std::uint64_t next = std::uint64_t{1} << (i + 1);
      if (mul_mod(y, y, next) != beta % next) y += std::uint64_t{1} << (i - 1);
    }
    const std::uint64_t half = mod / 2;
    roots = {y, mod - y, add_mod(half, y, mod), sub_mod(half, y, mod)};
  } else {
    if (legendre(beta, p) != 1) return roots;
    std::uint64_t y = tonelli_shanks(beta, p);
    std::uint64_t cur = p;
    for (unsigned i = 1; i < j; ++i) {
      const std::uint64_t next = cur * p;
      const std::uint64_t residual =
          sub_mod(mul_mod(y, y, next), beta % next, next);
      const std::uint64_t step =
          mul_mod(residual, inv_mod(add_mod(y, y, next), next), next);
      y = sub_mod(y, step, next);
      cur = next;
    }
    roots = {y, mod - y};
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::uint64_t unit_root_count(std::uint64_t beta, std::uint64_t p,
                              unsigned j) {
  if (p != 2) return legendre(beta, p) == 1 ? 2 : 0;
  if (j == 1) return 1;
  if (j == 2) return beta % 4 == 1 ? 2 : 0;
  return beta % 8 == 1 ? 4 : 0;
}

std::uint64_t pollard_brent(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
    const std::uint64_t block = 128;
    auto f = [&](std::uint64_t v) { return add_mod(mul_mod(v, v, n), c, n); };
    for (std::uint64_t r = 1; g == 1; r *= 2) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      for (std::uint64_t k = 0; k < r && g == 1; k += block) {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(block, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
    }
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void collect_factors(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  const std::uint64_t d = pollard_brent(n);
  collect_factors(d, out);
  collect_factors(n / d, out);
}

}  // namespace

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % n);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t n) {
  std::uint64_t result = 1 % n;
  base %= n;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, n);
    base = mul_mod(base, base, n);
    exp >>= 1;
  }
  return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t n) {
  __int128 old_r = a % n, r = n, old_s = 1, s = 0;
  while (r != 0) {
    const __int128 q = old_r / r;
    std::swap(old_r, r);
    r -= q * old_r;
    std::swap(old_s, s);
    s -= q * old_s;
  }
  if (old_r != 1) {
    throw DomainError("inv_mod: " + std::to_string(a) +
                      " is not invertible modulo " + std::to_string(n));
  }
  __int128 res = old_s % static_cast<__int128>(n);
  if (res < 0) res += n;
  return static_cast<std::uint64_t>(res);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::array<std::uint64_t, 13> kWitnesses = {
      2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  for (std::uint64_t w : kWitnesses) {
    if (n % w == 0) return n == w;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (std::uint64_t w : kWitnesses) {
    std::uint64_t x = pow_mod(w, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimePower::PrimePower(std::uint64_t p, unsigned k) : p_(p), k_(k) {
  if (!is_prime(p)) {
    throw DomainError("PrimePower: " + std::to_string(p) + " is not prime");
  }
  if (k == 0) throw DomainError("PrimePower: exponent must be >= 1");
  modulus_ = checked_pow(p, k);
  if (modulus_ == 0) {
    throw DomainError("PrimePower: " + std::to_string(p) + "^" +
                      std::to_string(k) + " does not fit in 64 bits");
  }
}

PadicDecomposition PadicDecomposition::nonzero(unsigned alpha,
                                               std::uint64_t beta) {
  PadicDecomposition d;
  d.zero_ = false;
  d.alpha_ = alpha;
  d.beta_ = beta;
  return d;
}

unsigned PadicDecomposition::alpha() const {
  if (zero_) throw InternalError("PadicDecomposition: alpha of zero state");
  return alpha_;
}

std::uint64_t PadicDecomposition::beta() const {
  if (zero_) throw InternalError("PadicDecomposition: beta of zero state");
  return beta_;
}

int legendre(std::uint64_t a, std::uint64_t p) {
  if (p == 2 || !is_prime(p)) {
    throw DomainError("legendre: " + std::to_string(p) +
                      " is not an odd prime");
  }
  a %= p;
  if (a == 0) return 0;
  return pow_mod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

int legendre(std::uint64_t a, const PrimePower& pp) {
  const std::uint64_t p = pp.prime();
  if (p == 2) throw DomainError("legendre: modulus must be an odd prime");
  a %= p;
  if (a == 0) return 0;
  return pow_mod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

PadicDecomposition padic_decompose(std::uint64_t t, const PrimePower& pp) {
  if (t >= pp.modulus()) {
    throw DomainError("padic_decompose: residue " + std::to_string(t) +
                      " out of range for modulus " +
                      std::to_string(pp.modulus()));
  }
  if (t == 0) return PadicDecomposition::zero();
  unsigned alpha = 0;
  while (t % pp.prime() == 0) {
    t /= pp.prime();
    ++alpha;
  }
  return PadicDecomposition::nonzero(alpha, t);
}

std::vector<std::uint64_t> sqrt_mod_pk(std::uint64_t t, const PrimePower& pp) {
  const std::uint64_t p = pp.prime();
  const unsigned k = pp.exponent();
  const std::uint64_t mod = pp.modulus();
  const PadicDecomposition d = padic_decompose(t, pp);

  std::vector<std::uint64_t> roots;
  if (d.is_zero()) {
    const std::uint64_t step = ipow(p, (k + 1) / 2);
    const std::uint64_t count = ipow(p, k / 2);
    roots.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) roots.push_back(i * step);
    return roots;
  }
  if (d.alpha() % 2 == 1) return roots;

  const unsigned half = d.alpha() / 2;
  const unsigned unit_exp = k - d.alpha();
  const std::uint64_t unit_mod = ipow(p, unit_exp);
  const std::uint64_t scale = ipow(p, half);
  for (std::uint64_t y : unit_roots(d.beta(), p, unit_exp)) {
    for (std::uint64_t i = 0; i < scale; ++i) {
      // p^half * (y + i p^unit_exp) < p^k
      roots.push_back(scale * (y + i * unit_mod) % mod);
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

Count count_sqrt_mod_pk(std::uint64_t t, const PrimePower& pp) {
  const std::uint64_t p = pp.prime();
  const unsigned k = pp.exponent();
  const PadicDecomposition d = padic_decompose(t, pp);
  Count scale;
  if (d.is_zero()) {
    mpz_ui_pow_ui(scale.get_mpz_t(), p, k / 2);
    return scale;
  }
  if (d.alpha() % 2 == 1) return 0;
  mpz_ui_pow_ui(scale.get_mpz_t(), p, d.alpha() / 2);
  return scale * unit_root_count(d.beta(), p, k - d.alpha());
}

Factorization factorize(std::uint64_t n, std::uint64_t bound) {
  if (n == 0) throw DomainError("factorize: n must be positive");
  if (n > bound) {
    throw DomainError("factorize: " + std::to_string(n) +
                      " exceeds the configured bound " +
                      std::to_string(bound));
  }
  std::vector<std::uint64_t> primes;
  std::uint64_t rest = n;
  const std::uint64_t trial_limit = n < kTrialDivisionLimit ? rest : 4096;
  for (std::uint64_t d = 2; d * d <= rest && d <= trial_limit;
       d += (d == 2 ? 1 : 2)) {
    while (rest % d == 0) {
      primes.push_back(d);
      rest /= d;
    }
  }
  if (rest > 1) {
    if (n < kTrialDivisionLimit) {
      primes.push_back(rest);
    } else {
      collect_factors(rest, primes);
    }
  }
  std::sort(primes.begin(), primes.end());

  Factorization f;
  f.n = n;
  for (std::size_t i = 0; i < primes.size();) {
    std::size_t j = i;
    while (j < primes.size() && primes[j] == primes[i]) ++j;
    f.factors.emplace_back(primes[i], static_cast<unsigned>(j - i));
    i = j;
  }
  return f;
}

std::vector<std::uint64_t> crt_split(std::uint64_t t, const Factorization& f) {
  std::vector<std::uint64_t> parts;
  parts.reserve(f.factors.size());
  for (const PrimePower& pp : f.factors) parts.push_back(t % pp.modulus());
  return parts;
}

std::uint64_t crt_combine(std::span<const std::uint64_t> residues,
                          const Factorization& f) {
  if (residues.size() != f.factors.size()) {
    throw DomainError("crt_combine: expected one residue per prime power");
  }
  std::uint64_t t = 0;
  for (std::size_t i = 0; i < residues.size(); ++i) {
    const std::uint64_t m = f.factors[i].modulus();
    const std::uint64_t cofactor = f.n / m;
    const std::uint64_t coeff = inv_mod(cofactor % m, m);
    const std::uint64_t term =
        mul_mod(cofactor, mul_mod(residues[i] % m, coeff, m), f.n);
    t = add_mod(t, term, f.n);
  }
  return f.n == 1 ? 0 : t;
}

Count totient(const Factorization& f) {
  Count phi = 1;
  for (const PrimePower& pp : f.factors) {
    Count part;
    mpz_ui_pow_ui(part.get_mpz_t(), pp.prime(), pp.exponent() - 1);
    phi *= part * (pp.prime() - 1);
  }
  return phi;
}

}  // namespace sosmod
