#ifndef SOSMOD_MODARITH_HPP
#define SOSMOD_MODARITH_HPP

#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "sosmod/errors.hpp"

namespace sosmod {

/// Exact nonnegative count. Representation counts reach n^m, so every count
/// in the library is arbitrary precision.
using Count = mpz_class;

/// Largest modulus accepted by factorize() unless the caller asks otherwise.
inline constexpr std::uint64_t kDefaultFactorBound = std::uint64_t{1} << 63;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t n);

/// Inverse of a modulo n; throws DomainError when gcd(a, n) != 1.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t n);

/// Deterministic Miller-Rabin; the witness set (first 13 primes) is exact for
/// every 64-bit input.
bool is_prime(std::uint64_t n);

/// A prime p together with an exponent k >= 1 such that p^k fits in 64 bits.
/// Construction validates both, so every PrimePower in the program is sound.
class PrimePower {
 public:
  PrimePower(std::uint64_t p, unsigned k);

  std::uint64_t prime() const { return p_; }
  unsigned exponent() const { return k_; }
  /// p^k
  std::uint64_t modulus() const { return modulus_; }
  bool is_two() const { return p_ == 2; }

  friend bool operator==(const PrimePower&, const PrimePower&) = default;

 private:
  std::uint64_t p_;
  unsigned k_;
  std::uint64_t modulus_;
};

/// n = prod p_i^{k_i} with strictly increasing primes. n = 1 has no factors.
struct Factorization {
  std::uint64_t n = 1;
  std::vector<PrimePower> factors;
};

/// t = p^alpha * beta with p not dividing beta, or the distinguished zero
/// state for t == 0 (mod p^k). Zero is never encoded as alpha = k.
class PadicDecomposition {
 public:
  static PadicDecomposition zero() { return PadicDecomposition{}; }
  static PadicDecomposition nonzero(unsigned alpha, std::uint64_t beta);

  bool is_zero() const { return zero_; }
  /// Valuation; throws InternalError on the zero state.
  unsigned alpha() const;
  /// Unit part, already reduced mod p^{k-alpha}; throws InternalError on the
  /// zero state.
  std::uint64_t beta() const;

  friend bool operator==(const PadicDecomposition&,
                         const PadicDecomposition&) = default;

 private:
  PadicDecomposition() = default;
  bool zero_ = true;
  unsigned alpha_ = 0;
  std::uint64_t beta_ = 0;
};

/// Legendre symbol (a/p) via Euler's criterion. p must be an odd prime.
int legendre(std::uint64_t a, std::uint64_t p);
/// Same, for a prime already validated by PrimePower (p must be odd).
int legendre(std::uint64_t a, const PrimePower& pp);

/// Splits t in [0, p^k) into valuation and unit part.
PadicDecomposition padic_decompose(std::uint64_t t, const PrimePower& pp);

/// Every x in Z_{p^k} with x^2 == t, ascending. The set can be as large as
/// p^{floor(k/2)} (t = 0), so callers that only need its size should use
/// count_sqrt_mod_pk.
std::vector<std::uint64_t> sqrt_mod_pk(std::uint64_t t, const PrimePower& pp);

/// |sqrt_mod_pk(t, pp)| without materializing the roots.
Count count_sqrt_mod_pk(std::uint64_t t, const PrimePower& pp);

/// Complete factorization of 1 <= n <= bound. Trial division below 10^12,
/// Pollard-rho (Brent) above.
Factorization factorize(std::uint64_t n,
                        std::uint64_t bound = kDefaultFactorBound);

/// t mod p_i^{k_i} for each factor, in factor order.
std::vector<std::uint64_t> crt_split(std::uint64_t t, const Factorization& f);

/// Inverse of crt_split: the unique t in [0, n) with the given components.
std::uint64_t crt_combine(std::span<const std::uint64_t> residues,
                          const Factorization& f);

/// Euler's totient from a factorization.
Count totient(const Factorization& f);

}  // namespace sosmod

#endif  // SOSMOD_MODARITH_HPP
