#include "sosmod/formulas.hpp"

#include <string>

namespace sosmod {

namespace {

Count power(std::uint64_t base, long exp) {
  if (exp < 0) {
    throw InternalError("negative exponent " + std::to_string(exp) +
                        " in closed form");
  }
  Count r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, static_cast<unsigned long>(exp));
  return r;
}

void require_m(unsigned m) {
  if (m == 0) throw DomainError("number of squares m must be >= 1");
}

void require_residue(std::uint64_t t, std::uint64_t modulus) {
  if (t >= modulus) {
    throw DomainError("residue " + std::to_string(t) +
                      " out of range for modulus " + std::to_string(modulus));
  }
}

PrimePower odd_prime_power(std::uint64_t p, unsigned k) {
  PrimePower pp(p, k);
  if (pp.is_two()) throw DomainError("expected an odd prime, got 2");
  return pp;
}

// N_m(t, p) by the quadratic character of t (0, -1 or +1).
Count lebesgue(unsigned m, std::uint64_t p, int character) {
  const bool p1 = p % 4 == 1;
  if (m % 2 == 1) {
    const long h = (m - 1) / 2;
    const Count base = power(p, 2 * h);
    if (character == 0) return base;
    // sign of the p^h term at a residue
    const int sign = p1 ? 1 : (h % 2 == 0 ? 1 : -1);
    return character == 1 ? Count(base + sign * power(p, h))
                          : Count(base - sign * power(p, h));
  }
  const long h = m / 2;
  if (p1) {
    if (character == 0) return power(p, 2 * h - 1) + power(p, h) - power(p, h - 1);
    return power(p, 2 * h - 1) - power(p, h - 1);
  }
  const int sign = h % 2 == 0 ? 1 : -1;  // (-1)^h
  if (character == 0) {
    return power(p, 2 * h - 1) + sign * power(p, h) - sign * power(p, h - 1);
  }
  return power(p, 2 * h - 1) - sign * power(p, h - 1);
}

using Matrix = std::array<std::array<Count, 3>, 3>;

Matrix multiply(const Matrix& a, const Matrix& b) {
  Matrix c;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Count s = 0;
      for (int l = 0; l < 3; ++l) s += a[i][l] * b[l][j];
      c[i][j] = s;
    }
  }
  return c;
}

}  // namespace

Count binomial_progression_sum(unsigned m, unsigned residue, unsigned step) {
  if (step == 0) throw DomainError("binomial_progression_sum: step must be >= 1");
  Count sum = 0;
  Count c;
  for (unsigned j = residue; j <= m; j += step) {
    mpz_bin_uiui(c.get_mpz_t(), m, j);
    sum += c;
  }
  return sum;
}

Count nstar_m_2k(unsigned m, std::uint64_t t, unsigned k) {
  require_m(m);
  const PrimePower pp(2, k);
  require_residue(t, pp.modulus());
  if (k == 1) return (t % 2 == m % 2) ? 1 : 0;
  if (k == 2) return (t % 4 == m % 4) ? power(2, m) : Count(0);
  if (t % 8 != m % 8) return 0;
  return power(2, 2L * m + (static_cast<long>(m) - 1) * (static_cast<long>(k) - 3));
}

Count n_m_2(unsigned m, std::uint64_t t) {
  require_m(m);
  require_residue(t, 2);
  return binomial_progression_sum(m, static_cast<unsigned>(t), 2);
}

Count n_m_4(unsigned m, std::uint64_t t) {
  require_m(m);
  require_residue(t, 4);
  return power(2, m) * binomial_progression_sum(m, static_cast<unsigned>(t), 4);
}

Count n_2_2k(std::uint64_t t, unsigned k) {
  if (k < 2) throw DomainError("n_2_2k: k must be >= 2");
  const PrimePower pp(2, k);
  const PadicDecomposition d = padic_decompose(t, pp);
  if (d.is_zero()) return power(2, k);
  if (d.alpha() + 1 < k) {
    return d.beta() % 4 == 1 ? power(2, k + 1) : Count(0);
  }
  return power(2, k);  // alpha = k - 1
}

Count n_3_2k(std::uint64_t t, unsigned k) {
  const PrimePower pp(2, k);
  if (k == 1) return n_m_2(3, t);
  if (k == 2) return n_m_4(3, t);

  const PadicDecomposition d = padic_decompose(t, pp);
  const long kk = k;
  if (d.is_zero()) {
    return k % 2 == 0 ? power(2, 3 * kk / 2) : power(2, (3 * kk + 1) / 2);
  }
  const long alpha = d.alpha();
  const std::uint64_t beta = d.beta();
  const bool alpha_even = alpha % 2 == 0;
  const long gap = kk - alpha;

  if (gap > 2) {
    if (!alpha_even) return 3 * power(2, 2 * kk - (alpha + 1) / 2);
    if (beta % 4 == 1) return 3 * power(2, 2 * kk - alpha / 2 - 1);
    if (beta % 8 == 3) return power(2, 2 * kk - alpha / 2);
    return 0;  // beta = 7 (mod 8)
  }
  if (gap == 2) {
    if (!alpha_even) return 3 * power(2, (3 * kk + 1) / 2);
    return beta % 4 == 1 ? Count(3 * power(2, 3 * kk / 2)) : power(2, 3 * kk / 2);
  }
  // gap == 1
  return alpha_even ? power(2, (3 * kk + 1) / 2) : Count(3 * power(2, 3 * kk / 2));
}

Count n_m_p(unsigned m, std::uint64_t t, std::uint64_t p) {
  require_m(m);
  const PrimePower pp = odd_prime_power(p, 1);
  const PadicDecomposition d = padic_decompose(t, pp);
  const int character = d.is_zero() ? 0 : legendre(d.beta(), pp);
  return lebesgue(m, p, character);
}

GammaVector gamma_closed(unsigned m, std::uint64_t p) {
  require_m(m);
  odd_prime_power(p, 1);
  return {lebesgue(m, p, 0), lebesgue(m, p, -1), lebesgue(m, p, 1)};
}

RecurrenceMatrix doubled_recurrence_matrix(std::uint64_t p) {
  odd_prime_power(p, 1);
  const Count q = p;
  RecurrenceMatrix r;
  if (p % 4 == 1) {
    r.entries = {{{2, 0, 2 * (q - 1)},
                  {0, q + 1, q - 1},
                  {4, q - 1, q - 3}}};
  } else {
    r.entries = {{{2, 2 * (q - 1), 0},
                  {0, q - 1, q + 1},
                  {4, q - 3, q - 1}}};
  }
  return r;
}

GammaVector gamma_recurrence(unsigned m, std::uint64_t p) {
  require_m(m);
  Matrix base = doubled_recurrence_matrix(p).entries;
  Matrix acc = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  for (unsigned e = m - 1; e; e >>= 1) {
    if (e & 1) acc = multiply(acc, base);
    base = multiply(base, base);
  }

  // gamma_1 = (1, 0, 2)
  std::array<Count, 3> v;
  for (int i = 0; i < 3; ++i) v[i] = acc[i][0] + 2 * acc[i][2];
  for (Count& c : v) {
    if (!mpz_divisible_2exp_p(c.get_mpz_t(), m - 1)) {
      throw InternalError("gamma_recurrence: inexact division by 2^" +
                          std::to_string(m - 1));
    }
    mpz_fdiv_q_2exp(c.get_mpz_t(), c.get_mpz_t(), m - 1);
  }
  return {v[0], v[1], v[2]};
}

Count n_2_pk(std::uint64_t t, std::uint64_t p, unsigned k) {
  const PrimePower pp = odd_prime_power(p, k);
  const PadicDecomposition d = padic_decompose(t, pp);
  const long kk = k;
  if (p % 4 == 1) {
    if (d.is_zero()) return power(p, kk - 1) * (Count(p) * (kk + 1) - kk);
    return Count(d.alpha() + 1) * (p - 1) * power(p, kk - 1);
  }
  if (d.is_zero()) return power(p, 2 * (kk / 2));
  return d.alpha() % 2 == 0 ? Count((p + 1) * power(p, kk - 1)) : Count(0);
}

Count n_3_pk(std::uint64_t t, std::uint64_t p, unsigned k) {
  const PrimePower pp = odd_prime_power(p, k);
  const PadicDecomposition d = padic_decompose(t, pp);
  const long kk = k;
  if (d.is_zero()) {
    const long ceil_3k_2 = (3 * kk + 1) / 2;
    return power(p, 2 * kk) + power(p, 2 * kk - 1) - power(p, ceil_3k_2 - 1);
  }
  const long alpha = d.alpha();
  if (alpha % 2 == 1) {
    return (power(p, 2 * kk - 1) - power(p, 2 * kk - (alpha + 3) / 2)) * (p + 1);
  }
  // For p = 1 (mod 4) a residue unit part gives the full count; for
  // p = 3 (mod 4) the roles of residue and nonresidue are swapped.
  const int character = legendre(d.beta(), pp);
  const bool full = (p % 4 == 1) == (character == 1);
  const Count top = power(p, 2 * kk - 1) * (p + 1);
  if (full) return top;
  return top - 2 * power(p, 2 * kk - 1 - alpha / 2);
}

Count n_1_pk(std::uint64_t t, const PrimePower& pp) {
  if (pp.is_two()) return count_sqrt_mod_pk(t, pp);
  const PadicDecomposition d = padic_decompose(t, pp);
  if (d.is_zero()) return power(pp.prime(), pp.exponent() / 2);
  if (d.alpha() % 2 == 0 && legendre(d.beta(), pp) == 1) {
    return 2 * power(pp.prime(), d.alpha() / 2);
  }
  return 0;
}

}  // namespace sosmod
