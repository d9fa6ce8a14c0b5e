#ifndef SOSMOD_FORMULAS_HPP
#define SOSMOD_FORMULAS_HPP

#include <array>
#include <cstdint>

#include "sosmod/modarith.hpp"

// Closed forms for N_m(t, p^k), the number of m-tuples over Z_{p^k} whose
// squares sum to t, and N*_m(t, 2^k), the same count over tuples of units.
//
// Every function validates its arguments and throws DomainError on a bad
// modulus, an out-of-range residue or m = 0. Branches are chosen from the
// p-adic decomposition of t and the Legendre symbol of its unit part only.

namespace sosmod {

/// N_m over Z_p for an odd prime p depends only on the quadratic character of
/// t, so three numbers describe the whole distribution.
struct GammaVector {
  Count at_zero;
  Count at_nonresidue;
  Count at_residue;

  friend bool operator==(const GammaVector&, const GammaVector&) = default;
};

/// 3x3 exact-integer matrix. The one-step recurrence for GammaVector has
/// half-integer entries; this type stores it doubled.
struct RecurrenceMatrix {
  std::array<std::array<Count, 3>, 3> entries;

  friend bool operator==(const RecurrenceMatrix&,
                         const RecurrenceMatrix&) = default;
};

/// sum_j C(m, residue + step * j) over all j >= 0 with residue + step*j <= m.
Count binomial_progression_sum(unsigned m, unsigned residue, unsigned step);

/// N*_m(t, 2^k).
Count nstar_m_2k(unsigned m, std::uint64_t t, unsigned k);

/// N_m(t, 2) for t in {0, 1}; always 2^{m-1}.
Count n_m_2(unsigned m, std::uint64_t t);

/// N_m(t, 4) = 2^m * sum_j C(m, t + 4j).
Count n_m_4(unsigned m, std::uint64_t t);

/// N_2(t, 2^k), k >= 2.
Count n_2_2k(std::uint64_t t, unsigned k);

/// N_3(t, 2^k), k >= 1. k in {1, 2} is answered by n_m_2 / n_m_4.
Count n_3_2k(std::uint64_t t, unsigned k);

/// N_m(t, p) for an odd prime p and any m >= 1.
Count n_m_p(unsigned m, std::uint64_t t, std::uint64_t p);

/// The GammaVector of N_m over Z_p from the closed forms.
GammaVector gamma_closed(unsigned m, std::uint64_t p);

/// The doubled one-step matrix: 2 * gamma_{m+1} = M * gamma_m.
RecurrenceMatrix doubled_recurrence_matrix(std::uint64_t p);

/// gamma_m = (M/2)^{m-1} gamma_1, evaluated as (M^{m-1} gamma_1) / 2^{m-1}
/// with the doubled matrix. Throws InternalError if the division is inexact.
GammaVector gamma_recurrence(unsigned m, std::uint64_t p);

/// N_2(t, p^k) for an odd prime p.
Count n_2_pk(std::uint64_t t, std::uint64_t p, unsigned k);

/// N_3(t, p^k) for an odd prime p.
Count n_3_pk(std::uint64_t t, std::uint64_t p, unsigned k);

/// N_1(t, p^k): the number of square roots of t modulo p^k.
Count n_1_pk(std::uint64_t t, const PrimePower& pp);

}  // namespace sosmod

#endif  // SOSMOD_FORMULAS_HPP
