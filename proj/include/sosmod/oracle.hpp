#ifndef SOSMOD_ORACLE_HPP
#define SOSMOD_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "sosmod/modarith.hpp"

// Brute-force ground truth for N_m(t, n) and N*_m(t, n). Nothing here uses a
// closed form; the counts come from the fiber sizes of x -> x^2 and their
// cyclic self-convolution.

namespace sosmod {

/// The oracle refuses moduli above this bound with CapacityError.
inline constexpr std::uint64_t kMaxOracleModulus = std::uint64_t{1} << 20;

/// Literal enumeration is limited to n <= 64 and m <= 4.
inline constexpr std::uint64_t kMaxEnumerationModulus = 64;
inline constexpr unsigned kMaxEnumerationSquares = 4;

/// counts[s] = number of representations landing on residue s.
struct Histogram {
  std::uint64_t modulus = 1;
  std::vector<Count> counts;

  Count total() const;
  friend bool operator==(const Histogram&, const Histogram&) = default;
};

/// counts[s] = #{x in Z_n (or Z_n^* if units_only) : x^2 = s}.
Histogram square_histogram(std::uint64_t n, bool units_only);

/// Cyclic convolution of two histograms over the same modulus.
Histogram convolve(const Histogram& a, const Histogram& b);

/// m-fold cyclic self-convolution by repeated squaring.
Histogram convolve_power(const Histogram& h, unsigned m);

/// t -> N_m(t, n) (or N*_m) for every t.
Histogram oracle_distribution(unsigned m, std::uint64_t n, bool units_only);

/// |S_m(t, n)| or |S*_m(t, n)|.
Count oracle_count(unsigned m, std::uint64_t t, std::uint64_t n,
                   bool units_only);

/// Nested-loop tabulation over all m-tuples; validates the convolution path.
Histogram enumerate_distribution(unsigned m, std::uint64_t n, bool units_only);

/// One entry of enumerate_distribution.
Count enumerate_count(unsigned m, std::uint64_t t, std::uint64_t n,
                      bool units_only);

}  // namespace sosmod

#endif  // SOSMOD_ORACLE_HPP
