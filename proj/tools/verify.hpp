#ifndef SOSMOD_TOOLS_VERIFY_HPP
#define SOSMOD_TOOLS_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sosmod/sosmod.hpp"

namespace sosmod::cli {

struct VerifyOptions {
  /// Largest odd prime power swept for the m in {1, 2, 3} families.
  std::uint64_t max_pp = 3000;
  /// Powers of two 2^1 .. 2^max_k2.
  unsigned max_k2 = 12;
  /// Largest odd prime for the single-prime family (any m).
  std::uint64_t max_p = 97;
  std::vector<unsigned> m_list = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  /// Composite moduli checked through the CRT product.
  unsigned composite_samples = 50;
  std::uint64_t max_composite = 1024;
  std::uint64_t seed = 20190101;
};

/// One closed-form family under test. `applies` says whether the family
/// claims (m, p^k); `eval` is compared against the oracle for every t.
struct FamilyCheck {
  std::string name;
  Variant variant = Variant::All;
  std::function<bool(unsigned m, const PrimePower& pp)> applies;
  std::function<Count(unsigned m, std::uint64_t t, const PrimePower& pp)> eval;
};

struct Mismatch {
  std::string family;
  unsigned m = 0;
  std::uint64_t t = 0;
  std::uint64_t modulus = 0;
  /// Zero for composite moduli.
  std::uint64_t prime = 0;
  unsigned exponent = 0;
  Count formula;
  Count oracle;
};

struct FamilyTally {
  std::string name;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
};

struct VerifyReport {
  std::vector<FamilyTally> families;
  /// Smallest failing case ordered by (modulus, m, t).
  std::optional<Mismatch> counterexample;

  bool ok() const { return !counterexample.has_value(); }
};

/// Every closed form in the library, each with the moduli it claims.
std::vector<FamilyCheck> default_families(const VerifyOptions& options);

/// Sweeps all families against the oracle, then checks the CRT product on
/// random composite moduli (reported as family "compose").
VerifyReport run_verify(const VerifyOptions& options,
                        const std::vector<FamilyCheck>& families);

}  // namespace sosmod::cli

#endif  // SOSMOD_TOOLS_VERIFY_HPP
