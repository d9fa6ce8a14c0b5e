#ifndef SOSMOD_COMPOSE_HPP
#define SOSMOD_COMPOSE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sosmod/formulas.hpp"
#include "sosmod/modarith.hpp"
#include "sosmod/oracle.hpp"

namespace sosmod {

enum class Variant { All, UnitsOnly };

enum class Policy { FormulaOnly, OracleFallback, OracleOnly };

/// Closed-form families that can answer a single prime-power component.
enum class Formula {
  NStarM2k,
  NM2,
  NM4,
  N1Pk,
  N22k,
  N32k,
  NMP,
  N2Pk,
  N3Pk,
};

std::string_view formula_name(Formula f);
std::string_view variant_name(Variant v);
std::string_view policy_name(Policy p);
std::optional<Variant> parse_variant(std::string_view s);
std::optional<Policy> parse_policy(std::string_view s);

/// Evaluates one family at (m, t, p^k). The caller is responsible for the
/// family applying to (m, p, k); DomainError otherwise.
Count evaluate_formula(Formula f, unsigned m, std::uint64_t t,
                       const PrimePower& pp);

/// The closed form covering (m, p^k, variant), if any.
std::optional<Formula> covering_formula(unsigned m, const PrimePower& pp,
                                        Variant variant);

struct CountQuery {
  unsigned m = 1;
  std::uint64_t t = 0;
  std::uint64_t n = 1;
  Variant variant = Variant::All;
  Policy policy = Policy::OracleFallback;
};

/// How one prime-power component of n is resolved. `formula` is empty when
/// the component goes to the oracle.
struct FactorPlan {
  PrimePower component;
  std::optional<Formula> formula;

  bool uses_oracle() const { return !formula.has_value(); }
  /// Formula name, or "oracle".
  std::string_view label() const;
};

struct FactorPath {
  FactorPlan plan;
  std::uint64_t residue = 0;
  Count value;
};

struct CountResult {
  Count value;
  std::vector<FactorPath> path;

  /// Component labels joined by '+', or "trivial" for n = 1.
  std::string path_label() const;
};

/// Resolves every component of f. Throws FormulaNotCovered under
/// Policy::FormulaOnly when a component has no closed form.
std::vector<FactorPlan> plan_evaluation(unsigned m, const Factorization& f,
                                        Variant variant, Policy policy);

std::string path_label(std::span<const FactorPlan> plan);

/// N_m(t, n) or N*_m(t, n) as the product of its prime-power components.
CountResult count(const CountQuery& q);

/// Same, reusing a factorization of q.n the caller already has.
CountResult count(const CountQuery& q, const Factorization& known);

/// counts[t] = count(m, t, n) for all t in [0, n). n is limited by
/// kMaxOracleModulus regardless of policy.
Histogram full_distribution(unsigned m, std::uint64_t n, Variant variant,
                            Policy policy);

}  // namespace sosmod

#endif  // SOSMOD_COMPOSE_HPP
