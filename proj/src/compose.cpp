#include "sosmod/compose.hpp"

#include <array>
#include <string>
#include <utility>

namespace sosmod {

namespace {

constexpr std::array<std::pair<Formula, std::string_view>, 9> kFormulaNames = {{
    {Formula::NStarM2k, "nstar_m_2k"},
    {Formula::NM2, "n_m_2"},
    {Formula::NM4, "n_m_4"},
    {Formula::N1Pk, "n_1_pk"},
    {Formula::N22k, "n_2_2k"},
    {Formula::N32k, "n_3_2k"},
    {Formula::NMP, "n_m_p"},
    {Formula::N2Pk, "n_2_pk"},
    {Formula::N3Pk, "n_3_pk"},
}};

void validate(const CountQuery& q) {
  if (q.m == 0) throw DomainError("count: m must be >= 1");
  if (q.n == 0) throw DomainError("count: n must be >= 1");
  if (q.t >= q.n) {
    throw DomainError("count: residue " + std::to_string(q.t) +
                      " out of range for modulus " + std::to_string(q.n));
  }
}

bool units(Variant v) { return v == Variant::UnitsOnly; }

// The full t -> count table of one component.
std::vector<Count> component_table(unsigned m, const FactorPlan& plan,
                                   Variant variant) {
  const std::uint64_t mod = plan.component.modulus();
  if (plan.uses_oracle()) {
    return oracle_distribution(m, mod, units(variant)).counts;
  }
  std::vector<Count> table;
  table.reserve(mod);
  for (std::uint64_t t = 0; t < mod; ++t) {
    table.push_back(evaluate_formula(*plan.formula, m, t, plan.component));
  }
  return table;
}

}  // namespace

std::string_view formula_name(Formula f) {
  for (const auto& [id, name] : kFormulaNames) {
    if (id == f) return name;
  }
  return "unknown";
}

std::string_view variant_name(Variant v) {
  return v == Variant::All ? "all" : "units";
}

std::string_view policy_name(Policy p) {
  switch (p) {
    case Policy::FormulaOnly:
      return "formula-only";
    case Policy::OracleFallback:
      return "oracle-fallback";
    case Policy::OracleOnly:
      return "oracle-only";
  }
  return "unknown";
}

std::optional<Variant> parse_variant(std::string_view s) {
  if (s == "all") return Variant::All;
  if (s == "units") return Variant::UnitsOnly;
  return std::nullopt;
}

std::optional<Policy> parse_policy(std::string_view s) {
  for (Policy p : {Policy::FormulaOnly, Policy::OracleFallback,
                   Policy::OracleOnly}) {
    if (policy_name(p) == s) return p;
  }
  return std::nullopt;
}

Count evaluate_formula(Formula f, unsigned m, std::uint64_t t,
                       const PrimePower& pp) {
  const unsigned k = pp.exponent();
  const std::uint64_t p = pp.prime();
  auto require = [&](bool ok) {
    if (!ok) {
      throw DomainError(std::string(formula_name(f)) +
                        " does not apply to m=" + std::to_string(m) +
                        ", modulus " + std::to_string(pp.modulus()));
    }
  };
  switch (f) {
    case Formula::NStarM2k:
      require(pp.is_two());
      return nstar_m_2k(m, t, k);
    case Formula::NM2:
      require(pp.is_two() && k == 1);
      return n_m_2(m, t);
    case Formula::NM4:
      require(pp.is_two() && k == 2);
      return n_m_4(m, t);
    case Formula::N1Pk:
      require(m == 1);
      return n_1_pk(t, pp);
    case Formula::N22k:
      require(pp.is_two() && m == 2);
      return n_2_2k(t, k);
    case Formula::N32k:
      require(pp.is_two() && m == 3);
      return n_3_2k(t, k);
    case Formula::NMP:
      require(!pp.is_two() && k == 1);
      return n_m_p(m, t, p);
    case Formula::N2Pk:
      require(!pp.is_two() && m == 2);
      return n_2_pk(t, p, k);
    case Formula::N3Pk:
      require(!pp.is_two() && m == 3);
      return n_3_pk(t, p, k);
  }
  throw InternalError("evaluate_formula: unknown family");
}

std::optional<Formula> covering_formula(unsigned m, const PrimePower& pp,
                                        Variant variant) {
  const unsigned k = pp.exponent();
  if (pp.is_two()) {
    if (variant == Variant::UnitsOnly) return Formula::NStarM2k;
    if (k == 1) return Formula::NM2;
    if (k == 2) return Formula::NM4;
    if (m == 1) return Formula::N1Pk;
    if (m == 2) return Formula::N22k;
    if (m == 3) return Formula::N32k;
    return std::nullopt;
  }
  if (variant == Variant::UnitsOnly) return std::nullopt;
  if (k == 1) return Formula::NMP;
  if (m == 1) return Formula::N1Pk;
  if (m == 2) return Formula::N2Pk;
  if (m == 3) return Formula::N3Pk;
  return std::nullopt;
}

std::string_view FactorPlan::label() const {
  return formula ? formula_name(*formula) : std::string_view("oracle");
}

std::string CountResult::path_label() const {
  std::vector<FactorPlan> plans;
  plans.reserve(path.size());
  for (const FactorPath& fp : path) plans.push_back(fp.plan);
  return sosmod::path_label(plans);
}

std::vector<FactorPlan> plan_evaluation(unsigned m, const Factorization& f,
                                        Variant variant, Policy policy) {
  std::vector<FactorPlan> plan;
  plan.reserve(f.factors.size());
  for (const PrimePower& pp : f.factors) {
    if (policy == Policy::OracleOnly) {
      plan.push_back({pp, std::nullopt});
      continue;
    }
    std::optional<Formula> formula = covering_formula(m, pp, variant);
    if (!formula && policy == Policy::FormulaOnly) {
      throw FormulaNotCovered(
          "no closed form for m=" + std::to_string(m) + " modulo " +
          std::to_string(pp.prime()) + "^" + std::to_string(pp.exponent()) +
          (variant == Variant::UnitsOnly ? " (units only)" : ""));
    }
    plan.push_back({pp, formula});
  }
  return plan;
}

std::string path_label(std::span<const FactorPlan> plan) {
  if (plan.empty()) return "trivial";
  std::string label;
  for (const FactorPlan& fp : plan) {
    if (!label.empty()) label += '+';
    label += fp.label();
  }
  return label;
}

CountResult count(const CountQuery& q) {
  validate(q);
  return count(q, factorize(q.n));
}

CountResult count(const CountQuery& q, const Factorization& known) {
  validate(q);
  if (known.n != q.n) {
    throw DomainError("count: factorization does not match n");
  }
  CountResult result;
  result.value = 1;
  for (const FactorPlan& plan :
       plan_evaluation(q.m, known, q.variant, q.policy)) {
    const std::uint64_t residue = q.t % plan.component.modulus();
    Count value = plan.uses_oracle()
                      ? oracle_count(q.m, residue, plan.component.modulus(),
                                     units(q.variant))
                      : evaluate_formula(*plan.formula, q.m, residue,
                                         plan.component);
    result.value *= value;
    result.path.push_back({plan, residue, std::move(value)});
  }
  return result;
}

Histogram full_distribution(unsigned m, std::uint64_t n, Variant variant,
                            Policy policy) {
  if (m == 0) throw DomainError("full_distribution: m must be >= 1");
  if (n == 0) throw DomainError("full_distribution: n must be >= 1");
  if (n > kMaxOracleModulus) {
    throw CapacityError("full_distribution: modulus " + std::to_string(n) +
                        " exceeds the limit " +
                        std::to_string(kMaxOracleModulus));
  }
  const Factorization f = factorize(n);
  const std::vector<FactorPlan> plan = plan_evaluation(m, f, variant, policy);

  std::vector<std::vector<Count>> tables;
  tables.reserve(plan.size());
  for (const FactorPlan& fp : plan) {
    tables.push_back(component_table(m, fp, variant));
  }

  Histogram h{n, std::vector<Count>(n, 1)};
  for (std::size_t i = 0; i < plan.size(); ++i) {
    const std::uint64_t mod = plan[i].component.modulus();
    for (std::uint64_t t = 0; t < n; ++t) h.counts[t] *= tables[i][t % mod];
  }
  return h;
}

}  // namespace sosmod
