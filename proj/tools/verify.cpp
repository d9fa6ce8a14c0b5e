#include "verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <tuple>

namespace sosmod::cli {

namespace {

std::vector<PrimePower> sweep_moduli(const VerifyOptions& o) {
  std::vector<PrimePower> mods;
  for (unsigned k = 1; k <= o.max_k2; ++k) mods.emplace_back(2, k);
  const std::uint64_t limit = std::max(o.max_pp, o.max_p);
  for (std::uint64_t p = 3; p <= limit; p += 2) {
    if (!is_prime(p)) continue;
    if (p <= o.max_p && p > o.max_pp) mods.emplace_back(p, 1);
    std::uint64_t q = p;
    for (unsigned k = 1; q <= o.max_pp; ++k) {
      mods.emplace_back(p, k);
      if (q > o.max_pp / p) break;
      q *= p;
    }
  }
  std::sort(mods.begin(), mods.end(), [](const auto& a, const auto& b) {
    return a.modulus() < b.modulus();
  });
  return mods;
}

bool precedes(const Mismatch& a, const Mismatch& b) {
  return std::tie(a.modulus, a.m, a.t) < std::tie(b.modulus, b.m, b.t);
}

void record(VerifyReport& report, Mismatch mismatch) {
  if (!report.counterexample || precedes(mismatch, *report.counterexample)) {
    report.counterexample = std::move(mismatch);
  }
}

// h^1 .. h^max_m, built one convolution at a time.
std::vector<Histogram> oracle_powers(std::uint64_t n, bool units,
                                     unsigned max_m) {
  std::vector<Histogram> powers;
  powers.push_back(square_histogram(n, units));
  for (unsigned m = 2; m <= max_m; ++m) {
    powers.push_back(convolve(powers.back(), powers.front()));
  }
  return powers;
}

}  // namespace

std::vector<FamilyCheck> default_families(const VerifyOptions& options) {
  const std::uint64_t max_p = options.max_p;
  std::vector<FamilyCheck> f;
  f.push_back({"nstar_m_2k", Variant::UnitsOnly,
               [](unsigned, const PrimePower& pp) { return pp.is_two(); },
               [](unsigned m, std::uint64_t t, const PrimePower& pp) {
                 return nstar_m_2k(m, t, pp.exponent());
               }});
  f.push_back({"n_m_2", Variant::All,
               [](unsigned, const PrimePower& pp) {
                 return pp.is_two() && pp.exponent() == 1;
               },
               [](unsigned m, std::uint64_t t, const PrimePower&) {
                 return n_m_2(m, t);
               }});
  f.push_back({"n_m_4", Variant::All,
               [](unsigned, const PrimePower& pp) {
                 return pp.is_two() && pp.exponent() == 2;
               },
               [](unsigned m, std::uint64_t t, const PrimePower&) {
                 return n_m_4(m, t);
               }});
  f.push_back({"n_1_pk", Variant::All,
               [](unsigned m, const PrimePower&) { return m == 1; },
               [](unsigned, std::uint64_t t, const PrimePower& pp) {
                 return n_1_pk(t, pp);
               }});
  f.push_back({"n_2_2k", Variant::All,
               [](unsigned m, const PrimePower& pp) {
                 return m == 2 && pp.is_two() && pp.exponent() >= 2;
               },
               [](unsigned, std::uint64_t t, const PrimePower& pp) {
                 return n_2_2k(t, pp.exponent());
               }});
  f.push_back({"n_3_2k", Variant::All,
               [](unsigned m, const PrimePower& pp) {
                 return m == 3 && pp.is_two();
               },
               [](unsigned, std::uint64_t t, const PrimePower& pp) {
                 return n_3_2k(t, pp.exponent());
               }});
  f.push_back({"n_m_p", Variant::All,
               [max_p](unsigned, const PrimePower& pp) {
                 return !pp.is_two() && pp.exponent() == 1 &&
                        pp.prime() <= max_p;
               },
               [](unsigned m, std::uint64_t t, const PrimePower& pp) {
                 return n_m_p(m, t, pp.prime());
               }});
  f.push_back({"n_2_pk", Variant::All,
               [](unsigned m, const PrimePower& pp) {
                 return m == 2 && !pp.is_two();
               },
               [](unsigned, std::uint64_t t, const PrimePower& pp) {
                 return n_2_pk(t, pp.prime(), pp.exponent());
               }});
  f.push_back({"n_3_pk", Variant::All,
               [](unsigned m, const PrimePower& pp) {
                 return m == 3 && !pp.is_two();
               },
               [](unsigned, std::uint64_t t, const PrimePower& pp) {
                 return n_3_pk(t, pp.prime(), pp.exponent());
               }});
  return f;
}

VerifyReport run_verify(const VerifyOptions& options,
                        const std::vector<FamilyCheck>& families) {
  VerifyReport report;
  std::map<std::string, std::size_t> slot;
  auto tally = [&](const std::string& name) -> FamilyTally& {
    auto [it, inserted] = slot.emplace(name, report.families.size());
    if (inserted) report.families.push_back({name, 0, 0});
    return report.families[it->second];
  };
  for (const FamilyCheck& fam : families) tally(fam.name);

  const std::vector<PrimePower> moduli = sweep_moduli(options);
  for (const PrimePower& pp : moduli) {
    // Families are restricted to the odd moduli the options ask for.
    const bool odd_swept = pp.is_two() || pp.modulus() <= options.max_pp;

    unsigned max_m[2] = {0, 0};
    std::vector<std::pair<const FamilyCheck*, unsigned>> work;
    for (const FamilyCheck& fam : families) {
      for (unsigned m : options.m_list) {
        if (m == 0 || !fam.applies(m, pp)) continue;
        if (!odd_swept && fam.name != "n_m_p") continue;
        work.emplace_back(&fam, m);
        unsigned& top = max_m[fam.variant == Variant::UnitsOnly];
        top = std::max(top, m);
      }
    }
    if (work.empty()) continue;

    std::vector<Histogram> powers[2];
    for (int units = 0; units < 2; ++units) {
      if (max_m[units] > 0) {
        powers[units] = oracle_powers(pp.modulus(), units, max_m[units]);
      }
    }
    for (const auto& [fam, m] : work) {
      const Histogram& truth =
          powers[fam->variant == Variant::UnitsOnly][m - 1];
      FamilyTally& t = tally(fam->name);
      for (std::uint64_t r = 0; r < pp.modulus(); ++r) {
        Count got = fam->eval(m, r, pp);
        if (got == truth.counts[r]) {
          ++t.passed;
          continue;
        }
        ++t.failed;
        record(report, {fam->name, m, r, pp.modulus(), pp.prime(),
                        pp.exponent(), std::move(got), truth.counts[r]});
      }
    }
  }

  if (options.composite_samples > 0 && options.max_composite >= 6) {
    FamilyTally& t = tally("compose");
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::uint64_t> pick(6, options.max_composite);
    unsigned done = 0;
    for (unsigned attempts = 0;
         done < options.composite_samples && attempts < 100000; ++attempts) {
      const std::uint64_t n = pick(rng);
      if (factorize(n).factors.size() < 2) continue;
      ++done;
      for (unsigned m : options.m_list) {
        if (m == 0 || m > 3) continue;
        const Histogram formula =
            full_distribution(m, n, Variant::All, Policy::FormulaOnly);
        const Histogram truth = oracle_distribution(m, n, false);
        for (std::uint64_t r = 0; r < n; ++r) {
          if (formula.counts[r] == truth.counts[r]) {
            ++t.passed;
            continue;
          }
          ++t.failed;
          record(report, {"compose", m, r, n, 0, 0, formula.counts[r],
                          truth.counts[r]});
        }
      }
    }
  }
  return report;
}

}  // namespace sosmod::cli
