// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "brute.hpp"
#include "sosmod/sosmod.hpp"

using namespace sosmod;

namespace {

// Pinned thresholds.
constexpr unsigned kMaxK2 = 12;
constexpr std::uint64_t kMaxOddPrimePower = 3000;
constexpr std::uint64_t kMaxSinglePrime = 97;
constexpr unsigned kMaxSinglePrimeM = 10;
constexpr unsigned kMaxRecurrenceM = 30;
constexpr double kFormulaBudgetMs = 1.0;
constexpr double kOracleBudgetS = 30.0;

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void fail(const std::string& what) {
    if (ok) detail << what;
    ok = false;
  }
};

Count pow_count(std::uint64_t b, unsigned long e) {
  Count r;
  mpz_ui_pow_ui(r.get_mpz_t(), b, e);
  return r;
}

std::string where(unsigned m, std::uint64_t t, std::uint64_t n) {
  return "m=" + std::to_string(m) + " t=" + std::to_string(t) +
         " n=" + std::to_string(n);
}

// Calls visit(m, distribution) for m = 1..max_m using one convolution per step.
void for_each_power(std::uint64_t n, bool units, unsigned max_m,
                    const std::function<void(unsigned, const Histogram&)>& visit) {
  const Histogram base = square_histogram(n, units);
  Histogram acc = base;
  for (unsigned m = 1; m <= max_m; ++m) {
    if (m > 1) acc = convolve(acc, base);
    visit(m, acc);
  }
}

Check ac1_powers_of_two() {
  Check c;
  std::uint64_t cases = 0;
  for (unsigned k = 1; k <= kMaxK2; ++k) {
    const PrimePower pp(2, k);
    const std::uint64_t n = pp.modulus();
    for_each_power(n, true, kMaxSinglePrimeM, [&](unsigned m, const Histogram& h) {
      for (std::uint64_t t = 0; t < n; ++t, ++cases) {
        if (nstar_m_2k(m, t, k) != h.counts[t]) c.fail("nstar " + where(m, t, n));
      }
    });
    for_each_power(n, false, kMaxSinglePrimeM, [&](unsigned m, const Histogram& h) {
      for (std::uint64_t t = 0; t < n; ++t) {
        auto expect = [&](const char* name, const Count& v) {
          ++cases;
          if (v != h.counts[t]) c.fail(std::string(name) + " " + where(m, t, n));
        };
        if (k == 1) expect("n_m_2", n_m_2(m, t));
        if (k == 2) expect("n_m_4", n_m_4(m, t));
        if (m == 1) expect("n_1_pk", n_1_pk(t, pp));
        if (m == 2 && k >= 2) expect("n_2_2k", n_2_2k(t, k));
        if (m == 3) expect("n_3_2k", n_3_2k(t, k));
      }
    });
  }
  c.detail << (c.ok ? "" : "; ") << cases << " cases, k<=" << kMaxK2;
  return c;
}

Check ac2_odd_primes() {
  Check c;
  std::uint64_t cases = 0;
  for (std::uint64_t p : brute::odd_primes_upto(kMaxOddPrimePower)) {
    const unsigned max_m = p <= kMaxSinglePrime ? kMaxSinglePrimeM : 3;
    for (unsigned k = 1; brute::ipow(p, k) <= kMaxOddPrimePower; ++k) {
      const PrimePower pp(p, k);
      const std::uint64_t n = pp.modulus();
      for_each_power(n, false, k == 1 ? max_m : 3, [&](unsigned m, const Histogram& h) {
        for (std::uint64_t t = 0; t < n; ++t) {
          auto expect = [&](const char* name, const Count& v) {
            ++cases;
            if (v != h.counts[t]) c.fail(std::string(name) + " " + where(m, t, n));
          };
          if (k == 1) expect("n_m_p", n_m_p(m, t, p));
          if (m == 1) expect("n_1_pk", n_1_pk(t, pp));
          if (m == 2) expect("n_2_pk", n_2_pk(t, p, k));
          if (m == 3) expect("n_3_pk", n_3_pk(t, p, k));
        }
      });
    }
  }
  c.detail << (c.ok ? "" : "; ") << cases << " cases, p^k<=" << kMaxOddPrimePower
           << ", p<=" << kMaxSinglePrime << " with m<=" << kMaxSinglePrimeM;
  return c;
}

Check ac3_spot_values() {
  Check c;
  int n = 0;
  auto expect = [&](const char* label, const Count& got, long want) {
    ++n;
    if (got != want) c.fail(std::string(label) + " = " + got.get_str());
  };
  expect("legendre(2,7)", legendre(2, 7), 1);
  expect("legendre(3,7)", legendre(3, 7), -1);
  expect("legendre(0,13)", legendre(0, 13), 0);
  expect("|sqrt(2 mod 7)|", sqrt_mod_pk(2, PrimePower(7, 1)).size(), 2);
  expect("|sqrt(3 mod 25)|", sqrt_mod_pk(3, PrimePower(5, 2)).size(), 0);
  expect("N*_2(2,8)", nstar_m_2k(2, 2, 3), 16);
  expect("N_3(1,2)", n_m_2(3, 1), 4);
  expect("N_2(1,4)", n_m_4(2, 1), 8);
  expect("N_2(5,8)", n_2_2k(5, 3), 16);
  expect("N_3(1,8)", n_3_2k(1, 3), 96);
  expect("N_3(0,8)", n_3_2k(0, 3), 32);
  expect("N_3(3,7)", n_m_p(3, 3, 7), 56);
  expect("N_2(0,25)", n_2_pk(0, 5, 2), 65);
  expect("N_3(0,9)", n_3_pk(0, 3, 2), 99);
  expect("N_1(36,81)", n_1_pk(36, PrimePower(3, 4)), 6);
  expect("N_2(13,20)", count({2, 13, 20}).value, 32);
  expect("N_3(0,72)", count({3, 0, 72}).value, 3168);
  expect("gamma_4(7)[0]", gamma_closed(4, 7).at_zero, 385);
  for (std::uint64_t p : brute::odd_primes_upto(97)) {
    const GammaVector g1 = gamma_closed(1, p);
    const GammaVector g2 = gamma_closed(2, p);
    const long q = static_cast<long>(p);
    expect("gamma_1[0]", g1.at_zero, 1);
    expect("gamma_1[-1]", g1.at_nonresidue, 0);
    expect("gamma_1[+1]", g1.at_residue, 2);
    expect("gamma_2[0]", g2.at_zero, p % 4 == 1 ? 2 * q - 1 : 1);
    expect("gamma_2[-1]", g2.at_nonresidue, p % 4 == 1 ? q - 1 : q + 1);
    expect("gamma_2[+1]", g2.at_residue, p % 4 == 1 ? q - 1 : q + 1);
  }
  const Histogram d = full_distribution(3, 7, Variant::All, Policy::FormulaOnly);
  const long want[] = {49, 42, 42, 56, 42, 56, 56};
  for (std::uint64_t t = 0; t < 7; ++t) expect("N_3(t,7)", d.counts[t], want[t]);
  c.detail << (c.ok ? "" : "; ") << n << " values";
  return c;
}

Check ac4_recurrence() {
  Check c;
  std::uint64_t cases = 0;
  for (std::uint64_t p : brute::odd_primes_upto(kMaxSinglePrime)) {
    for (unsigned m = 1; m <= kMaxRecurrenceM; ++m, ++cases) {
      if (gamma_recurrence(m, p) != gamma_closed(m, p)) {
        c.fail("gamma p=" + std::to_string(p) + " m=" + std::to_string(m));
      }
    }
    // the closed vector against direct counts at t = 0, a residue, a non-residue
    std::uint64_t residue = 1, nonresidue = 2;
    while (legendre(nonresidue, p) != -1) ++nonresidue;
    for_each_power(p, false, 8, [&](unsigned m, const Histogram& h) {
      const GammaVector g = gamma_closed(m, p);
      ++cases;
      if (g.at_zero != h.counts[0] || g.at_residue != h.counts[residue] ||
          g.at_nonresidue != h.counts[nonresidue]) {
        c.fail("gamma vs oracle p=" + std::to_string(p) + " m=" + std::to_string(m));
      }
    });
  }
  c.detail << (c.ok ? "" : "; ") << cases << " cases, m<=" << kMaxRecurrenceM;
  return c;
}

Check ac5_mass(std::mt19937_64& rng) {
  Check c;
  for (int i = 0; i < 100; ++i) {
    const unsigned m = 1 + rng() % 5;
    const std::uint64_t n = 1 + rng() % 512;
    const Histogram h = full_distribution(m, n, Variant::All, Policy::OracleFallback);
    if (h.total() != pow_count(n, m)) c.fail("mass " + where(m, 0, n));
  }
  for (unsigned k = 1; k <= 10; ++k) {
    for (unsigned m = 1; m <= 6; ++m) {
      Count s = 0;
      for (std::uint64_t t = 0; t < (std::uint64_t{1} << k); ++t) s += nstar_m_2k(m, t, k);
      if (s != pow_count(2, (k - 1) * m)) c.fail("unit mass k=" + std::to_string(k));
    }
  }
  c.detail << (c.ok ? "" : "; ") << "100 random (m<=5, n<=512) + units k<=10, m<=6";
  return c;
}

Check ac6_composite(std::mt19937_64& rng) {
  Check c;
  int done = 0;
  while (done < 50) {
    const std::uint64_t n = 2 + rng() % 1023;
    if (factorize(n).factors.size() < 2) continue;
    ++done;
    for (unsigned m : {2u, 3u}) {
      const Histogram h = oracle_distribution(m, n, false);
      for (std::uint64_t t = 0; t < n; ++t) {
        const CountResult r = count({m, t, n, Variant::All, Policy::FormulaOnly});
        if (r.value != h.counts[t]) c.fail("compose " + where(m, t, n));
      }
    }
  }
  c.detail << (c.ok ? "" : "; ") << "50 composite n<=1024, m in {2,3}";
  return c;
}

Check ac7_lemmas() {
  Check c;
  for (std::uint64_t p : brute::odd_primes_upto(200)) {
    const bool p1 = p % 4 == 1;
    for (std::uint64_t t = 1; t < p; ++t) {
      std::uint64_t solutions = 0;
      long chi = 0;
      std::uint64_t minus = 0, plus = 0;
      for (std::uint64_t x = 0; x < p; ++x) {
        solutions += count_sqrt_mod_pk((x * x + t) % p, PrimePower(p, 1)).get_ui();
        chi += legendre(x * x + t, p);
        const int z = legendre((t + p - x * x % p) % p, p);
        minus += z == -1;
        plus += z == 1;
      }
      if (solutions != p - 1) c.fail("y^2=x^2+t p=" + std::to_string(p));
      if (chi != -1) c.fail("character sum p=" + std::to_string(p));
      // how many z make t - z^2 a non-residue / residue
      const bool residue = legendre(t, p) == 1;
      const std::uint64_t want_minus =
          residue ? (p1 ? (p - 1) / 2 : (p - 3) / 2) : (p1 ? (p + 1) / 2 : (p - 1) / 2);
      const std::uint64_t want_plus =
          residue ? (p1 ? (p - 3) / 2 : (p - 1) / 2) : (p1 ? (p - 1) / 2 : (p + 1) / 2);
      if (minus != want_minus || plus != want_plus) {
        c.fail("z-count table p=" + std::to_string(p) + " t=" + std::to_string(t));
      }
    }
    // unit-square scaling of the single-prime counts
    for (unsigned m = 1; m <= 4; ++m) {
      for (std::uint64_t t = 0; t < p; ++t) {
        for (std::uint64_t u = 1; u < p; ++u) {
          if (n_m_p(m, u * u % p * t % p, p) != n_m_p(m, t, p)) {
            c.fail("scaling n_m_p p=" + std::to_string(p));
          }
        }
      }
    }
  }
  for (unsigned k = 1; k <= 10; ++k) {
    const PrimePower pp(2, k);
    const std::uint64_t n = pp.modulus();
    if (k >= 5) {
      for (std::uint64_t t = 0; 4 * t < n; ++t) {
        if (n_2_2k(4 * t, k) != 4 * n_2_2k(t, k - 2)) c.fail("descent x4 " + where(2, t, n));
        if (n_3_2k(4 * t, k) != 8 * n_3_2k(t, k - 2)) c.fail("descent x8 " + where(3, t, n));
      }
    }
    for (std::uint64_t u = 1; u < n; u += 2) {
      const std::uint64_t u2 = u * u % n;
      for (std::uint64_t t = 0; t < n; ++t) {
        const std::uint64_t s = u2 * t % n;
        if (n_1_pk(s, pp) != n_1_pk(t, pp) || n_3_2k(s, k) != n_3_2k(t, k) ||
            nstar_m_2k(4, s, k) != nstar_m_2k(4, t, k) ||
            (k >= 2 && n_2_2k(s, k) != n_2_2k(t, k))) {
          c.fail("scaling mod 2^k " + where(0, t, n));
        }
      }
    }
    for (std::uint64_t t = 1; t < n; t += 2) {
      const Count want = k >= 3 ? (t % 8 == 1 ? 4 : 0) : (k == 2 ? (t % 4 == 1 ? 2 : 0) : 1);
      if (count_sqrt_mod_pk(t, pp) != want) c.fail("odd squares mod 2^k");
    }
  }
  c.detail << (c.ok ? "" : "; ") << "p<=200, 2^k with k<=10";
  return c;
}

Check ac8_performance() {
  Check c;
  using clock = std::chrono::steady_clock;
  const std::uint64_t n = 9223372036854775783ULL;  // prime
  Factorization f;
  f.n = n;
  f.factors = {PrimePower(n, 1)};
  constexpr int kQueries = 200;
  const auto f0 = clock::now();
  Count sink = 0;
  for (int i = 0; i < kQueries; ++i) {
    sink += count({2 + static_cast<unsigned>(i % 2), static_cast<std::uint64_t>(i), n}, f).value;
  }
  const double formula_ms =
      std::chrono::duration<double, std::milli>(clock::now() - f0).count() / kQueries;
  const auto o0 = clock::now();
  const Histogram h = oracle_distribution(3, 4096, false);
  const double oracle_s = std::chrono::duration<double>(clock::now() - o0).count();
  if (formula_ms >= kFormulaBudgetMs) c.fail("formula too slow");
  if (oracle_s >= kOracleBudgetS || h.total() != pow_count(4096, 3)) {
    c.fail("oracle too slow");
  }
  c.detail << (c.ok ? "" : "; ") << "formula " << formula_ms << " ms/query (< "
           << kFormulaBudgetMs << "), oracle n=4096 m=3 " << oracle_s << " s (< "
           << kOracleBudgetS << ")";
  return c;
}

}  // namespace

int main() {
  std::mt19937_64 rng(20190101);
  struct Criterion {
    const char* id;
    const char* title;
    double budget_s;
    std::function<Check()> run;
  };
  const Criterion criteria[] = {
      {"AC1", "closed forms mod 2^k equal the oracle", 60, ac1_powers_of_two},
      {"AC2", "closed forms mod odd p^k equal the oracle", 300, ac2_odd_primes},
      {"AC3", "worked values", 10, ac3_spot_values},
      {"AC4", "gamma recurrence equals closed form", 10, ac4_recurrence},
      {"AC5", "total mass n^m and phi(2^k)^m", 60, [&] { return ac5_mass(rng); }},
      {"AC6", "CRT composition equals the oracle", 120, [&] { return ac6_composite(rng); }},
      {"AC7", "square-root counting lemmas", 60, ac7_lemmas},
      {"AC8", "performance budgets", 60, ac8_performance},
  };
  int failed = 0;
  for (const Criterion& cr : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Check r = cr.run();
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed >= cr.budget_s) r.ok = false;
    failed += !r.ok;
    std::printf("[%s] %s %s: %s [%.2f s, budget %.0f s]\n", r.ok ? "PASS" : "FAIL",
                cr.id, cr.title, r.detail.str().c_str(), elapsed, cr.budget_s);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed,
              std::size(criteria));
  return failed == 0 ? 0 : 1;
}
