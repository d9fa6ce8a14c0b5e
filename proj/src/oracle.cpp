#include "sosmod/oracle.hpp"

#include <numeric>
#include <string>

namespace sosmod {

namespace {

using u128 = unsigned __int128;

void require_capacity(std::uint64_t n) {
  if (n == 0) throw DomainError("oracle: modulus must be >= 1");
  if (n > kMaxOracleModulus) {
    throw CapacityError("oracle: modulus " + std::to_string(n) +
                        " exceeds the limit " +
                        std::to_string(kMaxOracleModulus));
  }
}

Count from_u128(u128 v) {
  Count hi = static_cast<std::uint64_t>(v >> 64);
  hi <<= 64;
  return hi + static_cast<std::uint64_t>(v);
}

// Sparse view of the nonzero entries of a histogram.
struct Entries {
  std::vector<std::uint64_t> index;
  std::vector<Count> value;
};

Entries nonzero_entries(const Histogram& h) {
  Entries e;
  for (std::uint64_t i = 0; i < h.counts.size(); ++i) {
    if (sgn(h.counts[i]) != 0) {
      e.index.push_back(i);
      e.value.push_back(h.counts[i]);
    }
  }
  return e;
}

}  // namespace

Count Histogram::total() const {
  Count sum = 0;
  for (const Count& c : counts) sum += c;
  return sum;
}

Histogram square_histogram(std::uint64_t n, bool units_only) {
  require_capacity(n);
  Histogram h{n, std::vector<Count>(n, 0)};
  std::vector<std::uint64_t> raw(n, 0);
  for (std::uint64_t x = 0; x < n; ++x) {
    if (units_only && std::gcd(x, n) != 1) continue;
    ++raw[static_cast<std::uint64_t>(static_cast<u128>(x) * x % n)];
  }
  // Z_1 = {0}, and 0 is a unit there.
  if (n == 1) raw[0] = 1;
  for (std::uint64_t s = 0; s < n; ++s) h.counts[s] = raw[s];
  return h;
}

Histogram convolve(const Histogram& a, const Histogram& b) {
  if (a.modulus != b.modulus) {
    throw DomainError("convolve: histograms over different moduli");
  }
  const std::uint64_t n = a.modulus;
  const Entries ea = nonzero_entries(a);
  const Entries eb = nonzero_entries(b);
  Histogram out{n, std::vector<Count>(n, 0)};

  // Every output entry is bounded by total(a) * total(b).
  const Count ta = a.total();
  const Count tb = b.total();
  const Count bound = ta * tb;
  if (mpz_sizeinbase(bound.get_mpz_t(), 2) <= 126 &&
      mpz_sizeinbase(ta.get_mpz_t(), 2) <= 64 &&
      mpz_sizeinbase(tb.get_mpz_t(), 2) <= 64) {
    std::vector<std::uint64_t> bv(eb.value.size());
    for (std::size_t j = 0; j < bv.size(); ++j) bv[j] = eb.value[j].get_ui();
    std::vector<u128> acc(n, 0);
    for (std::size_t i = 0; i < ea.index.size(); ++i) {
      const u128 av = ea.value[i].get_ui();
      const std::uint64_t ai = ea.index[i];
      for (std::size_t j = 0; j < eb.index.size(); ++j) {
        std::uint64_t s = ai + eb.index[j];
        if (s >= n) s -= n;
        acc[s] += av * bv[j];
      }
    }
    for (std::uint64_t s = 0; s < n; ++s) out.counts[s] = from_u128(acc[s]);
    return out;
  }

  for (std::size_t i = 0; i < ea.index.size(); ++i) {
    const std::uint64_t ai = ea.index[i];
    for (std::size_t j = 0; j < eb.index.size(); ++j) {
      std::uint64_t s = ai + eb.index[j];
      if (s >= n) s -= n;
      mpz_addmul(out.counts[s].get_mpz_t(), ea.value[i].get_mpz_t(),
                 eb.value[j].get_mpz_t());
    }
  }
  return out;
}

Histogram convolve_power(const Histogram& h, unsigned m) {
  if (m == 0) throw DomainError("convolve_power: m must be >= 1");
  Histogram base = h;
  Histogram result;
  bool have_result = false;
  for (unsigned e = m;; e >>= 1) {
    if (e & 1) {
      result = have_result ? convolve(result, base) : base;
      have_result = true;
    }
    if (e <= 1) break;
    base = convolve(base, base);
  }
  return result;
}

Histogram oracle_distribution(unsigned m, std::uint64_t n, bool units_only) {
  if (m == 0) throw DomainError("oracle: m must be >= 1");
  return convolve_power(square_histogram(n, units_only), m);
}

Count oracle_count(unsigned m, std::uint64_t t, std::uint64_t n,
                   bool units_only) {
  require_capacity(n);
  if (t >= n) {
    throw DomainError("oracle: residue " + std::to_string(t) +
                      " out of range for modulus " + std::to_string(n));
  }
  return oracle_distribution(m, n, units_only).counts[t];
}

Histogram enumerate_distribution(unsigned m, std::uint64_t n,
                                 bool units_only) {
  if (m == 0 || n == 0) throw DomainError("enumerate: m and n must be >= 1");
  if (n > kMaxEnumerationModulus || m > kMaxEnumerationSquares) {
    throw CapacityError("enumerate: limited to n <= 64 and m <= 4");
  }
  std::vector<std::uint64_t> domain;
  for (std::uint64_t x = 0; x < n; ++x) {
    if (!units_only || std::gcd(x, n) == 1) domain.push_back(x);
  }
  std::vector<std::uint64_t> hits(n, 0);
  std::vector<std::size_t> idx(m, 0);
  while (true) {
    std::uint64_t s = 0;
    for (std::size_t i : idx) s += domain[i] * domain[i];
    ++hits[s % n];
    std::size_t pos = 0;
    while (pos < m && ++idx[pos] == domain.size()) idx[pos++] = 0;
    if (pos == m) break;
  }
  Histogram h{n, std::vector<Count>(n, 0)};
  for (std::uint64_t r = 0; r < n; ++r) h.counts[r] = hits[r];
  return h;
}

Count enumerate_count(unsigned m, std::uint64_t t, std::uint64_t n,
                      bool units_only) {
  if (n != 0 && t >= n) throw DomainError("enumerate: residue out of range");
  return enumerate_distribution(m, n, units_only).counts[t];
}

}  // namespace sosmod
