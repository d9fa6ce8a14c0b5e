#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

namespace sosmod::cli {

namespace {

using json = nlohmann::json;

struct EvalArgs {
  unsigned m = 1;
  std::uint64_t t = 0;
  std::uint64_t n = 1;
  bool units = false;
  std::string policy = "oracle-fallback";
  bool json = false;
};

struct TableArgs {
  unsigned m = 1;
  std::uint64_t n = 1;
  bool units = false;
  std::string policy = "oracle-fallback";
  std::string format = "csv";
  bool json = false;
};

struct VerifyArgs {
  VerifyOptions options;
  bool json = false;
};

struct BenchArgs {
  std::vector<std::uint64_t> sizes = {256, 1024, 4096};
  unsigned queries = 1000;
  bool json = false;
};

std::string decimal(const Count& c) { return c.get_str(); }

Policy to_policy(const std::string& s) {
  // The CLI11 validator already restricted the spelling.
  return *parse_policy(s);
}

Variant to_variant(bool units) {
  return units ? Variant::UnitsOnly : Variant::All;
}

int cmd_eval(const EvalArgs& a, std::ostream& out) {
  const CountQuery q{a.m, a.t, a.n, to_variant(a.units), to_policy(a.policy)};
  const CountResult r = count(q);
  if (a.json) {
    json factors = json::array();
    for (const FactorPath& fp : r.path) {
      factors.push_back({{"p", fp.plan.component.prime()},
                         {"k", fp.plan.component.exponent()},
                         {"residue", fp.residue},
                         {"path", std::string(fp.plan.label())},
                         {"value", decimal(fp.value)}});
    }
    json doc = {{"m", a.m},
                {"t", a.t},
                {"n", a.n},
                {"variant", std::string(variant_name(q.variant))},
                {"policy", std::string(policy_name(q.policy))},
                {"value", decimal(r.value)},
                {"path", r.path_label()},
                {"factors", factors}};
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  out << (a.units ? "N*_" : "N_") << a.m << '(' << a.t << ", " << a.n
      << ") = " << r.value << '\n';
  for (const FactorPath& fp : r.path) {
    out << "  " << fp.plan.component.prime() << '^'
        << fp.plan.component.exponent() << ": " << fp.plan.label()
        << " at t=" << fp.residue << " -> " << fp.value << '\n';
  }
  return kExitOk;
}

int cmd_table(const TableArgs& a, std::ostream& out) {
  const Variant variant = to_variant(a.units);
  const Policy policy = to_policy(a.policy);
  const Histogram h = full_distribution(a.m, a.n, variant, policy);
  const std::string path =
      path_label(plan_evaluation(a.m, factorize(a.n), variant, policy));

  if (a.json || a.format == "json") {
    json rows = json::array();
    for (std::uint64_t t = 0; t < a.n; ++t) {
      rows.push_back({{"t", t}, {"value", decimal(h.counts[t])}, {"path", path}});
    }
    out << rows.dump() << '\n';
    return kExitOk;
  }
  std::ostringstream buf;
  buf << "t,value,path\n";
  for (std::uint64_t t = 0; t < a.n; ++t) {
    buf << t << ',' << h.counts[t] << ',' << path << '\n';
  }
  out << buf.str();
  return kExitOk;
}

int cmd_verify(const VerifyArgs& a, const std::vector<FamilyCheck>* injected,
               std::ostream& out) {
  const std::vector<FamilyCheck> families =
      injected ? *injected : default_families(a.options);
  const VerifyReport report = run_verify(a.options, families);

  if (a.json) {
    json fams = json::array();
    for (const FamilyTally& f : report.families) {
      fams.push_back({{"name", f.name}, {"passed", f.passed}, {"failed", f.failed}});
    }
    json doc = {{"ok", report.ok()}, {"families", fams}};
    if (const auto& c = report.counterexample) {
      doc["counterexample"] = {{"family", c->family},
                               {"m", c->m},
                               {"t", c->t},
                               {"modulus", c->modulus},
                               {"p", c->prime},
                               {"k", c->exponent},
                               {"formula", decimal(c->formula)},
                               {"oracle", decimal(c->oracle)}};
    }
    out << doc.dump(2) << '\n';
  } else {
    out << std::left << std::setw(12) << "family" << std::right
        << std::setw(12) << "passed" << std::setw(10) << "failed" << '\n';
    for (const FamilyTally& f : report.families) {
      out << std::left << std::setw(12) << f.name << std::right
          << std::setw(12) << f.passed << std::setw(10) << f.failed << '\n';
    }
    if (const auto& c = report.counterexample) {
      out << "counterexample: family=" << c->family << " m=" << c->m
          << " t=" << c->t;
      if (c->prime) {
        out << " p=" << c->prime << " k=" << c->exponent;
      } else {
        out << " n=" << c->modulus;
      }
      out << " formula=" << c->formula << " oracle=" << c->oracle << '\n';
    }
    out << "result: " << (report.ok() ? "PASS" : "FAIL") << '\n';
  }
  return report.ok() ? kExitOk : kExitMismatch;
}

struct BenchRow {
  std::string kind;
  std::string label;
  std::uint64_t n;
  unsigned m;
  unsigned queries;
  double micros_per_query;
};

template <typename F>
double time_micros(unsigned reps, F&& f) {
  const auto start = std::chrono::steady_clock::now();
  for (unsigned i = 0; i < reps; ++i) f(i);
  const std::chrono::duration<double, std::micro> d =
      std::chrono::steady_clock::now() - start;
  return d.count() / reps;
}

int cmd_bench(const BenchArgs& a, std::ostream& out) {
  std::vector<BenchRow> rows;

  struct Target {
    std::string label;
    std::vector<PrimePower> parts;
  };
  const std::vector<Target> targets = {
      {"2^32", {PrimePower(2, 32)}},
      {"2^32-5", {PrimePower(4294967291ULL, 1)}},
      {"2^20*3^12*7^5*11^2",
       {PrimePower(2, 20), PrimePower(3, 12), PrimePower(7, 5),
        PrimePower(11, 2)}},
      {"2^63-25", {PrimePower(9223372036854775783ULL, 1)}},
  };
  for (const Target& target : targets) {
    Factorization f;
    for (const PrimePower& pp : target.parts) f.n *= pp.modulus();
    f.factors = target.parts;
    for (unsigned m : {2u, 3u}) {
      Count sink = 0;
      const double us = time_micros(a.queries, [&](unsigned i) {
        const std::uint64_t t = (f.n / (i + 2)) * 7 + i;
        sink += count({m, t % f.n, f.n, Variant::All, Policy::FormulaOnly}, f)
                    .value;
      });
      rows.push_back({"formula", target.label, f.n, m, a.queries, us});
    }
  }
  for (std::uint64_t n : a.sizes) {
    const double us =
        time_micros(1, [&](unsigned) { oracle_distribution(3, n, false); });
    rows.push_back({"oracle", std::to_string(n), n, 3, 1, us});
  }

  if (a.json) {
    json doc = json::array();
    for (const BenchRow& r : rows) {
      doc.push_back({{"kind", r.kind},
                     {"label", r.label},
                     {"n", std::to_string(r.n)},
                     {"m", r.m},
                     {"queries", r.queries},
                     {"micros_per_query", r.micros_per_query}});
    }
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  out << std::left << std::setw(9) << "kind" << std::setw(22) << "n"
      << std::setw(4) << "m" << std::right << std::setw(16) << "us/query"
      << '\n';
  for (const BenchRow& r : rows) {
    out << std::left << std::setw(9) << r.kind << std::setw(22) << r.label
        << std::setw(4) << r.m << std::right << std::setw(16) << std::fixed
        << std::setprecision(3) << r.micros_per_query << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  return run(args, out, err, {});
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, const std::vector<FamilyCheck>& families) {
  CLI::App app{"Counts representations of residues as sums of squares mod n",
               "sosmod"};
  app.require_subcommand(1);
  const auto policies =
      CLI::IsMember({"formula-only", "oracle-fallback", "oracle-only"});

  EvalArgs ev;
  CLI::App* eval = app.add_subcommand("eval", "N_m(t, n) for a single residue");
  eval->add_option("-m", ev.m, "number of squares")
      ->required()
      ->check(CLI::PositiveNumber);
  eval->add_option("-t", ev.t, "target residue")->required();
  eval->add_option("-n", ev.n, "modulus")->required()->check(CLI::PositiveNumber);
  eval->add_flag("--units", ev.units, "restrict to units of Z_n");
  eval->add_option("--policy", ev.policy, "evaluation policy")
      ->check(policies)
      ->capture_default_str();
  eval->add_flag("--json", ev.json, "machine-readable output");

  TableArgs tb;
  CLI::App* table = app.add_subcommand("table", "N_m(t, n) for every t");
  table->add_option("-m", tb.m, "number of squares")
      ->required()
      ->check(CLI::PositiveNumber);
  table->add_option("-n", tb.n, "modulus")->required()->check(CLI::PositiveNumber);
  table->add_flag("--units", tb.units, "restrict to units of Z_n");
  table->add_option("--policy", tb.policy, "evaluation policy")
      ->check(policies)
      ->capture_default_str();
  table->add_option("--format", tb.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  table->add_flag("--json", tb.json, "same as --format json");

  VerifyArgs vf;
  CLI::App* verify =
      app.add_subcommand("verify", "closed forms against brute force");
  verify->add_option("--max-pp", vf.options.max_pp,
                     "largest odd prime power for m <= 3")
      ->capture_default_str();
  verify->add_option("--max-k2", vf.options.max_k2, "largest exponent of 2")
      ->check(CLI::Range(1u, 20u))
      ->capture_default_str();
  verify->add_option("--max-p", vf.options.max_p,
                     "largest odd prime for the single-prime family")
      ->capture_default_str();
  verify->add_option("--m-list", vf.options.m_list, "values of m")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  verify->add_option("--samples", vf.options.composite_samples,
                     "random composite moduli")
      ->capture_default_str();
  verify->add_option("--max-composite", vf.options.max_composite,
                     "largest composite modulus")
      ->check(CLI::Range(std::uint64_t{1}, kMaxOracleModulus))
      ->capture_default_str();
  verify->add_option("--seed", vf.options.seed, "sampling seed")
      ->capture_default_str();
  verify->add_flag("--json", vf.json, "machine-readable output");

  BenchArgs bn;
  CLI::App* bench = app.add_subcommand("bench", "latency of both paths");
  bench->add_option("--sizes", bn.sizes, "oracle moduli")
      ->delimiter(',')
      ->check(CLI::Range(std::uint64_t{1}, kMaxOracleModulus));
  bench->add_option("--queries", bn.queries, "formula queries per row")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_flag("--json", bn.json, "machine-readable output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*eval) {
      if (ev.t >= ev.n) {
        err << "error: -t must be smaller than -n\n";
        return kExitUsage;
      }
      return cmd_eval(ev, out);
    }
    if (*table) return cmd_table(tb, out);
    if (*verify) {
      return cmd_verify(vf, families.empty() ? nullptr : &families, out);
    }
    if (*bench) return cmd_bench(bn, out);
  } catch (const FormulaNotCovered& e) {
    err << "error: " << e.what() << '\n';
    return kExitNotCovered;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace sosmod::cli
