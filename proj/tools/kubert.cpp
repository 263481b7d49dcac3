#include <atomic>
#include <cstdlib>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "kubert/acceptance.hpp"

using namespace kubert;

namespace {

enum Exit { kOk = 0, kUsage = 1, kDomain = 2, kVerifyFailed = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rational-valued flags, stored as text until the subcommand runs.
using Flags = std::map<std::string, std::string>;

void add_params(CLI::App* cmd, Flags& flags, const std::vector<std::string>& names) {
  for (const auto& n : names) cmd->add_option("--" + n, flags[n], "Rational parameter " + n);
}

Rational to_rational(const std::string& name, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::exception& e) {
    throw UsageError("--" + name + ": " + e.what());
  }
}

ParamMap collect(const Flags& flags) {
  ParamMap out;
  for (const auto& [k, v] : flags)
    if (!v.empty()) out[k] = to_rational(k, v);
  return out;
}

const Rational& need(const ParamMap& p, const std::string& name) {
  auto it = p.find(name);
  if (it == p.end()) throw UsageError("missing --" + name);
  return it->second;
}

std::vector<Rational> family_params(int l, const ParamMap& p) {
  if (l == 3) return {need(p, "a1"), need(p, "a3")};
  return {need(p, "c")};
}

json ok(json payload) { return {{"status", "ok"}, {"payload", std::move(payload)}, {"diagnostics", json::array()}}; }

json error_result(const std::string& code, const std::string& message) {
  return {{"status", "error"}, {"error", {{"code", code}, {"message", message}}}, {"diagnostics", json::array()}};
}

bool is_degenerate(const NontrivialPointCertificate& c) {
  if (!c.excluded_reason) return false;
  const std::string& r = *c.excluded_reason;
  return r.rfind("singular curve", 0) == 0 || r.rfind("torsion point", 0) == 0;
}

json certificate_result(const NontrivialPointCertificate& cert) {
  json out = ok(certificate_to_json(cert));
  if (is_degenerate(cert)) out["status"] = "degenerate";
  if (cert.excluded_reason) out["diagnostics"].push_back(*cert.excluded_reason);
  return out;
}

// "name=lo:hi" over integers
struct Range {
  std::string name;
  long lo = 0, hi = 0;
};

Range parse_range(const std::string& text) {
  auto eq = text.find('='), colon = text.find(':');
  if (eq == std::string::npos || colon == std::string::npos || colon < eq)
    throw UsageError("range '" + text + "' is not of the form name=lo:hi");
  Range r{text.substr(0, eq), 0, 0};
  try {
    r.lo = std::stol(text.substr(eq + 1, colon - eq - 1));
    r.hi = std::stol(text.substr(colon + 1));
  } catch (const std::exception&) {
    throw UsageError("range '" + text + "' has non-integer bounds");
  }
  if (r.lo > r.hi) throw UsageError("range '" + text + "' is empty");
  return r;
}

// Every tuple num/den with lo <= num <= hi, 1 <= den <= max_den, in lowest terms, in input order.
std::vector<ParamMap> expand(const std::vector<Range>& ranges, long max_den) {
  std::vector<ParamMap> out{{}};
  for (const auto& r : ranges) {
    std::vector<Rational> values;
    for (long d = 1; d <= max_den; ++d)
      for (long n = r.lo; n <= r.hi; ++n) {
        Rational q = make_rational(n, d);
        if (q.get_den() == d) values.push_back(q);
      }
    std::vector<ParamMap> next;
    for (const auto& base : out)
      for (const auto& v : values) {
        ParamMap m = base;
        m[r.name] = v;
        next.push_back(std::move(m));
      }
    out = std::move(next);
  }
  return out;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("KUBERT_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError("KUBERT_SEED is not an unsigned integer");
    }
  }
  return 1;
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kubert families, Velu quotients, nontrivial points and cyclic polynomials over Q"};
  app.require_subcommand(1);
  app.fallthrough();
  std::uint64_t seed = 0;
  int primes = kDefaultPrimeBudget;
  bool seed_given = false;
  app.add_option("--seed", seed, "Seed for sampled checks (default: KUBERT_SEED or 1)")->each([&](const std::string&) {
    seed_given = true;
  });
  app.add_option("--primes", primes, "Prime budget for Frobenius sampling")->check(CLI::Range(kMinPrimeBudget, 100000));

  int l = 0, row = 0;
  bool as_printed = false;

  auto* family = app.add_subcommand("family", "Kubert curve with its rational point of order l");
  Flags family_flags;
  family->add_option("--l", l, "Level (3..10 or 12)")->required();
  add_params(family, family_flags, {"c", "a1", "a3"});

  auto* quotient = app.add_subcommand("quotient", "Velu quotient by the order-l point");
  Flags quotient_flags;
  std::string norm = "tabulated";
  quotient->add_option("--l", l, "Level")->required();
  quotient->add_option("--normalization", norm, "standard | kernel_trace | tabulated")
      ->check(CLI::IsMember({"standard", "kernel_trace", "tabulated"}));
  add_params(quotient, quotient_flags, {"c", "a1", "a3"});

  auto* construct = app.add_subcommand("construct", "Certify the explicit point on the quotient curve");
  Flags construct_flags;
  construct->add_option("--l", l, "Level (3, 4, 5 or 6)")->required();
  construct->add_option("--row", row, "Row for l=5 (1, 2 or 3)");
  construct->add_flag("--as-printed", as_printed, "Row 1 of l=5 with the printed c = (z^2-3)/4");
  add_params(construct, construct_flags, {"z", "t", "m", "a1", "u1", "u", "v", "v0"});

  auto* galois = app.add_subcommand("galois", "Galois group of a polynomial of degree 3..6");
  Flags galois_flags;
  std::string poly_text, family_name_text;
  bool backed = false;
  auto* poly_opt = galois->add_option("--poly", poly_text, "Polynomial in x, e.g. \"x^5 - x - 1\"");
  auto* fam_opt = galois->add_option("--family", family_name_text, "Family name (see polyfam)");
  auto* fiber_opt = galois->add_option("--l", l, "Fiber polynomial of a construction at level l");
  poly_opt->excludes(fam_opt)->excludes(fiber_opt);
  fam_opt->excludes(fiber_opt);
  galois->add_option("--row", row, "Row for l=5");
  galois->add_flag("--construction-backed", backed, "Treat --poly as coming from a certified construction");
  galois->add_flag("--as-printed", as_printed, "Row 1 of l=5 with the printed formula");
  add_params(galois, galois_flags, {"n", "c", "s", "u", "S", "T", "t", "v", "z", "m", "a1", "u1", "v0"});

  auto* polyfam = app.add_subcommand("polyfam", "Evaluate a polynomial family");
  Flags polyfam_flags;
  polyfam->add_option("--family", family_name_text, "pncl5 | brumer | darmon | shanks | gras | ptilde-cubic | ptilde-quartic")
      ->required();
  add_params(polyfam, polyfam_flags, {"n", "c", "s", "u", "S", "T", "t", "v"});

  auto* sweep = app.add_subcommand("sweep", "Certificates over a parameter grid, one JSON line per tuple");
  std::vector<std::string> range_texts;
  long max_den = 1;
  unsigned jobs = 1;
  sweep->add_option("--l", l, "Level (3, 4, 5 or 6)")->required();
  sweep->add_option("--row", row, "Row for l=5");
  sweep->add_option("--range", range_texts, "name=lo:hi over integer numerators (repeatable)")->required();
  sweep->add_option("--den", max_den, "Also use denominators 2..den")->check(CLI::Range(1L, 1000L));
  sweep->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  sweep->add_flag("--as-printed", as_printed, "Row 1 of l=5 with the printed formula");

  auto* verify = app.add_subcommand("verify-paper", "Run the acceptance battery AC-1..AC-12");
  bool verify_json = false, verbose = false;
  verify->add_flag("--as-printed", as_printed, "Row 1 of l=5 with the printed formula");
  verify->add_flag("--json", verify_json, "Print the summary as JSON");
  verify->add_flag("-v,--verbose", verbose, "Print every check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (!seed_given) seed = default_seed();

    if (*family) {
      auto p = collect(family_flags);
      auto fam = kubert_curve(l, family_params(l, p));
      print(ok({{"l", l},
                {"params", params_to_json(p)},
                {"curve", curve_to_json(fam.curve)},
                {"point", point_to_json(fam.A)},
                {"order", *order_of_point(fam.curve, fam.A, l)}}));
    } else if (*quotient) {
      auto p = collect(quotient_flags);
      auto fam = kubert_curve(l, family_params(l, p));
      auto iso = velu_quotient(fam.curve, fam.A, l, parse_normalization(norm));
      json payload = isogeny_to_json(iso);
      payload["codomain_b_cubic"] = poly_to_json(iso.codomain.b_form().cubic());
      print(ok(payload));
    } else if (*construct) {
      ConstructionInput in{l, row, collect(construct_flags), as_printed};
      print(certificate_result(certify(in)));
    } else if (*galois) {
      auto p = collect(galois_flags);
      if (*fiber_opt) {
        auto res = cyclic_from_fiber({l, row, p, as_printed}, primes);
        print(ok({{"polynomial", family_to_json(res.polynomial)},
                  {"ascii", poly_to_ascii(res.polynomial.poly)},
                  {"report", galois_to_json(res.report)}}));
      } else {
        QPoly f;
        json source;
        if (*poly_opt) {
          try {
            f = parse_poly(poly_text);
          } catch (const DomainError& e) {
            throw UsageError(std::string("--poly: ") + e.what());
          }
          source = poly_to_json(f);
        } else if (*fam_opt) {
          auto fam = parse_family(family_name_text);
          if (!fam) throw UsageError("unknown family '" + family_name_text + "'");
          auto fp = make_family(*fam, p);
          f = fp.poly;
          source = family_to_json(fp);
        } else {
          throw UsageError("galois needs --poly, --family or --l");
        }
        print(ok({{"polynomial", source}, {"ascii", poly_to_ascii(f)}, {"report", galois_to_json(galois_group(f, primes, backed))}}));
      }
    } else if (*polyfam) {
      auto fam = parse_family(family_name_text);
      if (!fam || *fam == Family::fiber) throw UsageError("unknown family '" + family_name_text + "'");
      auto fp = make_family(*fam, collect(polyfam_flags));
      json payload = family_to_json(fp);
      payload["ascii"] = poly_to_ascii(fp.poly);
      payload["text"] = format(fp.poly, "x");
      print(ok(payload));
    } else if (*sweep) {
      std::vector<Range> ranges;
      for (const auto& t : range_texts) ranges.push_back(parse_range(t));
      auto tuples = expand(ranges, max_den);
      std::vector<std::string> lines(tuples.size());
      std::atomic<std::size_t> next{0};
      auto worker = [&] {
        for (std::size_t i = next++; i < tuples.size(); i = next++) {
          ConstructionInput in{l, row, tuples[i], as_printed};
          json line;
          try {
            line = certificate_result(certify(in));
          } catch (const DomainError& e) {
            line = error_result("domain_error", e.what());
            line["input"] = input_to_json(in);
          }
          lines[i] = line.dump();
        }
      };
      std::vector<std::thread> pool;
      for (unsigned k = 1; k < jobs; ++k) pool.emplace_back(worker);
      worker();
      for (auto& t : pool) t.join();
      for (const auto& line : lines) std::cout << line << "\n";
    } else if (*verify) {
      AcceptanceOptions opts;
      opts.seed = seed;
      opts.primes = primes;
      opts.as_printed = as_printed;
      auto rep = run_acceptance(opts);
      if (verify_json)
        print(report_to_json(rep));
      else
        print_report(std::cout, rep, verbose);
      return rep.all_pass() ? kOk : kVerifyFailed;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    print(error_result("domain_error", e.what()));
    return kDomain;
  }
  return kOk;
}
