// maxclass: count, zeta, verify, table and dump front ends.
//
// Exit codes: 0 success, 1 disagreement or failed property, 2 usage or
// domain error (exceptional prime, budget exceeded, bad input).

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "maxclass/maxclass.hpp"

namespace {

using maxclass::BigInt;
using nlohmann::json;

constexpr int kExitDisagree = 1;
constexpr int kExitError = 2;

struct CountArgs {
  int n = 0;
  std::uint64_t p = 0;
  unsigned N = 0;
  std::string method = "all";
  std::string format = "text";
  std::uint64_t budget = maxclass::kDefaultEnumerationBudget;
  unsigned threads = 1;
};

struct ZetaArgs {
  int n = 0;
  std::uint64_t p = 0;
  int series = -1;
  std::string format = "text";
};

struct VerifyArgs {
  std::string suite = "all";
  int n = 0;
  std::uint64_t p = 0;
  int N = -1;
  std::string format = "text";
  unsigned threads = 1;
};

struct TableArgs {
  std::vector<int> n;
  std::vector<std::uint64_t> p;
  unsigned max_N = 0;
  std::uint64_t budget = maxclass::kDefaultEnumerationBudget;
  unsigned threads = 1;
};

struct DumpArgs {
  int n = 0;
  std::uint64_t p = 0;
  unsigned N = 0;
  std::string lambda;
};

maxclass::CountMethod parse_method(const std::string& s) {
  if (s == "enum") return maxclass::CountMethod::enumeration;
  if (s == "closed") return maxclass::CountMethod::closed_form;
  if (s == "series") return maxclass::CountMethod::series;
  return maxclass::CountMethod::all;
}

// MAXCLASS_BUDGET overrides any --budget.
std::uint64_t effective_budget(std::uint64_t flag) {
  const char* env = std::getenv("MAXCLASS_BUDGET");
  if (env == nullptr || *env == '\0') return flag;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used == std::string(env).size()) return v;
  } catch (const std::exception&) {
  }
  throw std::invalid_argument(std::string("MAXCLASS_BUDGET is not a nonnegative integer: ") + env);
}

void require_prime(std::uint64_t p) {
  if (!maxclass::is_prime(p)) throw std::invalid_argument("p=" + std::to_string(p) + " is not prime");
}

std::string opt_str(const std::optional<BigInt>& v) { return v ? v->str() : "-"; }

int cmd_count(const CountArgs& a) {
  require_prime(a.p);
  const maxclass::EnumerationOptions options{effective_budget(a.budget), a.threads};
  const maxclass::CountReport report =
      maxclass::count_isoclasses(a.n, a.p, a.N, parse_method(a.method), options);
  const auto agreed = report.agreed_value();

  if (a.format == "json") {
    std::cout << maxclass::to_json(report).dump(2) << '\n';
  } else {
    std::cout << "n=" << report.n << " p=" << report.p << " N=" << report.N << '\n';
    if (report.r_enumerated) std::cout << "enumeration: " << *report.r_enumerated << '\n';
    if (report.r_closed_form) std::cout << "closed form: " << *report.r_closed_form << '\n';
    if (report.r_series) std::cout << "series:      " << *report.r_series << '\n';
    if (report.r_enumerated) {
      std::cout << "census:";
      for (const auto& [size, count] : report.orbit_census) std::cout << ' ' << size << ':' << count;
      std::cout << (report.census_matches_cases ? " (matches cases)" : " (case mismatch)") << '\n';
    }
    if (agreed) {
      std::cout << "r=" << *agreed << ", agree\n";
    } else {
      std::cout << "disagree: enumeration=" << opt_str(report.r_enumerated)
                << " closed=" << opt_str(report.r_closed_form) << " series=" << opt_str(report.r_series)
                << '\n';
    }
  }
  return agreed && report.census_matches_cases ? 0 : kExitDisagree;
}

std::string render_factor_term(const maxclass::Term& t) {
  std::string mono = maxclass::detail::render_monomial(t.monomial);
  if (mono.empty()) return t.coefficient.str();
  if (t.coefficient == 1) return mono;
  if (t.coefficient == -1) return "-" + mono;
  return t.coefficient.str() + " " + mono;
}

std::string rational_str(const maxclass::Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

int cmd_zeta(const ZetaArgs& a) {
  if (a.n < 2) throw std::invalid_argument("n must be at least 2");
  const auto f = maxclass::zeta_closed_form(a.n);
  const auto factor = maxclass::functional_equation_factor(f);
  const bool funceq = maxclass::functional_equation_check(a.n);
  const std::string abscissa = rational_str(maxclass::abscissa(f));

  std::vector<BigInt> series;
  if (a.series >= 0) {
    if (a.p == 0) throw std::invalid_argument("--series requires --p");
    require_prime(a.p);
    maxclass::require_non_exceptional(a.n, a.p);
    series = maxclass::series_coefficients(f, a.p, static_cast<unsigned>(a.series));
  }

  if (a.format == "json") {
    json out = {{"n", a.n},
                {"zeta", maxclass::to_json(f)},
                {"text", maxclass::to_text(f)},
                {"abscissa", abscissa},
                {"funceq", funceq},
                {"funceq_factor", factor ? json(render_factor_term(*factor)) : json(nullptr)}};
    if (a.series >= 0) {
      json coeffs = json::array();
      for (const BigInt& c : series) coeffs.push_back(c.str());
      out["p"] = a.p;
      out["series"] = coeffs;
    }
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << maxclass::to_text(f) << '\n';
    std::cout << "abscissa " << abscissa << '\n';
    if (funceq) {
      std::cout << "funceq OK (factor " << render_factor_term(*factor) << ")\n";
    } else {
      std::cout << "funceq FAILED" << (factor ? " (factor " + render_factor_term(*factor) + ")" : "") << '\n';
    }
    if (a.series >= 0) {
      std::cout << "series p=" << a.p << ':';
      for (std::size_t i = 0; i < series.size(); ++i) std::cout << (i ? ", " : " ") << series[i];
      std::cout << '\n';
    }
  }
  return funceq ? 0 : kExitDisagree;
}

int cmd_verify(const VerifyArgs& a) {
  maxclass::VerifyScope scope;
  if (a.n > 0) scope.n = a.n;
  if (a.p > 0) {
    require_prime(a.p);
    scope.p = a.p;
  }
  if (a.N >= 0) scope.N = static_cast<unsigned>(a.N);
  const maxclass::EnumerationOptions options{effective_budget(maxclass::kDefaultEnumerationBudget), a.threads};
  const auto results = maxclass::run_verify_suite(a.suite, scope, options);

  bool all_passed = true;
  json report = json::array();
  for (const auto& r : results) {
    all_passed = all_passed && r.passed;
    if (a.format == "json") {
      report.push_back({{"suite", r.suite}, {"property", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    } else {
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.suite << ": " << r.name << " (" << r.detail << ")\n";
    }
  }
  if (a.format == "json") {
    std::cout << json{{"suite", a.suite}, {"passed", all_passed}, {"properties", report}}.dump(2) << '\n';
  } else {
    std::cout << (all_passed ? "pass" : "fail") << '\n';
  }
  return all_passed ? 0 : kExitDisagree;
}

// One tab-separated row per (n, p, N); cell failures go in the error column.
int cmd_table(const TableArgs& a) {
  const maxclass::EnumerationOptions options{effective_budget(a.budget), a.threads};
  std::cout << "n\tp\tN\tr_enum\tr_closed\tr_series\tagree\terror\n";
  bool any_disagree = false;
  for (int n : a.n) {
    for (std::uint64_t p : a.p) {
      for (unsigned N = 0; N <= a.max_N; ++N) {
        std::string cells[4] = {"", "", "", ""};
        std::string error;
        try {
          require_prime(p);
          maxclass::require_non_exceptional(n, p);
          maxclass::CountReport report{n, p, N, {}, {}, {}, {}, true};
          try {
            report = maxclass::enumerate_isoclasses(n, p, N, options);
          } catch (const maxclass::guard_error& e) {
            error = e.what();
          }
          report.r_closed_form = N == 0 ? BigInt(1) : maxclass::closed_form_r(n, p, N);
          report.r_series = maxclass::series_r(n, p, N);
          const bool agree = report.agree();
          any_disagree = any_disagree || !agree;
          cells[0] = report.r_enumerated ? report.r_enumerated->str() : "";
          cells[1] = report.r_closed_form->str();
          cells[2] = report.r_series->str();
          cells[3] = agree ? "yes" : "no";
        } catch (const std::exception& e) {
          error = e.what();
        }
        for (char& c : error) {
          if (c == '\t' || c == '\n') c = ' ';
        }
        std::cout << n << '\t' << p << '\t' << N << '\t' << cells[0] << '\t' << cells[1] << '\t' << cells[2]
                  << '\t' << cells[3] << '\t' << error << '\n';
      }
    }
  }
  return any_disagree ? kExitDisagree : 0;
}

std::vector<maxclass::Residue> parse_lambda(const std::string& text) {
  std::vector<maxclass::Residue> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad --lambda entry: " + item);
    out.push_back(v);
  }
  return out;
}

int cmd_dump(const DumpArgs& a) {
  require_prime(a.p);
  const maxclass::PrimePower pp(a.p, a.N);
  const maxclass::LambdaSpec spec(a.n, pp, parse_lambda(a.lambda));
  const maxclass::StandardFormRep rep = maxclass::build_rep(spec);
  std::cout << maxclass::to_json(rep).dump() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Representation counts and zeta functions of the groups M_n of maximal class"};
  app.require_subcommand(1);

  CountArgs count;
  auto* c = app.add_subcommand("count", "Count twist isoclasses r_{p^N}(M_n)");
  c->add_option("--n", count.n, "Nilpotency class n >= 2")->required();
  c->add_option("--p", count.p, "Prime p >= n")->required();
  c->add_option("--N", count.N, "Exponent N (dimension p^N)")->required();
  c->add_option("--method", count.method)->check(CLI::IsMember({"enum", "closed", "series", "all"}));
  c->add_option("--format", count.format)->check(CLI::IsMember({"text", "json"}));
  c->add_option("--budget", count.budget, "Maximum number of enumerated tails");
  c->add_option("--threads", count.threads)->check(CLI::Range(1u, 256u));

  ZetaArgs zeta;
  auto* z = app.add_subcommand("zeta", "Print the closed-form zeta function");
  z->add_option("--n", zeta.n)->required();
  z->add_option("--p", zeta.p, "Prime for the series expansion");
  z->add_option("--series", zeta.series, "Print coefficients of t^0..t^K")->check(CLI::NonNegativeNumber);
  z->add_option("--format", zeta.format)->check(CLI::IsMember({"text", "json"}));

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Run property suites");
  v->add_option("--suite", verify.suite)
      ->check(CLI::IsMember({"simplex", "standardform", "stability", "shout", "counting", "zeta", "oracle", "all"}));
  v->add_option("--n", verify.n);
  v->add_option("--p", verify.p);
  v->add_option("--N", verify.N);
  v->add_option("--format", verify.format)->check(CLI::IsMember({"text", "json"}));
  v->add_option("--threads", verify.threads)->check(CLI::Range(1u, 256u));

  TableArgs table;
  auto* t = app.add_subcommand("table", "Emit a TSV grid of counts");
  t->add_option("--n", table.n)->required()->delimiter(',');
  t->add_option("--p", table.p)->required()->delimiter(',');
  t->add_option("--max-N", table.max_N)->required();
  t->add_option("--budget", table.budget);
  t->add_option("--threads", table.threads)->check(CLI::Range(1u, 256u));

  DumpArgs dump;
  auto* d = app.add_subcommand("dump", "Print a standard form as JSON");
  d->add_option("--n", dump.n)->required();
  d->add_option("--p", dump.p)->required();
  d->add_option("--N", dump.N)->required();
  d->add_option("--lambda", dump.lambda, "Exponents e_1,...,e_n with e_1 = 0")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (c->parsed()) return cmd_count(count);
    if (z->parsed()) return cmd_zeta(zeta);
    if (v->parsed()) return cmd_verify(verify);
    if (t->parsed()) return cmd_table(table);
    if (d->parsed()) return cmd_dump(dump);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
