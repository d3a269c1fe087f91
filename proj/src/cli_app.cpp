#include "spinhurwitz/cli_app.hpp"

#include <cstdlib>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "spinhurwitz/character_table.hpp"
#include "spinhurwitz/checks.hpp"
#include "spinhurwitz/degeneration.hpp"
#include "spinhurwitz/errors.hpp"
#include "spinhurwitz/monodromy.hpp"
#include "spinhurwitz/series.hpp"
#include "spinhurwitz/spin_deg3.hpp"

namespace spinhurwitz {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitDisagreement = 3;
constexpr int kExitBudget = 4;

json rational_json(const Rational& v) {
  return json{{"numerator", numerator(v).str()}, {"denominator", denominator(v).str()}};
}

std::uint64_t parse_budget_text(const std::string& text, const std::string& origin) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument(origin + " must be a nonnegative integer, got '" + text + "'");
  }
  return std::stoull(text);
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("SPINHURWITZ_BUDGET")) {
    return parse_budget_text(env, "SPINHURWITZ_BUDGET");
  }
  return kDefaultMonodromyBudget;
}

struct MethodValue {
  std::string method;
  Rational value;
};

// Prints {"query":..., "results":[...], "agreement":...} and reports whether
// all methods agreed.  The agreement field appears once several methods ran.
bool emit_record(const json& query, const std::vector<MethodValue>& results) {
  bool agree = true;
  for (const MethodValue& r : results) {
    if (r.value != results.front().value) {
      agree = false;
    }
  }
  json out;
  out["query"] = query;
  out["results"] = json::array();
  for (const MethodValue& r : results) {
    out["results"].push_back(json{{"method", r.method}, {"value", rational_json(r.value)}});
  }
  if (results.size() > 1) {
    out["agreement"] = agree;
  }
  std::cout << out.dump(2) << "\n";
  return agree;
}

int cmd_spin3(int genus, const std::string& parity_text, int k, const std::string& method) {
  const SpinQuery q{genus, parse_parity(parity_text), k};
  q.validate();

  const bool transfer_ok = q.genus >= 2;
  const bool eop_ok = q.genus == 1 && q.parity == Parity::odd;
  if (method == "transfer" && !transfer_ok) {
    throw DomainError("transfer method requires genus >= 2");
  }
  if (method == "eop" && !eop_ok) {
    throw DomainError("eop method is the genus-1 odd-parity formula");
  }

  SpinEngine engine;
  std::vector<MethodValue> results;
  if (method == "closed" || method == "all") {
    results.push_back({"closed", closed_form(q)});
  }
  if (method == "recursion" || method == "all") {
    results.push_back({"recursion", engine.recursion(q)});
  }
  if (method == "eop" || (method == "all" && eop_ok)) {
    results.push_back({"eop", central_character_genus1_odd(q.insertions)});
  }
  if (method == "transfer" || (method == "all" && transfer_ok)) {
    results.push_back({"transfer", transfer_matrix_eval(q)});
  }

  const json query{{"genus", q.genus},
                   {"parity", std::string(1, parity_symbol(q.parity))},
                   {"insertions", q.insertions}};
  return emit_record(query, results) ? kExitOk : kExitDisagreement;
}

int cmd_hurwitz(int degree, int genus, const std::vector<std::string>& profile_texts,
                const std::string& method, std::uint64_t budget) {
  HurwitzQuery q;
  q.degree = degree;
  q.genus = genus;
  for (const std::string& text : profile_texts) {
    q.profiles.push_back(Partition::parse(text));
  }
  q.validate();
  if (forced_chi(q.degree, q.genus, q.profiles) % 2 != 0) {
    throw DomainError("no cover exists: total branching forces an odd Euler characteristic");
  }

  std::vector<MethodValue> results;
  if (method == "burnside" || method == "both") {
    results.push_back({"burnside", burnside_hurwitz(q)});
  }
  if (method == "monodromy" || method == "both") {
    results.push_back({"monodromy", monodromy_hurwitz(q, budget)});
  }

  json profiles = json::array();
  for (const Partition& m : q.profiles) {
    profiles.push_back(m.to_string());
  }
  const json query{{"degree", q.degree}, {"genus", q.genus}, {"profiles", profiles}};
  return emit_record(query, results) ? kExitOk : kExitDisagreement;
}

int cmd_table(int h_max, int k_max, const std::string& format) {
  struct Row {
    int h;
    Parity p;
    int k;
    Rational value;
  };
  std::vector<Row> rows;
  SpinEngine engine;
  for (int h = 0; h <= h_max; ++h) {
    for (Parity p : {Parity::even, Parity::odd}) {
      if (h == 0 && p == Parity::odd) {
        continue;
      }
      for (int k = 0; k <= k_max; ++k) {
        const SpinQuery q{h, p, k};
        const Rational value = closed_form(q);
        bool agree = engine.recursion(q) == value;
        if (h >= 2) {
          agree = agree && transfer_matrix_eval(q) == value;
        }
        if (h == 1 && p == Parity::odd) {
          agree = agree && central_character_genus1_odd(k) == value;
        }
        if (!agree) {
          std::cerr << "internal disagreement at h=" << h << ", parity=" << parity_symbol(p)
                    << ", k=" << k << "\n";
          return kExitDisagreement;
        }
        rows.push_back({h, p, k, value});
      }
    }
  }

  if (format == "csv") {
    std::cout << "h,parity,k,numerator,denominator\n";
    for (const Row& row : rows) {
      std::cout << row.h << ',' << parity_symbol(row.p) << ',' << row.k << ','
                << numerator(row.value).str() << ',' << denominator(row.value).str() << "\n";
    }
    return kExitOk;
  }
  json out;
  out["rows"] = json::array();
  for (const Row& row : rows) {
    out["rows"].push_back(json{{"h", row.h},
                               {"parity", std::string(1, parity_symbol(row.p))},
                               {"k", row.k},
                               {"value", rational_json(row.value)}});
  }
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int cmd_check(const std::string& suite, std::uint64_t budget) {
  std::vector<CheckResult> results;
  const auto append = [&results](std::vector<CheckResult> more) {
    for (CheckResult& r : more) {
      results.push_back(std::move(r));
    }
  };
  if (suite == "spin" || suite == "all") {
    append(run_spin_checks());
  }
  if (suite == "oracle" || suite == "all") {
    append(run_oracle_checks(budget));
  }
  if (suite == "identities" || suite == "all") {
    append(run_identity_checks());
  }

  json out;
  out["suite"] = suite;
  out["checks"] = json::array();
  for (const CheckResult& r : results) {
    json entry{{"name", r.name}, {"passed", r.passed}};
    if (!r.passed) {
      entry["detail"] = r.detail;
    }
    out["checks"].push_back(entry);
  }
  const bool ok = all_passed(results);
  out["passed"] = ok;
  std::cout << out.dump(2) << "\n";
  return ok ? kExitOk : kExitDisagreement;
}

int cmd_series(const std::string& direction, const std::vector<std::string>& coefficient_texts) {
  std::vector<Rational> input;
  for (const std::string& text : coefficient_texts) {
    input.push_back(parse_rational(text));
  }
  const std::vector<Rational> output = direction == "disconnected"
                                           ? disconnected_from_connected(input)
                                           : connected_from_disconnected(input);
  json out = json::array();
  for (const Rational& v : output) {
    out.push_back(rational_json(v));
  }
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Degree-3 spin Hurwitz numbers by independent routes, with oracles"};
  app.require_subcommand(1);

  // spin3
  int genus = 0;
  std::string parity_text = "+";
  int k = 0;
  std::string spin_method = "all";
  CLI::App* spin3 = app.add_subcommand("spin3", "spin Hurwitz number for k profile-(3) insertions");
  spin3->add_option("--genus,-g", genus, "target genus h")->required();
  spin3->add_option("--parity", parity_text, "theta parity, + or -")->capture_default_str();
  spin3->add_option("--k", k, "number of (3)-insertions")->capture_default_str();
  spin3->add_option("--method", spin_method, "recursion|closed|eop|transfer|all")
      ->check(CLI::IsMember({"recursion", "closed", "eop", "transfer", "all"}))
      ->capture_default_str();

  // hurwitz
  int degree = 1;
  int target_genus = 0;
  std::vector<std::string> profile_texts;
  std::string hurwitz_method = "both";
  std::string budget_text;
  CLI::App* hurwitz = app.add_subcommand("hurwitz", "ordinary Hurwitz number by oracle methods");
  hurwitz->add_option("--degree,-d", degree, "cover degree")->required();
  hurwitz->add_option("--genus,-g", target_genus, "target genus h")->required();
  hurwitz->add_option("--profile", profile_texts,
                      "ramification profile, e.g. \"2,1\" or \"1^3\" (repeatable)");
  hurwitz->add_option("--method", hurwitz_method, "burnside|monodromy|both")
      ->check(CLI::IsMember({"burnside", "monodromy", "both"}))
      ->capture_default_str();
  hurwitz->add_option("--budget", budget_text, "monodromy work budget (multiplications)");

  // table
  int h_max = 3;
  int k_max = 8;
  std::string format = "csv";
  CLI::App* table = app.add_subcommand("table", "table of spin values, all methods cross-checked");
  table->add_option("--h-max", h_max, "largest genus")->capture_default_str();
  table->add_option("--k-max", k_max, "largest insertion count")->capture_default_str();
  table->add_option("--format", format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  // check
  std::string suite = "all";
  std::string check_budget_text;
  CLI::App* check = app.add_subcommand("check", "run the self-audit suites");
  check->add_option("--suite", suite, "spin|oracle|identities|all")
      ->check(CLI::IsMember({"spin", "oracle", "identities", "all"}))
      ->capture_default_str();
  check->add_option("--budget", check_budget_text, "monodromy work budget (multiplications)");

  // series
  std::string direction;
  std::vector<std::string> coefficient_texts;
  CLI::App* series = app.add_subcommand("series", "connected/disconnected transform");
  series->add_option("--direction", direction, "disconnected|connected")
      ->check(CLI::IsMember({"disconnected", "connected"}))
      ->required();
  series->add_option("coefficients", coefficient_texts,
                     "degree 1..N coefficients, e.g. 1 1/2 4/3");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;  // 0 is --help/--version
  }

  try {
    if (spin3->parsed()) {
      return cmd_spin3(genus, parity_text, k, spin_method);
    }
    if (hurwitz->parsed()) {
      const std::uint64_t budget = budget_text.empty()
                                       ? default_budget()
                                       : parse_budget_text(budget_text, "--budget");
      return cmd_hurwitz(degree, target_genus, profile_texts, hurwitz_method, budget);
    }
    if (table->parsed()) {
      if (h_max < 0 || k_max < 0) {
        throw DomainError("table bounds must be >= 0");
      }
      return cmd_table(h_max, k_max, format);
    }
    if (check->parsed()) {
      const std::uint64_t budget = check_budget_text.empty()
                                       ? default_budget()
                                       : parse_budget_text(check_budget_text, "--budget");
      return cmd_check(suite, budget);
    }
    if (series->parsed()) {
      return cmd_series(direction, coefficient_texts);
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace spinhurwitz
