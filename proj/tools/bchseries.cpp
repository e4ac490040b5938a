// Command-line front end: series terms, single coefficients, censuses and
// verification suites. Data goes to stdout, diagnostics to stderr.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "bch/census.hpp"
#include "bch/errors.hpp"
#include "bch/goldberg.hpp"
#include "bch/reinsch.hpp"
#include "bch/report.hpp"
#include "bch/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> variant_names() {
  std::vector<std::string> out;
  for (bch::Variant v : bch::kAllVariants) out.emplace_back(bch::variant_name(v));
  return out;
}

int run_terms(const std::string& variant, int order, const std::string& format, bool quiet,
              const bch::EngineOptions& opts) {
  if (order < 1) throw UsageError("--order must be at least 1");
  const bch::VariantPreset p = bch::preset(variant);
  const auto terms = bch::series_terms(p, static_cast<std::size_t>(order), opts);
  if (format == "json") {
    std::cout << bch::report::dump(bch::report::terms_json(p.variant, terms));
  } else if (format == "csv") {
    std::cout << "degree,word,num,den\n";
    for (const auto& t : terms)
      for (const auto& term : t.body)
        std::cout << t.degree << "," << term.word.to_string() << "," << term.coeff.numerator().get_str() << ","
                  << term.coeff.denominator().get_str() << "\n";
  } else {
    std::cout << bch::report::terms_text(p.variant, terms, quiet);
  }
  return kOk;
}

int run_goldberg(const std::string& text, const std::string& mode) {
  const bch::Word w = bch::Word::parse(text);
  if (w.empty()) throw UsageError("word must be non-empty");
  if (mode == "engine") {
    std::cout << bch::engine_coefficient(w) << "\n";
    return kOk;
  }
  if (mode == "oracle") {
    std::cout << bch::goldberg_direct(w) << "\n";
    return kOk;
  }
  const bch::Rational engine = bch::engine_coefficient(w);
  const bch::Rational oracle = bch::goldberg_direct(w);
  std::cout << "engine " << engine << "\n"
            << "oracle " << oracle << "\n";
  if (engine != oracle) {
    std::cerr << "engine and oracle disagree for " << w << "\n";
    return kVerifyFailed;
  }
  return kOk;
}

int run_census(int max_n, const std::string& variant, const std::string& format, const bch::EngineOptions& opts) {
  if (max_n < 2) throw UsageError("--max must be at least 2");
  const auto records = bch::census_table(2, static_cast<std::size_t>(max_n), bch::preset(variant), opts);
  if (format == "json")
    std::cout << bch::report::dump(bch::report::census_json(records));
  else if (format == "text")
    std::cout << bch::report::census_text(records);
  else
    std::cout << bch::report::census_csv(records);
  return kOk;
}

int run_verify(const std::string& suite, int max_n, const std::string& format, const bch::EngineOptions& opts) {
  if (max_n < 1) throw UsageError("--max must be at least 1");
  const bch::SuiteResult result = bch::run_suite(bch::parse_suite(suite), static_cast<std::size_t>(max_n), opts);
  if (format == "json")
    std::cout << bch::report::dump(result.to_json());
  else
    std::cout << result.to_text();
  return result.passed() ? kOk : kVerifyFailed;
}

int run_profile(int order, const std::string& format) {
  if (order < 1) throw UsageError("--order must be at least 1");
  const auto profile = bch::letter_occurrence_profile(static_cast<std::size_t>(order));
  if (format == "json") {
    std::cout << bch::report::dump(bch::report::profile_json(profile));
    return kOk;
  }
  std::cout << "n = " << profile.n << ", " << profile.terms << " non-zero terms\n";
  for (const auto& [k, c] : profile.x_runs) std::cout << "X^" << k << " runs: " << c << "\n";
  for (const auto& [k, c] : profile.y_runs) std::cout << "Y^" << k << " runs: " << c << "\n";
  std::cout << "X per position:";
  for (auto c : profile.x_per_position) std::cout << " " << c;
  std::cout << "\nY per position:";
  for (auto c : profile.y_per_position) std::cout << " " << c;
  std::cout << "\ntotal X letters: " << profile.x_letters() << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Baker-Campbell-Hausdorff series terms and Goldberg coefficients"};
  app.require_subcommand(1);

  unsigned threads = 1;
  app.add_option("--threads", threads, "Worker threads for matrix products")->check(CLI::Range(1U, 256U));

  std::string variant = "standard";
  std::string format;
  int order = 0;
  int max_n = 0;
  bool quiet = false;

  auto* terms = app.add_subcommand("terms", "Print the series terms of degree 1..N");
  terms->add_option("--variant", variant, "Series variant")->check(CLI::IsMember(variant_names()));
  terms->add_option("--order", order, "Truncation order N")->required();
  terms->add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  terms->add_flag("--quiet", quiet, "Print term counts only");

  std::string word;
  std::string mode = "engine";
  auto* goldberg = app.add_subcommand("goldberg", "Goldberg coefficient of one word");
  goldberg->add_option("word,--word", word, "Word such as X^2YX")->required();
  goldberg->add_option("--mode", mode, "engine, oracle or both")->check(CLI::IsMember({"engine", "oracle", "both"}));

  auto* census = app.add_subcommand("census", "Count non-zero coefficients for n = 2..max");
  census->add_option("--max", max_n, "Largest word length")->required();
  census->add_option("--variant", variant, "Series variant")->check(CLI::IsMember(variant_names()));
  census->add_option("--format", format, "csv, json or text")->check(CLI::IsMember({"csv", "json", "text"}));

  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run an invariant suite");
  verify->add_option("suite", suite, "properties, bounds, dynkin, oracle or commutator-forms")
      ->required()
      ->check(CLI::IsMember({"properties", "bounds", "dynkin", "oracle", "commutator-forms"}));
  verify->add_option("--max", max_n, "Largest degree")->required();
  verify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* profile = app.add_subcommand("profile", "Letter and run occurrences in z_n");
  profile->add_option("--order", order, "Degree n")->required();
  profile->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  bch::EngineOptions opts;
  opts.threads = threads;

  try {
    if (*terms) return run_terms(variant, order, format, quiet, opts);
    if (*goldberg) return run_goldberg(word, mode);
    if (*census) return run_census(max_n, variant, format, opts);
    if (*verify) return run_verify(suite, max_n, format, opts);
    if (*profile) return run_profile(order, format);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const bch::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const bch::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
