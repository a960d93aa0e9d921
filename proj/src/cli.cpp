#include "rsv/cli.hpp"

#include <atomic>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "rsv/bases.hpp"
#include "rsv/catalog.hpp"
#include "rsv/criteria.hpp"
#include "rsv/parser.hpp"
#include "rsv/recognizer.hpp"
#include "rsv/semigroup.hpp"

namespace rsv {

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kParse = 2;
constexpr int kViolation = 3;
constexpr int kBudget = 4;

std::optional<int> opt(int value) {
  return value > 0 ? std::optional<int>(value) : std::nullopt;
}

/// Words over the first `letters` letters with 1 <= length <= max_len,
/// shortest first.
std::vector<Word> enumerate_words(int letters, int max_len) {
  std::vector<Word> out;
  std::vector<std::string> layer;
  for (int i = 0; i < letters; ++i) layer.push_back(std::string(1, static_cast<char>('a' + i)));
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::string> next;
    for (const std::string& w : layer) {
      out.push_back(Word(w));
      if (len < max_len) {
        for (int i = 0; i < letters; ++i) next.push_back(w + static_cast<char>('a' + i));
      }
    }
    layer = std::move(next);
  }
  return out;
}

/// True when the first occurrences of letters across lhs then rhs read a, b, c, ...
bool is_canonical(const Identity& id) {
  char next = 'a';
  std::set<Letter> seen;
  for (const std::string* side : {&id.lhs.str(), &id.rhs.str()}) {
    for (char c : *side) {
      if (seen.insert(c).second) {
        if (c != next) return false;
        ++next;
      }
    }
  }
  return true;
}

int cmd_check(const std::string& name, int n_flag, int d_flag, const std::string& identity_text,
              bool oracle, std::uint64_t budget, std::ostream& out, std::ostream& err) {
  Identity id = parse_identity(identity_text);
  std::optional<int> n = opt(n_flag);
  bool verdict = criterion(name, id, n);
  out << (verdict ? "holds" : "does not hold") << '\n';
  if (!oracle) return kOk;

  FiniteSemigroup s = catalog(name, n, opt(d_flag));
  if (bruteforce_cost(s, id) > budget) {
    err << "warning: brute force enumerates " << bruteforce_cost(s, id)
        << " assignments (budget " << budget << ")\n";
  }
  bool ground = satisfies_bruteforce(s, id);
  out << "oracle: " << (ground ? "holds" : "does not hold") << '\n';
  out << "agreement: " << (ground == verdict ? "yes" : "NO") << '\n';
  return ground == verdict ? kOk : kViolation;
}

int cmd_recognize(const std::string& path, bool json, bool oracle, int all_kn,
                  std::ostream& out, std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << "cannot open '" << path << "'\n";
    return kUsage;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  IdentitySystem system = parse_system(buffer.str(), path);

  RecognizeOptions options;
  options.use_bruteforce = oracle;
  options.check_kn_up_to = all_kn;
  RecognitionReport report = rs_recognize(system, options);
  out << (json ? report_json(report) : report_text(report)) << '\n';

  for (const Membership& m : report.extra_kn) {
    if (m.contained && report.verdict == Verdict::kRS) {
      err << "discrepancy: K_" << *m.n << " is contained although no divisor-indexed K_n is\n";
      return kViolation;
    }
  }
  return kOk;
}

int cmd_tables(const std::string& name, int n_flag, int d_flag, std::ostream& out) {
  out << table_json(catalog(name, opt(n_flag), opt(d_flag)), opt(n_flag)) << '\n';
  return kOk;
}

int cmd_fuzz(const std::string& name, int n_flag, int d_flag, int letters, int max_len, int jobs,
             std::uint64_t budget, std::ostream& out, std::ostream& err) {
  std::optional<int> n = opt(n_flag);
  FiniteSemigroup s = catalog(name, n, opt(d_flag));

  std::uint64_t assignments = 1;
  for (int i = 0; i < letters; ++i) assignments *= static_cast<std::uint64_t>(s.size());
  if (assignments > budget) {
    err << "warning: " << assignments << " assignments per word exceed the budget of "
        << budget << '\n';
  }

  const BulkOracle oracle(s, letters, max_len);
  const std::vector<Word> words = enumerate_words(letters, max_len);

  std::atomic<std::uint64_t> checked{0};
  std::atomic<std::uint64_t> mismatches{0};
  std::mutex report_mutex;
  std::vector<std::string> examples;

  auto work = [&](int worker) {
    for (std::size_t i = static_cast<std::size_t>(worker); i < words.size();
         i += static_cast<std::size_t>(jobs)) {
      for (const Word& v : words) {
        Identity id{words[i], v};
        if (!is_canonical(id)) continue;
        ++checked;
        if (criterion(name, id, n) != oracle.holds(id)) {
          ++mismatches;
          std::lock_guard<std::mutex> lock(report_mutex);
          if (examples.size() < 10) examples.push_back(render(id));
        }
      }
    }
  };

  if (jobs <= 1) {
    jobs = 1;
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(work, t);
    for (auto& t : pool) t.join();
  }

  out << mismatches.load() << " mismatches / " << checked.load() << " identities checked\n";
  for (const std::string& e : examples) out << "  mismatch: " << e << '\n';
  return mismatches.load() == 0 ? kOk : kViolation;
}

int cmd_derive(const std::string& basis_name, int n_flag, const std::string& identity_text,
               int max_len, std::size_t max_states, std::ostream& out) {
  Identity id = parse_identity(identity_text);
  Basis basis = basis_catalog(basis_name, opt(n_flag));
  DeriveResult result = derive_bounded(basis, id, max_len, max_states);
  switch (result.status) {
    case DeriveStatus::kFound:
      out << render(*result.trace);
      out << "derived in " << result.trace->steps.size() << " step(s), "
          << result.states_explored << " state(s) explored\n";
      return kOk;
    case DeriveStatus::kNotFound:
      out << "not found: the whole length-" << max_len << " ball was explored ("
          << result.states_explored << " states) without reaching the right side\n";
      return kOk;
    case DeriveStatus::kBudgetExceeded:
      out << "budget exceeded after " << result.states_explored
          << " states; absence is not a refutation\n";
      return kBudget;
  }
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"identity checking for the indicator Burnside semigroups and "
               "recognition of Rees-Sushkevich varieties"};
  app.require_subcommand(1);

  std::string semigroup, identity_text, file, basis_name;
  int n_flag = 0, d_flag = 0, letters = 2, max_len = 4, jobs = 1;
  int derive_max_len = 12;
  std::size_t max_states = 1'000'000;
  bool oracle = false, json = false;
  int all_kn = 0;
  std::uint64_t budget = 50'000'000;

  CLI::App* check = app.add_subcommand("check", "decide one identity in one semigroup");
  check->add_option("--semigroup", semigroup, "catalog name")->required();
  check->add_option("--n", n_flag, "parameter for K, C, C2n, Crd");
  check->add_option("--d", d_flag, "period parameter for Crd");
  check->add_option("--identity", identity_text, "identity, e.g. \"aba=bab\"")->required();
  check->add_flag("--oracle", oracle, "also run the exhaustive oracle and compare");
  check->add_option("--budget", budget, "assignment-count warning threshold");

  CLI::App* recognize = app.add_subcommand("recognize", "classify an identity system");
  recognize->add_option("--file", file, "identity system, one identity per line")->required();
  recognize->add_flag("--json", json, "emit the JSON report");
  recognize->add_flag("--oracle", oracle, "use brute-force membership instead of the criteria");
  recognize->add_option("--all-kn", all_kn, "additionally probe K_n for all n up to this bound");

  CLI::App* tables = app.add_subcommand("tables", "dump a catalog multiplication table as JSON");
  tables->add_option("--semigroup", semigroup, "catalog name")->required();
  tables->add_option("--n", n_flag, "parameter for K, C, C2n, Crd");
  tables->add_option("--d", d_flag, "period parameter for Crd");

  CLI::App* fuzz = app.add_subcommand("fuzz", "exhaustively compare criterion vs oracle");
  fuzz->add_option("--semigroup", semigroup, "catalog name")->required();
  fuzz->add_option("--n", n_flag, "parameter for K, C, C2n, Crd");
  fuzz->add_option("--d", d_flag, "period parameter for Crd");
  fuzz->add_option("--letters", letters, "number of distinct letters")->required();
  fuzz->add_option("--max-len", max_len, "maximum side length")->required();
  fuzz->add_option("--jobs", jobs, "worker threads");
  fuzz->add_option("--budget", budget, "assignment-count warning threshold");

  CLI::App* derive = app.add_subcommand("derive", "search a bounded derivation");
  derive->add_option("--basis", basis_name, "basis name")->required();
  derive->add_option("--n", n_flag, "parameter for K and C bases");
  derive->add_option("--identity", identity_text, "identity to derive")->required();
  derive->add_option("--max-len", derive_max_len, "longest intermediate word");
  derive->add_option("--max-states", max_states, "state budget");

  try {
    std::vector<const char*> argv = {"rsv"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  try {
    if (app.got_subcommand(check)) {
      return cmd_check(semigroup, n_flag, d_flag, identity_text, oracle, budget, out, err);
    }
    if (app.got_subcommand(recognize)) {
      return cmd_recognize(file, json, oracle, all_kn, out, err);
    }
    if (app.got_subcommand(tables)) {
      return cmd_tables(semigroup, n_flag, d_flag, out);
    }
    if (app.got_subcommand(fuzz)) {
      return cmd_fuzz(semigroup, n_flag, d_flag, letters, max_len, jobs, budget, out, err);
    }
    if (app.got_subcommand(derive)) {
      return cmd_derive(basis_name, n_flag, identity_text, derive_max_len, max_states, out);
    }
  } catch (const ParseError& e) {
    err << "parse error";
    if (e.line > 0) err << " at line " << e.line;
    if (e.column > 0) err << ", column " << e.column;
    err << ": " << e.what() << '\n';
    return kParse;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace rsv
