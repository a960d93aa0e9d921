#include "rsv/recognizer.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"
#include "rsv/catalog.hpp"
#include "rsv/criteria.hpp"
#include "rsv/parser.hpp"
#include "rsv/semigroup.hpp"

namespace rsv {

MonogenicProfile monogenic_profile(const IdentitySystem& system) {
  bool periodic = false;
  long long period = 0;
  long long index = std::numeric_limits<long long>::max();

  for (const Identity& id : system.identities) {
    WordProfile pu(id.lhs), pv(id.rhs);
    std::set<Letter> letters = pu.content;
    letters.insert(pv.content.begin(), pv.content.end());

    std::map<Letter, long long> diff;
    bool balanced = true;
    for (Letter x : letters) {
      diff[x] = pu.occ(x) - pv.occ(x);
      if (diff[x] != 0) balanced = false;
    }
    if (balanced) continue;
    periodic = true;

    long long contribution = 0;
    for (const auto& [x, c] : diff) contribution = std::gcd(contribution, std::llabs(c));
    period = std::gcd(period, contribution);

    // Substituting x -> c^(e_x) turns each side into a power of c; the index
    // candidate is the smaller exponent at the grid points nearest all-ones.
    auto side_value = [&](const WordProfile& p, Letter bumped) {
      long long v = 0;
      for (const auto& [x, k] : p.occurrences) v += static_cast<long long>(k) * (x == bumped ? 2 : 1);
      return v;
    };
    std::vector<Letter> grid = {0};  // 0 encodes the all-ones point
    for (const auto& [x, c] : diff) {
      if (c != 0) grid.push_back(x);
    }
    for (Letter bumped : grid) {
      long long a = side_value(pu, bumped);
      long long b = side_value(pv, bumped);
      if (a != b) index = std::min(index, std::min(a, b));
    }
  }

  if (!periodic) return {};
  return {true, static_cast<int>(index), static_cast<int>(period)};
}

namespace {

struct IndicatorId {
  std::string name;
  std::optional<int> n;
};

std::string display_name(const IndicatorId& s) {
  if (s.n) return s.name + "_" + std::to_string(*s.n);
  return s.name;
}

Membership probe(const IndicatorId& s, const IdentitySystem& system, bool use_bruteforce) {
  Membership m{s.name, s.n, true, std::nullopt};
  std::optional<FiniteSemigroup> table;
  if (use_bruteforce) table = catalog(s.name, s.n);
  for (const Identity& id : system.identities) {
    const bool sat =
        use_bruteforce ? satisfies_bruteforce(*table, id) : criterion(s.name, id, s.n);
    if (!sat) {
      m.contained = false;
      m.violated = id;
      break;
    }
  }
  return m;
}

}  // namespace

RecognitionReport rs_recognize(const IdentitySystem& system, const RecognizeOptions& options) {
  RecognitionReport report;
  report.profile = monogenic_profile(system);
  if (!report.profile.periodic) {
    report.verdict = Verdict::kNotPeriodic;
    return report;
  }

  std::vector<IndicatorId> indicators = {
      {"A", {}},        {"B", {}},        {"C_lambda", {}}, {"C_rho", {}},
      {"N3", {}},       {"D", {}},        {"F_lambda", {}}, {"F_rho", {}},
      {"W_lambda", {}}, {"W_rho", {}},    {"L2_1", {}},     {"R2_1", {}},
  };
  for (int n = 1; n <= report.profile.period; ++n) {
    if (report.profile.period % n == 0) indicators.push_back({"K", n});
  }

  report.verdict = Verdict::kRS;
  for (const IndicatorId& s : indicators) {
    Membership m = probe(s, system, options.use_bruteforce);
    if (m.contained && report.verdict == Verdict::kRS) {
      report.verdict = Verdict::kNotRS;
      report.witness = display_name(s);
    }
    report.memberships.push_back(std::move(m));
  }

  for (int n = 1; n <= options.check_kn_up_to; ++n) {
    if (report.profile.period % n == 0) continue;  // already probed above
    report.extra_kn.push_back(probe({"K", n}, system, options.use_bruteforce));
  }
  return report;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kRS: return "RS";
    case Verdict::kNotRS: return "NotRS";
    case Verdict::kNotPeriodic: return "NotPeriodic";
  }
  return {};
}

namespace {

nlohmann::ordered_json membership_json(const Membership& m) {
  nlohmann::ordered_json e;
  e["name"] = m.name;
  if (m.n) e["n"] = *m.n;
  e["contained"] = m.contained;
  if (m.violated) e["violated_identity"] = render(*m.violated);
  return e;
}

}  // namespace

std::string report_json(const RecognitionReport& report) {
  nlohmann::ordered_json j;
  j["verdict"] = verdict_name(report.verdict);
  if (report.witness) j["witness"] = *report.witness;
  j["profile"]["periodic"] = report.profile.periodic;
  if (report.profile.periodic) {
    j["profile"]["r"] = report.profile.index;
    j["profile"]["d"] = report.profile.period;
  }
  j["memberships"] = nlohmann::ordered_json::array();
  for (const Membership& m : report.memberships) j["memberships"].push_back(membership_json(m));
  for (const Membership& m : report.extra_kn) j["memberships"].push_back(membership_json(m));
  return j.dump(2);
}

std::string report_text(const RecognitionReport& report) {
  std::ostringstream out;
  out << "verdict: " << verdict_name(report.verdict) << '\n';
  if (report.verdict == Verdict::kNotPeriodic) {
    out << "  the system has only exponent-balanced consequences for powers, so the\n"
           "  variety is not contained in a periodic variety\n";
    return out.str();
  }
  out << "monogenic profile: index " << report.profile.index << ", period "
      << report.profile.period << '\n';
  if (report.witness) out << "witness: " << *report.witness << " is in the variety\n";
  for (const Membership& m : report.memberships) {
    out << "  " << display_name({m.name, m.n}) << ": "
        << (m.contained ? "contained" : "excluded");
    if (m.violated) out << " (violates " << render(*m.violated) << ")";
    out << '\n';
  }
  for (const Membership& m : report.extra_kn) {
    out << "  extra " << display_name({m.name, m.n}) << ": "
        << (m.contained ? "contained" : "excluded") << '\n';
  }
  return out.str();
}

}  // namespace rsv
