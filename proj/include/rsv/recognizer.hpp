#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rsv/identity.hpp"

namespace rsv {

/// Shape of the one-generated free semigroup of the variety: the cyclic
/// semigroup of the given index and period, or free when nothing bounds it.
struct MonogenicProfile {
  bool periodic = false;
  int index = 0;   // meaningful only when periodic
  int period = 0;  // meaningful only when periodic
};

MonogenicProfile monogenic_profile(const IdentitySystem& system);

struct Membership {
  std::string name;
  std::optional<int> n;
  bool contained;
  std::optional<Identity> violated;  // an identity of the system failing in it
};

enum class Verdict { kRS, kNotRS, kNotPeriodic };

struct RecognitionReport {
  Verdict verdict;
  std::optional<std::string> witness;  // the contained indicator, when NotRS
  MonogenicProfile profile;
  std::vector<Membership> memberships;
  std::vector<Membership> extra_kn;  // populated by check_kn_up_to
};

struct RecognizeOptions {
  bool use_bruteforce = false;  // substitute the exhaustive oracle for the criteria
  int check_kn_up_to = 0;       // also probe K_n for every n up to this bound
};

/// The top-level decision procedure: periodicity analysis, then a membership
/// check against each indicator (K_n only for n dividing the period).
RecognitionReport rs_recognize(const IdentitySystem& system,
                               const RecognizeOptions& options = {});

std::string verdict_name(Verdict v);
std::string report_json(const RecognitionReport& report);
std::string report_text(const RecognitionReport& report);

}  // namespace rsv
