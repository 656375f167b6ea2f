#pragma once

#include <string>
#include <vector>

namespace stacky {

enum class Outcome { Yes, No, Conditional };

std::string outcome_str(Outcome o);

// One step of a verdict's audit trail: a stable rule id plus the
// mathematical statement it applies, so a table consumer can audit the
// verdict directly.
struct Reason {
  std::string rule;
  std::string cite;

  bool operator==(const Reason&) const = default;
};

// Three-valued classification outcome. Conditional always names the
// external fact it depends on.
struct Verdict {
  Outcome outcome = Outcome::Conditional;
  std::string condition;  // nonempty iff outcome == Conditional
  std::vector<Reason> reasons;

  static Verdict yes(std::vector<Reason> rs);
  static Verdict no(std::vector<Reason> rs);
  static Verdict conditional(std::string cond, std::vector<Reason> rs);
};

}  // namespace stacky
