#include "stackycovers/verdict.hpp"

#include <utility>

namespace stacky {

std::string outcome_str(Outcome o) {
  switch (o) {
    case Outcome::Yes: return "yes";
    case Outcome::No: return "no";
    case Outcome::Conditional: return "conditional";
  }
  return "conditional";
}

Verdict Verdict::yes(std::vector<Reason> rs) { return {Outcome::Yes, "", std::move(rs)}; }

Verdict Verdict::no(std::vector<Reason> rs) { return {Outcome::No, "", std::move(rs)}; }

Verdict Verdict::conditional(std::string cond, std::vector<Reason> rs) {
  return {Outcome::Conditional, std::move(cond), std::move(rs)};
}

}  // namespace stacky
