#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stackycovers/bigint.hpp"

namespace stacky {

// sum coeffs[v] * v + constant
struct LinearForm {
  std::map<std::string, Int> coeffs;
  Int constant = 0;

  Int eval(const std::map<std::string, Int>& assignment) const;
};

// form == 0 (mod modulus), modulus > 0
struct Congruence {
  LinearForm form;
  Int modulus;
};

// A solved system: the variable assignment together with every checked
// (form value, modulus) pair. Each recorded value is divisible by its
// modulus.
struct CongruenceWitness {
  std::map<std::string, Int> assignment;
  std::vector<std::pair<Int, Int>> checked;
};

struct SearchBounds {
  // Optional cap on each variable; defaults to the lcm of all moduli,
  // which is a completeness domain (the solution set is periodic in
  // every variable with period dividing it).
  std::optional<Int> per_variable_limit;
};

// Lexicographically smallest nonnegative solution over variables ordered
// by name, searched in [0, lcm of moduli) per variable. The last
// variable of each branch is resolved exactly by CRT rather than scanned.
// Throws EmptySystemError on zero constraints.
std::optional<CongruenceWitness> solve_linear_congruences(
    const std::vector<Congruence>& system, const SearchBounds& bounds = {});

}  // namespace stacky
