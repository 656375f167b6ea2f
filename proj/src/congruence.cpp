#include "stackycovers/congruence.hpp"

#include <algorithm>
#include <set>

#include "stackycovers/errors.hpp"

namespace stacky {

Int LinearForm::eval(const std::map<std::string, Int>& assignment) const {
  Int v = constant;
  for (const auto& [name, c] : coeffs)
    if (c != 0) v += c * assignment.at(name);
  return v;
}

namespace {

struct Progression {  // x ≡ residue (mod period), period >= 1
  Int residue = 0;
  Int period = 1;
};

// Intersect two progressions; nullopt when incompatible.
std::optional<Progression> crt_merge(const Progression& a, const Progression& b) {
  Int g = gcd(a.period, b.period);
  Int diff = b.residue - a.residue;
  if (!divides(g, diff)) return std::nullopt;
  Int m2g = exact_div(b.period, g);
  Progression out;
  out.period = exact_div(a.period, g) * b.period;
  if (m2g == 1) {
    out.residue = mod_floor(a.residue, out.period);
    return out;
  }
  Int inv;
  if (mpz_invert(inv.get_mpz_t(), mod_floor(exact_div(a.period, g), m2g).get_mpz_t(),
                 m2g.get_mpz_t()) == 0)
    return std::nullopt;  // unreachable: a.period/g and m2g are coprime
  Int t = mod_floor(exact_div(diff, g) * inv, m2g);
  out.residue = mod_floor(a.residue + a.period * t, out.period);
  return out;
}

// a x ≡ rhs (mod m) as a progression; nullopt when unsolvable. m > 0.
std::optional<Progression> solve_single(const Int& a, const Int& rhs, const Int& m) {
  Int g = gcd(a, m);  // > 0 since m > 0
  if (!divides(g, rhs)) return std::nullopt;
  Int mg = exact_div(m, g);
  Progression p;
  p.period = mg;
  if (mg == 1) {
    p.residue = 0;
    return p;
  }
  Int inv;
  // a/g is invertible mod m/g
  mpz_invert(inv.get_mpz_t(), mod_floor(exact_div(a, g), mg).get_mpz_t(),
             mg.get_mpz_t());
  p.residue = mod_floor(exact_div(rhs, g) * inv, mg);
  return p;
}

struct Solver {
  const std::vector<Congruence>& system;
  std::vector<std::string> vars;
  Int limit;
  std::map<std::string, Int> assignment;
  // Constraints become checkable once their deepest variable is assigned;
  // index by that depth. Constraints with no variables sit at depth -1
  // conceptually and are checked up front.
  std::vector<std::vector<std::size_t>> by_depth;
  std::vector<Progression> var_progression;  // merged single-var constraints

  bool dfs(std::size_t depth) {
    if (depth == vars.size()) return true;
    const std::string& name = vars[depth];
    if (depth + 1 == vars.size()) return solve_last(name, depth);

    const Progression& pr = var_progression[depth];
    for (Int v = pr.residue; v < limit; v += pr.period) {
      assignment[name] = v;
      if (check_depth(depth) && dfs(depth + 1)) return true;
    }
    assignment.erase(name);
    return false;
  }

  bool check_depth(std::size_t depth) const {
    for (std::size_t idx : by_depth[depth]) {
      const Congruence& c = system[idx];
      if (!divides(c.modulus, c.form.eval(assignment))) return false;
    }
    return true;
  }

  // All remaining constraints are univariate in `name`; intersect their
  // solution progressions exactly.
  bool solve_last(const std::string& name, std::size_t depth) {
    Progression merged = var_progression[depth];
    for (std::size_t idx : by_depth[depth]) {
      const Congruence& c = system[idx];
      auto it = c.form.coeffs.find(name);
      if (it == c.form.coeffs.end() || it->second == 0) {
        // fully assigned already
        Int rest = c.form.constant;
        for (const auto& [n2, co] : c.form.coeffs)
          if (n2 != name && co != 0) rest += co * assignment.at(n2);
        if (!divides(c.modulus, rest)) return false;
        continue;
      }
      Int rest = c.form.constant;
      for (const auto& [n2, co] : c.form.coeffs)
        if (n2 != name && co != 0) rest += co * assignment.at(n2);
      auto p = solve_single(it->second, -rest, c.modulus);
      if (!p) return false;
      auto m = crt_merge(merged, *p);
      if (!m) return false;
      merged = *m;
    }
    if (merged.residue >= limit) return false;
    assignment[name] = merged.residue;
    return true;
  }
};

}  // namespace

std::optional<CongruenceWitness> solve_linear_congruences(
    const std::vector<Congruence>& system, const SearchBounds& bounds) {
  if (system.empty())
    throw EmptySystemError("solve_linear_congruences: no constraints given");
  Int box = 1;
  for (const Congruence& c : system) {
    if (c.modulus <= 0)
      throw DomainError("solve_linear_congruences: moduli must be positive");
    box = lcm(box, c.modulus);
  }

  std::set<std::string> names;
  for (const Congruence& c : system)
    for (const auto& [name, coeff] : c.form.coeffs)
      if (coeff != 0) names.insert(name);

  Solver s{system, {names.begin(), names.end()}, box, {}, {}, {}};
  if (bounds.per_variable_limit && *bounds.per_variable_limit < box)
    s.limit = *bounds.per_variable_limit;
  if (s.limit <= 0) return std::nullopt;

  // Constant constraints must hold outright.
  std::map<std::string, std::size_t> var_index;
  for (std::size_t i = 0; i < s.vars.size(); ++i) var_index[s.vars[i]] = i;
  s.by_depth.resize(s.vars.size());
  s.var_progression.resize(s.vars.size());
  for (std::size_t idx = 0; idx < system.size(); ++idx) {
    const Congruence& c = system[idx];
    std::size_t deepest = 0;
    std::size_t nvars = 0;
    for (const auto& [name, coeff] : c.form.coeffs) {
      if (coeff == 0) continue;
      ++nvars;
      deepest = std::max(deepest, var_index.at(name));
    }
    if (nvars == 0) {
      if (!divides(c.modulus, c.form.constant)) return std::nullopt;
      continue;
    }
    s.by_depth[deepest].push_back(idx);
  }

  // Pre-merge univariate constraints so outer loops step only through
  // admissible residues.
  for (std::size_t i = 0; i < s.vars.size(); ++i) {
    Progression merged;
    for (const Congruence& c : system) {
      std::size_t nvars = 0;
      for (const auto& [name, coeff] : c.form.coeffs)
        if (coeff != 0) ++nvars;
      if (nvars != 1) continue;
      auto it = c.form.coeffs.find(s.vars[i]);
      if (it == c.form.coeffs.end() || it->second == 0) continue;
      auto p = solve_single(it->second, -c.form.constant, c.modulus);
      if (!p) return std::nullopt;
      auto m = crt_merge(merged, *p);
      if (!m) return std::nullopt;
      merged = *m;
    }
    s.var_progression[i] = merged;
  }

  if (s.vars.empty()) {
    // Everything was constant and passed.
    CongruenceWitness w;
    for (const Congruence& c : system)
      w.checked.emplace_back(c.form.constant, c.modulus);
    return w;
  }

  if (!s.dfs(0)) return std::nullopt;

  CongruenceWitness w;
  w.assignment = s.assignment;
  for (const Congruence& c : system)
    w.checked.emplace_back(c.form.eval(s.assignment), c.modulus);
  return w;
}

}  // namespace stacky
