#include <mcg/constraint.hpp>

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace mcg {

namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

bool UnitSpec::is_unit_like(const std::string& var) const {
  return companion(var).has_value();
}

std::optional<std::string> UnitSpec::companion(const std::string& var) const {
  if (names.count(var)) return inv_name(var);
  if (ends_with(var, "_inv")) {
    const std::string base = var.substr(0, var.size() - 4);
    if (names.count(base)) return base;
  }
  return std::nullopt;
}

Poly cancel_units(const Poly& p, const UnitSpec& units) {
  if (units.names.empty()) return p;
  std::vector<Poly::Term> terms;
  for (const Poly::Term& t : p.terms()) {
    Monomial mono = t.mono;
    for (const std::string& u : units.names) {
      const std::string ui = UnitSpec::inv_name(u);
      int eu = 0, ei = 0;
      for (const auto& [v, e] : mono) {
        if (v == u) eu = e;
        if (v == ui) ei = e;
      }
      const int k = std::min(eu, ei);
      if (k == 0) continue;
      Monomial next;
      for (const auto& [v, e] : mono) {
        int keep = e;
        if (v == u || v == ui) keep = e - k;
        if (keep > 0) next.emplace_back(v, keep);
      }
      mono = std::move(next);
    }
    terms.push_back(Poly::Term{std::move(mono), t.coeff});
  }
  return Poly::from_terms(std::move(terms));
}

Matrix<Poly> cancel_units(const Matrix<Poly>& m, const UnitSpec& units) {
  Matrix<Poly> out = m;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      out.at(i, j) = cancel_units(m.at(i, j), units);
  return out;
}

Poly canonical_constraint(Poly p, const UnitSpec& units) {
  p = cancel_units(p, units);
  if (p.is_zero()) return p;
  // Unit factors common to all terms are invertible and can be struck.
  Monomial content = p.monomial_content();
  Monomial strike;
  for (const auto& [v, e] : content)
    if (units.is_unit_like(v)) strike.emplace_back(v, e);
  if (!strike.empty()) {
    Poly divisor = Poly(Rat(1));
    for (const auto& [v, e] : strike)
      divisor = divisor * Poly::variable(v).pow(e);
    const auto q = p.divide_exact(divisor);
    if (!q) throw std::logic_error("canonical_constraint: content division");
    p = *q;
  }
  const Rat c = p.rational_content();
  p = p / c;
  if (p.leading_coeff() < 0) p = -p;
  return p;
}

namespace {

// Deterministic processing order: simplest first.
bool poly_order(const Poly& a, const Poly& b) {
  const int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  const size_t na = a.terms().size(), nb = b.terms().size();
  if (na != nb) return na < nb;
  return a.str() < b.str();
}

}  // namespace

ConstraintSystem ConstraintSystem::of(std::vector<Poly> ps,
                                      const UnitSpec& units) {
  std::vector<Poly> canon;
  for (Poly& p : ps) {
    Poly c = canonical_constraint(std::move(p), units);
    if (!c.is_zero()) canon.push_back(std::move(c));
  }
  std::sort(canon.begin(), canon.end(), poly_order);
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
  return ConstraintSystem{std::move(canon)};
}

bool ConstraintSystem::contains_false() const {
  for (const Poly& p : polys)
    if (p.is_constant() && !p.is_zero()) return true;
  return false;
}

std::set<std::string> ConstraintSystem::variables() const {
  std::set<std::string> vars;
  for (const Poly& p : polys) {
    const auto pv = p.variables();
    vars.insert(pv.begin(), pv.end());
  }
  return vars;
}

std::vector<std::string> ConstraintSystem::strs() const {
  std::vector<std::string> out;
  out.reserve(polys.size());
  for (const Poly& p : polys) out.push_back(p.str());
  return out;
}

ConstraintSystem extract(const Matrix<Poly>& lhs, const Matrix<Poly>& rhs,
                         const UnitSpec& units) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols())
    throw std::invalid_argument("extract: shape mismatch");
  std::vector<Poly> diffs;
  for (int i = 0; i < lhs.rows(); ++i)
    for (int j = 0; j < lhs.cols(); ++j) {
      Poly d = lhs.at(i, j) - rhs.at(i, j);
      if (!d.is_zero()) diffs.push_back(std::move(d));
    }
  return ConstraintSystem::of(std::move(diffs), units);
}

bool verify_assignment(const ConstraintSystem& sys, const Assignment& a,
                       const UnitSpec& units) {
  for (const auto& [var, val] : a)
    if (units.is_unit_like(var) && cancel_units(val, units).is_zero())
      return false;
  for (const Poly& p : sys.polys)
    if (!cancel_units(p.substitute(a), units).is_zero()) return false;
  return true;
}

namespace {

// c * m with every unit variable in m invertible; the formal inverse swaps
// each variable for its companion.
std::optional<Poly> unit_term_inverse(const Poly& a, const UnitSpec& units) {
  if (a.is_zero() || a.terms().size() != 1) return std::nullopt;
  const Poly::Term& t = a.terms().front();
  Poly inv = Poly(Rat(1) / t.coeff);
  for (const auto& [v, e] : t.mono) {
    const auto comp = units.companion(v);
    if (!comp) return std::nullopt;
    inv = inv * Poly::variable(*comp).pow(e);
  }
  return inv;
}

std::optional<std::vector<Rat>> univariate_coeffs(const Poly& p,
                                                  const std::string& var) {
  const int d = p.degree_in(var);
  std::vector<Rat> coeffs(static_cast<size_t>(d) + 1, Rat(0));
  for (int k = 0; k <= d; ++k) {
    const Poly ck = p.coeff_of(var, k);
    if (!ck.is_constant()) return std::nullopt;
    coeffs[static_cast<size_t>(k)] = ck.constant_value();
  }
  return coeffs;
}

std::vector<Int> small_divisors(const Int& n) {
  std::vector<Int> out;
  const Int m = n < 0 ? Int(-n) : n;
  if (m == 0 || m > 1000000) return out;
  for (Int d = 1; d * d <= m; ++d)
    if (m % d == 0) {
      out.push_back(d);
      if (d * d != m) out.push_back(m / d);
    }
  std::sort(out.begin(), out.end());
  return out;
}

Rat eval_poly(const std::vector<Rat>& coeffs, const Rat& x) {
  Rat acc(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

std::vector<Rat> deflate(const std::vector<Rat>& coeffs, const Rat& root) {
  // Synthetic division by (x - root); remainder is known to vanish.
  const size_t d = coeffs.size() - 1;
  std::vector<Rat> out(d, Rat(0));
  Rat carry(0);
  for (size_t k = d; k >= 1; --k) {
    carry = coeffs[k] + carry * root;
    out[k - 1] = carry;
  }
  return out;
}

// All roots when the polynomial splits into rational linear factors;
// nullopt when it does not (or when coefficients are too big to search).
std::optional<std::vector<Rat>> rational_roots(std::vector<Rat> coeffs) {
  std::vector<Rat> roots;
  while (coeffs.size() > 1) {
    while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
    const size_t d = coeffs.size() - 1;
    if (d == 0) break;
    if (d == 1) {
      roots.push_back(-coeffs[0] / coeffs[1]);
      break;
    }
    if (coeffs[0] == 0) {
      roots.push_back(Rat(0));
      coeffs.erase(coeffs.begin());
      continue;
    }
    if (d == 2) {
      const Rat disc = coeffs[1] * coeffs[1] - 4 * coeffs[2] * coeffs[0];
      const auto s = rat_sqrt(disc);
      if (!s) return std::nullopt;
      roots.push_back((-coeffs[1] + *s) / (2 * coeffs[2]));
      roots.push_back((-coeffs[1] - *s) / (2 * coeffs[2]));
      break;
    }
    // Higher degree: rational root search after clearing denominators.
    Int lcm = 1;
    for (const Rat& c : coeffs) {
      const Int den = rat_den(c);
      lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
    }
    std::vector<Int> ic;
    ic.reserve(coeffs.size());
    for (const Rat& c : coeffs) ic.push_back(rat_num(c * Rat(lcm)));
    const auto ps = small_divisors(ic.front());
    const auto qs = small_divisors(ic.back());
    if (ps.empty() || qs.empty()) return std::nullopt;
    std::optional<Rat> found;
    for (const Int& p : ps) {
      for (const Int& q : qs) {
        for (int sign = 1; sign >= -1 && !found; sign -= 2) {
          const Rat cand = Rat(sign * p, q);
          if (eval_poly(coeffs, cand) == 0) found = cand;
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) return std::nullopt;
    roots.push_back(*found);
    coeffs = deflate(coeffs, *found);
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

struct WorkItem {
  Assignment subst;
  ConstraintSystem sys;
  std::vector<std::string> log;
};

void compose(Assignment& subst, const std::string& var, const Poly& value,
             const UnitSpec& units) {
  Assignment one{{var, value}};
  for (auto& [k, v] : subst) v = cancel_units(v.substitute(one), units);
  subst[var] = value;
}

}  // namespace

SolveResult greedy_solve(const ConstraintSystem& sys, const UnitSpec& units,
                         int branch_limit) {
  SolveResult result;
  std::deque<WorkItem> queue;
  queue.push_back(WorkItem{{}, sys, {}});
  int leaves = 1;

  while (!queue.empty()) {
    WorkItem item = std::move(queue.front());
    queue.pop_front();

    if (item.sys.contains_false()) {
      item.log.push_back("contradiction: " + item.sys.polys.front().str() +
                         " = 0 has no solution");
      result.rejected.push_back(
          SolveBranch{std::move(item.subst), std::move(item.sys),
                      std::move(item.log)});
      continue;
    }

    // Elimination: a variable whose linear coefficient is invertible.
    bool eliminated = false;
    for (const Poly& p : item.sys.polys) {
      for (const std::string& var : p.variables()) {
        const auto split = p.split_linear(var);
        if (!split) continue;
        const auto inv = unit_term_inverse(split->first, units);
        if (!inv) continue;
        Poly value = cancel_units(-split->second * *inv, units);
        const auto comp = units.companion(var);
        if (comp && value.is_zero()) {
          // A unit cannot vanish; force the contradiction explicitly.
          auto polys = item.sys.polys;
          polys.push_back(Poly(Rat(1)));
          item.log.push_back("unit " + var + " forced to 0 by " + p.str());
          queue.push_front(WorkItem{std::move(item.subst),
                                    ConstraintSystem{std::move(polys)},
                                    std::move(item.log)});
          eliminated = true;
          break;
        }
        // Never rewrite a unit in terms of its own companion; that renames
        // instead of eliminating.
        if (comp && value.variables().count(*comp)) continue;
        std::optional<Poly> comp_value;
        if (comp) {
          comp_value = unit_term_inverse(value, units);
          if (!comp_value) continue;  // companion would be inexpressible
        }
        item.log.push_back("eliminate " + var + " = " + value.str() +
                           "  [from " + p.str() + "]");
        Assignment step{{var, value}};
        if (comp) step[*comp] = *comp_value;
        std::vector<Poly> next;
        next.reserve(item.sys.polys.size());
        for (const Poly& q : item.sys.polys) next.push_back(q.substitute(step));
        compose(item.subst, var, value, units);
        if (comp) compose(item.subst, *comp, *comp_value, units);
        queue.push_front(WorkItem{std::move(item.subst),
                                  ConstraintSystem::of(std::move(next), units),
                                  std::move(item.log)});
        eliminated = true;
        break;
      }
      if (eliminated) break;
    }
    if (eliminated) continue;

    // Branching on a univariate member that splits over Q.
    bool branched = false;
    for (const Poly& p : item.sys.polys) {
      const auto var = p.sole_variable();
      if (!var) continue;
      const auto coeffs = univariate_coeffs(p, *var);
      if (!coeffs) continue;
      const auto roots = rational_roots(*coeffs);
      if (!roots) continue;
      if (roots->empty()) {
        // Fully factored with no rational root: impossible for a
        // nonconstant univariate that splits; treat as contradiction.
        auto polys = item.sys.polys;
        polys.push_back(Poly(Rat(1)));
        queue.push_front(WorkItem{std::move(item.subst),
                                  ConstraintSystem{std::move(polys)},
                                  std::move(item.log)});
        branched = true;
        break;
      }
      if (leaves + static_cast<int>(roots->size()) - 1 > branch_limit) {
        item.log.push_back("branch limit reached; leaving " + p.str() +
                           " unsplit");
        continue;
      }
      leaves += static_cast<int>(roots->size()) - 1;
      for (auto it = roots->rbegin(); it != roots->rend(); ++it) {
        WorkItem child;
        child.subst = item.subst;
        child.log = item.log;
        child.log.push_back("branch " + *var + " = " + rat_str(*it) +
                            "  [root of " + p.str() + "]");
        const Poly value{*it};
        if (units.is_unit_like(*var) && *it == 0) {
          auto polys = item.sys.polys;
          polys.push_back(Poly(Rat(1)));
          child.log.push_back("unit " + *var + " cannot be 0");
          child.sys = ConstraintSystem{std::move(polys)};
          queue.push_front(std::move(child));
          continue;
        }
        Assignment step{{*var, value}};
        if (const auto comp = units.companion(*var))
          step[*comp] = Poly(Rat(1) / *it);
        std::vector<Poly> next;
        for (const Poly& q : item.sys.polys) next.push_back(q.substitute(step));
        compose(child.subst, *var, value, units);
        if (const auto comp = units.companion(*var))
          compose(child.subst, *comp, Poly(Rat(1) / *it), units);
        child.sys = ConstraintSystem::of(std::move(next), units);
        queue.push_front(std::move(child));
      }
      branched = true;
      break;
    }
    if (branched) continue;

    // Terminal: nothing to eliminate or branch on.
    result.branches.push_back(SolveBranch{std::move(item.subst),
                                          std::move(item.sys),
                                          std::move(item.log)});
  }

  if (result.branches.empty()) {
    result.status = SolveStatus::Inconsistent;
  } else {
    result.status = SolveStatus::FullySolved;
    for (const SolveBranch& b : result.branches)
      if (!b.residual.empty()) result.status = SolveStatus::PartiallySolved;
  }
  return result;
}

}  // namespace mcg
