#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <mcg/scalar.hpp>

namespace mcg {

// A monomial: (variable name, exponent) pairs, names strictly ascending,
// exponents positive. The empty monomial is 1.
using Monomial = std::vector<std::pair<std::string, int>>;

int mono_degree(const Monomial& m);
// Graded-lexicographic order; ties broken lexicographically with variables
// ordered by ascending name, earlier name more significant. Returns -1/0/1.
int mono_cmp(const Monomial& a, const Monomial& b);
Monomial mono_mul(const Monomial& a, const Monomial& b);
std::optional<Monomial> mono_div(const Monomial& a, const Monomial& b);
std::string mono_str(const Monomial& m);

bool valid_var_name(const std::string& name);

// Multivariate polynomial over Q in canonical form: terms sorted descending
// in the graded-lex order, no zero coefficients.
class Poly {
 public:
  struct Term {
    Monomial mono;
    Rat coeff;
    bool operator==(const Term& o) const {
      return coeff == o.coeff && mono == o.mono;
    }
  };

  Poly() = default;
  explicit Poly(const Rat& c);
  explicit Poly(long c);
  static Poly variable(const std::string& name);
  static Poly constant(const Rat& c);

  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Value of a constant polynomial (zero polynomial gives 0); throws otherwise.
  Rat constant_value() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly operator*(const Rat& c) const;
  Poly operator/(const Rat& c) const;
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly pow(long k) const;  // k >= 0

  std::set<std::string> variables() const;
  int degree_in(const std::string& var) const;
  int total_degree() const;  // zero polynomial gives -1
  // Coefficient of var^k as a polynomial in the remaining variables.
  Poly coeff_of(const std::string& var, int k) const;
  // If the polynomial is A*var + B with A, B free of var, returns {A, B}.
  std::optional<std::pair<Poly, Poly>> split_linear(const std::string& var) const;
  // The single variable of a nonconstant univariate polynomial.
  std::optional<std::string> sole_variable() const;

  Poly substitute(const std::map<std::string, Poly>& values) const;
  // Exact quotient, or nullopt when the divisor does not divide exactly.
  std::optional<Poly> divide_exact(const Poly& divisor) const;

  // Componentwise minimum of the exponents over all terms.
  Monomial monomial_content() const;
  // Positive gcd of the coefficients (0 for the zero polynomial).
  Rat rational_content() const;
  const Rat& leading_coeff() const;  // requires nonzero

  std::string str() const;
  static Poly parse(const std::string& text);

  // Construction from raw terms (normalizes: merges, drops zeros, sorts).
  static Poly from_terms(std::vector<Term> terms);

 private:
  std::vector<Term> terms_;
};

Poly operator*(const Rat& c, const Poly& p);

struct ParseError : std::runtime_error {
  size_t position;
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

}  // namespace mcg
