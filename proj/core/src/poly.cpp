#include <mcg/poly.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

namespace mcg {

const char* ring_name(Ring r) {
  switch (r) {
    case Ring::Z: return "Z";
    case Ring::Q: return "Q";
    case Ring::GF2: return "GF2";
    case Ring::PolyQ: return "PolyQ";
  }
  throw std::logic_error("unknown ring");
}

Ring ring_from_name(const std::string& name) {
  if (name == "Z") return Ring::Z;
  if (name == "Q") return Ring::Q;
  if (name == "GF2") return Ring::GF2;
  if (name == "PolyQ") return Ring::PolyQ;
  throw std::invalid_argument("unknown ring name: " + name);
}

Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }
bool rat_is_integer(const Rat& r) { return rat_den(r) == 1; }

std::string int_str(const Int& x) { return x.str(); }

std::string rat_str(const Rat& r) {
  if (rat_is_integer(r)) return rat_num(r).str();
  return rat_num(r).str() + "/" + rat_den(r).str();
}

std::string gf2_str(GF2 x) { return x.v ? "1" : "0"; }

Int parse_int(const std::string& text) {
  try {
    return Int(text);
  } catch (const std::exception&) {
    throw ParseError("invalid integer literal '" + text + "'", 0);
  }
}

Rat parse_rat(const std::string& text) {
  try {
    return Rat(text);
  } catch (const std::exception&) {
    throw ParseError("invalid rational literal '" + text + "'", 0);
  }
}

GF2 parse_gf2(const std::string& text) {
  if (text == "0") return GF2(0);
  if (text == "1") return GF2(1);
  throw ParseError("invalid GF2 literal '" + text + "'", 0);
}

std::optional<Rat> rat_sqrt(const Rat& r) {
  if (r < 0) return std::nullopt;
  Int n = rat_num(r), d = rat_den(r);
  Int sn = boost::multiprecision::sqrt(n);
  Int sd = boost::multiprecision::sqrt(d);
  if (sn * sn != n || sd * sd != d) return std::nullopt;
  return Rat(sn, sd);
}

int mono_degree(const Monomial& m) {
  int deg = 0;
  for (const auto& [v, e] : m) deg += e;
  return deg;
}

int mono_cmp(const Monomial& a, const Monomial& b) {
  int da = mono_degree(a), db = mono_degree(b);
  if (da != db) return da < db ? -1 : 1;
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first == b[j].first) {
      if (a[i].second != b[j].second)
        return a[i].second < b[j].second ? -1 : 1;
      ++i, ++j;
    } else if (a[i].first < b[j].first) {
      return 1;  // a has positive exponent on an earlier variable
    } else {
      return -1;
    }
  }
  if (i < a.size()) return 1;
  if (j < b.size()) return -1;
  return 0;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first == b[j].first) {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i, ++j;
    } else if (a[i].first < b[j].first) {
      out.push_back(a[i++]);
    } else {
      out.push_back(b[j++]);
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (j < b.size()) out.push_back(b[j++]);
  return out;
}

std::optional<Monomial> mono_div(const Monomial& a, const Monomial& b) {
  Monomial out;
  size_t i = 0;
  for (const auto& [v, e] : b) {
    while (i < a.size() && a[i].first < v) out.push_back(a[i++]);
    if (i >= a.size() || a[i].first != v || a[i].second < e)
      return std::nullopt;
    if (a[i].second > e) out.emplace_back(v, a[i].second - e);
    ++i;
  }
  while (i < a.size()) out.push_back(a[i++]);
  return out;
}

std::string mono_str(const Monomial& m) {
  std::string s;
  for (size_t k = 0; k < m.size(); ++k) {
    if (k) s += "*";
    s += m[k].first;
    if (m[k].second != 1) s += "^" + std::to_string(m[k].second);
  }
  return s;
}

bool valid_var_name(const std::string& name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

Poly::Poly(const Rat& c) {
  if (c != 0) terms_.push_back({Monomial{}, c});
}

Poly::Poly(long c) : Poly(Rat(c)) {}

Poly Poly::variable(const std::string& name) {
  if (!valid_var_name(name))
    throw std::invalid_argument("invalid variable name '" + name + "'");
  Poly p;
  p.terms_.push_back({Monomial{{name, 1}}, Rat(1)});
  return p;
}

Poly Poly::constant(const Rat& c) { return Poly(c); }

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.empty());
}

Rat Poly::constant_value() const {
  if (terms_.empty()) return Rat(0);
  if (terms_.size() == 1 && terms_[0].mono.empty()) return terms_[0].coeff;
  throw std::domain_error("polynomial is not constant: " + str());
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::map<Monomial, Rat, bool (*)(const Monomial&, const Monomial&)> acc(
      [](const Monomial& a, const Monomial& b) { return mono_cmp(a, b) > 0; });
  for (auto& t : terms) {
    auto [it, fresh] = acc.emplace(std::move(t.mono), t.coeff);
    if (!fresh) it->second += t.coeff;
  }
  Poly p;
  for (auto& [m, c] : acc)
    if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Poly Poly::operator+(const Poly& o) const {
  Poly out;
  out.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = mono_cmp(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      out.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      out.terms_.push_back(o.terms_[j++]);
    } else {
      Rat s = terms_[i].coeff + o.terms_[j].coeff;
      if (s != 0) out.terms_.push_back({terms_[i].mono, s});
      ++i, ++j;
    }
  }
  while (i < terms_.size()) out.terms_.push_back(terms_[i++]);
  while (j < o.terms_.size()) out.terms_.push_back(o.terms_[j++]);
  return out;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<Term> prods;
  prods.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_)
      prods.push_back({mono_mul(a.mono, b.mono), a.coeff * b.coeff});
  return from_terms(std::move(prods));
}

Poly& Poly::operator+=(const Poly& o) { return *this = *this + o; }
Poly& Poly::operator-=(const Poly& o) { return *this = *this - o; }
Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly Poly::operator*(const Rat& c) const {
  if (c == 0) return Poly();
  Poly out = *this;
  for (auto& t : out.terms_) t.coeff *= c;
  return out;
}

Poly Poly::operator/(const Rat& c) const {
  if (c == 0) throw std::domain_error("polynomial division by zero scalar");
  return *this * (Rat(1) / c);
}

Poly operator*(const Rat& c, const Poly& p) { return p * c; }

Poly Poly::pow(long k) const {
  if (k < 0) throw std::domain_error("negative polynomial power");
  Poly result(1L);
  Poly base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

std::set<std::string> Poly::variables() const {
  std::set<std::string> vars;
  for (const auto& t : terms_)
    for (const auto& [v, e] : t.mono) vars.insert(v);
  return vars;
}

int Poly::degree_in(const std::string& var) const {
  int deg = 0;
  for (const auto& t : terms_)
    for (const auto& [v, e] : t.mono)
      if (v == var) deg = std::max(deg, e);
  return deg;
}

int Poly::total_degree() const {
  if (terms_.empty()) return -1;
  int deg = 0;
  for (const auto& t : terms_) deg = std::max(deg, mono_degree(t.mono));
  return deg;
}

Poly Poly::coeff_of(const std::string& var, int k) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    int e = 0;
    Monomial rest;
    for (const auto& [v, ex] : t.mono) {
      if (v == var)
        e = ex;
      else
        rest.emplace_back(v, ex);
    }
    if (e == k) out.push_back({rest, t.coeff});
  }
  return from_terms(std::move(out));
}

std::optional<std::pair<Poly, Poly>> Poly::split_linear(
    const std::string& var) const {
  if (degree_in(var) != 1) return std::nullopt;
  return std::make_pair(coeff_of(var, 1), coeff_of(var, 0));
}

std::optional<std::string> Poly::sole_variable() const {
  auto vars = variables();
  if (vars.size() != 1) return std::nullopt;
  return *vars.begin();
}

Poly Poly::substitute(const std::map<std::string, Poly>& values) const {
  Poly out;
  for (const auto& t : terms_) {
    Poly term(t.coeff);
    for (const auto& [v, e] : t.mono) {
      auto it = values.find(v);
      if (it == values.end()) {
        term *= Poly::variable(v).pow(e);
      } else {
        term *= it->second.pow(e);
      }
    }
    out += term;
  }
  return out;
}

std::optional<Poly> Poly::divide_exact(const Poly& divisor) const {
  if (divisor.is_zero()) return std::nullopt;
  Poly rem = *this;
  std::vector<Term> quot;
  const Term& dlead = divisor.terms_.front();
  while (!rem.is_zero()) {
    const Term& rlead = rem.terms_.front();
    auto m = mono_div(rlead.mono, dlead.mono);
    if (!m) return std::nullopt;
    Term qt{*m, rlead.coeff / dlead.coeff};
    Poly qp;
    qp.terms_.push_back(qt);
    rem -= qp * divisor;
    quot.push_back(std::move(qt));
  }
  return from_terms(std::move(quot));
}

Monomial Poly::monomial_content() const {
  if (terms_.empty()) return {};
  Monomial content = terms_[0].mono;
  for (size_t i = 1; i < terms_.size() && !content.empty(); ++i) {
    const Monomial& m = terms_[i].mono;
    Monomial next;
    size_t a = 0, b = 0;
    while (a < content.size() && b < m.size()) {
      if (content[a].first == m[b].first) {
        next.emplace_back(content[a].first,
                          std::min(content[a].second, m[b].second));
        ++a, ++b;
      } else if (content[a].first < m[b].first) {
        ++a;
      } else {
        ++b;
      }
    }
    content = std::move(next);
  }
  return content;
}

Rat Poly::rational_content() const {
  Int g = 0, l = 1;
  for (const auto& t : terms_) {
    g = boost::multiprecision::gcd(g, rat_num(t.coeff));
    l = boost::multiprecision::lcm(l, rat_den(t.coeff));
  }
  if (g == 0) return Rat(0);
  if (g < 0) g = -g;
  return Rat(g, l);
}

const Rat& Poly::leading_coeff() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
  return terms_.front().coeff;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    Rat c = t.coeff;
    if (i == 0) {
      if (c < 0) {
        s += "-";
        c = -c;
      }
    } else {
      s += (c < 0) ? " - " : " + ";
      if (c < 0) c = -c;
    }
    std::string ms = mono_str(t.mono);
    if (ms.empty()) {
      s += rat_str(c);
    } else if (c == 1) {
      s += ms;
    } else {
      s += rat_str(c) + "*" + ms;
    }
  }
  return s;
}

namespace {

struct PolyParser {
  const std::string& text;
  size_t pos = 0;

  explicit PolyParser(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }

  bool consume(char c) {
    if (peek_is(c)) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

  Poly parse_expr() {
    Poly acc;
    bool neg = false;
    skip_ws();
    if (consume('-')) neg = true;
    else consume('+');
    Poly t = parse_product();
    acc = neg ? -t : t;
    for (;;) {
      skip_ws();
      if (consume('+')) {
        acc += parse_product();
      } else if (consume('-')) {
        acc -= parse_product();
      } else {
        break;
      }
    }
    return acc;
  }

  Poly parse_product() {
    Poly acc = parse_power();
    for (;;) {
      skip_ws();
      if (consume('*')) {
        acc *= parse_power();
      } else {
        break;
      }
    }
    return acc;
  }

  Poly parse_power() {
    Poly base = parse_atom();
    skip_ws();
    if (consume('^')) {
      skip_ws();
      size_t start = pos;
      long e = parse_small_int();
      if (e < 0) fail("negative exponent");
      (void)start;
      return base.pow(e);
    }
    return base;
  }

  long parse_small_int() {
    skip_ws();
    size_t start = pos;
    bool neg = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      neg = text[pos] == '-';
      ++pos;
    }
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail("expected integer");
    long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > 1000000) fail("exponent too large");
      ++pos;
    }
    (void)start;
    return neg ? -v : v;
  }

  Poly parse_atom() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    char c = text[pos];
    if (c == '(') {
      ++pos;
      Poly inner = parse_expr();
      skip_ws();
      if (!consume(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
      Int num(text.substr(start, pos - start));
      skip_ws();
      if (pos < text.size() && text[pos] == '/') {
        size_t save = pos;
        ++pos;
        skip_ws();
        if (pos < text.size() &&
            std::isdigit(static_cast<unsigned char>(text[pos]))) {
          size_t dstart = pos;
          while (pos < text.size() &&
                 std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
          Int den(text.substr(dstart, pos - dstart));
          if (den == 0) fail("zero denominator");
          return Poly(Rat(num, den));
        }
        pos = save;
      }
      return Poly(Rat(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) ||
              text[pos] == '_'))
        ++pos;
      return Poly::variable(text.substr(start, pos - start));
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

Poly Poly::parse(const std::string& text) {
  PolyParser p(text);
  Poly out = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size())
    throw ParseError("trailing characters in polynomial", p.pos);
  return out;
}

}  // namespace mcg
