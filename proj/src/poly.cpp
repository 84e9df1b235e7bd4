#include "aca/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace aca {

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
  std::uint64_t da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
  std::uint64_t db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MultiPoly::MultiPoly(Field f, std::vector<std::string> vars)
    : field_(f), vars_(std::move(vars)) {}

MultiPoly MultiPoly::constant(Field f, std::vector<std::string> vars, const Scalar& c) {
  MultiPoly p(f, std::move(vars));
  p.add_term(Exponents(p.nvars(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(Field f, std::vector<std::string> vars, std::size_t index) {
  MultiPoly p(f, std::move(vars));
  if (index >= p.nvars()) throw std::out_of_range("variable index out of range");
  Exponents e(p.nvars(), 0);
  e[index] = 1;
  p.add_term(e, Scalar::one(f));
  return p;
}

void MultiPoly::add_term(const Exponents& e, const Scalar& c) {
  if (e.size() != nvars()) throw std::invalid_argument("exponent vector length mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    Scalar s = it->second + c;
    if (s.is_zero())
      terms_.erase(it);
    else
      it->second = s;
  }
}

std::uint32_t MultiPoly::total_degree() const {
  if (terms_.empty()) return 0;
  auto& e = terms_.rbegin()->first;  // grlex max has max total degree
  return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

std::uint32_t MultiPoly::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (!(field_ == o.field_) || vars_ != o.vars_)
    throw std::invalid_argument("polynomials over different variable lists or fields");
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  check_compatible(o);
  MultiPoly r = *this;
  for (auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  check_compatible(o);
  MultiPoly r = *this;
  for (auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(field_, vars_);
  for (auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  check_compatible(o);
  MultiPoly r(field_, vars_);
  for (auto& [ea, ca] : terms_)
    for (auto& [eb, cb] : o.terms_) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

MultiPoly MultiPoly::pow(std::uint32_t e) const {
  MultiPoly acc = constant(field_, vars_, Scalar::one(field_));
  MultiPoly base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  if (!(field_ == o.field_) || vars_ != o.vars_) return false;
  return terms_ == o.terms_;
}

Scalar MultiPoly::eval(std::span<const Scalar> point) const {
  if (point.size() != nvars()) throw std::invalid_argument("evaluation point length mismatch");
  Scalar acc = Scalar::zero(field_);
  for (auto& [e, c] : terms_) {
    Scalar t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) t = t * point[i].pow(e[i]);
    acc = acc + t;
  }
  return acc;
}

MultiPoly MultiPoly::substitute(std::span<const MultiPoly> assignment) const {
  if (assignment.size() != nvars())
    throw std::invalid_argument("substitution must assign every variable");
  Field f = field_;
  std::vector<std::string> tvars = assignment.empty() ? vars_ : assignment[0].vars();
  for (auto& a : assignment)
    if (!(a.field() == f) || a.vars() != tvars)
      throw std::invalid_argument("substitution images over mismatched variable lists");
  MultiPoly r(f, tvars);
  for (auto& [e, c] : terms_) {
    MultiPoly t = MultiPoly::constant(f, tvars, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) t = t * assignment[i].pow(e[i]);
    r = r + t;
  }
  return r;
}

MultiPoly MultiPoly::rename_vars(const std::vector<std::size_t>& new_index,
                                 std::vector<std::string> new_vars) const {
  if (new_index.size() != nvars()) throw std::invalid_argument("rename index length mismatch");
  MultiPoly r(field_, std::move(new_vars));
  for (auto& [e, c] : terms_) {
    Exponents ne(r.nvars(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (new_index[i] >= r.nvars()) throw std::out_of_range("rename target out of range");
      ne[new_index[i]] += e[i];
    }
    r.add_term(ne, c);
  }
  return r;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // print leading (highest grlex) terms first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string cs = c.str();
    bool neg = !cs.empty() && cs[0] == '-';
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    if (neg) cs = cs.substr(1);
    bool has_var = std::any_of(e.begin(), e.end(), [](auto x) { return x > 0; });
    bool coeff_one = (cs == "1");
    if (!coeff_one || !has_var) out << cs;
    bool first_var = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!first_var || !coeff_one) out << "*";
      out << vars_[i];
      if (e[i] > 1) out << "^" << e[i];
      first_var = false;
    }
  }
  return out.str();
}

MultiPoly interpolate_table(const Field& f, std::vector<std::string> vars,
                            const std::vector<Scalar>& values) {
  if (f.rational()) throw std::invalid_argument("interpolation needs a prime field");
  const std::size_t k = vars.size();
  std::uint64_t expect = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (expect > (1u << 24)) throw std::invalid_argument("interpolation table too large");
    expect *= f.p;
  }
  if (values.size() != expect) throw std::invalid_argument("interpolation table is not total");

  // one-variable Lagrange basis L_a, indexed by a in F_p
  std::vector<MultiPoly> unit_basis;  // over a single placeholder variable
  std::vector<std::vector<Scalar>> basis_coeffs(f.p);
  for (std::uint32_t a = 0; a < f.p; ++a) {
    // product over b != a of (x - b)/(a - b), dense coefficients
    std::vector<Scalar> poly{Scalar::one(f)};
    Scalar denom = Scalar::one(f);
    Scalar av = Scalar::of(f, static_cast<long>(a));
    for (std::uint32_t b = 0; b < f.p; ++b) {
      if (b == a) continue;
      Scalar bv = Scalar::of(f, static_cast<long>(b));
      std::vector<Scalar> next(poly.size() + 1, Scalar::zero(f));
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i + 1] = next[i + 1] + poly[i];
        next[i] = next[i] - bv * poly[i];
      }
      poly = std::move(next);
      denom = denom * (av - bv);
    }
    Scalar inv = denom.inverse();
    for (auto& c : poly) c = c * inv;
    basis_coeffs[a] = std::move(poly);
  }

  MultiPoly result(f, vars);
  std::vector<std::uint32_t> tuple(k, 0);
  for (std::size_t idx = 0; idx < values.size(); ++idx) {
    if (!values[idx].is_zero()) {
      MultiPoly term = MultiPoly::constant(f, vars, values[idx]);
      for (std::size_t i = 0; i < k; ++i) {
        MultiPoly li(f, vars);
        const auto& bc = basis_coeffs[tuple[i]];
        for (std::size_t d = 0; d < bc.size(); ++d) {
          Exponents e(k, 0);
          e[i] = static_cast<std::uint32_t>(d);
          li.add_term(e, bc[d]);
        }
        term = term * li;
      }
      result = result + term;
    }
    for (std::size_t i = 0; i < k; ++i) {
      if (++tuple[i] < f.p) break;
      tuple[i] = 0;
    }
  }
  return result;
}

UniPoly::UniPoly(Field f, std::vector<Scalar> coeffs) : field_(f), coeffs_(std::move(coeffs)) {
  trim();
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar UniPoly::eval(const Scalar& x) const {
  Scalar acc = Scalar::zero(field_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Scalar> c(std::max(coeffs_.size(), o.coeffs_.size()), Scalar::zero(field_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = c[i] + coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] = c[i] + o.coeffs_[i];
  return UniPoly(field_, std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
  std::vector<Scalar> c(std::max(coeffs_.size(), o.coeffs_.size()), Scalar::zero(field_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = c[i] + coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] = c[i] - o.coeffs_[i];
  return UniPoly(field_, std::move(c));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly::zero(field_);
  std::vector<Scalar> c(coeffs_.size() + o.coeffs_.size() - 1, Scalar::zero(field_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] = c[i + j] + coeffs_[i] * o.coeffs_[j];
  return UniPoly(field_, std::move(c));
}

std::string UniPoly::str(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t d = coeffs_.size(); d-- > 0;) {
    if (coeffs_[d].is_zero()) continue;
    std::string cs = coeffs_[d].str();
    bool neg = cs[0] == '-';
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    if (neg) cs = cs.substr(1);
    if (d == 0 || cs != "1") out << cs;
    if (d > 0) {
      if (cs != "1") out << "*";
      out << var;
      if (d > 1) out << "^" << d;
    }
  }
  return out.str();
}

namespace {

std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> divs;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      divs.push_back(d);
      mpz_class q = n / d;
      if (q != d) divs.push_back(q);
    }
  }
  return divs;
}

}  // namespace

std::set<Scalar> rational_roots(const UniPoly& p) {
  if (!p.field().rational()) throw std::invalid_argument("rational_roots over Q only");
  if (p.is_zero()) throw std::invalid_argument("rational_roots of the zero polynomial");
  std::set<Scalar> roots;

  // factor out t^v; 0 is a root when v > 0
  std::size_t v = 0;
  const auto& cs = p.coeffs();
  while (v < cs.size() && cs[v].is_zero()) ++v;
  if (v > 0) roots.insert(Scalar::zero(p.field()));
  std::vector<Scalar> shifted(cs.begin() + static_cast<long>(v), cs.end());
  if (shifted.size() <= 1) return roots;

  // clear denominators and the content: integer primitive polynomial
  mpz_class den_lcm = 1;
  for (auto& c : shifted) {
    mpz_class d = c.rat().get_den();
    den_lcm = den_lcm / gcd(den_lcm, d) * d;
  }
  std::vector<mpz_class> zs;
  zs.reserve(shifted.size());
  for (auto& c : shifted) {
    mpq_class q = c.rat() * mpq_class(den_lcm);
    zs.push_back(q.get_num());
  }
  mpz_class content = 0;
  for (auto& z : zs) content = gcd(content, z);
  for (auto& z : zs) z /= content;

  const mpz_class& a0 = zs.front();
  const mpz_class& an = zs.back();
  for (const auto& r : positive_divisors(a0)) {
    for (const auto& s : positive_divisors(an)) {
      for (int sign : {1, -1}) {
        mpq_class cand(sign * r, s);
        cand.canonicalize();
        Scalar x = Scalar::of(p.field(), cand);
        if (p.eval(x).is_zero()) roots.insert(x);
      }
    }
  }
  return roots;
}

namespace {

class PolyParser {
 public:
  PolyParser(const std::string& text, const Field& f, const std::vector<std::string>& vars)
      : text_(text), field_(f), vars_(vars) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) throw PolyParseError(pos_, "unexpected trailing input");
    return p;
  }

 private:
  const std::string& text_;
  Field field_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  MultiPoly expr() {
    MultiPoly acc = eat('-') ? -term() : term();
    for (;;) {
      if (eat('+'))
        acc = acc + term();
      else if (eat('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    while (eat('*')) acc = acc * factor();
    return acc;
  }

  MultiPoly factor() {
    MultiPoly b = base();
    if (eat('^')) {
      std::size_t at = pos_;
      skip_ws();
      std::uint64_t e = 0;
      bool any = false;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        e = e * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
        if (e > 1000) throw PolyParseError(at, "exponent too large");
        ++pos_;
        any = true;
      }
      if (!any) throw PolyParseError(at, "expected exponent");
      return b.pow(static_cast<std::uint32_t>(e));
    }
    return b;
  }

  MultiPoly base() {
    skip_ws();
    if (pos_ >= text_.size()) throw PolyParseError(pos_, "unexpected end of expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly p = expr();
      if (!eat(')')) throw PolyParseError(pos_, "expected ')'");
      return p;
    }
    if (c == '-') {
      ++pos_;
      return -base();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t at = pos_;
      std::string digits;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        digits += text_[pos_++];
      (void)at;
      return MultiPoly::constant(field_, vars_, Scalar::of(field_, mpz_class(digits)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t at = pos_;
      std::string name;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        name += text_[pos_++];
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) throw PolyParseError(at, "undeclared variable '" + name + "'");
      return MultiPoly::variable(field_, vars_, static_cast<std::size_t>(it - vars_.begin()));
    }
    throw PolyParseError(pos_, std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

MultiPoly parse_poly(const std::string& text, const Field& f,
                     const std::vector<std::string>& vars) {
  return PolyParser(text, f, vars).parse();
}

}  // namespace aca
