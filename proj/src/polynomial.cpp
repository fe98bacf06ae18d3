#include "hyperobs/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hyperobs {

Monomial Monomial::variable(int var, int power) {
  if (power == 0) return Monomial{};
  return from_factors({{var, power}});
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  Monomial m;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].first < 0 || factors[i].second <= 0) {
      throw std::invalid_argument("monomial factor needs var >= 0 and power > 0");
    }
    if (i > 0 && factors[i - 1].first >= factors[i].first) {
      throw std::invalid_argument("monomial factors must be strictly increasing in var");
    }
    m.degree_ += factors[i].second;
  }
  m.factors_ = std::move(factors);
  return m;
}

int Monomial::exponent(int var) const {
  for (const auto& [v, e] : factors_) {
    if (v == var) return e;
    if (v > var) break;
  }
  return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  out.degree_ = degree_ + other.degree_;
  return out;
}

Monomial Monomial::lowered(int var) const {
  Monomial out = *this;
  auto it = std::find_if(out.factors_.begin(), out.factors_.end(),
                         [var](const Factor& f) { return f.first == var; });
  if (it == out.factors_.end()) throw std::logic_error("lowering an absent variable");
  if (--it->second == 0) out.factors_.erase(it);
  --out.degree_;
  return out;
}

std::size_t Monomial::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& [v, e] : factors_) {
    h ^= static_cast<std::size_t>(v) * 0x100000001b3ULL + static_cast<std::size_t>(e);
    h *= 0xbf58476d1ce4e5b9ULL;
    h ^= h >> 31;
  }
  return h;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  // Same degree: the first variable whose exponents differ decides, with the
  // larger exponent on the lower-indexed variable being the larger monomial.
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0;
  while (i < fa.size() && i < fb.size()) {
    if (fa[i].first != fb[i].first) return fa[i].first > fb[i].first;
    if (fa[i].second != fb[i].second) return fa[i].second < fb[i].second;
    ++i;
  }
  return i == fa.size() && i < fb.size();
}

Polynomial::Polynomial(const Rational& constant) {
  if (constant != 0) terms_.push_back({Monomial{}, constant});
}

Polynomial::Polynomial(const Monomial& m, const Rational& coeff) {
  if (coeff != 0) terms_.push_back({m, coeff});
}

Polynomial Polynomial::variable(int var) { return Polynomial(Monomial::variable(var), 1); }

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  PolynomialBuilder builder;
  for (auto& t : terms) builder.add(std::move(t.monomial), t.coeff);
  return std::move(builder).build();
}

int Polynomial::total_degree() const { return terms_.empty() ? 0 : terms_.front().monomial.degree(); }

bool Polynomial::is_homogeneous(int degree) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [degree](const Term& t) { return t.monomial.degree() == degree; });
}

int Polynomial::variable_bound() const {
  int bound = 0;
  for (const auto& t : terms_) {
    if (!t.monomial.factors().empty()) bound = std::max(bound, t.monomial.factors().back().first + 1);
  }
  return bound;
}

Polynomial Polynomial::derivative(int var) const {
  Polynomial out;
  for (const auto& t : terms_) {
    int e = t.monomial.exponent(var);
    if (e == 0) continue;
    out.terms_.push_back({t.monomial.lowered(var), t.coeff * e});
  }
  std::sort(out.terms_.begin(), out.terms_.end(),
            [](const Term& a, const Term& b) { return grlex_less(b.monomial, a.monomial); });
  return out;
}

std::vector<Polynomial> Polynomial::gradient(int n) const {
  std::vector<Polynomial> g;
  g.reserve(n);
  for (int i = 0; i < n; ++i) g.push_back(derivative(i));
  return g;
}

Rational Polynomial::evaluate(std::span<const Rational> x) const {
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational prod = t.coeff;
    for (const auto& [v, e] : t.monomial.factors()) {
      if (v >= static_cast<int>(x.size())) throw std::out_of_range("evaluation point too short");
      Rational power;
      mpz_pow_ui(power.get_num_mpz_t(), x[v].get_num_mpz_t(), e);
      mpz_pow_ui(power.get_den_mpz_t(), x[v].get_den_mpz_t(), e);
      prod *= power;
    }
    sum += prod;
  }
  return sum;
}

double Polynomial::evaluate(std::span<const double> x) const {
  double sum = 0.0;
  for (const auto& t : terms_) {
    double prod = t.coeff.get_d();
    for (const auto& [v, e] : t.monomial.factors()) {
      if (v >= static_cast<int>(x.size())) throw std::out_of_range("evaluation point too short");
      prod *= std::pow(x[v], e);
    }
    sum += prod;
  }
  return sum;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

namespace {

// Merge of two grlex-descending term lists, b scaled by sign.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && grlex_less(b[j].monomial, a[i].monomial))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || grlex_less(a[i].monomial, b[j].monomial)) {
      out.push_back({b[j].monomial, sign > 0 ? b[j].coeff : Rational(-b[j].coeff)});
      ++j;
    } else {
      Rational c = sign > 0 ? Rational(a[i].coeff + b[j].coeff) : Rational(a[i].coeff - b[j].coeff);
      if (c != 0) out.push_back({a[i].monomial, c});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  terms_ = merge_terms(terms_, other.terms_, +1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  terms_ = merge_terms(terms_, other.terms_, -1);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= scalar;
  }
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  PolynomialBuilder builder;
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) builder.add(ta.monomial * tb.monomial, ta.coeff * tb.coeff);
  }
  return std::move(builder).build();
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].monomial == other.terms_[i].monomial) || terms_[i].coeff != other.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    Rational c = t.coeff;
    if (i == 0) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    c = abs(c);
    std::string mono;
    for (const auto& [v, e] : t.monomial.factors()) {
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(v + 1);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += c.get_str();
    } else if (c == 1) {
      out += mono;
    } else {
      out += c.get_str() + "*" + mono;
    }
  }
  return out;
}

void PolynomialBuilder::add(const Monomial& m, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = acc_.try_emplace(m, coeff);
  if (!inserted) it->second += coeff;
}

void PolynomialBuilder::add(Monomial&& m, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = acc_.try_emplace(std::move(m), coeff);
  if (!inserted) it->second += coeff;
}

void PolynomialBuilder::add(const Polynomial& p, const Rational& scale) {
  for (const auto& t : p.terms()) add(t.monomial, t.coeff * scale);
}

Polynomial PolynomialBuilder::build() && {
  std::vector<Term> terms;
  terms.reserve(acc_.size());
  for (auto& [m, c] : acc_) {
    if (c != 0) terms.push_back({m, c});
  }
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grlex_less(b.monomial, a.monomial); });
  acc_.clear();
  Polynomial out;
  out.terms_ = std::move(terms);
  return out;
}

}  // namespace hyperobs
