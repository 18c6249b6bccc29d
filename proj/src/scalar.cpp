#include "lamod/scalar.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "lamod/error.hpp"

namespace lamod {

Chart::Chart(std::vector<std::string> poly, std::vector<std::string> torus)
    : poly_(std::move(poly)), torus_(std::move(torus)) {
  if (dimension() > kMaxCoordinates) {
    throw SpecError("charts support at most " + std::to_string(kMaxCoordinates) + " coordinates");
  }
  std::set<std::string> seen;
  for (std::size_t i = 0; i < dimension(); ++i) {
    const std::string& n = name(i);
    if (n.empty() || n == "I" || n == "cis") throw SpecError("invalid coordinate name '" + n + "'");
    if (!seen.insert(n).second) throw SpecError("duplicate coordinate name '" + n + "'");
  }
}

std::optional<std::size_t> Chart::find(const std::string& name) const {
  for (std::size_t i = 0; i < dimension(); ++i) {
    if (this->name(i) == name) return i;
  }
  return std::nullopt;
}

std::size_t Chart::slot(const std::string& name) const {
  if (auto s = find(name)) return *s;
  throw UnknownCoordinate("unknown coordinate '" + name + "'");
}

const std::string& Chart::name(std::size_t slot) const {
  return slot < poly_.size() ? poly_[slot] : torus_.at(slot - poly_.size());
}

ChartPtr make_chart(std::vector<std::string> poly, std::vector<std::string> torus) {
  return std::make_shared<const Chart>(std::move(poly), std::move(torus));
}

bool compatible_charts(const ChartPtr& a, const ChartPtr& b) {
  return !a || !b || a == b || *a == *b;
}

ChartPtr common_chart(const ChartPtr& a, const ChartPtr& b) {
  if (!compatible_charts(a, b)) throw ChartMismatch();
  return a ? a : b;
}

namespace {

Monomial add_monomials(const Monomial& a, const Monomial& b) {
  Monomial out{};
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<std::int16_t>(a[i] + b[i]);
  return out;
}

}  // namespace

Scalar::Scalar(long value) : Scalar(Gaussian(value)) {}

Scalar::Scalar(Gaussian value, ChartPtr chart) : chart_(std::move(chart)) {
  if (!value.is_zero()) terms_.emplace(Monomial{}, std::move(value));
}

Scalar Scalar::monomial(ChartPtr chart, const Monomial& exponents, Gaussian coefficient) {
  Scalar s;
  s.chart_ = std::move(chart);
  s.add_term(exponents, coefficient);
  return s;
}

Scalar Scalar::coordinate(ChartPtr chart, std::size_t slot) {
  if (!chart || slot >= chart->dimension()) throw UnknownCoordinate("coordinate slot out of range");
  Monomial m{};
  m[slot] = 1;
  return monomial(std::move(chart), m);
}

bool Scalar::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

Gaussian Scalar::constant_term() const { return coefficient(Monomial{}); }

Gaussian Scalar::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Gaussian() : it->second;
}

int Scalar::poly_degree() const {
  const std::size_t m = chart_ ? chart_->poly_count() : 0;
  int best = 0;
  for (const auto& [mono, c] : terms_) {
    int d = 0;
    for (std::size_t i = 0; i < m; ++i) d += mono[i];
    best = std::max(best, d);
  }
  return best;
}

int Scalar::max_frequency() const {
  if (!chart_) return 0;
  int best = 0;
  for (const auto& [mono, c] : terms_) {
    for (std::size_t i = chart_->poly_count(); i < chart_->dimension(); ++i) best = std::max(best, std::abs(int(mono[i])));
  }
  return best;
}

bool Scalar::has_poly_terms() const {
  if (!chart_) return false;
  for (const auto& [mono, c] : terms_) {
    for (std::size_t i = 0; i < chart_->poly_count(); ++i) {
      if (mono[i] != 0) return true;
    }
  }
  return false;
}

void Scalar::add_term(const Monomial& m, const Gaussian& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Scalar::adopt_chart(const ChartPtr& other) { chart_ = common_chart(chart_, other); }

Scalar& Scalar::operator+=(const Scalar& o) {
  adopt_chart(o.chart_);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  adopt_chart(o.chart_);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar out;
  out.chart_ = common_chart(a.chart_, b.chart_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(add_monomials(ma, mb), ca * cb);
  }
  return out;
}

Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }

Scalar& Scalar::operator*=(const Gaussian& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Scalar operator-(Scalar a) {
  for (auto& [m, v] : a.terms_) v = -v;
  return a;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.terms_ != b.terms_) return false;
  return a.terms_.empty() || compatible_charts(a.chart_, b.chart_);
}

Scalar Scalar::divided_by(const Gaussian& c) const {
  if (c.is_zero()) throw DivisionByZero();
  Scalar out = *this;
  for (auto& [m, v] : out.terms_) v /= c;
  return out;
}

Scalar Scalar::pow(unsigned exponent) const {
  Scalar result(Gaussian(1), chart_);
  Scalar base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

Scalar Scalar::derivative(std::size_t slot) const {
  Scalar out;
  out.chart_ = chart_;
  if (!chart_) return out;
  if (slot >= chart_->dimension()) throw UnknownCoordinate("coordinate slot out of range");
  const bool torus = chart_->is_torus(slot);
  for (const auto& [m, c] : terms_) {
    if (m[slot] == 0) continue;
    if (torus) {
      out.add_term(m, c * Gaussian(0, m[slot]));
    } else {
      Monomial lowered = m;
      --lowered[slot];
      out.add_term(lowered, c * Gaussian(m[slot]));
    }
  }
  return out;
}

Scalar Scalar::derivative(const std::string& name) const {
  if (!chart_) throw UnknownCoordinate("unknown coordinate '" + name + "'");
  return derivative(chart_->slot(name));
}

std::string Scalar::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::vector<std::string> factors;
    if (chart_) {
      for (std::size_t i = 0; i < chart_->dimension(); ++i) {
        if (m[i] == 0) continue;
        if (chart_->is_torus(i)) {
          factors.push_back("cis(" + std::to_string(m[i]) + "," + chart_->name(i) + ")");
        } else {
          factors.push_back(chart_->name(i) + (m[i] > 1 ? "^" + std::to_string(m[i]) : ""));
        }
      }
    }
    Gaussian coef = c;
    const bool negative = coef.is_real() && sgn(coef.real()) < 0;
    if (negative) coef = -coef;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string body;
    if (factors.empty() || !coef.is_one()) body = coef.to_string();
    for (const auto& f : factors) {
      if (!body.empty()) body += "*";
      body += f;
    }
    out += body;
  }
  return out;
}

Scalar torus_integral(const Scalar& s) {
  if (s.has_poly_terms()) throw NonCompactError("cannot integrate along a polynomial coordinate");
  return Scalar(s.constant_term());
}

std::optional<Scalar> exact_divide(const Scalar& num, const Scalar& den) {
  if (den.is_zero()) throw DivisionByZero();
  const ChartPtr chart = common_chart(num.chart(), den.chart());
  if (num.is_zero()) return Scalar(Gaussian(), chart);
  if (den.is_constant()) return num.divided_by(den.constant_term());

  // Shift torus frequencies so that both operands are ordinary polynomials in
  // z_j = e^{i t_j}; the divisor is normalized to be coprime to every z_j.
  const std::size_t first_torus = chart->poly_count();
  const std::size_t dim = chart->dimension();
  auto min_shift = [&](const Scalar& s) {
    Monomial shift{};
    for (std::size_t j = first_torus; j < dim; ++j) {
      int lo = 0;
      bool seen = false;
      for (const auto& [m, c] : s.terms()) {
        lo = seen ? std::min(lo, int(m[j])) : int(m[j]);
        seen = true;
      }
      shift[j] = static_cast<std::int16_t>(-lo);
    }
    return shift;
  };
  const Monomial num_shift = min_shift(num);
  const Monomial den_shift = min_shift(den);
  Scalar remainder = num * Scalar::monomial(chart, num_shift);
  const Scalar divisor = den * Scalar::monomial(chart, den_shift);

  const auto& [lead_mono, lead_coef] = *divisor.terms().rbegin();
  Scalar quotient(Gaussian(), chart);
  while (!remainder.is_zero()) {
    const auto& [rm, rc] = *remainder.terms().rbegin();
    Monomial q{};
    for (std::size_t j = 0; j < dim; ++j) {
      const int e = rm[j] - lead_mono[j];
      if (e < 0) return std::nullopt;
      q[j] = static_cast<std::int16_t>(e);
    }
    const Scalar step = Scalar::monomial(chart, q, rc / lead_coef);
    quotient += step;
    remainder -= step * divisor;
  }
  Monomial back{};
  for (std::size_t j = first_torus; j < dim; ++j) back[j] = static_cast<std::int16_t>(den_shift[j] - num_shift[j]);
  return quotient * Scalar::monomial(chart, back);
}

}  // namespace lamod
