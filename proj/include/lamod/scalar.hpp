#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lamod/gaussian.hpp"

namespace lamod {

/// One global chart R^m x T^t: polynomial coordinates followed by angles.
class Chart {
 public:
  static constexpr std::size_t kMaxCoordinates = 8;

  Chart() = default;
  Chart(std::vector<std::string> poly, std::vector<std::string> torus);

  const std::vector<std::string>& poly() const { return poly_; }
  const std::vector<std::string>& torus() const { return torus_; }
  std::size_t poly_count() const { return poly_.size(); }
  std::size_t torus_count() const { return torus_.size(); }
  std::size_t dimension() const { return poly_.size() + torus_.size(); }
  bool is_compact() const { return poly_.empty(); }
  bool is_torus(std::size_t slot) const { return slot >= poly_.size(); }

  /// Slot of a coordinate name, or nullopt.
  std::optional<std::size_t> find(const std::string& name) const;
  /// Slot of a coordinate name; throws UnknownCoordinate.
  std::size_t slot(const std::string& name) const;
  const std::string& name(std::size_t slot) const;

  friend bool operator==(const Chart& a, const Chart& b) { return a.poly_ == b.poly_ && a.torus_ == b.torus_; }

 private:
  std::vector<std::string> poly_;
  std::vector<std::string> torus_;
};

using ChartPtr = std::shared_ptr<const Chart>;

ChartPtr make_chart(std::vector<std::string> poly, std::vector<std::string> torus);

/// Exponents of the polynomial slots, then Fourier frequencies of the torus slots.
using Monomial = std::array<std::int16_t, Chart::kMaxCoordinates>;

/// Element of Q(i)[x_1..x_m] (x) Fourier(t_1..t_t), kept in canonical form.
///
/// A Scalar without a chart is a constant and combines with any chart.
class Scalar {
 public:
  using Terms = std::map<Monomial, Gaussian>;

  Scalar() = default;
  Scalar(long value);
  Scalar(Gaussian value, ChartPtr chart = nullptr);

  static Scalar monomial(ChartPtr chart, const Monomial& exponents, Gaussian coefficient = 1);
  /// The coordinate function of a polynomial slot, or e^{i t} for a torus slot.
  static Scalar coordinate(ChartPtr chart, std::size_t slot);

  const ChartPtr& chart() const { return chart_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// The constant term (zero when absent).
  Gaussian constant_term() const;
  /// Coefficient of one monomial.
  Gaussian coefficient(const Monomial& m) const;

  /// Largest total polynomial degree (0 for zero).
  int poly_degree() const;
  /// Largest absolute frequency over all torus slots (0 for zero).
  int max_frequency() const;
  bool has_poly_terms() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator*=(const Gaussian& c);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator*(Scalar a, const Gaussian& c) { return a *= c; }
  friend Scalar operator*(const Gaussian& c, Scalar a) { return a *= c; }
  friend Scalar operator-(Scalar a);
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Division by a nonzero constant.
  Scalar divided_by(const Gaussian& c) const;
  Scalar pow(unsigned exponent) const;

  /// Partial derivative along a chart slot (i*k on a frequency-k torus term).
  Scalar derivative(std::size_t slot) const;
  Scalar derivative(const std::string& name) const;

  /// Renders in the parser grammar; parse(render(s)) == s.
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Gaussian& c);
  void adopt_chart(const ChartPtr& other);

  ChartPtr chart_;
  Terms terms_;
};

/// Same chart, or at least one of the two chartless.
bool compatible_charts(const ChartPtr& a, const ChartPtr& b);
/// The chart two operands share; throws ChartMismatch.
ChartPtr common_chart(const ChartPtr& a, const ChartPtr& b);

/// Integral over all torus slots with total mass 1.
/// Throws NonCompactError if any term carries a polynomial exponent.
Scalar torus_integral(const Scalar& s);

/// q with num == q * den in the ring, or nullopt. Throws DivisionByZero.
std::optional<Scalar> exact_divide(const Scalar& num, const Scalar& den);

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace lamod
