#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "lamod/linalg.hpp"
#include "lamod/modular.hpp"

namespace lamod {

/// Bounds on coefficients: total polynomial degree <= max_poly_degree and
/// every |frequency| <= max_frequency.
struct Truncation {
  int max_poly_degree = 0;
  int max_frequency = 0;
};

/// All monomials of a chart within a truncation, in canonical order.
std::vector<Monomial> truncated_monomials(const Chart& chart, const Truncation& trunc);

/// A graded linear operator on exterior elements, stepping degree by +1 or -1,
/// with bounds on how far one application raises degree and frequency.
struct GradedOperator {
  FrameKind kind = FrameKind::DualAlgebroid;
  int rank = 0;
  ChartPtr chart;
  int step = 1;
  int poly_growth = 0;
  int frequency_growth = 0;
  std::function<Multivector(const Multivector&)> apply;
};

struct BasisElement {
  Monomial monomial{};
  IndexSet set = 0;
  friend bool operator<(const BasisElement& a, const BasisElement& b) {
    return a.set != b.set ? a.set < b.set : a.monomial < b.monomial;
  }
  friend bool operator==(const BasisElement& a, const BasisElement& b) { return a.set == b.set && a.monomial == b.monomial; }
};

/// Matrix of an operator from one truncated degree; rows index the terms that occur in the image.
struct OperatorMatrix {
  int degree = 0;
  std::vector<BasisElement> source;
  std::vector<BasisElement> target;
  GaussianMatrix matrix;
};

std::vector<BasisElement> truncated_basis(const GradedOperator& op, int degree, const Truncation& trunc);
OperatorMatrix assemble_matrix(const GradedOperator& op, int degree, const Truncation& trunc);

/// Coordinates of an element against a basis; throws InternalError if it leaves the span.
std::vector<Gaussian> coordinates(const Multivector& m, const std::vector<BasisElement>& basis);
Multivector from_coordinates(const GradedOperator& op, int degree, const std::vector<BasisElement>& basis,
                             const std::vector<Gaussian>& coords);

struct TruncatedComplex {
  GradedOperator op;
  Truncation trunc;
  /// differentials[k] is the matrix of the operator on degree k at `trunc`.
  std::vector<OperatorMatrix> differentials;
};

/// d_A (trivial) or d_A + theta ^ (Q_A) on Gamma(wedge A*).
GradedOperator algebroid_operator(const SpecPtr& spec, Payload coefficients);
/// Growth bounds of d_A, taken from the degrees of anchor and structure functions.
std::pair<int, int> growth_bound(const AlgebroidSpec& spec);

TruncatedComplex assemble(const GradedOperator& op, const Truncation& trunc);
TruncatedComplex assemble(const SpecPtr& spec, Payload coefficients, const Truncation& trunc);

struct CohomologyDims {
  int degree = 0;
  Eigen::Index dim = 0;
  Eigen::Index kernel = 0;
  Eigen::Index image = 0;
  bool stabilized = false;
};

/// dim ker(op on degree k at trunc) - rank(op from degree k - step at trunc minus growth).
/// Throws TruncationTooSmall when the image truncation would be negative.
CohomologyDims cohomology_dims(const GradedOperator& op, const Truncation& trunc, int degree);
CohomologyDims cohomology_dims(const TruncatedComplex& complex, int degree);

/// Kernel elements of degree k independent modulo the truncated image.
std::vector<Multivector> cohomology_representatives(const GradedOperator& op, const Truncation& trunc, int degree);
/// Truncated image of the operator landing in degree k.
std::vector<Multivector> exact_elements(const GradedOperator& op, const Truncation& trunc, int degree);

/// <<xi, eta>> = integral of the top coefficient of xi ^ eta. Throws NonCompactError.
Scalar integrate_pairing(const Multivector& xi, const Multivector& eta);

struct PairingResult {
  GaussianMatrix matrix;   ///< rows: H^k(A), columns: H^{r-k}(A, Q_A)
  Eigen::Index rank = 0;
  bool nonsingular = false;
  bool well_defined = true;  ///< representatives pair to zero with exact partners
};

PairingResult pairing_matrix(const SpecPtr& spec, int degree, const Truncation& trunc);

struct StokesResult {
  Scalar residual;                ///< (D c, X0) - (-1)^{r-1} d(rho(c X0) mu0); identically zero
  std::optional<Scalar> integral; ///< integral of D c, when the base is compact
};

/// c is the coefficient form of c (x) (X0 (x) mu0), of degree r - 1.
StokesResult stokes_check(const SpecPtr& spec, const Multivector& c);

/// <<d_A xi, w>> + (-1)^{|xi|} <<xi, D w>>; identically zero.
Scalar adjointness_check(const SpecPtr& spec, const Multivector& xi, const Multivector& w);

struct ProbeReport {
  CohomologyDims h0;
  CohomologyDims top;  ///< H^r(A, Q_A)
};

ProbeReport degeneracy_probe(const SpecPtr& spec, const Truncation& trunc);

}  // namespace lamod
