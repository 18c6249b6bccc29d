#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lamod/scalar.hpp"

namespace lamod {

enum class FrameKind { Algebroid, DualAlgebroid, Tangent, Cotangent };

FrameKind dual_kind(FrameKind kind);
bool is_dual_kind(FrameKind kind);
std::string kind_name(FrameKind kind);

/// Subset of {0..31}; bit i set means frame element i (0-based) is present.
using IndexSet = std::uint32_t;

namespace index_set {

inline int size(IndexSet s) { return __builtin_popcount(s); }
inline IndexSet full(int rank) { return rank >= 32 ? ~IndexSet{0} : (IndexSet{1} << rank) - 1; }
inline bool contains(IndexSet s, int i) { return (s >> i) & 1U; }
IndexSet from_list(const std::vector<int>& zero_based);
std::vector<int> to_list(IndexSet s);
/// Sign of e_I ^ e_J relative to e_{I u J}: parity of pairs i in I, j in J with i > j.
int wedge_sign(IndexSet a, IndexSet b);
/// All subsets of {0..rank-1} with the given size, in increasing numeric order.
std::vector<IndexSet> subsets(int rank, int size);

}  // namespace index_set

/// Homogeneous element of the exterior algebra of a free module of given rank.
///
/// Terms map basis wedges e_I (I strictly increasing) to nonzero coefficients.
/// A degree outside [0, rank] denotes the zero element of that degree.
class Multivector {
 public:
  using Terms = std::map<IndexSet, Scalar>;

  Multivector() = default;
  Multivector(FrameKind kind, int rank, int degree, ChartPtr chart = nullptr);

  static Multivector scalar(FrameKind kind, int rank, const Scalar& value);
  /// e_{i1} ^ ... ^ e_{ik} times a coefficient; indices are 0-based and need not be sorted.
  static Multivector basis(FrameKind kind, int rank, const std::vector<int>& indices, const Scalar& coefficient = 1);
  static Multivector from_set(FrameKind kind, int rank, IndexSet set, const Scalar& coefficient = 1);

  FrameKind kind() const { return kind_; }
  int rank() const { return rank_; }
  int degree() const { return degree_; }
  const ChartPtr& chart() const { return chart_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Scalar coefficient(IndexSet set) const;
  void add(IndexSet set, const Scalar& value);
  /// The same coefficients reinterpreted in another frame of equal rank.
  Multivector relabeled(FrameKind kind) const;

  Multivector& operator+=(const Multivector& o);
  Multivector& operator-=(const Multivector& o);
  Multivector& operator*=(const Scalar& f);

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(Multivector a, const Scalar& f) { return a *= f; }
  friend Multivector operator*(const Scalar& f, Multivector a) { return a *= f; }
  friend Multivector operator-(Multivector a);
  friend bool operator==(const Multivector& a, const Multivector& b);

  /// Human-readable form, e.g. "e1*" or "(2*y) e1*^e2*".
  std::string to_string() const;
  /// Name of a basis wedge in this frame, e.g. "e1^e2", "dx^dy", "d/dt".
  std::string basis_name(IndexSet set) const;

 private:
  void check_compatible(const Multivector& o) const;

  FrameKind kind_ = FrameKind::Algebroid;
  int rank_ = 0;
  int degree_ = 0;
  ChartPtr chart_;
  Terms terms_;
};

Multivector wedge(const Multivector& u, const Multivector& v);

/// Interior product of `inner` into `outer` over dual frames:
/// (contract(X, xi), Y) = (xi, X ^ Y). Result lives in the frame of `outer`.
Multivector contract(const Multivector& inner, const Multivector& outer);

/// Determinant pairing between dual frames: (e*_I, e_J) = delta_IJ.
Scalar pair(const Multivector& a, const Multivector& b);

/// Coefficient of the top wedge e_1 ^ ... ^ e_rank (zero below top degree).
Scalar top_coefficient(const Multivector& m);

inline std::ostream& operator<<(std::ostream& os, const Multivector& m) { return os << m.to_string(); }

}  // namespace lamod
