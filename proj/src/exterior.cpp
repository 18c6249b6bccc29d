#include "lamod/exterior.hpp"

#include "lamod/error.hpp"

namespace lamod {

FrameKind dual_kind(FrameKind kind) {
  switch (kind) {
    case FrameKind::Algebroid: return FrameKind::DualAlgebroid;
    case FrameKind::DualAlgebroid: return FrameKind::Algebroid;
    case FrameKind::Tangent: return FrameKind::Cotangent;
    case FrameKind::Cotangent: return FrameKind::Tangent;
  }
  return kind;
}

bool is_dual_kind(FrameKind kind) { return kind == FrameKind::DualAlgebroid || kind == FrameKind::Cotangent; }

std::string kind_name(FrameKind kind) {
  switch (kind) {
    case FrameKind::Algebroid: return "algebroid";
    case FrameKind::DualAlgebroid: return "dual_algebroid";
    case FrameKind::Tangent: return "tangent";
    case FrameKind::Cotangent: return "cotangent";
  }
  return "?";
}

namespace index_set {

IndexSet from_list(const std::vector<int>& zero_based) {
  IndexSet s = 0;
  for (int i : zero_based) s |= IndexSet{1} << i;
  return s;
}

std::vector<int> to_list(IndexSet s) {
  std::vector<int> out;
  for (int i = 0; s != 0; ++i, s >>= 1) {
    if (s & 1U) out.push_back(i);
  }
  return out;
}

int wedge_sign(IndexSet a, IndexSet b) {
  int inversions = 0;
  for (IndexSet rest = b; rest != 0; rest &= rest - 1) {
    const int j = __builtin_ctz(rest);
    inversions += size(a >> (j + 1));
  }
  return (inversions & 1) ? -1 : 1;
}

std::vector<IndexSet> subsets(int rank, int size) {
  std::vector<IndexSet> out;
  if (size < 0 || size > rank) return out;
  for (IndexSet s = 0; s <= full(rank); ++s) {
    if (index_set::size(s) == size) out.push_back(s);
    if (s == full(rank)) break;
  }
  return out;
}

}  // namespace index_set

Multivector::Multivector(FrameKind kind, int rank, int degree, ChartPtr chart)
    : kind_(kind), rank_(rank), degree_(degree), chart_(std::move(chart)) {
  if (rank < 0 || rank > 16) throw SpecError("frame rank out of range");
}

Multivector Multivector::scalar(FrameKind kind, int rank, const Scalar& value) {
  Multivector m(kind, rank, 0, value.chart());
  m.add(0, value);
  return m;
}

Multivector Multivector::basis(FrameKind kind, int rank, const std::vector<int>& indices, const Scalar& coefficient) {
  Multivector m(kind, rank, static_cast<int>(indices.size()), coefficient.chart());
  IndexSet set = 0;
  int sign = 1;
  for (int i : indices) {
    if (i < 0 || i >= rank) throw DegreeMismatch("frame index out of range");
    if (index_set::contains(set, i)) return m;
    sign *= index_set::wedge_sign(set, IndexSet{1} << i);
    set |= IndexSet{1} << i;
  }
  m.add(set, sign > 0 ? coefficient : -coefficient);
  return m;
}

Multivector Multivector::from_set(FrameKind kind, int rank, IndexSet set, const Scalar& coefficient) {
  Multivector m(kind, rank, index_set::size(set), coefficient.chart());
  m.add(set, coefficient);
  return m;
}

Scalar Multivector::coefficient(IndexSet set) const {
  auto it = terms_.find(set);
  return it == terms_.end() ? Scalar(Gaussian(), chart_) : it->second;
}

void Multivector::add(IndexSet set, const Scalar& value) {
  if (index_set::size(set) != degree_) throw DegreeMismatch("term degree differs from element degree");
  if ((set & ~index_set::full(rank_)) != 0) throw DegreeMismatch("frame index out of range");
  chart_ = common_chart(chart_, value.chart());
  if (value.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(set, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Multivector Multivector::relabeled(FrameKind kind) const {
  Multivector out = *this;
  out.kind_ = kind;
  return out;
}

void Multivector::check_compatible(const Multivector& o) const {
  if (kind_ != o.kind_ || rank_ != o.rank_) throw KindMismatch("operands live in different frames");
  if (degree_ != o.degree_) throw DegreeMismatch("operands have different degrees");
}

Multivector& Multivector::operator+=(const Multivector& o) {
  check_compatible(o);
  for (const auto& [set, c] : o.terms_) add(set, c);
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
  check_compatible(o);
  for (const auto& [set, c] : o.terms_) add(set, -c);
  return *this;
}

Multivector& Multivector::operator*=(const Scalar& f) {
  chart_ = common_chart(chart_, f.chart());
  Terms scaled;
  for (auto& [set, c] : terms_) {
    Scalar v = c * f;
    if (!v.is_zero()) scaled.emplace(set, std::move(v));
  }
  terms_ = std::move(scaled);
  return *this;
}

Multivector operator-(Multivector a) {
  for (auto& [set, c] : a.terms_) c = -c;
  return a;
}

bool operator==(const Multivector& a, const Multivector& b) {
  if (a.terms_.empty() && b.terms_.empty()) return true;
  return a.kind_ == b.kind_ && a.rank_ == b.rank_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

std::string Multivector::basis_name(IndexSet set) const {
  if (set == 0) return "1";
  std::string out;
  for (int i : index_set::to_list(set)) {
    if (!out.empty()) out += "^";
    switch (kind_) {
      case FrameKind::Algebroid: out += "e" + std::to_string(i + 1); break;
      case FrameKind::DualAlgebroid: out += "e" + std::to_string(i + 1) + "*"; break;
      case FrameKind::Tangent:
        out += "d/d" + (chart_ && i < int(chart_->dimension()) ? chart_->name(i) : "x" + std::to_string(i + 1));
        break;
      case FrameKind::Cotangent:
        out += "d" + (chart_ && i < int(chart_->dimension()) ? chart_->name(i) : "x" + std::to_string(i + 1));
        break;
    }
  }
  return out;
}

std::string Multivector::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [set, c] : terms_) {
    if (!out.empty()) out += " + ";
    if (set == 0) {
      out += c.to_string();
    } else if (c == Scalar(1)) {
      out += basis_name(set);
    } else {
      out += "(" + c.to_string() + ") " + basis_name(set);
    }
  }
  return out;
}

Multivector wedge(const Multivector& u, const Multivector& v) {
  if (u.kind() != v.kind() || u.rank() != v.rank()) throw KindMismatch("wedge of elements in different frames");
  Multivector out(u.kind(), u.rank(), u.degree() + v.degree(), common_chart(u.chart(), v.chart()));
  if (out.degree() > out.rank()) return out;
  for (const auto& [a, ca] : u.terms()) {
    for (const auto& [b, cb] : v.terms()) {
      if (a & b) continue;
      const Scalar c = ca * cb;
      out.add(a | b, index_set::wedge_sign(a, b) > 0 ? c : -c);
    }
  }
  return out;
}

Multivector contract(const Multivector& inner, const Multivector& outer) {
  if (inner.kind() != dual_kind(outer.kind()) || inner.rank() != outer.rank()) {
    throw KindMismatch("contraction needs elements of dual frames");
  }
  Multivector out(outer.kind(), outer.rank(), outer.degree() - inner.degree(),
                  common_chart(inner.chart(), outer.chart()));
  if (out.degree() < 0) return out;
  for (const auto& [a, ca] : inner.terms()) {
    for (const auto& [b, cb] : outer.terms()) {
      if ((a & b) != a) continue;
      const IndexSet rest = b & ~a;
      const Scalar c = ca * cb;
      out.add(rest, index_set::wedge_sign(a, rest) > 0 ? c : -c);
    }
  }
  return out;
}

Scalar pair(const Multivector& a, const Multivector& b) {
  if (a.kind() != dual_kind(b.kind()) || a.rank() != b.rank()) throw KindMismatch("pairing needs elements of dual frames");
  if (a.degree() != b.degree()) throw DegreeMismatch("pairing needs equal degrees");
  Scalar out(Gaussian(), common_chart(a.chart(), b.chart()));
  for (const auto& [set, c] : a.terms()) {
    auto it = b.terms().find(set);
    if (it != b.terms().end()) out += c * it->second;
  }
  return out;
}

Scalar top_coefficient(const Multivector& m) {
  if (m.degree() != m.rank()) return Scalar(Gaussian(), m.chart());
  return m.coefficient(index_set::full(m.rank()));
}

}  // namespace lamod
