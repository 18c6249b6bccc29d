#include "lamod/linalg.hpp"

#include <utility>

namespace lamod {

namespace {

mpz_class lcm_of_denominators(const GaussianMatrix& m, Eigen::Index row) {
  mpz_class l = 1;
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    const Gaussian& g = m(row, c);
    if (g.is_zero()) continue;
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), g.real().get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), g.imag().get_den_mpz_t());
  }
  return l;
}

}  // namespace

Eigen::Index exact_rank(const GaussianMatrix& input) {
  GaussianMatrix a = input;
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Gaussian scale(mpq_class(lcm_of_denominators(a, r)));
    if (!scale.is_one()) {
      for (Eigen::Index c = 0; c < cols; ++c) a(r, c) *= scale;
    }
  }
  Gaussian previous(1);
  Eigen::Index rank = 0;
  for (Eigen::Index c = 0; c < cols && rank < rows; ++c) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = rank; r < rows; ++r) {
      if (!a(r, c).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) a.row(pivot).swap(a.row(rank));
    const Gaussian p = a(rank, c);
    for (Eigen::Index r = rank + 1; r < rows; ++r) {
      const Gaussian factor = a(r, c);
      for (Eigen::Index j = c + 1; j < cols; ++j) {
        if (factor.is_zero()) {
          if (!a(r, j).is_zero()) a(r, j) = (p * a(r, j)) / previous;
        } else {
          a(r, j) = (p * a(r, j) - factor * a(rank, j)) / previous;
        }
      }
      a(r, c) = Gaussian();
    }
    previous = p;
    ++rank;
  }
  return rank;
}

GaussianMatrix rref(const GaussianMatrix& input, std::vector<Eigen::Index>* pivots) {
  GaussianMatrix a = input;
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  Eigen::Index lead = 0;
  if (pivots) pivots->clear();
  for (Eigen::Index c = 0; c < cols && lead < rows; ++c) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = lead; r < rows; ++r) {
      if (!a(r, c).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != lead) a.row(pivot).swap(a.row(lead));
    const Gaussian inv = Gaussian(1) / a(lead, c);
    for (Eigen::Index j = c; j < cols; ++j) {
      if (!a(lead, j).is_zero()) a(lead, j) *= inv;
    }
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r == lead || a(r, c).is_zero()) continue;
      const Gaussian factor = a(r, c);
      for (Eigen::Index j = c; j < cols; ++j) {
        if (!a(lead, j).is_zero()) a(r, j) -= factor * a(lead, j);
      }
    }
    if (pivots) pivots->push_back(c);
    ++lead;
  }
  return a;
}

GaussianMatrix nullspace(const GaussianMatrix& m) {
  std::vector<Eigen::Index> pivots;
  const GaussianMatrix reduced = rref(m, &pivots);
  const Eigen::Index cols = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Eigen::Index p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  GaussianMatrix basis(cols, cols - static_cast<Eigen::Index>(pivots.size()));
  Eigen::Index out = 0;
  for (Eigen::Index free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    for (Eigen::Index r = 0; r < cols; ++r) basis(r, out) = Gaussian();
    basis(free, out) = Gaussian(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], out) = -reduced(static_cast<Eigen::Index>(i), free);
    ++out;
  }
  return basis;
}

}  // namespace lamod
