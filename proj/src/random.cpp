#include "lamod/random.hpp"

namespace lamod {

int RandomSource::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

Gaussian RandomSource::coefficient() {
  int num = 0;
  while (num == 0) num = uniform(-3, 3);
  const mpq_class value(num, uniform(1, 3));
  return uniform(0, 4) == 0 ? Gaussian(0, value) : Gaussian(value);
}

Scalar RandomSource::scalar(const ChartPtr& chart, int max_terms) {
  Scalar out(Gaussian(), chart);
  const int terms = uniform(1, max_terms);
  const std::size_t dim = chart ? chart->dimension() : 0;
  for (int t = 0; t < terms; ++t) {
    Monomial m{};
    int budget = uniform(0, 2);
    for (std::size_t slot = 0; slot < dim; ++slot) {
      if (chart->is_torus(slot)) {
        m[slot] = static_cast<std::int16_t>(uniform(-2, 2));
      } else if (budget > 0) {
        const int e = uniform(0, budget);
        m[slot] = static_cast<std::int16_t>(e);
        budget -= e;
      }
    }
    out += Scalar::monomial(chart, m, coefficient());
  }
  return out;
}

Scalar RandomSource::polynomial(const ChartPtr& chart, int max_degree, int max_terms) {
  Scalar out(Gaussian(), chart);
  const int terms = uniform(1, max_terms);
  const std::size_t poly = chart ? chart->poly_count() : 0;
  for (int t = 0; t < terms; ++t) {
    Monomial m{};
    int budget = uniform(0, max_degree);
    for (std::size_t slot = 0; slot < poly && budget > 0; ++slot) {
      const int e = uniform(0, budget);
      m[slot] = static_cast<std::int16_t>(e);
      budget -= e;
    }
    out += Scalar::monomial(chart, m, coefficient());
  }
  return out;
}

Multivector RandomSource::multivector(FrameKind kind, int rank, int degree, const ChartPtr& chart) {
  Multivector out(kind, rank, degree, chart);
  for (IndexSet set : index_set::subsets(rank, degree)) {
    if (uniform(0, 2) != 0) out.add(set, scalar(chart, 2));
  }
  return out;
}

}  // namespace lamod
