#include "bridgekit/sampling.hpp"

#include "bridgekit/hermitian.hpp"

namespace bridgekit {

CMatrix random_ginibre(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  CMatrix G(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      G(i, j) = Complex(re, im) / std::sqrt(2.0);
    }
  return G;
}

CVector random_unit_vector(int n, std::mt19937_64& rng) {
  CVector v = random_ginibre(n, 1, rng).col(0);
  return v / v.norm();
}

CMatrix random_density_matrix(int n, std::mt19937_64& rng) {
  const CMatrix G = random_ginibre(n, n, rng);
  CMatrix rho = hermitian_part(G * G.adjoint());
  return rho / rho.trace().real();
}

CMatrix random_rank_one_density(int n, std::mt19937_64& rng) {
  const CVector v = random_unit_vector(n, rng);
  return v * v.adjoint();
}

Matrix random_stochastic_matrix(int n, std::mt19937_64& rng, double min_entry) {
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  Matrix P(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) P(i, j) = min_entry + uniform(rng);
    P.row(i) /= P.row(i).sum();
  }
  return P;
}

Vector random_probability_vector(int n, std::mt19937_64& rng, double min_entry) {
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  Vector p(n);
  for (int i = 0; i < n; ++i) p(i) = min_entry + uniform(rng);
  return p / p.sum();
}

}  // namespace bridgekit
