// sampling.hpp — deterministic random generators for sampled checks and tests.

#pragma once

#include <random>

#include "bridgekit/core.hpp"

namespace bridgekit {

/// Complex Ginibre matrix: independent standard complex normal entries.
CMatrix random_ginibre(int rows, int cols, std::mt19937_64& rng);

CVector random_unit_vector(int n, std::mt19937_64& rng);

/// Full-rank density GG†/trace(GG†).
CMatrix random_density_matrix(int n, std::mt19937_64& rng);

/// Rank-one projector vv† (boundary of the cone).
CMatrix random_rank_one_density(int n, std::mt19937_64& rng);

/// Row-stochastic matrix with every entry >= min_entry / (1 + n*min_entry).
Matrix random_stochastic_matrix(int n, std::mt19937_64& rng, double min_entry = 1e-3);

Vector random_probability_vector(int n, std::mt19937_64& rng, double min_entry = 1e-3);

}  // namespace bridgekit
