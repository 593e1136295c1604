#pragma once

// Local structure of P(w). A stratum is named by its support J, the indices
// of the nonzero homogeneous coordinates; I is the complement.

#include <cstddef>
#include <optional>
#include <vector>

#include "wps/weights.hpp"

namespace wps {

using IndexSet = std::vector<std::size_t>;

/// Parses "0,2,3" into a sorted index set. Throws InvalidInput on
/// duplicates or garbage.
IndexSet parse_index_set(std::string_view text);

/// U_I = (C^x)^{|J|-1} x C^I / Z_q<w_I>, a torus times the cone over the
/// lens space L(q; w_I).
struct StratumChart {
  std::size_t torus_rank;
  Weight q;
  /// w restricted to I; empty for the open stratum.
  std::vector<Weight> cone_weights;
  IndexSet support;
  IndexSet zero_set;
};

/// Throws InvalidInput if J is empty, out of range or has repeats.
StratumChart stratum_chart(const WeightVector& w, const IndexSet& support);

/// Order of H^{2n-1}(P(w), P(w) - z) for z with support J, namely gcd(w_J).
/// Throws InvalidInput unless w is normalised.
Weight local_homology_order(const WeightVector& w, const IndexSet& support);

/// Same order read off the lens space: the group H^{2m}(L(q; w_I)) with
/// m = |I| - 1. Requires |I| >= 2.
BigInt local_homology_order_via_lens(const WeightVector& w,
                                     const IndexSet& support);

/// X(d): the weights divisible by d, in order. nullopt when there are none.
/// Its complex dimension is size() - 1.
std::optional<WeightVector> x_subspace(const WeightVector& w, Weight d);

struct FiltrationStep {
  /// (w_i, ..., w_n)
  WeightVector weights;
  /// (1, w_{i+1}/w_i, ..., w_n/w_i)
  WeightVector rescaled;
};

/// Cells *, C, ..., C^n of a divisor-chain space. filtration[k] is the
/// closure of the cells up to dimension k, i.e. P(w_{n-k}, ..., w_n).
struct CellDecomposition {
  std::vector<std::size_t> cell_dimensions;
  std::vector<FiltrationStep> filtration;
};

/// Throws InvalidInput unless w is a divisor chain.
CellDecomposition cell_decomposition(const WeightVector& w);

}  // namespace wps
