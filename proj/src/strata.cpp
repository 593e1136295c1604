#include "wps/strata.hpp"

#include <algorithm>
#include <numeric>

#include "wps/cohom.hpp"

namespace wps {

IndexSet parse_index_set(std::string_view text) {
  IndexSet out;
  for (Weight v : parse_unsigned_list(text)) {
    out.push_back(static_cast<std::size_t>(v));
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw InvalidInput("index set has repeated entries");
  }
  return out;
}

namespace {

void validate_support(const WeightVector& w, const IndexSet& support) {
  if (support.empty()) throw InvalidInput("support set must be nonempty");
  IndexSet sorted = support;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidInput("support set has repeated indices");
  }
  if (sorted.back() >= w.size()) {
    throw InvalidInput("support index " + std::to_string(sorted.back()) +
                       " out of range for " + std::to_string(w.size()) +
                       " weights");
  }
}

}  // namespace

StratumChart stratum_chart(const WeightVector& w, const IndexSet& support) {
  validate_support(w, support);
  StratumChart chart{};
  chart.support = support;
  std::sort(chart.support.begin(), chart.support.end());
  chart.q = 0;
  for (std::size_t i = 0, s = 0; i < w.size(); ++i) {
    if (s < chart.support.size() && chart.support[s] == i) {
      chart.q = std::gcd(chart.q, w[i]);
      ++s;
    } else {
      chart.zero_set.push_back(i);
      chart.cone_weights.push_back(w[i]);
    }
  }
  chart.torus_rank = chart.support.size() - 1;
  return chart;
}

Weight local_homology_order(const WeightVector& w, const IndexSet& support) {
  if (!is_normalized(w)) {
    throw InvalidInput("local homology order needs normalised weights, got " +
                       w.to_string());
  }
  return stratum_chart(w, support).q;
}

BigInt local_homology_order_via_lens(const WeightVector& w,
                                     const IndexSet& support) {
  StratumChart chart = stratum_chart(w, support);
  if (chart.cone_weights.size() < 2) {
    throw InvalidInput("lens route needs at least two vanishing coordinates");
  }
  const WeightVector cone(chart.cone_weights);
  return lens_cohomology(chart.q, cone).groups.at(2 * cone.dim());
}

std::optional<WeightVector> x_subspace(const WeightVector& w, Weight d) {
  if (d == 0) throw InvalidInput("x_subspace: d must be positive");
  std::vector<Weight> out;
  std::copy_if(w.begin(), w.end(), std::back_inserter(out),
               [d](Weight x) { return x % d == 0; });
  if (out.empty()) return std::nullopt;
  return WeightVector(std::move(out));
}

CellDecomposition cell_decomposition(const WeightVector& w) {
  if (!is_divisor_chain(w)) {
    throw InvalidInput(w.to_string() + " is not a divisor chain");
  }
  CellDecomposition out;
  const std::size_t n = w.dim();
  for (std::size_t k = 0; k <= n; ++k) {
    out.cell_dimensions.push_back(k);
    std::vector<Weight> tail(w.begin() + static_cast<std::ptrdiff_t>(n - k),
                             w.end());
    std::vector<Weight> rescaled;
    for (Weight x : tail) rescaled.push_back(x / tail.front());
    out.filtration.push_back({WeightVector(std::move(tail)),
                              WeightVector(std::move(rescaled))});
  }
  return out;
}

}  // namespace wps
