#pragma once

// Integral cohomology of weighted projective spaces and generalised lens
// spaces, graded-ring isomorphism, and degrees of self-maps.

#include <cstddef>
#include <map>
#include <variant>
#include <vector>

#include "wps/numth.hpp"
#include "wps/weights.hpp"

namespace wps {

/// l_0 | l_1 | ... | l_n with l_0 = 1. phi^*(xi_i) = l_i eta^i.
class LSequence {
 public:
  /// Throws InvalidInput unless the values form a divisor chain starting at 1.
  explicit LSequence(std::vector<BigInt> values);

  std::size_t size() const { return values_.size(); }
  const BigInt& operator[](std::size_t i) const { return values_[i]; }
  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }
  const std::vector<BigInt>& values() const { return values_; }

  friend bool operator==(const LSequence&, const LSequence&) = default;

 private:
  std::vector<BigInt> values_;
};

/// l_i = prod_p (product of the i largest p-parts of w). Computed on w as
/// given, so augmented lens-space vectors need not be normalised.
LSequence l_sequence(const WeightVector& w);

/// Independent route to the same numbers: l_i is the lcm over all i-element
/// index subsets S of prod_{j in S} w_j. Exponential in n; meant for
/// cross-checking.
LSequence l_sequence_via_subsets(const WeightVector& w);

/// H^*(P(w); Z) with generators xi_i in degree 2i and
/// xi_i xi_j = c(i, j) xi_{i+j}, c(i, j) = l_i l_j / l_{i+j}.
class RingPresentation {
 public:
  /// Throws InvalidInput if some l_i l_j / l_{i+j} is not integral.
  explicit RingPresentation(LSequence l);

  std::size_t dim() const { return l_.size() - 1; }
  const LSequence& l() const { return l_; }

  /// Requires i + j <= dim().
  const BigInt& structure_constant(std::size_t i, std::size_t j) const;

  friend bool operator==(const RingPresentation& a, const RingPresentation& b) {
    return a.l_ == b.l_;
  }

 private:
  LSequence l_;
  // row i holds c(i, 0..n-i)
  std::vector<std::vector<BigInt>> c_;
};

RingPresentation ring(const WeightVector& w);

/// degree -> order of a cyclic group; order 0 is Z, order 1 is trivial.
/// Degrees not listed carry the zero group.
struct GradedGroupList {
  std::map<std::size_t, BigInt> groups;

  friend bool operator==(const GradedGroupList&, const GradedGroupList&) = default;
};

/// Z in degrees 0, 2, ..., 2n.
GradedGroupList additive_cohomology(const WeightVector& w);

/// H^*(L(k; w)): Z in degrees 0 and 2n+1, and Z/q in degree 2i for
/// 1 <= i <= n with q = l_i(w, k) / l_i(w). Trivial middle groups are listed
/// with order 1. Throws InvalidInput for k == 0.
GradedGroupList lens_cohomology(Weight k, const WeightVector& w);

/// Exists signs e_i (e_0 = +1) with e_i e_j c(i,j) = e_{i+j} c'(i,j) for all
/// i + j <= n. Searches all 2^n sign vectors once absolute values agree.
bool graded_ring_iso(const RingPresentation& a, const RingPresentation& b);

/// Self-maps with a known degree on the degree-2 generator.
struct PowerMap {
  std::int64_t exponent;
};
struct SingleConjugation {};
struct ConstantMap {};
using ElementaryMap = std::variant<PowerMap, SingleConjugation, ConstantMap>;

/// Degree of the coordinatewise a-th power map: a.
std::int64_t power_map_degree(std::int64_t a);

/// power maps: exponent; conjugating one coordinate: -1; constant maps: 0.
std::int64_t map_degree(const ElementaryMap& map);

/// (a^0, a^1, ..., a^n): the action of a degree-a self-map on H^0, ..., H^2n.
std::vector<PLocalRational> endomorphism_multipliers(const PLocalRational& a,
                                                     std::size_t n);

}  // namespace wps
