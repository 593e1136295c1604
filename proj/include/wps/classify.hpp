#pragma once

// Canonical forms for homeomorphism and homotopy type of weighted projective
// spaces, and an exhaustive census over bounded weights.

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "wps/weights.hpp"

namespace wps {

/// Sorted normalisation. Two spaces are homeomorphic (equivalently,
/// isomorphic as varieties) iff these agree.
WeightVector homeo_canonical_form(const WeightVector& w);

/// chi* of the normalisation. Two spaces are homotopy equivalent iff these
/// agree; the sorted p-contents can be read back off its entries.
WeightVector homotopy_canonical_form(const WeightVector& w);

bool homeomorphic(const WeightVector& a, const WeightVector& b);
bool homotopy_equivalent(const WeightVector& a, const WeightVector& b);

/// One homeomorphism class met by the census.
struct ClassRecord {
  /// First member in enumeration order.
  WeightVector representative;
  WeightVector homeo_class;
  WeightVector homotopy_class;
  std::vector<WeightVector> members;
};

struct CensusOptions {
  std::size_t dim = 1;
  Weight max_weight = 1;
  /// Maximum number of sorted vectors enumerated before giving up.
  std::uint64_t limit = 10'000'000;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
  bool keep_members = true;
};

struct CensusReport {
  std::size_t dim;
  Weight max_weight;
  std::uint64_t vectors;
  /// Homeomorphism classes, ordered by homeo_class.
  std::vector<ClassRecord> classes;
  /// homotopy_class -> homeo_class values lying in it.
  std::map<WeightVector, std::vector<WeightVector>> homotopy_classes;
  /// Members whose homotopy form disagrees with their class record. A
  /// correct run always reports zero.
  std::uint64_t refinement_violations;

  std::size_t homeo_class_count() const { return classes.size(); }
  std::size_t homotopy_class_count() const { return homotopy_classes.size(); }
};

/// Number of sorted vectors of length n+1 with entries in [1, W], i.e.
/// binomial(W + n, n + 1). Saturates at UINT64_MAX.
std::uint64_t census_size(std::size_t dim, Weight max_weight);

/// Enumerates all non-decreasing vectors of length dim+1 with entries in
/// [1, max_weight] and groups them by both canonical forms. Throws
/// ResourceLimit, carrying the number of vectors already enumerated, once
/// the limit is passed. Results do not depend on the thread count.
CensusReport census(const CensusOptions& options);

}  // namespace wps
