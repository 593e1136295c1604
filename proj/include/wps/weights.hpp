#pragma once

// Weight-vector calculus: the normalisation rewriting system, p-contents,
// chi*, divisor chains and reconstruction from divisor counts.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wps/numth.hpp"

namespace wps {

/// Comma-separated unsigned decimals with optional whitespace around each
/// entry. Throws InvalidInput on empty fields, junk or overflow.
std::vector<Weight> parse_unsigned_list(std::string_view text);

/// Weights (w_0, ..., w_n) of a weighted projective space P(w). Never empty,
/// every entry positive.
class WeightVector {
 public:
  WeightVector(std::initializer_list<Weight> weights);
  explicit WeightVector(std::vector<Weight> weights);

  /// Comma-separated positive decimals, e.g. "1,2,3,4". Surrounding
  /// whitespace (also around each entry) is ignored.
  static WeightVector parse(std::string_view text);

  std::size_t size() const { return weights_.size(); }
  /// Complex dimension n of P(w).
  std::size_t dim() const { return weights_.size() - 1; }
  Weight operator[](std::size_t i) const { return weights_[i]; }
  auto begin() const { return weights_.begin(); }
  auto end() const { return weights_.end(); }
  const std::vector<Weight>& values() const { return weights_; }

  WeightVector sorted() const;
  WeightVector scaled(Weight m) const;
  Weight gcd() const;

  std::string to_string() const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;
  friend auto operator<=>(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<Weight> weights_;
};

/// Primes dividing at least one weight, ascending.
std::vector<Weight> prime_divisors(const WeightVector& w);

/// For every prime p, at least two weights are prime to p. A single weight
/// counts as normalised only when it is 1.
bool is_normalized(const WeightVector& w);

/// One step of the normalisation rewriting system.
struct ReductionMove {
  enum class Kind { scale, reduce };
  Kind kind;
  /// scale: the common factor divided out. reduce: the prime p.
  Weight factor;
  /// reduce only: the single weight prime to p, left untouched.
  std::size_t kept_index = 0;

  friend bool operator==(const ReductionMove&, const ReductionMove&) = default;
};

/// Every move applicable to w: scaling by each prime dividing gcd(w), and
/// each reduction P(w) -> P(w_0, ..., w_i, ..., w_n / p) with w_i the only
/// weight prime to p.
std::vector<ReductionMove> available_moves(const WeightVector& w);

/// Throws InvalidInput if the move does not apply to w.
WeightVector apply_move(const WeightVector& w, const ReductionMove& move);

struct Normalization {
  WeightVector result;
  std::vector<ReductionMove> moves;
};

/// Divides by the gcd, then runs reductions prime by prime in increasing
/// order until no move applies. Coordinate order is preserved.
Normalization normalize_traced(const WeightVector& w);
WeightVector normalize(const WeightVector& w);

/// Coordinatewise p-parts, same order as w.
WeightVector p_content(const WeightVector& w, Weight p);

struct PContentColumn {
  Weight prime;
  std::vector<Weight> unsorted;
  /// Non-decreasing rearrangement r_0 <= ... <= r_n.
  std::vector<Weight> sorted;

  friend bool operator==(const PContentColumn&, const PContentColumn&) = default;
};

/// One column per prime dividing some weight, ascending by prime.
struct PContentTable {
  std::vector<PContentColumn> columns;

  const PContentColumn* find(Weight p) const;
  bool empty() const { return columns.empty(); }

  friend bool operator==(const PContentTable&, const PContentTable&) = default;
};

PContentTable p_content_table(const WeightVector& w);

/// Coordinatewise product over all primes of the sorted p-contents of the
/// normalisation of w. Always a normalised, non-decreasing divisor chain.
WeightVector chi_star(const WeightVector& w);

bool is_divisor_chain(const WeightVector& w);

/// Number of weights divisible by d.
std::size_t divisor_count(const WeightVector& w, Weight d);

/// d -> divisor_count(w, d) for 1 <= d <= max_d.
std::map<Weight, std::size_t> divisor_count_function(const WeightVector& w,
                                                     Weight max_d);

/// Recovers the sorted multiset of weights from its divisor-count function f,
/// given for every 1 <= d <= max_d, by Moebius-style inclusion-exclusion from
/// the top down. Throws InconsistentData if f is not realisable.
WeightVector reconstruct_weights(const std::map<Weight, std::size_t>& f,
                                 Weight max_d);

/// w_j / p_part(w_j, p): the exponents of the comparison map
/// P(w_(p)) -> P(w).
std::vector<Weight> p_comparison_exponents(const WeightVector& w, Weight p);

}  // namespace wps
