#pragma once

// Exact integer and rational arithmetic: prime factorisations, p-parts,
// P-local rationals and the unit/prime splitting of a rational.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "wps/errors.hpp"

namespace wps {

using BigInt = boost::multiprecision::cpp_int;

/// Individual weights and primes. Products of weights are always BigInt.
using Weight = std::uint64_t;

bool is_prime(Weight n);

Weight gcd(Weight a, Weight b);

/// Prime decomposition; the empty map is 1.
struct Factorization {
  std::map<Weight, unsigned> factors;

  /// Multiplies the factorisation back out.
  BigInt value() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Trial division up to sqrt(m). Throws InvalidInput for m <= 0.
Factorization factorize(std::int64_t m);

/// Same for the full unsigned weight range. Throws InvalidInput for m == 0.
Factorization factorize_weight(Weight m);

/// a * b, throwing InvalidInput if the product leaves the 64-bit range.
Weight checked_mul(Weight a, Weight b);

/// Exponent of p in m. Throws InvalidInput if m == 0 or p is not prime.
unsigned valuation(Weight m, Weight p);

/// Largest power of p dividing m.
Weight p_part(Weight m, Weight p);

/// A finite set of distinct primes, iterated in increasing order.
class PrimeSet {
 public:
  PrimeSet() = default;
  PrimeSet(std::initializer_list<Weight> primes);
  explicit PrimeSet(const std::vector<Weight>& primes);

  bool contains(Weight p) const { return primes_.count(p) != 0; }
  bool empty() const { return primes_.empty(); }
  std::size_t size() const { return primes_.size(); }
  auto begin() const { return primes_.begin(); }
  auto end() const { return primes_.end(); }

  /// True iff no prime in the set divides x. Zero is divisible by everything.
  bool coprime_to(const BigInt& x) const;

  /// True iff every prime factor of x (x != 0) lies in the set.
  bool supports(const BigInt& x) const;

  friend bool operator==(const PrimeSet&, const PrimeSet&) = default;

 private:
  void insert(Weight p);
  std::set<Weight> primes_;
};

/// Reduced fraction numerator/denominator with denominator >= 1.
///
/// Used both for elements of Z_P (denominator coprime to P) and for degrees
/// of self-maps. Zero is representable (as 0/1) because constant maps have
/// degree zero; operations that need a nonzero value check for it.
class PLocalRational {
 public:
  PLocalRational() : num_(0), den_(1) {}
  PLocalRational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(implicit)
  PLocalRational(BigInt numerator, BigInt denominator);

  /// Parses "a/b" or "a" with optional sign on a.
  static PLocalRational parse(std::string_view text);

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }

  PLocalRational pow(unsigned k) const;

  /// Always "a/b", including "a/1" for integers.
  std::string to_string() const;

  friend PLocalRational operator*(const PLocalRational& a,
                                  const PLocalRational& b);
  friend PLocalRational operator/(const PLocalRational& a,
                                  const PLocalRational& b);
  friend bool operator==(const PLocalRational&,
                         const PLocalRational&) = default;

 private:
  BigInt num_;
  BigInt den_;
};

/// x lies in Z_P: its denominator is coprime to every prime in P.
bool is_p_local(const PLocalRational& x, const PrimeSet& primes);

/// x is a unit of Z_P. Throws NotAnElement if x is not in Z_P at all.
bool is_p_local_unit(const PLocalRational& x, const PrimeSet& primes);

/// x = unit_part * prime_part, where unit_part has numerator and
/// denominator coprime to P and carries the sign, and prime_part is positive
/// with numerator and denominator supported on P.
struct UnitSplit {
  PLocalRational unit_part;
  PLocalRational prime_part;
};

/// Throws InvalidInput for x == 0.
UnitSplit unit_split(const PLocalRational& x, const PrimeSet& primes);

}  // namespace wps
