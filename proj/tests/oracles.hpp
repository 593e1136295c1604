#pragma once

// Test-only reference computations. Nothing here calls the code under test
// beyond the WeightVector container, so each oracle is an independent route.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using U = std::uint64_t;
using Big = boost::multiprecision::cpp_int;

inline std::vector<U> primes_of(U m) {
  std::vector<U> out;
  for (U d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      out.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) out.push_back(m);
  return out;
}

inline U p_part(U m, U p) {
  U out = 1;
  while (m % p == 0) {
    m /= p;
    out *= p;
  }
  return out;
}

inline std::set<U> primes_of(const std::vector<U>& w) {
  std::set<U> out;
  for (U x : w) {
    for (U p : primes_of(x)) out.insert(p);
  }
  return out;
}

/// Applies a uniformly random applicable scaling or reduction move until
/// none is left. Scaling here divides by any prime common to all weights,
/// not necessarily the full gcd.
template <class Rng>
std::vector<U> random_normalize(std::vector<U> w, Rng& rng) {
  while (true) {
    std::vector<std::pair<U, int>> moves;  // (p, -1 = scale, i = kept index)
    for (U p : primes_of(w)) {
      std::vector<std::size_t> coprime;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] % p != 0) coprime.push_back(i);
      }
      if (coprime.empty()) moves.push_back({p, -1});
      if (coprime.size() == 1 && w.size() >= 2) {
        moves.push_back({p, static_cast<int>(coprime[0])});
      }
    }
    if (moves.empty()) return w;
    std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
    auto [p, kept] = moves[pick(rng)];
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (static_cast<int>(i) != kept) w[i] /= p;
    }
  }
}

/// Every terminal vector reachable by any sequence of moves, sorted.
inline std::set<std::vector<U>> all_normal_forms(const std::vector<U>& start) {
  std::set<std::vector<U>> seen{start};
  std::vector<std::vector<U>> stack{start};
  std::set<std::vector<U>> terminals;
  while (!stack.empty()) {
    auto w = stack.back();
    stack.pop_back();
    bool any = false;
    for (U p : primes_of(w)) {
      std::size_t coprime = 0;
      std::size_t kept = 0;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] % p != 0) {
          ++coprime;
          kept = i;
        }
      }
      if (coprime > 1 || (coprime == 1 && w.size() < 2)) continue;
      any = true;
      auto next = w;
      for (std::size_t i = 0; i < next.size(); ++i) {
        if (coprime == 0 || i != kept) next[i] /= p;
      }
      if (seen.insert(next).second) stack.push_back(next);
    }
    if (!any) {
      std::sort(w.begin(), w.end());
      terminals.insert(w);
    }
  }
  return terminals;
}

/// lcm over i-subsets of products; the subset definition of l_i.
inline std::vector<Big> l_by_subsets(const std::vector<U>& w) {
  const std::size_t m = w.size();
  std::vector<Big> l(m, Big(0));
  l[0] = 1;
  std::vector<bool> chosen(m);
  for (std::size_t size = 1; size < m; ++size) {
    std::fill(chosen.begin(), chosen.end(), false);
    std::fill(chosen.begin(), chosen.begin() + static_cast<long>(size), true);
    do {
      Big prod = 1;
      for (std::size_t j = 0; j < m; ++j) {
        if (chosen[j]) prod *= w[j];
      }
      l[size] = l[size] == 0 ? prod : boost::multiprecision::lcm(l[size], prod);
    } while (std::prev_permutation(chosen.begin(), chosen.end()));
  }
  return l;
}

/// Splits |num|/den into the parts prime to and supported on `primes` by
/// factoring both completely.
struct Split {
  Big unit_num, unit_den, prime_num, prime_den;
};
inline Split split_by_factoring(U num, U den, const std::set<U>& primes) {
  Split s{1, 1, 1, 1};
  auto distribute = [&](U x, Big& unit, Big& prime) {
    for (U p : primes_of(x)) {
      U part = p_part(x, p);
      (primes.count(p) ? prime : unit) *= part;
    }
  };
  distribute(num, s.unit_num, s.prime_num);
  distribute(den, s.unit_den, s.prime_den);
  return s;
}

/// All sorted vectors of the given length with entries in [1, max].
inline std::vector<std::vector<U>> sorted_vectors(std::size_t length, U max) {
  std::vector<std::vector<U>> out;
  std::vector<U> cur(length, 1);
  while (true) {
    out.push_back(cur);
    std::size_t i = length;
    while (i > 0 && cur[i - 1] == max) --i;
    if (i == 0) break;
    U v = cur[i - 1] + 1;
    for (std::size_t j = i - 1; j < length; ++j) cur[j] = v;
  }
  return out;
}

}  // namespace oracle
