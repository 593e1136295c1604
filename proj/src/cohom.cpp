#include "wps/cohom.hpp"

#include <algorithm>
#include <cstdint>

namespace wps {

LSequence::LSequence(std::vector<BigInt> values) : values_(std::move(values)) {
  if (values_.empty() || values_.front() != 1) {
    throw InvalidInput("l-sequence must start with l_0 = 1");
  }
  for (std::size_t i = 0; i + 1 < values_.size(); ++i) {
    if (values_[i] <= 0 || values_[i + 1] % values_[i] != 0) {
      throw InvalidInput("l-sequence must be a divisor chain");
    }
  }
}

LSequence l_sequence(const WeightVector& w) {
  const std::size_t n = w.dim();
  std::vector<BigInt> l(n + 1, BigInt(1));
  for (const auto& col : p_content_table(w).columns) {
    // l_i picks up r_{n-i+1} ... r_n, so accumulate from the top.
    BigInt running = 1;
    for (std::size_t i = 1; i <= n; ++i) {
      running *= col.sorted[n + 1 - i];
      l[i] *= running;
    }
  }
  return LSequence(std::move(l));
}

LSequence l_sequence_via_subsets(const WeightVector& w) {
  const std::size_t count = w.size();
  if (count > 24) {
    throw InvalidInput("subset enumeration limited to 24 weights");
  }
  std::vector<BigInt> l(count, BigInt(0));
  l[0] = 1;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << count); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (size >= count) continue;  // l_{n+1} is not part of the sequence
    BigInt product = 1;
    for (std::size_t j = 0; j < count; ++j) {
      if (mask & (std::uint32_t{1} << j)) product *= w[j];
    }
    l[size] = l[size] == 0 ? product : boost::multiprecision::lcm(l[size], product);
  }
  return LSequence(std::move(l));
}

RingPresentation::RingPresentation(LSequence l) : l_(std::move(l)) {
  const std::size_t n = dim();
  c_.resize(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    c_[i].reserve(n - i + 1);
    for (std::size_t j = 0; i + j <= n; ++j) {
      BigInt num = l_[i] * l_[j];
      BigInt q, r;
      boost::multiprecision::divide_qr(num, l_[i + j], q, r);
      if (r != 0) {
        throw InvalidInput("structure constant l_i l_j / l_{i+j} is not integral");
      }
      c_[i].push_back(std::move(q));
    }
  }
}

const BigInt& RingPresentation::structure_constant(std::size_t i,
                                                   std::size_t j) const {
  if (i + j > dim()) throw InvalidInput("structure constant out of range");
  return c_[i][j];
}

RingPresentation ring(const WeightVector& w) {
  return RingPresentation(l_sequence(w));
}

GradedGroupList additive_cohomology(const WeightVector& w) {
  GradedGroupList out;
  for (std::size_t i = 0; i <= w.dim(); ++i) out.groups[2 * i] = 0;
  return out;
}

GradedGroupList lens_cohomology(Weight k, const WeightVector& w) {
  if (k == 0) throw InvalidInput("lens space needs k >= 1");
  std::vector<Weight> augmented = w.values();
  augmented.push_back(k);
  const LSequence base = l_sequence(w);
  const LSequence aug = l_sequence(WeightVector(std::move(augmented)));
  const std::size_t n = w.dim();

  GradedGroupList out;
  out.groups[0] = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    BigInt q, r;
    boost::multiprecision::divide_qr(aug[i], base[i], q, r);
    if (r != 0) throw InvalidInput("lens-space order is not integral");
    out.groups[2 * i] = q;
  }
  out.groups[2 * n + 1] = 0;
  return out;
}

bool graded_ring_iso(const RingPresentation& a, const RingPresentation& b) {
  if (a.dim() != b.dim()) return false;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (a.structure_constant(i, j) != b.structure_constant(i, j)) return false;
    }
  }
  // Constants are positive, so a sign vector works iff it is multiplicative
  // on every admissible pair. Bit i-1 of mask is set when e_i = -1.
  auto sign = [](std::uint64_t mask, std::size_t i) {
    return i == 0 ? 1 : ((mask >> (i - 1)) & 1 ? -1 : 1);
  };
  const std::uint64_t limit =
      n >= 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << n);
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    bool ok = true;
    for (std::size_t i = 1; ok && i <= n; ++i) {
      for (std::size_t j = i; ok && i + j <= n; ++j) {
        ok = sign(mask, i) * sign(mask, j) == sign(mask, i + j);
      }
    }
    if (ok) return true;
  }
  return false;
}

std::int64_t power_map_degree(std::int64_t a) { return a; }

std::int64_t map_degree(const ElementaryMap& map) {
  struct Visitor {
    std::int64_t operator()(const PowerMap& m) const {
      return power_map_degree(m.exponent);
    }
    std::int64_t operator()(const SingleConjugation&) const { return -1; }
    std::int64_t operator()(const ConstantMap&) const { return 0; }
  };
  return std::visit(Visitor{}, map);
}

std::vector<PLocalRational> endomorphism_multipliers(const PLocalRational& a,
                                                     std::size_t n) {
  std::vector<PLocalRational> out;
  out.reserve(n + 1);
  PLocalRational power(1);
  for (std::size_t k = 0; k <= n; ++k) {
    out.push_back(power);
    power = power * a;
  }
  return out;
}

}  // namespace wps
