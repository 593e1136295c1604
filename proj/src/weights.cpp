#include "wps/weights.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

namespace wps {

WeightVector::WeightVector(std::initializer_list<Weight> weights)
    : WeightVector(std::vector<Weight>(weights)) {}

WeightVector::WeightVector(std::vector<Weight> weights)
    : weights_(std::move(weights)) {
  if (weights_.empty()) throw InvalidInput("weight vector must be nonempty");
  for (Weight w : weights_) {
    if (w == 0) throw InvalidInput("weights must be positive");
  }
}

std::vector<Weight> parse_unsigned_list(std::string_view text) {
  std::vector<Weight> out;
  auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r';
  };
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view field = text.substr(
        start, comma == std::string_view::npos ? std::string_view::npos
                                               : comma - start);
    while (!field.empty() && is_space(field.front())) field.remove_prefix(1);
    while (!field.empty() && is_space(field.back())) field.remove_suffix(1);
    if (field.empty()) {
      throw InvalidInput("malformed list '" + std::string(text) + "'");
    }
    Weight value = 0;
    for (char c : field) {
      if (c < '0' || c > '9') {
        throw InvalidInput("malformed entry '" + std::string(field) + "'");
      }
      Weight digit = static_cast<Weight>(c - '0');
      if (value > (std::numeric_limits<Weight>::max() - digit) / 10) {
        throw InvalidInput("entry out of range '" + std::string(field) + "'");
      }
      value = value * 10 + digit;
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

WeightVector WeightVector::parse(std::string_view text) {
  return WeightVector(parse_unsigned_list(text));
}

WeightVector WeightVector::sorted() const {
  auto copy = weights_;
  std::sort(copy.begin(), copy.end());
  return WeightVector(std::move(copy));
}

WeightVector WeightVector::scaled(Weight m) const {
  auto copy = weights_;
  for (auto& w : copy) w = checked_mul(w, m);
  return WeightVector(std::move(copy));
}

Weight WeightVector::gcd() const {
  return std::accumulate(weights_.begin(), weights_.end(), Weight{0},
                         [](Weight a, Weight b) { return std::gcd(a, b); });
}

std::string WeightVector::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(weights_[i]);
  }
  return out;
}

std::vector<Weight> prime_divisors(const WeightVector& w) {
  std::set<Weight> primes;
  for (Weight x : w) {
    for (const auto& [p, e] : factorize_weight(x).factors) {
      primes.insert(p);
    }
  }
  return {primes.begin(), primes.end()};
}

namespace {

std::size_t count_prime_to(const WeightVector& w, Weight p) {
  return static_cast<std::size_t>(
      std::count_if(w.begin(), w.end(), [p](Weight x) { return x % p != 0; }));
}

}  // namespace

bool is_normalized(const WeightVector& w) {
  if (w.size() == 1) return w[0] == 1;
  for (Weight p : prime_divisors(w)) {
    if (count_prime_to(w, p) < 2) return false;
  }
  return true;
}

std::vector<ReductionMove> available_moves(const WeightVector& w) {
  std::vector<ReductionMove> moves;
  for (Weight p : prime_divisors(w)) {
    std::size_t coprime = count_prime_to(w, p);
    if (coprime == 0) {
      moves.push_back({ReductionMove::Kind::scale, p, 0});
    } else if (coprime == 1 && w.size() >= 2) {
      auto it = std::find_if(w.begin(), w.end(),
                             [p](Weight x) { return x % p != 0; });
      moves.push_back({ReductionMove::Kind::reduce, p,
                       static_cast<std::size_t>(it - w.begin())});
    }
  }
  return moves;
}

WeightVector apply_move(const WeightVector& w, const ReductionMove& move) {
  std::vector<Weight> out = w.values();
  if (move.kind == ReductionMove::Kind::scale) {
    if (move.factor == 0 || w.gcd() % move.factor != 0) {
      throw InvalidInput("scale move does not divide every weight");
    }
    for (auto& x : out) x /= move.factor;
    return WeightVector(std::move(out));
  }
  const Weight p = move.factor;
  if (!is_prime(p) || move.kept_index >= w.size() || w.size() < 2) {
    throw InvalidInput("malformed reduction move");
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    bool divisible = out[i] % p == 0;
    if (i == move.kept_index) {
      if (divisible) throw InvalidInput("kept weight must be prime to p");
    } else {
      if (!divisible) throw InvalidInput("reduction needs all other weights divisible by p");
      out[i] /= p;
    }
  }
  return WeightVector(std::move(out));
}

Normalization normalize_traced(const WeightVector& w) {
  Normalization out{w, {}};
  Weight g = w.gcd();
  if (g > 1) {
    out.moves.push_back({ReductionMove::Kind::scale, g, 0});
    out.result = apply_move(out.result, out.moves.back());
  }
  // A reduction at p leaves every other prime's divisibility pattern alone
  // and keeps the gcd at 1, so one ascending pass reaches the fixpoint.
  for (Weight p : prime_divisors(out.result)) {
    while (out.result.size() >= 2 && count_prime_to(out.result, p) == 1) {
      const WeightVector& cur = out.result;
      auto it = std::find_if(cur.begin(), cur.end(),
                             [p](Weight x) { return x % p != 0; });
      ReductionMove move{ReductionMove::Kind::reduce, p,
                         static_cast<std::size_t>(it - cur.begin())};
      out.result = apply_move(cur, move);
      out.moves.push_back(move);
    }
  }
  return out;
}

WeightVector normalize(const WeightVector& w) {
  return normalize_traced(w).result;
}

WeightVector p_content(const WeightVector& w, Weight p) {
  std::vector<Weight> out;
  out.reserve(w.size());
  for (Weight x : w) out.push_back(p_part(x, p));
  return WeightVector(std::move(out));
}

const PContentColumn* PContentTable::find(Weight p) const {
  for (const auto& c : columns) {
    if (c.prime == p) return &c;
  }
  return nullptr;
}

PContentTable p_content_table(const WeightVector& w) {
  PContentTable table;
  for (Weight p : prime_divisors(w)) {
    PContentColumn col{p, p_content(w, p).values(), {}};
    col.sorted = col.unsorted;
    std::sort(col.sorted.begin(), col.sorted.end());
    table.columns.push_back(std::move(col));
  }
  return table;
}

WeightVector chi_star(const WeightVector& w) {
  const WeightVector normal = normalize(w);
  std::vector<Weight> out(normal.size(), 1);
  for (const auto& col : p_content_table(normal).columns) {
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] = checked_mul(out[i], col.sorted[i]);
    }
  }
  return WeightVector(std::move(out));
}

bool is_divisor_chain(const WeightVector& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i + 1] % w[i] != 0) return false;
  }
  return true;
}

std::size_t divisor_count(const WeightVector& w, Weight d) {
  if (d == 0) throw InvalidInput("divisor_count: d must be positive");
  return static_cast<std::size_t>(
      std::count_if(w.begin(), w.end(), [d](Weight x) { return x % d == 0; }));
}

std::map<Weight, std::size_t> divisor_count_function(const WeightVector& w,
                                                     Weight max_d) {
  std::map<Weight, std::size_t> f;
  for (Weight d = 1; d <= max_d; ++d) f[d] = divisor_count(w, d);
  return f;
}

WeightVector reconstruct_weights(const std::map<Weight, std::size_t>& f,
                                 Weight max_d) {
  if (max_d == 0) throw InvalidInput("reconstruct_weights: bound must be positive");
  // exact[m] = number of weights equal to m
  std::vector<std::int64_t> exact(max_d + 1, 0);
  for (Weight m = max_d; m >= 1; --m) {
    auto it = f.find(m);
    if (it == f.end()) {
      throw InconsistentData("divisor count missing for d = " + std::to_string(m));
    }
    std::int64_t g = static_cast<std::int64_t>(it->second);
    for (Weight d = 2 * m; d <= max_d; d += m) g -= exact[d];
    if (g < 0) {
      throw InconsistentData("divisor counts are not realisable at d = " +
                             std::to_string(m));
    }
    exact[m] = g;
  }
  std::vector<Weight> out;
  for (Weight m = 1; m <= max_d; ++m) {
    out.insert(out.end(), static_cast<std::size_t>(exact[m]), m);
  }
  if (out.empty() || out.size() != f.at(1)) {
    throw InconsistentData("divisor counts describe no weights");
  }
  return WeightVector(std::move(out));
}

std::vector<Weight> p_comparison_exponents(const WeightVector& w, Weight p) {
  std::vector<Weight> out;
  out.reserve(w.size());
  for (Weight x : w) out.push_back(x / p_part(x, p));
  return out;
}

}  // namespace wps
