#include "wps/numth.hpp"

#include <numeric>

namespace wps {

bool is_prime(Weight n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (Weight d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Weight gcd(Weight a, Weight b) { return std::gcd(a, b); }

BigInt Factorization::value() const {
  BigInt out = 1;
  for (const auto& [p, e] : factors) {
    for (unsigned i = 0; i < e; ++i) out *= p;
  }
  return out;
}

Factorization factorize(std::int64_t m) {
  if (m <= 0) {
    throw InvalidInput("factorize: argument must be positive, got " +
                       std::to_string(m));
  }
  return factorize_weight(static_cast<Weight>(m));
}

Weight checked_mul(Weight a, Weight b) {
  Weight out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw InvalidInput("product " + std::to_string(a) + " * " +
                       std::to_string(b) + " exceeds 64 bits");
  }
  return out;
}

Factorization factorize_weight(Weight m) {
  if (m == 0) throw InvalidInput("factorize: argument must be positive");
  Factorization f;
  Weight rest = m;
  for (Weight d = 2; d <= rest / d; d += (d == 2 ? 1 : 2)) {
    while (rest % d == 0) {
      ++f.factors[d];
      rest /= d;
    }
  }
  if (rest > 1) ++f.factors[rest];
  return f;
}

namespace {

void require_prime(Weight p, const char* who) {
  if (!is_prime(p)) {
    throw InvalidInput(std::string(who) + ": " + std::to_string(p) +
                       " is not prime");
  }
}

}  // namespace

unsigned valuation(Weight m, Weight p) {
  require_prime(p, "valuation");
  if (m == 0) throw InvalidInput("valuation: argument must be positive");
  unsigned v = 0;
  while (m % p == 0) {
    m /= p;
    ++v;
  }
  return v;
}

Weight p_part(Weight m, Weight p) {
  require_prime(p, "p_part");
  if (m == 0) throw InvalidInput("p_part: argument must be positive");
  Weight out = 1;
  while (m % p == 0) {
    m /= p;
    out *= p;
  }
  return out;
}

// --- PrimeSet ---------------------------------------------------------------

PrimeSet::PrimeSet(std::initializer_list<Weight> primes) {
  for (Weight p : primes) insert(p);
}

PrimeSet::PrimeSet(const std::vector<Weight>& primes) {
  for (Weight p : primes) insert(p);
}

void PrimeSet::insert(Weight p) {
  require_prime(p, "PrimeSet");
  if (!primes_.insert(p).second) {
    throw InvalidInput("PrimeSet: duplicate prime " + std::to_string(p));
  }
}

bool PrimeSet::coprime_to(const BigInt& x) const {
  for (Weight p : primes_) {
    if (x % p == 0) return false;
  }
  return true;
}

bool PrimeSet::supports(const BigInt& x) const {
  BigInt rest = abs(x);
  if (rest == 0) return false;
  for (Weight p : primes_) {
    while (rest % p == 0) rest /= p;
  }
  return rest == 1;
}

// --- PLocalRational ---------------------------------------------------------

PLocalRational::PLocalRational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_ == 0) throw InvalidInput("rational with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

namespace {

BigInt parse_integer(std::string_view text, bool allow_sign) {
  if (text.empty()) throw InvalidInput("empty integer");
  std::size_t pos = 0;
  if (allow_sign && (text[0] == '-' || text[0] == '+')) pos = 1;
  if (pos == text.size()) throw InvalidInput("missing digits");
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw InvalidInput("not an integer: '" + std::string(text) + "'");
    }
  }
  BigInt v(std::string(text.substr(pos)));
  return text[0] == '-' ? BigInt(-v) : v;
}

std::string_view trim(std::string_view s) {
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

PLocalRational PLocalRational::parse(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return PLocalRational(parse_integer(text, true), 1);
  }
  BigInt den = parse_integer(trim(text.substr(slash + 1)), false);
  if (den == 0) throw InvalidInput("rational with zero denominator");
  return PLocalRational(parse_integer(trim(text.substr(0, slash)), true), den);
}

PLocalRational PLocalRational::pow(unsigned k) const {
  return PLocalRational(boost::multiprecision::pow(num_, k),
                        boost::multiprecision::pow(den_, k));
}

std::string PLocalRational::to_string() const {
  return num_.str() + "/" + den_.str();
}

PLocalRational operator*(const PLocalRational& a, const PLocalRational& b) {
  return PLocalRational(a.num_ * b.num_, a.den_ * b.den_);
}

PLocalRational operator/(const PLocalRational& a, const PLocalRational& b) {
  if (b.is_zero()) throw InvalidInput("division by zero");
  return PLocalRational(a.num_ * b.den_, a.den_ * b.num_);
}

bool is_p_local(const PLocalRational& x, const PrimeSet& primes) {
  return primes.coprime_to(x.denominator());
}

bool is_p_local_unit(const PLocalRational& x, const PrimeSet& primes) {
  if (!is_p_local(x, primes)) {
    throw NotAnElement(x.to_string() + " does not lie in Z_P");
  }
  return primes.coprime_to(x.numerator());
}

UnitSplit unit_split(const PLocalRational& x, const PrimeSet& primes) {
  if (x.is_zero()) throw InvalidInput("unit_split: zero has no splitting");
  BigInt num_rest = abs(x.numerator());
  BigInt den_rest = x.denominator();
  BigInt num_p = 1;
  BigInt den_p = 1;
  for (Weight p : primes) {
    while (num_rest % p == 0) {
      num_rest /= p;
      num_p *= p;
    }
    while (den_rest % p == 0) {
      den_rest /= p;
      den_p *= p;
    }
  }
  if (x.sign() < 0) num_rest = -num_rest;
  return {PLocalRational(num_rest, den_rest), PLocalRational(num_p, den_p)};
}

}  // namespace wps
