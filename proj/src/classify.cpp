#include "wps/classify.hpp"

#include <algorithm>
#include <limits>
#include <thread>

namespace wps {

WeightVector homeo_canonical_form(const WeightVector& w) {
  return normalize(w).sorted();
}

WeightVector homotopy_canonical_form(const WeightVector& w) {
  return chi_star(normalize(w));
}

bool homeomorphic(const WeightVector& a, const WeightVector& b) {
  return homeo_canonical_form(a) == homeo_canonical_form(b);
}

bool homotopy_equivalent(const WeightVector& a, const WeightVector& b) {
  return homotopy_canonical_form(a) == homotopy_canonical_form(b);
}

std::uint64_t census_size(std::size_t dim, Weight max_weight) {
  // multisets of size k = dim+1 from max_weight values: C(max_weight+k-1, k)
  const std::uint64_t k = dim + 1;
  const BigInt cap = std::numeric_limits<std::uint64_t>::max();
  BigInt out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    out = out * (BigInt(max_weight) + i - 1) / i;
    if (out > cap) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(out);
}

namespace {

constexpr std::size_t kBatch = 1 << 14;

struct Forms {
  WeightVector homeo;
  WeightVector homotopy;
};

// Advances a non-decreasing vector in lexicographic order; false when done.
bool next_sorted(std::vector<Weight>& v, Weight max_weight) {
  std::size_t i = v.size();
  while (i > 0 && v[i - 1] == max_weight) --i;
  if (i == 0) return false;
  const Weight bumped = v[i - 1] + 1;
  std::fill(v.begin() + static_cast<std::ptrdiff_t>(i - 1), v.end(), bumped);
  return true;
}

void classify_batch(const std::vector<WeightVector>& batch,
                    std::vector<Forms>& forms, unsigned threads) {
  forms.assign(batch.size(), Forms{WeightVector{1}, WeightVector{1}});
  auto work = [&](std::size_t start) {
    for (std::size_t i = start; i < batch.size(); i += threads) {
      WeightVector homeo = homeo_canonical_form(batch[i]);
      forms[i] = {homeo, chi_star(homeo)};
    }
  };
  if (threads <= 1 || batch.size() < 2 * threads) {
    threads = 1;
    work(0);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  for (auto& th : pool) th.join();
}

}  // namespace

CensusReport census(const CensusOptions& options) {
  if (options.max_weight == 0) {
    throw InvalidInput("census: max weight must be at least 1");
  }
  unsigned threads = options.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

  const std::uint64_t required = census_size(options.dim, options.max_weight);
  std::map<WeightVector, ClassRecord> records;
  CensusReport report{options.dim, options.max_weight, 0, {}, {}, 0};

  std::vector<Weight> cursor(options.dim + 1, 1);
  bool more = true;
  std::vector<WeightVector> batch;
  std::vector<Forms> forms;
  while (more) {
    batch.clear();
    while (more && batch.size() < kBatch) {
      if (report.vectors + batch.size() >= options.limit) {
        throw ResourceLimit("census budget of " + std::to_string(options.limit) +
                                " vectors exhausted after " +
                                std::to_string(report.vectors) + " of " +
                                std::to_string(required),
                            report.vectors, required);
      }
      batch.emplace_back(cursor);
      more = next_sorted(cursor, options.max_weight);
    }
    classify_batch(batch, forms, threads);
    for (std::size_t i = 0; i < batch.size(); ++i) {
      auto [it, inserted] = records.try_emplace(
          forms[i].homeo,
          ClassRecord{batch[i], forms[i].homeo, forms[i].homotopy, {}});
      if (!inserted && it->second.homotopy_class != forms[i].homotopy) {
        ++report.refinement_violations;
      }
      if (options.keep_members) it->second.members.push_back(batch[i]);
    }
    report.vectors += batch.size();
  }

  report.classes.reserve(records.size());
  for (auto& [key, record] : records) {
    report.homotopy_classes[record.homotopy_class].push_back(record.homeo_class);
    report.classes.push_back(std::move(record));
  }
  return report;
}

}  // namespace wps
