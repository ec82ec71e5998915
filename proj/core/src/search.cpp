#include "kissing/search.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <chrono>
#include <cstdint>
#include <mutex>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>

#include "kissing/errors.hpp"
#include "kissing/lsq.hpp"
#include "kissing/matrix.hpp"
#include "kissing/oracle.hpp"

namespace kissing {
namespace {

using i128 = __int128;

// Subsets per work unit.  Chunks are claimed dynamically but merged in
// index order, which is what makes the result worker-count independent.
constexpr u128 kChunkSize = u128{1} << 20;

// Beyond this the per-chunk bookkeeping gets silly; scan such a range
// in resumed windows instead.
constexpr u128 kMaxWindow = u128{1} << 40;

// Largest matrix the stack-buffer kernel accepts.
constexpr int kMaxFastDim = 16;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

BigInt bigint_from_i128(i128 v) {
  const u128 mag = v < 0 ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
  const BigInt b{u128_to_string(mag)};
  return v < 0 ? -b : b;
}

// Fraction-free (Bareiss) elimination on a stack buffer.  Returns false
// the moment any product leaves the 64-bit range; until then every
// intermediate value is an exact minor of the input.
bool det_i64(std::int64_t* m, int n, std::int64_t& out) {
  if (n == 0) {
    out = 1;
    return true;
  }
  int sign = 1;
  std::int64_t prev = 1;
  for (int c = 0; c + 1 < n; ++c) {
    int pivot = c;
    while (pivot < n && m[pivot * n + c] == 0) ++pivot;
    if (pivot == n) {
      out = 0;
      return true;
    }
    if (pivot != c) {
      for (int j = c; j < n; ++j) std::swap(m[c * n + j], m[pivot * n + j]);
      sign = -sign;
    }
    const std::int64_t pv = m[c * n + c];
    for (int i = c + 1; i < n; ++i) {
      const std::int64_t mic = m[i * n + c];
      for (int j = c + 1; j < n; ++j) {
        std::int64_t t1, t2, num;
        if (__builtin_mul_overflow(m[i * n + j], pv, &t1) ||
            __builtin_mul_overflow(mic, m[c * n + j], &t2) ||
            __builtin_sub_overflow(t1, t2, &num))
          return false;
        if (num == INT64_MIN && prev == -1) return false;
        m[i * n + j] = num / prev;  // exact
      }
      m[i * n + c] = 0;
    }
    prev = pv;
  }
  const std::int64_t last = m[(n - 1) * n + (n - 1)];
  if (sign < 0 && last == INT64_MIN) return false;
  out = sign < 0 ? -last : last;
  return true;
}

enum class Outcome { candidate, singular, zero, overflow };

// det(M)^2 / det(G) of a full system, in machine words.  The numerator
// of any int64 determinant fits i128 squared; the Gram determinant of a
// candidate is positive.
struct FastValue {
  i128 num = 0;
  std::int64_t den = 1;
};

// A positive squared distance in whichever representation produced it.
struct Value {
  bool big = false;
  FastValue fast;     // when !big
  BigRational exact;  // when big

  BigRational to_rational() const {
    if (big) return exact;
    return BigRational(bigint_from_i128(fast.num),
                       BigInt(static_cast<long>(fast.den)));
  }
};

// Three-way comparison of two positive values; exact in all branches.
int cmp_values(const Value& a, const Value& b) {
  if (!a.big && !b.big) {
    i128 lhs, rhs;
    if (!__builtin_mul_overflow(a.fast.num, static_cast<i128>(b.fast.den),
                                &lhs) &&
        !__builtin_mul_overflow(b.fast.num, static_cast<i128>(a.fast.den),
                                &rhs))
      return lhs < rhs ? -1 : (rhs < lhs ? 1 : 0);
  }
  const BigRational x = a.to_rational();
  const BigRational y = b.to_rational();
  return x < y ? -1 : (y < x ? 1 : 0);
}

// One subset through the machine-word path.  flat holds the row list's
// entries contiguously, d per row.
Outcome eval_fast(const int* flat, int d, const int* comb, FastValue& val) {
  if (d > kMaxFastDim) return Outcome::overflow;
  std::int64_t m[kMaxFastDim * kMaxFastDim];
  for (int r = 0; r < d; ++r) {
    const int* row = flat + static_cast<std::size_t>(comb[r]) * d;
    for (int c = 0; c < d; ++c) m[r * d + c] = row[c];
  }
  // Gram matrix of the A-part before elimination clobbers m.
  const int w = d - 1;
  std::int64_t g[kMaxFastDim * kMaxFastDim];
  for (int i = 0; i < w; ++i) {
    for (int j = i; j < w; ++j) {
      std::int64_t acc = 0;
      for (int r = 0; r < d; ++r) {
        std::int64_t p;
        if (__builtin_mul_overflow(m[r * d + i], m[r * d + j], &p) ||
            __builtin_add_overflow(acc, p, &acc))
          return Outcome::overflow;
      }
      g[i * w + j] = acc;
      g[j * w + i] = acc;
    }
  }
  std::int64_t det_g;
  if (!det_i64(g, w, det_g)) return Outcome::overflow;
  if (det_g == 0) return Outcome::singular;
  std::int64_t det_m;
  if (!det_i64(m, d, det_m)) return Outcome::overflow;
  if (det_m == 0) return Outcome::zero;
  val.num = static_cast<i128>(det_m) * det_m;
  val.den = det_g;
  return Outcome::candidate;
}

// Arbitrary-precision path: full normal-equations solve.
Outcome eval_exact(const RowList& list, std::span<const int> comb, Value& out) {
  const AffineSolution sol = affine_distance(make_system(list, comb));
  if (sol.singular) return Outcome::singular;
  if (sol.squared_distance.is_zero()) return Outcome::zero;
  out.big = true;
  out.exact = sol.squared_distance;
  return Outcome::candidate;
}

struct ChunkResult {
  bool have = false;
  Value value;
  std::vector<int> comb;
  u128 singular = 0;
  u128 zero = 0;
};

void process_chunk(const RowList& list, const std::vector<int>& flat,
                   u128 first, std::uint64_t count, Kernel kernel,
                   ChunkResult& res) {
  const int d = list.d;
  const auto nrows = static_cast<unsigned>(list.rows.size());
  std::vector<int> comb(d);
  unrank_combination(first, nrows, static_cast<unsigned>(d), comb);
  for (std::uint64_t i = 0;; ++i) {
    Value val;
    Outcome oc;
    if (kernel == Kernel::fast) {
      FastValue fv;
      oc = eval_fast(flat.data(), d, comb.data(), fv);
      if (oc == Outcome::candidate) {
        val.big = false;
        val.fast = fv;
      } else if (oc == Outcome::overflow) {
        oc = eval_exact(list, comb, val);
      }
    } else {
      oc = eval_exact(list, comb, val);
    }
    switch (oc) {
      case Outcome::singular:
        ++res.singular;
        break;
      case Outcome::zero:
        ++res.zero;
        break;
      case Outcome::candidate:
        // Strict improvement only: the first subset of a tie class wins,
        // and chunks run in index order within themselves.
        if (!res.have || cmp_values(val, res.value) < 0) {
          res.have = true;
          res.value = std::move(val);
          res.comb = comb;
        }
        break;
      case Outcome::overflow:
        assert(false);  // eval_exact never reports overflow
        break;
    }
    if (i + 1 == count) break;
    next_combination(comb, nrows);
  }
}

}  // namespace

RangeMinimum enumerate_min(const RowList& list, const SearchConfig& config) {
  const auto t0 = std::chrono::steady_clock::now();
  if (list.d < 2) throw std::invalid_argument("enumerate_min: d must be >= 2");
  if (config.worker_count < 1)
    throw std::invalid_argument("enumerate_min: worker_count must be >= 1");
  const std::size_t nrows = list.rows.size();
  const auto d = static_cast<std::size_t>(list.d);
  if (nrows < d)
    throw EmptySearchError("row list has " + std::to_string(nrows) +
                           " rows, fewer than d = " + std::to_string(d));

  const u128 total =
      binomial_u128(static_cast<unsigned>(nrows), static_cast<unsigned>(d));
  if (total == kU128Max)
    throw ResourceGuardError("subset count exceeds the 128-bit index space");
  const u128 start = std::min(config.resume_token.value_or(0), total);
  u128 window = total - start;
  if (config.max_subsets && *config.max_subsets < window)
    window = *config.max_subsets;

  RangeMinimum out;
  out.complete = start == 0 && window == total;
  if (window == 0) {
    out.stats.elapsed_seconds = seconds_since(t0);
    return out;
  }
  if (window > kMaxWindow)
    throw ResourceGuardError(
        "subset window larger than 2^40; scan it as resumed pieces");

  std::vector<int> flat(nrows * d);
  for (std::size_t r = 0; r < nrows; ++r)
    std::copy(list.rows[r].entries.begin(), list.rows[r].entries.end(),
              flat.begin() + static_cast<std::ptrdiff_t>(r * d));

  const auto nchunks =
      static_cast<std::size_t>((window + kChunkSize - 1) / kChunkSize);
  std::vector<ChunkResult> results(nchunks);
  std::atomic<std::size_t> next_chunk{0};
  std::atomic<std::uint64_t> done{0};
  std::mutex report_mutex;
  u128 next_report = config.progress_interval;

  auto worker = [&] {
    for (;;) {
      const std::size_t c = next_chunk.fetch_add(1, std::memory_order_relaxed);
      if (c >= nchunks) return;
      const u128 first = start + static_cast<u128>(c) * kChunkSize;
      const auto count =
          static_cast<std::uint64_t>(std::min(kChunkSize, start + window - first));
      process_chunk(list, flat, first, count, config.kernel, results[c]);
      const std::uint64_t so_far =
          done.fetch_add(count, std::memory_order_relaxed) + count;
      if (config.progress != nullptr && config.progress_interval > 0) {
        const std::lock_guard<std::mutex> lock(report_mutex);
        if (so_far >= next_report) {
          while (next_report <= so_far) next_report += config.progress_interval;
          *config.progress << "rows(" << list.split.n << "," << list.split.m
                           << "): " << u128_to_string(so_far) << "/"
                           << u128_to_string(window) << " subsets, "
                           << seconds_since(t0) << "s" << std::endl;
        }
      }
    }
  };

  const int extra = static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(config.worker_count - 1),
                            nchunks - 1));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(extra));
  for (int i = 0; i < extra; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  const ChunkResult* best = nullptr;
  for (const ChunkResult& r : results) {
    out.stats.singular_count += r.singular;
    out.stats.zero_count += r.zero;
    if (r.have && (best == nullptr || cmp_values(r.value, best->value) < 0))
      best = &r;
  }
  out.stats.subsets_evaluated = window;
  if (best != nullptr) {
    out.found = true;
    out.squared = best->value.to_rational();
    out.row_indices = best->comb;
  }
  out.stats.elapsed_seconds = seconds_since(t0);
  return out;
}

std::vector<Split> splits(int d) {
  if (d < 2) throw std::invalid_argument("splits: d must be >= 2");
  std::vector<Split> out;
  for (int n = 0; n <= (d - 1) / 2; ++n) out.push_back({n, d - 1 - n});
  return out;
}

namespace {

BigInt factorial(int n) {
  BigInt acc = 1;
  for (int i = 2; i <= n; ++i) acc *= BigInt(i);
  return acc;
}

// C(n, r) for arbitrary-precision n and small r.
BigInt binomial_big(const BigInt& n, int r) {
  BigInt acc = 1;
  for (int i = 0; i < r; ++i) {
    acc *= n - BigInt(i);
    acc = BigInt::div_exact(acc, BigInt(i + 1));
  }
  return acc;
}

}  // namespace

SearchSpaceCounts search_space_counts(int d, int k, long row_count) {
  if (d < 2 || k < 1 || row_count < 0)
    throw std::invalid_argument(
        "search_space_counts: need d >= 2, k >= 1, row_count >= 0");
  SearchSpaceCounts out;
  const BigInt points = BigInt::pow(k + 1, static_cast<unsigned long>(d));
  const BigInt vertex_splits =
      BigInt::pow(2, static_cast<unsigned long>(d) + 1) - 2;
  out.naive = vertex_splits * binomial_big(points, d + 1);
  const BigInt group = BigInt::pow(2, static_cast<unsigned long>(d)) * factorial(d);
  out.symmetry_limit = BigInt::div_floor(out.naive, group);
  out.rowlist = BigInt((d + 1) / 2) * binomial_big(BigInt(row_count), d);
  return out;
}

SimplexPair reconstruct_witness(const RowList& list,
                                std::span<const int> row_indices, int k) {
  const int d = list.d;
  if (static_cast<int>(row_indices.size()) != d)
    throw std::invalid_argument("reconstruct_witness: need exactly d rows");
  const int n = list.split.n;
  const int m = list.split.m;
  SimplexPair pair;
  pair.k = k;
  pair.p.assign(static_cast<std::size_t>(n) + 1, std::vector<int>(d));
  pair.q.assign(static_cast<std::size_t>(m) + 1, std::vector<int>(d));
  for (int j = 0; j < d; ++j) {
    const int idx = row_indices[static_cast<std::size_t>(j)];
    if (idx < 0 || idx >= static_cast<int>(list.rows.size()))
      throw std::invalid_argument("reconstruct_witness: row index out of range");
    const GeneratorTuple g = realize_row(list.rows[static_cast<std::size_t>(idx)], k);
    pair.p[0][static_cast<std::size_t>(j)] = g.x0;
    for (int i = 0; i < n; ++i)
      pair.p[static_cast<std::size_t>(i) + 1][static_cast<std::size_t>(j)] =
          g.x[static_cast<std::size_t>(i)];
    pair.q[0][static_cast<std::size_t>(j)] = g.y0;
    for (int i = 0; i < m; ++i)
      pair.q[static_cast<std::size_t>(i) + 1][static_cast<std::size_t>(j)] =
          g.y[static_cast<std::size_t>(i)];
  }
  validate(pair);
  return pair;
}

SimplexPair reconstruct_witness(const SearchResult& result, const RowList& list,
                                int k) {
  if (list.d != result.d || !(list.split == result.witness_split))
    throw std::invalid_argument(
        "reconstruct_witness: row list does not match the result");
  return reconstruct_witness(list, result.witness_row_indices, k);
}

SearchResult epsilon(int d, int k, const SearchConfig& config) {
  const auto t0 = std::chrono::steady_clock::now();
  if (d < 2 || k < 1)
    throw std::invalid_argument("epsilon: need d >= 2 and k >= 1");
  if (config.worker_count < 1)
    throw std::invalid_argument("epsilon: worker_count must be >= 1");

  SearchResult out;
  out.d = d;
  out.k = k;
  out.complete = true;

  struct SplitOutcome {
    RangeMinimum min;
    RowList list;
  };
  std::optional<SplitOutcome> best;

  // resume_token and max_subsets address the concatenation of the split
  // ranges, so both are consumed split by split.
  u128 skip = config.resume_token.value_or(0);
  std::optional<u128> budget = config.max_subsets;

  for (const Split& s : splits(d)) {
    RowList list = generate_rows(d, k, s.n, s.m);
    const u128 total = binomial_u128(static_cast<unsigned>(list.rows.size()),
                                     static_cast<unsigned>(d));
    if (total == kU128Max)
      throw ResourceGuardError("subset count exceeds the 128-bit index space");

    SearchConfig local = config;
    const u128 local_skip = std::min(skip, total);
    skip -= local_skip;
    local.resume_token = local_skip;
    local.max_subsets = budget;  // enumerate_min clamps to what is left

    const RangeMinimum r = enumerate_min(list, local);
    if (budget) *budget -= r.stats.subsets_evaluated;
    out.complete = out.complete && r.complete;
    out.stats.subsets_evaluated += r.stats.subsets_evaluated;
    out.stats.singular_count += r.stats.singular_count;
    out.stats.zero_count += r.stats.zero_count;
    // Strict improvement: on ties the earlier split keeps the witness.
    if (r.found && (!best || r.squared < best->min.squared))
      best = SplitOutcome{r, std::move(list)};
  }

  if (!best)
    throw NoCandidateError("no positive squared distance in the scanned range"
                           " for d=" + std::to_string(d) +
                           ", k=" + std::to_string(k));

  out.min_squared_distance = best->min.squared;
  out.inv_eps_squared = best->min.squared.reciprocal();
  out.witness_split = best->list.split;
  out.witness_row_indices = best->min.row_indices;

  // The winning subset is always re-solved exactly, whatever kernel ran.
  const AffineSolution sol =
      affine_distance(make_system(best->list, out.witness_row_indices));
  if (sol.singular || !(sol.squared_distance == out.min_squared_distance))
    throw Error("winning subset failed its exact recheck");
  const bool sharp = sharpness_check(sol, best->list.split);

  bool oracle_match = false;
  try {
    SimplexPair pair = reconstruct_witness(best->list, out.witness_row_indices, k);
    oracle_match = simplex_distance_squared(pair) == out.min_squared_distance;
    out.witness = std::move(pair);
  } catch (const NoExactRealizationError&) {
    out.witness.reset();
  }

  out.certified =
      out.complete && sharp && out.witness.has_value() && oracle_match;
  out.stats.elapsed_seconds = seconds_since(t0);
  return out;
}

}  // namespace kissing
