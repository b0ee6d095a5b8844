#include "tricode/codes.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

namespace tricode {

namespace {

BigInt pow_int(unsigned base, std::uint64_t e) {
  BigInt r = 1;
  for (std::uint64_t i = 0; i < e; ++i) r *= base;
  return r;
}

// Pascal row: C(a, 0..a) as exact integers.
std::vector<BigInt> binomial_row(std::uint32_t a) {
  std::vector<BigInt> row(a + 1);
  row[0] = 1;
  for (std::uint32_t b = 1; b <= a; ++b) row[b] = row[b - 1] * (a - b + 1) / b;
  return row;
}

}  // namespace

void WeightEnumerator::validate() const {
  if (counts_[0] != 1) throw std::logic_error("WeightEnumerator: A_0 != 1");
  BigInt total = 0;
  for (const BigInt& c : counts_) {
    if (c < 0) throw std::logic_error("WeightEnumerator: negative count");
    total += c;
  }
  if (total != pow_int(3, k_)) {
    throw std::logic_error("WeightEnumerator: counts sum to " + total.str() + ", expected 3^" +
                           std::to_string(k_));
  }
}

std::uint32_t WeightEnumerator::min_nonzero_weight() const {
  for (std::uint32_t w = 1; w <= n_; ++w) {
    if (counts_[w] > 0) return w;
  }
  throw std::logic_error("WeightEnumerator: zero code has no nonzero weight");
}

std::vector<std::uint32_t> WeightEnumerator::nonzero_weights() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t w = 1; w <= n_; ++w) {
    if (counts_[w] > 0) out.push_back(w);
  }
  return out;
}

std::string WeightEnumerator::to_json() const {
  std::ostringstream os;
  os << "{\"n\":" << n_ << ",\"k\":" << k_ << ",\"counts\":{";
  bool first = true;
  for (std::uint32_t w = 0; w <= n_; ++w) {
    if (counts_[w] == 0) continue;
    if (!first) os << ',';
    first = false;
    os << '"' << w << "\":\"" << counts_[w].str() << '"';
  }
  os << "}}";
  return os.str();
}

WeightEnumerator macwilliams(const WeightEnumerator& we, unsigned q) {
  we.validate();
  const std::uint32_t n = we.length();
  const std::uint32_t k = we.dimension();
  const BigInt qk = pow_int(q, k);

  // Binomial rows only for the lengths that occur: C(i, .) and C(n-i, .)
  // for the weights i with A_i != 0.
  std::vector<std::vector<BigInt>> binom(n + 1);
  auto row = [&](std::uint32_t a) -> const std::vector<BigInt>& {
    if (binom[a].empty()) binom[a] = binomial_row(a);
    return binom[a];
  };

  std::vector<std::uint32_t> weights;
  for (std::uint32_t i = 0; i <= n; ++i) {
    if (we.count(i) > 0) weights.push_back(i);
  }

  // Powers of q-1.
  std::vector<BigInt> qm1(n + 1);
  qm1[0] = 1;
  for (std::uint32_t j = 1; j <= n; ++j) qm1[j] = qm1[j - 1] * (q - 1);

  WeightEnumerator out(n, n - k);
  for (std::uint32_t j = 0; j <= n; ++j) {
    BigInt acc = 0;
    for (std::uint32_t i : weights) {
      // Krawtchouk K_j(i) = sum_s (-1)^s (q-1)^{j-s} C(i,s) C(n-i,j-s).
      BigInt kr = 0;
      const auto& ci = row(i);
      const auto& cni = row(n - i);
      const std::uint32_t smax = std::min(j, i);
      for (std::uint32_t s = 0; s <= smax; ++s) {
        if (j - s > n - i) continue;
        const BigInt term = qm1[j - s] * ci[s] * cni[j - s];
        if (s & 1) {
          kr -= term;
        } else {
          kr += term;
        }
      }
      acc += we.count(i) * kr;
    }
    if (acc % qk != 0) {
      throw std::logic_error("macwilliams: transform not divisible by q^k; inconsistent input");
    }
    BigInt c = acc / qk;
    if (c < 0) throw std::logic_error("macwilliams: negative dual count; inconsistent input");
    out.set_count(j, std::move(c));
  }
  out.validate();
  return out;
}

LinearCode code_from_rows(std::uint32_t n, const std::vector<TritVec>& rows) {
  SpanBasis basis(n);
  for (const TritVec& r : rows) basis.insert(r);
  return LinearCode(std::move(basis));
}

LinearCode LinearCode::dual() const {
  const std::uint32_t n = length();
  const auto& piv = gen_.pivots();
  const auto& rows = gen_.rows();
  std::vector<bool> is_pivot(n, false);
  for (std::uint32_t p : piv) is_pivot[p] = true;

  SpanBasis basis(n);
  for (std::uint32_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    TritVec v(n);
    v.set(f, 1);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::uint8_t c = rows[i].get(f);
      if (c) v.set(piv[i], static_cast<std::uint8_t>(3 - c));
    }
    basis.insert(std::move(v));
  }
  return LinearCode(std::move(basis));
}

LinearCode LinearCode::extended() const {
  const std::uint32_t n = length();
  SpanBasis basis(n + 1);
  for (const TritVec& r : gen_.rows()) {
    TritVec v(n + 1);
    std::uint32_t sum = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
      const std::uint8_t c = r.get(i);
      v.set(i, c);
      sum += c;
    }
    v.set(n, static_cast<std::uint8_t>((3 - sum % 3) % 3));
    basis.insert(std::move(v));
  }
  return LinearCode(std::move(basis));
}

LinearCode LinearCode::punctured_last() const {
  const std::uint32_t n = length();
  if (n < 2) throw std::invalid_argument("punctured_last: length must be at least 2");
  SpanBasis basis(n - 1);
  for (const TritVec& r : gen_.rows()) {
    TritVec v(n - 1);
    for (std::uint32_t i = 0; i + 1 < n; ++i) v.set(i, r.get(i));
    basis.insert(std::move(v));
  }
  return LinearCode(std::move(basis));
}

LinearCode LinearCode::augmented() const {
  SpanBasis basis = gen_;
  basis.insert(TritVec::ones(length()));
  return LinearCode(std::move(basis));
}

WeightEnumerator LinearCode::weight_distribution(unsigned workers) const {
  const unsigned k = dimension();
  const std::uint32_t n = length();
  if (k > kEnumerationGuard) {
    throw infeasible_error("weight_distribution: dimension " + std::to_string(k) +
                           " exceeds the enumeration guard " + std::to_string(kEnumerationGuard) +
                           "; use macwilliams on the dual side instead");
  }

  const auto& rows = gen_.rows();
  // Shard by fixing the digits of the top rows; each worker walks the Gray
  // code of the remaining low rows. Histograms merge by addition, so the
  // result does not depend on the sharding.
  unsigned top = 0;
  if (workers > 1 && k > 4) {
    std::uint64_t shards = 1;
    while (top < k - 1 && shards < workers) {
      shards *= 3;
      ++top;
    }
  }
  const unsigned low = k - top;
  std::uint64_t prefixes = 1;
  for (unsigned i = 0; i < top; ++i) prefixes *= 3;

  std::vector<std::vector<std::uint64_t>> hists(prefixes ? prefixes : 1);
  auto run_prefix = [&](std::uint64_t p) {
    std::vector<std::uint64_t>& hist = hists[p];
    hist.assign(n + 1, 0);
    TritVec word(n);
    std::uint64_t t = p;
    for (unsigned i = 0; i < top; ++i) {
      const std::uint8_t d = static_cast<std::uint8_t>(t % 3);
      t /= 3;
      word.add_scaled(rows[low + i], d);
    }
    ++hist[word.weight()];
    detail::gray3_walk(low, [&](unsigned j, std::int8_t delta) {
      word.add_scaled(rows[j], delta > 0 ? 1 : 2);
      ++hist[word.weight()];
    });
  };

  if (top == 0) {
    run_prefix(0);
  } else {
    std::vector<std::thread> pool;
    std::atomic<std::uint64_t> next{0};
    const unsigned nthreads = std::min<std::uint64_t>(workers, prefixes);
    for (unsigned t = 0; t < nthreads; ++t) {
      pool.emplace_back([&] {
        for (;;) {
          const std::uint64_t p = next.fetch_add(1);
          if (p >= prefixes) break;
          run_prefix(p);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  WeightEnumerator we(n, k);
  for (const auto& hist : hists) {
    if (hist.empty()) continue;
    for (std::uint32_t w = 0; w <= n; ++w) {
      if (hist[w]) we.add_count(w, hist[w]);
    }
  }
  we.validate();
  return we;
}

std::uint32_t LinearCode::min_distance(unsigned workers) const {
  const std::uint32_t k = dimension();
  const std::uint32_t n = length();
  if (k == 0) throw std::invalid_argument("min_distance: zero code");
  if (k <= kEnumerationGuard && (k <= n - k || n - k > kEnumerationGuard)) {
    return weight_distribution(workers).min_nonzero_weight();
  }
  if (n - k <= kEnumerationGuard) {
    const WeightEnumerator dual_we = dual().weight_distribution(workers);
    return macwilliams(dual_we).min_nonzero_weight();
  }
  throw infeasible_error("min_distance: both the code (k=" + std::to_string(k) + ") and its dual (k=" +
                         std::to_string(n - k) + ") exceed the enumeration guard " +
                         std::to_string(kEnumerationGuard));
}

LinearCode permuted(const LinearCode& code, const std::vector<std::uint32_t>& perm) {
  const std::uint32_t n = code.length();
  if (perm.size() != n) throw std::invalid_argument("permuted: permutation length mismatch");
  SpanBasis basis(n);
  for (const TritVec& r : code.generator_rows()) {
    TritVec v(n);
    for (std::uint32_t i = 0; i < n; ++i) v.set(i, r.get(perm[i]));
    basis.insert(std::move(v));
  }
  return LinearCode(std::move(basis));
}

bool is_affine_invariant(const LinearCode& code, const Field& field) {
  const std::uint32_t q = field.size();
  if (code.length() != q) {
    throw std::invalid_argument("is_affine_invariant: code length must equal the field size");
  }
  const auto maps_into_code = [&](std::uint32_t a, std::uint32_t b) {
    std::vector<std::uint32_t> perm(q);
    for (std::uint32_t x = 0; x < q; ++x) perm[x] = field.add(field.mul(a, x), b);
    for (const TritVec& r : code.generator_rows()) {
      TritVec v(q);
      for (std::uint32_t x = 0; x < q; ++x) v.set(x, r.get(perm[x]));
      if (!code.contains(v)) return false;
    }
    return true;
  };
  // Translations and one multiplicative generator generate the whole
  // substitution group; invertibility makes "into" equal to "onto".
  for (std::uint32_t b = 0; b < q; ++b) {
    if (!maps_into_code(1, b)) return false;
  }
  return maps_into_code(field.primitive_element(), 0);
}

}  // namespace tricode
