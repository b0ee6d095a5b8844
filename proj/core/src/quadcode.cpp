#include "tricode/quadcode.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

#include "tricode/poly3.hpp"

namespace tricode {

namespace {

std::uint64_t pow3(unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) r *= 3;
  return r;
}

// Canonical half of the nonzero field elements under a ~ -a: keep the
// smaller index of each pair.
std::vector<std::uint32_t> half_parameters(const Field& field) {
  std::vector<std::uint32_t> half;
  half.reserve((field.size() - 1) / 2);
  for (std::uint32_t a = 1; a < field.size(); ++a) {
    if (a < field.neg(a)) half.push_back(a);
  }
  return half;
}

// Zero locus of the base word (Tr(x^2) + h*).
std::vector<std::uint32_t> base_zero_locus(const Field& field, std::uint8_t hstar) {
  std::vector<std::uint32_t> zeros;
  for (std::uint32_t y = 0; y < field.size(); ++y) {
    if ((field.trace(field.square(y)) + hstar) % 3 == 0) zeros.push_back(y);
  }
  return zeros;
}

// The defining residues -(2*3^i+2), -(2*3^i+1), -(3^i+1) mod 3^m-1.
struct CosetFamilies {
  std::uint32_t n;
  std::vector<std::uint32_t> a, b, c;  // index i = exponent i
};

CosetFamilies defining_residues(unsigned m) {
  if (m < 2) throw std::invalid_argument("defining_residues: m must be at least 2");
  CosetFamilies f;
  f.n = static_cast<std::uint32_t>(pow3(m) - 1);
  for (unsigned i = 0; i < m; ++i) {
    const std::uint64_t p = pow3(i);
    f.a.push_back(static_cast<std::uint32_t>((f.n - (2 * p + 2) % f.n) % f.n));
    f.b.push_back(static_cast<std::uint32_t>((f.n - (2 * p + 1) % f.n) % f.n));
    f.c.push_back(static_cast<std::uint32_t>((f.n - (p + 1) % f.n) % f.n));
  }
  return f;
}

}  // namespace

TritVec quadratic_word(const Field& field, std::uint32_t a, std::uint32_t b, std::uint8_t h) {
  const std::uint32_t q = field.size();
  TritVec v(q);
  for (std::uint32_t x = 0; x < q; ++x) {
    const std::uint32_t arg = field.add(field.mul(a, field.square(x)), field.mul(b, x));
    const std::uint8_t val = static_cast<std::uint8_t>((field.trace(arg) + h) % 3);
    if (val) v.set(x, val);
  }
  return v;
}

TritVec trace_monomial_word(const Field& field, std::uint32_t c, std::uint64_t e) {
  if (e == 0) throw std::invalid_argument("trace_monomial_word: exponent must be positive");
  const std::uint32_t q = field.size();
  TritVec v(q);
  for (std::uint32_t x = 1; x < q; ++x) {
    const std::uint8_t val = field.trace(field.mul(c, field.pow(x, e)));
    if (val) v.set(x, val);
  }
  // x = 0 evaluates to 0 for e >= 1.
  return v;
}

LinearCode quadratic_code(const Field& field) {
  if (field.degree() < 2) throw std::invalid_argument("quadratic_code: m must be at least 2");
  const std::uint32_t q = field.size();
  SpanBasis basis(q);
  for (unsigned i = 0; i < field.degree(); ++i) {
    basis.insert(quadratic_word(field, field.basis_element(i), 0, 0));
  }
  for (unsigned i = 0; i < field.degree(); ++i) {
    basis.insert(quadratic_word(field, 0, field.basis_element(i), 0));
  }
  basis.insert(TritVec::ones(q));
  return LinearCode(std::move(basis));
}

WeightEnumerator quadratic_code_distribution(const Field& field) {
  const unsigned m = field.degree();
  if (m < 3 || m % 2 == 0) {
    throw std::invalid_argument(
        "quadratic_code_distribution: closed form available for odd m >= 3 only");
  }
  const std::uint32_t q = static_cast<std::uint32_t>(pow3(m));
  const std::uint32_t w0 = 2 * static_cast<std::uint32_t>(pow3(m - 1));
  const std::uint32_t dev = static_cast<std::uint32_t>(pow3((m - 1) / 2));
  WeightEnumerator we(q, 2 * m + 1);
  we.set_count(0, 1);
  const BigInt side = BigInt(pow3(m)) * (pow3(m) - 1);  // 3^{2m} - 3^m
  we.set_count(w0 - dev, side);
  we.set_count(w0, BigInt(pow3(m) + 3) * (pow3(m) - 1));
  we.set_count(w0 + dev, side);
  we.set_count(q, 2);
  we.validate();
  return we;
}

std::uint32_t quadratic_code_min_weight(const Field& field) {
  const unsigned m = field.degree();
  if (m % 2 == 1) {
    const std::uint32_t d = static_cast<std::uint32_t>(2 * pow3(m - 1) - pow3((m - 1) / 2));
    const MinShift ms = best_constant_shift(field, 1, 0);
    if (ms.weight != d) {
      throw std::logic_error("quadratic_code_min_weight: closed form disagrees with the base word");
    }
    return d;
  }
  if (m > 6) {
    throw infeasible_error("quadratic_code_min_weight: even m guarded to m <= 6 (enumeration)");
  }
  return quadratic_code(field).weight_distribution().min_nonzero_weight();
}

MinShift best_constant_shift(const Field& field, std::uint32_t a, std::uint32_t b) {
  if (a == 0) throw std::invalid_argument("best_constant_shift: a must be nonzero");
  const std::uint32_t q = field.size();
  std::uint32_t cnt[3] = {0, 0, 0};
  for (std::uint32_t x = 0; x < q; ++x) {
    const std::uint32_t arg = field.add(field.mul(a, field.square(x)), field.mul(b, x));
    ++cnt[field.trace(arg)];
  }
  MinShift best{0, q + 1, true};
  for (std::uint8_t h = 0; h < 3; ++h) {
    const std::uint32_t w = q - cnt[(3 - h) % 3];
    if (w < best.weight) {
      best = {h, w, true};
    } else if (w == best.weight) {
      best.unique = false;
    }
  }
  if (!best.unique && field.degree() % 2 == 1) {
    throw std::logic_error("best_constant_shift: tied shifts for odd m contradict uniqueness");
  }
  return best;
}

void for_each_min_weight_support(const Field& field,
                                 const std::function<void(const TritVec&)>& visit) {
  const unsigned m = field.degree();
  const std::uint32_t q = field.size();
  if (m % 2 == 1) {
    const MinShift base = best_constant_shift(field, 1, 0);
    const auto zeros = base_zero_locus(field, base.shift);
    std::vector<std::uint32_t> ainv_z(q);
    for (std::uint32_t a : half_parameters(field)) {
      const std::uint32_t ainv = field.inv(a);
      for (std::uint32_t z = 0; z < q; ++z) ainv_z[z] = field.mul(ainv, z);
      TritVec row(q);
      for (std::uint32_t b = 0; b < q; ++b) {
        row.fill_ones();
        const std::uint32_t nb = field.neg(b);
        for (std::uint32_t y : zeros) row.set(ainv_z[field.add(y, nb)], 0);
        visit(row);
      }
    }
    return;
  }
  if (m > 6) {
    throw infeasible_error("for_each_min_weight_support: even m guarded to m <= 6 (enumeration)");
  }
  const LinearCode code = quadratic_code(field);
  const std::uint32_t d = code.weight_distribution().min_nonzero_weight();
  for_each_codeword(code, [&](const TritVec& word) {
    if (word.weight() != d) return;
    TritVec row(q);
    for (std::uint32_t x = 0; x < q; ++x) {
      if (word.get(x)) row.set(x, 1);
    }
    visit(row);
  });
}

Design min_weight_design(const Field& field) {
  const unsigned m = field.degree();
  const bool odd = m % 2 == 1;
  if ((odd && m > 5) || (!odd && m > 4)) {
    throw infeasible_error(
        "min_weight_design: block lists guarded to m <= 5 odd / m <= 4 even; "
        "use min_weight_support_rank for the streamed rank");
  }
  std::vector<std::vector<std::uint32_t>> blocks;
  for_each_min_weight_support(field, [&](const TritVec& row) {
    std::vector<std::uint32_t> block;
    for (std::uint32_t x = 0; x < row.size(); ++x) {
      if (row.get(x)) block.push_back(x);
    }
    blocks.push_back(std::move(block));
  });
  std::sort(blocks.begin(), blocks.end());
  blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
  return Design(field.size(), std::move(blocks));
}

StreamRank min_weight_support_rank(const Field& field, unsigned workers,
                                   std::optional<std::chrono::seconds> deadline) {
  const unsigned m = field.degree();
  const std::uint32_t q = field.size();
  const auto start = std::chrono::steady_clock::now();
  std::atomic<bool> expired{false};
  const auto check_deadline = [&](std::uint64_t done) {
    if (!deadline || (done & 1023) != 0) return false;
    if (std::chrono::steady_clock::now() - start > *deadline) expired.store(true);
    return expired.load();
  };

  if (m % 2 == 0) {
    if (m > 6) {
      throw infeasible_error("min_weight_support_rank: even m guarded to m <= 6 (enumeration)");
    }
    const LinearCode code = quadratic_code(field);
    const std::uint32_t d = code.weight_distribution().min_nonzero_weight();
    SpanBasis basis(q);
    StreamRank result;
    TritVec row(q);
    try {
      for_each_codeword(code, [&](const TritVec& word) {
        if (check_deadline(result.rows)) throw infeasible_error("deadline");
        if (word.weight() != d) return;
        row.clear();
        for (std::uint32_t x = 0; x < q; ++x) {
          if (word.get(x)) row.set(x, 1);
        }
        basis.insert(row);
        ++result.rows;
      });
      result.complete = true;
    } catch (const infeasible_error&) {
      result.complete = false;
    }
    result.rank = basis.rank();
    return result;
  }

  const MinShift base = best_constant_shift(field, 1, 0);
  const auto zeros = base_zero_locus(field, base.shift);
  const auto avals = half_parameters(field);
  const unsigned nshards = std::max(1u, workers);
  std::vector<SpanBasis> bases(nshards, SpanBasis(q));
  std::vector<std::uint64_t> rows_done(nshards, 0);

  auto shard_run = [&](unsigned t) {
    std::vector<std::uint32_t> ainv_z(q);
    TritVec row(q);
    for (std::size_t ia = t; ia < avals.size(); ia += nshards) {
      const std::uint32_t a = avals[ia];
      const std::uint32_t ainv = field.inv(a);
      for (std::uint32_t z = 0; z < q; ++z) ainv_z[z] = field.mul(ainv, z);
      for (std::uint32_t b = 0; b < q; ++b) {
        if (expired.load(std::memory_order_relaxed)) return;
        row.fill_ones();
        const std::uint32_t nb = field.neg(b);
        for (std::uint32_t y : zeros) row.set(ainv_z[field.add(y, nb)], 0);
        bases[t].insert(row);
        ++rows_done[t];
        check_deadline(rows_done[t]);
      }
    }
  };

  if (nshards == 1) {
    shard_run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nshards; ++t) pool.emplace_back(shard_run, t);
    for (auto& th : pool) th.join();
  }
  for (unsigned t = 1; t < nshards; ++t) bases[0].merge(bases[t]);

  StreamRank result;
  result.rank = bases[0].rank();
  for (std::uint64_t r : rows_done) result.rows += r;
  result.complete = !expired.load() &&
                    result.rows == static_cast<std::uint64_t>(q) * ((q - 1) / 2);
  return result;
}

LinearCode min_weight_design_code(const Field& field, unsigned workers) {
  const unsigned m = field.degree();
  const std::uint32_t q = field.size();
  if (m % 2 == 0 || workers <= 1) {
    SpanBasis basis(q);
    for_each_min_weight_support(field, [&](const TritVec& row) { basis.insert(row); });
    return LinearCode(std::move(basis));
  }
  // Reuse the sharded streaming path; merge yields the same RREF basis.
  const MinShift base = best_constant_shift(field, 1, 0);
  const auto zeros = base_zero_locus(field, base.shift);
  const auto avals = half_parameters(field);
  std::vector<SpanBasis> bases(workers, SpanBasis(q));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&, t] {
      std::vector<std::uint32_t> ainv_z(q);
      TritVec row(q);
      for (std::size_t ia = t; ia < avals.size(); ia += workers) {
        const std::uint32_t ainv = field.inv(avals[ia]);
        for (std::uint32_t z = 0; z < q; ++z) ainv_z[z] = field.mul(ainv, z);
        for (std::uint32_t b = 0; b < q; ++b) {
          row.fill_ones();
          const std::uint32_t nb = field.neg(b);
          for (std::uint32_t y : zeros) row.set(ainv_z[field.add(y, nb)], 0);
          bases[t].insert(row);
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  for (unsigned t = 1; t < workers; ++t) bases[0].merge(bases[t]);
  return LinearCode(std::move(bases[0]));
}

std::uint32_t design_dimension_from_cosets(unsigned m) {
  const CosetFamilies fam = defining_residues(m);
  std::set<std::uint32_t> all;
  for (const auto* family : {&fam.a, &fam.b, &fam.c}) {
    for (std::uint32_t r : *family) {
      for (std::uint32_t x : cyclotomic_coset(r, fam.n)) all.insert(x);
    }
  }
  return static_cast<std::uint32_t>(all.size()) + 1;
}

CosetStructure coset_structure(unsigned m) {
  if (m < 5 || m % 2 == 0) {
    throw std::invalid_argument("coset_structure: defined for odd m >= 5");
  }
  const CosetFamilies fam = defining_residues(m);
  const unsigned half = (m - 1) / 2;  // inclusive upper index

  auto coset_of = [&](std::uint32_t r) { return cyclotomic_coset(r, fam.n); };
  auto disjoint = [](const std::vector<std::uint32_t>& x, const std::vector<std::uint32_t>& y) {
    std::vector<std::uint32_t> inter;
    std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(inter));
    return inter.empty();
  };

  std::vector<std::vector<std::uint32_t>> ca, cb, cc;
  for (unsigned i = 0; i < m; ++i) {
    ca.push_back(coset_of(fam.a[i]));
    cb.push_back(coset_of(fam.b[i]));
    cc.push_back(coset_of(fam.c[i]));
  }

  CosetStructure out;
  out.sizes_all_m = true;
  for (unsigned i = 0; i < m; ++i) {
    if (ca[i].size() != m || cb[i].size() != m || cc[i].size() != m) out.sizes_all_m = false;
  }

  out.b_pairwise_disjoint = true;
  for (unsigned i = 0; i < m; ++i) {
    for (unsigned j = i + 1; j < m; ++j) {
      if (!disjoint(cb[i], cb[j])) out.b_pairwise_disjoint = false;
    }
  }

  auto half_family_check = [&](const std::vector<std::uint32_t>& residues,
                               const std::vector<std::vector<std::uint32_t>>& cosets) {
    bool ok = true;
    for (unsigned i = 0; i <= half; ++i) {
      for (unsigned j = i + 1; j <= half; ++j) {
        if (!disjoint(cosets[i], cosets[j])) ok = false;
      }
    }
    for (unsigned i = half + 1; i < m; ++i) {
      bool covered = false;
      for (unsigned j = 0; j <= half; ++j) {
        if (std::binary_search(cosets[j].begin(), cosets[j].end(), residues[i])) covered = true;
      }
      if (!covered) ok = false;
    }
    return ok;
  };
  out.a_half_disjoint_covers = half_family_check(fam.a, ca);
  out.c_half_disjoint_covers = half_family_check(fam.c, cc);

  out.b_vs_a_half_disjoint = true;
  out.b_vs_c_half_disjoint = true;
  for (unsigned i = 0; i < m; ++i) {
    for (unsigned j = 0; j <= half; ++j) {
      if (!disjoint(cb[i], ca[j])) out.b_vs_a_half_disjoint = false;
      if (!disjoint(cb[i], cc[j])) out.b_vs_c_half_disjoint = false;
    }
  }

  unsigned coincidences = 0;
  for (unsigned i = 0; i <= half; ++i) {
    for (unsigned j = 0; j <= half; ++j) {
      if (ca[i] == cc[j]) {
        ++coincidences;
        out.coinciding_pair = {i, j};
      } else if (!disjoint(ca[i], cc[j])) {
        coincidences = 2;  // partial overlap violates the claim outright
      }
    }
  }
  out.a_c_single_coincidence = coincidences == 1;

  std::set<std::uint32_t> all;
  for (const auto& fams : {ca, cb, cc}) {
    for (const auto& cs : fams) all.insert(cs.begin(), cs.end());
  }
  out.union_size = static_cast<std::uint32_t>(all.size());
  return out;
}

std::vector<TritVec> trace_product_generators(const Field& field) {
  if (field.degree() < 3) throw std::invalid_argument("trace_product_generators: m must be >= 3");
  const unsigned m = field.degree();
  const std::uint32_t q = field.size();
  std::vector<TritVec> quad(m), lin(m);
  for (unsigned i = 0; i < m; ++i) {
    quad[i] = quadratic_word(field, field.basis_element(i), 0, 0);
    lin[i] = quadratic_word(field, 0, field.basis_element(i), 0);
  }
  std::vector<TritVec> out;
  for (unsigned i = 0; i < m; ++i) {
    for (unsigned j = i; j < m; ++j) out.push_back(pointwise_product(quad[i], quad[j]));
  }
  for (unsigned i = 0; i < m; ++i) {
    for (unsigned j = 0; j < m; ++j) out.push_back(pointwise_product(quad[i], lin[j]));
  }
  for (unsigned i = 0; i < m; ++i) {
    for (unsigned j = i; j < m; ++j) out.push_back(pointwise_product(lin[i], lin[j]));
  }
  for (unsigned i = 0; i < m; ++i) out.push_back(lin[i]);
  out.push_back(TritVec::ones(q));
  return out;
}

std::vector<TritVec> trace_monomial_generators(const Field& field) {
  if (field.degree() < 3) throw std::invalid_argument("trace_monomial_generators: m must be >= 3");
  const unsigned m = field.degree();
  const std::uint32_t q = field.size();
  std::vector<TritVec> out;
  const auto emit_family = [&](auto exponent_of) {
    for (unsigned i = 0; i < m; ++i) {
      const std::uint64_t e = exponent_of(i);
      for (unsigned u = 0; u < m; ++u) {
        out.push_back(trace_monomial_word(field, field.basis_element(u), e));
      }
    }
  };
  emit_family([](unsigned i) { return 2 * pow3(i) + 2; });
  emit_family([](unsigned i) { return 2 * pow3(i) + 1; });
  emit_family([](unsigned i) { return pow3(i) + 1; });
  out.push_back(TritVec::ones(q));
  return out;
}

const char* low_weight_witness_m4() {
  return "000000000010010100100100010000000111010010100001001100000000000100100001001001100";
}

LinearCode cyclic_check_code(const Field& field) {
  const unsigned m = field.degree();
  const CosetFamilies fam = defining_residues(m);
  std::set<std::uint32_t> reps;
  for (const auto* family : {&fam.a, &fam.b, &fam.c}) {
    for (std::uint32_t r : *family) reps.insert(cyclotomic_coset(r, fam.n).front());
  }
  // Distinct cosets are disjoint, so the lcm is the straight product.
  Poly h = Poly::one();
  for (std::uint32_t r : reps) h = mul(h, minimal_polynomial(field, r));
  return cyclic_code_from_check(h, fam.n);
}

}  // namespace tricode
