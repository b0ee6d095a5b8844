#include "tricode/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <nlohmann/json.hpp>
#include <random>
#include <set>
#include <sstream>

#include "tricode/designs.hpp"
#include "tricode/grm.hpp"
#include "tricode/poly3.hpp"
#include "tricode/quadcode.hpp"

namespace tricode {

namespace {

std::uint64_t pow3(unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) r *= 3;
  return r;
}

// Largest w <= v with w - floor((w+q-2)/(q-1)) < d; the left side is
// nondecreasing in w.
std::uint32_t am_weight_limit(std::uint32_t v, std::uint32_t d, unsigned q) {
  for (std::uint32_t w = v;; --w) {
    if (w - (w + q - 2) / (q - 1) < d) return w;
    if (w == 0) return 0;
  }
}

std::vector<BigInt> binomial_row(std::uint32_t a) {
  std::vector<BigInt> row(a + 1);
  row[0] = 1;
  for (std::uint32_t b = 1; b <= a; ++b) row[b] = row[b - 1] * (a - b + 1) / b;
  return row;
}

std::size_t nonzero_count(const WeightEnumerator& we) {
  std::size_t c = 0;
  for (std::uint32_t w = 0; w <= we.length(); ++w) {
    if (we.count(w) != 0) ++c;
  }
  return c;
}

}  // namespace

AmReport assmus_mattson(const WeightEnumerator& primal, const WeightEnumerator& dual, unsigned t,
                        unsigned q) {
  if (primal.length() != dual.length()) {
    throw std::invalid_argument("assmus_mattson: enumerators of different lengths");
  }
  if (primal.dimension() + dual.dimension() != primal.length()) {
    throw std::invalid_argument("assmus_mattson: dimensions do not complement");
  }
  primal.validate();
  dual.validate();
  // MacWilliams consistency, checked through the sparser side.
  if (nonzero_count(primal) <= nonzero_count(dual)) {
    if (macwilliams(primal, q) != dual) {
      throw std::invalid_argument("assmus_mattson: enumerators are not MacWilliams duals");
    }
  } else {
    if (macwilliams(dual, q) != primal) {
      throw std::invalid_argument("assmus_mattson: enumerators are not MacWilliams duals");
    }
  }

  const std::uint32_t v = primal.length();
  AmReport rep;
  rep.t = t;
  rep.d = primal.min_nonzero_weight();
  rep.d_dual = dual.min_nonzero_weight();
  if (t >= rep.d) {
    throw std::invalid_argument("assmus_mattson: requires t < d (t=" + std::to_string(t) +
                                ", d=" + std::to_string(rep.d) + ")");
  }
  rep.w_limit = am_weight_limit(v, rep.d, q);
  rep.w_limit_dual = am_weight_limit(v, rep.d_dual, q);

  rep.s = 0;
  for (std::uint32_t i = 1; i + t <= v; ++i) {
    if (dual.count(i) != 0) ++rep.s;
  }
  rep.applies = rep.s <= static_cast<std::uint64_t>(rep.d - t);

  for (std::uint32_t i = rep.d; i <= rep.w_limit; ++i) {
    if (primal.count(i) != 0) rep.design_weights.push_back(i);
  }
  const std::uint32_t dual_cap = std::min<std::uint32_t>(v - t, rep.w_limit_dual);
  for (std::uint32_t i = rep.d_dual; i <= dual_cap; ++i) {
    if (dual.count(i) != 0) rep.design_weights_dual.push_back(i);
  }
  return rep;
}

std::uint32_t dual_min_distance_from(const WeightEnumerator& we, unsigned q) {
  we.validate();
  const std::uint32_t n = we.length();
  const BigInt qk = [&] {
    BigInt r = 1;
    for (std::uint32_t i = 0; i < we.dimension(); ++i) r *= q;
    return r;
  }();
  std::vector<std::uint32_t> weights;
  std::map<std::uint32_t, std::vector<BigInt>> binom;
  for (std::uint32_t i = 0; i <= n; ++i) {
    if (we.count(i) != 0) {
      weights.push_back(i);
      binom.emplace(i, binomial_row(i));
      binom.emplace(n - i, binomial_row(n - i));
    }
  }
  std::vector<BigInt> qm1(n + 1);
  qm1[0] = 1;
  for (std::uint32_t j = 1; j <= n; ++j) qm1[j] = qm1[j - 1] * (q - 1);

  for (std::uint32_t j = 1; j <= n; ++j) {
    BigInt acc = 0;
    for (std::uint32_t i : weights) {
      BigInt kr = 0;
      const auto& ci = binom.at(i);
      const auto& cni = binom.at(n - i);
      for (std::uint32_t s = 0; s <= std::min(i, j); ++s) {
        if (j - s > n - i) continue;
        const BigInt term = qm1[j - s] * ci[s] * cni[j - s];
        kr += (s & 1) ? -term : term;
      }
      acc += we.count(i) * kr;
    }
    if (acc % qk != 0) throw std::logic_error("dual_min_distance_from: non-integral coefficient");
    if (acc != 0) return j;
  }
  throw std::logic_error("dual_min_distance_from: dual has no nonzero weight");
}

const char* to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::pass:
      return "pass";
    case ClaimStatus::fail:
      return "fail";
    case ClaimStatus::flag:
      return "flag";
    case ClaimStatus::skipped:
      return "skipped";
  }
  return "?";
}

std::size_t SuiteReport::count(ClaimStatus s) const {
  std::size_t c = 0;
  for (const auto& e : entries) {
    if (e.status == s) ++c;
  }
  return c;
}

std::string SuiteReport::to_json() const {
  nlohmann::ordered_json j;
  j["summary"] = {{"pass", count(ClaimStatus::pass)},
                  {"fail", count(ClaimStatus::fail)},
                  {"flag", count(ClaimStatus::flag)},
                  {"skipped", count(ClaimStatus::skipped)}};
  j["claims"] = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    j["claims"].push_back({{"id", e.id},
                           {"m", e.m},
                           {"status", to_string(e.status)},
                           {"statement", e.statement},
                           {"detail", e.detail},
                           {"seconds", e.seconds}});
  }
  return j.dump(2) + "\n";
}

std::string SuiteReport::to_csv() const {
  std::ostringstream os;
  os << "id,m,status,seconds,detail\n";
  for (const auto& e : entries) {
    std::string detail = e.detail;
    for (char& c : detail) {
      if (c == ',' || c == '\n') c = ';';
    }
    os << e.id << ',' << e.m << ',' << to_string(e.status) << ',' << e.seconds << ',' << detail
       << '\n';
  }
  return os.str();
}

std::string SuiteReport::to_text() const {
  std::ostringstream os;
  for (const auto& e : entries) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%-7s m=%u %9.3fs  ", to_string(e.status), e.m, e.seconds);
    os << buf << e.id;
    if (!e.detail.empty()) os << "  [" << e.detail << "]";
    os << '\n';
  }
  os << "pass=" << count(ClaimStatus::pass) << " fail=" << count(ClaimStatus::fail)
     << " flag=" << count(ClaimStatus::flag) << " skipped=" << count(ClaimStatus::skipped) << '\n';
  return os.str();
}

namespace {

struct Outcome {
  bool ok = false;
  bool in_hypothesis = true;
  std::string detail;
};

// Per-run cache of the expensive shared objects.
class Ctx {
 public:
  explicit Ctx(unsigned workers) : workers_(workers) {}

  unsigned workers() const { return workers_; }

  const Field& field(unsigned m) {
    auto it = fields_.find(m);
    if (it == fields_.end()) it = fields_.emplace(m, Field(m)).first;
    return it->second;
  }
  const LinearCode& qcode(unsigned m) {
    auto it = qcodes_.find(m);
    if (it == qcodes_.end()) it = qcodes_.emplace(m, quadratic_code(field(m))).first;
    return it->second;
  }
  const WeightEnumerator& qdist(unsigned m) {
    auto it = qdists_.find(m);
    if (it == qdists_.end()) it = qdists_.emplace(m, qcode(m).weight_distribution(workers_)).first;
    return it->second;
  }
  const LinearCode& dcode(unsigned m) {
    auto it = dcodes_.find(m);
    if (it == dcodes_.end()) {
      it = dcodes_.emplace(m, min_weight_design_code(field(m), workers_)).first;
    }
    return it->second;
  }
  const Design& design(unsigned m) {
    auto it = designs_.find(m);
    if (it == designs_.end()) it = designs_.emplace(m, min_weight_design(field(m))).first;
    return it->second;
  }
  std::mt19937 rng(const std::string& id, unsigned m) {
    std::uint32_t h = 2166136261u;
    for (char c : id) h = (h ^ static_cast<unsigned char>(c)) * 16777619u;
    return std::mt19937(h ^ (m * 2654435761u));
  }

 private:
  unsigned workers_;
  std::map<unsigned, Field> fields_;
  std::map<unsigned, LinearCode> qcodes_;
  std::map<unsigned, WeightEnumerator> qdists_;
  std::map<unsigned, LinearCode> dcodes_;
  std::map<unsigned, Design> designs_;
};

struct Claim {
  const char* id;
  const char* statement;
  std::function<bool(unsigned)> applicable;
  std::function<Outcome(Ctx&, unsigned, const SuiteOptions&, double)> run;
};

bool odd(unsigned m) { return m % 2 == 1; }

std::string weights_to_string(const std::vector<std::uint32_t>& ws) {
  std::string s = "{";
  for (std::size_t i = 0; i < ws.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(ws[i]);
  }
  return s + "}";
}

TritVec linear_word(const Field& f, std::uint32_t c) { return quadratic_word(f, 0, c, 0); }
TritVec quad_word(const Field& f, std::uint32_t a) { return quadratic_word(f, a, 0, 0); }

// Membership of a parametrized function family in the design code: full
// coverage over basis parameters plus `samples` random parameter choices.
template <typename MakeWord>
Outcome membership_claim(Ctx& ctx, unsigned m, bool in_hyp, unsigned params, unsigned samples,
                         const std::string& id, MakeWord&& make) {
  const Field& f = ctx.field(m);
  const LinearCode& dc = ctx.dcode(m);
  auto rng = ctx.rng(id, m);
  std::uniform_int_distribution<std::uint32_t> any(0, f.size() - 1);
  Outcome out;
  out.in_hypothesis = in_hyp;
  std::vector<std::uint32_t> p(params);
  // basis coverage: all tuples of basis elements
  std::vector<unsigned> idx(params, 0);
  for (;;) {
    for (unsigned t = 0; t < params; ++t) p[t] = f.basis_element(idx[t]);
    if (!dc.contains(make(p))) {
      out.detail = "basis parameter tuple escapes the span";
      return out;
    }
    unsigned t = 0;
    while (t < params && ++idx[t] == m) idx[t++] = 0;
    if (t == params) break;
  }
  for (unsigned s = 0; s < samples; ++s) {
    for (unsigned t = 0; t < params; ++t) p[t] = any(rng);
    if (!dc.contains(make(p))) {
      out.detail = "random parameter tuple escapes the span";
      return out;
    }
  }
  out.ok = true;
  return out;
}

// Span equality of a product family over basis pairs against a
// trace-monomial family, plus random-product membership samples.
Outcome span_family_claim(Ctx& ctx, unsigned m, const std::string& id, bool left_symmetric,
                          const std::function<TritVec(const Field&, std::uint32_t)>& left1,
                          const std::function<TritVec(const Field&, std::uint32_t)>& left2,
                          const std::function<std::uint64_t(unsigned)>& exponent) {
  const Field& f = ctx.field(m);
  SpanBasis lhs(f.size()), rhs(f.size());
  for (unsigned i = 0; i < m; ++i) {
    for (unsigned j = left_symmetric ? i : 0; j < m; ++j) {
      lhs.insert(pointwise_product(left1(f, f.basis_element(i)), left2(f, f.basis_element(j))));
    }
  }
  for (unsigned j = 0; j < m; ++j) {
    const std::uint64_t e = exponent(j);
    for (unsigned u = 0; u < m; ++u) rhs.insert(trace_monomial_word(f, f.basis_element(u), e));
  }
  Outcome out;
  if (!(lhs == rhs)) {
    out.detail = "spans differ: dims " + std::to_string(lhs.rank()) + " vs " + std::to_string(rhs.rank());
    return out;
  }
  auto rng = ctx.rng(id, m);
  std::uniform_int_distribution<std::uint32_t> any(0, f.size() - 1);
  for (unsigned s = 0; s < 20; ++s) {
    const TritVec prod = pointwise_product(left1(f, any(rng)), left2(f, any(rng)));
    if (!rhs.contains(prod)) {
      out.detail = "random product escapes the monomial span";
      return out;
    }
  }
  out.ok = true;
  out.detail = "dim " + std::to_string(lhs.rank());
  return out;
}

const std::uint64_t kDesignCodeEnumeratorM3[] = {
    // weights 6..27 of the m=3 design code
    5148,      14742,     84240,     370500,    1314144,  4081428,  10838880, 25050870,
    49975380,  87147918,  129957048, 168370488, 187697640, 177251490, 141674832, 94909698,
    51504336,  22428900,  7492680,   1796418,   273780,    20906};

std::vector<Claim> build_registry() {
  std::vector<Claim> reg;

  reg.push_back({"quad-code-dimension",
                 "the quadratic-trace code has length 3^m and dimension 2m+1",
                 [](unsigned m) { return m >= 2 && m <= 7; },
                 [](Ctx& ctx, unsigned m, const SuiteOptions&, double) {
                   Outcome o;
                   const LinearCode& c = ctx.qcode(m);
                   o.ok = c.length() == pow3(m) && c.dimension() == 2 * m + 1;
                   o.detail = "[" + std::to_string(c.length()) + "," + std::to_string(c.dimension()) + "]";
                   return o;
                 }});

  reg.push_back({"example-code-parameters",
                 "small quadratic-trace codes match [9,5,4], [27,7,15], [81,9,48]",
                 [](unsigned m) { return m >= 2 && m <= 4; },
                 [](Ctx& ctx, unsigned m, const SuiteOptions&, double) {
                   static const std::uint32_t want[3][3] = {{9, 5, 4}, {27, 7, 15}, {81, 9, 48}};
                   const LinearCode& c = ctx.qcode(m);
                   const std::uint32_t d = c.min_distance();
                   Outcome o;
                   o.ok = c.length() == want[m - 2][0] && c.dimension() == want[m - 2][1] &&
                          d == want[m - 2][2];
                   o.detail = "[" + std::to_string(c.length()) + "," + std::to_string(c.dimension()) +
                              "," + std::to_string(d) + "]";
                   return o;
                 }});

  reg.push_back({"closed-form-distribution",
                 "the four-weight closed-form distribution equals full enumeration (odd m)",
                 [](unsigned m) { return odd(m) && m >= 3 && m <= 7; },
                 [](Ctx& ctx, unsigned m, const SuiteOptions&, double) {
                   Outcome o;
                   o.ok = quadratic_code_distribution(ctx.field(m)) == ctx.qdist(m);
                   return o;
                 }});

  reg.push_back({"dual-min-distance",
                 "the dual of the quadratic-trace code has parameters [3^m, 3^m-1-2m, 5] (odd m)",
                 [](unsigned m) { return odd(m) && m >= 3 && m <= 7; },
                 [](Ctx& ctx, unsigned m, const SuiteOptions&, double) {
                   Outcome o;
                   const WeightEnumerator we = quadratic_code_distribution(ctx.field(m));
                   const std::uint32_t dd = dual_min_distance_from(we);
                   const std::uint64_t dual_dim = pow3(m) - 1 - 2 * m;
                   o.ok = dd == 5 && we.length() - we.dimension() == dual_dim;
                   o.detail = "dual distance " + std::to_string(dd);
                   return o;
                 }});

  reg.push_back({"allone-in-dual",
                 "the all-one vector is orthogonal to the quadratic-trace code",
                 [](unsigned m) { return m >= 2 && m <= 6; },
                 [](Ctx& ctx, unsigned m, const SuiteOptions&, double) {
                   const LinearCode& c = ctx.qcode(m);
                   const TritVec ones = TritVec::ones(c.length());
                   Outcome o;
                   o.ok = true;
                   for (const TritVec& r : c.generator_rows()) {
                     if (r.dot(ones) != 0) o.ok = false;
                   }
                   return o;
                 }});

  reg.push_back({"zero-locus-difference-set",
                 "the zero locus of Tr(a x^2)+h is symmetric and its differences cover the field",
                 [](unsigned m) { return m == 4 || m == 5; },
                 [](Ctx& ctx, unsigned m, const SuiteOptions&, double) {
                   const Field& f = ctx.field(m);
                   auto rng = ctx.rng("zero-locus-difference-set", m);
                   std::uniform_int_distribution<std::uint32_t> nz(1, f.size() - 1);
                   std::uniform_int_distribution<std::uint32_t> h3(0, 2);
                   Outcome o;
                   o.ok = true;
                   for (unsigned trial = 0; trial < 20 && o.ok; ++trial) {
                     const std::uint32_t a = nz(rng);
                     const std::uint8_t h = static_cast<std::uint8_t>(h3(rng));
                     std::vector<std::uint32_t> locus;
                     for (std::uint32_t x = 0; x < f.size(); ++x) {
                       if ((f.trace(f.mul(a, f.square(x))) + h) % 3 == 0) locus.push_back(x);
                     }
                     std::vector<bool> in(f.size(), false), diff(f.size(), false);
                     for (std::uint32_t x : locus) in[x] = true;
                     for (std::uint32_t x : locus) {
                       if (!in[f.neg(x)]) o.ok = false;
                     }
                     for (std::uint32_t x : locus) {
                       for (std::uint32_t y : locus) diff[f.sub(x, y)] = true;
                     }
                     for (std::uint32_t v = 0; v < f.size(); ++v) {
                       if (!diff[v]) o.ok = false;
                     }
                     if (!o.ok) o.detail = "failed at a=" + std::to_string(a) + " h=" + std::to_string(h);
                   }
                   return o;
                 }});

  reg.push_back({"squares-difference-set",
                 "differences of the nonzero squares, and of the nonsquares, cover the field",
                 [](unsigned m) { return m >= 3 && m <= 5; },
                 [](Ctx& ctx, unsigned m, const SuiteOptions&, double) {
                   const Field& f = ctx.field(m);
                   Outcome o;
                   o.ok = true;
                   for (const auto& set : {f.nonzero_squares(), f.nonsquares()}) {
                     std::vector<bool> diff(f.size(), false);
                     for (std::uint32_t x : set) {
                       for (std::uint32_t y : set) diff[f.sub(x, y)] = true;
                     }
                     for (std::uint32_t v = 0; v < f.size(); ++v) {
                       if (!diff[v]) o.ok = false;
                     }
                   }
                   return o;
                 }});

  reg.push_back({"unique-min-shift",
                 "each (a,b) admits exactly one shift h reaching the minimum weight (odd m)",
                 [](unsigned m) { return odd(m) && m >= 3 && m <= 5; },
                 [](Ctx& ctx, unsigned m, const SuiteOptions&, double) {
                   const Field& f = ctx.field(m);
                   const std::uint32_t q = f.size();
                   const std::uint32_t d = quadratic_code_min_weight(f);
                   Outcome o;
                   std::uint64_t total = 0;
                   for (std::uint32_t a = 1; a < q; ++a) {
                     std::uint32_t cnt[3];
                     for (std::uint32_t b = 0; b < q; ++b) {
                       cnt[0] = cnt[1] = cnt[2] = 0;
                       for (std::uint32_t x = 0; x < q; ++x) {
                         ++cnt[f.trace(f.add(f.mul(a, f.square(x)), f.mul(b, x)))];
                       }
                       unsigned hits = 0;
                       for (std::uint8_t h = 0; h < 3; ++h) {
                         if (q - cnt[(3 - h) % 3] == d) ++hits;
                       }
                       if (hits != 1) {
                         o.detail = "a=" + std::to_string(a) + " b=" + std::to_string(b) + " hits=" +
                                    std::to_string(hits);
                         return o;
                       }
                       ++total;
                     }
                   }
                   o.ok = total == static_cast<std::uint64_t>(q) * (q - 1);
                   o.detail = std::to_string(total) + " minimum-weight words";
                   return o;
                 }});

  reg.push_back({"min-weight-family",
                 "the substitution family yields q(q-1)/2 distinct supports of the minimum weight",
                 [](unsigned m) { return odd(m) && m >= 3 && m <= 5; },
                 [](Ctx& ctx, unsigned m, const SuiteOptions&, double) {
                   const Field& f = ctx.field(m);
                   const std::uint32_t d = quadratic_code_min_weight(f);
                   std::set<std::vector<std::uint64_t>> seen;
                   std::uint64_t rows = 0;
                   bool weights_ok = true;
                   for_each_min_weight_support(f, [&](const TritVec& row) {
                     ++rows;
                     if (row.weight() != d) weights_ok = false;
                     std::vector<std::uint64_t> key(row.lo(), row.lo() + row.words());
                     seen.insert(std::move(key));
                   });
                   const std::uint64_t expect = static_cast<std::uint64_t>(f.size()) * (f.size() - 1) / 2;
                   Outcome o;
                   o.ok = weights_ok && rows == expect && seen.size() == expect;
                   o.detail = std::to_string(seen.size()) + " distinct supports of weight " +
                              std::to_string(d);
                   return o;
                 }});

  reg.push_back({"trace-average-identities",
                 "averages of squared traces over nonzero scalars vanish coordinatewise (odd m)",
                 [](unsigned m) { return m == 3 || m == 5; },
                 [](Ctx& ctx, unsigned m, const SuiteOptions&, double) {
                   const Field& f = ctx.field(m);
                   const std::uint32_t q = f.size();
                   Outcome o;
                   o.ok = true;
                   for (std::uint32_t x = 0; x < q; ++x) {
                     unsigned s1 = 0, s3 = 0;
                     for (std::uint32_t a = 1; a < q; ++a) {
                       const std::uint8_t t = f.trace(f.mul(f.square(a), f.square(x)));
                       s1 += t * t;
                       s3 += t;
                     }
                     if (s1 % 3 != 0 || s3 % 3 != 0) o.ok = false;
                   }
                   auto rng = ctx.rng("trace-average-identities", m);
                   std::uniform_int_distribution<std::uint32_t> any(0, q - 1);
                   for (unsigned trial = 0; trial < 5 && o.ok; ++trial) {
                     const std::uint32_t b = any(rng);
                     for (std::uint32_t x = 0; x < q; ++x) {
                       unsigned s2 = 0;
                       const std::uint32_t bx = f.mul(b, x);
                       for (std::uint32_t a = 1; a < q; ++a) {
                         const std::uint8_t t = f.trace(f.mul(a, bx));
                         s2 += t * t;
                       }
                       if (s2 % 3 != 0) o.ok = false;
                     }
                   }
                   return o;
                 }});

  reg.push_back({"square-expansion-identity",
                 "the squared shifted substitution word expands into the stated six terms",
                 [](unsigned m) { return m >= 3 && m <= 5; },
                 [](Ctx& ctx, unsigned m, const SuiteOptions&, double) {
                   const Field& f = ctx.field(m);
                   auto rng = ctx.rng("square-expansion-identity", m);
                   std::uniform_int_distribution<std::uint32_t> nz(1, f.size() - 1);
                   std::uniform_int_distribution<std::uint32_t> any(0, f.size() - 1);
                   std::uniform_int_distribution<std::uint32_t> h3(0, 2);
                   Outcome o;
                   o.ok = true;
                   for (unsigned trial = 0; trial < 50 && o.ok; ++trial) {
                     const std::uint32_t a = nz(rng), b = any(rng);
                     const unsigned h = h3(rng);
                     const unsigned kterm = (f.trace(f.square(b)) + h) % 3;
                     for (std::uint32_t x = 0; x < f.size(); ++x) {
                       const std::uint32_t ax_b = f.add(f.mul(a, x), b);
                       const unsigned lhs_root = (f.trace(f.square(ax_b)) + h) % 3;
                       const unsigned lhs = (lhs_root * lhs_root) % 3;
                       const unsigned A = f.trace(f.mul(f.square(a), f.square(x)));
                       const unsigned B = f.trace(f.mul(f.mul(a, b), x));
                       const unsigned rhs =
                           (A * A + B * B + kterm * kterm + A * B + 3 * 3 - kterm * A + kterm * B) % 3;
                       if (lhs != rhs) {
                         o.ok = false;
                         break;
                       }
                     }
                   }
                   return o;
                 }});

  reg.push_back({"support-indicator-square",
                 "the support indicator of a minimum-weight word equals its coordinatewise square",
                 [](unsigned m) { return m == 3 || m == 5; },
                 [](Ctx& ctx, unsigned m, const SuiteOptions&, double) {
                   const Field& f = ctx.field(m);
                   auto rng = ctx.rng("support-indicator-square", m);
                   std::uniform_int_distribution<std::uint32_t> nz(1, f.size() - 1);
                   std::uniform_int_distribution<std::uint32_t> any(0, f.size() - 1);
                   Outcome o;
                   o.ok = true;
                   for (unsigned trial = 0; trial < 50 && o.ok; ++trial) {
                     const std::uint32_t a = nz(rng), b = any(rng);
                     const MinShift ms = best_constant_shift(f, a, b);
                     const TritVec w = quadratic_word(f, a, b, ms.shift);
                     const TritVec sq = pointwise_product(w, w);
                     for (std::uint32_t x = 0; x < f.size(); ++x) {
                       const std::uint8_t ind = w.get(x) ? 1 : 0;
                       if (ind != sq.get(x)) o.ok = false;
                     }
                   }
                   return o;
                 }});

  reg.push_back({"allone-in-design-code",
                 "the all-one word lies in the design code",
                 [](unsigned m) { return m >= 3 && m <= 5; },
                 [](Ctx& ctx, unsigned m, const SuiteOptions&, double) {
                   Outcome o;
                   o.in_hypothesis = m >= 4;
                   o.ok = ctx.dcode(m).contains(TritVec::ones(ctx.field(m).size()));
                   return o;
                 }});

  reg.push_back({"membership-quad-lin-product",
                 "products Tr(a x^2) Tr(c x) lie in the design code",
                 [](unsigned m) { return m >= 3 && m <= 5; },
                 [](Ctx& ctx, unsigned m, const SuiteOptions&, double) {
                   return membership_claim(ctx, m, odd(m) && m >= 5, 2, 100,
                                           "membership-quad-lin-product",
                                           [&](const std::vector<std::uint32_t>& p) {
                                             const Field& f = ctx.field(m);
                                             return pointwise_product(quad_word(f, p[0]),
                                                                      linear_word(f, p[1]));
                                           });
                 }});

  reg.push_back({"membership-linear",
                 "linear words Tr(c x) lie in the design code",
                 [](unsigned m) { return m >= 3 && m <= 5; },
                 [](Ctx& ctx, unsigned m, const SuiteOptions&, double) {
                   return membership_claim(ctx, m, m >= 4, 1, 100, "membership-linear",
                                           [&](const std::vector<std::uint32_t>& p) {
                                             return linear_word(ctx.field(m), p[0]);
                                           });
                 }});

  reg.push_back({"membership-lin-lin-product",
                 "products Tr(b1 x) Tr(b2 x) lie in the design code",
                 [](unsigned m) { return m >= 3 && m <= 5; },
                 [](Ctx& ctx, unsigned m, const SuiteOptions&, double) {
                   return membership_claim(ctx, m, m >= 4, 2, 100, "membership-lin-lin-product",
                                           [&](const std::vector<std::uint32_t>& p) {
                                             const Field& f = ctx.field(m);
                                             return pointwise_product(linear_word(f, p[0]),
                                                                      linear_word(f, p[1]));
                                           });
                 }});

  reg.push_back({"membership-linear-square",
                 "squares Tr(a x)^2 lie in the design code",
                 [](unsigned m) { return m >= 3 && m <= 5; },
                 [](Ctx& ctx, unsigned m, const SuiteOptions&, double) {
                   return membership_claim(ctx, m, m >= 4, 1, 100, "membership-linear-square",
                                           [&](const std::vector<std::uint32_t>& p) {
                                             const Field& f = ctx.field(m);
                                             const TritVec w = linear_word(f, p[0]);
                                             return pointwise_product(w, w);
                                           });
                 }});

  reg.push_back({"membership-quadratic",
                 "quadratic words Tr(a x^2) lie in the design code",
                 [](unsigned m) { return m >= 3 && m <= 5; },
                 [](Ctx& ctx, unsigned m, const SuiteOptions&, double) {
                   return membership_claim(ctx, m, m >= 4, 1, 100, "membership-quadratic",
                                           [&](const std::vector<std::uint32_t>& p) {
                                             return quad_word(ctx.field(m), p[0]);
                                           });
                 }});

  reg.push_back({"membership-quad-quad-product",
                 "products Tr(b1 x^2) Tr(b2 x^2) lie in the design code",
                 [](unsigned m) { return m >= 3 && m <= 5; },
                 [](Ctx& ctx, unsigned m, const SuiteOptions&, double) {
                   return membership_claim(ctx, m, odd(m) && m >= 5, 2, 100,
                                           "membership-quad-quad-product",
                                           [&](const std::vector<std::uint32_t>& p) {
                                             const Field& f = ctx.field(m);
                                             return pointwise_product(quad_word(f, p[0]),
                                                                      quad_word(f, p[1]));
                                           });
                 }});

  reg.push_back({"span-family-bilinear",
                 "products of two linear traces span the x^{3^j+1} trace-monomial family",
                 [](unsigned m) { return m >= 2 && m <= 5; },
                 [](Ctx& ctx, unsigned m, const SuiteOptions&, double) {
                   return span_family_claim(ctx, m, "span-family-bilinear", true, linear_word,
                                            linear_word, [](unsigned j) { return pow3(j) + 1; });
                 }});

  reg.push_back({"span-family-quad-lin",
                 "quadratic-linear trace products span the x^{2*3^j+1} trace-monomial family",
                 [](unsigned m) { return m >= 2 && m <= 5; },
                 [](Ctx& ctx, unsigned m, const SuiteOptions&, double) {
                   return span_family_claim(ctx, m, "span-family-quad-lin", false, quad_word,
                                            linear_word, [](unsigned j) { return 2 * pow3(j) + 1; });
                 }});

  reg.push_back({"span-family-quad-quad",
                 "products of two quadratic traces span the x^{2*3^j+2} trace-monomial family",
                 [](unsigned m) { return m >= 2 && m <= 5; },
                 [](Ctx& ctx, unsigned m, const SuiteOptions&, double) {
                   return span_family_claim(ctx, m, "span-family-quad-quad", true, quad_word,
                                            quad_word, [](unsigned j) { return 2 * pow3(j) + 2; });
                 }});

  reg.push_back({"product-span-is-design-code",
                 "the trace-product generating set spans exactly the design code",
                 [](unsigned m) { return m >= 3 && m <= 5; },
                 [](Ctx& ctx, unsigned m, const SuiteOptions&, double) {
                   Outcome o;
                   o.in_hypothesis = odd(m) && m >= 5;
                   const Field& f = ctx.field(m);
                   const LinearCode span = code_from_rows(f.size(), trace_product_generators(f));
                   o.ok = span == ctx.dcode(m);
                   o.detail = "span dim " + std::to_string(span.dimension()) + ", design code dim " +
                              std::to_string(ctx.dcode(m).dimension());
                   return o;
                 }});

  reg.push_back({"monomial-span-is-design-code",
                 "the trace-monomial generating set spans exactly the design code",
                 [](unsigned m) { return m >= 3 && m <= 5; },
                 [](Ctx& ctx, unsigned m, const SuiteOptions&, double) {
                   Outcome o;
                   o.in_hypothesis = odd(m) && m >= 5;
                   const Field& f = ctx.field(m);
                   const LinearCode span = code_from_rows(f.size(), trace_monomial_generators(f));
                   o.ok = span == ctx.dcode(m);
                   o.detail = "span dim " + std::to_string(span.dimension());
                   return o;
                 }});

  reg.push_back({"cyclic-equivalence",
                 "the augmented extended cyclic code maps onto the design code coordinatewise",
                 [](unsigned m) { return m >= 3 && m <= 5; },
                 [](Ctx& ctx, unsigned m, const SuiteOptions&, double) {
                   Outcome o;
                   o.in_hypothesis = odd(m) && m >= 5;
                   const Field& f = ctx.field(m);
                   const LinearCode cyc = cyclic_check_code(f);
                   const LinearCode mapped =
                       permuted(cyc.extended().augmented(), field_coordinate_map(f));
                   o.ok = mapped == ctx.dcode(m) && cyc.dimension() == 2 * m * m;
                   o.detail = "cyclic dim " + std::to_string(cyc.dimension());
                   return o;
                 }});

  reg.push_back({"coset-structure",
                 "the defining coset families satisfy all seven structural facts",
                 [](unsigned m) { return odd(m) && m >= 5 && m <= 7; },
                 [](Ctx&, unsigned m, const SuiteOptions&, double) {
                   const CosetStructure cs = coset_structure(m);
                   Outcome o;
                   o.ok = cs.all() && cs.union_size == 2 * m * m &&
                          cs.coinciding_pair == std::make_pair(0u, 1u);
                   o.detail = "union " + std::to_string(cs.union_size) + ", coincidence at (" +
                              std::to_string(cs.coinciding_pair.first) + "," +
                              std::to_string(cs.coinciding_pair.second) + ")";
                   return o;
                 }});

  reg.push_back({"design-dimension-routes",
                 "streamed incidence rank and the coset-union count both give 2m^2+1",
                 [](unsigned m) { return m >= 2 && m <= 7; },
                 [](Ctx& ctx, unsigned m, const SuiteOptions& opt, double elapsed) {
                   const std::uint32_t expect = 2 * m * m + 1;
                   const std::uint32_t cosets = design_dimension_from_cosets(m);
                   std::uint32_t streamed;
                   bool complete = true;
                   std::uint64_t rows = 0;
                   if (m <= 5) {
                     streamed = ctx.dcode(m).dimension();
                   } else {
                     std::optional<std::chrono::seconds> deadline;
                     if (opt.budget_seconds > 0) {
                       const double remain = opt.budget_seconds - elapsed;
                       deadline = std::chrono::seconds(
                           remain > 1 ? static_cast<long>(remain) : 1);
                     }
                     const StreamRank sr = min_weight_support_rank(ctx.field(m), opt.workers, deadline);
                     streamed = sr.rank;
                     complete = sr.complete;
                     rows = sr.rows;
                   }
                   Outcome o;
                   if (!complete) {
                     o.ok = false;
                     o.in_hypothesis = true;
                     o.detail = "partial rank " + std::to_string(streamed) + " after " +
                                std::to_string(rows) + " rows (budget)";
                     o.detail += "|SKIP";
                     return o;
                   }
                   o.ok = streamed == expect && cosets == expect;
                   o.detail = "rank " + std::to_string(streamed) + ", cosets " + std::to_string(cosets) +
                              ", expected " + std::to_string(expect);
                   return o;
                 }});

  reg.push_back({"design-min-distance",
                 "design-code minimum distance: exact for m<=3, witnessed bound for m=4",
                 [](unsigned m) { return m >= 2 && m <= 4; },
                 [](Ctx& ctx, unsigned m, const SuiteOptions&, double) {
                   Outcome o;
                   if (m <= 3) {
                     const std::uint32_t d = ctx.dcode(m).min_distance();
                     const std::uint32_t expect = m == 2 ? 1 : 6;
                     const std::uint32_t bound = static_cast<std::uint32_t>(pow3(m - 2));
                     o.ok = d == expect && d >= bound;
                     o.detail = "distance " + std::to_string(d);
                   } else {
                     const TritVec w = TritVec::from_digits(low_weight_witness_m4());
                     const bool member = ctx.dcode(4).contains(w);
                     o.ok = member && w.weight() == 21 && 21 >= pow3(2);
                     o.detail = std::string("weight-21 witness ") + (member ? "verified" : "rejected") +
                                ", lower bound 9";
                   }
                   return o;
                 }});

  reg.push_back({"grm-subcode",
                 "every design-code generator lies in the order-4 length-3^m evaluation code",
                 [](unsigned m) { return m >= 3 && m <= 5; },
                 [](Ctx& ctx, unsigned m, const SuiteOptions&, double) {
                   const LinearCode grm = grm_code(ctx.field(m), 4);
                   Outcome o;
                   o.ok = true;
                   for (const TritVec& r : ctx.dcode(m).generator_rows()) {
                     if (!grm.contains(r)) o.ok = false;
                   }
                   o.detail = "ambient dim " + std::to_string(grm.dimension());
                   return o;
                 }});

  reg.push_back({"grm-dimension-formula",
                 "the alternating binomial dimension formula matches both constructions for all orders",
                 [](unsigned m) { return m >= 2 && m <= 4; },
                 [](Ctx& ctx, unsigned m, const SuiteOptions&, double) {
                   const Field& f = ctx.field(m);
                   Outcome o;
                   o.ok = true;
                   for (unsigned ell = 0; ell < 2 * m; ++ell) {
                     const std::uint64_t formula = grm_dimension(GrmParams(3, m, ell));
                     if (grm_code(f, ell).dimension() != formula) o.ok = false;
                     if (ell >= 1 && punctured_grm(f, ell).dimension() != formula) o.ok = false;
                   }
                   return o;
                 }});

  reg.push_back({"grm-constructions-agree",
                 "the extended cyclic construction equals the evaluation construction for all orders",
                 [](unsigned m) { return m == 2 || m == 3; },
                 [](Ctx& ctx, unsigned m, const SuiteOptions&, double) {
                   const Field& f = ctx.field(m);
                   const auto map = field_coordinate_map(f);
                   Outcome o;
                   o.ok = true;
                   for (unsigned ell = 1; ell < 2 * m; ++ell) {
                     const LinearCode mapped = permuted(punctured_grm(f, ell).extended(), map);
                     if (!(mapped == grm_code(f, ell))) o.ok = false;
                   }
                   return o;
                 }});

  reg.push_back({"grm-min-weight-count",
                 "the minimum-weight count formula matches exhaustive and transform-based counts",
                 [](unsigned m) { return m == 2 || m == 3; },
                 [](Ctx& ctx, unsigned m, const SuiteOptions&, double) {
                   const Field& f = ctx.field(m);
                   Outcome o;
                   if (m == 2) {
                     const GrmParams p(3, 2, 2);
                     const WeightEnumerator we = grm_code(f, 2).weight_distribution();
                     o.ok = we.count(grm_min_weight(p)) == grm_min_weight_count(p);
                     o.detail = "count " + we.count(grm_min_weight(p)).str();
                   } else {
                     const GrmParams p(3, 3, 4);
                     const WeightEnumerator dual_we = grm_code(f, 1).weight_distribution();
                     const WeightEnumerator we = macwilliams(dual_we);
                     o.ok = we.count(3) == grm_min_weight_count(p) && we.count(3) == 234;
                     o.detail = "count " + we.count(3).str();
                   }
                   return o;
                 }});

  reg.push_back({"grm-min-distance",
                 "the order-4 code over 27 points has distance 3 and its punctured code distance 2",
                 [](unsigned m) { return m == 3; },
                 [](Ctx& ctx, unsigned m, const SuiteOptions&, double) {
                   const Field& f = ctx.field(m);
                   const std::uint32_t d1 = grm_code(f, 4).min_distance();
                   const std::uint32_t d2 = punctured_grm(f, 4).min_distance();
                   Outcome o;
                   o.ok = d1 == 3 && d2 == 2 && d1 == grm_min_weight(GrmParams(3, 3, 4));
                   o.detail = "distances " + std::to_string(d1) + ", " + std::to_string(d2);
                   return o;
                 }});

  reg.push_back({"grm-dual-order",
                 "duality sends order ell to order m(q-1)-1-ell as an equality of codes",
                 [](unsigned m) { return m == 2 || m == 3; },
                 [](Ctx& ctx, unsigned m, const SuiteOptions&, double) {
                   const Field& f = ctx.field(m);
                   Outcome o;
                   o.ok = true;
                   for (unsigned ell = 0; ell < 2 * m; ++ell) {
                     const GrmParams p(3, m, ell);
                     const unsigned dualord = grm_dual_order(p);
                     if (!(grm_code(f, ell).dual() == grm_code(f, dualord))) o.ok = false;
                     if (grm_dimension(p) + grm_dimension(GrmParams(3, m, dualord)) != pow3(m)) {
                       o.ok = false;
                     }
                   }
                   return o;
                 }});

  reg.push_back({"grm-dual-distance-bound",
                 "duals of the punctured codes respect the formula lower bound on their distance",
                 [](unsigned m) { return m == 2 || m == 3; },
                 [](Ctx& ctx, unsigned m, const SuiteOptions&, double) {
                   const Field& f = ctx.field(m);
                   Outcome o;
                   o.ok = true;
                   // ell = 2m-1 is excluded: its punctured code is the full
                   // space, whose dual is zero.
                   for (unsigned ell = 1; ell + 1 < 2 * m; ++ell) {
                     const unsigned ellp = 2 * m - 1 - ell;
                     const GrmParams pp(3, m, ellp);
                     const std::uint32_t bound = static_cast<std::uint32_t>(grm_min_weight(pp));
                     const std::uint32_t d = punctured_grm(f, ell).dual().min_distance();
                     if (d < bound) o.ok = false;
                   }
                   return o;
                 }});

  reg.push_back({"affine-invariance",
                 "both the quadratic-trace code and the design code are affine-invariant",
                 [](unsigned m) { return m >= 2 && m <= 5; },
                 [](Ctx& ctx, unsigned m, const SuiteOptions&, double) {
                   const Field& f = ctx.field(m);
                   Outcome o;
                   const bool a = is_affine_invariant(ctx.qcode(m), f);
                   const bool b = is_affine_invariant(ctx.dcode(m), f);
                   o.ok = a && b;
                   o.detail = std::string("quadratic ") + (a ? "yes" : "no") + ", design " +
                              (b ? "yes" : "no");
                   return o;
                 }});

  reg.push_back({"design-2design",
                 "the minimum-weight supports form a 2-design; odd m matches lambda = d(d-1)/2",
                 [](unsigned m) { return m >= 2 && m <= 5; },
                 [](Ctx& ctx, unsigned m, const SuiteOptions&, double) {
                   const Design& dsg = ctx.design(m);
                   Outcome o;
                   const auto lambda = dsg.t_design_lambda(2);
                   if (!lambda) {
                     o.detail = "pair counts are not constant";
                     return o;
                   }
                   const std::uint64_t v = dsg.points(), k = dsg.block_size(), b = dsg.block_count();
                   // b * C(k,2) = lambda * C(v,2)
                   const bool counting = b * (k * (k - 1) / 2) == *lambda * (v * (v - 1) / 2);
                   bool lambda_ok = true;
                   if (odd(m)) lambda_ok = *lambda == k * (k - 1) / 2;
                   // replication r = lambda (v-1)/(k-1); rank below v-1 needs 3 | r - lambda
                   const std::uint64_t r = *lambda * (v - 1) / (k - 1);
                   bool hamada_ok = true;
                   if (ctx.dcode(m).dimension() < v - 1) hamada_ok = (r - *lambda) % 3 == 0;
                   o.ok = counting && lambda_ok && hamada_ok;
                   o.detail = "2-(" + std::to_string(v) + "," + std::to_string(k) + "," +
                              std::to_string(*lambda) + ") with b=" + std::to_string(b);
                   return o;
                 }});

  reg.push_back({"example-design-code",
                 "small design codes match [9,9,1] and [27,19,6] and dimension 33 at m=4",
                 [](unsigned m) { return m >= 2 && m <= 4; },
                 [](Ctx& ctx, unsigned m, const SuiteOptions&, double) {
                   const LinearCode& dc = ctx.dcode(m);
                   Outcome o;
                   if (m == 2) {
                     o.ok = dc.length() == 9 && dc.dimension() == 9 && dc.min_distance() == 1;
                   } else if (m == 3) {
                     o.ok = dc.length() == 27 && dc.dimension() == 19 && dc.min_distance() == 6;
                   } else {
                     o.ok = dc.length() == 81 && dc.dimension() == 33;
                   }
                   o.detail = "[" + std::to_string(dc.length()) + "," + std::to_string(dc.dimension()) +
                              "]";
                   return o;
                 }});

  reg.push_back({"example-enumerators",
                 "both m=3 weight enumerators match their reference 4-term and 22-term forms",
                 [](unsigned m) { return m == 3; },
                 [](Ctx& ctx, unsigned m, const SuiteOptions&, double) {
                   Outcome o;
                   const WeightEnumerator& qd = ctx.qdist(m);
                   bool ok = qd.count(15) == 702 && qd.count(18) == 780 && qd.count(21) == 702 &&
                             qd.count(27) == 2 && qd.nonzero_weights().size() == 4;
                   const WeightEnumerator dual_we = ctx.dcode(m).dual().weight_distribution();
                   const WeightEnumerator dwe = macwilliams(dual_we);
                   for (std::uint32_t w = 6; w <= 27; ++w) {
                     if (dwe.count(w) != kDesignCodeEnumeratorM3[w - 6]) ok = false;
                   }
                   for (std::uint32_t w = 1; w < 6; ++w) {
                     if (dwe.count(w) != 0) ok = false;
                   }
                   o.ok = ok;
                   return o;
                 }});

  reg.push_back({"am-designs",
                 "the design criterion applies at t=2 and lists every nonzero weight below 3^m",
                 [](unsigned m) { return m == 3 || m == 5; },
                 [](Ctx& ctx, unsigned m, const SuiteOptions&, double) {
                   const WeightEnumerator code_we = quadratic_code_distribution(ctx.field(m));
                   const WeightEnumerator dual_we = macwilliams(code_we);
                   // The criterion is applied with the dual as the primal
                   // side: its dual weight count s is then the number of
                   // nonzero weights of the four-weight code.
                   const AmReport rep = assmus_mattson(dual_we, code_we, 2);
                   std::vector<std::uint32_t> expect;
                   for (std::uint32_t w : code_we.nonzero_weights()) {
                     if (w < pow3(m)) expect.push_back(w);
                   }
                   Outcome o;
                   o.ok = rep.applies && rep.design_weights_dual == expect;
                   o.detail = "s=" + std::to_string(rep.s) + ", design weights " +
                              weights_to_string(rep.design_weights_dual);
                   return o;
                 }});

  return reg;
}

}  // namespace

SuiteReport run_suite(const SuiteOptions& options) {
  std::vector<unsigned> ms = options.m_values;
  std::sort(ms.begin(), ms.end());
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  for (unsigned m : ms) {
    if (m < 2 || m > 7) {
      throw std::invalid_argument("run_suite: m must lie in [2,7], got " + std::to_string(m));
    }
  }

  const auto registry = build_registry();
  Ctx ctx(std::max(1u, options.workers));
  SuiteReport report;
  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };

  for (unsigned m : ms) {
    for (const Claim& claim : registry) {
      if (!claim.applicable(m)) continue;
      ClaimResult res;
      res.id = claim.id;
      res.m = m;
      res.statement = claim.statement;
      if (options.budget_seconds > 0 && elapsed() > options.budget_seconds) {
        res.status = ClaimStatus::skipped;
        res.detail = "time budget exhausted";
        res.seconds = 0;
        report.entries.push_back(std::move(res));
        continue;
      }
      const auto t0 = std::chrono::steady_clock::now();
      try {
        Outcome out = claim.run(ctx, m, options, elapsed());
        const bool partial = out.detail.size() >= 5 && out.detail.substr(out.detail.size() - 5) == "|SKIP";
        if (partial) {
          out.detail.resize(out.detail.size() - 5);
          res.status = ClaimStatus::skipped;
        } else if (out.ok) {
          res.status = ClaimStatus::pass;
        } else {
          res.status = out.in_hypothesis ? ClaimStatus::fail : ClaimStatus::flag;
          if (!out.in_hypothesis) {
            out.detail += out.detail.empty() ? "" : "; ";
            out.detail += "outside the stated hypothesis range";
          }
        }
        res.detail = out.detail;
      } catch (const std::exception& e) {
        res.status = ClaimStatus::fail;
        res.detail = std::string("exception: ") + e.what();
      }
      res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      report.entries.push_back(std::move(res));
    }
  }
  return report;
}

}  // namespace tricode
