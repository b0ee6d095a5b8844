#include "tricode/designs.hpp"

#include <algorithm>
#include <istream>
#include <nlohmann/json.hpp>
#include <ostream>
#include <thread>

namespace tricode {

Design::Design(std::uint32_t v, std::vector<std::vector<std::uint32_t>> blocks)
    : v_(v), blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw std::invalid_argument("Design: at least one block required");
  k_ = static_cast<std::uint32_t>(blocks_[0].size());
  for (auto& b : blocks_) {
    if (b.size() != k_) throw std::invalid_argument("Design: blocks of unequal size");
    if (!std::is_sorted(b.begin(), b.end())) std::sort(b.begin(), b.end());
    if (std::adjacent_find(b.begin(), b.end()) != b.end()) {
      throw std::invalid_argument("Design: repeated point inside a block");
    }
    if (!b.empty() && b.back() >= v_) throw std::invalid_argument("Design: point index out of range");
  }
  std::sort(blocks_.begin(), blocks_.end());
  if (std::adjacent_find(blocks_.begin(), blocks_.end()) != blocks_.end()) {
    throw std::invalid_argument("Design: repeated block; the design must be simple");
  }
}

TritVec Design::incidence_row(std::size_t i) const {
  TritVec row(v_);
  for (std::uint32_t p : blocks_.at(i)) row.set(p, 1);
  return row;
}

std::optional<std::uint64_t> Design::t_design_lambda(unsigned t) const {
  if (t == 0 || t > 3) throw std::invalid_argument("t_design_lambda: t must be 1, 2 or 3");
  if (v_ > 243) throw std::invalid_argument("t_design_lambda: guarded to v <= 243");
  if (t > k_) throw std::invalid_argument("t_design_lambda: t exceeds the block size");

  if (t == 1) {
    std::vector<std::uint64_t> cnt(v_, 0);
    for (const auto& b : blocks_) {
      for (std::uint32_t p : b) ++cnt[p];
    }
    for (std::uint32_t p = 1; p < v_; ++p) {
      if (cnt[p] != cnt[0]) return std::nullopt;
    }
    return cnt[0];
  }
  if (t == 2) {
    std::vector<std::uint64_t> cnt(static_cast<std::size_t>(v_) * v_, 0);
    for (const auto& b : blocks_) {
      for (std::size_t i = 0; i < b.size(); ++i) {
        for (std::size_t j = i + 1; j < b.size(); ++j) {
          ++cnt[static_cast<std::size_t>(b[i]) * v_ + b[j]];
        }
      }
    }
    const std::uint64_t lambda = cnt[1];  // pair (0,1)
    for (std::uint32_t i = 0; i < v_; ++i) {
      for (std::uint32_t j = i + 1; j < v_; ++j) {
        if (cnt[static_cast<std::size_t>(i) * v_ + j] != lambda) return std::nullopt;
      }
    }
    return lambda;
  }
  // t == 3: triple counts keyed by (i, j, l) with i < j < l.
  std::vector<std::uint64_t> cnt(static_cast<std::size_t>(v_) * v_ * v_, 0);
  for (const auto& b : blocks_) {
    for (std::size_t i = 0; i < b.size(); ++i) {
      for (std::size_t j = i + 1; j < b.size(); ++j) {
        for (std::size_t l = j + 1; l < b.size(); ++l) {
          ++cnt[(static_cast<std::size_t>(b[i]) * v_ + b[j]) * v_ + b[l]];
        }
      }
    }
  }
  const std::uint64_t lambda = cnt[static_cast<std::size_t>(0) * v_ * v_ + 1 * v_ + 2];
  for (std::uint32_t i = 0; i < v_; ++i) {
    for (std::uint32_t j = i + 1; j < v_; ++j) {
      for (std::uint32_t l = j + 1; l < v_; ++l) {
        if (cnt[(static_cast<std::size_t>(i) * v_ + j) * v_ + l] != lambda) return std::nullopt;
      }
    }
  }
  return lambda;
}

std::string Design::to_json() const {
  nlohmann::ordered_json j;
  j["v"] = v_;
  j["k"] = k_;
  j["blocks"] = blocks_;
  return j.dump();
}

Design Design::from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  return Design(j.at("v").get<std::uint32_t>(),
                j.at("blocks").get<std::vector<std::vector<std::uint32_t>>>());
}

namespace {

void put_u32(std::ostream& os, std::uint32_t v) {
  unsigned char buf[4] = {static_cast<unsigned char>(v & 0xff), static_cast<unsigned char>((v >> 8) & 0xff),
                          static_cast<unsigned char>((v >> 16) & 0xff),
                          static_cast<unsigned char>((v >> 24) & 0xff)};
  os.write(reinterpret_cast<const char*>(buf), 4);
}

std::uint32_t get_u32(std::istream& is) {
  unsigned char buf[4];
  is.read(reinterpret_cast<char*>(buf), 4);
  if (!is) throw std::runtime_error("Design::read_binary: truncated input");
  return static_cast<std::uint32_t>(buf[0]) | (static_cast<std::uint32_t>(buf[1]) << 8) |
         (static_cast<std::uint32_t>(buf[2]) << 16) | (static_cast<std::uint32_t>(buf[3]) << 24);
}

}  // namespace

void Design::write_binary(std::ostream& os) const {
  put_u32(os, v_);
  put_u32(os, k_);
  put_u32(os, static_cast<std::uint32_t>(blocks_.size()));
  for (const auto& b : blocks_) {
    for (std::uint32_t p : b) put_u32(os, p);
  }
}

Design Design::read_binary(std::istream& is) {
  const std::uint32_t v = get_u32(is);
  const std::uint32_t k = get_u32(is);
  const std::uint32_t b = get_u32(is);
  std::vector<std::vector<std::uint32_t>> blocks(b, std::vector<std::uint32_t>(k));
  for (auto& blk : blocks) {
    for (auto& p : blk) p = get_u32(is);
  }
  return Design(v, std::move(blocks));
}

Design support_design(const LinearCode& code, std::uint32_t w) {
  if (w == 0 || w > code.length()) throw std::invalid_argument("support_design: weight out of range");
  std::vector<std::vector<std::uint32_t>> blocks;
  for_each_codeword(code, [&](const TritVec& word) {
    if (word.weight() != w) return;
    std::vector<std::uint32_t> supp;
    supp.reserve(w);
    for (std::uint32_t i = 0; i < word.size(); ++i) {
      if (word.get(i)) supp.push_back(i);
    }
    blocks.push_back(std::move(supp));
  });
  if (blocks.empty()) throw std::invalid_argument("support_design: no codewords of the given weight");
  std::sort(blocks.begin(), blocks.end());
  blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
  return Design(code.length(), std::move(blocks));
}

std::uint32_t dense_rank_mod_p(std::vector<std::vector<std::uint8_t>> rows, unsigned p) {
  if (rows.empty()) return 0;
  const std::size_t n = rows[0].size();
  std::vector<std::uint32_t> inv(p, 0);
  for (unsigned a = 1; a < p; ++a) {
    for (unsigned b = 1; b < p; ++b) {
      if (a * b % p == 1) inv[a] = b;
    }
  }
  std::uint32_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t pivot = rows.size();
    for (std::size_t i = r; i < rows.size(); ++i) {
      if (rows[i][c]) {
        pivot = i;
        break;
      }
    }
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    const std::uint32_t f = inv[rows[r][c]];
    for (std::size_t j = c; j < n; ++j) rows[r][j] = static_cast<std::uint8_t>(rows[r][j] * f % p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || !rows[i][c]) continue;
      const std::uint32_t mult = rows[i][c];
      for (std::size_t j = c; j < n; ++j) {
        rows[i][j] = static_cast<std::uint8_t>((rows[i][j] + (p - mult) * rows[r][j]) % p);
      }
    }
    ++r;
  }
  return r;
}

std::uint32_t p_rank(const Design& design, unsigned p, unsigned workers) {
  if (p < 2) throw std::invalid_argument("p_rank: p must be a prime");
  const std::uint64_t b = design.block_count();
  if (p == 3) {
    const unsigned nshards = std::max(1u, workers);
    std::vector<SpanBasis> bases(nshards, SpanBasis(design.points()));
    if (nshards == 1) {
      for (std::uint64_t i = 0; i < b; ++i) bases[0].insert(design.incidence_row(i));
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < nshards; ++t) {
        pool.emplace_back([&, t] {
          for (std::uint64_t i = t; i < b; i += nshards) bases[t].insert(design.incidence_row(i));
        });
      }
      for (auto& th : pool) th.join();
      for (unsigned t = 1; t < nshards; ++t) bases[0].merge(bases[t]);
    }
    return bases[0].rank();
  }
  std::vector<std::vector<std::uint8_t>> rows(b, std::vector<std::uint8_t>(design.points(), 0));
  for (std::uint64_t i = 0; i < b; ++i) {
    for (std::uint32_t pt : design.blocks()[i]) rows[i][pt] = 1;
  }
  return dense_rank_mod_p(std::move(rows), p);
}

LinearCode design_code(const Design& design) {
  SpanBasis basis(design.points());
  for (std::uint64_t i = 0; i < design.block_count(); ++i) basis.insert(design.incidence_row(i));
  return LinearCode(std::move(basis));
}

}  // namespace tricode
