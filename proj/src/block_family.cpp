// Copyright 2026 The pbij Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "pbij/block_family.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>
#include <sstream>

#include "pbij/error.hpp"

namespace pbij {

std::vector<std::vector<Cardinality>> intersection_matrix(std::span<const SetDescriptor> blocks) {
  std::vector<std::vector<Cardinality>> out(blocks.size(),
                                            std::vector<Cardinality>(blocks.size(), Cardinality::finite(0)));
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i; j < blocks.size(); ++j) {
      out[i][j] = out[j][i] = finite_intersection_size(blocks[i], blocks[j]);
    }
  }
  return out;
}

BlockFamily BlockFamily::create(std::vector<SetDescriptor> blocks, std::string name) {
  if (blocks.empty()) throw ContractViolation("a block family needs at least one block");
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].is_finite()) {
      throw ContractViolation("block B" + std::to_string(i) + " = " + blocks[i].to_string() + " is finite");
    }
  }
  BlockFamily f;
  f.name_ = std::move(name);
  const std::size_t n = blocks.size();
  f.meets_.assign(n, std::vector<SetDescriptor>(n));
  f.weights_.assign(n, std::vector<std::size_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      SetDescriptor meet = intersect(blocks[i], blocks[j]);
      if (!meet.is_finite()) {
        throw NotAlmostDisjoint("B" + std::to_string(i) + " and B" + std::to_string(j) +
                                " share infinitely many points: " + meet.to_string());
      }
      f.weights_[i][j] = f.weights_[j][i] = meet.finite_add().size();
      f.meets_[i][j] = f.meets_[j][i] = std::move(meet);
    }
  }
  f.blocks_ = std::move(blocks);
  return f;
}

const SetDescriptor& BlockFamily::intersection(std::size_t i, std::size_t j) const {
  if (i == j) throw ContractViolation("intersection of B" + std::to_string(i) + " with itself is the block");
  return meets_.at(i).at(j);
}

std::size_t BlockFamily::max_intersection() const {
  std::size_t m = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) {
      if (i != j) m = std::max(m, weights_[i][j]);
    }
  }
  return m;
}

std::optional<std::size_t> BlockFamily::uniform_n() const {
  if (size() < 2) return std::nullopt;
  const std::size_t n = weights_[0][1];
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) {
      if (i != j && weights_[i][j] != n) return std::nullopt;
    }
  }
  return n;
}

Matrix p_matrix_from_weights(const Matrix& w) {
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  const std::size_t n = w.size();
  Matrix widest(n, std::vector<std::size_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) widest[i][j] = i == j ? kInf : w[i][j];
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        widest[i][j] = std::max(widest[i][j], std::min(widest[i][k], widest[k][j]));
      }
    }
  }
  Matrix p(n, std::vector<std::size_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) {
        p[i][j] = widest[i][j];
        continue;
      }
      // A closed chain must leave i first.
      for (std::size_t k = 0; k < n; ++k) {
        if (k != i) p[i][i] = std::max(p[i][i], std::min(w[i][k], widest[k][i]));
      }
    }
  }
  return p;
}

Matrix p_matrix(const BlockFamily& family) { return p_matrix_from_weights(family.weights()); }

Matrix p_matrix_by_paths(const Matrix& w) {
  const std::size_t n = w.size();
  if (n > kMaxPathBlocks) {
    throw UnsupportedConfiguration("path enumeration limited to " + std::to_string(kMaxPathBlocks) + " blocks");
  }
  Matrix p(n, std::vector<std::size_t>(n, 0));
  std::vector<bool> on_path(n, false);
  std::size_t start = 0;
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t at, std::size_t width) {
    for (std::size_t next = 0; next < n; ++next) {
      if (next == at) continue;
      const std::size_t wd = std::min(width, w[at][next]);
      if (next == start) {
        p[start][start] = std::max(p[start][start], wd);
        continue;
      }
      if (on_path[next]) continue;
      p[start][next] = std::max(p[start][next], wd);
      on_path[next] = true;
      walk(next, wd);
      on_path[next] = false;
    }
  };
  for (start = 0; start < n; ++start) {
    on_path[start] = true;
    walk(start, std::numeric_limits<std::size_t>::max());
    on_path[start] = false;
  }
  return p;
}

std::string ChainCertificate::to_string() const {
  std::ostringstream os;
  os << 'B' << i;
  for (std::size_t k : interior) os << " -> B" << k;
  os << " -> B" << j << " (m=" << m << ')';
  return os.str();
}

namespace {

// Step weight along a chain; repeating a block costs nothing.
bool step_ok(const Matrix& w, std::size_t a, std::size_t b, std::size_t m) {
  return a == b || w[a][b] >= m;
}

// reach[r][v]: a walk of exactly r steps between distinct consecutive blocks,
// each of weight >= m, leads from v to `to`.
std::vector<std::vector<bool>> exact_reach(const Matrix& w, std::size_t to, std::size_t m, std::size_t max_steps) {
  const std::size_t n = w.size();
  std::vector<std::vector<bool>> reach(max_steps + 1, std::vector<bool>(n, false));
  reach[0][to] = true;
  for (std::size_t r = 1; r <= max_steps; ++r) {
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t u = 0; u < n && !reach[r][v]; ++u) {
        if (u != v && w[v][u] >= m && reach[r - 1][u]) reach[r][v] = true;
      }
    }
  }
  return reach;
}

// Lexicographically least walk of exactly `steps` steps from `from`, given reach tables.
std::vector<std::size_t> least_walk(const Matrix& w, const std::vector<std::vector<bool>>& reach, std::size_t from,
                                    std::size_t steps, std::size_t m) {
  std::vector<std::size_t> walk{from};
  std::size_t v = from;
  for (std::size_t r = steps; r > 0; --r) {
    for (std::size_t u = 0; u < w.size(); ++u) {
      if (u != v && w[v][u] >= m && reach[r - 1][u]) {
        v = u;
        break;
      }
    }
    walk.push_back(v);
  }
  return walk;
}

}  // namespace

std::optional<ChainCertificate> m_chain(const BlockFamily& family, std::size_t i, std::size_t j, std::size_t m) {
  const Matrix& w = family.weights();
  const std::size_t n = w.size();
  if (i >= n || j >= n) throw ContractViolation("m_chain: block index out of range");
  if (i != j && w[i][j] >= m) return ChainCertificate{i, j, {}, m};
  // A shortest walk between distinct blocks never needs more than n steps.
  auto reach = exact_reach(w, j, m, n);
  for (std::size_t steps = 2; steps <= n; ++steps) {
    if (!reach[steps][i]) continue;
    auto walk = least_walk(w, reach, i, steps, m);
    return ChainCertificate{i, j, std::vector<std::size_t>(walk.begin() + 1, walk.end() - 1), m};
  }
  return std::nullopt;
}

bool is_valid_chain(const ChainCertificate& chain, const Matrix& weights) {
  const std::size_t n = weights.size();
  if (chain.i >= n || chain.j >= n) return false;
  if (chain.i == chain.j && (chain.interior.empty() || chain.interior.front() == chain.i)) return false;
  std::vector<std::size_t> seq{chain.i};
  seq.insert(seq.end(), chain.interior.begin(), chain.interior.end());
  seq.push_back(chain.j);
  for (std::size_t a = 0; a + 1 < seq.size(); ++a) {
    if (seq[a] >= n || seq[a + 1] >= n || !step_ok(weights, seq[a], seq[a + 1], chain.m)) return false;
  }
  return true;
}

StratifiedSemigroup StratifiedSemigroup::generated(const BlockFamily& family) {
  return StratifiedSemigroup(family, p_matrix(family), family.size() >= 2);
}

StratifiedSemigroup StratifiedSemigroup::displayed(const BlockFamily& family, std::size_t n) {
  Matrix bounds(family.size(), std::vector<std::size_t>(family.size(), n));
  return StratifiedSemigroup(family, std::move(bounds), true);
}

Membership StratifiedSemigroup::membership(const SymElement& f) const {
  const auto& blocks = family_.blocks();
  if (f.is_empty()) return {contains_empty_, Stratum::empty()};
  if (!f.has_finite_domain()) {
    Stratum s = classify(f, blocks);
    return {s.kind == Stratum::Kind::Group, s};
  }
  const auto pairs = f.finite_pairs();
  const std::size_t k = pairs.size();
  auto holds = [&](const SetDescriptor& b, bool sources) {
    return std::all_of(pairs.begin(), pairs.end(),
                       [&](const Pair& p) { return b.contains(sources ? p.first : p.second); });
  };
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (!holds(blocks[i], true)) continue;
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      if (k <= bounds_[i][j] && holds(blocks[j], false)) return {true, Stratum::finite(k, i, j)};
    }
  }
  return {false, classify(f, blocks)};
}

namespace {

Factor block_factor(const SetDescriptor& block, std::size_t index, const std::vector<Pair>& moves) {
  std::vector<Point> xs, ys;
  for (const auto& [x, y] : moves) {
    if (x == y) continue;
    xs.push_back(x);
    ys.push_back(y);
  }
  if (xs.empty()) return {SymElement::identity(block), Factor::Role::BlockIdentity, index};
  return {SymElement::block_perm(block, complete_to_permutation(xs, ys)), Factor::Role::BlockPermutation, index};
}

// Sends each tracked point into `into`, leaving those already there in place.
std::vector<Pair> gather(std::vector<Point>& tracked, const SetDescriptor& into) {
  std::set<Point> staying;
  for (Point p : tracked) {
    if (into.contains(p)) staying.insert(p);
  }
  std::vector<Point> free;
  for (Point q : into.members()) {
    if (!staying.count(q)) free.push_back(q);
  }
  std::vector<Pair> moves;
  std::size_t next = 0;
  for (Point& p : tracked) {
    if (staying.count(p)) continue;
    if (next >= free.size()) throw ContractViolation("factorize: intersection too small for the tracked points");
    moves.emplace_back(p, free[next]);
    p = free[next++];
  }
  return moves;
}

std::vector<std::size_t> factor_walk(const Matrix& w, std::size_t i, std::size_t j, std::size_t k) {
  const std::size_t n = w.size();
  const std::size_t min_steps = (i != j && w[i][j] == k) ? 1 : 2;
  const std::size_t max_steps = n + 3;
  auto reach = exact_reach(w, j, k, max_steps);
  for (std::size_t steps = min_steps; steps <= max_steps; ++steps) {
    if (reach[steps][i]) return least_walk(w, reach, i, steps, k);
  }
  return {};
}

Factorization factor_finite(const SymElement& f, const BlockFamily& family, std::size_t k, std::size_t i,
                            std::size_t j) {
  const Matrix& w = family.weights();
  auto walk = factor_walk(w, i, j, k);
  if (walk.empty()) throw NotInSemigroup("no walk of weight " + std::to_string(k) + " for " + f.to_string());
  const std::size_t L = walk.size() - 1;
  const auto pairs = f.finite_pairs();
  std::vector<Point> tracked;
  for (const auto& p : pairs) tracked.push_back(p.first);

  std::vector<Factor> applied;
  std::vector<Point> first_meet;
  for (std::size_t t = 0; t < L; ++t) {
    const std::size_t here = walk[t], next = walk[t + 1];
    const SetDescriptor& into = family.intersection(here, next);
    const std::set<Point> before(tracked.begin(), tracked.end());
    auto moves = gather(tracked, into);
    if (t == 1) {
      // Points that entered the first intersection untracked must not reach the next block.
      std::vector<Point> evict, exclude = first_meet;
      for (Point e : first_meet) {
        if (!before.count(e) && family.block(next).contains(e)) evict.push_back(e);
      }
      for (const auto& [x, y] : moves) {
        exclude.push_back(x);
        exclude.push_back(y);
      }
      auto fresh = difference(family.block(here), family.block(next)).least(evict.size(), exclude);
      for (std::size_t a = 0; a < evict.size(); ++a) moves.emplace_back(evict[a], fresh[a]);
    }
    if (t == 0) first_meet = into.members();
    applied.push_back(block_factor(family.block(here), here, moves));
  }
  std::vector<Pair> last;
  for (std::size_t a = 0; a < pairs.size(); ++a) last.emplace_back(tracked[a], pairs[a].second);
  applied.push_back(block_factor(family.block(walk[L]), walk[L], last));

  Factorization out;
  out.walk = walk;
  out.factors.assign(applied.rbegin(), applied.rend());
  return out;
}

}  // namespace

Factorization factorize(const SymElement& f, const BlockFamily& family) {
  auto s = StratifiedSemigroup::generated(family);
  auto m = s.membership(f);
  if (!m.member) throw NotInSemigroup(f.to_string() + " is not generated by the block groups");
  if (m.stratum.kind == Stratum::Kind::Group) {
    auto role = f.is_idempotent() ? Factor::Role::BlockIdentity : Factor::Role::BlockPermutation;
    return {{{f, role, m.stratum.i}}, {m.stratum.i}};
  }
  if (m.stratum.kind == Stratum::Kind::Finite) return factor_finite(f, family, m.stratum.k, m.stratum.i, m.stratum.j);

  // 1_∅: two disjoint blocks annihilate; otherwise push a shared point out of a block.
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (family.weight(i, j) == 0) {
        return {{{SymElement::identity(family.block(i)), Factor::Role::BlockIdentity, i},
                 {SymElement::identity(family.block(j)), Factor::Role::BlockIdentity, j}},
                {j, i}};
      }
    }
  }
  Point x = family.intersection(0, 1).members().front();
  Point y = *difference(family.block(1), family.block(0)).min();
  auto inner = factorize(SymElement::fin({{x, y}}), family);
  inner.factors.insert(inner.factors.begin(), {SymElement::identity(family.block(0)), Factor::Role::BlockIdentity, 0});
  inner.walk.push_back(0);
  return inner;
}

SymElement recompose(const Factorization& factorization) {
  const auto& fs = factorization.factors;
  if (fs.empty()) throw ContractViolation("recompose: no factors");
  SymElement r = fs.back().element;
  for (std::size_t a = fs.size() - 1; a-- > 0;) r = sym_compose(fs[a].element, r);
  return r;
}

}  // namespace pbij
