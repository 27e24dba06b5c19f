#include "lsq/steiner.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <thread>

namespace lsq {

BlockSet sts_validate(int n, std::vector<std::array<int, 3>> blocks) {
  if (n < 1 || (n % 6 != 1 && n % 6 != 3)) {
    throw error(errc::bad_order, "order must be 1 or 3 mod 6", n);
  }
  for (auto& b : blocks) {
    std::sort(b.begin(), b.end());
    if (b[0] < 1 || b[2] > n || b[0] == b[1] || b[1] == b[2]) {
      throw error(errc::invalid_argument, "block is not a 3-subset of 1..n");
    }
  }
  std::sort(blocks.begin(), blocks.end());
  std::vector<char> covered(static_cast<size_t>(n) * n, 0);
  for (const auto& b : blocks) {
    const int pairs[3][2] = {{b[0], b[1]}, {b[0], b[2]}, {b[1], b[2]}};
    for (auto& pr : pairs) {
      char& c = covered[(pr[0] - 1) * n + (pr[1] - 1)];
      if (c) {
        throw error(errc::pair_doubled,
                    "pair {" + std::to_string(pr[0]) + "," +
                        std::to_string(pr[1]) + "} covered twice",
                    pr[0], pr[1]);
      }
      c = 1;
    }
  }
  for (int x = 1; x <= n; ++x) {
    for (int y = x + 1; y <= n; ++y) {
      if (!covered[(x - 1) * n + (y - 1)]) {
        throw error(errc::pair_uncovered,
                    "pair {" + std::to_string(x) + "," + std::to_string(y) +
                        "} uncovered",
                    x, y);
      }
    }
  }
  return BlockSet{n, std::move(blocks)};
}

LatinSquare sts_to_quasigroup(const BlockSet& B) {
  int n = B.n;
  std::vector<int> grid(static_cast<size_t>(n) * n, 0);
  for (int x = 1; x <= n; ++x) grid[(x - 1) * n + (x - 1)] = x;
  for (const auto& b : B.blocks) {
    const int t[3][3] = {{b[0], b[1], b[2]}, {b[0], b[2], b[1]},
                         {b[1], b[2], b[0]}};
    for (auto& e : t) {
      grid[(e[0] - 1) * n + (e[1] - 1)] = e[2];
      grid[(e[1] - 1) * n + (e[0] - 1)] = e[2];
    }
  }
  return LatinSquare::validate(n, std::move(grid));
}

bool is_steiner_square(const LatinSquare& L) {
  int n = L.order();
  for (int x = 1; x <= n; ++x) {
    if (L.at(x, x) != x) return false;
    for (int y = 1; y <= n; ++y) {
      if (L.at(x, y) != L.at(y, x)) return false;
      if (L.at(x, L.at(x, y)) != y) return false;
    }
  }
  return true;
}

BlockSet quasigroup_to_sts(const LatinSquare& S) {
  int n = S.order();
  for (int x = 1; x <= n; ++x) {
    if (S.at(x, x) != x) {
      throw error(errc::not_idempotent, "diagonal entry differs from index",
                  x);
    }
  }
  for (int x = 1; x <= n; ++x) {
    for (int y = 1; y <= n; ++y) {
      if (S.at(x, y) != S.at(y, x) || S.at(x, S.at(x, y)) != y) {
        throw error(errc::not_totally_symmetric,
                    "square is not totally symmetric", x, y);
      }
    }
  }
  std::set<std::array<int, 3>> blocks;
  for (int x = 1; x <= n; ++x) {
    for (int y = x + 1; y <= n; ++y) {
      std::array<int, 3> b = {x, y, S.at(x, y)};
      std::sort(b.begin(), b.end());
      blocks.insert(b);
    }
  }
  return sts_validate(n,
                      std::vector<std::array<int, 3>>(blocks.begin(),
                                                      blocks.end()));
}

StsSearchState::StsSearchState(const LatinSquare& S, int i, int j)
    : L_(S),
      n_(S.order()),
      i_(i),
      j_(j),
      ell_(n_ + 1, 0),
      alpha_(n_ + 1, n_ + 1),
      alpha_inv_(n_ + 1, 0),
      t_alpha_(n_ + 1, 0) {
  if (i == j) {
    throw error(errc::equal_rows, "search needs two distinct rows", i, j);
  }
  int k = L_.at(i_, j_);
  CycleStructure nonsingular;
  for (int s = 1; s <= n_; ++s) {
    if (ell_[s] != 0) continue;
    int len = 0;
    int t = s;
    do {
      ++len;
      t = L_.at(j_, L_.column_of(i_, t));
    } while (t != s);
    t = s;
    do {
      ell_[t] = len;
      t = L_.at(j_, L_.column_of(i_, t));
    } while (t != s);
    if (s != i_ && s != j_ && s != k) nonsingular.lengths.push_back(len);
  }
  std::sort(nonsingular.lengths.begin(), nonsingular.lengths.end(),
            std::greater<int>());
  // Seed the singular cycle (i k j): labels 1, 2, 3; P offset 3.
  p_ = init_p(nonsingular, 3, n_);
  alpha_[i_] = 1;
  alpha_inv_[1] = i_;
  alpha_[j_] = 2;
  alpha_inv_[2] = j_;
  alpha_[k] = 3;
  alpha_inv_[3] = k;
  t_alpha_[1] = i_;
  t_alpha_[2] = j_;
  t_alpha_[3] = k;
  curt_ = 3;
}

void StsSearchState::label_inverse_pair(int s) {
  if (singular(s)) {
    throw error(errc::singular_symbol, "symbol is in the singular cycle", s);
  }
  if (alpha_[s] != star()) {
    throw error(errc::already_labelled, "symbol already labelled", s);
  }
  int len = ell_[s];
  int lambda = p_[len];
  int sig = s;
  for (int k = 0; k < len; ++k) {
    curt_ += 2;
    // sig walks the left cycle R; its column b is a symbol of the inverse
    // cycle R'. R gets the upper label block, R' the lower.
    alpha_[sig] = lambda + len;
    alpha_inv_[lambda + len] = sig;
    t_alpha_[curt_ - 1] = sig;
    int b = L_.column_of(i_, sig);
    alpha_[b] = lambda;
    alpha_inv_[lambda] = b;
    t_alpha_[curt_] = b;
    sig = L_.at(j_, b);
    ++lambda;
  }
  p_[len] += 2 * len;
  pair_log_.push_back(len);
}

void StsSearchState::extend() {
  int star_v = star();
  int len = ell_[t_alpha_[curt_]];
  int x = 1;
  int y = curt_ - 2 * len + 1;
  // Total symmetry: only the upper triangle of the labelled block needs
  // scanning.
  while (y <= curt_) {
    int s = L_.at(t_alpha_[x], t_alpha_[y]);
    if (alpha_[s] == star_v) label_inverse_pair(s);
    auto [nx, ny] = succ_prime(x, y);
    x = nx;
    y = ny;
  }
}

std::vector<int> StsSearchState::longest_unlabelled_symbols() const {
  int star_v = n_ + 1;
  int best = 0;
  std::vector<int> out;
  for (int s = 1; s <= n_; ++s) {
    if (alpha_[s] != star_v) continue;
    if (ell_[s] > best) {
      best = ell_[s];
      out.clear();
    }
    if (ell_[s] == best) out.push_back(s);
  }
  return out;
}

void StsSearchState::rollback(const Checkpoint& cp) {
  while (pair_log_.size() > cp.pairs) {
    p_[pair_log_.back()] -= 2 * pair_log_.back();
    pair_log_.pop_back();
  }
  int star_v = star();
  while (curt_ > cp.curt) {
    int e = t_alpha_[curt_];
    alpha_inv_[alpha_[e]] = 0;
    alpha_[e] = star_v;
    --curt_;
  }
}

void StsSearchState::offer_leaf(Candidate& best) {
  ++stats_.leaves;
  auto cell = [&](int idx) {
    int r = idx / n_ + 1;
    int c = idx % n_ + 1;
    return alpha_[L_.at(alpha_inv_[r], alpha_inv_[c])];
  };
  int total = n_ * n_;
  if (best.valid) {
    int idx = 0;
    while (idx < total) {
      int v = cell(idx);
      if (v != best.grid[idx]) break;
      ++idx;
    }
    if (idx == total || cell(idx) > best.grid[idx]) return;
  }
  best.valid = true;
  best.grid.resize(total);
  for (int idx = 0; idx < total; ++idx) best.grid[idx] = cell(idx);
  best.alpha.assign(alpha_.begin(), alpha_.end());
  best.beta = best.alpha;
  best.gamma = best.alpha;
}

void branch_sts(StsSearchState& state, Candidate& best, int depth) {
  std::vector<int> symbols = state.longest_unlabelled_symbols();
  if (symbols.empty()) {
    throw error(errc::no_unlabelled_cycle, "no unlabelled cycle at branch");
  }
  int parent_curt = state.curt();
  for (int s : symbols) {
    StsSearchState::Checkpoint cp = state.checkpoint();
    state.label_inverse_pair(s);
    state.extend();
    if (parent_curt > 0 && state.curt() < 2 * parent_curt) {
      ++state.stats().doubling_violations;
    }
    if (state.curt() < state.order()) {
      branch_sts(state, best, depth + 1);
    } else {
      if (depth > state.stats().max_depth) state.stats().max_depth = depth;
      state.offer_leaf(best);
    }
    state.rollback(cp);
  }
}

namespace {

struct StsPairResult {
  Candidate best;
  size_t best_pair = 0;
  SearchStats stats;
};

StsPairResult run_sts_pairs(const LatinSquare& S,
                            const std::vector<std::pair<int, int>>& pairs,
                            size_t lo, size_t hi) {
  StsPairResult out;
  for (size_t k = lo; k < hi; ++k) {
    StsSearchState state(S, pairs[k].first, pairs[k].second);
    Candidate local;
    if (state.curt() < state.order()) {
      branch_sts(state, local);
    } else {
      state.offer_leaf(local);  // order 3: the singular seed labels everything
    }
    out.stats.merge(state.stats());
    if (!out.best.valid || local.grid < out.best.grid) {
      out.best = std::move(local);
      out.best_pair = k;
    }
  }
  return out;
}

}  // namespace

StsCanonicalResult canonical_sts(const LatinSquare& S, int jobs) {
  if (!is_steiner_square(S)) {
    throw error(errc::not_steiner, "not a Steiner quasigroup");
  }
  int n = S.order();
  if (n == 1) {
    return {PartialPermutation::identity(1), S, SearchStats{}};
  }
  CycleTable table(S);
  const auto& pairs = table.r_max();
  size_t total = pairs.size();
  size_t threads = std::min<size_t>(std::max(jobs, 1), total);

  std::vector<StsPairResult> results(threads);
  if (threads <= 1) {
    results[0] = run_sts_pairs(S, pairs, 0, total);
  } else {
    std::vector<std::thread> pool;
    for (size_t t = 0; t < threads; ++t) {
      size_t lo = total * t / threads;
      size_t hi = total * (t + 1) / threads;
      pool.emplace_back(
          [&, t, lo, hi] { results[t] = run_sts_pairs(S, pairs, lo, hi); });
    }
    for (auto& th : pool) th.join();
  }

  StsPairResult merged;
  SearchStats stats;
  for (auto& r : results) {
    stats.merge(r.stats);
    if (!r.best.valid) continue;
    if (!merged.best.valid || r.best.grid < merged.best.grid ||
        (r.best.grid == merged.best.grid && r.best_pair < merged.best_pair)) {
      merged.best = std::move(r.best);
      merged.best_pair = r.best_pair;
    }
  }
  PartialPermutation alpha = PartialPermutation::empty(n);
  for (int x = 1; x <= n; ++x) alpha.image[x] = merged.best.alpha[x];
  alpha.size = n;
  return {alpha, LatinSquare::validate(n, merged.best.grid), stats};
}

LatinSquare canonical_sts_lifted(const LatinSquare& S, int jobs) {
  if (!is_steiner_square(S)) {
    throw error(errc::not_steiner, "not a Steiner quasigroup");
  }
  CanonicalResult res = canonical_labelling(S, jobs);
  return apply_isomorphism(S, res.labelling.gamma);
}

BlockSet parse_blocks(const std::string& text) {
  std::istringstream in(text);
  int n = 0;
  if (!(in >> n)) {
    throw error(errc::parse_error, "missing point count", 1);
  }
  std::vector<std::array<int, 3>> blocks;
  int a, b, c;
  while (in >> a >> b >> c) blocks.push_back({a, b, c});
  if (!in.eof()) {
    throw error(errc::parse_error, "bad block line");
  }
  return sts_validate(n, std::move(blocks));
}

std::string serialize_blocks(const BlockSet& B) {
  std::string out = std::to_string(B.n) + "\n";
  for (const auto& b : B.blocks) {
    out += std::to_string(b[0]) + " " + std::to_string(b[1]) + " " +
           std::to_string(b[2]) + "\n";
  }
  return out;
}

}  // namespace lsq
