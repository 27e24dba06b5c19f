#include "lsq/canonical.hpp"

#include <algorithm>
#include <thread>

namespace lsq {

void SearchState::init_rows(int i, int j) {
  // Per-symbol cycle lengths of sigma_{i,j}, computed by walking each cycle.
  for (int s = 1; s <= n_; ++s) {
    if (ell_[s] != 0) continue;
    int len = 0;
    int t = s;
    do {
      ++len;
      t = L_.at(j, L_.column_of(i, t));
    } while (t != s);
    t = s;
    do {
      ell_[t] = len;
      t = L_.at(j, L_.column_of(i, t));
    } while (t != s);
  }
}

SearchState::SearchState(const LatinSquare& L, int i, int j)
    : L_(L),
      n_(L.order()),
      i_(i),
      j_(j),
      ell_(n_ + 1, 0),
      alpha_(n_ + 1, n_ + 1),
      beta_(n_ + 1, n_ + 1),
      gamma_(n_ + 1, n_ + 1),
      alpha_inv_(n_ + 1, 0),
      beta_inv_(n_ + 1, 0),
      gamma_inv_(n_ + 1, 0),
      t_alpha_(n_ + 1, 0),
      t_beta_(n_ + 1, 0),
      t_gamma_(n_ + 1, 0) {
  if (i == j) {
    throw error(errc::equal_rows, "search needs two distinct rows", i, j);
  }
  init_rows(i, j);
  CycleStructure gamma;
  std::vector<char> counted(n_ + 1, 0);
  for (int s = 1; s <= n_; ++s) {
    if (counted[s]) continue;
    int t = s;
    do {
      counted[t] = 1;
      t = L_.at(j, L_.column_of(i, t));
    } while (t != s);
    gamma.lengths.push_back(ell_[s]);
  }
  std::sort(gamma.lengths.begin(), gamma.lengths.end(), std::greater<int>());
  p_ = init_p(gamma, 0, n_);
}

SearchState::SearchState(const LatinSquare& L, int i, int j, UnipotentSeed)
    : SearchState(L, i, j) {
  // Rebuild P ignoring the 2-cycle (1, i o j) on the unipotent elements,
  // with offset 2 for its pre-assigned columns.
  int k = L_.at(i_, j_);
  if (L_.at(i_, i_) != 1 || L_.at(j_, j_) != 1 || ell_[1] != 2) {
    throw error(errc::not_unipotent, "square is not unipotent symmetric");
  }
  CycleStructure gamma;
  std::vector<char> counted(n_ + 1, 0);
  counted[1] = 1;
  counted[k] = 1;  // the seed 2-cycle is excluded
  for (int s = 1; s <= n_; ++s) {
    if (counted[s]) continue;
    int t = s;
    do {
      counted[t] = 1;
      t = L_.at(j_, L_.column_of(i_, t));
    } while (t != s);
    gamma.lengths.push_back(ell_[s]);
  }
  std::sort(gamma.lengths.begin(), gamma.lengths.end(), std::greater<int>());
  p_ = init_p(gamma, 2, n_);

  // alpha(i)=beta(i)=1, alpha(j)=beta(j)=2, gamma(1)=1, gamma(i o j)=2.
  alpha_[i_] = 1;
  alpha_inv_[1] = i_;
  beta_[i_] = 1;
  beta_inv_[1] = i_;
  gamma_[1] = 1;
  gamma_inv_[1] = 1;
  alpha_[j_] = 2;
  alpha_inv_[2] = j_;
  beta_[j_] = 2;
  beta_inv_[2] = j_;
  gamma_[k] = 2;
  gamma_inv_[2] = k;
  t_alpha_[1] = i_;
  t_beta_[1] = i_;
  t_gamma_[1] = 1;
  t_alpha_[2] = j_;
  t_beta_[2] = j_;
  t_gamma_[2] = k;
  curt_ = 2;
  c1_ = i_;
}

PartialLabelling SearchState::labelling() const {
  PartialLabelling phi = PartialLabelling::empty(n_);
  for (int x = 1; x <= n_; ++x) {
    phi.alpha.image[x] = alpha_[x];
    phi.beta.image[x] = beta_[x];
    phi.gamma.image[x] = gamma_[x];
  }
  phi.alpha.size = phi.beta.size = phi.gamma.size = curt_;
  return phi;
}

void SearchState::label_row_cycle(int s) {
  int star_v = star();
  if (gamma_[s] != star_v) {
    throw error(errc::already_labelled, "symbol already labelled", s);
  }
  int len = ell_[s];
  int lambda = p_[len];
  int sig = s;
  for (int k = 0; k < len; ++k) {
    ++curt_;
    gamma_[sig] = lambda;
    gamma_inv_[lambda] = sig;
    t_gamma_[curt_] = sig;
    int b = L_.column_of(i_, sig);
    beta_[b] = lambda;
    beta_inv_[lambda] = b;
    t_beta_[curt_] = b;
    if (lambda == 1) c1_ = b;
    int a = L_.row_of(c1_, sig);
    alpha_[a] = lambda;
    alpha_inv_[lambda] = a;
    t_alpha_[curt_] = a;
    sig = L_.at(j_, b);
    ++lambda;
  }
  p_[len] += len;
  cycle_log_.push_back(len);
}

void SearchState::extend() {
  if (curt_ == 0) return;
  int star_v = star();
  int x = 1;
  int y = curt_ - ell_[t_gamma_[curt_]] + 1;
  // curt_ grows as cycles are labelled, which extends the scan.
  while (y <= curt_) {
    int s = L_.at(t_alpha_[x], t_beta_[y]);
    if (gamma_[s] == star_v) label_row_cycle(s);
    auto [nx, ny] = succ(x, y);
    x = nx;
    y = ny;
  }
}

std::vector<int> SearchState::longest_unlabelled_symbols() const {
  int star_v = n_ + 1;
  int best = 0;
  std::vector<int> out;
  for (int s = 1; s <= n_; ++s) {
    if (gamma_[s] != star_v) continue;
    if (ell_[s] > best) {
      best = ell_[s];
      out.clear();
    }
    if (ell_[s] == best) out.push_back(s);
  }
  return out;
}

void SearchState::rollback(const Checkpoint& cp) {
  while (cycle_log_.size() > cp.cycles) {
    p_[cycle_log_.back()] -= cycle_log_.back();
    cycle_log_.pop_back();
  }
  int star_v = star();
  while (curt_ > cp.curt) {
    int a = t_alpha_[curt_];
    int b = t_beta_[curt_];
    int g = t_gamma_[curt_];
    alpha_inv_[alpha_[a]] = 0;
    beta_inv_[beta_[b]] = 0;
    gamma_inv_[gamma_[g]] = 0;
    alpha_[a] = star_v;
    beta_[b] = star_v;
    gamma_[g] = star_v;
    --curt_;
  }
  c1_ = cp.c1;
}

void SearchState::offer_leaf(Candidate& best) {
  ++stats_.leaves;
  auto cell = [&](int idx) {
    int r = idx / n_ + 1;
    int c = idx % n_ + 1;
    return gamma_[L_.at(alpha_inv_[r], beta_inv_[c])];
  };
  int total = n_ * n_;
  if (best.valid) {
    // Streaming comparison; most candidates diverge early.
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
  best.beta.assign(beta_.begin(), beta_.end());
  best.gamma.assign(gamma_.begin(), gamma_.end());
}

void branch(SearchState& state, Candidate& best, int depth) {
  std::vector<int> symbols = state.longest_unlabelled_symbols();
  if (symbols.empty()) {
    // Cannot occur: an incomplete labelling always leaves an unlabelled
    // cycle in r_i u r_j.
    throw error(errc::no_unlabelled_cycle, "no unlabelled cycle at branch");
  }
  int parent_curt = state.curt();
  for (int s : symbols) {
    SearchState::Checkpoint cp = state.checkpoint();
    state.label_row_cycle(s);
    state.extend();
    if (parent_curt > 0 && state.curt() < 2 * parent_curt) {
      ++state.stats().doubling_violations;
    }
    if (state.curt() < state.order()) {
      branch(state, best, depth + 1);
    } else {
      if (depth > state.stats().max_depth) state.stats().max_depth = depth;
      state.offer_leaf(best);
    }
    state.rollback(cp);
  }
}

namespace {

struct PairSearchResult {
  Candidate best;
  size_t best_pair = 0;  // index into r_max of the pair that produced best
  SearchStats stats;
};

// Runs the search over r_max[lo..hi) and keeps the minimum, breaking grid
// ties toward the earlier pair so results do not depend on thread count.
PairSearchResult run_pairs(const LatinSquare& L,
                           const std::vector<std::pair<int, int>>& pairs,
                           size_t lo, size_t hi) {
  PairSearchResult out;
  for (size_t k = lo; k < hi; ++k) {
    SearchState state(L, pairs[k].first, pairs[k].second);
    Candidate local;
    branch(state, local);
    out.stats.merge(state.stats());
    if (!out.best.valid || local.grid < out.best.grid) {
      out.best = std::move(local);
      out.best_pair = k;
    }
  }
  return out;
}

CanonicalResult result_from_candidate(const LatinSquare& L,
                                      const Candidate& best,
                                      const SearchStats& stats) {
  int n = L.order();
  PartialLabelling phi = PartialLabelling::empty(n);
  for (int x = 1; x <= n; ++x) {
    phi.alpha.image[x] = best.alpha[x];
    phi.beta.image[x] = best.beta[x];
    phi.gamma.image[x] = best.gamma[x];
  }
  phi.alpha.size = phi.beta.size = phi.gamma.size = n;
  return {phi, LatinSquare::validate(n, best.grid), stats};
}

}  // namespace

CanonicalResult canonical_labelling(const LatinSquare& L, int jobs) {
  int n = L.order();
  if (n == 1) {
    return {PartialLabelling::identity(1), L, SearchStats{}};
  }
  CycleTable table(L);
  const auto& pairs = table.r_max();
  size_t total = pairs.size();
  size_t threads = std::min<size_t>(std::max(jobs, 1), total);

  std::vector<PairSearchResult> results(threads);
  if (threads <= 1) {
    results[0] = run_pairs(L, pairs, 0, total);
  } else {
    std::vector<std::thread> pool;
    for (size_t t = 0; t < threads; ++t) {
      size_t lo = total * t / threads;
      size_t hi = total * (t + 1) / threads;
      pool.emplace_back([&, t, lo, hi] {
        results[t] = run_pairs(L, pairs, lo, hi);
      });
    }
    for (auto& th : pool) th.join();
  }

  PairSearchResult merged;
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
  return result_from_candidate(L, merged.best, stats);
}

bool same_isotopism_class(const LatinSquare& a, const LatinSquare& b) {
  if (a.order() != b.order()) {
    throw error(errc::order_mismatch, "orders differ", a.order(), b.order());
  }
  return canonical_labelling(a).form == canonical_labelling(b).form;
}

LatinSquare species_canonical(const LatinSquare& L, int jobs) {
  bool have = false;
  LatinSquare best = L;
  for (const Conjugation& sigma : kConjugations) {
    LatinSquare form = canonical_labelling(conjugate(L, sigma), jobs).form;
    if (!have || lex_compare(form, best) == Ordering::LT) {
      best = form;
      have = true;
    }
  }
  return best;
}

}  // namespace lsq
