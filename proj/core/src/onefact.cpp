#include "lsq/onefact.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

namespace lsq {

FactorSet of_validate(int v,
                      std::vector<std::vector<std::pair<int, int>>> factors) {
  if (v < 2 || v % 2 != 0) {
    throw error(errc::not_one_factorisation, "vertex count must be even >= 2",
                v);
  }
  if (static_cast<int>(factors.size()) != v - 1) {
    throw error(errc::not_one_factorisation,
                "expected " + std::to_string(v - 1) + " factors, got " +
                    std::to_string(factors.size()));
  }
  std::vector<char> edge_seen(static_cast<size_t>(v) * v, 0);
  for (auto& factor : factors) {
    if (static_cast<int>(factor.size()) != v / 2) {
      throw error(errc::not_one_factorisation,
                  "factor is not a perfect matching");
    }
    std::vector<char> vertex_seen(v + 1, 0);
    for (auto& e : factor) {
      if (e.first > e.second) std::swap(e.first, e.second);
      auto [a, b] = e;
      if (a < 1 || b > v || a == b) {
        throw error(errc::not_one_factorisation, "bad edge", a, b);
      }
      if (vertex_seen[a] || vertex_seen[b]) {
        throw error(errc::not_one_factorisation, "vertex repeated in factor",
                    vertex_seen[a] ? a : b);
      }
      vertex_seen[a] = vertex_seen[b] = 1;
      char& seen = edge_seen[(a - 1) * v + (b - 1)];
      if (seen) {
        throw error(errc::not_one_factorisation, "edge in two factors", a, b);
      }
      seen = 1;
    }
    std::sort(factor.begin(), factor.end());
  }
  // v/2 disjoint edges cover all v vertices, and (v-1)(v/2) distinct edges
  // are all of K_v, so coverage is already complete here.
  return FactorSet{v, std::move(factors)};
}

LatinSquare of_to_unipotent(const FactorSet& F) {
  int v = F.v;
  std::vector<int> grid(static_cast<size_t>(v) * v, 0);
  for (int x = 1; x <= v; ++x) grid[(x - 1) * v + (x - 1)] = 1;
  for (size_t k = 0; k < F.factors.size(); ++k) {
    for (auto [a, b] : F.factors[k]) {
      grid[(a - 1) * v + (b - 1)] = static_cast<int>(k) + 2;
      grid[(b - 1) * v + (a - 1)] = static_cast<int>(k) + 2;
    }
  }
  return LatinSquare::validate(v, std::move(grid));
}

bool is_unipotent_symmetric(const LatinSquare& L) {
  int n = L.order();
  if (n % 2 != 0) return false;
  for (int x = 1; x <= n; ++x) {
    if (L.at(x, x) != 1) return false;
    for (int y = x + 1; y <= n; ++y) {
      if (L.at(x, y) != L.at(y, x) || L.at(x, y) == 1) return false;
    }
  }
  return true;
}

FactorSet unipotent_to_of(const LatinSquare& U) {
  int v = U.order();
  for (int x = 1; x <= v; ++x) {
    if (U.at(x, x) != 1) {
      throw error(errc::not_unipotent, "diagonal entry is not 1", x);
    }
  }
  for (int x = 1; x <= v; ++x) {
    for (int y = x + 1; y <= v; ++y) {
      if (U.at(x, y) != U.at(y, x)) {
        throw error(errc::not_symmetric, "square is not symmetric", x, y);
      }
    }
  }
  std::vector<std::vector<std::pair<int, int>>> factors(
      std::max(v - 1, 0));
  for (int x = 1; x <= v; ++x) {
    for (int y = x + 1; y <= v; ++y) {
      factors[U.at(x, y) - 2].emplace_back(x, y);
    }
  }
  return of_validate(v, std::move(factors));
}

namespace {

void require_unipotent(const LatinSquare& U) {
  int v = U.order();
  if (v % 2 != 0) {
    throw error(errc::not_unipotent, "unipotent symmetric squares have even order",
                v);
  }
  for (int x = 1; x <= v; ++x) {
    if (U.at(x, x) != 1) {
      throw error(errc::not_unipotent, "diagonal entry is not 1", x);
    }
    for (int y = x + 1; y <= v; ++y) {
      if (U.at(x, y) != U.at(y, x)) {
        throw error(errc::not_symmetric, "square is not symmetric", x, y);
      }
    }
  }
}

struct OfPairResult {
  Candidate best;
  size_t best_pair = 0;
  SearchStats stats;
};

OfPairResult run_of_pairs(const LatinSquare& U,
                          const std::vector<std::pair<int, int>>& pairs,
                          size_t lo, size_t hi) {
  OfPairResult out;
  for (size_t k = lo; k < hi; ++k) {
    SearchState state(U, pairs[k].first, pairs[k].second,
                      SearchState::UnipotentSeed{});
    Candidate local;
    if (state.curt() < state.order()) {
      branch(state, local);
    } else {
      state.offer_leaf(local);  // order 2: the seed labels everything
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

OfCanonicalResult canonical_1f(const LatinSquare& U, int jobs) {
  require_unipotent(U);
  int v = U.order();
  CycleTable table(U);
  const auto& pairs = table.r_max();
  size_t total = pairs.size();
  size_t threads = std::min<size_t>(std::max(jobs, 1), total);

  std::vector<OfPairResult> results(threads);
  if (threads <= 1) {
    results[0] = run_of_pairs(U, pairs, 0, total);
  } else {
    std::vector<std::thread> pool;
    for (size_t t = 0; t < threads; ++t) {
      size_t lo = total * t / threads;
      size_t hi = total * (t + 1) / threads;
      pool.emplace_back(
          [&, t, lo, hi] { results[t] = run_of_pairs(U, pairs, lo, hi); });
    }
    for (auto& th : pool) th.join();
  }

  OfPairResult merged;
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
  PartialPermutation alpha = PartialPermutation::empty(v);
  PartialPermutation gamma = PartialPermutation::empty(v);
  for (int x = 1; x <= v; ++x) {
    alpha.image[x] = merged.best.alpha[x];
    gamma.image[x] = merged.best.gamma[x];
  }
  alpha.size = gamma.size = v;
  return {alpha, gamma, LatinSquare::validate(v, merged.best.grid), stats};
}

bool same_class_1f(const FactorSet& F1, const FactorSet& F2) {
  if (F1.v != F2.v) {
    throw error(errc::order_mismatch, "vertex counts differ", F1.v, F2.v);
  }
  return canonical_1f(of_to_unipotent(F1)).form ==
         canonical_1f(of_to_unipotent(F2)).form;
}

LatinSquare of_to_idempotent(const FactorSet& F, int root) {
  int v = F.v;
  if (root < 1 || root > v) {
    throw error(errc::invalid_argument, "root is not a vertex", root);
  }
  // Vertex v takes the removed root's label so points stay 1..v-1.
  auto point = [&](int x) { return x == v ? root : x; };
  int n = v - 1;
  std::vector<int> grid(static_cast<size_t>(n) * n, 0);
  for (int x = 1; x <= n; ++x) grid[(x - 1) * n + (x - 1)] = x;
  for (const auto& factor : F.factors) {
    int partner = 0;
    for (auto [a, b] : factor) {
      if (a == root || b == root) partner = point(a == root ? b : a);
    }
    for (auto [a, b] : factor) {
      if (a == root || b == root) continue;
      int pa = point(a);
      int pb = point(b);
      grid[(pa - 1) * n + (pb - 1)] = partner;
      grid[(pb - 1) * n + (pa - 1)] = partner;
    }
  }
  return LatinSquare::validate(n, std::move(grid));
}

LatinSquare rooted_1f_canonical(const FactorSet& F, int root, int jobs) {
  LatinSquare L = of_to_idempotent(F, root);
  CanonicalResult res = canonical_labelling(L, jobs);
  return apply_isomorphism(L, res.labelling.gamma);
}

FactorSet parse_factors(const std::string& text) {
  std::istringstream in(text);
  int v = 0;
  if (!(in >> v)) {
    throw error(errc::parse_error, "missing vertex count", 1);
  }
  std::vector<std::vector<std::pair<int, int>>> factors;
  std::string tok;
  std::string line;
  std::getline(in, line);  // rest of the first line
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::vector<std::pair<int, int>> factor;
    while (ls >> tok) {
      size_t dash = tok.find('-');
      if (dash == std::string::npos) {
        throw error(errc::parse_error, "expected a-b pair, got '" + tok + "'",
                    lineno);
      }
      try {
        factor.emplace_back(std::stoi(tok.substr(0, dash)),
                            std::stoi(tok.substr(dash + 1)));
      } catch (const std::exception&) {
        throw error(errc::parse_error, "bad edge '" + tok + "'", lineno);
      }
    }
    if (!factor.empty()) factors.push_back(std::move(factor));
  }
  return of_validate(v, std::move(factors));
}

std::string serialize_factors(const FactorSet& F) {
  std::string out = std::to_string(F.v) + "\n";
  for (const auto& factor : F.factors) {
    for (size_t k = 0; k < factor.size(); ++k) {
      if (k) out += ' ';
      out += std::to_string(factor[k].first) + "-" +
             std::to_string(factor[k].second);
    }
    out += '\n';
  }
  return out;
}

}  // namespace lsq
