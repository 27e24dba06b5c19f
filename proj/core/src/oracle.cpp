#include "lsq/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <thread>
#include <unordered_set>

#include "lsq/cycles.hpp"
#include "lsq/sampler.hpp"

namespace lsq {

bool brute_isotopic(const LatinSquare& L1, const LatinSquare& L2) {
  int n = L1.order();
  if (n != L2.order()) {
    throw error(errc::order_mismatch, "orders differ", n, L2.order());
  }
  if (n > 6) {
    throw error(errc::order_too_large, "brute force limited to n <= 6", n);
  }
  std::vector<int> alpha(n + 1), beta(n + 1), gamma(n + 1);
  std::iota(alpha.begin() + 1, alpha.end(), 1);
  do {
    std::iota(beta.begin() + 1, beta.end(), 1);
    do {
      // gamma is forced by row 1: gamma(L1[1][c]) = L2[alpha(1)][beta(c)]
      std::fill(gamma.begin(), gamma.end(), 0);
      bool ok = true;
      for (int c = 1; c <= n && ok; ++c) {
        int s = L1.at(1, c);
        int t = L2.at(alpha[1], beta[c]);
        if (gamma[s] == 0) {
          gamma[s] = t;
        } else if (gamma[s] != t) {
          ok = false;
        }
      }
      for (int r = 2; r <= n && ok; ++r) {
        for (int c = 1; c <= n && ok; ++c) {
          if (gamma[L1.at(r, c)] != L2.at(alpha[r], beta[c])) ok = false;
        }
      }
      if (ok) return true;
    } while (std::next_permutation(beta.begin() + 1, beta.end()));
  } while (std::next_permutation(alpha.begin() + 1, alpha.end()));
  return false;
}

namespace {

// Worklist closure of a seed under the Latin property. Returns false when
// the closure exceeds `limit` rows or columns (abandoned).
bool close_seed(const LatinSquare& L, std::vector<int>& rows,
                std::vector<int>& cols, std::vector<int>& syms, int limit) {
  int n = L.order();
  std::vector<char> in_r(n + 1, 0), in_c(n + 1, 0), in_s(n + 1, 0);
  // worklist entries: (kind 0=row,1=col,2=sym, value)
  std::vector<std::pair<int, int>> work;
  auto push_row = [&](int r) {
    if (!in_r[r]) {
      in_r[r] = 1;
      rows.push_back(r);
      work.emplace_back(0, r);
    }
  };
  auto push_col = [&](int c) {
    if (!in_c[c]) {
      in_c[c] = 1;
      cols.push_back(c);
      work.emplace_back(1, c);
    }
  };
  auto push_sym = [&](int s) {
    if (!in_s[s]) {
      in_s[s] = 1;
      syms.push_back(s);
      work.emplace_back(2, s);
    }
  };
  std::vector<int> seed_rows = rows, seed_cols = cols;
  rows.clear();
  cols.clear();
  for (int r : seed_rows) push_row(r);
  for (int c : seed_cols) push_col(c);
  while (!work.empty()) {
    if (static_cast<int>(rows.size()) > limit ||
        static_cast<int>(cols.size()) > limit) {
      return false;
    }
    auto [kind, v] = work.back();
    work.pop_back();
    if (kind == 0) {
      for (size_t k = 0; k < cols.size(); ++k) push_sym(L.at(v, cols[k]));
      for (size_t k = 0; k < syms.size(); ++k) push_col(L.column_of(v, syms[k]));
    } else if (kind == 1) {
      for (size_t k = 0; k < rows.size(); ++k) push_sym(L.at(rows[k], v));
      for (size_t k = 0; k < syms.size(); ++k) push_row(L.row_of(v, syms[k]));
    } else {
      for (size_t k = 0; k < rows.size(); ++k) push_col(L.column_of(rows[k], v));
      for (size_t k = 0; k < cols.size(); ++k) push_row(L.row_of(cols[k], v));
    }
  }
  return static_cast<int>(rows.size()) <= limit &&
         static_cast<int>(cols.size()) <= limit;
}

}  // namespace

SubsquareReport enumerate_subsquares(const LatinSquare& L) {
  int n = L.order();
  if (n < 2) {
    throw error(errc::order_too_small, "need n >= 2", n);
  }
  int limit = n / 2;  // no proper subsquare is larger
  SubsquareReport report;
  std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int c = 1; c <= n; ++c) {
        for (int d = c + 1; d <= n; ++d) {
          std::vector<int> rows = {i, j}, cols = {c, d}, syms;
          if (!close_seed(L, rows, cols, syms, limit)) continue;
          std::sort(rows.begin(), rows.end());
          std::sort(cols.begin(), cols.end());
          std::sort(syms.begin(), syms.end());
          if (!seen.emplace(rows, cols).second) continue;
          Subsquare sq;
          sq.order = static_cast<int>(rows.size());
          sq.rows = std::move(rows);
          sq.columns = std::move(cols);
          sq.symbols = std::move(syms);
          if (sq.order > report.largest_proper) {
            report.largest_proper = sq.order;
          }
          report.subsquares.push_back(std::move(sq));
        }
      }
    }
  }
  return report;
}

int largest_proper_exhaustive(const LatinSquare& L) {
  int n = L.order();
  if (n > 8) {
    throw error(errc::order_too_large, "exhaustive check limited to n <= 8",
                n);
  }
  if (n < 2) {
    throw error(errc::order_too_small, "need n >= 2", n);
  }
  int best = 1;
  for (unsigned rmask = 0; rmask < (1u << n); ++rmask) {
    int m = __builtin_popcount(rmask);
    if (m < 2 || m > n / 2 || m <= best) continue;
    std::vector<int> rows;
    for (int r = 1; r <= n; ++r) {
      if (rmask & (1u << (r - 1))) rows.push_back(r);
    }
    for (unsigned cmask = 0; cmask < (1u << n); ++cmask) {
      if (__builtin_popcount(cmask) != m) continue;
      // m x m block on m symbols: each row already has distinct symbols,
      // so distinct-count == m makes every row a permutation of the set.
      unsigned symbols = 0;
      for (int r : rows) {
        for (int c = 1; c <= n; ++c) {
          if (cmask & (1u << (c - 1))) {
            symbols |= 1u << (L.at(r, c) - 1);
          }
        }
      }
      if (__builtin_popcount(symbols) == m) {
        best = m;
        break;
      }
    }
  }
  return best;
}

bool brute_isomorphic_sts(const BlockSet& B1, const BlockSet& B2) {
  int n = B1.n;
  if (n != B2.n) {
    throw error(errc::order_mismatch, "point counts differ", n, B2.n);
  }
  if (n > 9) {
    throw error(errc::order_too_large, "brute force limited to n <= 9", n);
  }
  std::set<std::array<int, 3>> target(B2.blocks.begin(), B2.blocks.end());
  std::vector<int> phi(n + 1);
  std::iota(phi.begin() + 1, phi.end(), 1);
  do {
    bool ok = true;
    for (const auto& b : B1.blocks) {
      std::array<int, 3> image = {phi[b[0]], phi[b[1]], phi[b[2]]};
      std::sort(image.begin(), image.end());
      if (!target.count(image)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(phi.begin() + 1, phi.end()));
  return false;
}

namespace {

void fill_squares(int n, std::vector<int>& grid, std::vector<unsigned>& row_used,
                  std::vector<unsigned>& col_used, int cell,
                  std::vector<LatinSquare>& out) {
  if (cell == n * n) {
    out.push_back(LatinSquare::validate(n, grid));
    return;
  }
  int r = cell / n;
  int c = cell % n;
  for (int s = 1; s <= n; ++s) {
    unsigned bit = 1u << s;
    if ((row_used[r] & bit) || (col_used[c] & bit)) continue;
    grid[cell] = s;
    row_used[r] |= bit;
    col_used[c] |= bit;
    fill_squares(n, grid, row_used, col_used, cell + 1, out);
    row_used[r] &= ~bit;
    col_used[c] &= ~bit;
  }
  grid[cell] = 0;
}

}  // namespace

std::vector<LatinSquare> all_latin_squares(int n) {
  if (n > 4) {
    throw error(errc::order_too_large, "enumeration limited to n <= 4", n);
  }
  if (n < 1) {
    throw error(errc::order_too_small, "need n >= 1", n);
  }
  std::vector<LatinSquare> out;
  std::vector<int> grid(static_cast<size_t>(n) * n, 0);
  std::vector<unsigned> row_used(n, 0), col_used(n, 0);
  fill_squares(n, grid, row_used, col_used, 0, out);
  return out;
}

namespace {

struct OfEnumerator {
  int v;
  std::vector<std::pair<int, int>> edges;  // not touching vertex 1
  std::vector<unsigned> vertex_used;       // bitmask of factor indices 1..v-1
  std::vector<int> colour;                 // per edge
  std::vector<FactorSet>* out;

  void emit() {
    std::vector<std::vector<std::pair<int, int>>> factors(v - 1);
    for (int k = 2; k <= v; ++k) factors[k - 2].emplace_back(1, k);
    for (size_t e = 0; e < edges.size(); ++e) {
      factors[colour[e] - 1].push_back(edges[e]);
    }
    out->push_back(of_validate(v, std::move(factors)));
  }

  void rec(size_t e) {
    if (e == edges.size()) {
      emit();
      return;
    }
    auto [a, b] = edges[e];
    for (int k = 1; k <= v - 1; ++k) {
      // factor k already holds {1, k+1}
      if (a == k + 1 || b == k + 1) continue;
      unsigned bit = 1u << k;
      if ((vertex_used[a] & bit) || (vertex_used[b] & bit)) continue;
      colour[e] = k;
      vertex_used[a] |= bit;
      vertex_used[b] |= bit;
      rec(e + 1);
      vertex_used[a] &= ~bit;
      vertex_used[b] &= ~bit;
    }
  }
};

}  // namespace

std::vector<FactorSet> all_one_factorisations(int v) {
  if (v > 8) {
    throw error(errc::order_too_large, "enumeration limited to v <= 8", v);
  }
  if (v < 2 || v % 2 != 0) {
    throw error(errc::not_one_factorisation, "vertex count must be even >= 2",
                v);
  }
  std::vector<FactorSet> out;
  if (v == 2) {
    out.push_back(of_validate(2, {{{1, 2}}}));
    return out;
  }
  OfEnumerator en;
  en.v = v;
  for (int a = 2; a <= v; ++a) {
    for (int b = a + 1; b <= v; ++b) {
      en.edges.emplace_back(a, b);
    }
  }
  en.vertex_used.assign(v + 1, 0);
  en.colour.assign(en.edges.size(), 0);
  en.out = &out;
  en.rec(0);
  return out;
}

namespace {

// Factor-order-independent fingerprint of a relabelled factorisation.
std::string of_key(const FactorSet& F, const std::vector<int>& phi) {
  std::vector<std::vector<std::pair<int, int>>> factors;
  factors.reserve(F.factors.size());
  for (const auto& factor : F.factors) {
    std::vector<std::pair<int, int>> f;
    f.reserve(factor.size());
    for (auto [a, b] : factor) {
      int x = phi[a], y = phi[b];
      f.emplace_back(std::min(x, y), std::max(x, y));
    }
    std::sort(f.begin(), f.end());
    factors.push_back(std::move(f));
  }
  std::sort(factors.begin(), factors.end());
  std::string key;
  key.reserve(factors.size() * F.v);
  for (const auto& f : factors) {
    for (auto [a, b] : f) {
      key += static_cast<char>(a);
      key += static_cast<char>(b);
    }
  }
  return key;
}

std::vector<int> identity_map(int v) {
  std::vector<int> phi(v + 1);
  std::iota(phi.begin() + 1, phi.end(), 1);
  return phi;
}

}  // namespace

bool brute_isomorphic_1f(const FactorSet& F1, const FactorSet& F2) {
  int v = F1.v;
  if (v != F2.v) {
    throw error(errc::order_mismatch, "vertex counts differ", v, F2.v);
  }
  if (v > 8) {
    throw error(errc::order_too_large, "brute force limited to v <= 8", v);
  }
  std::string target = of_key(F2, identity_map(v));
  std::vector<int> phi = identity_map(v);
  do {
    if (of_key(F1, phi) == target) return true;
  } while (std::next_permutation(phi.begin() + 1, phi.end()));
  return false;
}

int count_1f_classes_brute(const std::vector<FactorSet>& all) {
  std::unordered_set<std::string> seen_orbits;
  int classes = 0;
  for (const FactorSet& F : all) {
    if (F.v > 8) {
      throw error(errc::order_too_large, "brute force limited to v <= 8",
                  F.v);
    }
    if (seen_orbits.count(of_key(F, identity_map(F.v)))) continue;
    ++classes;
    std::vector<int> phi = identity_map(F.v);
    do {
      seen_orbits.insert(of_key(F, phi));
    } while (std::next_permutation(phi.begin() + 1, phi.end()));
  }
  return classes;
}

ProbeReport longest_cycle_vs_subsquare(int n, int samples, std::uint64_t seed,
                                       int jobs) {
  if (n > 60) {
    throw error(errc::order_too_large, "closure probe limited to n <= 60", n);
  }
  if (samples < 1) {
    throw error(errc::invalid_argument, "need at least one sample");
  }
  // Fixed 100-sample chains keyed by chunk index, so the report does not
  // depend on jobs.
  const int chunk = 100;
  int chunks = (samples + chunk - 1) / chunk;
  int threads = std::min(std::max(jobs, 1), chunks);

  std::vector<std::vector<ProbeRow>> partial(chunks);
  auto run = [&](int lo, int hi) {
    for (int c = lo; c < hi; ++c) {
      int count = std::min(chunk, samples - c * chunk);
      JmChain chain(n, derive_seed(seed, static_cast<std::uint64_t>(c)));
      for (int k = 0; k < count; ++k) {
        LatinSquare L = chain.next();
        ProbeRow row;
        row.longest_cycle = longest_cycle(L);
        row.largest_proper = enumerate_subsquares(L).largest_proper;
        partial[c].push_back(row);
      }
    }
  };
  if (threads <= 1) {
    run(0, chunks);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
      int lo = chunks * t / threads;
      int hi = chunks * (t + 1) / threads;
      pool.emplace_back(run, lo, hi);
    }
    for (auto& th : pool) th.join();
  }

  ProbeReport report;
  report.order = n;
  int exceeding = 0;
  for (auto& rows : partial) {
    for (const ProbeRow& row : rows) {
      if (row.longest_cycle > row.largest_proper) ++exceeding;
      report.rows.push_back(row);
    }
  }
  report.fraction_exceeding =
      static_cast<double>(exceeding) / static_cast<double>(samples);
  return report;
}

}  // namespace lsq
