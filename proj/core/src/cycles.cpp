#include "lsq/cycles.hpp"

#include <algorithm>

namespace lsq {

bool lex_less(const CycleStructure& a, const CycleStructure& b) {
  return std::lexicographical_compare(a.lengths.begin(), a.lengths.end(),
                                      b.lengths.begin(), b.lengths.end());
}

std::vector<int> sigma(const LatinSquare& L, int i, int j) {
  if (i == j) {
    throw error(errc::equal_rows, "sigma requires two distinct rows", i, j);
  }
  int n = L.order();
  std::vector<int> image(n + 1, 0);
  for (int c = 1; c <= n; ++c) {
    image[L.at(i, c)] = L.at(j, c);
  }
  return image;
}

namespace {

// Cycle lengths of sigma_{i,j}, and optionally per-symbol lengths into ell.
CycleStructure decompose(const LatinSquare& L, int i, int j, int* ell) {
  int n = L.order();
  CycleStructure gamma;
  std::vector<char> seen(n + 1, 0);
  for (int s = 1; s <= n; ++s) {
    if (seen[s]) continue;
    int len = 0;
    int t = s;
    do {
      seen[t] = 1;
      ++len;
      t = L.at(j, L.column_of(i, t));
    } while (t != s);
    gamma.lengths.push_back(len);
    if (ell != nullptr) {
      t = s;
      do {
        ell[t - 1] = len;
        t = L.at(j, L.column_of(i, t));
      } while (t != s);
    }
  }
  std::sort(gamma.lengths.begin(), gamma.lengths.end(), std::greater<int>());
  return gamma;
}

}  // namespace

CycleStructure cycle_structure(const LatinSquare& L, int i, int j) {
  if (i == j) {
    throw error(errc::equal_rows, "cycle_structure requires distinct rows", i,
                j);
  }
  return decompose(L, i, j, nullptr);
}

RowCycle row_cycle_of(const LatinSquare& L, int i, int j, int s) {
  if (i == j) {
    throw error(errc::equal_rows, "row_cycle_of requires distinct rows", i, j);
  }
  RowCycle cycle;
  int t = s;
  do {
    int b = L.column_of(i, t);
    cycle.symbols.push_back(t);
    cycle.columns.push_back(b);
    t = L.at(j, b);
  } while (t != s);
  cycle.length = static_cast<int>(cycle.symbols.size());
  return cycle;
}

int CycleTable::pair_index(int i, int j) const {
  if (i > j) std::swap(i, j);
  // Index of (i, j), i < j, in lexicographic order over the triangle.
  return (i - 1) * n_ - (i * (i - 1)) / 2 + (j - i - 1);
}

CycleTable::CycleTable(const LatinSquare& L) : n_(L.order()) {
  int pairs = n_ * (n_ - 1) / 2;
  ell_.assign(static_cast<size_t>(pairs) * n_, 0);
  gammas_.resize(pairs);
  for (int i = 1; i <= n_; ++i) {
    for (int j = i + 1; j <= n_; ++j) {
      int idx = pair_index(i, j);
      gammas_[idx] = decompose(L, i, j, &ell_[static_cast<size_t>(idx) * n_]);
      if (lex_less(gamma_max_, gammas_[idx])) gamma_max_ = gammas_[idx];
    }
  }
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j) {
      if (i != j && gammas_[pair_index(i, j)] == gamma_max_) {
        r_max_.emplace_back(i, j);
      }
    }
  }
}

int longest_cycle(const LatinSquare& L) {
  int n = L.order();
  if (n < 2) {
    throw error(errc::order_too_small, "longest_cycle requires n >= 2", n);
  }
  int best = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      CycleStructure gamma = cycle_structure(L, i, j);
      best = std::max(best, gamma.lengths.front());
    }
  }
  return best;
}

int hamiltonian_count(const LatinSquare& L) {
  int n = L.order();
  if (n < 2) {
    throw error(errc::order_too_small, "hamiltonian_count requires n >= 2", n);
  }
  int count = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      // Walk the cycle containing the symbol in column 1 of row i; it is
      // Hamiltonian iff that single cycle covers all n symbols.
      int s = L.at(i, 1);
      int len = 0;
      int t = s;
      do {
        ++len;
        t = L.at(j, L.column_of(i, t));
      } while (t != s);
      if (len == n) ++count;
    }
  }
  return count;
}

std::vector<int> init_p(const CycleStructure& gamma, int offset, int n) {
  std::vector<int> p(n + 1, 1 + offset);
  for (int k = 1; k <= n; ++k) {
    for (int len : gamma.lengths) {
      if (len > k) p[k] += len;
    }
  }
  return p;
}

}  // namespace lsq
