#include "lsq/latin.hpp"

#include <algorithm>
#include <sstream>

namespace lsq {

LatinSquare LatinSquare::validate(int n, std::vector<int> grid) {
  if (n <= 0 || static_cast<int>(grid.size()) != n * n) {
    throw error(errc::invalid_argument, "grid is not an n x n matrix");
  }
  // Range check first, row-major, so out_of_range wins over duplicates.
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= n; ++c) {
      int v = grid[(r - 1) * n + (c - 1)];
      if (v < 1 || v > n) {
        throw error(errc::out_of_range,
                    "entry out of range 1..n at (" + std::to_string(r) + "," +
                        std::to_string(c) + ")",
                    r, c);
      }
    }
  }
  LatinSquare L;
  L.n_ = n;
  L.grid_ = std::move(grid);
  L.row_pos_.assign(n * n, 0);
  L.col_pos_.assign(n * n, 0);
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= n; ++c) {
      int s = L.grid_[(r - 1) * n + (c - 1)];
      int& pos = L.row_pos_[(r - 1) * n + (s - 1)];
      if (pos != 0) {
        throw error(errc::duplicate_in_row,
                    "symbol " + std::to_string(s) + " repeated in row " +
                        std::to_string(r),
                    r, s);
      }
      pos = c;
    }
  }
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= n; ++c) {
      int s = L.grid_[(r - 1) * n + (c - 1)];
      int& pos = L.col_pos_[(c - 1) * n + (s - 1)];
      if (pos != 0) {
        throw error(errc::duplicate_in_column,
                    "symbol " + std::to_string(s) + " repeated in column " +
                        std::to_string(c),
                    c, s);
      }
      pos = r;
    }
  }
  return L;
}

LatinSquare LatinSquare::validate(const std::vector<std::vector<int>>& grid) {
  int n = static_cast<int>(grid.size());
  std::vector<int> flat;
  flat.reserve(n * n);
  for (const auto& row : grid) {
    if (static_cast<int>(row.size()) != n) {
      throw error(errc::invalid_argument, "grid is not square");
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return validate(n, std::move(flat));
}

PartialPermutation PartialPermutation::empty(int n) {
  PartialPermutation p;
  p.n = n;
  p.image.assign(n + 1, n + 1);
  p.size = 0;
  return p;
}

PartialPermutation PartialPermutation::identity(int n) {
  PartialPermutation p;
  p.n = n;
  p.image.resize(n + 1);
  for (int x = 0; x <= n; ++x) p.image[x] = x;
  p.image[0] = 0;
  p.size = n;
  return p;
}

PartialPermutation PartialPermutation::from_image(int n,
                                                  std::vector<int> image) {
  if (static_cast<int>(image.size()) == n) {
    image.insert(image.begin(), 0);
  }
  if (static_cast<int>(image.size()) != n + 1) {
    throw error(errc::invalid_argument, "bad image length");
  }
  PartialPermutation p;
  p.n = n;
  p.image = std::move(image);
  p.size = 0;
  std::vector<char> seen(n + 1, 0);
  for (int x = 1; x <= n; ++x) {
    int v = p.image[x];
    if (v == n + 1) continue;
    if (v < 1 || v > n || seen[v]) {
      throw error(errc::invalid_argument, "image is not injective into 1..n");
    }
    seen[v] = 1;
    ++p.size;
  }
  return p;
}

PartialPermutation PartialPermutation::inverse() const {
  if (!complete()) {
    throw error(errc::invalid_argument, "cannot invert a partial permutation");
  }
  PartialPermutation inv = empty(n);
  for (int x = 1; x <= n; ++x) inv.image[image[x]] = x;
  inv.size = n;
  return inv;
}

PartialLabelling PartialLabelling::empty(int n) {
  return {PartialPermutation::empty(n), PartialPermutation::empty(n),
          PartialPermutation::empty(n)};
}

PartialLabelling PartialLabelling::identity(int n) {
  return {PartialPermutation::identity(n), PartialPermutation::identity(n),
          PartialPermutation::identity(n)};
}

PartialArray apply_labelling(const LatinSquare& L,
                             const PartialLabelling& phi) {
  if (phi.alpha.size != phi.beta.size || phi.alpha.size != phi.gamma.size) {
    throw error(errc::size_mismatch, "labelling sizes differ");
  }
  int n = L.order();
  int star = n + 1;
  int k = phi.alpha.size;
  // Labelled rows/columns in label order. Labels form a k-subset of [n].
  std::vector<std::pair<int, int>> rows, cols;  // (label, element)
  rows.reserve(k);
  cols.reserve(k);
  for (int x = 1; x <= n; ++x) {
    if (phi.alpha.image[x] != star) rows.emplace_back(phi.alpha.image[x], x);
    if (phi.beta.image[x] != star) cols.emplace_back(phi.beta.image[x], x);
  }
  std::sort(rows.begin(), rows.end());
  std::sort(cols.begin(), cols.end());
  PartialArray A;
  A.k = k;
  A.star = star;
  A.cells.resize(static_cast<size_t>(k) * k);
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < k; ++c) {
      A.cells[static_cast<size_t>(r) * k + c] =
          phi.gamma.image[L.at(rows[r].second, cols[c].second)];
    }
  }
  return A;
}

LatinSquare apply_isotopism(const LatinSquare& L, const PartialLabelling& phi) {
  if (!phi.complete()) {
    throw error(errc::size_mismatch, "labelling is not an isotopism");
  }
  int n = L.order();
  std::vector<int> grid(static_cast<size_t>(n) * n);
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= n; ++c) {
      grid[(phi.alpha.image[r] - 1) * n + (phi.beta.image[c] - 1)] =
          phi.gamma.image[L.at(r, c)];
    }
  }
  return LatinSquare::validate(n, std::move(grid));
}

LatinSquare apply_isomorphism(const LatinSquare& L,
                              const PartialPermutation& pi) {
  return apply_isotopism(L, PartialLabelling{pi, pi, pi});
}

namespace {

Ordering compare_words(const std::vector<int>& a, const std::vector<int>& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return Ordering::LT;
    if (a[i] > b[i]) return Ordering::GT;
  }
  return Ordering::EQ;
}

}  // namespace

Ordering lex_compare(const PartialArray& a, const PartialArray& b) {
  if (a.k != b.k) {
    throw error(errc::dimension_mismatch, "arrays have different dimensions");
  }
  return compare_words(a.cells, b.cells);
}

Ordering lex_compare(const LatinSquare& a, const LatinSquare& b) {
  if (a.order() != b.order()) {
    throw error(errc::dimension_mismatch, "squares have different orders");
  }
  return compare_words(a.cells(), b.cells());
}

LatinSquare conjugate(const LatinSquare& L, const Conjugation& sigma) {
  int n = L.order();
  std::vector<int> grid(static_cast<size_t>(n) * n);
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= n; ++c) {
      int t[3] = {r, c, L.at(r, c)};
      int u0 = t[sigma[0]];
      int u1 = t[sigma[1]];
      int u2 = t[sigma[2]];
      grid[(u0 - 1) * n + (u1 - 1)] = u2;
    }
  }
  return LatinSquare::validate(n, std::move(grid));
}

LatinSquare parse(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::vector<int>> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    std::vector<int> row;
    std::string tok;
    while (ls >> tok) {
      size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        throw error(errc::parse_error,
                    "line " + std::to_string(lineno) + ": bad token '" + tok +
                        "'",
                    lineno);
      }
      if (used != tok.size()) {
        throw error(errc::parse_error,
                    "line " + std::to_string(lineno) + ": bad token '" + tok +
                        "'",
                    lineno);
      }
      row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    throw error(errc::parse_error, "empty input", 1);
  }
  return LatinSquare::validate(rows);
}

std::string serialize(const LatinSquare& L) {
  std::string out;
  int n = L.order();
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= n; ++c) {
      if (c > 1) out += ' ';
      out += std::to_string(L.at(r, c));
    }
    out += '\n';
  }
  return out;
}

namespace {

int compact_digit_value(char ch) {
  if (ch >= '1' && ch <= '9') return ch - '0';
  if (ch >= 'A' && ch <= 'Z') return ch - 'A' + 10;
  return -1;
}

char compact_digit(int v) {
  return v <= 9 ? static_cast<char>('0' + v) : static_cast<char>('A' + v - 10);
}

}  // namespace

LatinSquare parse_compact(const std::string& text) {
  std::string s = text;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  size_t colon = s.find(':');
  if (colon == std::string::npos) {
    throw error(errc::parse_error, "compact form needs 'n:digits'", 1);
  }
  int n = 0;
  try {
    n = std::stoi(s.substr(0, colon));
  } catch (const std::exception&) {
    throw error(errc::parse_error, "bad order in compact form", 1);
  }
  if (n < 1 || n > 35) {
    throw error(errc::parse_error, "compact form supports 1 <= n <= 35", 1);
  }
  std::string digits = s.substr(colon + 1);
  if (static_cast<int>(digits.size()) != n * n) {
    throw error(errc::parse_error, "compact form has wrong digit count", 1);
  }
  std::vector<int> grid(static_cast<size_t>(n) * n);
  for (size_t i = 0; i < digits.size(); ++i) {
    int v = compact_digit_value(digits[i]);
    if (v < 0) {
      throw error(errc::parse_error, "bad compact digit", 1);
    }
    grid[i] = v;
  }
  return LatinSquare::validate(n, std::move(grid));
}

std::string serialize_compact(const LatinSquare& L) {
  int n = L.order();
  if (n > 35) {
    throw error(errc::order_too_large, "compact form supports n <= 35", n);
  }
  std::string out = std::to_string(n) + ":";
  for (int v : L.cells()) out += compact_digit(v);
  return out;
}

}  // namespace lsq
