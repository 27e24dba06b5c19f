#include "lsq/sampler.hpp"

#include <algorithm>

#include "lsq/cycles.hpp"
#include <cmath>
#include <thread>

namespace lsq {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 finalizer over the (seed, stream) pair
  std::uint64_t z = seed + (stream + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

void slot_insert(std::array<int, 2>& slot, int value) {
  if (slot[0] == 0) {
    slot[0] = value;
  } else {
    slot[1] = value;
  }
}

void slot_remove(std::array<int, 2>& slot, int value) {
  if (slot[0] == value) {
    slot[0] = slot[1];
  }
  slot[1] = 0;
}

}  // namespace

IncidenceCube::IncidenceCube(const LatinSquare& L) : n_(L.order()) {
  cube_.assign(static_cast<size_t>(n_) * n_ * n_, 0);
  rc_.assign(static_cast<size_t>(n_) * n_, {0, 0});
  rs_.assign(static_cast<size_t>(n_) * n_, {0, 0});
  cs_.assign(static_cast<size_t>(n_) * n_, {0, 0});
  for (int x = 1; x <= n_; ++x) {
    for (int y = 1; y <= n_; ++y) {
      add_one(x, y, L.at(x, y));
    }
  }
}

void IncidenceCube::add_one(int x, int y, int z) {
  signed char& v = cube_[index(x, y, z)];
  ++v;
  if (v == 1) {
    slot_insert(rc_[(x - 1) * n_ + (y - 1)], z);
    slot_insert(rs_[(x - 1) * n_ + (z - 1)], y);
    slot_insert(cs_[(y - 1) * n_ + (z - 1)], x);
  }
}

void IncidenceCube::sub_one(int x, int y, int z) {
  signed char& v = cube_[index(x, y, z)];
  --v;
  if (v == 0) {
    slot_remove(rc_[(x - 1) * n_ + (y - 1)], z);
    slot_remove(rs_[(x - 1) * n_ + (z - 1)], y);
    slot_remove(cs_[(y - 1) * n_ + (z - 1)], x);
  }
}

void IncidenceCube::step(Rng& rng) {
  int x, y, z, xp, yp, zp;
  if (!improper_) {
    x = 1 + static_cast<int>(rng.below(n_));
    y = 1 + static_cast<int>(rng.below(n_));
    zp = rc_[(x - 1) * n_ + (y - 1)][0];
    z = 1 + static_cast<int>(rng.below(n_ - 1));
    if (z >= zp) ++z;
    yp = rs_[(x - 1) * n_ + (z - 1)][0];
    xp = cs_[(y - 1) * n_ + (z - 1)][0];
  } else {
    x = improper_cell_[0];
    y = improper_cell_[1];
    z = improper_cell_[2];
    // each line through the -1 holds exactly two 1-cells
    zp = rc_[(x - 1) * n_ + (y - 1)][rng.below(2)];
    yp = rs_[(x - 1) * n_ + (z - 1)][rng.below(2)];
    xp = cs_[(y - 1) * n_ + (z - 1)][rng.below(2)];
  }
  add_one(x, y, z);
  add_one(x, yp, zp);
  add_one(xp, y, zp);
  add_one(xp, yp, z);
  sub_one(x, y, zp);
  sub_one(x, yp, z);
  sub_one(xp, y, z);
  sub_one(xp, yp, zp);
  if (cube_[index(xp, yp, zp)] < 0) {
    improper_ = true;
    improper_cell_ = {xp, yp, zp};
  } else {
    improper_ = false;
  }
}

LatinSquare IncidenceCube::to_square() const {
  if (improper_) {
    throw error(errc::invalid_argument,
                "improper cube does not encode a square");
  }
  std::vector<int> grid(static_cast<size_t>(n_) * n_, 0);
  for (int x = 1; x <= n_; ++x) {
    for (int y = 1; y <= n_; ++y) {
      grid[(x - 1) * n_ + (y - 1)] = rc_[(x - 1) * n_ + (y - 1)][0];
    }
  }
  return LatinSquare::validate(n_, std::move(grid));
}

bool IncidenceCube::lines_sum_to_one() const {
  for (int a = 1; a <= n_; ++a) {
    for (int b = 1; b <= n_; ++b) {
      int s_rc = 0, s_rs = 0, s_cs = 0;
      for (int t = 1; t <= n_; ++t) {
        s_rc += at(a, b, t);
        s_rs += at(a, t, b);
        s_cs += at(t, a, b);
      }
      if (s_rc != 1 || s_rs != 1 || s_cs != 1) return false;
    }
  }
  return true;
}

namespace {

LatinSquare cyclic_square(int n) {
  std::vector<int> grid(static_cast<size_t>(n) * n, 0);
  for (int x = 1; x <= n; ++x) {
    for (int y = 1; y <= n; ++y) {
      grid[(x - 1) * n + (y - 1)] = (x - 1 + y - 1) % n + 1;
    }
  }
  return LatinSquare::validate(n, std::move(grid));
}

IncidenceCube make_chain_cube(int n) {
  if (n < 2) {
    throw error(errc::order_too_small, "sampling requires n >= 2", n);
  }
  return IncidenceCube(cyclic_square(n));
}

}  // namespace

JmChain::JmChain(int n, std::uint64_t seed, JmOptions options)
    : cube_(make_chain_cube(n)), rng_(seed) {
  std::uint64_t nn = static_cast<std::uint64_t>(n);
  std::uint64_t burnin = options.burnin ? options.burnin : nn * nn * nn;
  spacing_ = options.spacing ? options.spacing : nn * nn;
  for (std::uint64_t k = 0; k < burnin; ++k) cube_.step(rng_);
}

LatinSquare JmChain::next() {
  for (std::uint64_t k = 0; k < spacing_; ++k) cube_.step(rng_);
  while (!cube_.proper()) cube_.step(rng_);
  return cube_.to_square();
}

LatinSquare jm_sample(int n, std::uint64_t seed) {
  return JmChain(n, seed).next();
}

namespace {

constexpr std::uint64_t kChunk = 1000;

void run_chunks(int n, std::uint64_t samples, std::uint64_t seed,
                std::uint64_t chunk_lo, std::uint64_t chunk_hi,
                std::vector<std::uint64_t>& histogram) {
  for (std::uint64_t c = chunk_lo; c < chunk_hi; ++c) {
    std::uint64_t count = std::min(kChunk, samples - c * kChunk);
    JmChain chain(n, derive_seed(seed, c));
    for (std::uint64_t k = 0; k < count; ++k) {
      ++histogram[hamiltonian_count(chain.next())];
    }
  }
}

}  // namespace

HStats h_statistics(int n, std::uint64_t samples, std::uint64_t seed,
                    int jobs) {
  if (samples < 1) {
    throw error(errc::invalid_argument, "need at least one sample");
  }
  if (n < 2) {
    throw error(errc::order_too_small, "sampling requires n >= 2", n);
  }
  size_t hmax = static_cast<size_t>(n) * (n - 1) / 2;
  std::uint64_t chunks = (samples + kChunk - 1) / kChunk;
  size_t threads = static_cast<size_t>(
      std::min<std::uint64_t>(std::max(jobs, 1), chunks));

  std::vector<std::vector<std::uint64_t>> partial(
      threads, std::vector<std::uint64_t>(hmax + 1, 0));
  if (threads <= 1) {
    run_chunks(n, samples, seed, 0, chunks, partial[0]);
  } else {
    std::vector<std::thread> pool;
    for (size_t t = 0; t < threads; ++t) {
      std::uint64_t lo = chunks * t / threads;
      std::uint64_t hi = chunks * (t + 1) / threads;
      pool.emplace_back([&, t, lo, hi] {
        run_chunks(n, samples, seed, lo, hi, partial[t]);
      });
    }
    for (auto& th : pool) th.join();
  }

  HStats out;
  out.order = n;
  out.samples = samples;
  out.histogram.assign(hmax + 1, 0);
  for (const auto& h : partial) {
    for (size_t k = 0; k <= hmax; ++k) out.histogram[k] += h[k];
  }

  out.min = -1;
  std::uint64_t best_count = 0;
  double sum = 0.0;
  for (size_t h = 0; h <= hmax; ++h) {
    std::uint64_t c = out.histogram[h];
    if (c == 0) continue;
    if (out.min < 0) out.min = static_cast<int>(h);
    out.max = static_cast<int>(h);
    if (c > best_count) {
      best_count = c;
      out.mode = static_cast<int>(h);
    }
    sum += static_cast<double>(h) * static_cast<double>(c);
  }
  out.mean = sum / static_cast<double>(samples);
  double var = 0.0;
  for (size_t h = 0; h <= hmax; ++h) {
    if (out.histogram[h] == 0) continue;
    double d = static_cast<double>(h) - out.mean;
    var += d * d * static_cast<double>(out.histogram[h]);
  }
  out.stddev = std::sqrt(var / static_cast<double>(samples));
  return out;
}

PartialPermutation random_permutation(int n, Rng& rng) {
  PartialPermutation pi = PartialPermutation::identity(n);
  for (int k = n; k >= 2; --k) {
    int m = 1 + static_cast<int>(rng.below(k));
    std::swap(pi.image[k], pi.image[m]);
  }
  return pi;
}

PartialLabelling random_isotopism(int n, Rng& rng) {
  PartialLabelling phi = PartialLabelling::empty(n);
  phi.alpha = random_permutation(n, rng);
  phi.beta = random_permutation(n, rng);
  phi.gamma = random_permutation(n, rng);
  return phi;
}

}  // namespace lsq
