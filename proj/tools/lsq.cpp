#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "lsq/canonical.hpp"
#include "lsq/cycles.hpp"
#include "lsq/latin.hpp"
#include "lsq/onefact.hpp"
#include "lsq/oracle.hpp"
#include "lsq/sampler.hpp"
#include "lsq/steiner.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) {
    throw lsq::error(lsq::errc::parse_error, "cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void print_permutation(const char* name, const lsq::PartialPermutation& pi) {
  std::cout << name << ":";
  for (int x = 1; x <= pi.n; ++x) std::cout << ' ' << pi.image[x];
  std::cout << '\n';
}

int run(int argc, char** argv) {
  CLI::App app{"Canonical forms and sampling for Latin squares, Steiner "
               "triple systems and one-factorisations"};
  app.require_subcommand(1);
  int jobs = 1;
  app.add_option("--jobs", jobs, "worker threads for stats/probe")
      ->check(CLI::PositiveNumber);

  std::string file_a, file_b;
  bool with_labelling = false;
  bool lifted = false;
  int order = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  int count = 1;
  int root = 0;

  auto* canon = app.add_subcommand("canon", "canonical form of a square");
  canon->add_option("file", file_a, "square file or -")->required();
  canon->add_flag("--labelling", with_labelling,
                  "also print the canonical isotopism");

  auto* isotopic =
      app.add_subcommand("isotopic", "exit 0 if same isotopism class, else 1");
  isotopic->add_option("a", file_a)->required();
  isotopic->add_option("b", file_b)->required();

  auto* species =
      app.add_subcommand("species", "canonical form over all six conjugates");
  species->add_option("file", file_a)->required();

  auto* sts_canon =
      app.add_subcommand("sts-canon", "canonical block set of a triple system");
  sts_canon->add_option("file", file_a)->required();
  sts_canon->add_flag("--lifted", lifted,
                      "use the general-search representative instead");

  auto* sts_iso = app.add_subcommand("sts-isomorphic",
                                     "exit 0 if isomorphic systems, else 1");
  sts_iso->add_option("a", file_a)->required();
  sts_iso->add_option("b", file_b)->required();

  auto* of_canon = app.add_subcommand(
      "of-canon", "canonical factor list of a one-factorisation");
  of_canon->add_option("file", file_a)->required();
  of_canon->add_option("--rooted", root,
                       "print the rooted representative for this root vertex");

  auto* of_iso = app.add_subcommand(
      "of-isomorphic", "exit 0 if isomorphic factorisations, else 1");
  of_iso->add_option("a", file_a)->required();
  of_iso->add_option("b", file_b)->required();

  auto* sample = app.add_subcommand("sample", "random squares (Markov chain)");
  sample->add_option("--order", order)->required()->check(CLI::Range(2, 1000));
  sample->add_option("--seed", seed)->required();
  sample->add_option("--count", count)->check(CLI::PositiveNumber);

  auto* stats =
      app.add_subcommand("stats", "Hamiltonian row-cycle count statistics");
  stats->add_option("--order", order)->required()->check(CLI::Range(2, 1000));
  stats->add_option("--samples", samples)->required();
  stats->add_option("--seed", seed)->required();

  auto* cycles = app.add_subcommand("cycles", "cycle-structure summary");
  cycles->add_option("file", file_a)->required();

  auto* subsquares =
      app.add_subcommand("subsquares", "proper Latin subsquares (closures)");
  subsquares->add_option("file", file_a)->required();

  auto* probe = app.add_subcommand(
      "probe", "longest row cycle vs largest proper subsquare, sampled");
  probe->add_option("--order", order)->required()->check(CLI::Range(2, 60));
  probe->add_option("--samples", count)->required()->check(CLI::PositiveNumber);
  probe->add_option("--seed", seed)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }

  if (canon->parsed()) {
    lsq::CanonicalResult res =
        lsq::canonical_labelling(lsq::parse(read_input(file_a)), jobs);
    std::cout << lsq::serialize(res.form);
    if (with_labelling) {
      print_permutation("alpha", res.labelling.alpha);
      print_permutation("beta", res.labelling.beta);
      print_permutation("gamma", res.labelling.gamma);
    }
    return 0;
  }
  if (isotopic->parsed()) {
    lsq::LatinSquare a = lsq::parse(read_input(file_a));
    lsq::LatinSquare b = lsq::parse(read_input(file_b));
    return lsq::same_isotopism_class(a, b) ? 0 : 1;
  }
  if (species->parsed()) {
    std::cout << lsq::serialize(
        lsq::species_canonical(lsq::parse(read_input(file_a)), jobs));
    return 0;
  }
  if (sts_canon->parsed()) {
    lsq::BlockSet B = lsq::parse_blocks(read_input(file_a));
    lsq::LatinSquare S = lsq::sts_to_quasigroup(B);
    lsq::LatinSquare form =
        lifted ? lsq::canonical_sts_lifted(S, jobs) : lsq::canonical_sts(S, jobs).form;
    std::cout << lsq::serialize_blocks(lsq::quasigroup_to_sts(form));
    return 0;
  }
  if (sts_iso->parsed()) {
    lsq::LatinSquare a =
        lsq::sts_to_quasigroup(lsq::parse_blocks(read_input(file_a)));
    lsq::LatinSquare b =
        lsq::sts_to_quasigroup(lsq::parse_blocks(read_input(file_b)));
    if (a.order() != b.order()) return 1;
    return lsq::canonical_sts(a, jobs).form == lsq::canonical_sts(b, jobs).form
               ? 0
               : 1;
  }
  if (of_canon->parsed()) {
    lsq::FactorSet F = lsq::parse_factors(read_input(file_a));
    if (root > 0) {
      std::cout << lsq::serialize(lsq::rooted_1f_canonical(F, root, jobs));
    } else {
      lsq::OfCanonicalResult res =
          lsq::canonical_1f(lsq::of_to_unipotent(F), jobs);
      std::cout << lsq::serialize_factors(lsq::unipotent_to_of(res.form));
    }
    return 0;
  }
  if (of_iso->parsed()) {
    lsq::FactorSet a = lsq::parse_factors(read_input(file_a));
    lsq::FactorSet b = lsq::parse_factors(read_input(file_b));
    if (a.v != b.v) return 1;
    return lsq::same_class_1f(a, b) ? 0 : 1;
  }
  if (sample->parsed()) {
    lsq::JmChain chain(order, seed);
    for (int k = 0; k < count; ++k) {
      if (k) std::cout << '\n';
      std::cout << lsq::serialize(chain.next());
    }
    return 0;
  }
  if (stats->parsed()) {
    lsq::HStats h = lsq::h_statistics(order, samples, seed, jobs);
    std::printf("Order Min Max Mode Mean StdDev\n");
    std::printf("%5d %3d %3d %4d %5.2f %6.2f\n", h.order, h.min, h.max,
                h.mode, h.mean, h.stddev);
    std::printf("order=%d\nsamples=%llu\nmin=%d\nmax=%d\nmode=%d\n",
                h.order, static_cast<unsigned long long>(h.samples), h.min,
                h.max, h.mode);
    std::printf("mean=%.6f\nstddev=%.6f\n", h.mean, h.stddev);
    return 0;
  }
  if (cycles->parsed()) {
    lsq::LatinSquare L = lsq::parse(read_input(file_a));
    lsq::CycleTable table(L);
    std::cout << "gamma_max:";
    for (int len : table.gamma_max().lengths) std::cout << ' ' << len;
    std::cout << "\nr_max:";
    for (auto [i, j] : table.r_max()) {
      std::cout << " (" << i << "," << j << ")";
    }
    std::cout << "\nhamiltonian_count: " << lsq::hamiltonian_count(L) << '\n';
    return 0;
  }
  if (subsquares->parsed()) {
    lsq::SubsquareReport report =
        lsq::enumerate_subsquares(lsq::parse(read_input(file_a)));
    std::cout << "largest_proper=" << report.largest_proper << '\n';
    for (const lsq::Subsquare& sq : report.subsquares) {
      std::cout << "order " << sq.order << " rows";
      for (int r : sq.rows) std::cout << ' ' << r;
      std::cout << " cols";
      for (int c : sq.columns) std::cout << ' ' << c;
      std::cout << " symbols";
      for (int s : sq.symbols) std::cout << ' ' << s;
      std::cout << '\n';
    }
    return 0;
  }
  if (probe->parsed()) {
    lsq::ProbeReport report =
        lsq::longest_cycle_vs_subsquare(order, count, seed, jobs);
    std::cout << "longest_cycle largest_proper\n";
    for (const lsq::ProbeRow& row : report.rows) {
      std::cout << row.longest_cycle << ' ' << row.largest_proper << '\n';
    }
    std::cout << "fraction_exceeding=" << report.fraction_exceeding << '\n';
    return 0;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const lsq::error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
