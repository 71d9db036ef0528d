#pragma once

// Concrete label-size budgets. The constants hiding in each O(.) term live in
// calibration/budgets.json; they were fixed once from measurements and are
// not tuned per run.

#include <cstdint>
#include <string>

namespace treelabel {

struct Budgets {
  double exact_C = 0;          // exact: B^2/2 + C B max(1, ceil(log B))
  double nca_C = 0;            // NCA sublabel: C B max(1, ceil(log B))
  double approx_c = 0;         // approx: fixed-field overhead
  double caterpillar_c = 0;    // caterpillar: 2B - ceil(log B) + c ceil(log ceil(log B)) + c'
  double caterpillar_c_prime = 0;
  double path_c = 0;           // path: ((k-1)/k) ceil(log 2n) + ceil(log k) + 2 ceil(log log k) + c

  // Throws ParseError on a missing file or key.
  static Budgets load(const std::string& path);
  static Budgets load_default();  // the file compiled into the build

  // B is ceil(log2 n) throughout.
  double exact(unsigned B) const;
  double nca(unsigned B) const;
  double approx(unsigned B, double eps) const;
  double caterpillar(unsigned B) const;
  // n bounds the path length (sum of weights).
  double path(std::size_t k, std::uint64_t n) const;
};

// B^2/2 + B/2: the telescoping sum B + (B-1) + ... + 1 + 0.
double exact_list_budget(unsigned B);
// Worst-case |S| at stretch parameter eps: one 0 per proper light ancestor
// (at most B) and one 1 per threshold below 2^B.
double approx_s_budget(unsigned B, double eps);
// Lower bound for paths of length n on k nodes: ((k-1)/k) log2 n + log2 k.
double path_floor(std::size_t k, std::uint64_t n);
// Lower bound for caterpillars on n nodes: 2 floor(log n) - floor(log floor(log n)) - 4.
double caterpillar_floor(std::uint64_t n);

}  // namespace treelabel
