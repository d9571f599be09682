// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Every tolerance and time budget is pinned here.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tamesys/bounds.hpp"
#include "tamesys/extend.hpp"
#include "tamesys/matroid.hpp"
#include "tamesys/rng.hpp"
#include "tamesys/search.hpp"
#include "tamesys/systems.hpp"
#include "oracles.hpp"

using namespace tamesys;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, double limit_seconds,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_seconds > 0 && seconds > limit_seconds) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("time limit exceeded");
    }
    if (!ok) ++failures;
    std::printf("[%s] %2d. %s (%.2f s%s)%s%s\n", ok ? "PASS" : "FAIL", number, name.c_str(),
                seconds, limit_seconds > 0 ? (" / " + std::to_string((int)limit_seconds) + " s").c_str() : "",
                detail.empty() ? "" : " - ", detail.c_str());
}

// the shared pool of random systems for criteria 1 and 2
struct Pool {
    std::vector<Mat> mats;
};

Pool make_pool() {
    Pool pool;
    Rng rng(20240601);
    std::uint32_t qs[3] = {2, 3, 5};
    FieldPtr fields[3] = {field_make(2), field_make(3), field_make(5)};
    while (pool.mats.size() < 500) {
        std::size_t qi = rng.below(3);
        std::size_t m = 1 + rng.below(3);  // m <= 3
        std::size_t k = m + rng.below(9 - m);  // k <= 8
        if (k < 1) k = 1;
        Mat a = oracles::random_matrix(rng, fields[qi], m, k);
        (void)qs;
        pool.mats.push_back(std::move(a));
    }
    return pool;
}

}  // namespace

int main() {
    Pool pool = make_pool();

    criterion(1, "matroid-union certificates match brute-force max and min on 500 systems", 5.0,
              [&](std::string& detail) {
                  for (const Mat& a : pool.mats) {
                      std::size_t k = a.cols();
                      std::uint64_t full = (std::uint64_t(1) << k) - 1;
                      ColSet ground;
                      for (std::size_t j = 0; j < k; ++j) ground.push_back(j);
                      UnionCertificate c = max_union_two_independent(a, ground);
                      std::size_t bmax = oracles::brute_union_max(a, full);
                      std::size_t bmin = oracles::brute_union_min(a, full);
                      if (c.value != bmax || c.value != bmin) {
                          detail = "certificate mismatch";
                          return false;
                      }
                      if (column_rank(a, c.I) != c.I.size() || column_rank(a, c.J) != c.J.size() ||
                          c.I.size() + c.J.size() != c.value) {
                          detail = "witness pair invalid";
                          return false;
                      }
                      if (c.value != k - c.U_min.size() + 2 * column_rank(a, c.U_min)) {
                          detail = "min side not tight";
                          return false;
                      }
                  }
                  return true;
              });

    criterion(2, "tameness via disjoint-bases agrees with the rank inequality on the same 500", 0,
              [&](std::string& detail) {
                  for (const Mat& a : pool.mats) {
                      if (a.rank() != a.rows()) continue;
                      if (is_tame(a).tame != oracles::brute_tame(a)) {
                          detail = "verdict mismatch";
                          return false;
                      }
                  }
                  auto f2 = field_make(2);
                  if (!is_tame(Mat::from_rows(f2, {{1, 1, 1, 1}})).tame) {
                      detail = "all-ones row over F2 must be tame";
                      return false;
                  }
                  auto f5 = field_make(5);
                  TamenessCertificate t =
                      is_tame(Mat::from_rows(f5, {{1, -2, 1, 0}, {0, 1, -2, 1}}));
                  if (t.tame || !t.violating.empty()) {
                      detail = "4-term progression system must fail with the empty set";
                      return false;
                  }
                  return true;
              });

    criterion(3, "no balanced row extends the F2 all-ones system; the block gadget does", 1.0,
              [&](std::string& detail) {
                  auto f2 = field_make(2);
                  for (std::uint32_t bits = 0; bits < 32; ++bits) {
                      Mat cand(f2, 2, 5);
                      for (std::size_t c = 0; c < 4; ++c) cand(0, c) = 1;
                      for (std::size_t c = 0; c < 5; ++c)
                          cand(1, c) = static_cast<Elem>(bits >> c & 1);
                      if (!is_row_balanced(cand) || cand.rank() != 2) continue;
                      if (oracles::brute_tame(cand)) {
                          detail = "found a tame single-row extension";
                          return false;
                      }
                  }
                  Mat gadget = extend_step(Mat::from_rows(f2, {{1, 1, 1, 1}}));
                  if (gadget.rows() != 4 || gadget.cols() != 9 || !is_row_balanced(gadget) ||
                      !is_tame(gadget).tame) {
                      detail = "gadget output not tame balanced 4x9";
                      return false;
                  }
                  return true;
              });

    criterion(4, "50 random tame systems normalize to m'x(2m'+1) with projecting witnesses", 0,
              [&](std::string& detail) {
                  Rng rng(77001);
                  std::uint32_t qs[3] = {2, 3, 5};
                  int done = 0;
                  while (done < 50) {
                      auto f = field_make(qs[rng.below(3)]);
                      std::size_t m = 1 + rng.below(2);
                      std::size_t k = 2 * m + 1 + rng.below(4);  // k <= 2m+4
                      std::optional<Mat> found;
                      try {
                          found = oracles::random_tame_balanced(rng, f, m, k, 20000);
                      } catch (...) {
                          continue;
                      }
                      Mat& a = *found;
                      NormalizeResult res = normalize_to_tame_square(a);
                      if (res.matrix.cols() != 2 * res.matrix.rows() + 1 ||
                          !is_row_balanced(res.matrix) || !is_tame(res.matrix).tame) {
                          detail = "normalized matrix not tame balanced square";
                          return false;
                      }
                      Tuple w = generic_witness_lowdim(res.matrix);
                      Tuple restricted;
                      restricted.field = f;
                      restricted.n = w.n;
                      restricted.points.assign(w.points.begin(),
                                               w.points.begin() + static_cast<std::ptrdiff_t>(k));
                      if (!classify_solution(a, restricted).is_generic) {
                          detail = "witness does not project to a generic solution";
                          return false;
                      }
                      ++done;
                  }
                  return true;
              });

    criterion(5, "disjoint equal-rank index sets exist for every low-rank solution, 50 systems", 0,
              [&](std::string& detail) {
                  Rng rng(88002);
                  std::uint32_t qs[2] = {3, 5};
                  int done = 0;
                  bool all_ok = true;
                  while (done < 50 && all_ok) {
                      std::uint32_t q = qs[rng.below(2)];
                      std::size_t m = 1 + rng.below(2);
                      std::size_t n = 1 + rng.below(2);
                      auto f = field_make(q);
                      std::optional<Mat> found;
                      try {
                          found = oracles::random_tame_balanced(rng, f, m, 2 * m + 1, 20000);
                      } catch (...) {
                          continue;
                      }
                      Mat& a = *found;
                      enumerate_solutions(a, PointSet::full(f, n), [&](const Tuple& x) {
                          std::size_t r = affine_rank(x);
                          if (r > m) return true;
                          auto [i1, i2] = disjoint_rank_sets(a, x);
                          bool ok = i1.size() == r && i2.size() == r;
                          for (std::size_t u : i1)
                              for (std::size_t v : i2) ok = ok && u != v;
                          Tuple ta, tb;
                          ta.field = tb.field = f;
                          ta.n = tb.n = x.n;
                          for (std::size_t j : i1) ta.points.push_back(x.points[j]);
                          for (std::size_t j : i2) tb.points.push_back(x.points[j]);
                          ok = ok && affine_rank(ta) == r && affine_rank(tb) == r;
                          if (!ok) {
                              detail = "returned sets failed verification";
                              all_ok = false;
                              return false;
                          }
                          return true;
                      });
                      ++done;
                  }
                  return all_ok;
              });

    criterion(6, "affine rank plus annihilator dimension equals k on 1000 random tuples", 0,
              [&](std::string& detail) {
                  Rng rng(99003);
                  std::uint32_t qs[4] = {2, 3, 4, 5};
                  for (int it = 0; it < 1000; ++it) {
                      std::uint32_t q = qs[rng.below(4)];
                      auto f = field_make(q == 4 ? 2 : q, q == 4 ? 2 : 1);
                      std::size_t n = rng.below(4), k = 1 + rng.below(6);
                      Tuple x = oracles::random_tuple(rng, f, n, k);
                      if (affine_rank(x) + ann_bal_basis(x).rows() != k) {
                          detail = "identity violated";
                          return false;
                      }
                  }
                  return true;
              });

    criterion(7, "bound calculators: growth constant, subspace-count bounds, complementation", 0,
              [&](std::string& detail) {
                  GrowthConstant c = c_constant(3, 1.0 / 3.0);
                  if (!(c.value <= 2.756)) {
                      detail = "growth constant above 2.756";
                      return false;
                  }
                  for (std::uint64_t q = 2; q <= 5; ++q)
                      for (std::uint64_t n = 0; n <= 12; ++n)
                          for (std::uint64_t d = 0; d <= n; ++d) {
                              BigUint v = gaussian_binomial(q, n, d);
                              BigUint lo = BigUint::pow(q, d * (n - d));
                              if (v < lo || v > lo * BigUint(4)) {
                                  detail = "subspace count left its bounds";
                                  return false;
                              }
                          }
                  for (std::uint32_t q = 2; q <= 5; ++q)
                      for (std::uint64_t n = 1; n <= 8; ++n)
                          for (std::uint64_t d = 0; d + 1 <= (q - 1) * n; ++d)
                              if (monomial_count(q, n, d) + monomial_count(q, n, (q - 1) * n - d - 1) !=
                                  BigUint::pow(q, n)) {
                                  detail = "complementation identity failed";
                                  return false;
                              }
                  return true;
              });

    criterion(8, "exact extremal generic-free sets: sizes 2 and 4 under the slice-rank bound", 60.0,
              [&](std::string& detail) {
                  auto f3 = field_make(3);
                  Mat A = Mat::from_rows(f3, {{1, 1, 1}});
                  FreeSetResult r1 = max_solution_free_set(A, 1, SearchMode::Exact, Forbid::Generic);
                  FreeSetResult r2 = max_solution_free_set(A, 2, SearchMode::Exact, Forbid::Generic);
                  if (r1.set.size() != 2 || !r1.exhaustive) {
                      detail = "dimension 1 optimum is not 2";
                      return false;
                  }
                  if (r2.set.size() != 4 || !r2.exhaustive) {
                      detail = "dimension 2 optimum is not 4";
                      return false;
                  }
                  if (!(BigUint(r1.set.size()) <= slice_rank_bound(3, 1, 3, 1).bound) ||
                      !(BigUint(r2.set.size()) <= slice_rank_bound(3, 1, 3, 2).bound)) {
                      detail = "optimum exceeds the theoretical bound";
                      return false;
                  }
                  return true;
              });

    criterion(9, "evaluation-matrix rank never exceeds the low-degree bound, 200 per cell", 120.0,
              [&](std::string& detail) {
                  auto f3 = field_make(3);
                  for (std::size_t n = 1; n <= 3; ++n)
                      for (std::uint64_t d = 1; d <= 4; ++d)
                          for (std::uint64_t s = 0; s < 200; ++s) {
                              ClpReport rep =
                                  clp_rank_check(f3, n, d, nullptr, s * 1000 + n * 10 + d);
                              if (!rep.ok) {
                                  detail = "rank exceeded the bound";
                                  return false;
                              }
                          }
                  return true;
              });

    criterion(10, "random-section replay: rank bound and support statistics over 20 trials", 0,
              [&](std::string& detail) {
                  auto f3 = field_make(3);
                  Mat A = Mat::from_rows(f3, {{1, 1, 1}});
                  for (std::size_t n = 1; n <= 3; ++n) {
                      ReplayReport rep = proof_replay(A, PointSet::full(f3, n), 1, 20, 5150 + n);
                      if (!rep.ok_claim_rank) {
                          detail = "rank bound violated at n=" + std::to_string(n);
                          return false;
                      }
                      if (!rep.ok_support) {
                          detail = "support count outside three sigma at n=" + std::to_string(n);
                          return false;
                      }
                      if (!rep.ok_blur) {
                          detail = "support/rank inequality violated at n=" + std::to_string(n);
                          return false;
                      }
                  }
                  return true;
              });

    if (failures == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", failures);
    return 1;
}
