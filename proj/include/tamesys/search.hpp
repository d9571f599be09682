#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "tamesys/bounds.hpp"
#include "tamesys/matrix.hpp"
#include "tamesys/matroid.hpp"
#include "tamesys/point.hpp"

namespace tamesys {

/// A subset of F_q^n, held both as a membership bitmap over point codes and
/// as the sorted code list. Materialized sets are limited to q^n <= 2^24.
class PointSet {
  public:
    PointSet(FieldPtr f, std::size_t n);
    static PointSet full(FieldPtr f, std::size_t n);
    static PointSet of_codes(FieldPtr f, std::size_t n, const std::vector<Code>& codes);

    const FieldPtr& field() const { return f_; }
    std::size_t n() const { return n_; }
    Code space() const { return space_; }
    std::size_t size() const { return codes_.size(); }
    bool contains(Code c) const { return member_[c]; }
    const std::vector<Code>& codes() const { return codes_; }

    void add(Code c);

  private:
    FieldPtr f_;
    std::size_t n_;
    Code space_;
    std::vector<bool> member_;
    std::vector<Code> codes_;
};

/// Stream the solutions of A x^T = 0 whose points all lie in S, each exactly
/// once: assignments of the k - m non-pivot coordinates range over S and the
/// pivot coordinates are solved for and membership-filtered. Return false
/// from the callback to stop early.
void enumerate_solutions(const Mat& A, const PointSet& S,
                         const std::function<bool(const Tuple&)>& yield);

struct RankHistogram {
    std::map<std::size_t, std::uint64_t> counts;  // affine rank -> number of solutions
    std::uint64_t total = 0;
};

RankHistogram arank_histogram(const Mat& A, const PointSet& S);

enum class SearchMode { Exact, Greedy, Random };
enum class Forbid { Generic, Shape, Nontrivial };

struct FreeSetResult {
    PointSet set;
    bool exhaustive;  // true when a completed branch-and-bound certifies maximality
};

/// Largest subset of F_q^n containing no forbidden solution. Exact mode runs
/// a branch and bound over point subsets and is limited to q^n <= 100 points;
/// greedy/random return the best heuristic set found.
FreeSetResult max_solution_free_set(const Mat& A, std::size_t n, SearchMode mode, Forbid forbid,
                                    std::uint64_t seed = 0, int trials = 50);

struct AffineSubspace {
    Code base;
    std::vector<Code> directions;  // linearly independent
};

/// An affine d-dimensional subspace fully contained in S, or nullopt after
/// exhaustive search. Limited to q^n <= 2^14 and d <= 3.
std::optional<AffineSubspace> find_affine_subspace(const PointSet& S, std::size_t d);

/// Polynomial over F_q in two blocks of n variables, exponents at most q-1.
struct PolyXY {
    struct Mono {
        std::vector<std::uint8_t> ex, ey;  // length n each
        Elem coeff;
    };
    std::vector<Mono> monos;
};

struct ClpReport {
    std::size_t rank = 0;
    std::uint64_t bound = 0;  // 2 * monomial_count(q, n, floor(d/2))
    bool ok = false;          // rank <= bound
    std::size_t monomials = 0;
};

/// Rank of the q^n x q^n evaluation matrix M_{ab} = f(a, b) of a polynomial
/// of total degree <= d, against the bound 2 m_{q,n,d/2}. A seeded random
/// polynomial is generated when f is null. Limited to q^n <= 512.
ClpReport clp_rank_check(const FieldPtr& f, std::size_t n, std::uint64_t d,
                         const PolyXY* poly = nullptr, std::uint64_t seed = 1);

struct ReplayTrial {
    std::size_t rank_full = 0;       // rank of the blurred solution matrix
    std::size_t rank_section = 0;    // rank of its restriction to the section
    std::uint64_t support = 0;       // nonzero entries of the section matrix
    std::uint64_t max_line = 0;      // max nonzeros in any row or column
    bool ok_rank = false;            // rank_full <= bound
    bool ok_blur = false;            // support <= rank_section * max_line^2
};

struct ReplayReport {
    std::size_t n = 0, r = 0, t = 0;
    std::size_t set_size = 0, section_size = 0, kernel_dim = 0;
    ColSet I, J;
    std::uint64_t solutions = 0, rank_r = 0, grouped = 0, sectioned = 0;
    std::uint64_t pair_count = 0;  // |R|: index pairs covered by the section
    std::uint64_t bound = 0;       // 2 m_{q, rn, floor(rd)}
    double expected_support = 0.0, mean_support = 0.0, sigma = 0.0;
    bool ok_claim_rank = false;    // every trial satisfied rank <= bound
    bool ok_support = false;       // mean support within 3 sigma of expectation
    bool ok_blur = false;          // every trial satisfied the support/rank bound
    std::vector<ReplayTrial> trials;
};

/// Finite replay of the random-section rank argument for a tame balanced
/// m x (2m+1) system: build the space of functions on S killing all low
/// monomials, extend a random function on its coordinate section, blur the
/// solution indicator into an |S|^r x |S|^r matrix and compare its exact
/// rank with the low-degree bound; also track the support statistics of the
/// sectioned matrix. Limited to |S|^r <= 2048.
ReplayReport proof_replay(const Mat& A, const PointSet& S, std::size_t r, int trials,
                          std::uint64_t seed);

}  // namespace tamesys
