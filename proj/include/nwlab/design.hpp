#pragma once

// Combinatorial designs: families I_1..I_m of r-subsets of {0..d-1} with all
// pairwise intersections of size at most s. Three generators are provided
// (greedy-lexicographic, the (d, ad, 2a^2 d) parameterization on top of it,
// and the polynomial construction over GF(p)); every generator's output
// passes verify_design.

#include <cstddef>
#include <string>
#include <vector>

#include "nwlab/exact.hpp"

namespace nwlab {

struct Design {
  std::size_t d = 0;  // universe size
  std::size_t r = 0;  // set size
  std::size_t s = 0;  // max pairwise overlap
  std::vector<std::vector<std::size_t>> sets;  // indices ascending within each set
};

struct DesignCheck {
  enum class Fail { none, params, set, overlap };
  bool valid = true;
  Fail fail = Fail::none;
  // 1-based indices of the first offender: for Fail::set, `j` is the bad set;
  // for Fail::overlap, (j, k) is the first violating pair in lexicographic
  // order.
  std::size_t j = 0;
  std::size_t k = 0;
  std::string detail;
};

// Never throws: malformed input yields an invalid report.
DesignCheck verify_design(const Design& design);

struct GreedyOutcome {
  Design design;
  std::size_t requested = 0;
  bool complete() const { return design.sets.size() >= requested; }
};

// Walks the r-subsets of {0..d-1} in lexicographic order, keeping each subset
// whose overlap with every kept subset is <= s, until m_target subsets are
// kept or the enumeration is exhausted. Subtrees whose partial overlap
// already exceeds s are skipped wholesale, which cannot change the kept
// sequence. Requires d > r > s.
GreedyOutcome gen_design_greedy(std::size_t d, std::size_t r, std::size_t s,
                                std::size_t m_target);

struct KmOutcome {
  Design design;
  BigInt size_floor;    // floor(2^(alpha^4 d / 5))
  bool rounded = false; // alpha*d or 2*alpha^2*d was not integral
  bool meets_floor() const { return BigInt(design.sets.size()) >= size_floor; }
};

// r = floor(alpha d), s = floor(2 alpha^2 d), target size floor(2^(alpha^4 d/5)),
// built greedily. alpha in (0,1); degenerate rounding (r <= s) throws
// std::domain_error.
KmOutcome gen_design_km(std::size_t d, const BigRat& alpha);

// Universe {0..p^2-1} read as GF(p) x GF(p) cells (i, v) -> i*p + v. One set
// per polynomial q of degree <= `degree`, I_q = {(i, q(i)) : i in GF(p)},
// enumerated by coefficient value (constant term least significant). Two
// distinct polynomials agree on at most `degree` points, so overlaps are
// bounded by `degree` exactly. Requires p prime, degree < p,
// m_target <= p^(degree+1).
Design design_from_polynomials(std::size_t p, std::size_t degree, std::size_t m_target);

}  // namespace nwlab
