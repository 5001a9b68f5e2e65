#include "nwlab/design.hpp"

#include <algorithm>
#include <stdexcept>

namespace nwlab {

namespace {

// Word-packed membership masks make the pairwise-overlap scans O(d/64).
struct Mask {
  std::vector<std::uint64_t> words;
  explicit Mask(std::size_t d) : words((d + 63) / 64, 0) {}
  void set(std::size_t i) { words[i / 64] |= 1ULL << (i % 64); }
  bool test(std::size_t i) const { return (words[i / 64] >> (i % 64)) & 1; }
};

std::size_t overlap_count(const std::vector<std::size_t>& set, const Mask& mask) {
  std::size_t c = 0;
  for (std::size_t e : set) c += mask.test(e);
  return c;
}

}  // namespace

DesignCheck verify_design(const Design& design) {
  DesignCheck rep;
  auto fail = [&rep](DesignCheck::Fail f, std::size_t j, std::size_t k, std::string detail) {
    rep.valid = false;
    rep.fail = f;
    rep.j = j;
    rep.k = k;
    rep.detail = std::move(detail);
    return rep;
  };

  if (!(design.d > design.r && design.r > design.s))
    return fail(DesignCheck::Fail::params, 0, 0, "need d > r > s >= 0");

  std::vector<Mask> masks;
  masks.reserve(design.sets.size());
  for (std::size_t j = 0; j < design.sets.size(); ++j) {
    const auto& set = design.sets[j];
    if (set.size() != design.r)
      return fail(DesignCheck::Fail::set, j + 1, 0, "set has wrong cardinality");
    Mask m(design.d);
    for (std::size_t e : set) {
      if (e >= design.d)
        return fail(DesignCheck::Fail::set, j + 1, 0, "element out of universe");
      if (m.test(e))
        return fail(DesignCheck::Fail::set, j + 1, 0, "duplicate element");
      m.set(e);
    }
    masks.push_back(std::move(m));
  }

  for (std::size_t j = 0; j < design.sets.size(); ++j)
    for (std::size_t k = j + 1; k < design.sets.size(); ++k)
      if (overlap_count(design.sets[j], masks[k]) > design.s)
        return fail(DesignCheck::Fail::overlap, j + 1, k + 1, "pairwise overlap exceeds s");

  return rep;
}

GreedyOutcome gen_design_greedy(std::size_t d, std::size_t r, std::size_t s,
                                std::size_t m_target) {
  if (!(d > r && r > s))
    throw std::domain_error("gen_design_greedy: need d > r > s >= 0");

  GreedyOutcome out;
  out.requested = m_target;
  out.design.d = d;
  out.design.r = r;
  out.design.s = s;
  if (m_target == 0) return out;

  std::vector<Mask> kept_masks;
  std::vector<std::size_t> partial;
  partial.reserve(r);
  // overlaps[i] = |partial ∩ kept_i|. Overlaps only grow along a branch, so
  // pruning a subtree on overlap > s skips exactly the subsets the plain
  // enumeration would have rejected anyway -- the kept sequence is unchanged.
  std::vector<std::size_t> overlaps;

  // Depth-first walk of sorted r-tuples in lexicographic order. Returns true
  // once m_target sets are kept. A set kept at full depth equals the current
  // partial, so its overlap entry starts at r and the unwind decrements keep
  // it consistent.
  auto walk = [&](auto&& self, std::size_t next_min) -> bool {
    if (partial.size() == r) {
      out.design.sets.push_back(partial);
      Mask m(d);
      for (std::size_t e : partial) m.set(e);
      kept_masks.push_back(std::move(m));
      overlaps.push_back(r);
      return out.design.sets.size() >= m_target;
    }
    const std::size_t remaining = r - partial.size();
    for (std::size_t e = next_min; e + remaining <= d; ++e) {
      bool ok = true;
      for (std::size_t i = 0; i < kept_masks.size(); ++i) {
        if (kept_masks[i].test(e) && overlaps[i] + 1 > s) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      partial.push_back(e);
      for (std::size_t i = 0; i < kept_masks.size(); ++i)
        if (kept_masks[i].test(e)) ++overlaps[i];
      const bool done = self(self, e + 1);
      // kept_masks may have grown inside the call; every kept set containing
      // e (including new ones, whose entries count e) gets decremented.
      for (std::size_t i = 0; i < kept_masks.size(); ++i)
        if (kept_masks[i].test(e)) --overlaps[i];
      partial.pop_back();
      if (done) return true;
      // A set kept inside the call can invalidate the current prefix: its
      // overlap with partial was never gated by the push-time checks. Every
      // remaining candidate below this prefix shares it, so stop here and let
      // the caller re-check its own prefix.
      for (std::size_t i = 0; i < kept_masks.size(); ++i)
        if (overlaps[i] > s) return false;
    }
    return false;
  };
  walk(walk, 0);

  return out;
}

KmOutcome gen_design_km(std::size_t d, const BigRat& alpha) {
  if (!(alpha > 0 && alpha < 1))
    throw std::domain_error("gen_design_km: alpha must lie in (0,1)");

  const BigRat rd = alpha * d;
  const BigRat sd = 2 * alpha * alpha * d;
  KmOutcome out;
  out.rounded = !rat_is_integer(rd) || !rat_is_integer(sd);
  const BigInt r_big = rat_floor(rd);
  const BigInt s_big = rat_floor(sd);
  if (r_big <= s_big)
    throw std::domain_error("gen_design_km: degenerate parameters (r <= s after rounding)");
  const auto r = static_cast<std::size_t>(r_big);
  const auto s = static_cast<std::size_t>(s_big);

  // floor(2^(alpha^4 d / 5))
  const BigRat exponent = alpha * alpha * alpha * alpha * d / 5;
  out.size_floor = floor_pow(BigInt(2), exponent);

  std::size_t target = static_cast<std::size_t>(out.size_floor);
  auto greedy = gen_design_greedy(d, r, s, target);
  out.design = std::move(greedy.design);
  return out;
}

namespace {

bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

}  // namespace

Design design_from_polynomials(std::size_t p, std::size_t degree, std::size_t m_target) {
  if (!is_prime(p)) throw std::domain_error("design_from_polynomials: p must be prime");
  if (degree >= p) throw std::domain_error("design_from_polynomials: need degree < p");
  const BigInt poly_count = ipow(BigInt(p), degree + 1);
  if (BigInt(m_target) > poly_count)
    throw std::domain_error("design_from_polynomials: m_target exceeds p^(degree+1)");

  Design out;
  out.d = p * p;
  out.r = p;
  out.s = degree;
  out.sets.reserve(m_target);

  std::vector<std::size_t> coeff(degree + 1, 0);  // coeff[t] multiplies i^t
  for (std::size_t index = 0; index < m_target; ++index) {
    std::vector<std::size_t> set;
    set.reserve(p);
    for (std::size_t i = 0; i < p; ++i) {
      // Horner evaluation of q(i) over GF(p).
      std::size_t v = 0;
      for (std::size_t t = degree + 1; t-- > 0;) v = (v * i + coeff[t]) % p;
      set.push_back(i * p + v);  // ascending because i dominates
    }
    out.sets.push_back(std::move(set));
    // next coefficient vector: base-p increment, constant term first
    for (std::size_t t = 0; t <= degree; ++t) {
      if (++coeff[t] < p) break;
      coeff[t] = 0;
    }
  }
  return out;
}

}  // namespace nwlab
