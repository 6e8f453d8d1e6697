#pragma once

// Cup-product obstructions on a closed oriented 6-manifold: the rank-one test
// on ω^m and the b2 = 2 surjection criterion through the rational-square test.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "fillings/error.hpp"
#include "fillings/rational.hpp"
#include "fillings/verdict.hpp"

namespace fillings {

struct RankOneRing {
  int k = 2;  // degree of ω
  int m = 2;  // power
  Rational top_value;  // ⟨ω^m, [∂]⟩
};

inline Verdict rank_one_obstruction(const RankOneRing& r) {
  if (r.m <= 1) throw PreconditionError("rank-one criterion needs m > 1");
  if (r.k < 1) throw PreconditionError("rank-one criterion needs k >= 1");
  return sgn(r.top_value) != 0 ? Verdict::obstructed : Verdict::inconclusive;
}

/// ∫ e_a e_b e_c on the basis e1 = ω, e2 of H^2, with ∫ω³ = 1.
struct TripleForm {
  Rational c111{1}, c112, c122, c222;

  void validate() const {
    if (c111 != 1) throw InputError("triple form must be normalized with c111 = 1");
  }

  /// ∫ u v w for u, v, w given by coordinates (u1, u2).
  [[nodiscard]] Rational eval(const std::vector<Rational>& u, const std::vector<Rational>& v,
                              const std::vector<Rational>& w) const {
    const Rational* c[2][2][2] = {{{&c111, &c112}, {&c112, &c122}}, {{&c112, &c122}, {&c122, &c222}}};
    Rational total = 0;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int d = 0; d < 2; ++d) total += u[a] * v[b] * w[d] * *c[a][b][d];
    return total;
  }
};

namespace detail {

inline Integer lcm_den(const std::vector<Rational>& cs) {
  Integer l = 1;
  for (const auto& c : cs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

inline std::vector<Integer> positive_divisors(Integer n) {
  if (n < 0) n = -n;
  if (n == 0) return {};
  if (mpz_sizeinbase(n.get_mpz_t(), 2) > 48) throw InputError("triple form coefficients too large for root search");
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

inline Rational eval_poly(const std::vector<Rational>& c, const Rational& t) {
  Rational v = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * t + *it;
  return v;
}

}  // namespace detail

/// Rational roots of c0 + c1 t + ... + cn t^n (c0 ≠ 0), sorted, by the rational root theorem.
inline std::vector<Rational> rational_roots(std::vector<Rational> c) {
  while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
  if (c.size() <= 1) return {};
  if (sgn(c.front()) == 0) throw PreconditionError("rational_roots expects a nonzero constant term");
  const Integer l = detail::lcm_den(c);
  std::vector<Integer> z;
  for (const auto& x : c) z.push_back(Integer(x * l));
  std::vector<Rational> roots;
  for (const auto& p : detail::positive_divisors(z.front()))
    for (const auto& q : detail::positive_divisors(z.back()))
      for (int sign : {1, -1}) {
        Rational t(p * sign, q);
        t.canonicalize();
        if (sgn(detail::eval_poly(c, t)) == 0 && std::find(roots.begin(), roots.end(), t) == roots.end())
          roots.push_back(t);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

struct BetaCandidate {
  std::vector<Rational> beta;  // coordinates in (e1, e2)
  Rational w2b;   // ∫ ω² β
  Rational wb2;   // ∫ ω β²
  Rational b3;    // ∫ β³
  bool square_nonzero = false;  // (∫ωβ², ∫β³) not both zero
};

/// Projective classes β with β³ = 0: e1 + t e2 for rational roots t of the
/// cubic, and e2 when c222 = 0; each tagged with whether β² ≠ 0.
inline std::vector<BetaCandidate> beta_candidates(const TripleForm& t) {
  t.validate();
  std::vector<std::vector<Rational>> betas;
  for (const auto& root : rational_roots({Rational(1), 3 * t.c112, 3 * t.c122, t.c222}))
    betas.push_back({Rational(1), root});
  if (sgn(t.c222) == 0) betas.push_back({Rational(0), Rational(1)});
  const std::vector<Rational> w{Rational(1), Rational(0)};
  std::vector<BetaCandidate> out;
  for (auto& b : betas) {
    BetaCandidate c{b, t.eval(w, w, b), t.eval(w, b, b), t.eval(b, b, b), false};
    c.square_nonzero = sgn(c.wb2) != 0 || sgn(c.b3) != 0;
    out.push_back(std::move(c));
  }
  return out;
}

inline std::vector<BetaCandidate> find_betas(const TripleForm& t) {
  std::vector<BetaCandidate> out;
  for (auto& c : beta_candidates(t))
    if (c.square_nonzero) out.push_back(std::move(c));
  return out;
}

struct SurjectionWitness {
  std::vector<Rational> beta;
  Rational s, x, y;
};

struct CandidateOutcome {
  BetaCandidate candidate;
  std::string note;  // why it was rejected, if it was
  std::optional<Rational> x, y, discriminant;  // discriminant = 1 - 4xy
  std::vector<Rational> s_roots;  // nonzero roots of s = x s² + y
  bool zero_root = false;         // s = 0 solves it (not accepted)
};

struct B2Report {
  Verdict verdict = Verdict::obstructed;
  std::vector<CandidateOutcome> candidates;
  std::optional<SurjectionWitness> witness;
};

/// Re-evaluates every witness relation from the form.
inline bool verify_witness(const TripleForm& t, const SurjectionWitness& w) {
  const std::vector<Rational> om{Rational(1), Rational(0)};
  const auto& b = w.beta;
  const Rational a = t.eval(om, om, b), q = t.eval(om, b, b);
  if (sgn(t.eval(b, b, b)) != 0 || (sgn(q) == 0) || sgn(a) == 0 || sgn(w.s) == 0) return false;
  if (w.x != q / a || w.y != a / q - t.c111 / a) return false;
  if (w.s != w.x * w.s * w.s + w.y) return false;
  const Rational lhs = (2 * w.x * w.s - 1) * (2 * w.x * w.s - 1);
  return lhs == 1 - 4 * w.x * w.y;
}

/// SATISFIABLE when some β with β³ = 0, β² ≠ 0 has 1 - 4xy a rational square
/// and a nonzero root s of s = x s² + y.
inline B2Report compression_criterion_b2(const TripleForm& t) {
  B2Report r;
  for (auto& c : find_betas(t)) {
    CandidateOutcome o{c, "", std::nullopt, std::nullopt, std::nullopt, {}, false};
    if (sgn(c.w2b) == 0 || sgn(c.wb2) == 0) {
      o.note = "degenerate pairing";
      r.candidates.push_back(std::move(o));
      continue;
    }
    const Rational x = c.wb2 / c.w2b;
    const Rational y = c.w2b / c.wb2 - t.c111 / c.w2b;
    const Rational disc = 1 - 4 * x * y;
    o.x = x;
    o.y = y;
    o.discriminant = disc;
    if (!rational_is_square(disc)) {
      o.note = "1-4xy is not a rational square";
      r.candidates.push_back(std::move(o));
      continue;
    }
    const Rational root = rational_sqrt(disc);
    for (const Rational& s : {Rational((1 + root) / (2 * x)), Rational((1 - root) / (2 * x))}) {
      if (sgn(s) == 0) {
        o.zero_root = true;
        continue;
      }
      if (std::find(o.s_roots.begin(), o.s_roots.end(), s) == o.s_roots.end()) o.s_roots.push_back(s);
    }
    std::sort(o.s_roots.begin(), o.s_roots.end());
    if (o.s_roots.empty()) o.note = "only s = 0";
    if (!r.witness && !o.s_roots.empty()) {
      SurjectionWitness w{c.beta, o.s_roots.back(), x, y};
      if (verify_witness(t, w)) r.witness = w;
    }
    r.candidates.push_back(std::move(o));
  }
  r.verdict = r.witness ? Verdict::satisfiable : Verdict::obstructed;
  return r;
}

}  // namespace fillings
