// Flags and buildings, multicurves, the triple-form criterion and reports.

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "fillings/buildings.hpp"
#include "fillings/curves.hpp"
#include "fillings/io.hpp"
#include "fillings/kahler.hpp"
#include "fillings/suite.hpp"
#include "oracles.hpp"

using namespace fillings;

namespace {

const Coefficients Z = Coefficients::integers();

using Zeros = std::vector<std::pair<std::size_t, std::size_t>>;

RationalFlag flag_of(std::size_t m, const std::vector<std::vector<std::size_t>>& coords) {
  std::vector<QMatrix> spans;
  for (const auto& c : coords) spans.push_back(coordinate_span(m, c));
  return RationalFlag(m, spans);
}

/// Members w(S_k) of every coordinate flag spec of Q^m.
std::vector<std::vector<std::vector<std::size_t>>> coordinate_members(std::size_t m) {
  std::set<std::vector<std::vector<std::size_t>>> out;
  std::vector<std::size_t> w(m);
  std::iota(w.begin(), w.end(), 0);
  do {
    for (unsigned mask = 1; mask < (1u << (m - 1)); ++mask) {
      CoordinateFlagSpec spec{m, {}, w};
      for (std::size_t d = 1; d < m; ++d)
        if (mask >> (d - 1) & 1u) spec.dims.push_back(d);
      std::vector<std::vector<std::size_t>> key;
      for (std::size_t k = 0; k < spec.dims.size(); ++k) key.push_back(spec.image(k));
      out.insert(key);
    }
  } while (std::next_permutation(w.begin(), w.end()));
  return {out.begin(), out.end()};
}

oracle::Graph brute(const StableGraph& g) { return oracle::brute_canonical(g.genus, g.edges); }

Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

TripleForm form(Rational a, Rational b, Rational c) {
  TripleForm t;
  t.c112 = a;
  t.c122 = b;
  t.c222 = c;
  return t;
}

}  // namespace

// ---------------------------------------------------------------------------
// flags

TEST(Flag, ValidationErrors) {
  EXPECT_THROW(RationalFlag(0, {}), InputError);
  EXPECT_THROW(flag_of(3, {{0, 1, 2}}), InputError);
  EXPECT_THROW(flag_of(3, {{0, 1}, {0}}), InputError);
  EXPECT_THROW(flag_of(3, {{0}, {1, 2}}), InputError);
  EXPECT_THROW((CoordinateFlagSpec{3, {1}, {0, 0, 1}}.validate()), InputError);
  EXPECT_THROW((CoordinateFlagSpec{3, {2, 1}, {0, 1, 2}}.validate()), InputError);
  EXPECT_THROW(stab_pair_dim(standard_flag(2, {1}), standard_flag(3, {1})), InputError);
}

TEST(Flag, ForcedZeroExamples) {
  EXPECT_EQ(forced_zero_entries({3, {1}, {2, 1, 0}}), (Zeros{{0, 2}, {1, 2}}));
  EXPECT_EQ(forced_zero_entries({3, {1, 2}, {1, 2, 0}}), (Zeros{{0, 1}, {0, 2}}));
  EXPECT_THROW(forced_zero_entries({3, {1, 2}, {0, 1, 2}}), PreconditionError);
  EXPECT_THROW(forced_zero_entries({3, {1, 2}, {1, 0, 2}}), PreconditionError);  // fixes F_2
  for (const CoordinateFlagSpec& s : {CoordinateFlagSpec{3, {1}, {2, 1, 0}}, CoordinateFlagSpec{3, {1, 2}, {1, 2, 0}}})
    EXPECT_EQ(zero_entries_above_diagonal(s.flag()), forced_zero_entries(s));
}

TEST(Flag, ForcedZerosExhaustive) {
  for (std::size_t m = 2; m <= 4; ++m) {
    auto r = lemma_upper_exhaustive(m, true);
    EXPECT_EQ(r.violations, 0u);
    EXPECT_EQ(r.oracle_mismatch, 0u);
    EXPECT_EQ(r.oracle_checked, r.cases);
    EXPECT_GT(r.cases, 0u);
  }
  auto r6 = lemma_upper_exhaustive(6, false);
  EXPECT_EQ(r6.violations, 0u);
  EXPECT_THROW(lemma_upper_exhaustive(9, false), PreconditionError);
  std::mt19937_64 rng(31);
  auto r10 = lemma_upper_random(10, 3000, rng, false);
  EXPECT_EQ(r10.violations, 0u);
  EXPECT_EQ(r10.cases + r10.skipped, 3000u);
}

TEST(Flag, StabilizerDimensions) {
  EXPECT_EQ(stab_dim(standard_flag(2, {1})), 3u);
  EXPECT_EQ(stab_pair_dim(standard_flag(2, {1}), flag_of(2, {{1}})), 2u);
  EXPECT_EQ(orbit_codim(standard_flag(2, {1}), flag_of(2, {{1}})), 1u);
  const auto full = standard_flag(3, {1, 2});
  EXPECT_EQ(stab_dim(full), 6u);
  EXPECT_EQ(stab_pair_dim(full, flag_of(3, {{2}})), 4u);
  EXPECT_EQ(stab_pair_dim(full, flag_of(3, {{2}, {1, 2}})), 3u);
  EXPECT_EQ(stab_dim(standard_flag(4, {2})), 12u);
}

TEST(Flag, SplitDimensions) {
  auto s = split_dims(standard_flag(4, {1, 2, 3}));
  EXPECT_EQ(s.graded, (std::vector<std::size_t>{1, 1, 1, 1}));
  EXPECT_EQ(s.dim_n, 6u);
  EXPECT_EQ(s.dim_levi, 4u);
  EXPECT_EQ(s.dim_stab, 10u);
  EXPECT_EQ(s.dim_n_linear, s.dim_n);
  EXPECT_EQ(s.dim_stab_linear, s.dim_stab);
  std::mt19937_64 rng(32);
  for (int i = 0; i < 30; ++i) {
    auto e = random_rational_flag(2 + static_cast<std::size_t>(i % 4), rng);
    auto t = split_dims(e);
    EXPECT_EQ(t.dim_n_linear, t.dim_n);
    EXPECT_EQ(t.dim_stab_linear, t.dim_stab);
  }
}

TEST(Flag, CoordinateStabilizersMatchEntryCount) {
  for (std::size_t m = 2; m <= 4; ++m) {
    const auto members = coordinate_members(m);
    for (const auto& e : members) {
      EXPECT_EQ(stab_dim(flag_of(m, e)), oracle::coordinate_stab_dim(m, e));
      for (const auto& f : members) {
        auto both = e;
        both.insert(both.end(), f.begin(), f.end());
        EXPECT_EQ(stab_pair_dim(flag_of(m, e), flag_of(m, f)), oracle::coordinate_stab_dim(m, both));
      }
    }
  }
}

TEST(Flag, StabilizerConjugationInvariance) {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 25; ++i) {
    const std::size_t m = 2 + static_cast<std::size_t>(i % 3);
    auto e = random_rational_flag(m, rng);
    EXPECT_EQ(stab_dim(e), split_dims(e).dim_stab);
    auto [a, b] = random_disjoint_pair(m, rng);
    EXPECT_GE(orbit_codim(a, b), b.length());
    EXPECT_EQ(stab_pair_dim(a, b), stab_pair_dim(b, a));
  }
}

TEST(Flag, InducedFlagsAndF0) {
  const auto e = standard_flag(3, {1});
  const auto f = flag_of(3, {{1}, {1, 2}});
  ASSERT_TRUE(disjoint(e, f));
  auto ind = induced_flags(e, f);
  ASSERT_EQ(ind.size(), 2u);
  EXPECT_EQ(ind[0].piece_dim, 1u);
  EXPECT_EQ(ind[1].piece_dim, 2u);
  EXPECT_EQ(ind[1].image_dims, (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(ind[1].length(), 1u);
  auto f0 = f0_subflag(e, f);
  EXPECT_EQ(f0.dims(), std::vector<std::size_t>{2});
  EXPECT_THROW(f0_subflag(e, e), PreconditionError);
}

TEST(Slm, SmallestCase) {
  auto r = slm_inequality(standard_flag(2, {1}), flag_of(2, {{1}}));
  EXPECT_EQ(r.dim_n, 1u);
  EXPECT_EQ(r.nilpotent_codim, 1u);
  EXPECT_EQ(r.sum_l, 0u);
  EXPECT_EQ(r.len_f0, 1u);
  EXPECT_EQ(r.codim, 3u);
  EXPECT_EQ(r.dim_gk, 0);
  EXPECT_EQ(r.rhs, 1);
  EXPECT_TRUE(r.codim_ok && r.step_nilpotent && r.step_partition && r.holds);
  EXPECT_THROW(slm_inequality(standard_flag(2, {1}), standard_flag(2, {1})), PreconditionError);
}

TEST(Slm, CompleteCoordinateFlagsOfQ4) {
  std::vector<RationalFlag> complete;
  std::vector<std::size_t> w{0, 1, 2, 3};
  do complete.push_back(CoordinateFlagSpec{4, {1, 2, 3}, w}.flag());
  while (std::next_permutation(w.begin(), w.end()));
  std::size_t pairs = 0;
  for (const auto& e : complete)
    for (const auto& f : complete) {
      if (!disjoint(e, f)) continue;
      ++pairs;
      auto r = slm_inequality(e, f);
      EXPECT_TRUE(r.holds);
      EXPECT_TRUE(r.codim_ok);
      EXPECT_TRUE(r.step_nilpotent);
    }
  EXPECT_GT(pairs, 24u);
}

TEST(Slm, RandomPairs) {
  std::mt19937_64 rng(34);
  for (int i = 0; i < 60; ++i) {
    auto [e, f] = random_disjoint_pair(2 + static_cast<std::size_t>(i % 3), rng);
    auto r = slm_inequality(e, f);
    EXPECT_TRUE(r.holds);
    EXPECT_TRUE(r.codim_ok);
    EXPECT_TRUE(r.step_nilpotent);
    EXPECT_EQ(r.codim, r.nilpotent_codim + e.length() + 1 + r.sum_l);
  }
}

// ---------------------------------------------------------------------------
// buildings

TEST(Building, VertexAndChamberCounts) {
  const std::vector<std::pair<std::size_t, std::size_t>> cases = {{2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}};
  for (auto [m, p] : cases) {
    auto b = finite_building(m, p);
    std::uint64_t vertices = 0;
    for (std::size_t k = 1; k < m; ++k) vertices += oracle::gaussian_binomial(m, k, p);
    EXPECT_EQ(b.count(0), vertices);
    EXPECT_EQ(b.count(static_cast<int>(m) - 2), complete_flag_count(m, p));
    EXPECT_EQ(b.dimension(), static_cast<int>(m) - 2);
  }
  EXPECT_EQ(finite_building(3, 2).count(0), 14u);
  EXPECT_EQ(finite_building(3, 3).count(0), 26u);
  EXPECT_EQ(finite_building(4, 2).count(0), 65u);
}

TEST(Building, SteinbergRank) {
  const std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> cases = {{2, 3, 3}, {3, 2, 8}, {3, 3, 27}, {4, 2, 64}};
  for (auto [m, p, rank] : cases) {
    auto h = reduced_homology(finite_building(m, p), Z);
    EXPECT_EQ(h.rank(static_cast<int>(m) - 2), rank);
    EXPECT_EQ(h.support(), std::vector<int>{static_cast<int>(m) - 2});
    EXPECT_FALSE(h.has_torsion());
  }
  auto r = check_retraction(finite_building(3, 2), Z);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(reduced(r.diagonal).rank(1), 8u);
}

TEST(Building, Guards) {
  EXPECT_THROW(finite_building(1, 2), InputError);
  EXPECT_THROW(finite_building(3, 4), InputError);
  EXPECT_THROW(finite_building(5, 2), PreconditionError);
  EXPECT_THROW(finite_building(3, 5), PreconditionError);
  EXPECT_NO_THROW(finite_building(2, 5, BuildingGuard{4, 5}));
}

// ---------------------------------------------------------------------------
// curves

TEST(Harer, Values) {
  EXPECT_EQ(harer_dim({2, 0, 0}), 3);
  EXPECT_EQ(harer_dim({0, 2, 1}), 2);
  EXPECT_EQ(harer_dim({1, 1, 1}), 3);
  EXPECT_EQ(harer_dim({0, 3, 0}), 3);
  EXPECT_EQ(harer_dim({1, 1, 0}), 2);
  for (int g = 0; g <= 5; ++g)
    for (int r = 0; r <= 4; ++r)
      for (int s = 0; s <= 4; ++s) {
        SurfaceType t{g, r, s};
        if (t.in_range()) {
          EXPECT_EQ(harer_dim(t), oracle::harer(g, r, s)) << t.str();
        } else {
          EXPECT_THROW(harer_dim(t), PreconditionError);
        }
      }
}

TEST(Harer, CutRules) {
  EXPECT_EQ(cut_nonseparating({2, 0, 0}), (std::vector<SurfaceType>{{1, 1, 1}}));
  EXPECT_EQ(cut_separating({2, 0, 0}, {1, 0, 0}), (std::vector<SurfaceType>{{1, 1, 0}, {1, 0, 1}}));
  EXPECT_EQ(cut_separating({1, 2, 1}, {0, 2, 0}), (std::vector<SurfaceType>{{0, 3, 0}, {1, 0, 2}}));
  EXPECT_THROW(cut_nonseparating({0, 4, 0}), PreconditionError);
  EXPECT_THROW(cut_nonseparating({1, 0, 0}), PreconditionError);
  EXPECT_THROW(cut_separating({2, 0, 0}, {0, 0, 0}), PreconditionError);
  EXPECT_THROW(cut_separating({2, 0, 0}, {3, 0, 0}), InputError);
}

TEST(Multicurves, Counts) {
  auto g2 = multicurve_types_by_size(2);
  EXPECT_EQ(g2[1].size(), 2u);
  EXPECT_EQ(g2[3].size(), 2u);
  std::vector<std::size_t> c3, c4;
  for (int k = 1; k <= 6; ++k) c3.push_back(enumerate_multicurves(3, k).size());
  auto by4 = multicurve_types_by_size(4);
  for (int k = 1; k <= 9; ++k) c4.push_back(by4[static_cast<std::size_t>(k)].size());
  EXPECT_EQ(c3, (std::vector<std::size_t>{2, 5, 9, 12, 8, 5}));
  EXPECT_EQ(c4, (std::vector<std::size_t>{3, 7, 21, 43, 75, 89, 81, 42, 17}));
  EXPECT_EQ(multicurve_types_by_size(5)[12].size(), 71u);
  EXPECT_THROW(enumerate_multicurves(2, 0), PreconditionError);
  EXPECT_THROW(enumerate_multicurves(2, 4), PreconditionError);
  EXPECT_THROW(enumerate_multicurves(1, 1), PreconditionError);
}

TEST(Multicurves, MatchesBruteForceEnumeration) {
  for (int g = 2; g <= 4; ++g) {
    auto by = multicurve_types_by_size(g);
    for (int k = 1; k <= 3 * g - 3; ++k) {
      std::set<oracle::Graph> ours;
      for (const auto& c : by[static_cast<std::size_t>(k)]) {
        EXPECT_TRUE(c.connected() && c.stable());
        EXPECT_EQ(c.closed_genus(), g);
        EXPECT_EQ(canonical_form(c), c);
        ours.insert(brute(c));
      }
      EXPECT_EQ(ours.size(), by[static_cast<std::size_t>(k)].size()) << "duplicate types g=" << g << " k=" << k;
      EXPECT_EQ(ours, oracle::multicurve_types(g, k)) << "g=" << g << " k=" << k;
    }
  }
}

TEST(Multicurves, CanonicalFormIgnoresLabels) {
  std::mt19937_64 rng(35);
  const auto by = multicurve_types_by_size(4);
  for (const auto& c : by[5]) {
    std::vector<int> perm(static_cast<std::size_t>(c.vertices()));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(canonical_form(detail::relabel_graph(c, perm)), c);
  }
}

TEST(Multicurves, StabilizerIndependentOfPunctureSides) {
  std::mt19937_64 rng(36);
  std::bernoulli_distribution coin(0.5);
  for (int g = 2; g <= 3; ++g)
    for (const auto& by : multicurve_types_by_size(g))
      for (const auto& c : by) {
        auto cut = to_cut_surface(c);
        for (auto& p : cut.pieces) p.r = p.s = 0;
        for (auto& e : cut.curve_edges) {
          e.a_gets_puncture = coin(rng);
          ++cut.pieces[static_cast<std::size_t>(e.a_gets_puncture ? e.a : e.b)].r;
          ++cut.pieces[static_cast<std::size_t>(e.a_gets_puncture ? e.b : e.a)].s;
        }
        EXPECT_EQ(multicurve_stab_hdim(cut), multicurve_stab_hdim(c)) << c.describe();
      }
}

TEST(Multicurves, PantsAndRemoval) {
  for (int g = 2; g <= 4; ++g) {
    auto by = multicurve_types_by_size(g);
    EXPECT_EQ(multicurve_stab_hdim(by[0][0]), 4 * g - 5);
    for (const auto& p : by[static_cast<std::size_t>(3 * g - 3)]) EXPECT_EQ(multicurve_stab_hdim(p), 3 * g - 3);
    for (std::size_t k = 1; k < by.size(); ++k)
      for (const auto& c : by[k])
        for (int e = 0; e < c.curves(); ++e) {
          auto smaller = remove_curve(c, e);
          EXPECT_EQ(smaller.curves(), c.curves() - 1);
          EXPECT_LE(multicurve_stab_hdim(smaller), multicurve_stab_hdim(c) + 1);
        }
  }
}

TEST(Multicurves, CutSurfaceJson) {
  auto c = cut_surface_from_json(read_json_file(FILLINGS_SAMPLES "/cut_surface_genus2.json"));
  EXPECT_EQ(multicurve_stab_hdim(c), 3);
  EXPECT_EQ(cut_surface_to_json(cut_surface_from_json(cut_surface_to_json(c))), cut_surface_to_json(c));
  auto j = cut_surface_to_json(c);
  j["pieces"][0]["s"] = 1;
  EXPECT_THROW(cut_surface_from_json(j), InputError);
  j = cut_surface_to_json(c);
  j["closed_genus"] = 3;
  EXPECT_THROW(cut_surface_from_json(j), InputError);
}

TEST(Sweep, GenusTwoAndThree) {
  auto r2 = lemma_smallstabilizers_sweep(2);
  EXPECT_TRUE(r2.pass());
  EXPECT_EQ(r2.rhs, 5);
  EXPECT_EQ(r2.max_exact_lhs, 4);
  EXPECT_LE(r2.max_removal_increase, 1);
  auto r3 = lemma_smallstabilizers_sweep(3);
  EXPECT_TRUE(r3.pass());
  EXPECT_EQ(r3.max_exact_lhs, 10);
  EXPECT_LT(r3.max_bound_lhs, r3.rhs);
  EXPECT_THROW(lemma_smallstabilizers_sweep(1), PreconditionError);
}

TEST(Sweep, CurveComplexCertificates) {
  for (int g = 2; g <= 3; ++g) {
    auto x = curve_complex_certificate(g);
    EXPECT_EQ(x.boundary_dim, 6 * g - 7);
    EXPECT_EQ(check_small(x).status, SmallStatus::small);
    EXPECT_EQ(vanishing_certificate(x).status, SmallStatus::small);
  }
  EXPECT_THROW(curve_complex_certificate(4), PreconditionError);
}

// ---------------------------------------------------------------------------
// triple forms

TEST(Kahler, RankOne) {
  EXPECT_EQ(rank_one_obstruction({2, 2, q(1)}), Verdict::obstructed);
  EXPECT_EQ(rank_one_obstruction({2, 3, q(-5, 7)}), Verdict::obstructed);
  EXPECT_EQ(rank_one_obstruction({2, 2, q(0)}), Verdict::inconclusive);
  EXPECT_THROW(rank_one_obstruction({2, 1, q(1)}), PreconditionError);
  EXPECT_THROW(rank_one_obstruction({0, 2, q(1)}), PreconditionError);
}

TEST(Kahler, ObstructedExample) {
  auto t = triple_form_from_json(read_json_file(FILLINGS_SAMPLES "/triple_form_obstructed.json"));
  auto r = compression_criterion_b2(t);
  EXPECT_EQ(r.verdict, Verdict::obstructed);
  ASSERT_EQ(r.candidates.size(), 1u);
  const auto& o = r.candidates[0];
  EXPECT_EQ(o.candidate.beta, (std::vector<Rational>{q(0), q(1)}));
  EXPECT_EQ(*o.x, q(1, 2));
  EXPECT_EQ(*o.y, q(3, 2));
  EXPECT_EQ(*o.discriminant, q(-2));
  EXPECT_FALSE(r.witness);
}

TEST(Kahler, SatisfiableExample) {
  auto t = triple_form_from_json(read_json_file(FILLINGS_SAMPLES "/triple_form_satisfiable.json"));
  auto r = compression_criterion_b2(t);
  EXPECT_EQ(r.verdict, Verdict::satisfiable);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.witness->s, q(1));
  EXPECT_EQ(r.witness->x, q(1));
  EXPECT_EQ(r.witness->y, q(0));
  EXPECT_TRUE(verify_witness(t, *r.witness));
  auto bad = *r.witness;
  bad.s = q(2);
  EXPECT_FALSE(verify_witness(t, bad));
  EXPECT_THROW(triple_form_from_json(parse_json_text(R"({"c111":"2","c112":"0","c122":"0","c222":"0"})")), InputError);
}

TEST(Kahler, RationalRootsMatchBruteSearch) {
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<long> c(-6, 6);
  for (int i = 0; i < 300; ++i) {
    std::vector<Rational> p{q(c(rng)), q(c(rng)), q(c(rng)), q(c(rng))};
    if (sgn(p[0]) == 0) p[0] = q(1);
    std::vector<Rational> brute;
    for (long a = -36; a <= 36; ++a)
      for (long b = 1; b <= 36; ++b) {
        auto t = q(a, b);
        if (sgn(detail::eval_poly(p, t)) == 0 && std::find(brute.begin(), brute.end(), t) == brute.end()) brute.push_back(t);
      }
    std::sort(brute.begin(), brute.end());
    EXPECT_EQ(rational_roots(p), brute);
  }
}

TEST(Kahler, WitnessesVerifyAndRescalingInvariance) {
  std::mt19937_64 rng(38);
  std::uniform_int_distribution<long> n(-4, 4), d(1, 3);
  int satisfiable = 0;
  for (int i = 0; i < 400; ++i) {
    auto t = form(q(n(rng), d(rng)), q(n(rng), d(rng)), i % 2 ? q(0) : q(n(rng), d(rng)));
    auto r = compression_criterion_b2(t);
    if (r.witness) {
      ++satisfiable;
      EXPECT_TRUE(verify_witness(t, *r.witness));
    }
    for (const auto& o : r.candidates) {
      EXPECT_EQ(sgn(o.candidate.b3), 0);
      for (const auto& s : o.s_roots) EXPECT_EQ(s, *o.x * s * s + *o.y);
    }
    for (const Rational& lambda : {q(2), q(-3), q(1, 2)}) {
      auto u = form(lambda * t.c112, lambda * lambda * t.c122, lambda * lambda * lambda * t.c222);
      EXPECT_EQ(compression_criterion_b2(u).verdict, r.verdict);
    }
  }
  EXPECT_GT(satisfiable, 0);
}

// ---------------------------------------------------------------------------
// reports

TEST(Report, DigestAndDeterminism) {
  EXPECT_EQ(digest(Json{{"a", 1}, {"b", 2}}), digest(parse_json_text(R"({"b":2,"a":1})")));
  EXPECT_NE(digest(Json{{"a", 1}}), digest(Json{{"a", 2}}));
  EXPECT_EQ(digest(Json::object()).size(), 16u);

  auto run = [] {
    Report r;
    r.command = "b2-criterion";
    r.inputs = {{"c111", "1"}, {"c112", "1"}, {"c122", "1"}, {"c222", "0"}};
    r.details = b2_report_json(compression_criterion_b2(form(q(1), q(1), q(0))));
    r.runtime_ms = static_cast<long>(std::random_device{}() % 1000);
    return r;
  };
  EXPECT_EQ(run().to_json(false).dump(), run().to_json(false).dump());
  EXPECT_TRUE(run().to_json().contains("runtime_ms"));
  EXPECT_EQ(exit_code(Status::verified), 0);
  EXPECT_EQ(exit_code(Status::counterexample), 1);
  EXPECT_EQ(exit_code(Status::inconclusive), 2);
  EXPECT_EQ(exit_code(Status::error), 3);
}

TEST(Report, SuiteCriteriaAreDeterministic) {
  auto a = criterion_kahler(5, 300), b = criterion_kahler(5, 300);
  EXPECT_EQ(a.details.dump(), b.details.dump());
  EXPECT_EQ(a.summary, b.summary);
  auto c = criterion_chaincore(9, 5), d = criterion_chaincore(9, 5);
  EXPECT_EQ(c.details.dump(), d.details.dump());
}

TEST(Report, FlagJsonRoundTrip) {
  std::mt19937_64 rng(39);
  for (int i = 0; i < 10; ++i) {
    auto e = random_rational_flag(4, rng);
    EXPECT_EQ(flag_from_json(flag_to_json(e)), e);
  }
  EXPECT_THROW(flag_from_json(parse_json_text(R"({"m":2,"subspaces":[[["1","0"],["0","1"]]]})")), InputError);
}
