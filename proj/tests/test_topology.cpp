// Chain complexes, homology, the diagonal machinery and orbit certificates.

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "fillings/chaincore.hpp"
#include "fillings/diagonal.hpp"
#include "fillings/io.hpp"
#include "fillings/smallness.hpp"
#include "oracles.hpp"

using namespace fillings;

namespace {

const Coefficients Z = Coefficients::integers();

SimplicialComplex make(const std::vector<std::string>& labels, const std::vector<std::vector<std::string>>& facets) {
  return SimplicialComplex::from_facets(labels, facets);
}

SimplicialComplex hollow_square() { return make({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"a", "d"}}); }
SimplicialComplex hollow_triangle() { return make({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}); }

/// Six-vertex real projective plane.
SimplicialComplex rp2() {
  std::vector<std::vector<std::string>> f = {{"1", "2", "3"}, {"1", "3", "4"}, {"1", "4", "5"}, {"1", "5", "6"}, {"1", "2", "6"},
                                             {"2", "3", "5"}, {"2", "4", "5"}, {"2", "4", "6"}, {"3", "4", "6"}, {"3", "5", "6"}};
  return make({"1", "2", "3", "4", "5", "6"}, f);
}

Simplex idx(const SimplicialComplex& k, const std::vector<std::string>& names) {
  Simplex s;
  for (const auto& n : names) s.push_back(static_cast<std::uint32_t>(std::find(k.labels().begin(), k.labels().end(), n) - k.labels().begin()));
  std::sort(s.begin(), s.end());
  return s;
}

std::vector<std::vector<int>> facet_ints(const SimplicialComplex& k) {
  std::vector<std::vector<int>> out;
  for (const auto& f : k.facets()) out.emplace_back(f.begin(), f.end());
  return out;
}

std::vector<std::size_t> ranks(const HomologyTable& h, int top) {
  std::vector<std::size_t> r;
  for (int d = 0; d <= top; ++d) r.push_back(h.rank(d));
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// chaincore

TEST(Homology, HollowSquareIsACircle) {
  auto h = homology(hollow_square(), Z);
  EXPECT_EQ(ranks(h, 1), (std::vector<std::size_t>{1, 1}));
  EXPECT_FALSE(h.has_torsion());
}

TEST(Homology, TetrahedronBoundaryIsASphere) {
  auto h = homology(simplex_boundary(5), Z);
  EXPECT_EQ(ranks(h, 3), (std::vector<std::size_t>{1, 0, 0, 1}));
  auto r = reduced_homology(simplex_boundary(5), Z);
  EXPECT_EQ(r.rank(0), 0u);
  EXPECT_EQ(r.rank(3), 1u);
}

TEST(Homology, ProjectivePlaneHasTwoTorsion) {
  auto h = homology(rp2(), Z);
  EXPECT_EQ(h.rank(1), 0u);
  EXPECT_EQ(h.torsion(1), std::vector<Integer>{2});
  EXPECT_EQ(h.rank(2), 0u);
  auto h2 = homology(rp2(), Coefficients::mod(2));
  EXPECT_EQ(ranks(h2, 2), (std::vector<std::size_t>{1, 1, 1}));
  auto h3 = homology(rp2(), Coefficients::mod(3));
  EXPECT_EQ(ranks(h3, 2), (std::vector<std::size_t>{1, 0, 0}));
}

TEST(Homology, SevenVertexTorus) {
  auto t = seven_vertex_torus(false);
  EXPECT_EQ(t.count(0), 7u);
  EXPECT_EQ(t.count(2), 14u);
  EXPECT_EQ(ranks(homology(t, Z), 2), (std::vector<std::size_t>{1, 2, 1}));
  auto p = seven_vertex_torus(true);
  EXPECT_EQ(ranks(homology(p, Z), 2), (std::vector<std::size_t>{1, 2, 0}));
  auto b = surface_boundary(p);
  EXPECT_EQ(b.count(1), 3u);
  EXPECT_EQ(ranks(homology(b, Z), 1), (std::vector<std::size_t>{1, 1}));
}

TEST(Homology, BettiNumbersMatchDenseOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    auto k = random_flag_complex(4 + trial % 6, 0.35 + 0.01 * trial, rng);
    for (std::uint32_t p : {2u, 3u, 5u}) {
      auto h = homology(k, Coefficients::mod(p));
      auto b = oracle::betti_mod_p(facet_ints(k), p);
      ASSERT_EQ(b.size(), static_cast<std::size_t>(k.dimension() + 1));
      for (int d = 0; d <= k.dimension(); ++d) EXPECT_EQ(h.rank(d), b[static_cast<std::size_t>(d)]) << "trial " << trial << " p " << p;
    }
  }
}

TEST(Homology, EulerCharacteristicOverFields) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    auto k = random_flag_complex(8, 0.5, rng);
    auto c = k.chains(Coefficients::mod(3));
    EXPECT_EQ(homology(c).euler_characteristic(), c.euler_characteristic());
  }
}

TEST(Homology, RelabelingInvariance) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    auto k = random_flag_complex(8, 0.55, rng);
    std::vector<std::uint32_t> perm(k.labels().size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_TRUE(homology(k, Z).isomorphic_to(homology(relabel(k, perm), Z)));
  }
  EXPECT_TRUE(homology(rp2(), Z).isomorphic_to(homology(relabel(rp2(), {5, 3, 1, 0, 2, 4}), Z)));
}

TEST(NormalForm, InvariantFactorsMatchDeterminantalDivisors) {
  std::mt19937_64 rng(14);
  std::uniform_int_distribution<long> entry(-6, 6), dim(1, 4);
  for (int trial = 0; trial < 150; ++trial) {
    const auto rows = static_cast<std::size_t>(dim(rng)), cols = static_cast<std::size_t>(dim(rng));
    std::vector<std::vector<long>> a(rows, std::vector<long>(cols));
    SparseMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        a[i][j] = trial % 3 ? entry(rng) * entry(rng) : 2 * entry(rng);
        if (a[i][j]) m.columns[j].emplace_back(static_cast<std::uint32_t>(i), a[i][j]);
      }
    auto nf = normal_form(m, Z);
    auto f = oracle::invariant_factors(a);
    std::vector<Integer> torsion;
    for (const auto& e : f)
      if (abs(e) != 1) torsion.push_back(abs(e));
    EXPECT_EQ(nf.rank, f.size()) << "trial " << trial;
    EXPECT_EQ(nf.torsion, torsion) << "trial " << trial;
  }
}

TEST(NormalForm, BitBoundFailsLoudly) {
  SparseMatrix m(3, 3);
  const std::int64_t v[3][3] = {{1000003, 999983, 7919}, {104729, 1299709, 15485863}, {32452843, 49979687, 86028121}};
  for (std::uint32_t i = 0; i < 3; ++i)
    for (std::uint32_t j = 0; j < 3; ++j) m.columns[j].emplace_back(i, v[i][j] * 2);
  EXPECT_THROW(normal_form(m, Z, 8), CoefficientOverflow);
  EXPECT_NO_THROW(normal_form(m, Z));
}

TEST(Flag, Examples) {
  EXPECT_FALSE(is_flag(hollow_triangle()));
  EXPECT_TRUE(is_flag(full_simplex(4)));
  EXPECT_TRUE(is_flag(hollow_square()));
}

TEST(Subcomplex, LinkAndStar) {
  auto sq = hollow_square();
  const auto a = idx(sq, {"a"});
  auto lk = link(sq, a);
  EXPECT_EQ(lk.count(0), 2u);
  EXPECT_EQ(lk.count(1), 0u);
  EXPECT_TRUE(lk.contains(idx(sq, {"b"})) && lk.contains(idx(sq, {"d"})));
  auto st = delta_sigma(sq, a);
  EXPECT_EQ(st.count(0), 3u);
  EXPECT_EQ(st.count(1), 2u);
  EXPECT_TRUE(st.contains(idx(sq, {"a", "b"})) && st.contains(idx(sq, {"a", "d"})));

  auto tri = full_simplex(3);
  const Simplex ab{0, 1};
  auto lk2 = link(tri, ab);
  EXPECT_EQ(lk2.count(0), 1u);
  EXPECT_TRUE(lk2.contains({2}));
  EXPECT_EQ(delta_sigma(tri, ab).size(), tri.size());
}

TEST(Subcomplex, StarIsSimplexJoinLink) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 15; ++trial) {
    auto k = random_flag_complex(7, 0.5, rng);
    for (const auto& s : k.all_simplices()) {
      auto st = delta_sigma(k, s);
      auto jn = join(simplex_closure(k, s), link(k, s));
      EXPECT_EQ(st.all_simplices(), jn.all_simplices());
    }
  }
}

TEST(Subcomplex, NeighborhoodExamples) {
  auto sq = hollow_square();
  auto n = neighborhood(sq, idx(sq, {"a"}));
  EXPECT_EQ(n.count(0), 3u);
  EXPECT_EQ(n.count(1), 2u);
  EXPECT_TRUE(is_acyclic(n, Z));

  // For a vertex of the hollow triangle N(σ) is the path b-a-c; an edge
  // meets all three edges and gives the whole circle.
  auto tri = hollow_triangle();
  EXPECT_TRUE(is_acyclic(neighborhood(tri, idx(tri, {"a"})), Z));
  auto ne = neighborhood(tri, idx(tri, {"a", "b"}));
  EXPECT_EQ(ne.all_simplices(), tri.all_simplices());
  EXPECT_EQ(reduced_homology(ne, Z).rank(1), 1u);

  auto full = full_simplex(4);
  for (const auto& s : full.all_simplices()) EXPECT_EQ(neighborhood(full, s).size(), full.size());
  EXPECT_THROW(neighborhood(sq, idx(sq, {"a", "c"})), PreconditionError);
}

TEST(Subcomplex, FlagNeighborhoodsAndStarsAreAcyclic) {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 12; ++trial) {
    auto k = random_flag_complex(12, 0.3 + 0.03 * trial, rng);
    for (const auto& s : k.all_simplices()) {
      ASSERT_TRUE(is_acyclic(neighborhood(k, s), Z)) << k.describe(s);
      ASSERT_TRUE(is_acyclic(delta_sigma(k, s), Z)) << k.describe(s);
    }
  }
}

TEST(Tensor, KunnethExamples) {
  auto f = Coefficients::mod(5);
  auto circle = polygon(4).chains(f);
  auto t = tensor_total(circle, circle);
  EXPECT_TRUE(t.squares_to_zero());
  EXPECT_EQ(ranks(homology(t), 2), (std::vector<std::size_t>{1, 2, 1}));

  auto b = rp2().chains(Coefficients::mod(2));
  auto point = full_simplex(1).chains(Coefficients::mod(2));
  EXPECT_TRUE(homology(tensor_total(point, b)).isomorphic_to(homology(b)));
  auto interval = full_simplex(2).chains(Coefficients::mod(2));
  EXPECT_TRUE(homology(tensor_total(interval, b)).isomorphic_to(homology(b)));
  EXPECT_THROW(tensor_total(circle, b), InputError);
}

TEST(Tensor, KunnethOverFieldsRandom) {
  std::mt19937_64 rng(17);
  for (std::uint32_t p : {2u, 3u}) {
    for (int trial = 0; trial < 10; ++trial) {
      auto a = random_flag_complex(6, 0.6, rng), b = random_flag_complex(5, 0.6, rng);
      auto ca = a.chains(Coefficients::mod(p)), cb = b.chains(Coefficients::mod(p));
      auto ha = homology(ca), hb = homology(cb), ht = homology(tensor_total(ca, cb));
      for (int n = 0; n <= a.dimension() + b.dimension(); ++n) {
        std::size_t expect = 0;
        for (int i = 0; i <= n; ++i) expect += ha.rank(i) * hb.rank(n - i);
        EXPECT_EQ(ht.rank(n), expect);
      }
    }
  }
}

TEST(Chains, BoundarySquaresToZero) {
  std::mt19937_64 rng(18);
  for (int trial = 0; trial < 10; ++trial) {
    auto k = random_flag_complex(9, 0.5, rng);
    EXPECT_TRUE(k.chains(Z).squares_to_zero());
    auto d = build_diagonal(k);
    EXPECT_TRUE(d.parent().chains(Z).squares_to_zero());
    EXPECT_TRUE(d.chains(Z).squares_to_zero());
    EXPECT_TRUE(d.relative_chains(Z).squares_to_zero());
  }
}

TEST(Io, ComplexJsonRoundTripAndErrors) {
  auto j = parse_json_text(R"({"vertices":["a","b","c","z"],"facets":[["a","b"],["b","c"]]})");
  auto k = complex_from_json(j);
  EXPECT_EQ(k.count(0), 4u);  // z is an isolated point
  EXPECT_EQ(homology(k, Z).rank(0), 2u);
  auto k2 = complex_from_json(complex_to_json(k));
  EXPECT_EQ(k2.all_simplices(), k.all_simplices());
  EXPECT_THROW(complex_from_json(parse_json_text(R"({"vertices":["a"],"facets":[["a","q"]]})")), InputError);
  EXPECT_THROW(complex_from_json(parse_json_text(R"({"vertices":[],"facets":[]})")), InputError);
  EXPECT_THROW(parse_json_text("{not json"), InputError);
  EXPECT_THROW(Coefficients::parse("F4"), InputError);
}

// ---------------------------------------------------------------------------
// diagonal

TEST(Diagonal, SingleEdge) {
  auto e = full_simplex(2);
  auto d = build_diagonal(e);
  EXPECT_TRUE(d.closed());
  EXPECT_TRUE(d.contains_all_diagonal_cells());
  EXPECT_EQ(d.count(0), 4u);
  EXPECT_EQ(d.count(1), 4u);
  EXPECT_EQ(d.count(2), 1u);
  EXPECT_EQ(reduced(homology(d.chains(Z))).is_trivial(), true);
}

TEST(Diagonal, ProductCellCounts) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 8; ++trial) {
    auto k = random_flag_complex(7, 0.5, rng);
    ProductChainComplex p(k, k);
    for (int n = 0; n <= 2 * k.dimension(); ++n) {
      std::size_t expect = 0;
      for (int i = 0; i <= n; ++i) expect += k.count(i) * k.count(n - i);
      EXPECT_EQ(p.count(n), expect);
    }
  }
}

TEST(Diagonal, RetractionExamples) {
  auto r = check_retraction(hollow_square(), Z);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(ranks(r.diagonal, 1), (std::vector<std::size_t>{1, 1}));
  EXPECT_TRUE(check_retraction(full_simplex(4), Z).pass);
  EXPECT_TRUE(reduced(check_retraction(full_simplex(4), Z).diagonal).is_trivial());
}

TEST(Diagonal, RetractionOnRandomFlagComplexes) {
  std::mt19937_64 rng(20);
  for (int trial = 0; trial < 15; ++trial) EXPECT_TRUE(check_retraction(random_flag_complex(9, 0.45, rng), Z).pass);
}

TEST(Diagonal, DecompositionCounts) {
  auto r = decomposition_check(hollow_square());
  EXPECT_TRUE(r.pass);
  std::map<std::pair<int, int>, std::pair<std::size_t, std::size_t>> cells;
  for (const auto& row : r.rows) cells[{row.i, row.j}] = {row.diagonal_cells, row.star_cells};
  EXPECT_EQ((cells[{0, 0}]), (std::pair<std::size_t, std::size_t>{12, 12}));
  EXPECT_EQ((cells[{0, 1}]), (std::pair<std::size_t, std::size_t>{8, 8}));
  EXPECT_TRUE(decomposition_check(full_simplex(3)).pass);
  auto pt = decomposition_check(full_simplex(1));
  EXPECT_TRUE(pt.pass);
  ASSERT_EQ(pt.rows.size(), 1u);
  EXPECT_EQ(pt.rows[0].diagonal_cells, 1u);
}

TEST(Diagonal, QuotientTwoPoints) {
  auto two = make({"p", "q"}, {{"p"}, {"q"}});
  auto r = quotient_vanishing(two, Z, 1);
  // four vertex pairs, two on the diagonal: the relative H_0 is free of rank 2
  EXPECT_EQ(r.relative.rank(0), 2u);
  EXPECT_FALSE(r.pass);
  EXPECT_TRUE(r.bookkeeping_exact && r.euler_consistent && r.differentials_consistent && r.e1_matches_decomposition);
}

TEST(Diagonal, QuotientHollowSquare) {
  auto r = quotient_vanishing(hollow_square(), Z, 2);
  EXPECT_EQ(ranks(r.relative, 2), (std::vector<std::size_t>{0, 1, 1}));
  EXPECT_EQ(r.nonvanishing_at_or_above, (std::vector<int>{1, 2}));
  EXPECT_TRUE(r.bookkeeping_exact && r.euler_consistent && r.differentials_consistent && r.e1_matches_decomposition);
  auto s = quotient_vanishing(full_simplex(3), Z, 1);
  EXPECT_TRUE(s.pass);
}

TEST(Diagonal, DoubleComplexOnRandomFlagComplexes) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 6; ++trial) {
    auto k = random_flag_complex(6, 0.5, rng);
    auto r = quotient_vanishing(k, Z, 2 * k.dimension() + 1);
    EXPECT_TRUE(r.differentials_consistent);
    EXPECT_TRUE(r.bookkeeping_exact);
    EXPECT_TRUE(r.euler_consistent);
    EXPECT_TRUE(r.e1_matches_decomposition);
  }
}

TEST(Diagonal, PuncturedTorusSquareBoundary) {
  auto t = seven_vertex_torus(true);
  auto dt = surface_boundary(t);
  auto cells = product_boundary_cells(t, dt, t, dt);
  EXPECT_TRUE(closed_under_boundary(cells));
  auto h = homology(cellular_chains(cells, product_faces, Z, false));
  EXPECT_EQ(ranks(h, 3), (std::vector<std::size_t>{1, 4, 4, 1}));
  EXPECT_FALSE(h.has_torsion());
  // closed torus: T x T has no boundary, but the formula with empty boundaries is empty
  auto full = seven_vertex_torus(false);
  auto none = surface_boundary(full);
  EXPECT_EQ(none.size(), 0u);
}

// ---------------------------------------------------------------------------
// smallness

TEST(Smallness, HdimParsing) {
  EXPECT_EQ(HdimValue::parse("3").value, 3);
  EXPECT_FALSE(HdimValue::parse("3").bound);
  EXPECT_TRUE(HdimValue::parse("≤3").bound);
  EXPECT_EQ(HdimValue::parse("<=4").value, 4);
  EXPECT_THROW(HdimValue::parse("x"), InputError);
  EXPECT_THROW(HdimValue::parse("-1"), InputError);
}

TEST(Smallness, JoinModelTwo) {
  auto x = generate_join_model(2);
  EXPECT_EQ(x.boundary_dim, 3);
  int vertices = 0;
  for (const auto& o : x.orbits) {
    EXPECT_EQ(o.hdim.value, 2);
    vertices += o.dim == 0;
  }
  EXPECT_EQ(vertices, 2);
  auto r = check_small(x);
  EXPECT_EQ(r.status, SmallStatus::small);
  EXPECT_TRUE(r.equality_in_single);
  bool same_factor = false;
  for (const auto& row : r.pairs) {
    if (row.sigma != row.tau) continue;
    same_factor = true;
    EXPECT_LE(row.hdim.value, 1);
    EXPECT_LT(row.lhs, 3);
  }
  EXPECT_TRUE(same_factor);
  auto c = vanishing_certificate(x);
  EXPECT_EQ(c.status, SmallStatus::small);
  EXPECT_EQ(c.n, 4);
  for (const auto& b : c.bidegrees) EXPECT_TRUE(b.certified);
}

TEST(Smallness, JoinModelsUpToSix) {
  for (int d = 2; d <= 6; ++d) {
    auto x = generate_join_model(d);
    EXPECT_EQ(x.boundary_dim, 2 * d - 1);
    auto r = check_small(x);
    EXPECT_EQ(r.status, SmallStatus::small) << d;
    EXPECT_TRUE(r.equality_in_single) << d;
    EXPECT_EQ(vanishing_certificate(x).status, SmallStatus::small) << d;
    int max1 = 0;
    for (const auto& row : r.single) max1 = std::max(max1, row.lhs);
    EXPECT_EQ(max1, 2 * d - 1);
  }
  EXPECT_THROW(generate_join_model(1), PreconditionError);
  EXPECT_THROW(generate_join_model(17), PreconditionError);
}

TEST(Smallness, TrivialAndViolatingToys) {
  OrbitComplex pt;
  pt.boundary_dim = 0;
  pt.complete = true;
  pt.orbits = {{"p", 0, HdimValue::exact(0)}};
  auto r = check_small(pt);
  EXPECT_EQ(r.status, SmallStatus::small);
  EXPECT_TRUE(r.pairs.empty());
  auto pc = vanishing_certificate(pt);
  EXPECT_EQ(pc.status, SmallStatus::small);

  OrbitComplex bad;
  bad.boundary_dim = 2;
  bad.complete = true;
  bad.orbits = {{"u", 0, HdimValue::exact(2)}, {"v", 0, HdimValue::exact(2)}};
  bad.pairs = {{"u", "v", true, HdimValue::exact(2), "disjoint"}};
  auto rb = check_small(bad);
  EXPECT_EQ(rb.status, SmallStatus::violation);
  ASSERT_TRUE(rb.first_violation.has_value());
  EXPECT_EQ(rb.first_violation->lhs, 2);
  auto cb = vanishing_certificate(bad);
  EXPECT_EQ(cb.status, SmallStatus::violation);
  ASSERT_EQ(cb.uncertified().size(), 1u);
  EXPECT_EQ(cb.uncertified()[0].first, 0);
  for (const auto& b : cb.bidegrees) EXPECT_TRUE(b.certified || !b.blocking.empty());

  bad.complete = false;
  EXPECT_EQ(check_small(bad).status, SmallStatus::inconclusive);
  EXPECT_EQ(vanishing_certificate(bad).status, SmallStatus::inconclusive);
}

TEST(Smallness, EmptySimplexNeedsGroupDimension) {
  OrbitComplex x = generate_join_model(2);
  x.include_empty = true;
  x.group_hdim.reset();
  EXPECT_THROW(x.validate(), InputError);
  x.group_hdim = HdimValue::exact(4);
  EXPECT_NO_THROW(x.validate());
  // hdim F2 x F2 = 2 with |∅| = -1 gives 1 <= 3
  x.group_hdim = HdimValue::exact(2);
  EXPECT_EQ(check_small(x).status, SmallStatus::small);
  x.group_hdim = HdimValue::exact(5);
  EXPECT_EQ(check_small(x).status, SmallStatus::violation);
}

TEST(Smallness, SmallImpliesCertified) {
  std::mt19937_64 rng(22);
  std::uniform_int_distribution<int> h(0, 4), dm(0, 2), bd(2, 6), coin(0, 3);
  int small = 0;
  for (int trial = 0; trial < 400; ++trial) {
    OrbitComplex x;
    x.boundary_dim = bd(rng);
    x.complete = true;
    const int n = 1 + trial % 4;
    for (int i = 0; i < n; ++i) x.orbits.push_back({"o" + std::to_string(i), dm(rng), HdimValue::exact(h(rng))});
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) x.pairs.push_back({x.orbits[i].label, x.orbits[j].label, coin(rng) != 0,
                                                     coin(rng) ? HdimValue::exact(h(rng)) : HdimValue::at_most(h(rng)), ""});
    auto r = check_small(x);
    auto c = vanishing_certificate(x);
    if (r.status == SmallStatus::small) {
      ++small;
      EXPECT_EQ(c.status, SmallStatus::small) << orbit_complex_to_json(x).dump();
    }
  }
  EXPECT_GT(small, 10);
}

TEST(Smallness, OrbitJsonRoundTrip) {
  auto x = generate_join_model(3);
  auto y = orbit_complex_from_json(orbit_complex_to_json(x));
  EXPECT_EQ(orbit_complex_to_json(y), orbit_complex_to_json(x));
  EXPECT_THROW(orbit_complex_from_json(parse_json_text(R"({"boundary_dim":2,"orbits":[]})")), InputError);
  EXPECT_THROW(orbit_complex_from_json(parse_json_text(
                   R"({"boundary_dim":2,"complete":true,"orbits":[{"label":"a","dim":0,"hdim":1}],"pairs":[{"a":"a","b":"z","hdim":0}]})")),
               InputError);
}

TEST(SimplyConnected, SupportExamples) {
  auto t = seven_vertex_torus(true);
  auto dt = surface_boundary(t);
  auto h = homology(cellular_chains(product_boundary_cells(t, dt, t, dt), product_faces, Z, false));
  auto r = simply_connected_obstruction({4, 1, h});
  EXPECT_EQ(r.verdict, Verdict::obstructed);
  EXPECT_EQ(r.offending_degrees, (std::vector<int>{1, 2}));

  for (int n = 2; n <= 6; ++n)
    for (int q = 1; q <= n; ++q)
      EXPECT_EQ(simply_connected_obstruction({n, q, homology(simplex_boundary(static_cast<std::size_t>(n + 1)), Z)}).verdict,
                Verdict::inconclusive);

  auto torsion = homology_from_json(parse_json_text(
      R"([{"degree":0,"rank":1,"torsion":[]},{"degree":2,"rank":0,"torsion":[2]},{"degree":5,"rank":1,"torsion":[]}])"));
  auto rt = simply_connected_obstruction({6, 3, torsion});
  EXPECT_EQ(rt.verdict, Verdict::obstructed);
  EXPECT_EQ(rt.torsion_degrees, std::vector<int>{2});
  EXPECT_THROW(simply_connected_obstruction({3, 0, torsion}), InputError);
}

TEST(SimplyConnected, Monotone) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> nn(2, 8), rk(0, 2);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = nn(rng);
    const int q = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    std::vector<HomologyGroup> g;
    for (int d = 0; d < n; ++d) g.push_back({d, static_cast<std::size_t>(rk(rng)), {}});
    HomologyTable h(Z, g, false);
    auto before = simply_connected_obstruction({n, q, h}).verdict;
    const int extra = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    auto allowed = simply_connected_obstruction({n, q, h}).allowed;
    if (std::find(allowed.begin(), allowed.end(), extra) != allowed.end()) continue;
    g[static_cast<std::size_t>(extra)].rank += 1;
    auto after = simply_connected_obstruction({n, q, HomologyTable(Z, g, false)}).verdict;
    EXPECT_EQ(after, Verdict::obstructed) << "was " << to_string(before);
  }
}

TEST(SimplyConnected, Parity) {
  // m = 4: q - 1 = 2, d = 6
  auto r = parity_obstruction(9, 3, true);
  EXPECT_EQ(r.verdict, Verdict::obstructed);
  EXPECT_EQ(r.d, 6);
  EXPECT_EQ(parity_obstruction(8, 2, true).verdict, Verdict::inconclusive);
  EXPECT_EQ(parity_obstruction(9, 3, false).verdict, Verdict::inconclusive);
}
