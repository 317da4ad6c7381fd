#include "doctest.h"
#include "toughtree/generate.hpp"
#include "toughtree/graph_io.hpp"
#include "toughtree/invariants.hpp"
#include "toughtree/theorems.hpp"

using namespace toughtree;

namespace {

const TheoremParams k3t1{3, 1};

}  // namespace

TEST_CASE("required toughness and thresholds") {
  const ThresholdSet th = thresholds(k3t1, 27);
  CHECK(th.n_edge == 27);
  CHECK(th.n_rho == 15);
  CHECK(th.n_q == 34);
  CHECK(th.tau_required == Rational(1, 2));
  CHECK(th.edge_bound == 246);

  const ThresholdSet k4 = thresholds({4, 1}, 19);
  CHECK(k4.tau_required == Rational(1, 3));
  CHECK(k4.n_rho == 19);
  CHECK(k4.n_edge_exact == Rational(45, 2));
  CHECK(k4.n_edge == 23);

  CHECK_THROWS(thresholds({2, 1}, 10));
  CHECK_THROWS(thresholds({3, 0}, 10));
}

TEST_CASE("required toughness lies in [1/(k-1), 1/(k-2))") {
  for (std::size_t k = 3; k <= 12; ++k) {
    for (std::size_t t = 1; t <= 12; ++t) {
      const Rational tau = TheoremParams{k, t}.required_toughness();
      const Rational lower(1, static_cast<long long>(k - 1));
      const Rational upper(1, static_cast<long long>(k - 2));
      CHECK(lower <= tau);
      CHECK(tau < upper);
      CHECK((tau == lower) == (t == 1));
    }
  }
}

TEST_CASE("extremal family sits on every boundary") {
  for (const TheoremParams p : {TheoremParams{3, 1}, TheoremParams{4, 1}, TheoremParams{3, 2}, TheoremParams{5, 1}}) {
    const std::size_t n = thresholds(p, 1).n_rho;
    const ThresholdSet th = thresholds(p, n);
    const Graph g = build_split_family(*th.extremal);
    CAPTURE(n);
    CHECK(BigInt(g.edge_count()) == th.edge_bound);
    const VertexMask hubs = (VertexMask{1} << th.extremal->hubs) - 1;
    CHECK(components_after_removal(g, hubs) == 3 * p.t * (p.k - 2) + 3);
    const auto tough = toughness(g);
    CHECK(*tough.value == p.required_toughness());
    CHECK(components_after_removal(g, vertices_to_mask(tough.witness)) * *tough.value == tough.witness.size());
  }
}

TEST_CASE("Theorem 1.1 check") {
  const auto k27 = check_theorem_1(complete(27), k3t1);
  CHECK(k27.status == Status::holds_with_ktree);
  REQUIRE(k27.witness.certificate);
  CHECK(validate_ktree(complete(27), 3, *k27.witness.certificate));
  CHECK(check_theorem_1(cycle(27), k3t1).status == Status::hypothesis_failed);
  CHECK(check_theorem_1(path(10), k3t1).status == Status::hypothesis_failed);

  // The extremal graph meets the size bound with equality, so it fails e > bound.
  const auto ext = check_theorem_1(build_split_family(extremal_params(3, 1, 27)), k3t1);
  CHECK(ext.status == Status::hypothesis_failed);
}

TEST_CASE("Theorem 1.2 check") {
  CHECK(check_theorem_2(complete(15), k3t1).status == Status::holds_with_ktree);
  const auto c15 = check_theorem_2(cycle(15), k3t1);
  CHECK(c15.status == Status::hypothesis_failed);
  REQUIRE(c15.witness.enclosure);
  CHECK(c15.witness.enclosure->contains(2.0));
  CHECK(check_theorem_2(build_split_family({3, 5, 5}), k3t1).status == Status::hypothesis_failed);

  // Not tough enough: toughness witness recorded.
  const auto s = check_theorem_2(star(14), k3t1);
  CHECK(s.status == Status::hypothesis_failed);
  CHECK(s.witness.cut_set == std::vector<Vertex>{0});

  // The extremal graph itself: spectral comparison with itself is inconclusive,
  // so the hypothesis is taken as met and the exact search decides.
  const Graph ext = build_split_family(extremal_params(3, 1, 15));
  const auto e = check_theorem_2(ext, k3t1, {.refinements = 2});
  CHECK(e.status == Status::holds_with_ktree);
}

TEST_CASE("Theorem 1.3 check") {
  CHECK(check_theorem_3(complete(34), k3t1).status == Status::holds_with_ktree);
  const auto s = check_theorem_3(star(33), k3t1);
  CHECK(s.status == Status::hypothesis_failed);
  REQUIRE(s.witness.cut_set);
  CHECK(check_theorem_3(build_split_family({3, 24, 5}), k3t1).status == Status::hypothesis_failed);
}

TEST_CASE("cache gives the same verdicts") {
  ExtremalCache cache;
  Rng rng(41);
  for (int i = 0; i < 20; ++i) {
    const Graph g = complete_minus_edges(15, 6, rng);
    const Verdict a = check_theorem_2(g, k3t1);
    const Verdict b = check_theorem_2(g, k3t1, {}, &cache);
    CHECK(a.status == b.status);
    CHECK(a.witness.ktree_transcript_hash == b.witness.ktree_transcript_hash);
  }
}

TEST_CASE("Win lemma check") {
  const auto k5 = check_lemma_win(complete(5), 3);
  CHECK(k5.status == Status::holds_with_ktree);
  const auto st = check_lemma_win(star(5), 3);
  CHECK(st.status == Status::hypothesis_failed);
  CHECK(st.witness.ktree_exists == false);
  CHECK(check_lemma_win(cycle(6), 3).status == Status::holds_with_ktree);
}

TEST_CASE("edge-maximisation lemma") {
  const auto v = check_lemma_edge_max(10, 2, {4, 2, 2});
  CHECK(v.status == Status::holds);
  CHECK(v.witness.equality_class == "strict");
  CHECK(check_lemma_edge_max(10, 2, {6, 1, 1}).witness.equality_class == "equality");
  CHECK(check_lemma_edge_max(8, 1, {3, 2, 2}).status == Status::holds);
  CHECK_THROWS(check_lemma_edge_max(10, 2, {2, 4, 2}));
  CHECK_THROWS(check_lemma_edge_max(10, 2, {4, 2}));
}

TEST_CASE("spectral maximisation lemma") {
  CHECK(check_lemma_spectral_max(10, 2, {3, 3, 2}, 2, MatrixKind::adjacency).status == Status::holds);
  CHECK(check_lemma_spectral_max(9, 1, {3, 3, 2}, 1, MatrixKind::signless_laplacian).status == Status::holds);
  CHECK_THROWS_AS(check_lemma_spectral_max(10, 2, {6, 2}, 2, MatrixKind::adjacency), std::invalid_argument);
  CHECK_THROWS_AS(check_lemma_spectral_max(10, 2, {4, 3, 1}, 2, MatrixKind::adjacency), std::invalid_argument);
}

TEST_CASE("Hong and Das checks") {
  const auto k6 = check_bound_hong(complete(6));
  CHECK(k6.status != Status::counterexample);
  CHECK(k6.witness.equality_class == "complete");
  const auto st = check_bound_hong(star(4));
  CHECK(st.witness.equality_class == "star");
  const auto p5 = check_bound_hong(path(5));
  CHECK(p5.status == Status::holds);
  CHECK_FALSE(p5.witness.equality_class);
  CHECK(p5.witness.reversed_direction_holds == false);

  CHECK(check_bound_das(complete(5)).witness.equality_class == "complete");
  CHECK(check_bound_das(cycle(4)).status == Status::holds);
  CHECK(check_bound_das(star(3)).witness.equality_class == "star");
}

TEST_CASE("re-verification of verdicts") {
  const Verdict v = check_theorem_2(complete(15), k3t1);
  CHECK(reverify(v, complete(15), k3t1));
  Verdict tampered = v;
  tampered.witness.ktree_transcript_hash = 1;
  CHECK_FALSE(reverify(tampered, complete(15), k3t1));

  // A fabricated counterexample does not survive re-verification.
  Verdict fake = check_lemma_win(cycle(6), 3);
  fake.status = Status::counterexample;
  fake.counterexample = CounterexampleBundle{write_graph6(cycle(6)), {}, "1", 0};
  CHECK_FALSE(reverify(fake, cycle(6), k3t1));
}

TEST_CASE("proof polynomial audit") {
  SUBCASE("threshold tightness at (3,1,15)") {
    CHECK(proof_poly_f(k3t1, 15, 4) == 94);
    CHECK(proof_poly_f(k3t1, 15, 6) == 94);
    const AuditReport r = audit_proof_polynomials(k3t1, 15);
    CHECK(r.s_min == 4);
    CHECK(r.s_max == 6);
    const AuditCondition* d = r.find("d");
    REQUIRE(d);
    CHECK(d->holds);
    CHECK(proof_poly_f(k3t1, 15, 4) - proof_poly_f(k3t1, 15, Rational(12, 2)) == 0);
    CHECK(r.find("b")->holds);
    CHECK_FALSE(r.find("a")->applicable);
    CHECK(r.all_hold());
  }
  SUBCASE("edge difference at n = 27") {
    const AuditReport r = audit_proof_polynomials(k3t1, 27);
    const AuditCondition* a = r.find("a");
    REQUIRE(a);
    CHECK(a->applicable);
    CHECK(a->holds);
    CHECK(r.s_max == 12);
    for (std::size_t s = 4; s <= 12; ++s) CHECK(edge_difference(k3t1, 27, s) >= 0);
  }
  SUBCASE("rational endpoint at n = 16") {
    const AuditReport r = audit_proof_polynomials(k3t1, 16);
    const Rational diff = proof_poly_f(k3t1, 16, 4) - proof_poly_f(k3t1, 16, Rational(13, 2));
    CHECK(diff > 0);
    CHECK(r.find("d")->holds);
  }
  SUBCASE("g constant term readings") {
    const AuditReport r = audit_proof_polynomials(k3t1, 34);
    CHECK(r.find("c")->holds);
    CHECK(r.find("g_constant_2n2")->holds);
    CHECK_FALSE(r.find("g_constant_n2")->holds);
    CHECK_FALSE(r.find("qK_literal")->holds);
    CHECK(r.find("qK_corrected")->holds);
    // The expanded edge count drops (k-2)^2 s(s-1); at s = 4 that is 12.
    const AuditCondition* e = r.find("e_G2_expansion");
    REQUIRE(e);
    CHECK_FALSE(e->holds);
    REQUIRE_FALSE(e->violations.empty());
    CHECK(e->violations.front() == std::pair<std::string, std::string>{"4", "12"});
  }
  SUBCASE("below every gate nothing is asserted") {
    const AuditReport r = audit_proof_polynomials(k3t1, 10);
    for (const auto& c : r.conditions) CHECK_FALSE(c.applicable);
    CHECK(r.all_hold());
  }
}
