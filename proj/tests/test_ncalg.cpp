#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qd/ncalg.hpp"

#include <random>

using namespace qd;

namespace {

FamilyParams special_point() {
  FamilyParams p;
  p.alpha = 1;
  p.beta = 1;
  p.gamma = -1;
  return p;
}

AlgebraPresentation free_algebra(int gens) {
  AlgebraPresentation A;
  for (int g = 0; g < gens; ++g) A.gen_names.push_back(std::string(1, static_cast<char>('a' + g)));
  return A;
}

}  // namespace

TEST_CASE("poly arithmetic, parsing and printing") {
  std::vector<std::string> names = {"x1", "x2", "y1"};
  NcPoly p = poly_parse("x1*y1 - (1/2)*z(8)^1*y1*x1", names);
  CHECK(p.terms.size() == 2);
  CHECK(poly_str(p, names) == "x1*y1 - (1/2)*z(8)^1*y1*x1");
  CHECK(poly_parse(poly_str(p, names), names) == p);

  NcPoly q = poly_parse("(x1 + x2)^2", names);
  CHECK(q == poly_parse("x1^2 + x1*x2 + x2*x1 + x2^2", names));
  CHECK(poly_parse("x1*x2 - x1*x2", names).is_zero());
  CHECK(poly_parse("i^2", names) == poly_const(Cyclotomic(-1)));
  CHECK_THROWS_AS(poly_parse("q1*x1", names), std::invalid_argument);

  // lead term is the deglex-largest word
  NcPoly r = poly_parse("y1*x1 + x1*y1", names);
  CHECK(r.lead_word() == Word({0, 2}));
}

TEST_CASE("featured presentations") {
  AlgebraPresentation B = d4_algebra(special_point());
  REQUIRE(B.relations.size() == 15);
  // the fifteen special-parameter relations, verbatim
  for (const char* rel : {
           "x1*x2 - x2*x1", "y1*y2 - y2*y1", "z1*z2 + z2*z1",
           "x2*y1 - y1*x1", "x1*y2 + y2*x2", "x2*y2 + y2*x1", "x1*y1 - y1*x2",
           "x2*z1 - i*z1*x1", "i*x1*z2 - z2*x2", "i*x2*z2 - z2*x1", "x1*z1 - i*z1*x2",
           "y2*z1 - z1*y2", "y1*z2 - z2*y1", "y1*z1 - z1*y1", "y2*z2 - z2*y2"}) {
    NcPoly want = B.parse(rel);
    bool found = false;
    for (const NcPoly& r : B.relations)
      if (r == want || r == -want) found = true;
    INFO("relation ", rel);
    CHECK(found);
  }
  // generator grades s, sr^2, sr, sr^3, sr, sr^3
  const FiniteGroup& G = *B.group;
  int s = G.generator("s"), r = G.generator("r");
  CHECK(B.gen_grade == std::vector<int>{s, G.mul(s, G.power(r, 2)), G.mul(s, r),
                                        G.mul(s, G.power(r, 3)), G.mul(s, r), G.mul(s, G.power(r, 3))});
  // every relation is grade-homogeneous
  for (const NcPoly& rel : B.relations) {
    int g = B.word_grade(rel.lead_word());
    CHECK(grade_component(B, rel, g) == rel);
  }

  AlgebraPresentation B8 = d8_algebra(FamilyParams{});
  CHECK(B8.relations.size() == 28);
  bool has13 = false;
  for (const NcPoly& rel : B8.relations)
    if (rel == B8.parse("x1*x3 + x3*x1")) has13 = true;
  CHECK(has13);

  AlgebraPresentation C = s3_candidate(2);
  REQUIRE(C.relations.size() == 3);
  CHECK(C.relations[0] == C.parse("x^2"));
  CHECK(C.relations[1] == C.parse("y^2"));
  CHECK(C.relations[2] == C.parse("z^2"));

  FamilyParams bad;
  bad.u1 = Cyclotomic(0);
  CHECK_THROWS_AS(d4_algebra(bad), std::invalid_argument);
  CHECK_THROWS_AS(s3_candidate(7), std::invalid_argument);
}

TEST_CASE("relation span is a D(G)-submodule") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> sign(0, 1), upick(0, 2);
  const Cyclotomic us[3] = {Cyclotomic(1), Cyclotomic::imag(), Cyclotomic(2)};
  for (int rep = 0; rep < 4; ++rep) {
    FamilyParams p;
    p.alpha = sign(rng) ? 1 : -1;
    p.beta = sign(rng) ? 1 : -1;
    p.gamma = sign(rng) ? 1 : -1;
    p.u1 = us[upick(rng)];
    p.u2 = us[upick(rng)];
    p.u3 = us[upick(rng)];
    p.u4 = us[upick(rng)];
    CHECK(relation_submodule_check(d4_algebra(p)));
    CHECK(relation_submodule_check(d8_algebra(p)));
  }
  for (int which : {2, 3, 4, 5}) CHECK(relation_submodule_check(s3_candidate(which)));

  // dropping x1*y2 + u1*y2*x2 breaks stability under r
  AlgebraPresentation B = d4_algebra(special_point());
  NcPoly dropped = B.parse("x1*y2 + y2*x2");
  AlgebraPresentation broken = B;
  broken.relations.clear();
  for (const NcPoly& r : B.relations)
    if (!(r == dropped)) broken.relations.push_back(r);
  REQUIRE(broken.relations.size() == 14);
  CHECK_FALSE(relation_submodule_check(broken));

  // commutative relations with a trivial action pass
  AlgebraPresentation comm;
  comm.gen_names = {"a", "b"};
  comm.relations = {poly_parse("a*b - b*a", comm.gen_names)};
  HopfAction triv;
  triv.group = std::make_shared<const FiniteGroup>(FiniteGroup::dicyclic(2));
  auto all = simples(*triv.group);
  triv.summands = {all[0], all[0]};
  triv.slot = {{0, 0}, {1, 0}};
  comm.action = triv;
  comm.group = triv.group;
  comm.gen_grade = {0, 0};
  CHECK(relation_submodule_check(comm));
}

TEST_CASE("Groebner bases of the featured algebras") {
  AlgebraPresentation K = free_algebra(2);
  K.relations = {poly_parse("a*b - b*a", K.gen_names)};
  for (int d : {2, 4, 6}) {
    GroebnerBasis gb = groebner(K, d);
    REQUIRE(gb.elems.size() == 1);
    CHECK(gb.elems[0] == K.relations[0]);
  }

  // the fifteen D4 relations are already a Groebner basis
  AlgebraPresentation B = d4_algebra(special_point());
  GroebnerBasis gb = groebner(B, 6);
  CHECK(gb.elems.size() == 15);
  for (const NcPoly& e : gb.elems) CHECK(e.degree() == 2);

  // and for sampled parameters too
  FamilyParams p2;
  p2.alpha = -1;
  p2.beta = 1;
  p2.gamma = -1;
  p2.u1 = Cyclotomic::imag();
  p2.u4 = Cyclotomic(3);
  CHECK(groebner(d4_algebra(p2), 5).elems.size() == 15);

  // the three S3 candidate relations form a Groebner basis for V0+V3
  GroebnerBasis gb3 = groebner(s3_candidate(3), 5);
  CHECK(gb3.elems.size() == 3);
}

TEST_CASE("Hilbert coefficients") {
  std::vector<long> free2 = hilbert_coeffs(free_algebra(2), 3);
  CHECK(free2 == std::vector<long>{1, 2, 4, 8});

  std::vector<long> d4 = hilbert_coeffs(d4_algebra(special_point()), 5);
  CHECK(d4 == std::vector<long>{1, 6, 21, 56, 126, 252});

  std::vector<long> d8 = hilbert_coeffs(d8_algebra(FamilyParams{}), 4);
  CHECK(d8 == std::vector<long>{1, 8, 36, 120, 330});
}

TEST_CASE("normal forms and zero divisors") {
  AlgebraPresentation C3 = s3_candidate(3);
  GroebnerBasis gb = groebner(C3, 6);
  NcPoly p = C3.parse("x + y + z");
  NcPoly q = C3.parse("y*x - y*z + z*y - z^2");
  CHECK(!normal_form(p, gb).is_zero());
  CHECK(!normal_form(q, gb).is_zero());
  CHECK(zero_divisor_witness(p, q, gb));

  AlgebraPresentation C4 = s3_candidate(4);
  GroebnerBasis gb4 = groebner(C4, 6);
  NcPoly a = C4.parse("z(3)^2*x + y + z");
  NcPoly b = C4.parse("z(3)^1*x + y + z");
  CHECK(zero_divisor_witness(a, b, gb4));

  AlgebraPresentation C2 = s3_candidate(2);
  GroebnerBasis gb2 = groebner(C2, 6);
  CHECK(zero_divisor_witness(C2.parse("x"), C2.parse("x"), gb2));

  CHECK_THROWS_AS(zero_divisor_witness(C3.parse("x*y*z*x"), C3.parse("x*y*z"), gb),
                  std::invalid_argument);

  // no witnesses among random low-degree pairs in the D4 domain
  AlgebraPresentation B = d4_algebra(special_point());
  GroebnerBasis gbb = groebner(B, 6);
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> letter(0, 5), len(1, 3), coef(-2, 2);
  auto rnd_poly = [&] {
    NcPoly f;
    for (int t = 0; t < 3; ++t) {
      Word w;
      int l = len(rng);
      for (int k = 0; k < l; ++k) w.push_back(static_cast<char>(letter(rng)));
      poly_add_term(f, w, Cyclotomic(coef(rng)));
    }
    return f;
  };
  for (int rep = 0; rep < 1000; ++rep) {
    NcPoly f = rnd_poly(), g = rnd_poly();
    if (normal_form(f, gbb).is_zero() || normal_form(g, gbb).is_zero()) continue;
    CHECK_FALSE(zero_divisor_witness(f, g, gbb));
  }
}

TEST_CASE("normal form is canonical and respects grading") {
  AlgebraPresentation B = d4_algebra(special_point());
  GroebnerBasis gb = groebner(B, 8);
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> letter(0, 5), len(1, 3), coef(-2, 2);
  auto rnd_poly = [&] {
    NcPoly f;
    for (int t = 0; t < 2; ++t) {
      Word w;
      int l = len(rng);
      for (int k = 0; k < l; ++k) w.push_back(static_cast<char>(letter(rng)));
      poly_add_term(f, w, Cyclotomic(coef(rng)));
    }
    return f;
  };
  for (int rep = 0; rep < 40; ++rep) {
    NcPoly f = rnd_poly(), g = rnd_poly();
    NcPoly nf = normal_form(f, gb), ng = normal_form(g, gb);
    CHECK(normal_form(nf, gb) == nf);  // idempotent
    CHECK(normal_form(f + g, gb) == nf + ng);  // linear
    CHECK(normal_form(f * g, gb) == normal_form(nf * ng, gb));
  }
  // grade preservation on graded monomials
  std::uniform_int_distribution<int> len2(1, 5);
  for (int rep = 0; rep < 30; ++rep) {
    Word w;
    int l = len2(rng);
    for (int k = 0; k < l; ++k) w.push_back(static_cast<char>(letter(rng)));
    int g = B.word_grade(w);
    NcPoly nf = normal_form(poly_term(w), gb);
    for (const auto& [nw, c] : nf.terms) CHECK(B.word_grade(nw) == g);
  }
}

TEST_CASE("pbw monomials") {
  AlgebraPresentation B = d4_algebra(special_point());
  GroebnerBasis gb = groebner(B, 6);
  CHECK(pbw_monomials(B, gb, 0) == std::vector<Word>{Word{}});
  auto deg2 = pbw_monomials(B, gb, 2);
  CHECK(deg2.size() == 21);
  for (const Word& w : deg2) CHECK(std::is_sorted(w.begin(), w.end()));

  AlgebraPresentation B8 = d8_algebra(FamilyParams{});
  GroebnerBasis gb8 = groebner(B8, 4);
  CHECK(pbw_monomials(B8, gb8, 1).size() == 8);
  CHECK_THROWS_AS(pbw_monomials(B8, gb8, 2), std::domain_error);
}

TEST_CASE("binomial fast path matches the general reducer") {
  AlgebraPresentation B = d4_algebra(special_point());
  GroebnerBasis gb = groebner(B, 12);
  auto rules = MonomialRules::from_gb(gb, 6);
  REQUIRE(rules.has_value());
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> letter(0, 5), len(0, 9);
  for (int rep = 0; rep < 200; ++rep) {
    Word w;
    int l = len(rng);
    for (int k = 0; k < l; ++k) w.push_back(static_cast<char>(letter(rng)));
    auto [scale, nw] = rules->nf(w);
    CHECK(normal_form(poly_term(w), gb) == poly_term(nw, scale));
  }

  // general parameters, including non-roots of unity
  FamilyParams p;
  p.gamma = -1;
  p.u1 = Cyclotomic(2);
  p.u2 = Cyclotomic::parse("z(8)^3");
  p.u3 = Cyclotomic(qd::rat(1, 3));
  p.u4 = Cyclotomic::imag();
  AlgebraPresentation Bp = d4_algebra(p);
  GroebnerBasis gbp = groebner(Bp, 10);
  auto rulesp = MonomialRules::from_gb(gbp, 6);
  REQUIRE(rulesp.has_value());
  for (int rep = 0; rep < 100; ++rep) {
    Word w;
    int l = len(rng);
    for (int k = 0; k < l; ++k) w.push_back(static_cast<char>(letter(rng)));
    auto [scale, nw] = rulesp->nf(w);
    CHECK(normal_form(poly_term(w), gbp) == poly_term(nw, scale));
  }
}

TEST_CASE("Hopf module algebra law on products") {
  AlgebraPresentation B = d4_algebra(special_point());
  GroebnerBasis gb = groebner(B, 8);
  const FiniteGroup& G = *B.group;
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> letter(0, 5), len(1, 3), coef(-2, 2);
  auto rnd_poly = [&] {
    NcPoly f;
    for (int t = 0; t < 2; ++t) {
      Word w;
      int l = len(rng);
      for (int k = 0; k < l; ++k) w.push_back(static_cast<char>(letter(rng)));
      poly_add_term(f, w, Cyclotomic(coef(rng)));
    }
    return f;
  };
  for (int rep = 0; rep < 15; ++rep) {
    NcPoly f = rnd_poly(), g = rnd_poly();
    // group part acts by algebra automorphisms
    for (int h = 0; h < G.order(); ++h) {
      NcPoly lhs = apply_group_nf(B, gb, h, normal_form(f * g, gb));
      NcPoly rhs = normal_form(apply_group_nf(B, gb, h, f) * apply_group_nf(B, gb, h, g), gb);
      CHECK(lhs == rhs);
    }
    // dual part: phi_g(fg') = sum_{ab=g} phi_a(f) phi_b(g')
    NcPoly nf = normal_form(f, gb), ng = normal_form(g, gb), prod = normal_form(f * g, gb);
    for (int gg = 0; gg < G.order(); ++gg) {
      NcPoly lhs = grade_component(B, prod, gg);
      NcPoly rhs;
      for (int a = 0; a < G.order(); ++a) {
        int b = G.mul(G.inverse(a), gg);
        rhs += normal_form(grade_component(B, nf, a) * grade_component(B, ng, b), gb);
      }
      CHECK(lhs == rhs);
    }
  }
}
