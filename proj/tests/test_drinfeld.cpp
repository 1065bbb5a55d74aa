#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qd/drinfeld.hpp"

#include <set>

using namespace qd;

namespace {

Mat matrix_of(const SimpleDoubleModule& M, const DoubleBasisElt& x) {
  Mat out;
  for (int i = 0; i < M.dim; ++i) out.push_back(M.act(i, x));
  return out;
}

Vec e(int dim, int j, Cyclotomic c = Cyclotomic(1)) {
  Vec v(dim, Cyclotomic(0));
  v[j] = c;
  return v;
}

const Cyclotomic I = Cyclotomic::imag();

void check_gen(const FiniteGroup& G, const SimpleDoubleModule& M, const char* gen, int from, Vec want) {
  CHECK(M.group_action[G.generator(gen)][from] == want);
}

}  // namespace

TEST_CASE("double multiplication") {
  FiniteGroup G = FiniteGroup::dicyclic(2);
  DoubleBasisElt one{0, 0};
  CHECK(d_mul(G, one, one) == DoubleElement{{one, Cyclotomic(1)}});

  int r = G.generator("r"), s = G.generator("s");
  int sr2 = G.mul(s, G.power(r, 2));
  // (phi_s r)(phi_{sr^2} r) = phi_s r^2 since r (sr^2) r^{-1} = s
  DoubleElement p = d_mul(G, {s, r}, {sr2, r});
  CHECK(p == DoubleElement{{DoubleBasisElt{s, G.mul(r, r)}, Cyclotomic(1)}});
  CHECK(d_basis_str(G, {s, r}) == "phi[s]*r");

  // nonzero iff g = h g' h^{-1}, across all of D(G) x D(G)
  for (int g = 0; g < 8; ++g)
    for (int h = 0; h < 8; ++h)
      for (int g2 = 0; g2 < 8; ++g2)
        for (int h2 = 0; h2 < 8; ++h2) {
          DoubleElement q = d_mul(G, {g, h}, {g2, h2});
          bool match = g == G.mul(G.mul(h, g2), G.inverse(h));
          CHECK(q.empty() == !match);
        }
}

TEST_CASE("counit, antipode, coproduct shape") {
  FiniteGroup G = FiniteGroup::dicyclic(2);
  for (int h = 0; h < 8; ++h) {
    CHECK(d_counit(G, {0, h}) == Cyclotomic(1));
    for (int g = 1; g < 8; ++g) CHECK(d_counit(G, {g, h}) == Cyclotomic(0));
  }
  CHECK(d_antipode(G, {0, 0}) == DoubleBasisElt{0, 0});
  CHECK(d_coproduct(G, {3, 5}).size() == 8);
}

TEST_CASE("Hopf axioms hold on every basis element") {
  for (const FiniteGroup& G : {FiniteGroup::dicyclic(2), FiniteGroup::symmetric3()}) {
    int N = G.order();
    DoubleElement unit;
    for (int a = 0; a < N; ++a) de_add(unit, {a, 0}, Cyclotomic(1));
    for (int g = 0; g < N; ++g)
      for (int h = 0; h < N; ++h) {
        DoubleBasisElt x{g, h};
        auto cop = d_coproduct(G, x);

        // coassociativity as multisets of basis triples
        std::multiset<std::tuple<int, int, int, int>> lhs, rhs;
        for (const auto& [a, b] : cop)
          for (const auto& [a1, a2] : d_coproduct(G, a))
            lhs.insert({a1.g, a2.g, b.g, h});
        for (const auto& [a, b] : cop)
          for (const auto& [b1, b2] : d_coproduct(G, b))
            rhs.insert({a.g, b1.g, b2.g, h});
        CHECK(lhs == rhs);

        // counit law
        DoubleElement left, right;
        for (const auto& [a, b] : cop) {
          de_add(left, b, d_counit(G, a));
          de_add(right, a, d_counit(G, b));
        }
        DoubleElement self{{x, Cyclotomic(1)}};
        CHECK(left == self);
        CHECK(right == self);

        // antipode law m(S (x) id)Delta = eps * 1
        DoubleElement anti;
        for (const auto& [a, b] : cop)
          for (const auto& [k, v] : d_mul(G, d_antipode(G, a), b)) de_add(anti, k, v);
        DoubleElement want;
        if (g == 0) want = unit;
        CHECK(anti == want);
      }
  }
}

TEST_CASE("simple module censuses") {
  CHECK(simples(FiniteGroup::dicyclic(2)).size() == 22);
  CHECK(simples(FiniteGroup::dicyclic(4)).size() == 46);
  CHECK(simples(FiniteGroup::symmetric3()).size() == 8);
  for (int n = 2; n <= 6; ++n)
    CHECK(simples(FiniteGroup::dicyclic(n)).size() == static_cast<size_t>(2 * n * n + 14));

  // sum of squared dimensions is |G|^2 = dim D(G)
  for (const FiniteGroup& G : {FiniteGroup::dicyclic(2), FiniteGroup::dicyclic(4), FiniteGroup::symmetric3()}) {
    long total = 0;
    for (const auto& M : simples(G)) total += static_cast<long>(M.dim) * M.dim;
    CHECK(total == static_cast<long>(G.order()) * G.order());
  }
}

TEST_CASE("explicit D(D_4) module table") {
  FiniteGroup G = FiniteGroup::dicyclic(2);
  auto S = simples(G);
  int r = G.generator("r"), s = G.generator("s");
  int e_ = G.id(), r2 = G.power(r, 2), r3 = G.power(r, 3);
  int sg = s, sr = G.mul(s, r), sr2 = G.mul(s, r2), sr3 = G.mul(s, r3);

  struct Row1 { int idx; Cyclotomic cr, cs; int gr; };
  for (const Row1& row : {
           Row1{0, 1, 1, e_}, Row1{1, 1, -1, e_}, Row1{2, -1, 1, e_}, Row1{3, -1, -1, e_},
           Row1{5, 1, 1, r2}, Row1{6, 1, -1, r2}, Row1{7, -1, 1, r2}, Row1{8, -1, -1, r2}}) {
    const auto& M = S[row.idx];
    REQUIRE(M.dim == 1);
    CHECK(M.grade[0] == row.gr);
    CHECK(M.group_action[r][0][0] == row.cr);
    CHECK(M.group_action[s][0][0] == row.cs);
  }

  struct Row2 { int idx; Vec ur, us, vr, vs; int gu, gv; };
  auto E = [](int j, Cyclotomic c = Cyclotomic(1)) { return e(2, j, c); };
  for (const Row2& row : {
           Row2{4, E(1), E(0, I), E(0, -1), E(1, -I), e_, e_},
           Row2{9, E(1), E(0, I), E(0, -1), E(1, -I), r2, r2},
           Row2{10, E(0), E(1), E(1), E(0), r, r3},
           Row2{11, E(0, I), E(1), E(1, -I), E(0, -1), r, r3},
           Row2{12, E(0, -1), E(1), E(1, -1), E(0), r, r3},
           Row2{13, E(0, -I), E(1), E(1, I), E(0, -1), r, r3},
           Row2{14, E(1), E(0), E(0), E(1), sg, sr2},
           Row2{15, E(1), E(0, I), E(0, -1), E(1, -I), sg, sr2},
           Row2{16, E(1), E(0, -1), E(0), E(1, -1), sg, sr2},
           Row2{17, E(1), E(0, -I), E(0, -1), E(1, I), sg, sr2},
           Row2{18, E(1), E(1), E(0), E(0), sr, sr3},
           Row2{19, E(1, I), E(1), E(0, I), E(0, -1), sr, sr3},
           Row2{20, E(1, -1), E(1), E(0, -1), E(0), sr, sr3},
           Row2{21, E(1, -I), E(1), E(0, -I), E(0, -1), sr, sr3}}) {
    const auto& M = S[row.idx];
    REQUIRE(M.dim == 2);
    CHECK(M.grade[0] == row.gu);
    CHECK(M.grade[1] == row.gv);
    CHECK(M.group_action[r][0] == row.ur);
    CHECK(M.group_action[s][0] == row.us);
    CHECK(M.group_action[r][1] == row.vr);
    CHECK(M.group_action[s][1] == row.vs);
  }
}

TEST_CASE("explicit D(D_8) module rows, including the V44 consistency fix") {
  FiniteGroup G = FiniteGroup::dicyclic(4);
  auto S = simples(G);
  int r = G.generator("r"), s = G.generator("s");
  Cyclotomic w = Cyclotomic::root(8, 1);

  check_gen(G, S[32], "r", 0, e(2, 0, w.pow(2)));
  check_gen(G, S[32], "r", 1, e(2, 1, w.pow(6)));
  check_gen(G, S[32], "s", 0, e(2, 1));
  check_gen(G, S[32], "s", 1, e(2, 0));
  CHECK(S[32].grade[0] == G.power(r, 3));
  CHECK(S[32].grade[1] == G.power(r, 5));
  check_gen(G, S[37], "r", 0, e(2, 0, w.pow(7)));
  check_gen(G, S[37], "r", 1, e(2, 1, w));
  check_gen(G, S[37], "s", 0, e(2, 1));
  check_gen(G, S[37], "s", 1, e(2, 0, -1));

  // V45: x1..x4 with grades sr, sr^3, sr^5, sr^7
  for (int k = 0; k < 4; ++k) CHECK(S[45].grade[k] == G.mul(s, G.power(r, 2 * k + 1)));
  check_gen(G, S[45], "r", 0, e(4, 1));
  check_gen(G, S[45], "r", 1, e(4, 2));
  check_gen(G, S[45], "r", 2, e(4, 3));
  check_gen(G, S[45], "r", 3, e(4, 0, -1));
  check_gen(G, S[45], "s", 0, e(4, 3, I));
  check_gen(G, S[45], "s", 1, e(4, 2, I));
  check_gen(G, S[45], "s", 2, e(4, 1, I));
  check_gen(G, S[45], "s", 3, e(4, 0, I));

  check_gen(G, S[4], "r", 0, e(2, 0, w.pow(2)));
  check_gen(G, S[4], "s", 0, e(2, 1));
  check_gen(G, S[4], "s", 1, e(2, 0));
  CHECK(S[11].grade[0] == G.power(r, 4));
  check_gen(G, S[11], "r", 1, e(2, 1, w.pow(6)));

  CHECK(S[14].grade[0] == r);
  CHECK(S[14].grade[1] == G.power(r, 7));
  check_gen(G, S[14], "r", 0, e(2, 0));
  check_gen(G, S[14], "s", 0, e(2, 1));
  check_gen(G, S[14], "s", 1, e(2, 0));
  check_gen(G, S[20], "r", 0, e(2, 0, w.pow(6)));
  check_gen(G, S[20], "r", 1, e(2, 1, w.pow(2)));
  CHECK(S[26].grade[0] == G.power(r, 2));
  check_gen(G, S[26], "r", 0, e(2, 0, -1));
  check_gen(G, S[26], "s", 0, e(2, 1));

  for (int k = 0; k < 4; ++k) CHECK(S[38].grade[k] == G.mul(s, G.power(r, 2 * k)));
  check_gen(G, S[38], "r", 0, e(4, 1));
  check_gen(G, S[38], "r", 3, e(4, 0));
  check_gen(G, S[38], "s", 0, e(4, 0));
  check_gen(G, S[38], "s", 1, e(4, 3));
  check_gen(G, S[39], "r", 3, e(4, 0, -1));
  check_gen(G, S[39], "s", 0, e(4, 0, I));
  check_gen(G, S[39], "s", 1, e(4, 3, -I));
  check_gen(G, S[39], "s", 2, e(4, 2, -I));
  check_gen(G, S[39], "s", 3, e(4, 1, -I));

  // V44 = (sr, sigma_2): q.r = +u is forced by s^2 = r^4.
  check_gen(G, S[44], "r", 0, e(4, 1));
  check_gen(G, S[44], "r", 3, e(4, 0));
  check_gen(G, S[44], "s", 0, e(4, 3, -1));
  check_gen(G, S[44], "s", 1, e(4, 2, -1));
  check_gen(G, S[44], "s", 2, e(4, 1, -1));
  check_gen(G, S[44], "s", 3, e(4, 0, -1));
}

TEST_CASE("explicit D(S_3) module table") {
  FiniteGroup G = FiniteGroup::symmetric3();
  auto S = simples(G);
  REQUIRE(S.size() == 8);
  int r = G.generator("r"), s = G.generator("s");
  Cyclotomic z = Cyclotomic::root(3, 1);

  CHECK(S[0].group_action[r][0][0] == Cyclotomic(1));
  CHECK(S[1].group_action[s][0][0] == Cyclotomic(-1));
  check_gen(G, S[2], "r", 0, e(2, 0, z));
  check_gen(G, S[2], "r", 1, e(2, 1, z * z));
  check_gen(G, S[2], "s", 0, e(2, 1));

  CHECK(S[3].grade == std::vector<int>{r, G.mul(r, r)});
  check_gen(G, S[4], "r", 0, e(2, 0, z));
  check_gen(G, S[4], "r", 1, e(2, 1, z * z));
  check_gen(G, S[5], "r", 0, e(2, 0, z * z));
  check_gen(G, S[5], "r", 1, e(2, 1, z));

  // V6: grades s, s*r, s*r^2; r cycles u -> p -> v -> u; s fixes u and swaps v, p
  CHECK(S[6].grade == std::vector<int>{s, G.mul(s, r), G.mul(s, G.mul(r, r))});
  check_gen(G, S[6], "r", 0, e(3, 2));
  check_gen(G, S[6], "r", 1, e(3, 0));
  check_gen(G, S[6], "r", 2, e(3, 1));
  check_gen(G, S[6], "s", 0, e(3, 0));
  check_gen(G, S[6], "s", 1, e(3, 2));
  check_gen(G, S[6], "s", 2, e(3, 1));
  check_gen(G, S[7], "r", 0, e(3, 2));
  check_gen(G, S[7], "s", 0, e(3, 0, -1));
  check_gen(G, S[7], "s", 1, e(3, 2, -1));
  check_gen(G, S[7], "s", 2, e(3, 1, -1));
}

TEST_CASE("module action composes like the double") {
  FiniteGroup G = FiniteGroup::dicyclic(2);
  for (const auto& M : simples(G)) {
    // identity of D(G) fixes every vector
    Mat idsum(M.dim, Vec(M.dim, Cyclotomic(0)));
    for (int g = 0; g < G.order(); ++g) idsum = mat_add(idsum, matrix_of(M, {g, 0}));
    CHECK(idsum == mat_identity(M.dim));

    for (int g = 0; g < 8; ++g)
      for (int h = 0; h < 8; ++h)
        for (int g2 = 0; g2 < 8; ++g2)
          for (int h2 = 0; h2 < 8; ++h2) {
            Mat lhs = mat_mul(matrix_of(M, {g, h}), matrix_of(M, {g2, h2}));
            DoubleElement prod = d_mul(G, {g, h}, {g2, h2});
            Mat rhs(M.dim, Vec(M.dim, Cyclotomic(0)));
            for (const auto& [k, v] : prod) rhs = mat_add(rhs, mat_scale(matrix_of(M, k), v));
            CHECK(lhs == rhs);
          }
  }
}

TEST_CASE("module characters") {
  FiniteGroup G = FiniteGroup::dicyclic(2);
  auto S = simples(G);
  int r = G.generator("r");
  for (int h = 0; h < 8; ++h) CHECK(S[0].character({0, h}) == Cyclotomic(1));
  CHECK(S[4].character({0, r}) == Cyclotomic(0));  // trace of u->v, v->-u
  for (const auto& M : S)
    for (int g = 0; g < 8; ++g)
      for (int h = 0; h < 8; ++h)
        if (G.mul(g, h) != G.mul(h, g)) CHECK(M.character({g, h}) == Cyclotomic(0));
}
