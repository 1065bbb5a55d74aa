#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qd/fusion.hpp"
#include "golden_tables.hpp"

#include <algorithm>
#include <map>
#include <random>

using namespace qd;

namespace {

Vec gold_vec(const golden::GVec& gv, int dim_right, int dim_total) {
  Vec v(dim_total, Cyclotomic(0));
  for (const auto& [i, j, coeff] : gv) v[i * dim_right + j] = Cyclotomic::parse(coeff);
  return v;
}

bool same_span(Mat a, Mat b) {
  rref(a);
  rref(b);
  return a == b;
}

// Check one golden block: multiplicities match exactly and each reference
// generator tuple spans the same subspace as the computed intertwiner image.
void check_block(const FiniteGroup& G, const std::vector<SimpleDoubleModule>& S,
                 const golden::GoldBlock& blk) {
  INFO("block V", blk.left, " (x) V", blk.right);
  Module W = tensor(G, as_module(S[blk.left]), as_module(S[blk.right]));
  Decomposition d = decompose(G, S, W);

  std::vector<int> want_mult(S.size(), 0);
  for (const auto& c : blk.copies) want_mult[c.simple] += 1;
  CHECK(d.multiplicity == want_mult);

  for (const auto& gold : blk.copies) {
    Mat expected;
    for (const auto& gv : gold.vecs) expected.push_back(gold_vec(gv, S[blk.right].dim, W.dim));
    const CopyImage* mine = nullptr;
    for (const auto& c : d.copies)
      if (c.simple_index == gold.simple) mine = &c;
    REQUIRE(mine != nullptr);
    CHECK(same_span(expected, mine->images));
  }

  // all copies together are linearly independent
  Mat stacked;
  for (const auto& c : d.copies)
    for (const auto& row : c.images) stacked.push_back(row);
  CHECK(rank(stacked) == static_cast<size_t>(W.dim));
}

void check_mults(const FiniteGroup& G, const std::vector<SimpleDoubleModule>& S,
                 const golden::GoldMult& row) {
  INFO("lemma product V", row.left, " (x) V", row.right);
  Module W = tensor(G, as_module(S[row.left]), as_module(S[row.right]));
  Decomposition d = decompose(G, S, W);
  std::vector<int> want(S.size(), 0);
  for (int s : row.summands) want[s] += 1;
  CHECK(d.multiplicity == want);
}

}  // namespace

TEST_CASE("Table 4 blocks over D(D_4)") {
  FiniteGroup G = FiniteGroup::dicyclic(2);
  auto S = simples(G);
  for (const auto& blk : golden::d4_blocks()) check_block(G, S, blk);
  for (const auto& row : golden::d4_lemma()) check_mults(G, S, row);
}

TEST_CASE("tensor unit and basic shapes") {
  FiniteGroup G = FiniteGroup::dicyclic(2);
  auto S = simples(G);
  for (const auto& M : S) {
    Module W = tensor(G, as_module(S[0]), as_module(M));
    Decomposition d = decompose(G, S, W);
    std::vector<int> want(S.size(), 0);
    want[M.index] = 1;
    CHECK(d.multiplicity == want);
  }
  Module W = tensor(G, as_module(S[17]), as_module(S[20]));
  CHECK(W.dim == 4);
  // grade of x2 (x) y1 is sr^2 * sr = r
  CHECK(W.grade[1 * 2 + 0] == G.generator("r"));
}

TEST_CASE("D(D_8) sample blocks and lemma decompositions") {
  FiniteGroup G = FiniteGroup::dicyclic(4);
  auto S = simples(G);
  const auto& blocks = golden::d8_blocks();
  for (const auto& blk : blocks)
    if ((blk.left == 32 && blk.right == 45) || (blk.left == 45 && blk.right == 45))
      check_block(G, S, blk);
  for (const auto& row : golden::d8_lemma()) check_mults(G, S, row);
}

TEST_CASE("V6 (x) V6 over D(S_3) and lemma") {
  FiniteGroup G = FiniteGroup::symmetric3();
  auto S = simples(G);
  for (const auto& blk : golden::s3_blocks()) check_block(G, S, blk);
  for (const auto& row : golden::s3_lemma()) check_mults(G, S, row);
}

TEST_CASE("intertwiner images define submodules") {
  FiniteGroup G = FiniteGroup::dicyclic(2);
  auto S = simples(G);
  Module W = tensor(G, as_module(S[17]), as_module(S[20]));
  for (const auto& copy : decompose(G, S, W).copies) {
    const auto& M = S[copy.simple_index];
    for (int g = 0; g < G.order(); ++g)
      for (int h = 0; h < G.order(); ++h) {
        for (int a = 0; a < M.dim; ++a) {
          // f(e_a) . phi_g h == f(e_a . phi_g h)
          Vec lhs(W.dim, Cyclotomic(0));
          for (int w = 0; w < W.dim; ++w) {
            if (copy.images[a][w].is_zero()) continue;
            Vec row = W.act(w, {g, h});
            for (int w2 = 0; w2 < W.dim; ++w2) lhs[w2] += copy.images[a][w] * row[w2];
          }
          Vec rhs(W.dim, Cyclotomic(0));
          Vec sact = M.act(a, {g, h});
          for (int b = 0; b < M.dim; ++b) {
            if (sact[b].is_zero()) continue;
            for (int w2 = 0; w2 < W.dim; ++w2) rhs[w2] += sact[b] * copy.images[b][w2];
          }
          CHECK(lhs == rhs);
        }
      }
  }
}

TEST_CASE("S-matrix structure and Verlinde numbers") {
  FiniteGroup G = FiniteGroup::dicyclic(2);
  auto S = simples(G);
  Mat Smat = s_matrix(G, S);
  for (size_t p = 0; p < S.size(); ++p)
    for (size_t q = 0; q < S.size(); ++q) CHECK(Smat[p][q] == Smat[q][p]);
  for (size_t q = 0; q < S.size(); ++q)
    CHECK(Smat[0][q] == Cyclotomic(S[q].dim) / Cyclotomic(G.order()));

  CHECK(verlinde(Smat, 17, 20, 11) == 1);
  CHECK(verlinde(Smat, 17, 20, 13) == 1);
  for (int c = 0; c < 22; ++c)
    if (c != 11 && c != 13) CHECK(verlinde(Smat, 17, 20, c) == 0);
  CHECK(verlinde(Smat, 4, 20, 19) == 1);
  for (int b = 0; b < 22; ++b)
    for (int c = 0; c < 22; ++c) CHECK(verlinde(Smat, 0, b, c) == (b == c ? 1 : 0));
}

TEST_CASE("Verlinde agrees with explicit decomposition on a slab") {
  FiniteGroup G = FiniteGroup::dicyclic(2);
  auto S = simples(G);
  Mat Smat = s_matrix(G, S);
  for (int a = 0; a < 22; ++a)
    for (int b : {17, 20, 21}) {
      Module W = tensor(G, as_module(S[a]), as_module(S[b]));
      Decomposition d = decompose(G, S, W);
      for (int c = 0; c < 22; ++c) CHECK(verlinde(Smat, a, b, c) == d.multiplicity[c]);
    }
}

TEST_CASE("fusion is commutative and associative") {
  FiniteGroup G = FiniteGroup::symmetric3();
  auto S = simples(G);
  Mat Smat = s_matrix(G, S);
  int n = static_cast<int>(S.size());

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Decomposition ab = decompose(G, S, tensor(G, as_module(S[a]), as_module(S[b])));
      Decomposition ba = decompose(G, S, tensor(G, as_module(S[b]), as_module(S[a])));
      CHECK(ab.multiplicity == ba.multiplicity);
    }

  // full associativity check via Verlinde numbers
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          long lhs = 0, rhs = 0;
          for (int e = 0; e < n; ++e) {
            lhs += verlinde(Smat, a, b, e) * verlinde(Smat, e, c, d);
            rhs += verlinde(Smat, b, c, e) * verlinde(Smat, a, e, d);
          }
          CHECK(lhs == rhs);
        }
}

TEST_CASE("characters multiply through the coproduct") {
  FiniteGroup G = FiniteGroup::dicyclic(2);
  auto S = simples(G);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> pick(0, 21), elt(0, 7);
  for (int rep = 0; rep < 10; ++rep) {
    const auto& M = S[pick(rng)];
    const auto& N = S[pick(rng)];
    Module W = tensor(G, as_module(M), as_module(N));
    for (int trial = 0; trial < 8; ++trial) {
      int g = elt(rng), h = elt(rng);
      Cyclotomic direct = W.character({g, h});
      Cyclotomic viasum(0);
      for (int x = 0; x < G.order(); ++x)
        viasum += M.character({x, h}) * N.character({G.mul(G.inverse(x), g), h});
      CHECK(direct == viasum);
    }
  }
}

TEST_CASE("copy_select reproduces the reference relation rows") {
  FiniteGroup G = FiniteGroup::dicyclic(2);
  auto S = simples(G);
  Module W = direct_sum(tensor(G, as_module(S[17]), as_module(S[20])),
                        tensor(G, as_module(S[20]), as_module(S[17])));
  auto copies = hom_copies(G, S[11], W);
  REQUIRE(copies.size() == 2);

  CHECK(copy_select(copies, {Cyclotomic(1), Cyclotomic(0)}).images == copies[0].images);
  CHECK(copy_select(copies, {Cyclotomic(0), Cyclotomic(1)}).images == copies[1].images);
  CHECK_THROWS_AS(copy_select(copies, {Cyclotomic(0), Cyclotomic(0)}), std::invalid_argument);

  // reference copies of V11: (x2y1 - i x1y2, i x2y2 - x1y1) and (y1x1 + i y2x2, -i y2x1 - y1x2)
  const Cyclotomic I = Cyclotomic::imag();
  Mat ref1(2, Vec(8, Cyclotomic(0))), ref2(2, Vec(8, Cyclotomic(0)));
  ref1[0][2] = Cyclotomic(1); ref1[0][1] = -I;
  ref1[1][3] = I; ref1[1][0] = Cyclotomic(-1);
  ref2[0][4] = Cyclotomic(1); ref2[0][7] = I;
  ref2[1][6] = -I; ref2[1][5] = Cyclotomic(-1);

  // rescale each computed copy onto the reference normalization
  auto scale_to = [](const CopyImage& c, const Mat& ref) {
    for (size_t j = 0; j < c.images[0].size(); ++j)
      if (!c.images[0][j].is_zero()) {
        Cyclotomic f = ref[0][j] / c.images[0][j];
        Mat scaled = c.images;
        for (auto& row : scaled)
          for (auto& x : row) x *= f;
        REQUIRE(scaled == ref);
        return f;
      }
    FAIL("zero copy");
    return Cyclotomic(0);
  };
  Cyclotomic s1 = scale_to(copies[0], ref1);
  Cyclotomic s2 = scale_to(copies[1], ref2);

  // coords (1, -u1) on the reference-normalized copies give the relation rows
  Cyclotomic u1 = Cyclotomic::parse("z(8)^1");
  CopyImage rel = copy_select(copies, {s1, -u1 * s2});
  Mat want(2, Vec(8, Cyclotomic(0)));
  // (x2y1 - i x1y2) - u1(y1x1 + i y2x2)
  want[0][2] = Cyclotomic(1); want[0][1] = -I; want[0][4] = -u1; want[0][7] = -I * u1;
  // (i x2y2 - x1y1) - u1(-i y2x1 - y1x2)
  want[1][3] = I; want[1][0] = Cyclotomic(-1); want[1][6] = I * u1; want[1][5] = u1;
  CHECK(rel.images == want);
}
