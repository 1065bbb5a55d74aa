#include "qd/faithful.hpp"

#include <stdexcept>

namespace qd {

FusionTable fusion_table(const FiniteGroup& G) {
  auto S = simples(G);
  if (S.size() > 64) throw std::invalid_argument("fusion table supports at most 64 simples");
  Mat Sm = s_matrix(G, S);
  int n = static_cast<int>(S.size());
  FusionTable T;
  T.count = n;
  T.all = (n == 64) ? ~0ull : ((1ull << n) - 1);
  T.support.assign(static_cast<size_t>(n) * n, 0);
  // N_{ab}^c = sum_i S_ai S_bi conj(S_ci) / S_0i; precompute the a,b part.
  std::vector<Cyclotomic> inv0(n);
  for (int i = 0; i < n; ++i) inv0[i] = Sm[0][i].inv();
  std::vector<Vec> conjS(n, Vec(n));
  for (int c = 0; c < n; ++c)
    for (int i = 0; i < n; ++i) conjS[c][i] = Sm[c][i].conj();
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      Vec part(n);
      for (int i = 0; i < n; ++i) part[i] = Sm[a][i] * Sm[b][i] * inv0[i];
      uint64_t mask = 0;
      for (int c = 0; c < n; ++c) {
        Cyclotomic acc(0);
        for (int i = 0; i < n; ++i) acc += part[i] * conjS[c][i];
        if (!acc.is_integer()) throw std::logic_error("Verlinde number is not an integer");
        Rational v = acc.rational_value();
        if (v < 0) throw std::logic_error("Verlinde number is negative");
        if (v > 0) mask |= 1ull << c;
      }
      T.support[static_cast<size_t>(a) * n + b] = mask;
      T.support[static_cast<size_t>(b) * n + a] = mask;
    }
  return T;
}

uint64_t support_closure(const FusionTable& T, const std::vector<int>& summands) {
  if (summands.empty()) throw std::invalid_argument("module sum must be nonempty");
  uint64_t closed = 0;
  for (int v : summands) closed |= 1ull << v;
  for (;;) {
    uint64_t next = closed;
    for (int s = 0; s < T.count; ++s) {
      if (!(closed >> s & 1)) continue;
      for (int v : summands) next |= T.fuse(s, v);
    }
    if (next == closed) return closed;
    closed = next;
  }
}

std::vector<uint64_t> tensor_power_supports(const FusionTable& T, const std::vector<int>& summands,
                                            int max_depth) {
  uint64_t layer = 0;
  for (int v : summands) layer |= 1ull << v;
  std::vector<uint64_t> out{layer};
  for (int k = 1; k < max_depth; ++k) {
    uint64_t next = 0;
    for (int s = 0; s < T.count; ++s) {
      if (!(layer >> s & 1)) continue;
      for (int v : summands) next |= T.fuse(s, v);
    }
    out.push_back(next);
    layer = next;
  }
  return out;
}

bool is_inner_faithful(const FusionTable& T, const std::vector<int>& summands) {
  return support_closure(T, summands) == T.all;
}

namespace {

long long binom(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

void enumerate_subsets(const FusionTable& T, int size, int start, std::vector<int>& cur,
                       std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == size) {
    if (is_inner_faithful(T, cur)) out.push_back(cur);
    return;
  }
  for (int v = start; v < T.count; ++v) {
    cur.push_back(v);
    enumerate_subsets(T, size, v + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

Census minimal_inner_faithful(const FusionTable& T) {
  Census census;
  for (int k = 1; k <= T.count; ++k) {
    // A multiset is inner faithful iff its support set is, so search subsets
    // of size <= k and count multisets over them.
    std::vector<std::vector<int>> faithful_subsets;
    for (int t = 1; t <= k; ++t) {
      std::vector<int> cur;
      enumerate_subsets(T, t, 0, cur, faithful_subsets);
    }
    if (faithful_subsets.empty()) continue;

    census.k_min = k;
    for (const auto& sub : faithful_subsets) {
      int t = static_cast<int>(sub.size());
      census.multiset_count += binom(k - 1, t - 1);  // multisets of size k with support sub
      if (t == k) {
        census.set_count += 1;
        census.sums.push_back(sub);
      }
    }
    // multisets with a strictly smaller support only exist when some proper
    // support is itself inner faithful
    census.conventions_agree = census.multiset_count == census.set_count;
    if (!census.conventions_agree) {
      // include the repeated-entry multisets in the listing as well
      std::vector<std::vector<int>> all;
      for (const auto& sub : faithful_subsets) {
        if (static_cast<int>(sub.size()) == k) continue;
        // expand sub into all multisets of size k with support exactly sub
        std::vector<int> counts(sub.size(), 1);
        int extra = k - static_cast<int>(sub.size());
        std::vector<int> stack;
        std::function<void(int, int)> rec = [&](int pos, int left) {
          if (pos == static_cast<int>(sub.size())) {
            if (left == 0) {
              std::vector<int> ms;
              for (size_t i = 0; i < sub.size(); ++i)
                for (int c = 0; c < counts[i]; ++c) ms.push_back(sub[i]);
              all.push_back(ms);
            }
            return;
          }
          for (int add = 0; add <= left; ++add) {
            counts[pos] += add;
            rec(pos + 1, left - add);
            counts[pos] -= add;
          }
        };
        rec(0, extra);
      }
      census.sums.insert(census.sums.end(), all.begin(), all.end());
      std::sort(census.sums.begin(), census.sums.end());
    }
    return census;
  }
  throw std::logic_error("no inner-faithful sum exists (impossible for D(G))");
}

}  // namespace qd
