#include "repwild/growth.hpp"

#include <algorithm>

namespace repwild {

namespace {

// apply the lag-L difference operator once to the tail segment
std::vector<long> lag_diff(const std::vector<long>& v, int L) {
  if ((int)v.size() <= L) return {};
  std::vector<long> out;
  out.reserve(v.size() - L);
  for (size_t i = L; i < v.size(); ++i) out.push_back(v[i] - v[i - L]);
  return out;
}

bool all_zero(const std::vector<long>& v) {
  return std::all_of(v.begin(), v.end(), [](long x) { return x == 0; });
}

// smallest c <= c_max with Delta_L^c annihilating a tail segment that still
// has entries left to witness it; the segment is the last half of the window,
// extended backwards only when c*L differences would consume it
struct Annihilation {
  int c = -1;
  int tail_start = 0;
};

Annihilation annihilation_order(const std::vector<long>& seq, int L, int c_max) {
  const int W = (int)seq.size();
  for (int c = 0; c <= c_max; ++c) {
    int start = std::min(W / 2, W - (c * L + 1));
    if (start < 0) break;  // window cannot witness this order
    std::vector<long> tail(seq.begin() + start, seq.end());
    for (int i = 0; i < c; ++i) tail = lag_diff(tail, L);
    if (!tail.empty() && all_zero(tail)) return {c, start};
  }
  return {};
}

std::optional<int> estimate_c(const std::vector<long>& seq, int c_max) {
  const int W = (int)seq.size();
  // thirds of the index range, n = 0 excluded from the bound checks
  int t1 = W / 3, t2 = 2 * W / 3;
  for (int c = 0; c <= c_max; ++c) {
    // max of d_n / n^{c-1} over [t2, W) vs (1 + 1/4) * max over [t1, t2)
    auto ratio_max = [&](int lo, int hi) {
      Rat best(0);
      for (int n = std::max(lo, 1); n < hi; ++n) {
        // d_n / n^{c-1} as an exact rational
        Rat r(seq[n]);
        if (c - 1 > 0)
          for (int t = 0; t < c - 1; ++t) r = r / Rat(n);
        else if (c - 1 < 0)
          r = r * Rat(n);
        if (best < r) best = r;
      }
      return best;
    };
    Rat last = ratio_max(t2, W);
    Rat mid = ratio_max(t1, t2);
    Rat bound = mid * Rat(5, 4);
    if (!(bound < last)) return c;
  }
  return std::nullopt;
}

}  // namespace

GrowthReport gamma_of(const std::vector<long>& seq, std::optional<int> period_hint) {
  if (seq.size() < 4) fail(Errc::WindowTooShort, "need at least 4 terms");
  GrowthReport r;
  r.seq = seq;

  const int c_max = 6;
  const int l_max = period_hint ? std::max(1, *period_hint) : 6;

  Annihilation best;
  int best_l = 0;
  for (int L = 1; L <= l_max; ++L) {
    Annihilation a = annihilation_order(seq, L, c_max);
    if (a.c >= 0 && (best.c < 0 || a.c < best.c)) {
      best = a;
      best_l = L;
    }
  }
  if (best.c >= 0) {
    r.gamma = best.c;
    r.mode = GrowthReport::Mode::exact;
    r.witness_c = best.c;
    r.witness_lag = best_l;
    r.witness_tail = best.tail_start;
    r.stable = true;
    return r;
  }

  // estimated mode with the boundedness rule; stability from window W-2
  r.mode = GrowthReport::Mode::estimated;
  auto c1 = estimate_c(seq, c_max);
  r.gamma = c1;
  if (c1 && seq.size() >= 6) {
    std::vector<long> shorter(seq.begin(), seq.end() - 2);
    auto c2 = estimate_c(shorter, c_max);
    r.stable = (c2 == c1);
  } else {
    r.stable = false;
  }
  if (!c1) r.note = "growth exceeds the estimator range";
  return r;
}

ComplexityReport complexity(const ModuleRep& M, int window, std::shared_ptr<const SimpleSet> S,
                            ResolutionOptions opt, std::optional<int> period_hint) {
  Resolution R = minimal_resolution(M, window, S, opt);
  ComplexityReport out;
  out.resolution_dims = R.dims;
  out.growth = gamma_of(R.dims, period_hint);
  return out;
}

CxConsistency cx_consistency(const ModuleRep& M, int window, std::shared_ptr<const SimpleSet> S,
                             ResolutionOptions opt) {
  CxConsistency out;
  // resolution dims
  Resolution R = minimal_resolution(M, window, S, opt);
  out.from_resolution = gamma_of(R.dims);

  // sum over simples of dim Ext^n(M, S_i); minimal resolution makes these
  // the cover multiplicities
  std::vector<long> ext_sum(R.dims.size(), 0);
  for (size_t i = 0; i < S->simples.size(); ++i) {
    auto t = ext_dims_to_simple(R, (int)i);
    for (size_t n = 0; n < t.dims.size(); ++n) ext_sum[n] += t.dims[n];
  }
  out.from_ext_sum = gamma_of(ext_sum);

  // self extensions; when M is itself simple the minimal resolution gives
  // the dims directly, otherwise run the Hom-complex path
  std::optional<int> simple_class;
  for (size_t i = 0; i < S->simples.size(); ++i)
    if (S->simples[i].dim == M.dim && !hom_space(M, S->simples[i]).empty()) {
      simple_class = (int)i;
      break;
    }
  if (simple_class) {
    out.from_self_ext = gamma_of(ext_dims_to_simple(R, *simple_class).dims);
  } else {
    auto se = ext_dims(M, M, (int)R.dims.size() - 2, S, opt);
    out.from_self_ext = gamma_of(se.dims);
  }

  out.agree = out.from_resolution.gamma.has_value() &&
              out.from_resolution.gamma == out.from_ext_sum.gamma &&
              out.from_resolution.gamma == out.from_self_ext.gamma;
  if (out.agree) out.variety_dim = out.from_resolution.gamma;
  return out;
}

}  // namespace repwild
