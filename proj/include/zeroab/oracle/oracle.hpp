#pragma once

// Brute-force reference computations on tiny instances. Modules over the
// triangular algebra are encoded as representations of the linear quiver
// m -> m-1 -> ... -> 1 (a vector space per vertex and a matrix per arrow),
// morphisms as tuples of vertex maps. Nothing here uses the matrix, echelon
// or normal-form code of the main library; only scalar arithmetic is shared.

#include <cmath>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "zeroab/error.hpp"
#include "zeroab/exactla/scalar.hpp"

namespace zeroab::oracle {

template <class S> using Mat = std::vector<std::vector<S>>; // row-major, rows x cols

template <class S> Mat<S> zeros(std::size_t r, std::size_t c) { return Mat<S>(r, std::vector<S>(c)); }

template <class S> std::size_t cols_of(const Mat<S> &a, std::size_t fallback) {
  return a.empty() ? fallback : a.front().size();
}

template <class S> Mat<S> multiply(const Mat<S> &a, const Mat<S> &b, std::size_t b_cols) {
  Mat<S> c = zeros<S>(a.size(), b_cols);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b_cols; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

template <class S> bool all_zero(const Mat<S> &a) {
  for (const auto &row : a)
    for (const auto &x : row)
      if (!is_zero(x)) return false;
  return true;
}

// Rank by plain Gaussian elimination (first nonzero entry as pivot).
template <class S> std::size_t rank_of(Mat<S> a) {
  std::size_t rank = 0;
  const std::size_t cols = a.empty() ? 0 : a.front().size();
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t p = rank;
    while (p < a.size() && is_zero(a[p][c])) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    const S inv = inverse(a[rank][c]);
    for (std::size_t i = rank + 1; i < a.size(); ++i) {
      if (is_zero(a[i][c])) continue;
      const S factor = a[i][c] * inv;
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= factor * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

// A linear map between spaces of the given dimensions.
template <class S> struct LinearMap {
  std::size_t from = 0, to = 0;
  Mat<S> m; // to x from
};

// Exactness of V_0 -> V_1 -> ... -> V_n: consecutive composites vanish and
// rank(d_i) + rank(d_{i+1}) = dim V_{i+1} at every interior space.
template <class S> bool rank_exactness(const std::vector<LinearMap<S>> &seq) {
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    require(seq[i].to == seq[i + 1].from, ErrorKind::DimensionMismatch,
            "rank_exactness: chain is not composable");
    if (!all_zero(multiply(seq[i + 1].m, seq[i].m, seq[i].from))) return false;
    if (rank_of(seq[i].m) + rank_of(seq[i + 1].m) != seq[i].to) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Representations over F_p.

using Fp = Modular;

struct RepModule {
  std::uint32_t p = 2;
  std::vector<std::size_t> dims;   // dims[k-1] = dimension at vertex k
  std::vector<Mat<Fp>> arrows;     // arrows[k-1] : V_{k+1} -> V_k, k = 1..m-1
  [[nodiscard]] std::size_t m() const { return dims.size(); }
};

using RepMap = std::vector<Mat<Fp>>; // one dims_N[k] x dims_M[k] matrix per vertex

// The direct sum of n_i copies of P_i = e_i Lambda. P_i is the
// representation with a one-dimensional space at each vertex 1..i joined by
// identity arrows. Basis at vertex k: the copies of P_i with i >= k, in
// increasing i.
inline RepModule projective_module(const std::vector<std::size_t> &mult, std::uint32_t p) {
  RepModule M;
  M.p = p;
  const std::size_t m = mult.size();
  // (label, copy) of the summands present at vertex k
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> copies(m);
  for (std::size_t k = 1; k <= m; ++k)
    for (std::size_t i = k; i <= m; ++i)
      for (std::size_t t = 0; t < mult[i - 1]; ++t) copies[k - 1].emplace_back(i, t);
  for (std::size_t k = 1; k <= m; ++k) M.dims.push_back(copies[k - 1].size());
  for (std::size_t k = 1; k < m; ++k) {
    Mat<Fp> a = zeros<Fp>(M.dims[k - 1], M.dims[k]);
    for (std::size_t c = 0; c < copies[k].size(); ++c)
      for (std::size_t r = 0; r < copies[k - 1].size(); ++r)
        if (copies[k - 1][r] == copies[k][c]) a[r][c] = Fp(1, p);
    M.arrows.push_back(std::move(a));
  }
  return M;
}

inline std::size_t total_dimension(const RepModule &M) {
  std::size_t s = 0;
  for (auto d : M.dims) s += d;
  return s;
}

inline bool is_homomorphism(const RepModule &M, const RepModule &N, const RepMap &phi) {
  for (std::size_t k = 1; k < M.m(); ++k) {
    // phi_k o alpha_k == beta_k o phi_{k+1}
    const auto lhs = multiply(phi[k - 1], M.arrows[k - 1], M.dims[k]);
    const auto rhs = multiply(N.arrows[k - 1], phi[k], M.dims[k]);
    for (std::size_t i = 0; i < lhs.size(); ++i)
      for (std::size_t j = 0; j < M.dims[k]; ++j)
        if (!(lhs[i][j] == rhs[i][j])) return false;
  }
  return true;
}

inline RepMap compose(const RepModule &A, const RepMap &g, const RepMap &f) {
  RepMap out;
  for (std::size_t k = 0; k < A.m(); ++k) out.push_back(multiply(g[k], f[k], A.dims[k]));
  return out;
}

inline RepMap zero_map(const RepModule &M, const RepModule &N) {
  RepMap out;
  for (std::size_t k = 0; k < M.m(); ++k) out.push_back(zeros<Fp>(N.dims[k], M.dims[k]));
  return out;
}

inline bool is_zero_map(const RepMap &f) {
  for (const auto &m : f)
    if (!all_zero(m)) return false;
  return true;
}

inline std::vector<std::uint32_t> flatten(const RepMap &f) {
  std::vector<std::uint32_t> v;
  for (const auto &m : f)
    for (const auto &row : m)
      for (const auto &x : row) v.push_back(x.value());
  return v;
}

inline constexpr double enumeration_bound_log2 = 20.0;

// Every homomorphism M -> N, by exhausting all tuples of vertex matrices.
inline std::vector<RepMap> enumerate_homs(const RepModule &M, const RepModule &N) {
  require(M.m() == N.m() && M.p == N.p, ErrorKind::DimensionMismatch, "modules over different algebras");
  std::size_t unknowns = 0;
  for (std::size_t k = 0; k < M.m(); ++k) unknowns += M.dims[k] * N.dims[k];
  if (double(unknowns) * std::log2(double(M.p)) > enumeration_bound_log2 + 1e-9)
    fail(ErrorKind::BoundExceeded, "enumerate_homs: search space exceeds 2^20");
  std::vector<std::uint32_t> digits(unknowns, 0);
  std::vector<RepMap> out;
  for (;;) {
    RepMap phi;
    std::size_t pos = 0;
    for (std::size_t k = 0; k < M.m(); ++k) {
      Mat<Fp> a = zeros<Fp>(N.dims[k], M.dims[k]);
      for (auto &row : a)
        for (auto &x : row) x = Fp(digits[pos++], M.p);
      phi.push_back(std::move(a));
    }
    if (is_homomorphism(M, N, phi)) out.push_back(std::move(phi));
    std::size_t i = 0;
    while (i < unknowns && ++digits[i] == M.p) digits[i++] = 0;
    if (i == unknowns) break;
  }
  return out;
}

// log_p of a count that is a power of p.
inline std::size_t log_p(std::size_t count, std::uint32_t p) {
  std::size_t d = 0;
  while (count > 1) {
    require(count % p == 0, ErrorKind::Precondition, "count is not a power of p");
    count /= p;
    ++d;
  }
  return d;
}

inline std::size_t hom_dimension(const RepModule &M, const RepModule &N) {
  return log_p(enumerate_homs(M, N).size(), M.p);
}

// Right cancellability of f : X -> Y among projectives: no nonzero
// g : Y -> P_k with g f = 0, for any indecomposable P_k.
inline bool right_cancellable(const RepModule &X, const RepModule &Y, const RepMap &f) {
  for (std::size_t k = 1; k <= Y.m(); ++k) {
    std::vector<std::size_t> mult(Y.m(), 0);
    mult[k - 1] = 1;
    const RepModule Pk = projective_module(mult, Y.p);
    for (const auto &g : enumerate_homs(Y, Pk))
      if (!is_zero_map(g) && is_zero_map(compose(X, g, f))) return false;
  }
  return true;
}

// The injective hull P_m^N of X, N = dim X_1, and the canonical inclusion:
// at vertex k it is the composite of arrows X_k -> X_1.
struct Hull {
  RepModule module;
  RepMap inclusion;
};

inline Hull injective_hull(const RepModule &X) {
  const std::size_t n = X.dims.front();
  std::vector<std::size_t> mult(X.m(), 0);
  mult.back() = n;
  Hull h{projective_module(mult, X.p), {}};
  for (std::size_t k = 1; k <= X.m(); ++k) {
    Mat<Fp> a = zeros<Fp>(X.dims[k - 1], X.dims[k - 1]);
    for (std::size_t i = 0; i < X.dims[k - 1]; ++i) a[i][i] = Fp(1, X.p);
    for (std::size_t j = k - 1; j-- > 0;) a = multiply(X.arrows[j], a, X.dims[k - 1]);
    h.inclusion.push_back(std::move(a));
  }
  return h;
}

// dim of Hom(X, Y_Inj) / { eta_Y u : u in Hom(X, Y) }.
inline std::size_t e_dimension(const RepModule &X, const RepModule &Y) {
  const Hull hull = injective_hull(Y);
  const auto all = enumerate_homs(X, hull.module);
  std::set<std::vector<std::uint32_t>> image;
  for (const auto &u : enumerate_homs(X, Y)) image.insert(flatten(compose(X, hull.inclusion, u)));
  return log_p(all.size() / image.size(), X.p);
}

// dim of Hom(X, Y) / { g eta_X : g in Hom(X_Inj, Y) }.
inline std::size_t injectively_stable_dimension(const RepModule &X, const RepModule &Y) {
  const Hull hull = injective_hull(X);
  const auto all = enumerate_homs(X, Y);
  std::set<std::vector<std::uint32_t>> through;
  for (const auto &g : enumerate_homs(hull.module, Y)) through.insert(flatten(compose(X, g, hull.inclusion)));
  return log_p(all.size() / through.size(), X.p);
}

// Morphisms between the functors presented by f : P1 -> P0 and
// f2 : Q1 -> Q0, counted as commutative squares (a, b) modulo homotopy
// b ~ b + f2 t. Returns the dimension over F_p.
inline std::size_t squares_mod_homotopy(const RepModule &P1, const RepModule &P0, const RepMap &f,
                                        const RepModule &Q1, const RepModule &Q0, const RepMap &f2) {
  std::set<std::vector<std::uint32_t>> f2a;
  for (const auto &a : enumerate_homs(P1, Q1)) f2a.insert(flatten(compose(P1, f2, a)));
  std::size_t valid = 0;
  for (const auto &b : enumerate_homs(P0, Q0))
    if (f2a.count(flatten(compose(P1, b, f)))) ++valid;
  std::set<std::vector<std::uint32_t>> homotopies;
  for (const auto &t : enumerate_homs(P0, Q1)) homotopies.insert(flatten(compose(P0, f2, t)));
  return log_p(valid / homotopies.size(), P1.p);
}

// Vertex maps of a morphism given in block form: the matrix's rows and
// columns are the summands of target and source in increasing label order;
// at vertex k the map acts on the summands of label >= k.
inline RepMap from_blocks(const std::vector<std::size_t> &source_mult,
                          const std::vector<std::size_t> &target_mult, const Mat<Fp> &matrix) {
  auto expand = [](const std::vector<std::size_t> &mult) {
    std::vector<std::size_t> labels;
    for (std::size_t i = 0; i < mult.size(); ++i) labels.insert(labels.end(), mult[i], i + 1);
    return labels;
  };
  const auto sl = expand(source_mult), tl = expand(target_mult);
  RepMap out;
  for (std::size_t k = 1; k <= source_mult.size(); ++k) {
    std::vector<std::size_t> rows, cols;
    for (std::size_t r = 0; r < tl.size(); ++r)
      if (tl[r] >= k) rows.push_back(r);
    for (std::size_t c = 0; c < sl.size(); ++c)
      if (sl[c] >= k) cols.push_back(c);
    Mat<Fp> a = zeros<Fp>(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) a[i][j] = matrix[rows[i]][cols[j]];
    out.push_back(std::move(a));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Integer checks.

// Epi test for f : Z^a -> Z^n with n <= 2 by probing row vectors y with
// entries in [-B, B], B = max(4, max |f_ij|): y f = 0 must force y = 0.
// If rank f < n a left null vector exists with entries bounded by max |f_ij|
// (for n = 2 take (f_2j, -f_1j) for a nonzero column j), so the probe
// family is sufficient.
inline bool right_cancellable_integer(const Mat<long long> &f, std::size_t cols) {
  const std::size_t n = f.size();
  require(n <= 2, ErrorKind::BoundExceeded, "right_cancellable_integer: target rank must be <= 2");
  long long bound = 4;
  for (const auto &row : f)
    for (long long x : row) bound = std::max(bound, x < 0 ? -x : x);
  require(bound <= 64, ErrorKind::BoundExceeded, "right_cancellable_integer: entries too large");
  std::vector<long long> y(n, -bound);
  if (n == 0) return true;
  for (;;) {
    bool nonzero = false;
    for (auto v : y) nonzero = nonzero || v != 0;
    if (nonzero) {
      bool kills = true;
      for (std::size_t j = 0; j < cols && kills; ++j) {
        long long s = 0;
        for (std::size_t i = 0; i < n; ++i) s += y[i] * f[i][j];
        kills = s == 0;
      }
      if (kills) return false;
    }
    std::size_t i = 0;
    while (i < n && ++y[i] > bound) y[i++] = -bound;
    if (i == n) break;
  }
  return true;
}

// Invariant factors of coker(A) from determinantal divisors: d_k is the gcd
// of all k x k minors and the k-th invariant factor is d_k / d_{k-1}.
// Minors by cofactor expansion; intended for matrices up to about 6 x 6.
inline Integer minor_determinant(const Mat<long long> &a, const std::vector<std::size_t> &rows,
                                 const std::vector<std::size_t> &cols) {
  if (rows.empty()) return 1;
  Integer det = 0;
  std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (a[rows[0]][cols[j]] == 0) continue;
    std::vector<std::size_t> sub_cols;
    for (std::size_t t = 0; t < cols.size(); ++t)
      if (t != j) sub_cols.push_back(cols[t]);
    const Integer term = Integer(static_cast<long>(a[rows[0]][cols[j]])) * minor_determinant(a, sub_rows, sub_cols);
    det += (j % 2 == 0) ? term : Integer(-term);
  }
  return det;
}

inline void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>> &out,
                    std::vector<std::size_t> &cur, std::size_t start = 0) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, out, cur, i + 1);
    cur.pop_back();
  }
}

struct AbelianGroup {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion; // invariant factors > 1, each dividing the next
  friend bool operator==(const AbelianGroup &, const AbelianGroup &) = default;
};

// coker of A : Z^cols -> Z^rows
inline AbelianGroup cokernel_group(const Mat<long long> &a, std::size_t rows, std::size_t cols) {
  AbelianGroup g;
  Integer prev = 1;
  std::size_t rank = 0;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(rows, k, rs, cur);
    subsets(cols, k, cs, cur);
    Integer d = 0;
    for (const auto &r : rs)
      for (const auto &c : cs) {
        const Integer minor = minor_determinant(a, r, c);
        mpz_gcd(d.get_mpz_t(), d.get_mpz_t(), minor.get_mpz_t());
      }
    if (d == 0) break;
    const Integer factor = d / prev;
    if (factor != 1) g.torsion.push_back(factor);
    prev = d;
    rank = k;
  }
  g.free_rank = rows - rank;
  return g;
}

} // namespace zeroab::oracle
