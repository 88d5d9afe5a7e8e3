#include "nvl/census.hpp"

#include "nvl/errors.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_dec_float.hpp>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>
#include <tuple>

namespace nvl {

namespace {

constexpr double kWorkCap = 5e8;

double ipow(double base, std::size_t e) {
  double out = 1;
  for (std::size_t k = 0; k < e; ++k) out *= base;
  return out;
}

void guard(std::size_t n, std::uint64_t q, std::size_t work_exponent, const char* who) {
  if (n < 1 || n > kMaxCensusN) throw PreconditionError(std::string(who) + ": exhaustive census needs 1 <= n <= 3");
  if (!is_prime(q)) throw PreconditionError(std::string(who) + ": q must be prime");
  const double qd = static_cast<double>(q);
  if (ipow(qd, n * n) > kWorkCap || ipow(qd, work_exponent) > kWorkCap) {
    throw PreconditionError(std::string(who) + ": enumeration exceeds the exhaustive guard");
  }
}

unsigned worker_count(unsigned requested, std::size_t items) {
  unsigned t = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
  return static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(1, items)));
}

// Mod-q kernels on N x N matrices with int entries in [0, q).
template <int N>
struct Kernel {
  using Mat = std::array<int, N * N>;
  using Vec = std::array<int, N>;

  int q;
  std::vector<int> inv;

  explicit Kernel(std::uint64_t p) : q(static_cast<int>(p)), inv(p, 0) {
    for (int a = 1; a < q; ++a) {
      for (int b = 1; b < q; ++b) {
        if ((static_cast<long long>(a) * b) % q == 1) {
          inv[a] = b;
          break;
        }
      }
    }
  }

  int md(long long x) const {
    x %= q;
    return static_cast<int>(x < 0 ? x + q : x);
  }

  Mat mul(const Mat& a, const Mat& b) const {
    Mat out{};
    for (int r = 0; r < N; ++r) {
      for (int c = 0; c < N; ++c) {
        long long s = 0;
        for (int k = 0; k < N; ++k) s += static_cast<long long>(a[r * N + k]) * b[k * N + c];
        out[r * N + c] = md(s);
      }
    }
    return out;
  }

  Mat commutator(const Mat& x, const Mat& y) const {
    Mat out{};
    for (int r = 0; r < N; ++r) {
      for (int c = 0; c < N; ++c) {
        long long s = 0;
        for (int k = 0; k < N; ++k) {
          s += static_cast<long long>(x[r * N + k]) * y[k * N + c] - static_cast<long long>(y[r * N + k]) * x[k * N + c];
        }
        out[r * N + c] = md(s);
      }
    }
    return out;
  }

  // Characteristic polynomial equals x^N.
  bool nilpotent(const Mat& m) const {
    if constexpr (N == 1) {
      return m[0] == 0;
    } else if constexpr (N == 2) {
      return md(m[0] + m[3]) == 0 && md(static_cast<long long>(m[0]) * m[3] - static_cast<long long>(m[1]) * m[2]) == 0;
    } else {
      if (md(m[0] + m[4] + m[8]) != 0) return false;
      long long minors = static_cast<long long>(m[0]) * m[4] - static_cast<long long>(m[1]) * m[3] +
                         static_cast<long long>(m[0]) * m[8] - static_cast<long long>(m[2]) * m[6] +
                         static_cast<long long>(m[4]) * m[8] - static_cast<long long>(m[5]) * m[7];
      if (md(minors) != 0) return false;
      long long det = static_cast<long long>(m[0]) * (static_cast<long long>(m[4]) * m[8] - static_cast<long long>(m[5]) * m[7]) -
                      static_cast<long long>(m[1]) * (static_cast<long long>(m[3]) * m[8] - static_cast<long long>(m[5]) * m[6]) +
                      static_cast<long long>(m[2]) * (static_cast<long long>(m[3]) * m[7] - static_cast<long long>(m[4]) * m[6]);
      return md(det) == 0;
    }
  }

  bool is_zero(const Mat& m) const {
    return std::all_of(m.begin(), m.end(), [](int v) { return v == 0; });
  }

  int rank(Mat m) const {
    int rk = 0;
    for (int c = 0; c < N && rk < N; ++c) {
      int p = rk;
      while (p < N && m[p * N + c] == 0) ++p;
      if (p == N) continue;
      for (int k = 0; k < N; ++k) std::swap(m[p * N + k], m[rk * N + k]);
      const int iv = inv[m[rk * N + c]];
      for (int k = 0; k < N; ++k) m[rk * N + k] = md(static_cast<long long>(m[rk * N + k]) * iv);
      for (int r = 0; r < N; ++r) {
        if (r == rk || m[r * N + c] == 0) continue;
        const int f = m[r * N + c];
        for (int k = 0; k < N; ++k) m[r * N + k] = md(m[r * N + k] - static_cast<long long>(f) * m[rk * N + k]);
      }
      ++rk;
    }
    return rk;
  }

  Vec apply(const Mat& m, const Vec& v) const {
    Vec out{};
    for (int r = 0; r < N; ++r) {
      long long s = 0;
      for (int k = 0; k < N; ++k) s += static_cast<long long>(m[r * N + k]) * v[k];
      out[r] = md(s);
    }
    return out;
  }

  Vec apply_left(const Vec& v, const Mat& m) const {
    Vec out{};
    for (int c = 0; c < N; ++c) {
      long long s = 0;
      for (int k = 0; k < N; ++k) s += static_cast<long long>(v[k]) * m[k * N + c];
      out[c] = md(s);
    }
    return out;
  }

  struct Span {
    std::array<Vec, N> rows{};
    std::array<int, N> piv{};
    int dim = 0;
  };

  bool add(Span& sp, Vec v) const {
    for (int k = 0; k < sp.dim; ++k) {
      const int f = v[sp.piv[k]];
      if (f == 0) continue;
      for (int m = 0; m < N; ++m) v[m] = md(v[m] - static_cast<long long>(f) * sp.rows[k][m]);
    }
    int p = 0;
    while (p < N && v[p] == 0) ++p;
    if (p == N) return false;
    const int iv = inv[v[p]];
    for (int m = 0; m < N; ++m) v[m] = md(static_cast<long long>(v[m]) * iv);
    sp.rows[sp.dim] = v;
    sp.piv[sp.dim] = p;
    ++sp.dim;
    return true;
  }

  // dim of the span of all words w(X, Y) v (right) or v w(X, Y) (left).
  int closure(const Mat& x, const Mat& y, const Vec& v, bool left) const {
    Span sp;
    std::array<Vec, 2 * N + 1> queue{};
    int head = 0;
    int tail = 0;
    queue[tail++] = v;
    while (head < tail) {
      Vec w = queue[head++];
      if (!add(sp, w)) continue;
      queue[tail++] = left ? apply_left(w, x) : apply(x, w);
      queue[tail++] = left ? apply_left(w, y) : apply(y, w);
    }
    return sp.dim;
  }

  int krylov(const Mat& a, Vec v, bool left) const {
    Span sp;
    while (add(sp, v)) v = left ? apply_left(v, a) : apply(a, v);
    return sp.dim;
  }

  Mat decode_mat(std::uint64_t idx) const {
    Mat m{};
    for (int k = 0; k < N * N; ++k) {
      m[k] = static_cast<int>(idx % q);
      idx /= q;
    }
    return m;
  }

  Vec decode_vec(std::uint64_t idx) const {
    Vec v{};
    for (int k = 0; k < N; ++k) {
      v[k] = static_cast<int>(idx % q);
      idx /= q;
    }
    return v;
  }

  std::uint64_t vec_count() const {
    std::uint64_t c = 1;
    for (int k = 0; k < N; ++k) c *= q;
    return c;
  }

  std::vector<Mat> nilpotents() const {
    std::uint64_t total = 1;
    for (int k = 0; k < N * N; ++k) total *= q;
    std::vector<Mat> out;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      Mat m = decode_mat(idx);
      if (nilpotent(m)) out.push_back(m);
    }
    return out;
  }

  // (i, j) with i j = -C for rank-one C.
  std::pair<Vec, Vec> factor(const Mat& c) const {
    Mat m{};
    for (int k = 0; k < N * N; ++k) m[k] = md(-c[k]);
    int p = 0;
    while (m[p] == 0) ++p;
    const int row = p / N;
    const int col = p % N;
    Vec i{};
    Vec j{};
    const int iv = inv[m[p]];
    for (int k = 0; k < N; ++k) {
      i[k] = m[k * N + col];
      j[k] = md(static_cast<long long>(m[row * N + k]) * iv);
    }
    return {i, j};
  }
};

struct Histogram {
  // [r][s][commuting]
  std::array<std::array<std::array<std::uint64_t, 2>, 4>, 4> strat{};
  std::uint64_t unstrat[2] = {0, 0};
  std::uint64_t commuting_pairs = 0;

  void merge(const Histogram& o) {
    for (int r = 0; r < 4; ++r) {
      for (int s = 0; s < 4; ++s) {
        for (int c = 0; c < 2; ++c) strat[r][s][c] += o.strat[r][s][c];
      }
    }
    unstrat[0] += o.unstrat[0];
    unstrat[1] += o.unstrat[1];
    commuting_pairs += o.commuting_pairs;
  }
};

// Worker k takes items k, k + w, k + 2w, ...; each worker owns its histogram.
template <typename Fn>
void run_strided(std::size_t items, unsigned threads, std::vector<Histogram>& hists, Fn fn) {
  const unsigned w = worker_count(threads, items);
  hists.assign(w, Histogram{});
  if (w == 1) {
    fn(0, 1, hists[0]);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned k = 0; k < w; ++k) pool.emplace_back([&, k] { fn(k, w, hists[k]); });
  for (auto& t : pool) t.join();
}

mpz_class to_mpz(std::uint64_t v) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
  return z;
}

std::vector<CensusRecord> to_records(Variety variety, std::size_t n, std::uint64_t q, const Histogram& h,
                                     const mpz_class& per_commuting_pair) {
  std::vector<CensusRecord> out;
  for (std::size_t r = 0; r <= n; ++r) {
    for (std::size_t s = 0; s <= n; ++s) {
      for (int c = 0; c < 2; ++c) {
        if (h.strat[r][s][c] == 0) continue;
        out.push_back({variety, n, q, r, s, c == 1, to_mpz(h.strat[r][s][c])});
      }
    }
  }
  for (int c = 0; c < 2; ++c) {
    if (h.unstrat[c] != 0) out.push_back({variety, n, q, std::nullopt, std::nullopt, c == 1, to_mpz(h.unstrat[c])});
  }
  if (h.commuting_pairs != 0) {
    out.push_back({variety, n, q, std::nullopt, std::nullopt, true, to_mpz(h.commuting_pairs) * per_commuting_pair});
  }
  return merge_records(std::move(out));
}

template <int N>
std::vector<CensusRecord> census_N(std::uint64_t q, bool stratified, unsigned threads) {
  const Kernel<N> k(q);
  const auto nil = k.nilpotents();
  const std::uint64_t vecs = k.vec_count();
  const bool strat_commuting = stratified && q <= 3;
  std::vector<Histogram> hists;
  // (X, Y, i, j) -> (Y, X, -i, j) preserves N and the stratum, so only b >= a is visited.
  run_strided(nil.size(), threads, hists, [&](std::size_t first, std::size_t step, Histogram& h) {
    for (std::size_t a = first; a < nil.size(); a += step) {
      const auto& x = nil[a];
      for (std::size_t bi = a; bi < nil.size(); ++bi) {
        const auto& y = nil[bi];
        const std::uint64_t wgt = bi == a ? 1 : 2;
        const auto c = k.commutator(x, y);
        if (k.is_zero(c)) {
          if (!strat_commuting) {
            h.commuting_pairs += wgt;
            continue;
          }
          // ij = 0: i = 0 or j = 0.
          for (std::uint64_t v = 0; v < vecs; ++v) {
            const auto w = k.decode_vec(v);
            const int s = k.closure(x, y, w, true);
            h.strat[0][s][1] += wgt;
            if (v == 0) continue;
            const int r = k.closure(x, y, w, false);
            h.strat[r][0][1] += wgt;
          }
          continue;
        }
        if (k.rank(c) != 1) continue;
        if (!stratified) {
          h.unstrat[0] += wgt * (q - 1);
          continue;
        }
        const auto [i, j] = k.factor(c);
        const int r = k.closure(x, y, i, false);
        const int s = k.closure(x, y, j, true);
        h.strat[r][s][0] += wgt * (q - 1);
      }
    }
  });
  for (std::size_t w = 1; w < hists.size(); ++w) hists[0].merge(hists[w]);
  mpz_class per_pair = 2 * to_mpz(vecs) - 1;
  return to_records(Variety::N, N, q, hists[0], per_pair);
}

template <int N>
std::vector<CensusRecord> census_S(std::uint64_t q, bool stratified, unsigned threads) {
  const Kernel<N> k(q);
  const auto nil = k.nilpotents();
  const std::uint64_t vecs = k.vec_count();
  std::vector<typename Kernel<N>::Vec> all(vecs);
  for (std::uint64_t v = 0; v < vecs; ++v) all[v] = k.decode_vec(v);
  std::vector<Histogram> hists;
  run_strided(nil.size(), threads, hists, [&](std::size_t first, std::size_t step, Histogram& h) {
    std::vector<int> rdim(vecs);
    std::vector<int> sdim(vecs);
    std::vector<typename Kernel<N>::Vec> ai(vecs);
    std::vector<typename Kernel<N>::Vec> ja(vecs);
    for (std::size_t idx = first; idx < nil.size(); idx += step) {
      const auto& a = nil[idx];
      for (std::uint64_t v = 0; v < vecs; ++v) {
        rdim[v] = k.krylov(a, all[v], false);
        sdim[v] = k.krylov(a, all[v], true);
        ai[v] = k.apply(a, all[v]);
        ja[v] = k.apply_left(all[v], a);
      }
      for (std::uint64_t vi = 0; vi < vecs; ++vi) {
        const auto& i = all[vi];
        for (std::uint64_t vj = 0; vj < vecs; ++vj) {
          const auto& j = all[vj];
          long long tr = 0;
          for (int m = 0; m < N; ++m) tr += static_cast<long long>(i[m]) * j[m];
          if (k.md(tr) != 0) continue;
          typename Kernel<N>::Mat b{};
          for (int r = 0; r < N; ++r) {
            for (int c = 0; c < N; ++c) b[r * N + c] = k.md(static_cast<long long>(i[r]) * j[c] - a[r * N + c]);
          }
          if (!k.nilpotent(b)) continue;
          // [A, B] = (Ai) j - i (jA).
          bool comm = true;
          for (int r = 0; r < N && comm; ++r) {
            for (int c = 0; c < N; ++c) {
              if (k.md(static_cast<long long>(ai[vi][r]) * j[c] - static_cast<long long>(i[r]) * ja[vj][c]) != 0) {
                comm = false;
                break;
              }
            }
          }
          if (stratified) {
            ++h.strat[rdim[vi]][sdim[vj]][comm ? 1 : 0];
          } else {
            ++h.unstrat[comm ? 1 : 0];
          }
        }
      }
    }
  });
  for (std::size_t w = 1; w < hists.size(); ++w) hists[0].merge(hists[w]);
  return to_records(Variety::S, N, q, hists[0], mpz_class(0));
}

template <int N>
mpz_class commuting_pairs(std::uint64_t q) {
  const Kernel<N> k(q);
  const auto nil = k.nilpotents();
  constexpr int U = N * N;
  mpz_class total = 0;
  for (const auto& x : nil) {
    // Rows of the linear map Y -> XY - YX on vec(Y), reduced mod q.
    std::array<std::array<int, U>, U> sys{};
    for (int r = 0; r < N; ++r) {
      for (int c = 0; c < N; ++c) {
        auto& row = sys[r * N + c];
        for (int m = 0; m < N; ++m) {
          row[m * N + c] = k.md(row[m * N + c] + x[r * N + m]);
          row[r * N + m] = k.md(row[r * N + m] - x[m * N + c]);
        }
      }
    }
    std::array<int, U> pivcol{};
    int rk = 0;
    for (int c = 0; c < U && rk < U; ++c) {
      int p = rk;
      while (p < U && sys[p][c] == 0) ++p;
      if (p == U) continue;
      std::swap(sys[p], sys[rk]);
      const int iv = k.inv[sys[rk][c]];
      for (auto& e : sys[rk]) e = k.md(static_cast<long long>(e) * iv);
      for (int r = 0; r < U; ++r) {
        if (r == rk || sys[r][c] == 0) continue;
        const int f = sys[r][c];
        for (int m = 0; m < U; ++m) sys[r][m] = k.md(sys[r][m] - static_cast<long long>(f) * sys[rk][m]);
      }
      pivcol[rk++] = c;
    }
    std::vector<typename Kernel<N>::Mat> basis;
    std::array<bool, U> is_piv{};
    for (int r = 0; r < rk; ++r) is_piv[pivcol[r]] = true;
    for (int f = 0; f < U; ++f) {
      if (is_piv[f]) continue;
      typename Kernel<N>::Mat v{};
      v[f] = 1;
      for (int r = 0; r < rk; ++r) v[pivcol[r]] = k.md(-sys[r][f]);
      basis.push_back(v);
    }
    // Enumerate the centralizer, counting nilpotent elements.
    const std::size_t d = basis.size();
    std::vector<int> coef(d, 0);
    std::uint64_t hits = 0;
    for (;;) {
      typename Kernel<N>::Mat y{};
      for (std::size_t b = 0; b < d; ++b) {
        if (coef[b] == 0) continue;
        for (int m = 0; m < U; ++m) y[m] += coef[b] * basis[b][m];
      }
      for (auto& e : y) e = k.md(e);
      if (k.nilpotent(y)) ++hits;
      std::size_t pos = 0;
      while (pos < d && ++coef[pos] == k.q) coef[pos++] = 0;
      if (pos == d) break;
    }
    total += to_mpz(hits);
  }
  return total;
}

template <int N>
void visit_N(std::uint64_t q, const std::function<void(const SmallPoint&)>& fn) {
  const Kernel<N> k(q);
  const auto nil = k.nilpotents();
  const std::uint64_t vecs = k.vec_count();
  SmallPoint p;
  p.n = N;
  p.q = q;
  auto emit = [&](const auto& x, const auto& y, const auto& i, const auto& j) {
    std::copy(x.begin(), x.end(), p.X.begin());
    std::copy(y.begin(), y.end(), p.Y.begin());
    std::copy(i.begin(), i.end(), p.i.begin());
    std::copy(j.begin(), j.end(), p.j.begin());
    fn(p);
  };
  const typename Kernel<N>::Vec zero{};
  for (const auto& x : nil) {
    for (const auto& y : nil) {
      const auto c = k.commutator(x, y);
      if (k.is_zero(c)) {
        for (std::uint64_t v = 0; v < vecs; ++v) {
          const auto w = k.decode_vec(v);
          emit(x, y, zero, w);
          if (v != 0) emit(x, y, w, zero);
        }
        continue;
      }
      if (k.rank(c) != 1) continue;
      const auto [i0, j0] = k.factor(c);
      for (int lam = 1; lam < k.q; ++lam) {
        typename Kernel<N>::Vec i{};
        typename Kernel<N>::Vec j{};
        for (int m = 0; m < N; ++m) {
          i[m] = k.md(static_cast<long long>(i0[m]) * lam);
          j[m] = k.md(static_cast<long long>(j0[m]) * k.inv[lam]);
        }
        emit(x, y, i, j);
      }
    }
  }
}

template <int N>
void visit_S(std::uint64_t q, const std::function<void(const SmallPoint&)>& fn) {
  const Kernel<N> k(q);
  const auto nil = k.nilpotents();
  const std::uint64_t vecs = k.vec_count();
  SmallPoint p;
  p.n = N;
  p.q = q;
  for (const auto& a : nil) {
    for (std::uint64_t vi = 0; vi < vecs; ++vi) {
      const auto i = k.decode_vec(vi);
      for (std::uint64_t vj = 0; vj < vecs; ++vj) {
        const auto j = k.decode_vec(vj);
        typename Kernel<N>::Mat b{};
        for (int r = 0; r < N; ++r) {
          for (int c = 0; c < N; ++c) b[r * N + c] = k.md(static_cast<long long>(i[r]) * j[c] - a[r * N + c]);
        }
        if (!k.nilpotent(b)) continue;
        std::copy(a.begin(), a.end(), p.X.begin());
        std::copy(b.begin(), b.end(), p.Y.begin());
        std::copy(i.begin(), i.end(), p.i.begin());
        std::copy(j.begin(), j.end(), p.j.begin());
        fn(p);
      }
    }
  }
}

template <typename R, typename F>
R dispatch(std::size_t n, F&& f) {
  switch (n) {
  case 1:
    return f(std::integral_constant<int, 1>{});
  case 2:
    return f(std::integral_constant<int, 2>{});
  case 3:
    return f(std::integral_constant<int, 3>{});
  default:
    throw PreconditionError("census: n must be 1, 2 or 3");
  }
}

} // namespace

mpz_class count_ij_solutions(const Matrix& c) {
  const FieldSpec f = c.field();
  if (!f.is_prime_field()) throw PreconditionError("count_ij_solutions: C must be over F_q");
  if (!c.is_square()) throw PreconditionError("count_ij_solutions: C must be square");
  mpz_class qn;
  mpz_ui_pow_ui(qn.get_mpz_t(), f.modulus(), c.rows());
  switch (rank(c)) {
  case 0:
    return 2 * qn - 1;
  case 1:
    return mpz_class(to_mpz(f.modulus() - 1));
  default:
    return 0;
  }
}

std::vector<CensusRecord> enumerate_N(std::size_t n, std::uint64_t q, bool stratified, unsigned threads) {
  guard(n, q, 2 * (n * n - n), "enumerate_N");
  return dispatch<std::vector<CensusRecord>>(n, [&](auto nn) { return census_N<decltype(nn)::value>(q, stratified, threads); });
}

std::vector<CensusRecord> enumerate_S(std::size_t n, std::uint64_t q, bool stratified, unsigned threads) {
  guard(n, q, n * n + n, "enumerate_S");
  return dispatch<std::vector<CensusRecord>>(n, [&](auto nn) { return census_S<decltype(nn)::value>(q, stratified, threads); });
}

mpz_class count_commuting_nilpotent_pairs(std::size_t n, std::uint64_t q) {
  guard(n, q, n * n, "count_commuting_nilpotent_pairs");
  return dispatch<mpz_class>(n, [&](auto nn) { return commuting_pairs<decltype(nn)::value>(q); });
}

void for_each_N_point(std::size_t n, std::uint64_t q, const std::function<void(const SmallPoint&)>& fn) {
  guard(n, q, 2 * (n * n - n), "for_each_N_point");
  dispatch<void>(n, [&](auto nn) { visit_N<decltype(nn)::value>(q, fn); });
}

void for_each_S_point(std::size_t n, std::uint64_t q, const std::function<void(const SmallPoint&)>& fn) {
  guard(n, q, n * n + n, "for_each_S_point");
  dispatch<void>(n, [&](auto nn) { visit_S<decltype(nn)::value>(q, fn); });
}

Quadruple SmallPoint::to_quadruple() const {
  const FieldSpec f = FieldSpec::prime(q);
  Quadruple out = Quadruple::zero(f, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      out.X(r, c) = f.from_int(X[r * n + c]);
      out.Y(r, c) = f.from_int(Y[r * n + c]);
    }
    out.i[r] = f.from_int(i[r]);
    out.j[r] = f.from_int(j[r]);
  }
  return out;
}

namespace {

auto record_key(const CensusRecord& r) {
  // Unstratified rows sort after stratified ones.
  auto opt = [](const std::optional<std::size_t>& v) { return v ? static_cast<long long>(*v) : 1LL << 40; };
  return std::make_tuple(static_cast<int>(r.variety), r.n, r.q, opt(r.r), opt(r.s), r.commuting);
}

} // namespace

std::vector<CensusRecord> merge_records(std::vector<CensusRecord> records) {
  std::stable_sort(records.begin(), records.end(),
                   [](const CensusRecord& a, const CensusRecord& b) { return record_key(a) < record_key(b); });
  std::vector<CensusRecord> out;
  for (auto& rec : records) {
    if (!out.empty() && record_key(out.back()) == record_key(rec)) {
      out.back().count += rec.count;
    } else {
      out.push_back(std::move(rec));
    }
  }
  return out;
}

bool RecordFilter::matches(const CensusRecord& rec) const {
  if (variety && *variety != rec.variety) return false;
  if (n && *n != rec.n) return false;
  if (r && rec.r != r) return false;
  if (s && rec.s != s) return false;
  if (commuting && *commuting != rec.commuting) return false;
  return true;
}

namespace {

std::size_t parse_size(const std::string& v, const std::string& key) {
  try {
    std::size_t pos = 0;
    unsigned long long out = std::stoull(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return static_cast<std::size_t>(out);
  } catch (const std::exception&) {
    throw PreconditionError("bad value for " + key + ": " + v);
  }
}

bool parse_bool(const std::string& v) {
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  throw PreconditionError("bad boolean: " + v);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(text);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

} // namespace

RecordFilter RecordFilter::parse(const std::string& text) {
  RecordFilter f;
  if (trim(text).empty()) return f;
  for (const auto& part : split(text, ',')) {
    auto eq = part.find('=');
    if (eq == std::string::npos) throw PreconditionError("filter term without '=': " + part);
    std::string key = trim(part.substr(0, eq));
    std::string val = trim(part.substr(eq + 1));
    if (key == "variety") {
      f.variety = parse_variety(val);
    } else if (key == "n") {
      f.n = parse_size(val, key);
    } else if (key == "r") {
      f.r = parse_size(val, key);
    } else if (key == "s") {
      f.s = parse_size(val, key);
    } else if (key == "commuting") {
      f.commuting = parse_bool(val);
    } else {
      throw PreconditionError("unknown filter key: " + key);
    }
  }
  return f;
}

std::vector<std::pair<std::uint64_t, mpz_class>> totals_by_q(const std::vector<CensusRecord>& records,
                                                             const RecordFilter& filter) {
  std::map<std::uint64_t, mpz_class> acc;
  for (const auto& rec : records) {
    if (filter.matches(rec)) acc[rec.q] += rec.count;
  }
  return {acc.begin(), acc.end()};
}

SlopeEstimate dimension_slope(const std::vector<std::pair<std::uint64_t, mpz_class>>& points) {
  using Dec = boost::multiprecision::cpp_dec_float_50;
  std::map<std::uint64_t, mpz_class> byq;
  for (const auto& [q, c] : points) byq[q] += c;
  if (byq.size() < 2) throw PreconditionError("dimension_slope: need at least two distinct q");
  std::vector<Dec> xs;
  std::vector<Dec> ys;
  for (const auto& [q, c] : byq) {
    if (q < 2) throw PreconditionError("dimension_slope: q must be at least 2");
    if (sgn(c) <= 0) throw PreconditionError("dimension_slope: counts must be positive");
    xs.push_back(log(Dec(q)));
    ys.push_back(log(Dec(c.get_str())));
  }
  const Dec m = Dec(xs.size());
  Dec xbar = 0;
  Dec ybar = 0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    xbar += xs[k];
    ybar += ys[k];
  }
  xbar /= m;
  ybar /= m;
  Dec sxy = 0;
  Dec sxx = 0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    sxy += (xs[k] - xbar) * (ys[k] - ybar);
    sxx += (xs[k] - xbar) * (xs[k] - xbar);
  }
  const Dec slope = sxy / sxx;
  const Dec intercept = ybar - slope * xbar;
  SlopeEstimate out;
  out.points.assign(byq.begin(), byq.end());
  out.slope_text = slope.str(40, std::ios_base::fixed);
  out.slope = slope.convert_to<double>();
  out.intercept = intercept.convert_to<double>();
  for (std::size_t k = 0; k < xs.size(); ++k) out.residuals.push_back(Dec(ys[k] - intercept - slope * xs[k]).convert_to<double>());
  return out;
}

std::string to_string(Variety v) { return v == Variety::N ? "N" : "S"; }

Variety parse_variety(const std::string& text) {
  if (text == "N") return Variety::N;
  if (text == "S") return Variety::S;
  throw PreconditionError("variety must be N or S, got " + text);
}

void write_csv(std::ostream& out, const std::vector<CensusRecord>& records) {
  out << "variety,n,q,r,s,commuting,count\n";
  for (const auto& rec : records) {
    out << to_string(rec.variety) << ',' << rec.n << ',' << rec.q << ',' << (rec.r ? std::to_string(*rec.r) : "*") << ','
        << (rec.s ? std::to_string(*rec.s) : "*") << ',' << (rec.commuting ? "true" : "false") << ',' << rec.count.get_str()
        << '\n';
  }
}

std::vector<CensusRecord> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || trim(line) != "variety,n,q,r,s,commuting,count") {
    throw PreconditionError("census csv: missing or wrong header");
  }
  std::vector<CensusRecord> out;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    auto f = split(trim(line), ',');
    if (f.size() != 7) throw PreconditionError("census csv: expected 7 columns: " + line);
    CensusRecord rec;
    rec.variety = parse_variety(f[0]);
    rec.n = parse_size(f[1], "n");
    rec.q = parse_size(f[2], "q");
    if (f[3] != "*") rec.r = parse_size(f[3], "r");
    if (f[4] != "*") rec.s = parse_size(f[4], "s");
    rec.commuting = parse_bool(f[5]);
    if (rec.count.set_str(f[6], 10) != 0 || sgn(rec.count) < 0) throw PreconditionError("census csv: bad count " + f[6]);
    out.push_back(std::move(rec));
  }
  return out;
}

} // namespace nvl
