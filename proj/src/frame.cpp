#include "framered/frame.hpp"

#include <cmath>
#include <utility>

#include "framered/errors.hpp"
#include "framered/rng.hpp"

namespace framered {

template <Scalar T>
Frame<T>::Frame(std::vector<Vec<T>> vectors, std::size_t dim) : dim_(dim) {
  if (dim == 0) throw InvalidParameter("frame dimension must be at least 1");
  if (vectors.empty()) throw EmptyInput("a frame needs at least one vector");
  for (const Vec<T>& v : vectors) {
    if (v.size() != dim)
      throw DimensionMismatch("frame vector length does not match dimension");
  }
  vectors_ = std::move(vectors);
  spanning_ = rank(synthesis_matrix()) == dim_;
}

template <Scalar T>
bool Frame<T>::is_zero(std::size_t i) const {
  for (const T& e : vectors_[i])
    if (!(real_part(e) == 0.0 && imag_part(e) == 0.0)) return false;
  return true;
}

template <Scalar T>
std::size_t Frame<T>::nonzero_count() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < size(); ++i)
    if (!is_zero(i)) ++count;
  return count;
}

template <Scalar T>
DenseMatrix<T> Frame<T>::synthesis_matrix() const {
  DenseMatrix<T> m(dim_, size());
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t r = 0; r < dim_; ++r) m(r, i) = vectors_[i][r];
  return m;
}

template <Scalar T>
Frame<T> make_frame(std::vector<Vec<T>> vectors, std::size_t dim) {
  return Frame<T>(std::move(vectors), dim);
}

template <Scalar T>
Vec<T> analysis(const Frame<T>& f, const Vec<T>& x) {
  if (x.size() != f.dim())
    throw DimensionMismatch("analysis: vector length does not match dim");
  Vec<T> out(f.size(), T{});
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = inner(x, f.vector(i));
  return out;
}

template <Scalar T>
Vec<T> synthesis(const Frame<T>& f, const Vec<T>& coefficients) {
  if (coefficients.size() != f.size())
    throw DimensionMismatch("synthesis: coefficient count does not match N");
  Vec<T> out(f.dim(), T{});
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Vec<T>& phi = f.vector(i);
    for (std::size_t r = 0; r < f.dim(); ++r)
      out[r] += coefficients[i] * phi[r];
  }
  return out;
}

namespace {

// S = sum_i w_i phi_i phi_i*, with w the per-vector weight.
template <Scalar T>
DenseMatrix<T> weighted_outer_sum(const Frame<T>& f,
                                  const std::vector<double>& weights) {
  const std::size_t n = f.dim();
  DenseMatrix<T> s(n, n);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (weights[i] == 0.0) continue;
    const Vec<T>& phi = f.vector(i);
    for (std::size_t r = 0; r < n; ++r) {
      const T left = phi[r] * T(weights[i]);
      for (std::size_t c = 0; c < n; ++c) s(r, c) += left * conjugate(phi[c]);
    }
  }
  return s;
}

}  // namespace

template <Scalar T>
HermitianOperator<T> frame_operator(const Frame<T>& f) {
  std::vector<double> weights(f.size(), 1.0);
  return HermitianOperator<T>(weighted_outer_sum(f, weights));
}

template <Scalar T>
HermitianOperator<T> normalized_frame_operator(const Frame<T>& f) {
  std::vector<double> weights(f.size(), 0.0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f.is_zero(i)) continue;
    weights[i] = 1.0 / norm_sq(f.vector(i));
  }
  return HermitianOperator<T>(weighted_outer_sum(f, weights));
}

template <Scalar T>
FrameBounds frame_bounds(const Frame<T>& f) {
  if (!f.spanning())
    throw NotAFrame("frame_bounds: vectors do not span the space");
  const EigenDecomposition<T> eig = hermitian_eigen(frame_operator(f));
  return FrameBounds{eig.eigenvalues.front(), eig.eigenvalues.back()};
}

template <Scalar T>
Frame<T> canonical_dual(const Frame<T>& f) {
  if (!f.spanning())
    throw NotAFrame("canonical_dual: vectors do not span the space");
  const HermitianOperator<T> inverse = operator_power(frame_operator(f), -1.0);
  std::vector<Vec<T>> duals;
  duals.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    duals.push_back(apply(inverse.matrix(), f.vector(i)));
  return Frame<T>(std::move(duals), f.dim());
}

template <Scalar T>
Frame<T> normalized_copy(const Frame<T>& f) {
  std::vector<Vec<T>> out;
  out.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    Vec<T> v = f.vector(i);
    if (!f.is_zero(i)) {
      const double inv = 1.0 / norm(v);
      for (T& e : v) e = e * T(inv);
    }
    out.push_back(std::move(v));
  }
  return Frame<T>(std::move(out), f.dim());
}

template <Scalar T>
Frame<T> example_phi1(std::size_t n, std::size_t s) {
  if (n < 2 || s < 1)
    throw InvalidParameter("example_phi1 requires n >= 2 and s >= 1");
  std::vector<Vec<T>> vectors;
  for (std::size_t k = 0; k < s; ++k) {
    Vec<T> e(n, T{});
    e[0] = T{1};
    vectors.push_back(std::move(e));
  }
  for (std::size_t i = 1; i < n; ++i) {
    Vec<T> e(n, T{});
    e[i] = T{1};
    vectors.push_back(std::move(e));
  }
  return Frame<T>(std::move(vectors), n);
}

template <Scalar T>
Frame<T> example_phi2(std::size_t n) {
  if (n < 2) throw InvalidParameter("example_phi2 requires n >= 2");
  std::vector<Vec<T>> vectors;
  for (std::size_t i = 0; i < n; ++i) {
    Vec<T> e(n, T{});
    e[i] = T{1};
    vectors.push_back(e);
    vectors.push_back(std::move(e));
  }
  return Frame<T>(std::move(vectors), n);
}

template <Scalar T>
Frame<T> example_phi3(std::size_t n, double eps) {
  if (n < 2) throw InvalidParameter("example_phi3 requires n >= 2");
  if (!(eps > 0.0 && eps < 1.0))
    throw InvalidParameter("example_phi3 requires 0 < eps < 1");
  const double overlap = std::sqrt(1.0 - eps * eps);
  std::vector<Vec<T>> vectors;
  Vec<T> first(n, T{});
  first[0] = T{1};
  vectors.push_back(std::move(first));
  for (std::size_t i = 1; i < n; ++i) {
    Vec<T> v(n, T{});
    v[0] = T(overlap);
    v[i] = T(eps);
    vectors.push_back(std::move(v));
  }
  return Frame<T>(std::move(vectors), n);
}

template <Scalar T>
Frame<T> apply_operator(const Frame<T>& f, const DenseMatrix<T>& t) {
  if (t.rows() != f.dim() || t.cols() != f.dim())
    throw DimensionMismatch("apply_operator: operator must be dim x dim");
  std::vector<Vec<T>> out;
  out.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    out.push_back(apply(t, f.vector(i)));
  return Frame<T>(std::move(out), f.dim());
}

template <Scalar T>
Frame<T> scale_vectors(const Frame<T>& f, const Vec<T>& factors) {
  if (factors.size() != f.size())
    throw DimensionMismatch("scale_vectors: need one factor per vector");
  std::vector<Vec<T>> out;
  out.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    Vec<T> v = f.vector(i);
    for (T& e : v) e = e * factors[i];
    out.push_back(std::move(v));
  }
  return Frame<T>(std::move(out), f.dim());
}

template <Scalar T>
Frame<T> permute(const Frame<T>& f, const std::vector<std::size_t>& pi) {
  if (pi.size() != f.size())
    throw InvalidPermutation("permutation length does not match N");
  std::vector<bool> seen(f.size(), false);
  for (std::size_t p : pi) {
    if (p >= f.size() || seen[p])
      throw InvalidPermutation("not a permutation of 0..N-1");
    seen[p] = true;
  }
  std::vector<Vec<T>> out;
  out.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out.push_back(f.vector(pi[i]));
  return Frame<T>(std::move(out), f.dim());
}

template <Scalar T>
Frame<T> concat(const Frame<T>& f, const Frame<T>& g) {
  if (f.dim() != g.dim())
    throw DimensionMismatch("concat: frames live in different dimensions");
  std::vector<Vec<T>> out = f.vectors();
  out.insert(out.end(), g.vectors().begin(), g.vectors().end());
  return Frame<T>(std::move(out), f.dim());
}

namespace {

template <Scalar T>
T draw_gaussian(Rng& rng);

template <>
double draw_gaussian<double>(Rng& rng) {
  return rng.normal();
}

template <>
cplx draw_gaussian<cplx>(Rng& rng) {
  const double re = rng.normal();
  const double im = rng.normal();
  return cplx(re, im);
}

template <Scalar T>
DenseMatrix<T> gaussian_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  DenseMatrix<T> m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = draw_gaussian<T>(rng);
  return m;
}

}  // namespace

template <Scalar T>
Frame<T> random_frame(std::size_t n, std::size_t count, std::uint64_t seed) {
  if (n < 1 || count < n)
    throw InvalidParameter("random_frame requires N >= n >= 1");
  Rng rng(seed);
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<Vec<T>> vectors;
    vectors.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      Vec<T> v(n);
      for (std::size_t r = 0; r < n; ++r) v[r] = draw_gaussian<T>(rng);
      vectors.push_back(std::move(v));
    }
    Frame<T> f(std::move(vectors), n);
    if (f.spanning()) return f;
  }
  throw GenerationFailed("random_frame: no spanning draw in 100 attempts");
}

template <Scalar T>
DenseMatrix<T> random_unitary(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  for (int attempt = 0; attempt < 100; ++attempt) {
    DenseMatrix<T> m = gaussian_matrix<T>(n, n, rng);
    // Modified Gram-Schmidt, twice for orthogonality at working precision.
    bool degenerate = false;
    for (int pass = 0; pass < 2 && !degenerate; ++pass) {
      for (std::size_t c = 0; c < n && !degenerate; ++c) {
        for (std::size_t prev = 0; prev < c; ++prev) {
          T proj{};
          for (std::size_t r = 0; r < n; ++r)
            proj += m(r, c) * conjugate(m(r, prev));
          for (std::size_t r = 0; r < n; ++r) m(r, c) -= proj * m(r, prev);
        }
        double nrm = 0.0;
        for (std::size_t r = 0; r < n; ++r) nrm += abs_sq(m(r, c));
        nrm = std::sqrt(nrm);
        if (nrm < 1e-8) {
          degenerate = true;
          break;
        }
        for (std::size_t r = 0; r < n; ++r) m(r, c) = m(r, c) * T(1.0 / nrm);
      }
    }
    if (!degenerate) return m;
  }
  throw GenerationFailed("random_unitary: degenerate draws");
}

template <Scalar T>
DenseMatrix<T> random_conditioned(std::size_t n, double kappa_max,
                                  std::uint64_t seed) {
  if (kappa_max < 1.0)
    throw InvalidParameter("condition number bound must be >= 1");
  const DenseMatrix<T> u = random_unitary<T>(n, seed);
  const DenseMatrix<T> v = random_unitary<T>(n, seed + 0x9e3779b97f4a7c15ull);
  Rng rng(seed + 0x2545f4914f6cdd1dull);
  const double lo = 1.0 / std::sqrt(kappa_max);
  const double hi = std::sqrt(kappa_max);
  DenseMatrix<T> middle(n, n);
  for (std::size_t i = 0; i < n; ++i) middle(i, i) = T(rng.uniform(lo, hi));
  return matmul(matmul(u, middle), adjoint(v));
}

#define FRAMERED_INSTANTIATE(T)                                               \
  template class Frame<T>;                                                    \
  template Frame<T> make_frame<T>(std::vector<Vec<T>>, std::size_t);          \
  template Vec<T> analysis<T>(const Frame<T>&, const Vec<T>&);                \
  template Vec<T> synthesis<T>(const Frame<T>&, const Vec<T>&);               \
  template HermitianOperator<T> frame_operator<T>(const Frame<T>&);           \
  template HermitianOperator<T> normalized_frame_operator<T>(const Frame<T>&);\
  template FrameBounds frame_bounds<T>(const Frame<T>&);                      \
  template Frame<T> canonical_dual<T>(const Frame<T>&);                       \
  template Frame<T> normalized_copy<T>(const Frame<T>&);                      \
  template Frame<T> example_phi1<T>(std::size_t, std::size_t);                \
  template Frame<T> example_phi2<T>(std::size_t);                             \
  template Frame<T> example_phi3<T>(std::size_t, double);                     \
  template Frame<T> apply_operator<T>(const Frame<T>&, const DenseMatrix<T>&);\
  template Frame<T> scale_vectors<T>(const Frame<T>&, const Vec<T>&);         \
  template Frame<T> permute<T>(const Frame<T>&,                               \
                               const std::vector<std::size_t>&);              \
  template Frame<T> concat<T>(const Frame<T>&, const Frame<T>&);              \
  template Frame<T> random_frame<T>(std::size_t, std::size_t, std::uint64_t); \
  template DenseMatrix<T> random_unitary<T>(std::size_t, std::uint64_t);      \
  template DenseMatrix<T> random_conditioned<T>(std::size_t, double,          \
                                                std::uint64_t);

FRAMERED_INSTANTIATE(double)
FRAMERED_INSTANTIATE(cplx)

#undef FRAMERED_INSTANTIATE

}  // namespace framered
