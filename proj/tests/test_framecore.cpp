#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "framered/errors.hpp"
#include "framered/frame.hpp"
#include "testutil.hpp"

using namespace framered;
namespace ft = framered::testing;

namespace {

template <Scalar T>
Vec<T> basis(std::size_t n, std::size_t k) {
  Vec<T> e(n, T{});
  e[k] = T{1};
  return e;
}

template <Scalar T>
Frame<T> onb(std::size_t n) {
  std::vector<Vec<T>> vectors;
  for (std::size_t i = 0; i < n; ++i) vectors.push_back(basis<T>(n, i));
  return Frame<T>(std::move(vectors), n);
}

double vec_distance(const Vec<double>& a, const Vec<double>& b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    acc = std::max(acc, std::abs(a[i] - b[i]));
  return acc;
}

}  // namespace

TEST_CASE("make_frame: spanning flag and zero vectors") {
  CHECK(onb<double>(3).spanning());
  CHECK(onb<double>(3).size() == 3);

  Frame<double> repeated({{1, 0}, {1, 0}}, 2);
  CHECK_FALSE(repeated.spanning());

  Frame<double> with_zero({{1, 0}, {0, 0}, {0, 1}}, 2);
  CHECK(with_zero.spanning());
  CHECK(with_zero.nonzero_count() == 2);
  CHECK(with_zero.is_zero(1));
}

TEST_CASE("make_frame: error paths") {
  CHECK_THROWS_AS(Frame<double>({}, 2), EmptyInput);
  CHECK_THROWS_AS(Frame<double>({{1, 0}, {1}}, 2), DimensionMismatch);
}

TEST_CASE("analysis: coefficients against the fixed inner product") {
  const auto f = onb<double>(3);
  CHECK(analysis(f, {1, 0, 0}) == Vec<double>{1, 0, 0});

  const auto phi2 = example_phi2<double>(2);
  CHECK(analysis(phi2, {1, 0}) == Vec<double>{1, 1, 0, 0});
  CHECK(analysis(phi2, {0, 0}) == Vec<double>{0, 0, 0, 0});
}

TEST_CASE("analysis: conjugate-linear in the frame vector (complex)") {
  Frame<cplx> f({{cplx(0, 1), cplx(0, 0)}, {cplx(0, 0), cplx(1, 0)}}, 2);
  const auto c = analysis(f, {cplx(1, 0), cplx(0, 0)});
  // <e1, i e1> = conj(i) = -i under linear-in-first convention.
  CHECK(c[0] == cplx(0, -1));
}

TEST_CASE("synthesis: sums and the dual round trip") {
  const auto f = onb<double>(4);
  CHECK(synthesis(f, {1, 1, 1, 1}) == Vec<double>{1, 1, 1, 1});

  const auto phi2 = example_phi2<double>(2);
  CHECK(synthesis(phi2, {1, 0, 0, 0}) == Vec<double>{1, 0});

  Rng rng(303);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = ft::stable_random_frame<double>(3, 6, 500 + trial);
    const auto dual = canonical_dual(g);
    Vec<double> x(3);
    for (auto& e : x) e = rng.normal();
    const auto rebuilt = synthesis(g, analysis(dual, x));
    CHECK(vec_distance(rebuilt, x) <= 1e-9 * (1.0 + std::abs(x[0])));
  }
}

TEST_CASE("frame_operator: diagonal cases and the Parseval identity") {
  const auto id = frame_operator(onb<double>(3));
  CHECK(max_abs_diff(id.matrix(), DenseMatrix<double>::identity(3)) == 0.0);

  Frame<double> f({{2, 0}, {0, 1}}, 2);
  const auto s = frame_operator(f);
  CHECK(s.matrix()(0, 0) == 4.0);
  CHECK(s.matrix()(1, 1) == 1.0);
  CHECK(s.matrix()(0, 1) == 0.0);

  // Canonical Parseval version of a random frame has identity operator.
  const auto g = ft::stable_random_frame<double>(3, 7, 11);
  const auto parseval =
      apply_operator(g, operator_power(frame_operator(g), -0.5).matrix());
  CHECK(max_abs_diff(frame_operator(parseval).matrix(),
                     DenseMatrix<double>::identity(3)) <= 1e-10);
}

TEST_CASE("normalized_frame_operator: scales drop out, zeros are skipped") {
  const auto phi2 = example_phi2<double>(2);
  const auto s2 = normalized_frame_operator(phi2);
  CHECK(max_abs_diff(s2.matrix(),
                     scale(DenseMatrix<double>::identity(2), 2.0)) == 0.0);

  Frame<double> scaled({{2, 0}, {0, 1}}, 2);
  CHECK(max_abs_diff(normalized_frame_operator(scaled).matrix(),
                     DenseMatrix<double>::identity(2)) == 0.0);

  const auto phi13 = example_phi1<double>(2, 3);
  const auto s13 = normalized_frame_operator(phi13);
  CHECK(s13.matrix()(0, 0) == 3.0);
  CHECK(s13.matrix()(1, 1) == 1.0);

  Frame<double> with_zero({{1, 0}, {0, 0}, {0, 1}}, 2);
  CHECK(normalized_frame_operator(with_zero).trace() ==
        doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("frame_bounds: eigenvalue extremes of the frame operator") {
  const FrameBounds ob = frame_bounds(onb<double>(3));
  CHECK(ob.lower == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(ob.upper == doctest::Approx(1.0).epsilon(1e-12));

  const FrameBounds pb = frame_bounds(example_phi2<double>(2));
  CHECK(pb.lower == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(pb.upper == doctest::Approx(2.0).epsilon(1e-12));

  Frame<double> f({{1, 0}, {1, 0}, {0, 1}}, 2);
  const FrameBounds fb = frame_bounds(f);
  CHECK(fb.lower == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fb.upper == doctest::Approx(2.0).epsilon(1e-12));

  Frame<double> degenerate({{1, 0}, {1, 0}}, 2);
  CHECK_THROWS_AS(frame_bounds(degenerate), NotAFrame);
}

TEST_CASE("canonical_dual: fixed points and the scaled basis") {
  const auto id = onb<double>(3);
  const auto dual = canonical_dual(id);
  for (std::size_t i = 0; i < 3; ++i)
    CHECK(vec_distance(dual.vector(i), id.vector(i)) <= 1e-12);

  Frame<double> f({{2, 0}, {0, 1}}, 2);
  const auto fd = canonical_dual(f);
  CHECK(vec_distance(fd.vector(0), {0.5, 0}) <= 1e-12);
  CHECK(vec_distance(fd.vector(1), {0, 1}) <= 1e-12);
}

TEST_CASE_TEMPLATE("canonical_dual: involution on random frames", T, double,
                   cplx) {
  for (int trial = 0; trial < 10; ++trial) {
    const auto f = ft::stable_random_frame<T>(3, 6, 900 + trial);
    const auto back = canonical_dual(canonical_dual(f));
    for (std::size_t i = 0; i < f.size(); ++i) {
      double gap = 0.0;
      for (std::size_t r = 0; r < f.dim(); ++r)
        gap = std::max(gap,
                       std::sqrt(abs_sq(back.vector(i)[r] - f.vector(i)[r])));
      CHECK(gap <= 1e-8);
    }
  }
}

TEST_CASE("example families match their definitions") {
  const auto phi1 = example_phi1<double>(3, 2);
  REQUIRE(phi1.size() == 4);
  CHECK(phi1.vector(0) == Vec<double>{1, 0, 0});
  CHECK(phi1.vector(1) == Vec<double>{1, 0, 0});
  CHECK(phi1.vector(2) == Vec<double>{0, 1, 0});
  CHECK(phi1.vector(3) == Vec<double>{0, 0, 1});

  const auto phi2 = example_phi2<double>(2);
  REQUIRE(phi2.size() == 4);
  CHECK(phi2.vector(0) == Vec<double>{1, 0});
  CHECK(phi2.vector(1) == Vec<double>{1, 0});
  CHECK(phi2.vector(2) == Vec<double>{0, 1});
  CHECK(phi2.vector(3) == Vec<double>{0, 1});

  const auto phi3 = example_phi3<double>(2, 0.6);
  REQUIRE(phi3.size() == 2);
  CHECK(phi3.vector(0) == Vec<double>{1, 0});
  CHECK(phi3.vector(1)[0] == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(phi3.vector(1)[1] == doctest::Approx(0.6).epsilon(1e-15));

  CHECK_THROWS_AS(example_phi3<double>(2, 1.5), InvalidParameter);
  CHECK_THROWS_AS(example_phi1<double>(3, 0), InvalidParameter);
}

TEST_CASE("transforms: permute, scale, rotate") {
  const auto id = onb<double>(3);
  const auto reversed = permute(id, {2, 1, 0});
  CHECK(reversed.vector(0) == Vec<double>{0, 0, 1});
  CHECK_THROWS_AS(permute(id, {0, 0, 1}), InvalidPermutation);

  const auto phi2 = example_phi2<double>(2);
  const auto tripled = scale_vectors(phi2, {3, 3, 3, 3});
  CHECK(tripled.vector(0) == Vec<double>{3, 0});
  CHECK(tripled.vector(3) == Vec<double>{0, 3});

  const double angle = 0.7;
  DenseMatrix<double> rotation(2, 2);
  rotation(0, 0) = std::cos(angle);
  rotation(0, 1) = -std::sin(angle);
  rotation(1, 0) = std::sin(angle);
  rotation(1, 1) = std::cos(angle);
  const auto rotated = apply_operator(onb<double>(2), rotation);
  CHECK(rotated.spanning());

  // A singular image loses the spanning flag but is still stored.
  DenseMatrix<double> projector(2, 2);
  projector(0, 0) = 1.0;
  const auto flattened = apply_operator(onb<double>(2), projector);
  CHECK_FALSE(flattened.spanning());
  CHECK(flattened.size() == 2);
}

TEST_CASE_TEMPLATE("random_frame: determinism and spanning", T, double, cplx) {
  const auto a = random_frame<T>(2, 3, 1);
  const auto b = random_frame<T>(2, 3, 1);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    CHECK(a.vector(i) == b.vector(i));

  const auto c = random_frame<T>(3, 5, 7);
  CHECK(c.spanning());
  CHECK(c.size() == 5);

  const auto square = random_frame<T>(4, 4, 99);
  CHECK(rank(square.synthesis_matrix()) == 4);
}

TEST_CASE_TEMPLATE("invariants: trace, conjugation, scale invariance", T,
                   double, cplx) {
  Rng rng(606);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const std::size_t count = n + trial % 5;
    const auto f = ft::stable_random_frame<T>(n, count, 7000 + trial);

    // trace(normalized operator) counts the nonzero vectors.
    CHECK(std::abs(normalized_frame_operator(f).trace() -
                   static_cast<double>(f.nonzero_count())) <= 1e-9);

    // S(U f) = U S U* for unitary U.
    const auto u = random_unitary<T>(n, 8100 + trial);
    const auto left = frame_operator(apply_operator(f, u)).matrix();
    const auto right =
        matmul(matmul(u, frame_operator(f).matrix()), adjoint(u));
    CHECK(max_abs_diff(left, right) <= 1e-9 * (1.0 + max_abs(right)));

    // Normalized operator ignores nonzero scalings.
    Vec<T> factors(count);
    for (auto& c : factors) {
      if constexpr (std::is_same_v<T, double>) {
        c = rng.uniform() < 0.5 ? -rng.uniform(0.2, 3.0) : rng.uniform(0.2, 3.0);
      } else {
        const double angle = rng.uniform(0.0, 6.28);
        const double mag = rng.uniform(0.2, 3.0);
        c = cplx(mag * std::cos(angle), mag * std::sin(angle));
      }
    }
    CHECK(max_abs_diff(normalized_frame_operator(scale_vectors(f, factors)).matrix(),
                       normalized_frame_operator(f).matrix()) <= 1e-10);
  }
}
