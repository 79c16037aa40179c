// Benchmark: OpenMP kernels against their serial reference
// implementations. The curve build is timed on a family curve; the
// product and rank kernels on dense random matrices, where the work is
// not skipped by sparsity.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>

#include "cartier/engine.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace cartier;

namespace {

using clock_type = std::chrono::steady_clock;

template <typename F>
double time_call(F&& f) {
  const auto t0 = clock_type::now();
  f();
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

MatFp random_dense(std::size_t dim, std::uint64_t p, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
  MatFp m(dim, dim, p);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) m.set(r, c, dist(rng));
  }
  return m;
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t p = 5;
  std::int64_t n = 41;
  if (argc > 1) p = std::stoull(argv[1]);
  if (argc > 2) n = std::stoll(argv[2]);

#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (OpenMP disabled)\n");
#endif

  const CurveModel curve = make_fermat(p, n);
  const std::size_t g = curve.basis.size();
  std::printf("curve: fermat p=%llu n=%lld genus=%zu\n", (unsigned long long)p, (long long)n, g);

  CartierMatrix parallel_build = build_cartier_matrix(curve);
  const double t_build_par = time_call([&] { parallel_build = build_cartier_matrix(curve); });
  CartierMatrix serial_build = build_cartier_matrix_serial(curve);
  const double t_build_ser = time_call([&] { serial_build = build_cartier_matrix_serial(curve); });
  std::printf("build    serial %8.3fs   parallel %8.3fs   speedup %5.2fx   equal: %s\n",
              t_build_ser, t_build_par, t_build_ser / t_build_par,
              parallel_build.M == serial_build.M ? "yes" : "NO");

  const MatFp dense = random_dense(g, p, 12345);
  const MatFp dense2 = random_dense(g, p, 67890);

  MatFp prod_par = dense;
  const double t_mul_par = time_call([&] { prod_par = mat_mul(dense, dense2); });
  MatFp prod_ser = dense;
  const double t_mul_ser = time_call([&] { prod_ser = mat_mul_serial(dense, dense2); });
  std::printf("mat_mul  serial %8.3fs   parallel %8.3fs   speedup %5.2fx   equal: %s  (dense %zux%zu)\n",
              t_mul_ser, t_mul_par, t_mul_ser / t_mul_par, prod_par == prod_ser ? "yes" : "NO",
              g, g);

  std::size_t rank_par = 0, rank_ser = 0;
  const double t_rank_par = time_call([&] { rank_par = mat_rank(dense); });
  const double t_rank_ser = time_call([&] { rank_ser = mat_rank_colpivot(dense); });
  std::printf("rank     serial %8.3fs   parallel %8.3fs   speedup %5.2fx   equal: %s  (rank %zu)\n",
              t_rank_ser, t_rank_par, t_rank_ser / t_rank_par, rank_par == rank_ser ? "yes" : "NO",
              rank_par);

  std::size_t curve_rank = 0;
  const double t_curve_rank = time_call([&] { curve_rank = mat_rank(parallel_build.M); });
  std::printf("curve rank %zu in %.3fs; a-number %zu\n", curve_rank, t_curve_rank,
              g - curve_rank);
  return 0;
}
