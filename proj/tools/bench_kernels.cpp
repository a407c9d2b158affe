// Compares the serial reference series-matrix product against the
// OpenMP-parallel kernel, and times a few full invariant computations.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <random>

#include "nct/matrices.hpp"
#include "nct/seifert.hpp"

using namespace nct;

namespace {

template <class F> double time_best_of(int reps, F &&f) {
	double best = 1e100;
	for (int r = 0; r < reps; ++r) {
		auto t0 = std::chrono::steady_clock::now();
		f();
		auto t1 = std::chrono::steady_clock::now();
		best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
	}
	return best;
}

SeriesMatrix random_series_matrix(std::size_t n, int gens, int order, std::uint64_t seed) {
	std::mt19937_64 rng(seed);
	LambdaMatrix m(n, gens);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) {
			std::vector<std::int32_t> raw;
			std::size_t len = rng() % 4;
			for (std::size_t t = 0; t < len; ++t) {
				std::int32_t k = static_cast<std::int32_t>(rng() % gens) + 1;
				raw.push_back(rng() % 2 ? k : -k);
			}
			Rat c = static_cast<long>(rng() % 5) - 2;
			if (c == 0)
				c = 1;
			m.at(i, j) = GroupRingElement::monomial(c, reduce_word(raw, gens)) +
			             GroupRingElement::constant(gens, i == j ? 1 : 0);
		}
	return magnus_embed(m, order);
}

void bench_mul(std::size_t n, int gens, int order) {
	SeriesMatrix a = random_series_matrix(n, gens, order, 11);
	SeriesMatrix b = random_series_matrix(n, gens, order, 23);
	SeriesMatrix rs = mul_serial(a, b);
	SeriesMatrix rp = mul_parallel(a, b);
	if (!(rs == rp)) {
		std::printf("MISMATCH between serial and parallel kernels (n=%zu)\n", n);
		std::exit(1);
	}
	double ts = time_best_of(3, [&] { (void)mul_serial(a, b); });
	double tp = time_best_of(3, [&] { (void)mul_parallel(a, b); });
	std::printf("mul  n=%2zu g=%d N=%d   serial %8.3f ms   parallel %8.3f ms   speedup %.2fx\n", n,
	            gens, order, ts * 1e3, tp * 1e3, ts / tp);
}

void bench_chi_trefoil(int order) {
	IntMatrix a(2);
	a.at(0, 0) = -1, a.at(0, 1) = 1, a.at(1, 0) = 0, a.at(1, 1) = -1;
	SeifertMatrix s = validate_seifert(a);
	SurgeryData sd = build_W(s);
	double t = time_best_of(3, [&] { (void)chi(sd.W, order); });
	std::printf("chi(W) trefoil N=%d   %8.3f ms\n", order, t * 1e3);
}

} // namespace

int main() {
	std::printf("threads: %d\n", omp_get_max_threads());
	bench_mul(4, 2, 6);
	bench_mul(8, 2, 6);
	bench_mul(12, 1, 8);
	bench_mul(12, 3, 5);
	bench_chi_trefoil(8);
	bench_chi_trefoil(12);
	return 0;
}
