#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "bezsub/bezout.hpp"
#include "bezsub/detp.hpp"
#include "bezsub/subres.hpp"

using namespace bezsub;

namespace {

Rational rnd_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
    return Rational(num(rng), den(rng));
}

std::vector<Rational> rnd_coeffs(std::mt19937& rng, int deg) {
    std::vector<Rational> c(static_cast<size_t>(deg) + 1);
    for (auto& v : c) v = rnd_rational(rng);
    c.back() = Rational(1) + abs(c.back());
    return c;
}

RationalMatrix rnd_matrix(std::mt19937& rng, int n) {
    RationalMatrix m(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m.at(r, c) = rnd_rational(rng);
    return m;
}

void bm_det_bareiss(benchmark::State& state) {
    std::mt19937 rng(7);
    const RationalMatrix m = rnd_matrix(rng, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(det_exact(m));
}

void bm_det_gauss(benchmark::State& state) {
    std::mt19937 rng(7);
    const RationalMatrix m = rnd_matrix(rng, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(det_gauss(m));
}

void bm_bezout_matrix_power(benchmark::State& state) {
    std::mt19937 rng(11);
    const int n = static_cast<int>(state.range(0));
    const Polynomial f(rnd_coeffs(rng, n)), g(rnd_coeffs(rng, n - 1));
    for (auto _ : state) benchmark::DoNotOptimize(bezout_matrix_power(f, g));
}

void bm_chain_newton(benchmark::State& state) {
    std::mt19937 rng(13);
    const int n = static_cast<int>(state.range(0));
    std::vector<Rational> nodes;
    for (int i = 0; i < n; ++i) nodes.push_back(rnd_rational(rng));
    const BasisPtr basis = make_newton_basis(nodes);
    const PolyInBasis f{basis, rnd_coeffs(rng, n)}, g{basis, rnd_coeffs(rng, n - 1)};
    for (auto _ : state) benchmark::DoNotOptimize(subresultant_chain(f, g));
}

}  // namespace

BENCHMARK(bm_det_bareiss)->Arg(6)->Arg(10)->Arg(14);
BENCHMARK(bm_det_gauss)->Arg(6)->Arg(10)->Arg(14);
BENCHMARK(bm_bezout_matrix_power)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(bm_chain_newton)->Arg(6)->Arg(10)->Arg(14);

BENCHMARK_MAIN();
