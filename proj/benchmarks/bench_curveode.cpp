// Microbenchmarks for the hot paths: series arithmetic, Newton lifting,
// the embedding, and the special-function constructions.  Inputs are
// deterministic so runs are comparable across machines and revisions.

#include <benchmark/benchmark.h>

#include <vector>

#include "curveode/curve.hpp"
#include "curveode/diffop.hpp"
#include "curveode/eval.hpp"
#include "curveode/series.hpp"
#include "curveode/special.hpp"

using namespace curveode;

namespace {

// A deterministic dense series with unit free term and mildly growing
// denominators, so coefficient arithmetic stays representative of real
// expansions without pulling in a random generator.
TruncatedSeries patterned(long trunc, long salt) {
  std::vector<Rational> c(static_cast<size_t>(trunc) + 1);
  c[0] = 1;
  for (long k = 1; k <= trunc; ++k) {
    Rational q((salt * k) % 23 - 11, (k % 9) + 2);
    q.canonicalize();
    c[static_cast<size_t>(k)] = q;
  }
  return TruncatedSeries(std::move(c), trunc, false);
}

void BM_SeriesMul(benchmark::State& state) {
  long n = state.range(0);
  TruncatedSeries a = patterned(n, 7919);
  TruncatedSeries b = patterned(n, 6037);
  for (auto _ : state) {
    TruncatedSeries r = mul(a, b);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_SeriesMul)->Arg(16)->Arg(64)->Arg(256);

void BM_SeriesInvert(benchmark::State& state) {
  long n = state.range(0);
  TruncatedSeries a = patterned(n, 7919);
  for (auto _ : state) {
    TruncatedSeries r = invert(a, n);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_SeriesInvert)->Arg(16)->Arg(64)->Arg(256);

void BM_SeriesSqrt(benchmark::State& state) {
  long n = state.range(0);
  TruncatedSeries base = patterned(n, 6037);
  TruncatedSeries square = mul(base, base);
  for (auto _ : state) {
    TruncatedSeries r = sqrt(square, n);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_SeriesSqrt)->Arg(16)->Arg(64)->Arg(256);

void BM_ExpandBranch(benchmark::State& state) {
  long n = state.range(0);
  CurveChart chart = hyperbola_chart();
  for (auto _ : state) {
    TruncatedSeries u = expand_branch(chart, n);
    benchmark::DoNotOptimize(u);
  }
}
BENCHMARK(BM_ExpandBranch)->Arg(16)->Arg(64)->Arg(128);

void BM_SharpEmbed(benchmark::State& state) {
  long n = state.range(0);
  CurveChart chart = hyperbola_chart();
  ExprPtr e = parse_expr("y*(x+y)^3");
  for (auto _ : state) {
    LaurentSeries s = sharp_embed(e, chart, n);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_SharpEmbed)->Arg(16)->Arg(40);

void BM_BesselSeries(benchmark::State& state) {
  long n = state.range(0);
  for (auto _ : state) {
    SeriesFunction j2 = bessel_series(2, n);
    benchmark::DoNotOptimize(j2);
  }
}
BENCHMARK(BM_BesselSeries)->Arg(20)->Arg(40)->Arg(80);

void BM_SolveIvp(benchmark::State& state) {
  long n = state.range(0);
  DiffOperator op(LaurentSeries(-2, patterned(n + 2, 7919)));
  std::vector<Rational> init = {Rational(1), Rational(0)};
  for (auto _ : state) {
    SeriesFunction w = solve_ivp(op, init, n);
    benchmark::DoNotOptimize(w);
  }
}
BENCHMARK(BM_SolveIvp)->Arg(20)->Arg(40)->Arg(80);

void BM_VerifySuite(benchmark::State& state) {
  for (auto _ : state) {
    VerifyReport report = verify_bessel_suite(2, 14);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_VerifySuite);

void BM_EvalSample(benchmark::State& state) {
  SeriesFunction j0 = bessel_series(0, 40);
  for (auto _ : state) {
    SampleRow row = eval_sample(j0, 2.0);
    benchmark::DoNotOptimize(row);
  }
}
BENCHMARK(BM_EvalSample);

}  // namespace

BENCHMARK_MAIN();
