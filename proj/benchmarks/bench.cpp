#include "fuzz.hpp"

#include "fixpoint/compile.hpp"
#include "fixpoint/diag.hpp"
#include "fixpoint/encode.hpp"
#include "fixpoint/model.hpp"
#include "fixpoint/parse.hpp"
#include "fixpoint/stack.hpp"
#include "fixpoint/stdlib.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace fixpoint;

std::vector<Formula> corpus() {
  testing::Rng rng(1);
  std::vector<Formula> out;
  for (int i = 0; i < 256; ++i) out.push_back(testing::random_formula(rng, {5, 4}));
  return out;
}

void BM_EncodeDecode(benchmark::State& state) {
  const std::vector<Formula> fs = corpus();
  std::size_t i = 0;
  for (auto _ : state) {
    const Formula& f = fs[i++ % fs.size()];
    benchmark::DoNotOptimize(decode(encode(f).value()));
  }
}
BENCHMARK(BM_EncodeDecode);

void BM_Numeral(benchmark::State& state) {
  const Nat n = Nat(1) << static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(numeral(n - 1));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Numeral)->RangeMultiplier(8)->Range(64, 1 << 18)->Complexity(benchmark::oN);

void BM_DiagProgram(benchmark::State& state) {
  const Prf& diag = stdlib_program("diag");
  const Nat code = encode(parse_formula("E x1 (x1 + x1 = x0)")).value();
  for (auto _ : state) benchmark::DoNotOptimize(eval(diag, {code}));
}
BENCHMARK(BM_DiagProgram);

void BM_DiagNative(benchmark::State& state) {
  const Nat code = encode(parse_formula("E x1 (x1 + x1 = x0)")).value();
  for (auto _ : state) benchmark::DoNotOptimize(f_native(code));
}
BENCHMARK(BM_DiagNative);

void BM_CompileDiag(benchmark::State& state) {
  const Prf& diag = stdlib_program("diag");
  for (auto _ : state) benchmark::DoNotOptimize(compile(diag));
}
BENCHMARK(BM_CompileDiag)->Unit(benchmark::kMillisecond);

void BM_CertifiedFactorial(benchmark::State& state) {
  const CompiledGraph g = compile(stdlib_program("factorial"));
  const Nat k = static_cast<unsigned long>(state.range(0));
  const std::vector<Nat> args{k};
  const Nat out = eval(g.program, args);
  for (auto _ : state) {
    Certificate cert = witnesses(g, args);
    benchmark::DoNotOptimize(eval_certified(g.formula, Env{{0, k}, {1, out}}, cert, {}));
  }
}
BENCHMARK(BM_CertifiedFactorial)->Arg(5)->Arg(20)->Arg(80);

void BM_Diagonalize(benchmark::State& state) {
  const Formula phi = parse_formula("E x1 (x1 + x1 = x0)");
  diag_graph();
  for (auto _ : state) benchmark::DoNotOptimize(diagonalize(phi));
}
BENCHMARK(BM_Diagonalize)->Unit(benchmark::kMillisecond);

void BM_DecideLambda(benchmark::State& state) {
  const DiagonalResult d = diagonalize(parse_formula("~(x0 = x0)"));
  const std::vector<GraphHint> hints{diag_hint()};
  for (auto _ : state) benchmark::DoNotOptimize(eval_bounded(d.lambda, Env{}, {}, hints));
}
BENCHMARK(BM_DecideLambda)->Unit(benchmark::kMillisecond);

}  // namespace

int main(int argc, char** argv) {
  return run_with_large_stack([&] {
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
    benchmark::RunSpecifiedBenchmarks();
    benchmark::Shutdown();
    return 0;
  });
}
