#include <benchmark/benchmark.h>

#include <vector>

#include "balg/atom_model.hpp"
#include "balg/free_product.hpp"
#include "balg/place_function.hpp"

using namespace balg;

namespace {

Algebra backend(int code) {
  return code == 0 ? Algebra::finite_cofinite() : Algebra::powerset(code);
}

template <bool Formula>
void BM_Add(benchmark::State& state) {
  const PlaceSpace c(backend(static_cast<int>(state.range(0))));
  Rng rng(1);
  std::vector<PlaceFunction> fs;
  for (int i = 0; i < 64; ++i) fs.push_back(c.random(rng));
  std::size_t i = 0;
  for (auto _ : state) {
    const PlaceFunction& f = fs[i % 64];
    const PlaceFunction& g = fs[(i * 7 + 3) % 64];
    benchmark::DoNotOptimize(Formula ? c.add_formula(f, g) : c.add_refine(f, g));
    ++i;
  }
}

void BM_Normalize(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Algebra a = Algebra::powerset(n);
  const Algebra ab = Algebra::free_product(a, a);
  Rng rng(2);
  std::vector<Rectangle> rects;
  for (int i = 0; i < state.range(1); ++i)
    rects.push_back({random_elem(a, rng), random_elem(a, rng)});
  for (auto _ : state) benchmark::DoNotOptimize(normalize(ab, rects));
}

void BM_ProductMeet(benchmark::State& state) {
  const Algebra fc = Algebra::finite_cofinite();
  const Algebra ff = Algebra::free_product(fc, fc);
  Rng rng(3);
  std::vector<Elem> xs;
  for (int i = 0; i < 64; ++i) xs.push_back(random_elem(ff, rng));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ff.meet(xs[i % 64], xs[(i * 5 + 1) % 64]));
    ++i;
  }
}

void BM_BuildT(benchmark::State& state) {
  const Algebra a = Algebra::powerset(static_cast<int>(state.range(0)));
  const Algebra b = Algebra::powerset(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(build_T(a, b));
}

void BM_Psi(benchmark::State& state) {
  const Algebra a = backend(static_cast<int>(state.range(0)));
  const PsiMap psi(a, a);
  Rng rng(4);
  std::vector<PlaceFunction> fs;
  for (int i = 0; i < 32; ++i) fs.push_back(psi.left().random(rng));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(psi(fs[i % 32], fs[(i * 3 + 1) % 32]));
    ++i;
  }
}

}  // namespace

// Argument 0 selects the finite-cofinite algebra, n > 0 the powerset P(n).
BENCHMARK(BM_Add<true>)->Name("add_formula")->Arg(3)->Arg(8)->Arg(16)->Arg(0);
BENCHMARK(BM_Add<false>)->Name("add_refine")->Arg(3)->Arg(8)->Arg(16)->Arg(0);
BENCHMARK(BM_Normalize)->Args({2, 4})->Args({4, 8})->Args({4, 16});
BENCHMARK(BM_ProductMeet);
BENCHMARK(BM_BuildT)->Args({2, 2})->Args({3, 4})->Args({4, 4});
BENCHMARK(BM_Psi)->Arg(3)->Arg(0);
BENCHMARK_MAIN();
