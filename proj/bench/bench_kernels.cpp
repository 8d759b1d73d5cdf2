#include <benchmark/benchmark.h>

#include "ncsf/kernels.hpp"
#include "ncsf/nabla.hpp"
#include "ncsf/parambases.hpp"
#include "ncsf/sampling.hpp"

using namespace ncsf;

namespace {

Matrix<MPoly> kostka(int n) { return kostka_matrix(n, ParamFamily::qt); }

std::vector<Point> points(const Matrix<MPoly>& m, int count) {
  std::vector<MPoly> entries;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) entries.push_back(m(i, j));
  PointSampler s(kDefaultSeed);
  auto vs = collect_variables(entries);
  std::vector<Point> out;
  for (int k = 0; k < count; ++k) out.push_back(s.sample(vs));
  return out;
}

WordTerm phi_term() {
  return [](const PackedWord& w) {
    Composition c = descent_composition(sigma_of_word(w));
    return std::make_pair(c.canonical_index(), phi_statistic(w));
  };
}

void BM_multiply(benchmark::State& st) {
  auto m = kostka(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(multiply(m, m));
}
void BM_multiply_serial(benchmark::State& st) {
  auto m = kostka(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(multiply_serial(m, m));
}

void BM_packed_words(benchmark::State& st) {
  int n = static_cast<int>(st.range(0));
  auto term = phi_term();
  for (auto _ : st) benchmark::DoNotOptimize(packed_word_sum(n, std::size_t{1} << (n - 1), term));
}
void BM_packed_words_serial(benchmark::State& st) {
  int n = static_cast<int>(st.range(0));
  auto term = phi_term();
  for (auto _ : st) benchmark::DoNotOptimize(packed_word_sum_serial(n, std::size_t{1} << (n - 1), term));
}

void BM_determinants(benchmark::State& st) {
  auto m = kostka(static_cast<int>(st.range(0)));
  auto pts = points(m, 20);
  for (auto _ : st) benchmark::DoNotOptimize(determinants_at(m, pts));
}
void BM_determinants_serial(benchmark::State& st) {
  auto m = kostka(static_cast<int>(st.range(0)));
  auto pts = points(m, 20);
  for (auto _ : st) benchmark::DoNotOptimize(determinants_at_serial(m, pts));
}

}  // namespace

BENCHMARK(BM_multiply)->Arg(4)->Arg(5);
BENCHMARK(BM_multiply_serial)->Arg(4)->Arg(5);
BENCHMARK(BM_packed_words)->Arg(4)->Arg(5);
BENCHMARK(BM_packed_words_serial)->Arg(4)->Arg(5);
BENCHMARK(BM_determinants)->Arg(4)->Arg(5);
BENCHMARK(BM_determinants_serial)->Arg(4)->Arg(5);

BENCHMARK_MAIN();
