#include "albert/hexagon.hpp"
#include "albert/innerfact.hpp"
#include "albert/random.hpp"

#include <benchmark/benchmark.h>

using namespace albert;

namespace {

AlbertPtr split() {
  static const AlbertPtr A = AlbertAlgebra::first("split", Assoc3Algebra::matrix3("M3", NumberField::rationals()), 1);
  return A;
}

AlbertPtr octonionic() {
  static const AlbertPtr A =
      AlbertAlgebra::reduced("hdiv", CayleyAlgebra::create("O", -1, -1, -1), {Rational(1), Rational(-1), Rational(2)});
  return A;
}

void BM_jordan_product(benchmark::State& state) {
  Sampler s(1);
  const AlbertElem x = s.albert(octonionic()), y = s.albert(octonionic());
  for (auto _ : state) benchmark::DoNotOptimize(jmul(x, y));
}
BENCHMARK(BM_jordan_product);

void BM_norm(benchmark::State& state) {
  Sampler s(2);
  const AlbertElem x = s.albert(split());
  for (auto _ : state) benchmark::DoNotOptimize(norm(x));
}
BENCHMARK(BM_norm);

void BM_u_operator_matrix(benchmark::State& state) {
  Sampler s(3);
  const AlbertElem x = s.albert(octonionic());
  for (auto _ : state) benchmark::DoNotOptimize(u_op(x));
}
BENCHMARK(BM_u_operator_matrix)->Unit(benchmark::kMillisecond);

void BM_eval_jp_word(benchmark::State& state) {
  Sampler s(4);
  const AssocPtr& D = split()->assoc();
  const InstrWord w = jp_word(split(), s.invertible_assoc(D), s.invertible_assoc(D));
  for (auto _ : state) benchmark::DoNotOptimize(eval_word(w));
}
BENCHMARK(BM_eval_jp_word)->Unit(benchmark::kMillisecond);

void BM_determinant_27(benchmark::State& state) {
  Sampler s(5);
  const Matrix m = u_op(s.albert(octonionic())) + Matrix::identity(AlbertAlgebra::dim);
  for (auto _ : state) benchmark::DoNotOptimize(determinant(m));
}
BENCHMARK(BM_determinant_27)->Unit(benchmark::kMillisecond);

void BM_hex_mul(benchmark::State& state) {
  Sampler s(6);
  const AlbertPtr A = octonionic();
  const auto random_hex = [&] {
    return HexElem{A, s.albert(A), s.rational(), s.albert(A), s.rational(), s.albert(A), s.rational()};
  };
  const HexElem g = random_hex(), h = random_hex();
  for (auto _ : state) benchmark::DoNotOptimize(hex_mul(g, h));
}
BENCHMARK(BM_hex_mul)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
