#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include <mcg/constraint.hpp>
#include <mcg/linalg.hpp>
#include <mcg/mod2.hpp>
#include <mcg/relations.hpp>
#include <mcg/representation.hpp>
#include <mcg/scenario.hpp>
#include <mcg/standard_matrices.hpp>
#include <mcg/word.hpp>

using namespace mcg;

namespace {

Matrix<Int> dense_int(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> val(-9, 9);
  Matrix<Int> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = val(rng);
  return m;
}

void matrix_product(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Matrix<Int> a = dense_int(n, 11u);
  Matrix<Int> b = dense_int(n, 12u);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(matrix_product)->Arg(8)->Arg(16);

void matrix_power(benchmark::State& state) {
  Matrix<Int> a = std_A(2, 10) * std_B(3, 10) * std_C(1, 10);
  for (auto _ : state) benchmark::DoNotOptimize(pow(a, Int(64)));
}
BENCHMARK(matrix_power);

void poly_product(benchmark::State& state) {
  Poly p = Poly::parse("x^3 + 2*x*y - y^2 + 3*z - 1");
  Poly q = Poly::parse("x*z^2 - 5*y*z + y^3 + 7");
  for (auto _ : state) benchmark::DoNotOptimize(p * q);
}
BENCHMARK(poly_product);

void commutant(benchmark::State& state) {
  const int g = 8;
  GeneratorTable t = rep_table(RepName::Psi1, g);
  std::vector<Matrix<Int>> twists;
  for (const auto& [gen, m] : t.entries)
    if (gen.family != Family::U) twists.push_back(m);
  for (auto _ : state) benchmark::DoNotOptimize(commutant_basis(twists));
}
BENCHMARK(commutant);

void relation_suite(benchmark::State& state) {
  GeneratorTable t = rep_table(RepName::Psi1, 8);
  std::vector<Relation> rels = relations_for(8, 0);
  for (auto _ : state) {
    int failed = 0;
    for (const Relation& rel : rels) {
      if (!t.covers(rel.lhs) || !t.covers(rel.rhs)) continue;
      if (eval_word(t, rel.lhs) != eval_word(t, rel.rhs)) ++failed;
    }
    benchmark::DoNotOptimize(failed);
  }
}
BENCHMARK(relation_suite);

void mod2_factorization(benchmark::State& state) {
  SurfaceContext ctx{8, 0, SurfaceKind::Nonorientable};
  Word w = parse_word("d1 u3 e2 d7^-1 u5 d4 e3 u1^-1", ctx);
  for (auto _ : state) {
    Matrix<GF2> l = rho_word(w);
    benchmark::DoNotOptimize(decompose_isov(3, l));
  }
}
BENCHMARK(mod2_factorization);

void solver(benchmark::State& state) {
  ConstraintSystem sys = ConstraintSystem::of(
      {Poly::parse("x^2 - 1"), Poly::parse("y^2 - 1"),
       Poly::parse("z - x*y"), Poly::parse("w + z - 2*x")});
  for (auto _ : state) benchmark::DoNotOptimize(greedy_solve(sys));
}
BENCHMARK(solver);

void derivation(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(run_scenario(ScenarioId::Lemma51));
}
BENCHMARK(derivation);

}  // namespace
