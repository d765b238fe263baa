#include "doctest.h"
#include "support.hpp"
#include "theta_root/series_json.hpp"
#include "theta_root/xq_series.hpp"

using namespace theta_root;
using support::from_longs;

TEST_SUITE("series") {

TEST_CASE("add examples") {
  const QSeries a(3, {1, 1});
  const QSeries b(3, {0, 1, 1});
  CHECK(a + b == QSeries(3, {1, 2, 1}));
  CHECK(add(a, QSeries(2)) == a.truncated(2));
  CHECK((a + (-a)).is_zero());
}

TEST_CASE("mul examples") {
  CHECK(QSeries(2, {1, 1}) * QSeries(2, {1, -1}) == QSeries(2, {1, 0, -1}));
  const QSeries a(5, {3, -2, 7, 0, 1, 9});
  CHECK(mul(a, QSeries::one(5)) == a);
  const QSeries geometric(10, std::vector<Integer>(11, 1));
  CHECK(geometric * QSeries(10, {1, -1}) == QSeries::one(10));
}

TEST_CASE("binary operations take the smaller order") {
  const QSeries a(7, {1, 2, 3, 4, 5, 6, 7, 8});
  const QSeries b(3, {1, 1, 1, 1});
  CHECK((a * b).order() == 3);
  CHECK((a + b).order() == 3);
  CHECK((a - b).order() == 3);
}

TEST_CASE("reciprocal examples") {
  CHECK(reciprocal(QSeries(4, {1, -1})) == QSeries(4, {1, 1, 1, 1, 1}));
  CHECK(reciprocal(QSeries::one(6)) == QSeries::one(6));
  const auto p = QSeries(5, {1, -1}) * QSeries(5, {1, 0, -1});
  const auto r = reciprocal(p);
  for (int n = 0; n <= 5; ++n) CHECK(r[n] == support::count_partitions(n, {2, 1}));
  CHECK(r == QSeries(5, {1, 1, 2, 2, 3, 3}));
}

TEST_CASE("reciprocal rejects non-units") {
  CHECK_THROWS_WITH(reciprocal(QSeries(3, {2, 1})), "non-invertible series");
  CHECK_THROWS_WITH(reciprocal(QSeries(3, {0, 1})), "non-invertible series");
  CHECK_THROWS_WITH(reciprocal(TQSeries(2, {TPoly::t()})), "non-invertible series");
  CHECK(reciprocal(QSeries(2, {-1, 1})) == QSeries(2, {-1, -1, -1}));
}

TEST_CASE("pochhammer examples") {
  const auto q = QSeries::monomial(1, 1, 6);
  CHECK(pochhammer(q, 2, 4) == QSeries(4, {1, -1, -1, 1}));
  CHECK(pochhammer(QSeries(3, {7, 2}), 0, 3) == QSeries::one(3));
  CHECK(pochhammer(q, 3, 6) == QSeries(6, {1, -1, -1, 0, 1, 1, -1}));
}

TEST_CASE("pochhammer_infinite examples") {
  CHECK(pochhammer_infinite(QSeries::monomial(1, 1, 5), 5) == QSeries(5, {1, -1, -1, 0, 0, 1}));
  CHECK(pochhammer_infinite(QSeries(4), 4) == QSeries::one(4));
  CHECK(pochhammer_infinite(QSeries::monomial(1, 1, 1), 1) == QSeries(1, {1, -1}));
  CHECK_THROWS_WITH(pochhammer_infinite(QSeries::one(3), 3), "divergent infinite product");
}

TEST_CASE("pochhammer against subset expansion") {
  for (int n = 0; n <= 10; ++n) {
    std::vector<int> exps;
    for (int i = 1; i <= n; ++i) exps.push_back(i);
    CHECK(pochhammer(QSeries::monomial(1, 1, 30), n, 30) == from_longs(support::product_by_subsets(exps, 30)));
  }
  // (q^2; q)_4 = (1-q^2)(1-q^3)(1-q^4)(1-q^5)
  CHECK(pochhammer(QSeries::monomial(1, 2, 25), 4, 25) == from_longs(support::product_by_subsets({2, 3, 4, 5}, 25)));
}

TEST_CASE("Euler function against pentagonal numbers") {
  const int order = 120;
  CHECK(pochhammer_infinite(QSeries::monomial(1, 1, order), order) == from_longs(support::pentagonal_coeffs(order)));
}

TEST_CASE("partition numbers from the Euler reciprocal") {
  const int order = 30;
  const auto p = reciprocal(pochhammer_infinite(QSeries::monomial(1, 1, order), order));
  for (int n = 0; n <= 20; ++n) CHECK(p[n] == support::partitions(n));
  CHECK(p[30] == 5604);
}

TEST_CASE("div_one_minus_qk and div_one_minus_shifted invert their factors") {
  std::mt19937 rng(support::kSeed);
  for (int trial = 0; trial < support::kTrials; ++trial) {
    const int order = support::random_int(rng, 0, 15);
    const int k = support::random_int(rng, 1, 5);
    const auto s = support::random_qseries(rng, order);
    const auto a = support::random_qseries(rng, order);
    const QSeries one_minus_qk = QSeries::one(order) - QSeries::monomial(1, k, order);
    CHECK(div_one_minus_qk(s, k) * one_minus_qk == s);
    const auto factor = QSeries::one(order) - a.shifted(k);
    CHECK(div_one_minus_shifted(s, a, k) * factor == s);
  }
  CHECK_THROWS(div_one_minus_qk(QSeries::one(2), 0));
}

TEST_CASE("ring axioms hold on random series") {
  std::mt19937 rng(support::kSeed + 1);
  for (int trial = 0; trial < support::kTrials; ++trial) {
    const int order = support::random_int(rng, 0, 12);
    const auto a = support::random_qseries(rng, order);
    const auto b = support::random_qseries(rng, order);
    const auto c = support::random_qseries(rng, order);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == QSeries(order));
  }
}

TEST_CASE("truncation commutes with arithmetic") {
  std::mt19937 rng(support::kSeed + 2);
  for (int trial = 0; trial < support::kTrials; ++trial) {
    const int order = support::random_int(rng, 0, 14);
    const int cut = support::random_int(rng, 0, order);
    const auto a = support::random_unit_qseries(rng, order);
    const auto b = support::random_qseries(rng, order);
    CHECK((a * b).truncated(cut) == a.truncated(cut) * b.truncated(cut));
    CHECK((a + b).truncated(cut) == a.truncated(cut) + b.truncated(cut));
    CHECK(reciprocal(a).truncated(cut) == reciprocal(a.truncated(cut)));
  }
  CHECK_THROWS(QSeries(3).truncated(4));
}

TEST_CASE("reciprocal is a two-sided inverse") {
  std::mt19937 rng(support::kSeed + 3);
  for (int trial = 0; trial < support::kTrials; ++trial) {
    const auto a = support::random_unit_qseries(rng, support::random_int(rng, 0, 16));
    CHECK(a * reciprocal(a) == QSeries::one(a.order()));
    CHECK(reciprocal(reciprocal(a)) == a);
  }
}

TEST_CASE("negative order is rejected") {
  CHECK_THROWS(QSeries(-1));
  CHECK_THROWS(pochhammer(QSeries::monomial(1, 1, 3), -1, 3));
}

}  // TEST_SUITE

TEST_SUITE("tpoly") {

TEST_CASE("printing and evaluation") {
  const TPoly p({0, 3, 1});
  CHECK(p.to_string() == "t^2+3t");
  CHECK(TPoly({-1, 0, -2}).to_string() == "-2t^2-1");
  CHECK(TPoly().to_string() == "0");
  CHECK(p.evaluate(2) == 10);
  CHECK(TPoly({1, 2, 0, 0}).degree() == 1);
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937 rng(support::kSeed + 4);
  for (int trial = 0; trial < support::kTrials; ++trial) {
    const auto a = support::random_tpoly(rng);
    const auto b = support::random_tpoly(rng);
    const Integer x = support::random_integer(rng, 5);
    CHECK((a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x));
    CHECK((a + b).evaluate(x) == a.evaluate(x) + b.evaluate(x));
  }
}

TEST_CASE("TQSeries arithmetic commutes with t = 1") {
  std::mt19937 rng(support::kSeed + 5);
  for (int trial = 0; trial < 60; ++trial) {
    const int order = support::random_int(rng, 0, 8);
    const auto a = support::random_tqseries(rng, order);
    const auto b = support::random_tqseries(rng, order);
    CHECK(evaluate_t(a * b) == evaluate_t(a) * evaluate_t(b));
    CHECK(evaluate_t(a + b, 3) == evaluate_t(a, 3) + evaluate_t(b, 3));
    CHECK(a * b == b * a);
  }
  const QSeries s(3, {1, -2, 0, 5});
  CHECK(evaluate_t(lift(s)) == s);
}

TEST_CASE("TQSeries reciprocal") {
  std::mt19937 rng(support::kSeed + 6);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = support::random_tqseries(rng, support::random_int(rng, 0, 6));
    a.set(0, TPoly(1));
    CHECK(a * reciprocal(a) == TQSeries::one(a.order()));
  }
}

}  // TEST_SUITE

TEST_SUITE("xq_series") {

TEST_CASE("pochhammer in x against subset counts") {
  // (x; q)_n: [x^m q^k] = (-1)^m #{S subset of {0..n-1}, |S| = m, sum S = k}
  const int n = 6;
  const auto p = pochhammer(XQSeries::monomial(1, 1, 0, n, 20), n);
  std::vector<std::vector<long>> expected(n + 1, std::vector<long>(21));
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    int m = 0, k = 0;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) ++m, k += i;
    expected[m][k] += (m % 2 == 0) ? 1 : -1;
  }
  for (int m = 0; m <= n; ++m)
    for (int k = 0; k <= 20; ++k) CHECK(p.at(m, k) == expected[m][k]);
}

TEST_CASE("reciprocal and ring laws") {
  std::mt19937 rng(support::kSeed + 7);
  for (int trial = 0; trial < 40; ++trial) {
    const int xo = support::random_int(rng, 0, 4);
    const int qo = support::random_int(rng, 0, 6);
    XQSeries a(xo, qo), b(xo, qo);
    for (int m = 0; m <= xo; ++m)
      for (int k = 0; k <= qo; ++k) a.at(m, k) = support::random_integer(rng, 9), b.at(m, k) = support::random_integer(rng, 9);
    a.at(0, 0) = 1;
    CHECK(a * reciprocal(a) == XQSeries::one(xo, qo));
    CHECK(a * b == b * a);
    CHECK(add(a, b) - b == a);
  }
  CHECK_THROWS(reciprocal(XQSeries(2, 2)));
}

TEST_CASE("infinite pochhammer in q alone is the Euler function") {
  const auto e = pochhammer_infinite(XQSeries::monomial(1, 0, 1, 2, 26));
  const auto ref = support::pentagonal_coeffs(26);
  for (int k = 0; k <= 26; ++k) CHECK(e.at(0, k) == ref[k]);
  CHECK(e.at(1, 3) == 0);
}

}  // TEST_SUITE

TEST_SUITE("json") {

TEST_CASE("schema of a QSeries") {
  const auto j = to_json(QSeries(2, {1, -3, Integer("123456789012345678901234567890")}));
  CHECK(j.dump() == R"({"coeffs":["1","-3","123456789012345678901234567890"],"order":2,"var":"q"})");
}

TEST_CASE("round trip on random series") {
  std::mt19937 rng(support::kSeed + 8);
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = support::random_qseries(rng, support::random_int(rng, 0, 10));
    CHECK(qseries_from_json(nlohmann::json::parse(to_json(s).dump())) == s);
    const auto t = support::random_tqseries(rng, support::random_int(rng, 0, 6));
    CHECK(tqseries_from_json(nlohmann::json::parse(to_json(t).dump())) == t);
  }
}

TEST_CASE("malformed input is rejected") {
  using nlohmann::json;
  CHECK_THROWS_AS(qseries_from_json(json::parse(R"({"var":"x","order":0,"coeffs":["1"]})")), Error);
  CHECK_THROWS_AS(qseries_from_json(json::parse(R"({"var":"q","order":1,"coeffs":["1"]})")), Error);
  CHECK_THROWS_AS(qseries_from_json(json::parse(R"({"var":"q","order":0,"coeffs":[1]})")), Error);
  CHECK_THROWS_AS(qseries_from_json(json::parse(R"({"var":"q","order":0,"coeffs":["1x"]})")), Error);
  CHECK_THROWS_AS(qseries_from_json(json::parse(R"({"var":"q","coeffs":["1"]})")), Error);
  CHECK_THROWS_AS(tqseries_from_json(json::parse(R"({"var":"q","order":0,"coeffs":["1"]})")), Error);
}

}  // TEST_SUITE
