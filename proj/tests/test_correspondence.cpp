#include <doctest.h>

#include "qalcove/correspondence.hpp"
#include "support.hpp"

using namespace qalcove;
using qalcove::testing::group;
using qalcove::testing::standard_cases;

namespace {

const Rational kHalf(1, 2);

}  // namespace

TEST_SUITE("correspondence") {

TEST_CASE("forgetful map on A1, lambda = 2 varpi_1") {
  const auto& W = group('A', 1);
  Correspondence corr(W, Weight({2}));
  const auto& alc = corr.alcove();
  const WeylElement e = W.identity(), s1 = W.from_word({1});

  const auto empty = corr.forgetful(alc.empty_subset());
  CHECK(empty.pi_star == corr.qls().highest());

  const auto two = corr.forgetful(*alc.make_subset({1}));
  CHECK(two.breaks == std::vector<Rational>{Rational(0), kHalf});
  CHECK(two.pi_star == QLSPath{{s1, e}, {Rational(0), kHalf, Rational(1)}});
  CHECK(corr.qls().weight(two.pi_star) == Weight({0}));

  const auto one = corr.forgetful(*alc.make_subset({0}));
  CHECK(one.pi_star == QLSPath{{s1}, {Rational(0), Rational(1)}});

  // Pi itself lives in QLS(-w_o lambda) = QLS(2 varpi_1).
  CHECK(two.pi == QLSPath{{s1, e}, {Rational(0), kHalf, Rational(1)}});
  CHECK(corr.forgetful(*alc.make_subset({0, 1})).pi == QLSPath{{e, s1}, {Rational(0), kHalf, Rational(1)}});
}

TEST_CASE("inverse map") {
  const auto& W = group('A', 1);
  Correspondence corr(W, Weight({2}));
  const WeylElement e = W.identity(), s1 = W.from_word({1});
  CHECK(corr.inverse(corr.forgetful(corr.alcove().empty_subset()).pi).positions.empty());
  CHECK(corr.inverse({{s1, e}, {Rational(0), kHalf, Rational(1)}}).positions == std::vector<int>{1});
  CHECK(corr.inverse({{e, s1}, {Rational(0), kHalf, Rational(1)}}).positions == std::vector<int>{0, 1});
  CHECK_THROWS(corr.inverse({{e, s1}, {Rational(0), Rational(1, 3), Rational(1)}}));

  Correspondence a2(group('A', 2), Weight({1, 1}));
  for (const auto& A : a2.subsets()) CHECK(a2.inverse(a2.forgetful(A).pi) == A);
}

TEST_CASE("breaks are the distinct nonzero relative heights") {
  for (const auto& c : standard_cases()) {
    Correspondence corr(c.W(), c.weight());
    const auto& chain = corr.alcove().chain();
    for (const auto& A : corr.subsets()) {
      std::set<Rational> t;
      for (int pos : A.positions) {
        Rational x(chain.entries[pos].level, corr.alcove().pairing_with_lambda(pos));
        if (x != 0) t.insert(x);
      }
      const auto rec = corr.forgetful(A);
      CHECK(std::vector<Rational>(rec.breaks.begin() + 1, rec.breaks.end()) == std::vector<Rational>(t.begin(), t.end()));
    }
  }
}

TEST_CASE("verification reports on small cases") {
  {
    Correspondence corr(group('A', 1), Weight({1}));
    const auto r = corr.verify_intertwining();
    CHECK(r.ok());
    CHECK(r.checked == 4);
  }
  {
    Correspondence corr(group('A', 2), Weight({0, 0}));
    CHECK(corr.verify_bijection().ok());
    CHECK(corr.verify_intertwining().ok());
    CHECK(corr.verify_energy().ok());
  }
  {
    // p = 0 at lambda = 2 varpi_1: exactly the arrows with eps_0 > 1 on the QLS side.
    Correspondence corr(group('A', 1), Weight({2}));
    int alcove_arrows = 0, qls_arrows = 0;
    for (const auto& A : corr.subsets()) {
      alcove_arrows += corr.alcove().f(A, 0).has_value();
      qls_arrows += corr.dual_qls().e(corr.forgetful(A).pi, 0).has_value();
    }
    CHECK(alcove_arrows < qls_arrows);
    CHECK(corr.verify_intertwining().ok());
  }
}

TEST_CASE("energy examples") {
  Correspondence corr(group('A', 1), Weight({2}));
  const auto A = *corr.alcove().make_subset({0, 1});
  CHECK(corr.alcove().height(A) == 1);
  CHECK(corr.dual_qls().deg(corr.forgetful(A).pi) == -1);
  CHECK(corr.verify_energy().ok());

  Correspondence a2(group('A', 2), Weight({1, 0}));
  CHECK(a2.subsets().size() == 3);
  for (const auto& B : a2.subsets()) CHECK(a2.alcove().height(B) == 0);
}

TEST_CASE("bijection, intertwining and energy over the standard cases") {
  for (const auto& c : standard_cases()) {
    CAPTURE(c.name());
    Correspondence corr(c.W(), c.weight());
    for (const auto& r : {corr.verify_bijection(2), corr.verify_intertwining(2), corr.verify_energy(2)}) {
      CAPTURE(r.name);
      CHECK(r.violations == std::vector<std::string>{});
      CHECK(r.checked > 0);
    }
  }
}

TEST_CASE("tensor isomorphism") {
  {
    const auto iso = build_isomorphism_to_tensor(group('A', 2), Weight({1, 0}));
    CHECK(iso.report.ok());
    for (std::size_t v = 0; v < iso.map.size(); ++v) CHECK(iso.map[v] == static_cast<int>(v));
  }
  {
    const auto iso = build_isomorphism_to_tensor(group('A', 1), Weight({2}));
    CHECK(iso.report.ok());
    CHECK(iso.source.size() == 4);
  }
  {
    const auto iso = build_isomorphism_to_tensor(group('A', 2), Weight({1, 1}));
    CHECK(iso.report.ok());
    CHECK(iso.source.size() == 9);
    CHECK(iso.factors == std::vector<int>{1, 2});
  }
  CHECK(build_isomorphism_to_tensor(group('A', 2), Weight({0, 0})).report.ok());
}

}
