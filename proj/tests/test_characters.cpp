#include <doctest.h>

#include <algorithm>

#include "qalcove/characters.hpp"
#include "support.hpp"

using namespace qalcove;
using qalcove::testing::group;
using qalcove::testing::standard_cases;

TEST_SUITE("characters") {

TEST_CASE("graded character arithmetic") {
  GradedCharacter a;
  a.add(Weight({1}), 0, 2);
  a.add(Weight({1}), 0, -2);
  CHECK(a.empty());
  a.add(Weight({1}), 0);
  a.add(Weight({-1}), 1);
  GradedCharacter sq = a * a;
  CHECK(sq.coefficient(Weight({0}), 1) == 2);
  CHECK(sq.coefficient(Weight({2}), 0) == 1);
  CHECK(sq.layer(2).coefficient(Weight({-2}), 0) == 1);
  CHECK(sq.at_q_one().coefficient(Weight({0}), 0) == 2);
  CHECK(sq.exponents() == std::vector<int>{0, 1, 2});
}

TEST_CASE("alcove characters") {
  {
    const auto& W = group('A', 2);
    CHECK(character_from_alcove(AlcoveModel(W, lex_chain(W.datum(), Weight({0, 0})))).terms().size() == 1);
    GradedCharacter expected;
    expected.add(Weight({1, 0}), 0);
    expected.add(Weight({-1, 1}), 0);
    expected.add(Weight({0, -1}), 0);
    CHECK(character_from_alcove(AlcoveModel(W, lex_chain(W.datum(), Weight({1, 0})))) == expected);
  }
  const auto& W = group('A', 1);
  GradedCharacter expected;
  expected.add(Weight({2}), 0);
  expected.add(Weight({0}), 0);
  expected.add(Weight({-2}), 0);
  expected.add(Weight({0}), 1);
  AlcoveModel m(W, lex_chain(W.datum(), Weight({2})));
  CHECK(character_from_alcove(m) == expected);
  CHECK(character_from_alcove(m, 3) == expected);
  CHECK(character_from_qls(QLSModel(W, Weight({2}))) == expected);
  GradedCharacter one;
  one.add(Weight({1}), 0);
  one.add(Weight({-1}), 0);
  CHECK(character_from_qls(QLSModel(W, Weight({1}))) == one);
}

TEST_CASE("Freudenthal oracle") {
  CHECK(weyl_character(group('A', 2).datum(), Weight({0, 0})).terms().size() == 1);
  const auto a2 = weyl_character(group('A', 2).datum(), Weight({1, 0}));
  CHECK(a2.terms().size() == 3);
  for (const auto& [k, c] : a2.terms()) CHECK(c == 1);
  const auto adj = weyl_character(group('A', 2).datum(), Weight({1, 1}));
  CHECK(adj.coefficient(Weight({0, 0}), 0) == 2);
  auto dim = [](const GradedCharacter& chi) {
    long long n = 0;
    for (const auto& [k, c] : chi.terms()) n += c;
    return n;
  };
  CHECK(dim(adj) == 8);
  CHECK(dim(weyl_character(group('C', 2).datum(), Weight({0, 1}))) == 5);
  CHECK(dim(weyl_character(group('C', 2).datum(), Weight({1, 0}))) == 4);
  CHECK(dim(weyl_character(group('G', 2).datum(), Weight({0, 1}))) == 14);
  CHECK(dim(weyl_character(group('G', 2).datum(), Weight({1, 0}))) == 7);
  CHECK(dim(weyl_character(group('B', 3).datum(), Weight({0, 0, 1}))) == 8);
  CHECK(dim(weyl_character(group('A', 3).datum(), Weight({1, 0, 1}))) == 15);
  CHECK(dim(weyl_character(group('F', 4).datum(), Weight({0, 0, 0, 1}))) == 26);
}

TEST_CASE("decomposition and formatting") {
  const auto& W = group('A', 1);
  const auto rep = verify_p_equals_x(W, Weight({2}));
  CHECK(rep.ok());
  CHECK(format_decomposition(rep.decomposition) == "χ_{2ϖ1} + qχ_0");
  const auto a2 = verify_p_equals_x(group('A', 2), Weight({1, 1}));
  CHECK(a2.ok());
  CHECK(format_decomposition(a2.decomposition) == "χ_{ϖ1+ϖ2} + qχ_0");
  std::map<std::pair<Weight, int>, long long> dec{{{Weight({1}), 2}, 3}};
  CHECK(format_decomposition(dec) == "3q^2χ_{ϖ1}");
}

TEST_CASE("P = X checks over the standard cases") {
  for (const auto& c : standard_cases()) {
    CAPTURE(c.name());
    const auto rep = verify_p_equals_x(c.W(), c.weight(), 2);
    CHECK(rep.failures == std::vector<std::string>{});
    CHECK(rep.alcove_equals_qls);
    CHECK(rep.bottom_layer_is_weyl);
    CHECK(rep.weyl_invariant);
    CHECK(rep.factorizes_at_q_one);
  }
}

TEST_CASE("alcove character does not depend on the chain") {
  for (const auto& c : standard_cases()) {
    if (c.W().rank() != 2) continue;
    const auto& d = c.W().datum();
    const auto base = character_from_alcove(AlcoveModel(c.W(), lex_chain(d, c.weight(), {1, 2})));
    CHECK(character_from_alcove(AlcoveModel(c.W(), lex_chain(d, c.weight(), {2, 1}))) == base);
    CHECK(character_from_alcove(AlcoveModel(c.W(), user_chain(d, c.weight(), lex_chain(d, c.weight(), {2, 1}).entries))) == base);
  }
  const auto& W = group('A', 3);
  std::vector<int> order{1, 2, 3};
  const Weight lambda({1, 0, 1});
  const auto base = character_from_alcove(AlcoveModel(W, lex_chain(W.datum(), lambda)));
  while (std::next_permutation(order.begin(), order.end()))
    CHECK(character_from_alcove(AlcoveModel(W, lex_chain(W.datum(), lambda, order))) == base);
}

}
