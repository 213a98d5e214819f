#include "hodge/signature.hpp"
#include "oracles/generators.hpp"
#include "oracles/pair_count.hpp"
#include "support.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

using namespace hodge;
using testing_support::sextic;
using testing_support::sig;

namespace {

std::vector<BigInt> sorted_values(const HodgeSignature& s) {
  std::vector<BigInt> out;
  for (const auto& [p, h] : s.numbers()) out.push_back(h);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("constructor rejects nonpositive weight and negative entries", "[signature]") {
  CHECK_THROWS_AS(HodgeSignature(0, {{0, 1}}), HodgeError);
  CHECK_THROWS_AS(HodgeSignature(2, {{1, -1}}), HodgeError);
  CHECK_THROWS_AS(HodgeSignature::from_dense(2, {1, 1}), HodgeError);
}

TEST_CASE("sparse storage drops zero entries", "[signature]") {
  const auto s = sig({1, 0, 0, 0, 1});
  CHECK(s.numbers().size() == 2);
  CHECK(s.at(2) == 0);
  CHECK(s.total_dimension() == 2);
  CHECK(s.dense() == std::vector<BigInt>{1, 0, 0, 0, 1});
}

TEST_CASE("validate", "[signature][validate]") {
  SECTION("sextic fourfold numbers are valid") { CHECK(validate(sextic()).ok()); }
  SECTION("asymmetric weight 2") {
    const auto r = validate(HodgeSignature(2, {{2, 1}, {0, 2}}));
    CHECK_FALSE(r.ok());
    CHECK(r.has(ErrorCode::AsymmetricNumbers));
  }
  SECTION("elliptic curve") { CHECK(validate(sig({1, 1})).ok()); }
  SECTION("all zero") {
    const auto r = validate(HodgeSignature(3, {}));
    CHECK(r.has(ErrorCode::EmptySupport));
    CHECK_FALSE(r.ok());
  }
  SECTION("repairable convention violation is only a warning") {
    const auto r = validate(HodgeSignature(5, {{3, 2}, {2, 2}}));
    CHECK(r.ok());
    CHECK(r.has(ErrorCode::ConventionViolation));
  }
  SECTION("negative index support is a warning") {
    const auto r = validate(HodgeSignature(2, {{3, 1}, {-1, 1}}));
    CHECK(r.ok());
    CHECK(r.has(ErrorCode::ConventionViolation));
  }
  SECTION("single middle block normalizes to weight 0") {
    const auto r = validate(sig({0, 7, 0}));
    CHECK_FALSE(r.ok());
    CHECK(r.has(ErrorCode::ZeroWeight));
  }
  SECTION("odd weight dimension is automatically even") {
    const auto s = sig({2, 3, 3, 2});
    CHECK(validate(s).ok());
    CHECK(s.total_dimension() % 2 == 0);
  }
}

TEST_CASE("normalize", "[signature][normalize]") {
  SECTION("pure index shift to weight 1") {
    for (int g = 1; g <= 4; ++g) {
      const HodgeSignature in(5, {{3, g}, {2, g}});
      CHECK(normalize(in) == sig({g, g}));
    }
  }
  SECTION("sextic is already normalized") {
    CHECK(is_normalized(sextic()));
    CHECK(normalize(sextic()) == sextic());
  }
  SECTION("shift by one in weight 6") { CHECK(normalize(sig({0, 1, 0, 2, 0, 1, 0})) == sig({1, 0, 2, 0, 1})); }
  SECTION("negative indices shift up") { CHECK(normalize(HodgeSignature(2, {{3, 1}, {1, 4}, {-1, 1}})) == sig({1, 0, 4, 0, 1})); }
  SECTION("huge weight with sparse support stays cheap") {
    const HodgeSignature in(2'000'000'001, {{1'000'000'001, 5}, {1'000'000'000, 5}});
    CHECK(normalize(in) == sig({5, 5}));
  }
  SECTION("errors") {
    CHECK_THROWS_MATCHES(normalize(sig({0, 7, 0})), HodgeError,
                         Catch::Matchers::Predicate<HodgeError>([](const HodgeError& e) { return e.code() == ErrorCode::ZeroWeight; }));
    CHECK_THROWS_AS(normalize(HodgeSignature(2, {})), HodgeError);
    CHECK_THROWS_AS(require_normalized(sig({0, 1, 1, 0})), HodgeError);
  }
}

TEST_CASE("infinitesimal numbers", "[signature][infinitesimal]") {
  SECTION("weight 1 genus g") {
    for (std::int64_t g = 1; g <= 6; ++g) {
      const auto inf = infinitesimal_numbers(sig({g, g}));
      CHECK(inf.at(0) == g * g);
      CHECK(inf.at(1) == g * (g + 1) / 2);
      CHECK(inf.at(-1) == g * (g + 1) / 2);
      CHECK(inf.total() == g * (2 * g + 1));
    }
  }
  SECTION("weight 3 (1,1,1,1)") {
    const auto inf = infinitesimal_numbers(sig({1, 1, 1, 1}));
    CHECK(inf.at(0) == 2);
    CHECK(inf.at(1) == 2);
    CHECK(inf.at(2) == 1);
    CHECK(inf.at(3) == 1);
    CHECK(inf.at(4) == 0);
    CHECK(inf.total() == 10);
  }
  SECTION("weight 4 (1,1,1,1,1)") {
    const auto inf = infinitesimal_numbers(sig({1, 1, 1, 1, 1}));
    CHECK(inf.at(0) == 2);
    CHECK(inf.at(1) == 2);
    CHECK(inf.at(2) == 1);
    CHECK(inf.at(3) == 1);
    CHECK(inf.at(4) == 0);
    CHECK(inf.total() == 10);
  }
  SECTION("sextic fourfold values from the pair model") {
    const auto inf = infinitesimal_numbers(sextic());
    // Lambda^2 of 1 + 426 + 1755 + 426 + 1, counted block by block.
    CHECK(inf.at(3) == 426);
    CHECK(inf.at(4) == 0);
    CHECK(inf.at(1) == BigInt(426) * 1 + BigInt(1755) * 426);
    // Degree-6 pairs: V^4 x V^2 and Lambda^2 V^3.
    CHECK(inf.at(2) == BigInt(1755) + BigInt(426) * 425 / 2);
    CHECK(inf.at(2) == 92280);
  }
  SECTION("requires normalized input") { CHECK_THROWS_AS(infinitesimal_numbers(sig({0, 1, 1, 0})), HodgeError); }
}

TEST_CASE("level", "[signature][level]") {
  CHECK(level(sextic()) == 3);
  for (std::int64_t g = 1; g <= 5; ++g) CHECK(level(sig({g, g})) == 1);
  CHECK(level(sig({1, 1, 1, 1})) == 3);
  // SO(2, 20) is of Hermitian type.
  CHECK(level(sig({1, 20, 1})) == 1);
  CHECK(level(sig({1, 2, 1})) == 1);
  CHECK(level(sig({2, 1, 2})) == 2);
  // SO(2) is abelian.
  CHECK(level(sig({1, 0, 0, 0, 1})) == 0);
  CHECK(level(sig({2, 0, 0, 0, 2})) == 4);
  CHECK(level(sig({2, 0, 0, 0, 0, 0, 2})) == 6);
}

TEST_CASE("level at least 3 case analysis", "[signature][level]") {
  SECTION("odd weight 3 is case 1") {
    for (const auto& dense : {std::vector<std::int64_t>{1, 1, 1, 1}, {1, 0, 0, 1}, {3, 7, 7, 3}}) {
      const auto c = level_at_least_3(sig(dense));
      CHECK(c.holds);
      CHECK(c.case_label == "1");
    }
  }
  SECTION("sextic fourfold") {
    // The even gap 2k with k >= 2 needs n >= 3; in weight 4 the witness is
    // the odd gap 3 between h^{4,0} and h^{1,3}.
    const auto c = level_at_least_3(sextic());
    CHECK(c.holds);
    CHECK(c.case_label == "2.c");
    CHECK(c.k == 1);
    CHECK(c.j == 0);
  }
  SECTION("weight 2 never") {
    for (std::int64_t a = 1; a <= 4; ++a) {
      for (std::int64_t b = 0; b <= 4; ++b) CHECK_FALSE(level_at_least_3(sig({a, b, a})).holds);
    }
  }
  SECTION("weight 1 never") { CHECK_FALSE(level_at_least_3(sig({4, 4})).holds); }
  SECTION("repeated outer number is case 2.a") {
    const auto c = level_at_least_3(sig({2, 0, 0, 0, 2}));
    CHECK(c.holds);
    CHECK(c.case_label == "2.a");
  }
  SECTION("even gap in weight 6 is case 2.b") {
    const auto c = level_at_least_3(sig({1, 0, 0, 0, 1, 0, 0, 0, 1}));
    CHECK(c.holds);
    CHECK(c.case_label == "2.b");
    CHECK(c.k == 2);
    CHECK(c.j == 0);
  }
  SECTION("weight 4 with only the outer block and middle has level 2") {
    CHECK_FALSE(level_at_least_3(sig({1, 0, 5, 0, 1})).holds);
    CHECK(level(sig({1, 0, 5, 0, 1})) == 2);
  }
}

TEST_CASE("domain dimension", "[signature]") {
  for (std::int64_t g = 1; g <= 6; ++g) CHECK(domain_dimension(sig({g, g})) == g * (g + 1) / 2);
  CHECK(domain_dimension(sig({1, 1, 1, 1})) == 4);
  CHECK(domain_dimension(sig({1, 1, 1, 1, 1})) == 4);
  CHECK(domain_dimension(sig({1, 20, 1})) == 20);
}

TEST_CASE("orthogonal signature", "[signature]") {
  const auto a = orthogonal_signature(sig({1, 1, 1, 1, 1}));
  CHECK(a.r == 2);
  CHECK(a.s == 3);
  const auto b = orthogonal_signature(sextic());
  CHECK(b.r == 852);
  CHECK(b.s == 1757);
  const auto k3 = orthogonal_signature(sig({1, 20, 1}));
  CHECK(k3.r == 2);
  CHECK(k3.s == 20);
  CHECK(k3.r + k3.s == 22);
  CHECK_THROWS_AS(orthogonal_signature(sig({1, 1})), HodgeError);
}

TEST_CASE("random signatures: infinitesimal numbers against the pair model", "[signature][property]") {
  oracle::SignatureGenerator gen(0x5eed0001);
  for (int trial = 0; trial < 400; ++trial) {
    const auto dense = gen.next({});
    const auto s = sig(dense);
    INFO(s.to_string());
    REQUIRE(is_normalized(s));
    const auto inf = infinitesimal_numbers(s);
    const auto expected = oracle::pair_count(dense);
    std::map<std::int64_t, BigInt> expected_big;
    for (const auto& [k, v] : expected) expected_big[k] = v;
    CHECK(inf.expanded() == expected_big);

    const BigInt dim = s.total_dimension();
    const BigInt lie = s.parity() == Parity::Orthogonal ? BigInt(dim * (dim - 1) / 2) : BigInt((dim / 2) * (dim + 1));
    CHECK(inf.total() == lie);
    for (const auto& [k, v] : inf.expanded()) CHECK(inf.at(-k) == v);
    CHECK((level(s) >= 3) == level_at_least_3(s).holds);
    CHECK(level(s) <= s.weight());
    if (s.parity() == Parity::Symplectic) CHECK(level(s) == s.weight());
  }
}

TEST_CASE("random signatures: Tate twists change nothing", "[signature][property]") {
  oracle::SignatureGenerator gen(0x5eed0002);
  for (int trial = 0; trial < 300; ++trial) {
    const auto s = sig(gen.next({}));
    const auto shift = gen.uniform(-5, 5);
    std::map<std::int64_t, BigInt> moved;
    for (const auto& [p, h] : s.numbers()) moved[p + shift] = h;
    INFO(s.to_string() << " shift " << shift);
    // A symmetric support shifted by t has weight w + 2t.
    if (s.weight() + 2 * shift < 1) continue;
    const HodgeSignature balanced(s.weight() + 2 * shift, moved);
    CHECK(validate(balanced).ok());
    const auto back = normalize(balanced);
    CHECK(back == s);
    CHECK(normalize(back) == back);
    CHECK(back.total_dimension() == balanced.total_dimension());
    CHECK(sorted_values(back) == sorted_values(balanced));
    CHECK(infinitesimal_numbers(back).nonnegative() == infinitesimal_numbers(s).nonnegative());
    CHECK(level(back) == level(s));
    CHECK(domain_dimension(back) == domain_dimension(s));
  }
}
