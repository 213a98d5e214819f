#include "hodge/bounds.hpp"
#include "hodge/lie_dims.hpp"
#include "oracles/generators.hpp"
#include "oracles/grading.hpp"
#include "support.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

using namespace hodge;
using testing_support::sextic;
using testing_support::sig;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const HodgeError& e) {
    return e.code();
  }
  FAIL("expected a HodgeError");
  return ErrorCode::InvalidArgument;
}

bool has_source(const BoundsReport& r, BoundSource s) {
  return std::find(r.legal_basis.begin(), r.legal_basis.end(), s) != r.legal_basis.end();
}

}  // namespace

TEST_CASE("vector stabilizer witness", "[bounds][mhl]") {
  SECTION("sextic fourfold") {
    const auto w = mhl_upper_orthogonal(sextic());
    CHECK(w.codim == 427);
    CHECK(w.codim_group_route == 427);
    CHECK(w.bound() == 426);
    CHECK(w.kind == SubdatumKind::OrthogonalVectorStabilizer);
  }
  SECTION("weight 4 all ones") {
    const auto w = mhl_upper_orthogonal(sig({1, 1, 1, 1, 1}));
    CHECK(w.codim == 2);
    CHECK(w.bound() == 1);
  }
  SECTION("errors") {
    CHECK(code_of([] { mhl_upper_orthogonal(sig({1, 3, 0, 3, 1})); }) == ErrorCode::MiddleNumberZero);
    CHECK(code_of([] { mhl_upper_orthogonal(sig({1, 20, 1})); }) == ErrorCode::WeightTooSmall);
    CHECK(code_of([] { mhl_upper_orthogonal(sig({1, 1, 1, 1})); }) == ErrorCode::WrongParity);
  }
}

TEST_CASE("plane splitting witness", "[bounds][mhl]") {
  SECTION("weight 3 all ones") {
    const auto w = mhl_upper_symplectic(sig({1, 1, 1, 1}), std::pair<std::int64_t, std::int64_t>{3, 0});
    CHECK(w.codim == 2);
    CHECK(w.bound() == 1);
  }
  SECTION("weight 1 genus g") {
    for (std::int64_t g = 2; g <= 6; ++g) {
      const auto s = sig({g, g});
      const auto w = mhl_upper_symplectic(s, std::pair<std::int64_t, std::int64_t>{1, 0});
      CHECK(w.codim == g - 1);
      // Siegel count g(g+1)/2 - (g-1)g/2 - 1.
      CHECK(w.codim == g * (g + 1) / 2 - (g - 1) * g / 2 - 1);
      CHECK(w.codim_group_route == g - 1);
    }
  }
  SECTION("default choice is the largest number, smallest r on ties") {
    const auto w = mhl_upper_symplectic(sig({1, 4, 4, 1}));
    REQUIRE(w.rs.has_value());
    CHECK(w.rs->first == 2);
    CHECK(w.codim == 10 - 4 - 1);
    const auto tie = mhl_upper_symplectic(sig({1, 1, 1, 1}));
    CHECK(tie.rs->first == 2);
    CHECK(tie.codim == 2);
  }
  SECTION("errors") {
    CHECK(code_of([] { mhl_upper_symplectic(sig({1, 1})); }) == ErrorCode::TooSmall);
    CHECK(code_of([] { mhl_upper_symplectic(sig({2, 0, 0, 2}), std::pair<std::int64_t, std::int64_t>{2, 1}); }) ==
          ErrorCode::ZeroHodgeNumber);
    CHECK(code_of([] { mhl_upper_symplectic(sig({1, 1, 1, 1}), std::pair<std::int64_t, std::int64_t>{2, 2}); }) ==
          ErrorCode::InvalidArgument);
    CHECK(code_of([] { mhl_upper_symplectic(sextic()); }) == ErrorCode::WrongParity);
  }
}

TEST_CASE("Carlson-Toledo figure", "[bounds][ct]") {
  SECTION("sextic fourfold") {
    const auto ct = carlson_toledo(sextic());
    CHECK(ct.value == BigInt(426) * 1755 / 2);
    CHECK(ct.value == 373815);
    CHECK(ct.method == CtMethod::Weight4ClosedForm);
    CHECK_FALSE(ct.floored);
  }
  SECTION("weight 1 equals the domain dimension") {
    for (std::int64_t g = 1; g <= 6; ++g) {
      const auto ct = carlson_toledo(sig({g, g}));
      CHECK(ct.value == g * (g + 1) / 2);
      CHECK(ct.value == domain_dimension(sig({g, g})));
      CHECK(ct.method == CtMethod::BlockLowerBound);
    }
  }
  SECTION("weight 3 all ones") {
    const auto ct = carlson_toledo(sig({1, 1, 1, 1}));
    CHECK(ct.value == 1);
    CHECK(ct.method == CtMethod::BlockLowerBound);
  }
  SECTION("odd weight-4 product is floored and flagged") {
    const auto ct = carlson_toledo(sig({1, 3, 5, 3, 1}));
    CHECK(ct.value == 7);
    CHECK(ct.floored);
  }
}

TEST_CASE("the weight 3 (1,1,1,1) algebra has no abelian plane in degree -1", "[bounds][ct][oracle]") {
  const oracle::GradedAlgebra g({1, 1, 1, 1});
  const auto piece = g.graded_piece(1);
  REQUIRE(piece.size() == 2);
  CHECK_FALSE(oracle::is_abelian(piece));
}

TEST_CASE("explicit abelian blocks realize the block lower bound", "[bounds][ct][oracle]") {
  oracle::SignatureGenerator gen(0x5eed0201);
  for (int trial = 0; trial < 60; ++trial) {
    const auto dense = gen.next({.min_weight = 1, .max_weight = 6, .max_dim = 10});
    const auto s = sig(dense);
    INFO(s.to_string());
    const oracle::GradedAlgebra g(dense);
    const auto w = s.weight();
    const auto n = w / 2;
    for (std::int64_t p = n + 2; p <= w; ++p) {
      const auto block = g.graded_piece(1, {p, w - p + 1});
      CHECK(static_cast<std::int64_t>(block.size()) == s.at(p) * s.at(p - 1));
      CHECK(oracle::is_abelian(block));
    }
    if (s.parity() == Parity::Symplectic) {
      const auto block = g.graded_piece(1, {n + 1});
      const BigInt h = s.at(n + 1);
      CHECK(static_cast<std::int64_t>(block.size()) == h * (h + 1) / 2);
      CHECK(oracle::is_abelian(block));
    }
    const auto ct = carlson_toledo(s);
    CHECK(ct.value <= infinitesimal_numbers(s).at(1));
    CHECK(static_cast<std::int64_t>(g.graded_piece(1).size()) == infinitesimal_numbers(s).at(1));
  }
}

TEST_CASE("simplicity guard", "[bounds]") {
  CHECK(simplicity_guard(sextic()).status == SimplicityStatus::Simple);
  CHECK(simplicity_guard(sig({1, 1, 1, 1, 1})).status == SimplicityStatus::Simple);
  CHECK(simplicity_guard(sig({1, 2, 1})).status == SimplicityStatus::NotSimple);
  CHECK(simplicity_guard(sig({1, 0, 2, 0, 1})).status == SimplicityStatus::NotSimple);
  CHECK(simplicity_guard(sig({1, 1, 1})).status == SimplicityStatus::Unknown);
  CHECK(simplicity_guard(sig({1, 0, 1})).status == SimplicityStatus::Unknown);
  CHECK(simplicity_guard(sig({1, 1, 1, 1})).status == SimplicityStatus::Simple);
  CHECK(simplicity_guard(sig({1, 1})).status == SimplicityStatus::Unknown);
}

TEST_CASE("admissibility", "[bounds][admissibility]") {
  CHECK(admissibility(10, 6, 4, 3) == AdmissibilityVerdict::Contradiction);
  CHECK(admissibility(10, 6, 3, 3) == AdmissibilityVerdict::NotAdmissibleEmpty);
  CHECK(admissibility(10, 6, 4, 2) == AdmissibilityVerdict::TransverseLocusDense);
  CHECK(code_of([] { admissibility(10, 10, 1, 3); }) == ErrorCode::DimensionOrder);
  CHECK(code_of([] { admissibility(10, -1, 1, 3); }) == ErrorCode::InvalidArgument);

  SECTION("exhaustive small grid: only the sign and the level threshold matter") {
    for (int dd = 1; dd <= 8; ++dd) {
      for (int dm = 0; dm < dd; ++dm) {
        for (int im = 0; im <= 8; ++im) {
          for (int lvl = 0; lvl <= 5; ++lvl) {
            const auto v = admissibility(dd, dm, im, lvl);
            const bool nonneg = dm + im - dd >= 0;
            if (!nonneg) {
              CHECK(v == AdmissibilityVerdict::NotAdmissibleEmpty);
            } else if (lvl >= 3) {
              CHECK(v == AdmissibilityVerdict::Contradiction);
            } else {
              CHECK(v == AdmissibilityVerdict::TransverseLocusDense);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("report", "[bounds][report]") {
  SECTION("sextic fourfold with image 426") {
    const auto r = report(sextic(), BigInt(426));
    REQUIRE(r.mhl_upper.has_value());
    CHECK(*r.mhl_upper == 426);
    CHECK(r.ct.value == 373815);
    CHECK(r.ct_in_final_bound);
    CHECK(r.mhl_below_ct);
    CHECK(r.final_bound == 426);
    CHECK(r.legal_basis == std::vector<BoundSource>{BoundSource::HodgeLocus});
    CHECK(r.image_verdict == ImageVerdict::Maximal);
    CHECK(r.warnings.empty());
  }
  SECTION("weight 3 all ones") {
    const auto r = report(sig({1, 1, 1, 1}));
    CHECK(r.level == 3);
    CHECK(r.final_bound == 1);
    CHECK(has_source(r, BoundSource::HodgeLocus));
    CHECK(r.has_warning("ct-lower-bound-informational"));
    CHECK_FALSE(r.ct_in_final_bound);
  }
  SECTION("K3 signature") {
    const auto r = report(sig({1, 20, 1}), BigInt(19));
    CHECK_FALSE(r.mhl_upper.has_value());
    CHECK(r.has_warning("mhl-gate-level"));
    CHECK(r.level == 1);
    CHECK(r.griffiths_bound == 20);
    CHECK(r.final_bound == 20);
    CHECK(r.image_verdict == ImageVerdict::BelowBound);
  }
  SECTION("weight 4 with both bounds equal") {
    const auto r = report(sig({1, 1, 1, 1, 1}));
    CHECK(r.final_bound == 1);
    CHECK(has_source(r, BoundSource::HodgeLocus));
    CHECK(has_source(r, BoundSource::CarlsonToledo));
    CHECK(r.has_warning("ct-floor-applied"));
  }
  SECTION("image above the bound is flagged, not thrown") {
    const auto r = report(sextic(), BigInt(427));
    CHECK(r.image_verdict == ImageVerdict::ExceedsBound);
    CHECK(r.has_warning("image-dim-exceeds-bound"));
  }
  SECTION("level 3 without a middle vector") {
    const auto r = report(sig({1, 3, 0, 3, 1}));
    CHECK(r.level == 3);
    CHECK_FALSE(r.mhl_upper.has_value());
    CHECK(r.has_warning("mhl-construction-unavailable"));
  }
  SECTION("orthogonal dimension 4 is gated as not simple") {
    const auto r = report(sig({1, 0, 2, 0, 1}));
    CHECK_FALSE(r.mhl_upper.has_value());
    CHECK(r.has_warning("mhl-gate-not-simple"));
  }
}

TEST_CASE("random signatures: codimension two routes and report invariants", "[bounds][property]") {
  oracle::SignatureGenerator gen(0x5eed0301);
  for (int trial = 0; trial < 400; ++trial) {
    const auto s = sig(gen.next({}));
    INFO(s.to_string());
    if (s.parity() == Parity::Orthogonal && s.weight() >= 4 && s.at(s.weight() / 2) > 0) {
      const auto w = mhl_upper_orthogonal(s);
      BigInt sum = 0;
      for (std::int64_t i = 1; i <= s.weight() / 2; ++i) sum += s.at(s.weight() / 2 - i);
      CHECK(w.codim == sum);
      CHECK(2 * w.codim == s.total_dimension() - s.at(s.weight() / 2));
      CHECK(w.codim == vector_stabilizer_codim(s));
      CHECK(w.codim >= 1);
    }
    if (s.parity() == Parity::Symplectic && s.total_dimension() > 2) {
      for (const auto& [p, h] : s.numbers()) {
        const auto w = mhl_upper_symplectic(s, std::pair<std::int64_t, std::int64_t>{p, s.weight() - p});
        CHECK(w.codim == s.total_dimension() - h - 1);
        CHECK(w.codim == plane_splitting_codim(s, p));
        CHECK(w.codim >= 1);
      }
    }

    const auto r = report(s);
    CHECK(r.ct.value <= r.griffiths_bound);
    CHECK(r.final_bound <= r.griffiths_bound);
    if (r.mhl_upper) {
      CHECK(level_at_least_3(s).holds);
      CHECK(r.simplicity.status == SimplicityStatus::Simple);
      CHECK(r.final_bound <= *r.mhl_upper);
    }
    if (r.ct_in_final_bound) CHECK(r.final_bound <= r.ct.value);
    CHECK_FALSE(r.legal_basis.empty());
    if (s.weight() <= 2) CHECK_FALSE(r.mhl_upper.has_value());
  }
}
