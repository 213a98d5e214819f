#include "hodge/bounds.hpp"

#include "hodge/lie_dims.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hodge {

std::string_view subdatum_kind_name(SubdatumKind kind) {
  return kind == SubdatumKind::OrthogonalVectorStabilizer ? "orthogonal-vector-stabilizer"
                                                          : "symplectic-plane-splitting";
}

std::string_view ct_method_name(CtMethod method) {
  return method == CtMethod::Weight4ClosedForm ? "weight4-closed-form" : "block-lower-bound";
}

std::string_view simplicity_name(SimplicityStatus status) {
  switch (status) {
    case SimplicityStatus::Simple: return "simple";
    case SimplicityStatus::NotSimple: return "not-simple";
    case SimplicityStatus::Unknown: return "unknown";
  }
  return "unknown";
}

std::string_view admissibility_name(AdmissibilityVerdict verdict) {
  switch (verdict) {
    case AdmissibilityVerdict::TransverseLocusDense: return "transverse-locus-dense";
    case AdmissibilityVerdict::Contradiction: return "contradiction";
    case AdmissibilityVerdict::NotAdmissibleEmpty: return "not-admissible-empty";
  }
  return "unknown";
}

std::string_view bound_source_name(BoundSource source) {
  switch (source) {
    case BoundSource::Griffiths: return "griffiths-transversality";
    case BoundSource::HodgeLocus: return "hodge-locus";
    case BoundSource::CarlsonToledo: return "carlson-toledo";
  }
  return "unknown";
}

std::string_view image_verdict_name(ImageVerdict verdict) {
  switch (verdict) {
    case ImageVerdict::Maximal: return "maximal";
    case ImageVerdict::BelowBound: return "below-bound";
    case ImageVerdict::ExceedsBound: return "exceeds-bound";
  }
  return "unknown";
}

bool BoundsReport::has_warning(std::string_view code) const {
  return std::any_of(warnings.begin(), warnings.end(), [code](const Warning& w) { return w.code == code; });
}

// ---------------------------------------------------------------------------
// Constructed subdata

SubdatumWitness mhl_upper_orthogonal(const HodgeSignature& sig) {
  if (sig.parity() != Parity::Orthogonal) {
    throw HodgeError(ErrorCode::WrongParity, "vector stabilizer construction needs even weight, got " +
                                                 std::to_string(sig.weight()));
  }
  require_normalized(sig);
  const auto n = sig.weight() / 2;
  if (n < 2) {
    throw HodgeError(ErrorCode::WeightTooSmall, "vector stabilizer bound needs weight 2n with n >= 2, got weight " +
                                                    std::to_string(sig.weight()));
  }
  const BigInt& middle = sig.at(n);
  if (middle == 0) {
    throw HodgeError(ErrorCode::MiddleNumberZero,
                     "h^{" + std::to_string(n) + "," + std::to_string(n) + "} = 0: no middle Hodge vector");
  }

  // sum_{i=1}^n h^{n-i,n+i}
  BigInt codim = 0;
  for (auto it = sig.numbers().begin(); it != sig.numbers().end() && it->first < n; ++it) codim += it->second;

  if (2 * codim != sig.total_dimension() - middle) {
    throw std::logic_error("vector stabilizer codimension disagrees with (dim V - h^{n,n}) / 2");
  }
  BigInt group_route = vector_stabilizer_codim(sig);
  if (group_route != codim) {
    throw std::logic_error("vector stabilizer codimension disagrees with the group dimension count");
  }

  const auto rs = orthogonal_signature(sig);
  std::ostringstream desc;
  desc << "stabilizer of a rational Hodge vector in V^{" << n << "," << n << "}: SO(" << rs.r << "," << rs.s
       << ") reduced to SO(" << rs.r << "," << rs.s - 1 << "), SO(" << middle << ") reduced to SO(" << middle - 1
       << ")";
  return SubdatumWitness{SubdatumKind::OrthogonalVectorStabilizer, std::nullopt, std::move(codim),
                         std::move(group_route), desc.str()};
}

SubdatumWitness mhl_upper_symplectic(const HodgeSignature& sig,
                                     std::optional<std::pair<std::int64_t, std::int64_t>> rs) {
  if (sig.parity() != Parity::Symplectic) {
    throw HodgeError(ErrorCode::WrongParity, "plane splitting construction needs odd weight, got " +
                                                 std::to_string(sig.weight()));
  }
  require_normalized(sig);
  const auto w = sig.weight();
  const BigInt two_d = sig.total_dimension();
  if (two_d <= 2) {
    throw HodgeError(ErrorCode::TooSmall, "plane splitting needs dim V > 2, got " + two_d.str());
  }

  if (!rs) {
    // Largest h^{r,s} with r > s; the map iterates r ascending so strict
    // comparison keeps the smallest r on ties.
    std::optional<std::pair<std::int64_t, BigInt>> best;
    for (auto it = sig.numbers().lower_bound((w + 1) / 2); it != sig.numbers().end(); ++it) {
      if (!best || it->second > best->second) best.emplace(it->first, it->second);
    }
    rs.emplace(best->first, w - best->first);
  }
  const auto [r, s] = *rs;
  if (r + s != w) {
    throw HodgeError(ErrorCode::InvalidArgument, "index pair (" + std::to_string(r) + "," + std::to_string(s) +
                                                     ") does not sum to the weight " + std::to_string(w));
  }
  const BigInt& h_rs = sig.at(r);
  if (h_rs == 0) {
    throw HodgeError(ErrorCode::ZeroHodgeNumber,
                     "h^{" + std::to_string(r) + "," + std::to_string(s) + "} = 0: no vector to split along");
  }

  BigInt codim = two_d - h_rs - 1;
  BigInt group_route = plane_splitting_codim(sig, r);
  if (group_route != codim) {
    throw std::logic_error("plane splitting codimension disagrees with the group dimension count");
  }

  const BigInt d = two_d / 2;
  std::ostringstream desc;
  desc << "splitting along a rational symplectic plane through V^{" << r << "," << s << "} + V^{" << s << "," << r
       << "}: Sp_" << two_d << " reduced to Sp_" << two_d - 2 << " x Sp_2, U(" << h_rs << ") reduced to U(1) x U("
       << h_rs - 1 << ")";
  return SubdatumWitness{SubdatumKind::SymplecticPlaneSplitting, rs, std::move(codim), std::move(group_route),
                         desc.str()};
}

// ---------------------------------------------------------------------------
// Carlson-Toledo

CarlsonToledo carlson_toledo(const HodgeSignature& sig) {
  require_normalized(sig);
  const auto w = sig.weight();

  if (w == 4) {
    const BigInt a = sig.at(3) * sig.at(4);
    const BigInt product = sig.at(3) * sig.at(2);
    const BigInt b = product / 2;
    return CarlsonToledo{std::max(a, b), CtMethod::Weight4ClosedForm, product % 2 != 0};
  }

  // Hom(V^p, V^{p-1}) together with its adjoint Hom(V^{w-p+1}, V^{w-p}) is
  // abelian unless the two blocks compose, which happens exactly when
  // p - 1 = w - p + 1. Blocks with p > n + 1 never compose.
  BigInt best = 0;
  const auto n = w / 2;
  const auto first_free = n + 2;
  for (auto it = sig.numbers().lower_bound(first_free); it != sig.numbers().end(); ++it) {
    best = std::max(best, BigInt(it->second * sig.at(it->first - 1)));
  }
  if (sig.parity() == Parity::Symplectic) {
    // Self-adjoint middle block Hom(V^{n+1,n}, V^{n,n+1}): symmetric matrices.
    const BigInt& middle = sig.at(n + 1);
    best = std::max(best, BigInt(middle * (middle + 1) / 2));
  } else {
    best = std::max(best, BigInt(sig.at(n + 1) * sig.at(n) / 2));
  }
  return CarlsonToledo{std::move(best), CtMethod::BlockLowerBound, false};
}

// ---------------------------------------------------------------------------

SimplicityGuard simplicity_guard(const HodgeSignature& sig) {
  const BigInt dim_v = sig.total_dimension();
  if (sig.parity() == Parity::Orthogonal) {
    if (dim_v >= 5) return {SimplicityStatus::Simple, "SO(V) is Q-simple for dim V >= 5"};
    if (dim_v == 4) return {SimplicityStatus::NotSimple, "SO(V) need not be Q-simple for dim V = 4"};
    return {SimplicityStatus::Unknown, "degenerate orthogonal group for dim V = " + dim_v.str()};
  }
  if (dim_v >= 4) return {SimplicityStatus::Simple, "Sp(V) is Q-simple"};
  return {SimplicityStatus::Unknown, "degenerate symplectic case dim V = " + dim_v.str()};
}

AdmissibilityVerdict admissibility(const BigInt& domain_dim, const BigInt& subdatum_dim, const BigInt& image_dim,
                                   std::int64_t level) {
  if (subdatum_dim < 0 || image_dim < 0 || level < 0) {
    throw HodgeError(ErrorCode::InvalidArgument, "dimensions and level must be nonnegative");
  }
  if (subdatum_dim >= domain_dim) {
    throw HodgeError(ErrorCode::DimensionOrder, "a strict subdatum needs dim D_M < dim D, got " +
                                                    subdatum_dim.str() + " >= " + domain_dim.str());
  }
  if (subdatum_dim + image_dim - domain_dim >= 0) {
    return level >= 3 ? AdmissibilityVerdict::Contradiction : AdmissibilityVerdict::TransverseLocusDense;
  }
  return AdmissibilityVerdict::NotAdmissibleEmpty;
}

// ---------------------------------------------------------------------------

BoundsReport report(const HodgeSignature& sig, std::optional<BigInt> image_dim) {
  require_normalized(sig);
  auto inf = infinitesimal_numbers(sig);
  const std::int64_t lvl = inf.nonnegative().empty() ? 0 : inf.nonnegative().rbegin()->first;
  BigInt domain = 0;
  for (const auto& [k, h] : inf.nonnegative()) {
    if (k >= 1) domain += h;
  }
  BigInt griffiths = inf.at(1);

  BoundsReport out{sig,
                   lvl,
                   std::move(domain),
                   std::move(inf),
                   std::move(griffiths),
                   simplicity_guard(sig),
                   std::nullopt,
                   {},
                   carlson_toledo(sig),
                   false,
                   false,
                   0,
                   {},
                   std::move(image_dim),
                   std::nullopt,
                   {}};

  const bool level_ok = lvl >= 3;
  const bool simple_ok = out.simplicity.status == SimplicityStatus::Simple;
  if (!level_ok) {
    out.warnings.push_back({"mhl-gate-level", "level " + std::to_string(lvl) +
                                                  " < 3: the Hodge locus bound does not apply"});
  }
  if (out.simplicity.status == SimplicityStatus::NotSimple) {
    out.warnings.push_back({"mhl-gate-not-simple", out.simplicity.reason + "; Hodge locus bound suppressed"});
  } else if (out.simplicity.status == SimplicityStatus::Unknown) {
    out.warnings.push_back({"mhl-gate-simplicity-unknown", out.simplicity.reason + "; Hodge locus bound suppressed"});
  }
  if (level_ok && simple_ok) {
    try {
      auto witness = sig.parity() == Parity::Orthogonal ? mhl_upper_orthogonal(sig) : mhl_upper_symplectic(sig);
      out.mhl_upper = witness.bound();
      out.witnesses.push_back(std::move(witness));
    } catch (const HodgeError& e) {
      out.warnings.push_back({"mhl-construction-unavailable",
                              std::string(error_code_name(e.code())) + ": " + e.what()});
    }
  }

  out.ct_in_final_bound = out.ct.method == CtMethod::Weight4ClosedForm;
  if (!out.ct_in_final_bound) {
    out.warnings.push_back({"ct-lower-bound-informational",
                            "Carlson-Toledo figure " + out.ct.value.str() +
                                " is a lower bound for m_CT from explicit abelian blocks; not used in final_bound"});
  }
  if (out.ct.floored) {
    out.warnings.push_back({"ct-floor-applied", "h^{3,1}h^{2,2} is odd; half of it was rounded down"});
  }

  out.final_bound = out.griffiths_bound;
  if (out.mhl_upper) out.final_bound = std::min(out.final_bound, *out.mhl_upper);
  if (out.ct_in_final_bound) out.final_bound = std::min(out.final_bound, out.ct.value);
  if (out.mhl_upper && *out.mhl_upper == out.final_bound) out.legal_basis.push_back(BoundSource::HodgeLocus);
  if (out.ct_in_final_bound && out.ct.value == out.final_bound) {
    out.legal_basis.push_back(BoundSource::CarlsonToledo);
  }
  if (out.griffiths_bound == out.final_bound) out.legal_basis.push_back(BoundSource::Griffiths);

  out.mhl_below_ct = out.mhl_upper && *out.mhl_upper < out.ct.value;

  if (out.image_dim) {
    if (*out.image_dim < 0) {
      throw HodgeError(ErrorCode::InvalidArgument, "image dimension must be nonnegative");
    }
    if (*out.image_dim == out.final_bound) {
      out.image_verdict = ImageVerdict::Maximal;
    } else if (*out.image_dim < out.final_bound) {
      out.image_verdict = ImageVerdict::BelowBound;
    } else {
      out.image_verdict = ImageVerdict::ExceedsBound;
      out.warnings.push_back({"image-dim-exceeds-bound", "image dimension " + out.image_dim->str() +
                                                             " exceeds the bound " + out.final_bound.str() +
                                                             ": inconsistent input"});
    }
  }
  return out;
}

}  // namespace hodge
