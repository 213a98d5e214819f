#pragma once

// Signatures of period data: weight plus Hodge numbers, their validation and
// canonical form, and the invariants of the adjoint Hodge structure on the
// Lie algebra (infinitesimal Hodge numbers, level, period domain dimension).

#include "hodge/bigint.hpp"
#include "hodge/error.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hodge {

/// Even weight gives a symmetric polarization (orthogonal group), odd weight
/// a skew one (symplectic group).
enum class Parity { Orthogonal, Symplectic };

std::string_view parity_name(Parity parity);

/// Weight w together with the Hodge numbers h^{p,w-p}, stored sparsely by p.
///
/// Only nonzero entries are kept, so a signature with a huge weight but a
/// handful of nonzero numbers is cheap. The constructor enforces w >= 1 and
/// nonnegative entries; Hodge symmetry and the support convention are
/// checked by validate().
class HodgeSignature {
 public:
  HodgeSignature(std::int64_t weight, std::map<std::int64_t, BigInt> numbers);

  /// Dense list ordered h^{w,0}, h^{w-1,1}, ..., h^{0,w}.
  static HodgeSignature from_dense(std::int64_t weight, const std::vector<BigInt>& top_down);

  std::int64_t weight() const noexcept { return weight_; }
  Parity parity() const noexcept { return weight_ % 2 == 0 ? Parity::Orthogonal : Parity::Symplectic; }

  /// h^{p, w-p}; zero outside the support.
  const BigInt& at(std::int64_t p) const;
  const std::map<std::int64_t, BigInt>& numbers() const noexcept { return numbers_; }

  /// dim V = sum of all Hodge numbers.
  BigInt total_dimension() const;

  /// Dense top-down list h^{w,0} ... h^{0,w}. Only meaningful for normalized
  /// signatures with moderate weight.
  std::vector<BigInt> dense() const;

  std::string to_string() const;

  friend bool operator==(const HodgeSignature&, const HodgeSignature&) = default;

 private:
  std::int64_t weight_;
  std::map<std::int64_t, BigInt> numbers_;
};

enum class Severity { Error, Warning };

struct ValidationIssue {
  ErrorCode code;
  Severity severity;
  std::string message;
};

struct ValidationResult {
  std::vector<ValidationIssue> issues;

  bool ok() const;
  bool has(ErrorCode code) const;
};

ValidationResult validate(const HodgeSignature& sig);

/// True when sig is valid and already in canonical form (support in [0, w]
/// with h^{w,0} > 0).
bool is_normalized(const HodgeSignature& sig);

/// Throws NotNormalized (or the underlying validation error) unless
/// is_normalized(sig).
void require_normalized(const HodgeSignature& sig);

/// Tate twist to the canonical form: shift indices so that the smallest p in
/// the support is 0, and take w = p_max - p_min. Throws ZeroWeight when the
/// support is a single middle block.
HodgeSignature normalize(const HodgeSignature& sig);

/// h_inf^k = dim g^{-k,k} of the adjoint Hodge structure.
class InfinitesimalNumbers {
 public:
  InfinitesimalNumbers(Parity parity, BigInt dim_v, std::map<std::int64_t, BigInt> nonnegative);

  Parity parity() const noexcept { return parity_; }
  const BigInt& dim_v() const noexcept { return dim_v_; }

  /// Symmetric in k.
  const BigInt& at(std::int64_t k) const;

  /// Nonzero values for k >= 0.
  const std::map<std::int64_t, BigInt>& nonnegative() const noexcept { return values_; }

  /// All nonzero values, both signs of k.
  std::map<std::int64_t, BigInt> expanded() const;

  /// Sum over all k in Z; equals the dimension of the derived Lie algebra.
  BigInt total() const;

 private:
  Parity parity_;
  BigInt dim_v_;
  std::map<std::int64_t, BigInt> values_;
};

InfinitesimalNumbers infinitesimal_numbers(const HodgeSignature& sig);

/// Largest k with h_inf^k != 0.
std::int64_t level(const HodgeSignature& sig);

/// Outcome of the case analysis characterizing level >= 3 directly from the
/// Hodge numbers. `case_label` is one of "1", "2.a", "2.b", "2.c" when
/// `holds`; k and j identify the witnessing term where the case has them.
struct LevelCriterion {
  bool holds = false;
  std::string case_label;
  std::optional<std::int64_t> k;
  std::optional<std::int64_t> j;
  std::string reason;
};

LevelCriterion level_at_least_3(const HodgeSignature& sig);

/// Complex dimension of the period domain: sum of h_inf^k over k >= 1.
BigInt domain_dimension(const HodgeSignature& sig);

/// Real signature (r, s) of the polarization on V_R for even weight.
struct OrthogonalSignaturePair {
  BigInt r;
  BigInt s;
};

OrthogonalSignaturePair orthogonal_signature(const HodgeSignature& sig);

}  // namespace hodge
