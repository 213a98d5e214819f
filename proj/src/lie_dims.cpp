#include "hodge/lie_dims.hpp"

#include <algorithm>
#include <sstream>

namespace hodge {

BigInt dim_so(const BigInt& r, const BigInt& s) {
  const BigInt m = r + s;
  if (m <= 0) return 0;
  return m * (m - 1) / 2;
}

BigInt dim_u(const BigInt& m) { return m * m; }

BigInt dim_sp(const BigInt& two_d) {
  if (two_d % 2 != 0) {
    throw HodgeError(ErrorCode::OddInput, "Sp_{2d} needs an even size, got " + two_d.str());
  }
  const BigInt d = two_d / 2;
  return d * (2 * d + 1);
}

BigInt IsotropyDescription::real_dimension() const {
  BigInt total = special_orthogonal ? dim_so(*special_orthogonal, 0) : BigInt(0);
  for (const auto& f : unitary) total += dim_u(f.size);
  return total;
}

std::string IsotropyDescription::to_string() const {
  std::ostringstream os;
  bool first = true;
  if (special_orthogonal) {
    os << "SO(" << *special_orthogonal << ")";
    first = false;
  }
  for (const auto& f : unitary) {
    if (!first) os << " x ";
    first = false;
    os << "U(" << f.size << ")";
  }
  if (first) os << "{1}";
  return os.str();
}

IsotropyDescription isotropy(const HodgeSignature& sig) {
  require_normalized(sig);
  IsotropyDescription out{sig.parity(), {}, std::nullopt};
  const auto w = sig.weight();
  if (sig.parity() == Parity::Orthogonal) {
    const auto n = w / 2;
    out.special_orthogonal = sig.at(n);
    // U(h^{n-i,n+i}) for i = 1..n.
    for (auto it = sig.numbers().begin(); it != sig.numbers().end() && it->first < n; ++it) {
      out.unitary.push_back({it->first, it->second});
    }
    std::reverse(out.unitary.begin(), out.unitary.end());
  } else {
    const auto n = (w - 1) / 2;
    // U(h^{n+i+1,n-i}) for i = 0..n.
    for (auto it = sig.numbers().lower_bound(n + 1); it != sig.numbers().end(); ++it) {
      out.unitary.push_back({it->first, it->second});
    }
  }
  return out;
}

BigInt group_dimension(const HodgeSignature& sig) {
  require_normalized(sig);
  const BigInt dim_v = sig.total_dimension();
  if (sig.parity() == Parity::Orthogonal) {
    const auto rs = orthogonal_signature(sig);
    return dim_so(rs.r, rs.s);
  }
  return dim_sp(dim_v);
}

namespace {

BigInt half_or_bug(const BigInt& twice, const char* what) {
  if (twice % 2 != 0) {
    throw HodgeError(ErrorCode::ParityBug, std::string(what) + ": odd real dimension difference " + twice.str());
  }
  return twice / 2;
}

}  // namespace

BigInt cross_check_domain_dim(const HodgeSignature& sig) {
  return half_or_bug(group_dimension(sig) - isotropy(sig).real_dimension(), "domain dimension");
}

BigInt vector_stabilizer_codim(const HodgeSignature& sig) {
  if (sig.parity() != Parity::Orthogonal) {
    throw HodgeError(ErrorCode::WrongParity, "vector stabilizer subdatum needs even weight");
  }
  const auto rs = orthogonal_signature(sig);
  const auto k = isotropy(sig);
  const BigInt& middle = *k.special_orthogonal;
  if (middle == 0) {
    throw HodgeError(ErrorCode::MiddleNumberZero, "h^{n,n} = 0: no Hodge vector in the middle block");
  }
  // K cap M^der replaces SO(h^{n,n}) by SO(h^{n,n}-1) and keeps the unitary factors.
  IsotropyDescription k_m = k;
  k_m.special_orthogonal = middle - 1;

  const BigInt twice = (dim_so(rs.r, rs.s) - dim_so(rs.r, rs.s - 1)) + k_m.real_dimension() - k.real_dimension();
  return half_or_bug(twice, "vector stabilizer codimension");
}

BigInt plane_splitting_codim(const HodgeSignature& sig, std::int64_t r) {
  if (sig.parity() != Parity::Symplectic) {
    throw HodgeError(ErrorCode::WrongParity, "plane splitting subdatum needs odd weight");
  }
  const BigInt two_d = sig.total_dimension();
  if (two_d <= 2) {
    throw HodgeError(ErrorCode::TooSmall, "plane splitting needs dim V > 2, got " + two_d.str());
  }
  const auto w = sig.weight();
  const auto upper = std::max(r, w - r);  // the factor U(h^{r,s}) is indexed by max(r, s)
  const BigInt h_rs = sig.at(upper);
  if (h_rs == 0) {
    throw HodgeError(ErrorCode::ZeroHodgeNumber,
                     "h^{" + std::to_string(r) + "," + std::to_string(w - r) + "} = 0");
  }

  const auto k = isotropy(sig);
  IsotropyDescription k_m{Parity::Symplectic, {}, std::nullopt};
  k_m.unitary.push_back({upper, 1});
  for (const auto& f : k.unitary) {
    if (f.p == upper) {
      if (f.size > 1) k_m.unitary.push_back({f.p, f.size - 1});
    } else {
      k_m.unitary.push_back(f);
    }
  }
  const BigInt m_der = dim_sp(two_d - 2) + dim_sp(2);
  const BigInt twice = (dim_sp(two_d) - m_der) + k_m.real_dimension() - k.real_dimension();
  return half_or_bug(twice, "plane splitting codimension");
}

}  // namespace hodge
