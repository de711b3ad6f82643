#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "foxh/rational.hpp"

namespace foxh {

using cplx = std::complex<double>;

/// Upper parameter pair (a_i, alpha_i).  The optional exact fields carry the
/// real part of a_i and the weight alpha_i as rationals for exact pole arithmetic.
struct UpperParam {
  cplx a;
  double alpha = 1.0;
  std::optional<Rational> a_re_exact;
  std::optional<Rational> alpha_exact;
};

/// Lower parameter pair (b_j, beta_j), see UpperParam.
struct LowerParam {
  cplx b;
  double beta = 1.0;
  std::optional<Rational> b_re_exact;
  std::optional<Rational> beta_exact;
};

/// Unchecked input as it arrives from JSON or user code.
struct RawParams {
  int m = 0, n = 0, p = 0, q = 0;
  std::vector<UpperParam> upper;
  std::vector<LowerParam> lower;
};

/// Validated orders and parameter arrays of H^{m,n}_{p,q}.
///
/// Gamma factors: Gamma(b_j + beta_j s) for j < m and Gamma(1 - a_i - alpha_i s)
/// for i < n in the numerator; Gamma(a_i + alpha_i s) for i >= n and
/// Gamma(1 - b_j - beta_j s) for j >= m in the denominator.  Indices are 0-based.
/// Instances are immutable once constructed.
class HParams {
 public:
  static HParams validate(RawParams raw);

  int m() const noexcept { return m_; }
  int n() const noexcept { return n_; }
  int p() const noexcept { return p_; }
  int q() const noexcept { return q_; }
  const std::vector<UpperParam>& upper() const noexcept { return upper_; }
  const std::vector<LowerParam>& lower() const noexcept { return lower_; }

  /// True when every a_i (resp. b_j) carries an exact real part and an exact weight.
  bool upper_exact() const noexcept { return upper_exact_; }
  bool lower_exact() const noexcept { return lower_exact_; }

  /// Same parameters with all rational metadata dropped (floating pole policy).
  HParams without_exact_data() const;

  RawParams to_raw() const;

 private:
  HParams() = default;

  int m_ = 0, n_ = 0, p_ = 0, q_ = 0;
  std::vector<UpperParam> upper_;
  std::vector<LowerParam> lower_;
  bool upper_exact_ = false;
  bool lower_exact_ = false;
};

/// Free-function spelling of HParams::validate.
inline HParams validate(RawParams raw) { return HParams::validate(std::move(raw)); }

struct Invariants {
  double delta_cap = 0;    // sum beta - sum alpha
  double delta_small = 1;  // prod alpha^-alpha * prod beta^beta
  cplx mu;                 // sum b - sum a + (p - q)/2
  double a_star = 0;       // sum_{i<n} alpha - sum_{i>=n} alpha + sum_{j<m} beta - sum_{j>=m} beta
  /// Sign of delta_cap; zero is decided exactly when all weights are rational,
  /// otherwise |delta_cap| <= 1e-12 * (sum of weights) counts as zero.
  int delta_sign = 0;
};

Invariants compute_invariants(const HParams& params);

/// Parameters of the same function with argument 1/z:
/// H^{m,n}_{p,q}[z | (a,alpha); (b,beta)] = H^{n,m}_{q,p}[1/z | (1-b,beta); (1-a,alpha)].
HParams inverted_params(const HParams& params);

/// Parameters whose integrand at -s is the reciprocal of the original integrand at s.
HParams reciprocal_params(const HParams& params);

}  // namespace foxh
