#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "foxh/params.hpp"

namespace foxh {

/// Where a closed form is known to equal the H-function.
struct CaseValidity {
  enum class Kind { Entire, AllNonzero, ExcludedCircle };
  Kind kind = Kind::AllNonzero;
  double radius = 0;  // ExcludedCircle: |z| = radius is excluded

  bool contains(cplx z) const;
};

struct ReferencePoint {
  cplx z;
  cplx value;
};

struct KnownCase {
  std::string id;
  std::string description;
  std::string provenance;
  HParams params;
  CaseValidity validity;
  std::vector<ReferencePoint> reference_points;  // high-precision values shipped with the corpus
};

/// The built-in corpus, parsed once from the embedded JSON.
const std::vector<KnownCase>& known_cases();

/// Throws Error{UnknownCase}.
const KnownCase& known_case(std::string_view id);

/// Closed-form value of corpus case `id` at z.  Throws UnknownCase, OutOfDomain.
cplx known_case_value(std::string_view id, cplx z);

/// K_0(x) for Re x > 0 from the integral of exp(-x cosh t) over t in [0, inf).
cplx bessel_k0(cplx x);

}  // namespace foxh
