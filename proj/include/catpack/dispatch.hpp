#pragma once

#include <string>

#include "catpack/model.hpp"
#include "catpack/oracle.hpp"

namespace catpack {

struct DispatchOptions {
  /// Use the large-n construction regardless of (k, n).
  bool force_large = false;
  /// Let the bounded oracle realize base matrices the generic induction
  /// cannot reduce, and matrices with common leaves for k >= 3.
  bool oracle_base = false;
  SearchLimits limits;
};

/// Name of the constructor `realize` would use for m.
std::string route(const DegreeMatrix& m, const DispatchOptions& options = {});

/// Routes by shape: one row, two rows, three or four rows without common
/// leaves, the large-n range, then the conditional induction. Throws
/// PreconditionError when force_large meets common leaves.
RealizationOutcome realize(const DegreeMatrix& m, const DispatchOptions& options = {});

}  // namespace catpack
