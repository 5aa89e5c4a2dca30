#pragma once

/*
  errors.h -- shared exception types.

  The library is a verification tool: it never silently truncates or
  approximates.  Anything that would compromise exactness throws.

    guard_error      -- a computation would leave the enumerated ball, or a
                        resource guard (radius, margin) would be violated.
                        The result would merely be unknown, not wrong.
    data_error       -- a structural assertion failed: an identity that the
                        embedded tables promise did not hold, a basis did not
                        triangularize, a residual was nonzero.  This is a
                        genuine verification failure.
    nongeneric_error -- the supplied weights lie on a wall between parameter
                        zones; the requested computation is only defined for
                        generic weights.
*/

#include <stdexcept>
#include <string>

namespace kl {

struct guard_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct data_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct nongeneric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace kl
