#pragma once

// RAII wrappers over the C API handles, and a status check that turns a
// failed call into an exception carrying the status and message.

#include <memory>
#include <stdexcept>
#include <string>

extern "C" {
#include "czorb/czorb.h"
}

namespace czorb_cli {

class ApiError : public std::runtime_error {
 public:
  ApiError(czorb_status status, const std::string& message, double value)
      : std::runtime_error(message), status_(status), value_(value) {}

  czorb_status status() const noexcept { return status_; }
  double value() const noexcept { return value_; }

 private:
  czorb_status status_;
  double value_;
};

inline void check(czorb_status status) {
  if (status != CZORB_OK) {
    throw ApiError(status, czorb_last_error_message(), czorb_last_error_value());
  }
}

template <typename T, void (*Free)(T*)>
struct HandleDeleter {
  void operator()(T* p) const noexcept { Free(p); }
};

using Weights = std::unique_ptr<czorb_weights, HandleDeleter<czorb_weights, czorb_weights_free>>;
using Invariants =
    std::unique_ptr<czorb_weight_invariants,
                    HandleDeleter<czorb_weight_invariants, czorb_weight_invariants_free>>;
using SpaceHandle = std::unique_ptr<czorb_space, HandleDeleter<czorb_space, czorb_space_free>>;
using Brieskorn =
    std::unique_ptr<czorb_brieskorn, HandleDeleter<czorb_brieskorn, czorb_brieskorn_free>>;
using Report = std::unique_ptr<czorb_report, HandleDeleter<czorb_report, czorb_report_free>>;

}  // namespace czorb_cli
