#pragma once

#include <stdexcept>
#include <string>

namespace tercyc {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// modular
struct not_coprime_error : error { using error::error; };
struct invalid_triple_error : error { using error::error; };
struct primality_required_error : error { using error::error; };

// repr
struct out_of_range_error : error { using error::error; };
struct inconsistent_error : error { using error::error; };

// zones
struct empty_cell_error : error { using error::error; };
struct internal_inconsistency_error : error { using error::error; };
struct lemma_violation_error : error { using error::error; };

// poly
struct too_large_error : error { using error::error; };
struct inexact_division_error : error { using error::error; };
struct flatness_violation_error : error { using error::error; };

}  // namespace tercyc
