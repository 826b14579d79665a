#pragma once

#include <stdexcept>
#include <string>

namespace zpt {

// Base class for all library errors. Domain errors (bad input, exhausted
// precision) derive from this; internal arithmetic bugs surface as
// internal_error via ZPT_CHECK.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct division_by_zero : error { using error::error; };
struct spec_mismatch : error { using error::error; };
struct precision_mismatch : error { using error::error; };
struct length_mismatch : error { using error::error; };
struct precision_exhausted : error { using error::error; };
struct not_a_unit : error { using error::error; };
struct not_a_pth_power : error { using error::error; };
struct not_divisible : error { using error::error; };
struct wrong_characteristic : error { using error::error; };
struct oracle_too_large : error { using error::error; };
struct pole_at_point : error { using error::error; };
struct not_in_base_field : error { using error::error; };
struct unsupported_denominator : error { using error::error; };
struct window_too_small : error { using error::error; };
struct bound_too_small : error { using error::error; };
struct empty_profile : error { using error::error; };
struct not_normalized : error { using error::error; };
struct non_integral_genus : error { using error::error; };
struct constant_tower : error { using error::error; };
struct horizon_too_small : error { using error::error; };
struct bad_degree : error { using error::error; };
struct bad_input : error { using error::error; };

struct internal_error : error { using error::error; };

#define ZPT_CHECK(cond, msg)                                                  \
    do {                                                                      \
        if (!(cond)) throw ::zpt::internal_error(std::string("internal: ") + (msg)); \
    } while (0)

}  // namespace zpt
