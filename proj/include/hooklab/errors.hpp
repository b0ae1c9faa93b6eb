#pragma once

#include <stdexcept>
#include <string>

namespace hooklab {

/// Root of every exception thrown by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class parse_error : public error { public: using error::error; };
class not_a_partition : public error { public: using error::error; };
class not_contained : public error { public: using error::error; };
class box_outside_shape : public error { public: using error::error; };
class not_extensible : public error { public: using error::error; };
class cutoff_too_small : public error { public: using error::error; };

class not_standard : public error { public: using error::error; };
class not_semistandard : public error { public: using error::error; };

class move_blocked : public error { public: using error::error; };
class not_an_excitation : public error { public: using error::error; };
class nonpositive_box : public error { public: using error::error; };

class unassigned_variable : public error { public: using error::error; };
class dimension_mismatch : public error { public: using error::error; };

// Signals that a sampled point hit a vanishing denominator; callers resample.
class zero_denominator : public error { public: using error::error; };

class unfailing_array : public error { public: using error::error; };

// Raised by report::require() when a checked identity fails; what() carries
// the witness.
class identity_violated : public error { public: using error::error; };

} // namespace hooklab
