#pragma once

#include <stdexcept>
#include <string>

namespace qamkit {

// Library errors carry a stable machine-readable code alongside the message.
// The CLI maps codes to exit statuses (unsupported configuration vs numeric
// failure), so codes are part of the public surface.
class qam_error : public std::runtime_error {
public:
    qam_error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

inline qam_error err_not_power_of_four(const std::string& what) { return {"NotPowerOfFour", what}; }
inline qam_error err_unsupported_order(const std::string& what) { return {"UnsupportedOrder", what}; }
inline qam_error err_radii_not_increasing(const std::string& what) { return {"RadiiNotIncreasing", what}; }
inline qam_error err_wrong_family(const std::string& what) { return {"WrongFamily", what}; }
inline qam_error err_wrong_constellation(const std::string& what) { return {"WrongConstellation", what}; }
inline qam_error err_phi_out_of_range(const std::string& what) { return {"PhiOutOfRange", what}; }
inline qam_error err_zero_magnitude(const std::string& what) { return {"ZeroMagnitudeSample", what}; }
inline qam_error err_mapping_mismatch(const std::string& what) { return {"MappingMismatch", what}; }
inline qam_error err_non_positive_params(const std::string& what) { return {"NonPositiveParams", what}; }
inline qam_error err_ratio_degenerate(const std::string& what) { return {"RatioDegenerate", what}; }
inline qam_error err_numeric(const std::string& what) { return {"NumericFailure", what}; }

} // namespace qamkit
