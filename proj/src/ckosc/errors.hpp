#pragma once

#include <stdexcept>
#include <string>

namespace ckosc {

// Failure taxonomy shared by every layer. The C API maps these 1:1 onto
// status codes, so keep the list in sync with ckoscillator.h.
enum class ErrorKind {
    Domain,          // non-finite or otherwise invalid numeric input
    Pole,            // evaluation at a pole of T or 1/C
    OutOfRange,      // inverse function argument outside its range
    OutOfChart,      // point not representable in the requested chart
    SingularChart,   // chart-singular point (e.g. polar origin)
    UndefinedAngle,  // angle undefined (conversion at the origin)
    InfiniteWall,    // potential wall hit (kappa1 > 0 equator)
    Degenerate,      // degenerate configuration (kappa2 = 0 orbit solving, J = 0)
    NoRealOrbit,     // energy below the effective-potential minimum
    OutsideBranch,   // angle outside the real branch of the orbit
    OpenOrbit,       // period requested for a non-closed orbit
    EmptyCurve,      // conic equation has no real points
    Unsupported,     // operation not defined for these parameters
    NotPeriodic,     // too few radial events to measure a period
    Stiffness,       // step-size underflow / step budget exhausted
    InvalidArgument, // bad configuration value
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string msg, double detail = 0.0)
        : std::runtime_error(std::move(msg)), kind_(kind), detail_(detail) {}

    ErrorKind kind() const noexcept { return kind_; }

    // Optional numeric payload: pole/wall location, offending value, ...
    double detail() const noexcept { return detail_; }

private:
    ErrorKind kind_;
    double detail_;
};

[[noreturn]] inline void throw_error(ErrorKind kind, const std::string& msg, double detail = 0.0) {
    throw Error(kind, msg, detail);
}

} // namespace ckosc
