#pragma once

#include <stdexcept>
#include <string>

namespace tilekit {

/// Base class for all tilekit errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Incompatible shapes or group specifications (element rank vs. spec, mismatched quotients).
class SpecMismatch : public Error {
public:
    using Error::Error;
};

/// A plain precondition on caller-supplied data failed (bad sizes, duplicate tile
/// elements, malformed tables).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Checked 64-bit arithmetic left the representable range.
class ArithmeticOverflow : public Error {
public:
    using Error::Error;
};

/// A fundamental domain or grid resolution exceeded the configured cap.
class CapacityExceeded : public Error {
public:
    using Error::Error;
};

/// The modulus passed to the Frobenius check is not prime.
class InvalidPrime : public Error {
public:
    using Error::Error;
};

/// A hypothesis of the operation was checked and found false
/// (e.g. the input pair is not a tiling).
class PremiseViolation : public Error {
public:
    using Error::Error;
};

/// A decomposition consistency check failed; carries the failing check and point.
class StructureViolation : public Error {
public:
    StructureViolation(const std::string& check, const std::string& point,
                       const std::string& detail)
        : Error("structure check " + check + " failed at " + point + ": " + detail),
          check_(check), point_(point) {}
    const std::string& check() const { return check_; }
    const std::string& point() const { return point_; }

private:
    std::string check_;
    std::string point_;
};

/// The step function does not have connected support.
class ConnectedRequired : public Error {
public:
    using Error::Error;
};

/// An internal consequence of a verified hypothesis failed to hold.
/// Reaching this indicates a defect, not bad input.
class LemmaViolation : public Error {
public:
    using Error::Error;
};

/// A circle-tiling assembly referenced a set that is not a valid complement.
class InvalidAssignment : public Error {
public:
    using Error::Error;
};

/// The provided subset is not a subgroup of the given finite group.
class InvalidSubgroup : public Error {
public:
    using Error::Error;
};

/// The requested configuration is outside the implemented scope.
class Unsupported : public Error {
public:
    using Error::Error;
};

/// A simulation window produced no usable core.
class DegenerateWindow : public Error {
public:
    using Error::Error;
};

} // namespace tilekit
