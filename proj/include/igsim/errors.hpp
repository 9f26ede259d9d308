#pragma once

#include <stdexcept>
#include <string>

namespace igsim {

/// Error categories exposed one-to-one through the C API status codes.
enum class ErrorKind {
    domain = 1,       // bad argument value (negative charge, dt <= 0, ...)
    design,           // CSP design produced a non-finite/non-positive duration
    config,           // malformed run configuration
    incomplete_edge,  // stage machine did not finish within t_max
    protocol,         // loss-measurement threshold never crossed
    signature,        // edge does not traverse enough of the bus voltage
    framing,          // PWM cycle / spectrum length mismatch
    assembly,         // edges do not fit the requested PWM period
    calibration,      // loss target not bracketed by the i3 bounds
    io,               // file read/write failure
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

inline Error domain_error(const std::string& what) { return Error(ErrorKind::domain, what); }
inline Error design_error(const std::string& what) { return Error(ErrorKind::design, what); }
inline Error config_error(const std::string& what) { return Error(ErrorKind::config, what); }
inline Error protocol_error(const std::string& what) { return Error(ErrorKind::protocol, what); }
inline Error signature_error(const std::string& what) { return Error(ErrorKind::signature, what); }
inline Error framing_error(const std::string& what) { return Error(ErrorKind::framing, what); }
inline Error assembly_error(const std::string& what) { return Error(ErrorKind::assembly, what); }
inline Error calibration_error(const std::string& what) { return Error(ErrorKind::calibration, what); }
inline Error io_error(const std::string& what) { return Error(ErrorKind::io, what); }

}  // namespace igsim
