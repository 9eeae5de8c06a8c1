#pragma once

#include <stdexcept>
#include <string>

namespace tlut {

// Mirrors the status codes exposed through the C API.
enum class Status : int {
    Ok = 0,
    InvalidArgument = 1,
    Io = 2,
    Format = 3,
    Dimension = 4,
    Infeasible = 5,
    Saturated = 6,
    Internal = 7,
};

class Error : public std::runtime_error {
public:
    Error(Status code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Status code() const { return code_; }

private:
    Status code_;
};

inline const char* status_name(Status s) {
    switch (s) {
        case Status::Ok: return "ok";
        case Status::InvalidArgument: return "invalid_argument";
        case Status::Io: return "io_error";
        case Status::Format: return "format_error";
        case Status::Dimension: return "dimension_error";
        case Status::Infeasible: return "infeasible";
        case Status::Saturated: return "saturated";
        case Status::Internal: return "internal_error";
    }
    return "unknown";
}

}  // namespace tlut
