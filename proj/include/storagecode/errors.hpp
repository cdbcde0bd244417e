#pragma once
#include <stdexcept>
#include <string>

namespace storagecode {

// Error taxonomy mirrors the CLI exit-code contract:
// usage/parse problems exit 2, I/O exits 3, resource limits exit 4,
// verification failures (including unsound repair input) exit 1.
enum class errc {
    arity_mismatch,
    out_of_range,
    bad_parameter,
    parse,
    convention,   // input violates a required convention (e.g. 0 not in S)
    resource,     // over the dense or algebra ceiling
    io,
    repair_unsound,
};

class error : public std::runtime_error {
  public:
    error(errc kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    errc kind() const { return kind_; }

  private:
    errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& msg) { throw error(kind, msg); }

} // namespace storagecode
