#pragma once

#include <stdexcept>
#include <string>

namespace hsbm {

enum class Errc {
    invalid_params,
    out_of_range,
    too_large,
    degenerate_model,
    eig_failure,
    asymmetric,
    invalid_spec,
    io_error,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace hsbm
