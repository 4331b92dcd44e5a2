#pragma once

#include <stdexcept>
#include <string>

namespace nsl {

// Error classes map 1:1 onto CLI exit codes.
enum class errc : int {
    ok      = 0,
    usage   = 2,
    config  = 3,
    format  = 4,
    shape   = 5,
    domain  = 6,
    io      = 7,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string & msg) : std::runtime_error(msg), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

struct shape_error : error {
    explicit shape_error(const std::string & m) : error(errc::shape, m) {}
};

struct format_error : error {
    explicit format_error(const std::string & m) : error(errc::format, m) {}
};

struct config_error : error {
    explicit config_error(const std::string & m) : error(errc::config, m) {}
};

struct domain_error : error {
    explicit domain_error(const std::string & m) : error(errc::domain, m) {}
};

struct io_error : error {
    explicit io_error(const std::string & m) : error(errc::io, m) {}
};

} // namespace nsl
