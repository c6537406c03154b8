#ifndef MWT_ERRORS_HPP
#define MWT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mwt {

struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/* bad value passed to an operation (zero entry, degenerate matrix, ...) */
struct value_error : error {
    explicit value_error(const std::string& msg) : error(msg) {}
};

/* request outside the supported range (characteristic 2, huge fields, ...) */
struct unsupported_error : error {
    explicit unsupported_error(const std::string& msg) : error(msg) {}
};

struct parse_error : error {
    size_t pos;
    parse_error(const std::string& msg, size_t at)
        : error(msg + " (at position " + std::to_string(at) + ")"), pos(at) {}
};

}  // namespace mwt

#endif
