#pragma once

#include <stdexcept>
#include <string>

namespace orient {

enum class Errc {
    bad_parameters,
    duplicate_edge,
    missing_edge,
    missing_arc,
    capacity,
    size_limit,
    parse,
};

struct Error : std::runtime_error {
    Errc code;
    Error(Errc c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

}  // namespace orient
