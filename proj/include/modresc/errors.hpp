#pragma once

#include <stdexcept>
#include <string>

namespace modresc {

// Malformed external input (matrix text, CLI arguments, files).
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Violated internal invariant; indicates a bug, not bad input.
class contract_error : public std::logic_error {
public:
    explicit contract_error(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace modresc
