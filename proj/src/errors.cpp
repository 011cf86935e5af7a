#include "cideal/errors.hpp"

namespace cideal {

ParseError::ParseError(const std::string& what, std::size_t position)
    : ValidationError(what + " (at offset " + std::to_string(position) + ")"), position_(position), message_(what) {}

}  // namespace cideal
