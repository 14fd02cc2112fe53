#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace qcomb {

using BigInt = boost::multiprecision::cpp_int;

// Malformed textual input (words, rationals, expansions, digit lists).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Well-formed input that violates an operation's precondition.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

BigInt parse_bigint(std::string_view text);

// Narrowing for loop bounds and word lengths; throws DomainError if it does not fit.
long to_long(const BigInt& v);

std::string to_string(const BigInt& v);

} // namespace qcomb
