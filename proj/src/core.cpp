#include "qcomb/core.hpp"

#include <cctype>
#include <limits>

namespace qcomb {

BigInt parse_bigint(std::string_view text) {
    std::size_t i = 0;
    bool neg = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        neg = text[i] == '-';
        ++i;
    }
    if (i == text.size())
        throw ParseError("expected an integer, got '" + std::string(text) + "'");
    BigInt v = 0;
    for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError("expected an integer, got '" + std::string(text) + "'");
        v = v * 10 + (text[i] - '0');
    }
    return neg ? BigInt(-v) : v;
}

long to_long(const BigInt& v) {
    if (v > std::numeric_limits<long>::max() || v < std::numeric_limits<long>::min())
        throw DomainError("integer " + v.str() + " too large for this operation");
    return v.convert_to<long>();
}

std::string to_string(const BigInt& v) { return v.str(); }

} // namespace qcomb
