#include "hff/parse.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace hff {

namespace {

[[noreturn]] void fail(std::string_view text) {
    throw std::invalid_argument("malformed complex number: '" + std::string(text) + "'");
}

}  // namespace

cdouble parse_complex(std::string_view text) {
    std::string compact;
    compact.reserve(text.size());
    for (const char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
    if (compact.empty()) fail(text);

    double re = 0.0, im = 0.0;
    std::size_t pos = 0;
    while (pos < compact.size()) {
        const std::size_t start = pos;
        if (compact[pos] == '+' || compact[pos] == '-') ++pos;
        // mantissa digits / dot
        std::size_t digits = pos;
        while (pos < compact.size() &&
               (std::isdigit(static_cast<unsigned char>(compact[pos])) || compact[pos] == '.'))
            ++pos;
        const bool has_digits = pos > digits;
        if (has_digits && pos < compact.size() && (compact[pos] == 'e' || compact[pos] == 'E')) {
            ++pos;
            if (pos < compact.size() && (compact[pos] == '+' || compact[pos] == '-')) ++pos;
            while (pos < compact.size() && std::isdigit(static_cast<unsigned char>(compact[pos])))
                ++pos;
        }
        const bool imaginary = pos < compact.size() && (compact[pos] == 'i' || compact[pos] == 'j');
        std::string part(compact.substr(start, pos - start));
        if (imaginary) ++pos;
        if (!has_digits) {
            if (!imaginary) fail(text);  // bare sign or garbage
            part += "1";                 // "i", "+i", "-i"
        }
        char* end = nullptr;
        const double v = std::strtod(part.c_str(), &end);
        if (end != part.c_str() + part.size()) fail(text);
        (imaginary ? im : re) += v;
        if (pos < compact.size() && compact[pos] != '+' && compact[pos] != '-') fail(text);
    }
    return {re, im};
}

}  // namespace hff
