#include "skewhopf/scalar.hpp"

#include <cctype>

namespace skewhopf {

std::optional<Scalar> parse_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::size_t i = 0;
    if (text[i] == '-' || text[i] == '+') ++i;
    std::size_t digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i, ++digits;
    if (digits == 0) return std::nullopt;
    if (i < text.size()) {
        if (text[i] != '/') return std::nullopt;
        ++i;
        std::size_t den_digits = 0;
        std::size_t den_start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i, ++den_digits;
        if (den_digits == 0 || i != text.size()) return std::nullopt;
        if (text.substr(den_start).find_first_not_of('0') == std::string::npos) return std::nullopt;
    }
    Scalar q(text);
    q.canonicalize();
    return q;
}

std::string to_string(const Scalar& s) { return s.get_str(); }

}  // namespace skewhopf
