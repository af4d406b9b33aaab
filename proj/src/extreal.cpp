#include "nucleus/extreal.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <system_error>

namespace nucleus {

bool approx_equal(const ExtReal& a, const ExtReal& b, double tol) noexcept {
    if (a.tag() != b.tag()) return false;
    if (!a.is_finite()) return true;
    return std::abs(a.value() - b.value()) <= tol;
}

std::string to_string(const ExtReal& x) {
    if (x.is_pos_inf()) return "inf";
    if (x.is_neg_inf()) return "-inf";
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x.value());
    (void)ec;
    return std::string(buf, end);
}

ExtReal parse_extreal(std::string_view text) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) {
        text.remove_suffix(1);
    }
    if (text == "inf" || text == "+inf") return kPosInf;
    if (text == "-inf") return kNegInf;
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);

    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v)) {
        throw std::invalid_argument("not an extended real: '" + std::string(text) + "'");
    }
    return ExtReal(v);
}

std::ostream& operator<<(std::ostream& os, const ExtReal& x) { return os << to_string(x); }

}  // namespace nucleus
