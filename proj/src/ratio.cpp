#include "qcc/ratio.hpp"

#include <cctype>
#include <cstdlib>

namespace qcc {

std::string Ratio::to_decimal() const {
    std::int64_t n = num;
    std::string sign;
    if (n < 0) { sign = "-"; n = -n; }
    // smallest power of ten the denominator divides, at least 10^3
    int digits = 0;
    std::int64_t scale = 1;
    while (scale % den != 0) {
        if (scale > 100'000'000'000'000'000LL)
            return sign + std::to_string(n) + "/" + std::to_string(den);
        scale *= 10;
        ++digits;
    }
    while (digits < 3) { scale *= 10; ++digits; }
    std::int64_t scaled = n * (scale / den);
    std::string frac = std::to_string(scaled % scale);
    frac.insert(frac.begin(), static_cast<std::size_t>(digits) - frac.size(), '0');
    return sign + std::to_string(scaled / scale) + "." + frac;
}

Ratio Ratio::from_decimal(const std::string& text) {
    std::size_t i = 0;
    bool neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        neg = text[i] == '-';
        ++i;
    }
    std::int64_t whole = 0, frac = 0, den = 1;
    bool any = false;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        whole = whole * 10 + (text[i] - '0');
        ++i;
        any = true;
    }
    if (i < text.size() && text[i] == '.') {
        ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            if (den < 1'000'000'000'000'000'000LL / 10) {
                frac = frac * 10 + (text[i] - '0');
                den *= 10;
            }
            ++i;
            any = true;
        }
    }
    if (!any || i != text.size())
        throw std::invalid_argument("bad decimal literal: '" + text + "'");
    Ratio r(whole * den + frac, den);
    if (neg) r.num = -r.num;
    return r;
}

}  // namespace qcc
