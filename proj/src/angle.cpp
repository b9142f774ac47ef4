#include "parahex/angle.hpp"

#include "parahex/errors.hpp"

#include <cmath>
#include <numeric>
#include <limits>

#include <fmt/format.h>

namespace parahex {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
        throw DomainError("angle arithmetic overflow");
    }
    return static_cast<std::int64_t>(v);
}

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

AngleDeg make_reduced(i128 num, i128 den) {
    if (den == 0) throw DomainError("zero denominator in angle");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    i128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return AngleDeg(narrow(num), narrow(den));
}

}  // namespace

AngleDeg::AngleDeg(std::int64_t num, std::int64_t den) {
    if (den == 0) throw DomainError("zero denominator in angle");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    num_ = num;
    den_ = den;
}

AngleDeg AngleDeg::parse(std::string_view text) {
    auto fail = [&]() -> AngleDeg {
        throw DomainError(fmt::format("malformed angle '{}'", text));
    };
    if (text.empty()) return fail();

    auto parse_int = [&](std::string_view s, bool allow_sign) -> i128 {
        bool neg = false;
        if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) {
            neg = s[0] == '-';
            s.remove_prefix(1);
        }
        if (s.empty() || s.size() > 18) fail();
        i128 v = 0;
        for (char c : s) {
            if (c < '0' || c > '9') fail();
            v = v * 10 + (c - '0');
        }
        return neg ? -v : v;
    };

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        i128 n = parse_int(text.substr(0, slash), true);
        i128 d = parse_int(text.substr(slash + 1), false);
        if (d == 0) fail();
        return make_reduced(n, d);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        if (frac.empty() || frac.size() > 12) fail();
        bool neg = !whole.empty() && whole[0] == '-';
        if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) whole.remove_prefix(1);
        i128 w = whole.empty() ? 0 : parse_int(whole, false);
        i128 f = parse_int(frac, false);
        i128 scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        i128 n = w * scale + f;
        return make_reduced(neg ? -n : n, scale);
    }
    return make_reduced(parse_int(text, true), 1);
}

double AngleDeg::radians() const {
    return static_cast<double>(static_cast<long double>(num_) / den_ * (std::acos(-1.0L) / 180.0L));
}

AngleDeg AngleDeg::normalized() const {
    i128 full = static_cast<i128>(360) * den_;
    i128 r = static_cast<i128>(num_) % full;
    if (r < 0) r += full;
    return make_reduced(r, den_);
}

double AngleDeg::cos() const {
    AngleDeg n = normalized();
    if (n.den_ == 1) {
        switch (n.num_) {
            case 0: return 1.0;
            case 90: return 0.0;
            case 180: return -1.0;
            case 270: return 0.0;
            case 60: return 0.5;
            case 120: return -0.5;
            case 240: return -0.5;
            case 300: return 0.5;
            default: break;
        }
    }
    long double r = static_cast<long double>(n.num_) / n.den_ * (std::acos(-1.0L) / 180.0L);
    return static_cast<double>(std::cos(r));
}

double AngleDeg::sin() const {
    AngleDeg n = normalized();
    if (n.den_ == 1) {
        switch (n.num_) {
            case 0: return 0.0;
            case 90: return 1.0;
            case 180: return 0.0;
            case 270: return -1.0;
            case 30: return 0.5;
            case 150: return 0.5;
            case 210: return -0.5;
            case 330: return -0.5;
            default: break;
        }
    }
    long double r = static_cast<long double>(n.num_) / n.den_ * (std::acos(-1.0L) / 180.0L);
    return static_cast<double>(std::sin(r));
}

std::string AngleDeg::to_string() const {
    return fmt::format("{}/{}", num_, den_);
}

std::string AngleDeg::to_fixed(int places) const {
    i128 scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;
    bool neg = num_ < 0;
    i128 n = neg ? -static_cast<i128>(num_) : static_cast<i128>(num_);
    // half-up: floor((2*n*scale + den) / (2*den))
    i128 q = (2 * n * scale + den_) / (2 * static_cast<i128>(den_));
    std::int64_t whole = narrow(q / scale);
    std::int64_t frac = narrow(q % scale);
    std::string out = neg && q != 0 ? "-" : "";
    out += std::to_string(whole);
    if (places > 0) out += fmt::format(".{:0{}}", frac, places);
    return out;
}

AngleDeg& AngleDeg::operator+=(const AngleDeg& o) {
    *this = make_reduced(static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_,
                         static_cast<i128>(den_) * o.den_);
    return *this;
}

AngleDeg& AngleDeg::operator-=(const AngleDeg& o) {
    *this = make_reduced(static_cast<i128>(num_) * o.den_ - static_cast<i128>(o.num_) * den_,
                         static_cast<i128>(den_) * o.den_);
    return *this;
}

AngleDeg operator*(const AngleDeg& a, std::int64_t k) {
    return make_reduced(static_cast<i128>(a.num_) * k, a.den_);
}

AngleDeg operator/(const AngleDeg& a, std::int64_t k) {
    if (k == 0) throw DomainError("angle divided by zero");
    return make_reduced(a.num_, static_cast<i128>(a.den_) * k);
}

std::strong_ordering operator<=>(const AngleDeg& a, const AngleDeg& b) {
    i128 l = static_cast<i128>(a.num_) * b.den_;
    i128 r = static_cast<i128>(b.num_) * a.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string to_string(const AngleDeg& a) { return a.to_string(); }

AngleDeg turn_fraction(std::int64_t n) {
    if (n < 1) throw DomainError("turn fraction needs n >= 1");
    return AngleDeg(360, n);
}

}  // namespace parahex
