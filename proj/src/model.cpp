#include "oagraph/model.hpp"

#include <array>
#include <charconv>

namespace oagraph {

std::string_view to_string(ProductKind kind) {
    switch (kind) {
        case ProductKind::Publication: return "publication";
        case ProductKind::Dataset: return "dataset";
        case ProductKind::Software: return "software";
        case ProductKind::Other: return "other";
    }
    return "unknown";
}

namespace {

bool is_leap(int year) {
    return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
}

int days_in_month(int year, int month) {
    static constexpr std::array<int, 12> kDays = {31, 28, 31, 30, 31, 30,
                                                  31, 31, 30, 31, 30, 31};
    if (month < 1 || month > 12) return 0;
    if (month == 2 && is_leap(year)) return 29;
    return kDays[static_cast<std::size_t>(month - 1)];
}

std::optional<int> parse_int_field(std::string_view text) {
    if (text.empty()) return std::nullopt;
    int value = 0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) return std::nullopt;
    return value;
}

}  // namespace

bool Date::valid() const {
    return year >= 1 && month >= 1 && month <= 12 && day >= 1 &&
           day <= days_in_month(year, month);
}

std::optional<Date> Date::parse(std::string_view text) {
    // YYYY / YYYY-MM / YYYY-MM-DD, nothing fancier.
    std::array<std::string_view, 3> parts{};
    std::size_t count = 0;
    while (!text.empty() && count < 3) {
        auto dash = text.find('-');
        parts[count++] = text.substr(0, dash);
        if (dash == std::string_view::npos) {
            text = {};
        } else {
            text = text.substr(dash + 1);
            if (text.empty()) return std::nullopt;  // trailing dash
        }
    }
    if (!text.empty() || count == 0) return std::nullopt;

    if (parts[0].size() != 4) return std::nullopt;
    auto year = parse_int_field(parts[0]);
    if (!year) return std::nullopt;

    Date date{*year, 1, 1};
    if (count >= 2) {
        if (parts[1].size() != 2) return std::nullopt;
        auto month = parse_int_field(parts[1]);
        if (!month) return std::nullopt;
        date.month = *month;
    }
    if (count == 3) {
        if (parts[2].size() != 2) return std::nullopt;
        auto day = parse_int_field(parts[2]);
        if (!day) return std::nullopt;
        date.day = *day;
    }
    if (!date.valid()) return std::nullopt;
    return date;
}

std::string Date::to_string() const {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year, month, day);
    return buf;
}

AccessClass classify_access(const std::optional<AccessRight>& access) {
    if (!access) return AccessClass::Missing;
    const std::string& label = access->label;
    if (label == "OPEN") return AccessClass::Open;
    if (label == "EMBARGO") return AccessClass::Embargo;
    if (label == "CLOSED") return AccessClass::Closed;
    return AccessClass::Other;
}

std::optional<std::string> display_name(const Organization& org) {
    if (org.legal_short_name) return org.legal_short_name;
    if (org.legal_name) return org.legal_name;
    return std::nullopt;
}

}  // namespace oagraph
