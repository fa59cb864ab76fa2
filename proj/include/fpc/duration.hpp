#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace fpc {

// Non-negative task duration. Internally a decimal-hours scalar; the H:MM:SS
// form is surface syntax only.
class Duration {
  public:
    Duration() = default;
    explicit Duration(double hours);

    // Accepts "H:MM:SS" (whole seconds, minutes/seconds below 60) or a
    // decimal-hours literal with '.' as separator. Whole-second inputs
    // convert exactly (one division by 3600).
    static Duration parse(std::string_view text);

    double hours() const { return hours_; }

    // Renders as H:MM:SS, rounding to the nearest whole second.
    std::string to_hms() const;

    auto operator<=>(const Duration&) const = default;

  private:
    double hours_ = 0.0;
};

}  // namespace fpc
