#pragma once

#include <stdexcept>
#include <string>

namespace legode {

/* Domain error carrying a short stable code alongside the human message.
 * The CLI maps these to exit status 1 with the code in the error JSON;
 * library users can dispatch on code() without parsing text. */
class calc_error : public std::runtime_error {
public:
    calc_error(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

} // namespace legode
