#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace ortholab {

// Every failure mode carries a stable machine-readable code alongside the
// human-readable message; the CLI maps codes onto exit statuses.
class OrthoError : public std::runtime_error {
public:
    OrthoError(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& what) {
    throw OrthoError(code, what);
}

inline void require(bool cond, const std::string& code, const std::string& what) {
    if (!cond) fail(code, what);
}

}  // namespace ortholab
