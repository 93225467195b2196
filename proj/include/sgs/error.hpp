#pragma once

#include <stdexcept>
#include <string>

namespace sgs {

// Domain error carrying a stable symbolic name; the CLI prints the name on
// stderr and exits 1.
class SgError : public std::runtime_error {
public:
    SgError(std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)) {}

    const std::string& name() const { return name_; }

private:
    std::string name_;
};

[[noreturn]] inline void raise(const std::string& name, const std::string& what) {
    throw SgError(name, what);
}

}  // namespace sgs
