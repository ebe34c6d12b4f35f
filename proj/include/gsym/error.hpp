#ifndef GSYM_ERROR_HPP
#define GSYM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace gsym {

// All toolkit errors carry a short machine-readable kind ("DisconnectedBlock",
// "BudgetExceeded", ...) next to the human-readable message.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

} // namespace gsym

#endif
