#pragma once

#include <stdexcept>
#include <string>

namespace ccs {

// Bad user input: out-of-range indices, malformed files, violated preconditions.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured budget (closure size, search nodes, bignum bits) was exhausted.
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Node-count budget shared by the exhaustive searches. A budget of 0 means
// unlimited. Deterministic: the counter advances identically for identical inputs.
class SearchBudget {
  public:
    explicit SearchBudget(std::uint64_t max_nodes = 0) : max_nodes_(max_nodes) {}

    void tick(const char* what) {
        ++used_;
        if (max_nodes_ != 0 && used_ > max_nodes_)
            throw resource_error(std::string(what) + ": search budget exhausted after " +
                                 std::to_string(max_nodes_) + " nodes");
    }

    std::uint64_t used() const { return used_; }

  private:
    std::uint64_t max_nodes_;
    std::uint64_t used_ = 0;
};

}  // namespace ccs
