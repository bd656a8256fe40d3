#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qscgrn {

// Malformed or unusable input data (parse failures, degenerate data sets).
class data_error : public std::runtime_error {
  public:
    explicit data_error(const std::string& what) : std::runtime_error(what) {}
};

// A distribution whose entire mass sits on the all-zero basis state cannot
// be zeroed and rescaled.
class degenerate_distribution_error : public data_error {
  public:
    explicit degenerate_distribution_error(const std::string& what)
        : data_error(what) {}
};

// NaN or Inf appeared in the loss or gradient during optimization.
class divergence_error : public std::runtime_error {
  public:
    divergence_error(const std::string& what, std::uint64_t iteration)
        : std::runtime_error(what + " (iteration " +
                             std::to_string(iteration) + ")"),
          iteration_(iteration) {}

    std::uint64_t iteration() const { return iteration_; }

  private:
    std::uint64_t iteration_;
};

} // namespace qscgrn
