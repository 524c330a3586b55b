#pragma once

#include <stdexcept>
#include <string>

namespace genergy {

/// Thrown when an iterative numerical procedure fails to reach its
/// contract (eigensolver budget exhausted, quadrature not converged
/// where convergence is mandatory). Input/usage problems use
/// std::invalid_argument instead.
class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

}
