#pragma once

#include <limits>

#include "rfso/errors.hpp"

namespace rfso {

// Precision budget shared by series and contour evaluations.
struct Precision {
    double rel_tol = 1e-8;
    double abs_tol = 1e-12;
    int max_contour_nodes = 4096;
    int max_series_terms = 200;

    void validate() const {
        const double eps = std::numeric_limits<double>::epsilon();
        if (rel_tol < 100.0 * eps)
            throw DomainError("Precision: rel_tol below 100*machine epsilon");
        if (abs_tol <= 0.0 || rel_tol <= 0.0)
            throw DomainError("Precision: tolerances must be positive");
        if (max_contour_nodes <= 0 || max_series_terms <= 0)
            throw DomainError("Precision: budgets must be positive");
    }
};

}  // namespace rfso
