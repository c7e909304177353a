#pragma once

#include "acp/complex_matrix.hpp"

namespace acp::pauli {

inline ComplexMatrix identity() { return ComplexMatrix::identity(2); }

inline ComplexMatrix sigma1() { return {{0.0, 1.0}, {1.0, 0.0}}; }

inline ComplexMatrix sigma2() { return {{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}}; }

inline ComplexMatrix sigma3() { return {{1.0, 0.0}, {0.0, -1.0}}; }

}  // namespace acp::pauli
