#pragma once

#include "acp/closed_form.hpp"
#include "acp/complex_matrix.hpp"
#include "acp/determinant.hpp"
#include "acp/eigen.hpp"
#include "acp/error.hpp"
#include "acp/expm.hpp"
#include "acp/haar.hpp"
#include "acp/io.hpp"
#include "acp/pair.hpp"
#include "acp/pauli.hpp"
#include "acp/random.hpp"
