#pragma once

#include "random_inputs.hpp"

namespace test_support {

using Cl = CliffordElement<GaussRational>;
using HPoly = hermitian::HermPoly<GaussRational>;

}  // namespace test_support
