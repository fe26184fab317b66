#pragma once

#include "fracnabla/errors.hpp"
#include "fracnabla/fode.hpp"
#include "fracnabla/frac.hpp"
#include "fracnabla/grid.hpp"
#include "fracnabla/ops.hpp"
#include "fracnabla/quadrature.hpp"
#include "fracnabla/samples.hpp"
#include "fracnabla/scalars.hpp"
#include "fracnabla/specfn.hpp"
