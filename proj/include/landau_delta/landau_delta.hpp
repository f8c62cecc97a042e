#pragma once
// Bound states of a charged particle in a delta-function well and a uniform
// magnetic field: spectrum, wave function, probability current, tunnelling.

#include "landau_delta/boundstate.hpp"
#include "landau_delta/errors.hpp"
#include "landau_delta/params.hpp"
#include "landau_delta/quadrature.hpp"
#include "landau_delta/special_functions.hpp"
#include "landau_delta/spectrum2d.hpp"
#include "landau_delta/spectrum3d.hpp"
#include "landau_delta/tunneling.hpp"
