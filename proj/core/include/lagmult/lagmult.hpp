#ifndef LAGMULT_LAGMULT_HPP
#define LAGMULT_LAGMULT_HPP

#include "lagmult/errors.hpp"
#include "lagmult/expansion.hpp"
#include "lagmult/hardy.hpp"
#include "lagmult/lp_norm.hpp"
#include "lagmult/multiplier_norms.hpp"
#include "lagmult/quadrature.hpp"
#include "lagmult/random.hpp"
#include "lagmult/sequences.hpp"
#include "lagmult/special.hpp"
#include "lagmult/spectral.hpp"

#endif
