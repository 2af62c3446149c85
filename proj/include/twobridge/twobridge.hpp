#pragma once

#include "twobridge/arith.hpp"
#include "twobridge/combinatorics.hpp"
#include "twobridge/contfrac.hpp"
#include "twobridge/enumerate.hpp"
#include "twobridge/error.hpp"
#include "twobridge/formulas.hpp"
#include "twobridge/identities.hpp"
#include "twobridge/knots.hpp"
