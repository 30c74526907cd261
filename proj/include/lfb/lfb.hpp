// lfb.hpp -- umbrella include.
#pragma once

#include "lfb/analytic.hpp"
#include "lfb/bounds.hpp"
#include "lfb/dirichlet.hpp"
#include "lfb/dirichlet_oracle.hpp"
#include "lfb/errors.hpp"
#include "lfb/explicit_formula.hpp"
#include "lfb/families.hpp"
#include "lfb/primes.hpp"
#include "lfb/spec.hpp"
#include "lfb/spec_io.hpp"
#include "lfb/special.hpp"
#include "lfb/tensor.hpp"
#include "lfb/zeros.hpp"
