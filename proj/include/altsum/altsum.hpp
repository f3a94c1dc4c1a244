#pragma once

#include "altsum/asymptotics.hpp"
#include "altsum/bell_series.hpp"
#include "altsum/config.hpp"
#include "altsum/convolution.hpp"
#include "altsum/dirichlet_constants.hpp"
#include "altsum/errors.hpp"
#include "altsum/euler_product.hpp"
#include "altsum/exact_sum.hpp"
#include "altsum/factor_sieve.hpp"
#include "altsum/mult_functions.hpp"
#include "altsum/value.hpp"
#include "altsum/zeta.hpp"
