#pragma once

#include "sesq/decomposition.hpp"
#include "sesq/errors.hpp"
#include "sesq/forms.hpp"
#include "sesq/kernels.hpp"
#include "sesq/numeric.hpp"
#include "sesq/order.hpp"
#include "sesq/radon_nikodym.hpp"
#include "sesq/random.hpp"
