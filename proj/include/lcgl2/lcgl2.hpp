#pragma once

#include "lcgl2/certificate.hpp"
#include "lcgl2/construct.hpp"
#include "lcgl2/curve_model.hpp"
#include "lcgl2/errors.hpp"
#include "lcgl2/integer.hpp"
#include "lcgl2/padic.hpp"
#include "lcgl2/primality.hpp"
#include "lcgl2/prime_search.hpp"
#include "lcgl2/target_builder.hpp"
#include "lcgl2/tate_series.hpp"
#include "lcgl2/version.hpp"
