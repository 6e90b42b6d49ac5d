#pragma once

#include "ar1lt/closed_form.hpp"
#include "ar1lt/error.hpp"
#include "ar1lt/model.hpp"
#include "ar1lt/oracle.hpp"
#include "ar1lt/quadrature.hpp"
#include "ar1lt/spectral.hpp"
