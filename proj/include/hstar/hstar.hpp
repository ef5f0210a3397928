#pragma once

#include "hstar/apolarity.hpp"
#include "hstar/field.hpp"
#include "hstar/matrix.hpp"
#include "hstar/polynomial.hpp"
#include "hstar/power.hpp"
#include "hstar/projective.hpp"
#include "hstar/random.hpp"
#include "hstar/star.hpp"
