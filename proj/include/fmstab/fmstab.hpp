/**
 * @file fmstab.hpp
 * @brief Umbrella header.
 */

#pragma once

#include "cohomology.hpp"
#include "fourier_mukai.hpp"
#include "geometry.hpp"
#include "gieseker.hpp"
#include "hn.hpp"
#include "json_io.hpp"
#include "number.hpp"
#include "polynomial.hpp"
#include "positivity.hpp"
#include "slope.hpp"
#include "verifier.hpp"
