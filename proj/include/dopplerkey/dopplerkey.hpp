#pragma once

// Umbrella header.

#include "dopplerkey/vec3.hpp"
#include "dopplerkey/errors.hpp"
#include "dopplerkey/rng.hpp"
#include "dopplerkey/stats.hpp"
#include "dopplerkey/geometry.hpp"
#include "dopplerkey/signal.hpp"
#include "dopplerkey/spectrum.hpp"
#include "dopplerkey/analytic.hpp"
#include "dopplerkey/keygen.hpp"
#include "dopplerkey/scenario.hpp"
#include "dopplerkey/harness.hpp"
