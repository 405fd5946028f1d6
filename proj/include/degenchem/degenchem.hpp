#pragma once

// Umbrella header.

#include "degenchem/analysis.hpp"
#include "degenchem/domain.hpp"
#include "degenchem/initial_data.hpp"
#include "degenchem/moment.hpp"
#include "degenchem/moment_config.hpp"
#include "degenchem/profile.hpp"
#include "degenchem/solver.hpp"
#include "degenchem/transform.hpp"
