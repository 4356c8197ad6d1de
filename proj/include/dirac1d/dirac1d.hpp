#pragma once

/// Umbrella header for the dirac1d library.

#include "dirac1d/kinematics.hpp"
#include "dirac1d/step.hpp"
#include "dirac1d/barrier.hpp"
#include "dirac1d/point.hpp"
#include "dirac1d/effmass.hpp"
#include "dirac1d/transfer.hpp"
#include "dirac1d/profile_io.hpp"
#include "dirac1d/scan.hpp"
