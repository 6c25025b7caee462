// Umbrella header.
#ifndef VORTEXLAB_VORTEXLAB_HPP
#define VORTEXLAB_VORTEXLAB_HPP

#include "vortexlab/adiabatic.hpp"
#include "vortexlab/chart.hpp"
#include "vortexlab/config.hpp"
#include "vortexlab/divisor.hpp"
#include "vortexlab/energy.hpp"
#include "vortexlab/evolution.hpp"
#include "vortexlab/field.hpp"
#include "vortexlab/gauge.hpp"
#include "vortexlab/gaugefix.hpp"
#include "vortexlab/geodesic.hpp"
#include "vortexlab/grid.hpp"
#include "vortexlab/io.hpp"
#include "vortexlab/ops.hpp"
#include "vortexlab/runners.hpp"
#include "vortexlab/taubes.hpp"
#include "vortexlab/tmetric.hpp"
#include "vortexlab/version.hpp"
#include "vortexlab/winding.hpp"

#endif
